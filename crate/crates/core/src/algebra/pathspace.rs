//! Bases of the path spaces `e_j (kQ/I) e_i` by exact degreewise reduction.
//!
//! The algebra is first shown to be finite dimensional: we look for a length
//! `N` such that every path of length `N` lies in the span of the products
//! `u·ρ·v` whose terms all have length at most the cutoff. Since that span is
//! contained in `I`, this proves `rad^N ⊆ I`, and then
//! `kQ/I = kQ_{<N} / π(span{u·ρ·v})` where `π` drops terms of length `≥ N`.
//!
//! Columns are ordered longest path first, so pivots land on long paths and
//! the surviving basis consists of the shortest (then lexicographically
//! smallest) representatives.

use std::cmp::Reverse;
use std::collections::HashMap;

use num::rational::BigRational;
use num::{One, Zero};
use serde::Serialize;

use crate::algebra::relation::Presentation;
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::quiver::{Path, Quiver};

/// Environment variable overriding the finite-dimensionality cutoff.
pub const MAX_PATH_LEN_VAR: &str = "QUIVERFORGE_MAX_PATH_LEN";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraOptions {
    /// Longest path length considered; defaults to `|Q₀| · (1 + longest relation term)`.
    pub max_path_len: Option<usize>,
}

impl AlgebraOptions {
    /// Options with the cutoff taken from `QUIVERFORGE_MAX_PATH_LEN` when set.
    pub fn from_env() -> AlgebraOptions {
        AlgebraOptions {
            max_path_len: std::env::var(MAX_PATH_LEN_VAR).ok().and_then(|v| v.trim().parse().ok()),
        }
    }

    pub fn cutoff(&self, p: &Presentation) -> usize {
        self.max_path_len.unwrap_or_else(|| default_cutoff(p))
    }
}

pub fn default_cutoff(p: &Presentation) -> usize {
    let longest = p.relations().iter().map(|r| r.max_len()).max().unwrap_or(0);
    p.quiver().vertex_count().max(1) * (1 + longest)
}

/// A basis of the paths `source -> target` modulo the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathSpaceBasis {
    pub source: String,
    pub target: String,
    pub basis: Vec<Path>,
}

impl PathSpaceBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn path_space(p: &Presentation, i: &str, j: &str) -> Result<PathSpaceBasis> {
    path_space_with(p, i, j, &AlgebraOptions::from_env())
}

pub fn path_space_with(p: &Presentation, i: &str, j: &str, opts: &AlgebraOptions) -> Result<PathSpaceBasis> {
    PathAlgebra::with_options(p, opts)?.space(i, j)
}

pub(crate) type IxPath = Vec<usize>;

/// A relation with paths as arrow-index sequences.
struct IxRelation {
    source: usize,
    target: usize,
    terms: Vec<(BigRational, IxPath)>,
    min_len: usize,
    max_len: usize,
}

fn index_relations(p: &Presentation) -> Vec<IxRelation> {
    let q = p.quiver();
    p.relations()
        .iter()
        .map(|r| IxRelation {
            source: q.vertex_index(r.source()).unwrap(),
            target: q.vertex_index(r.target()).unwrap(),
            terms: r
                .terms()
                .iter()
                .map(|t| {
                    let ix = t.path.arrows().iter().map(|a| q.arrow_index(a).unwrap()).collect();
                    (t.coeff.clone(), ix)
                })
                .collect(),
            min_len: r.min_len(),
            max_len: r.max_len(),
        })
        .collect()
}

/// All paths of length `≤ max_len`, grouped as `[source][target]`, trivial paths included.
pub(crate) fn paths_up_to(q: &Quiver, max_len: usize) -> Vec<Vec<Vec<IxPath>>> {
    let n = q.vertex_count();
    let out = q.out_arrows();
    let mut table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        let mut stack: Vec<(usize, IxPath)> = vec![(i, Vec::new())];
        while let Some((at, path)) = stack.pop() {
            if path.len() < max_len {
                for &a in &out[at] {
                    let mut next = path.clone();
                    next.push(a);
                    stack.push((q.ends(a).1, next));
                }
            }
            table[i][at].push(path);
        }
    }
    table
}

fn concat(parts: &[&[usize]]) -> IxPath {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// Row-reduced span of ideal elements inside one pair `(i, j)`.
struct PairSpace {
    col_ix: HashMap<IxPath, usize>,
    rref: QMatrix,
    pivot_row: HashMap<usize, usize>,
    /// Non-pivot columns in basis order (shortest first, then by arrow ids).
    basis_cols: Vec<usize>,
    basis_pos: HashMap<usize, usize>,
    cols: Vec<IxPath>,
}

fn ids<'q>(q: &'q Quiver, p: &[usize]) -> Vec<&'q str> {
    p.iter().map(|&a| q.arrows()[a].id.as_str()).collect()
}

impl PairSpace {
    fn build(q: &Quiver, mut cols: Vec<IxPath>, rows: &[Vec<(BigRational, IxPath)>]) -> PairSpace {
        cols.sort_by(|a, b| {
            (Reverse(a.len()), Reverse(ids(q, a))).cmp(&(Reverse(b.len()), Reverse(ids(q, b))))
        });
        let col_ix: HashMap<IxPath, usize> = cols.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut m = QMatrix::zeros(rows.len(), cols.len());
        for (r, row) in rows.iter().enumerate() {
            for (c, p) in row {
                m[(r, col_ix[p])] += c;
            }
        }
        let (reduced, pivots) = m.rref();
        let rank = pivots.len();
        let rref = QMatrix::from_rows((0..rank).map(|r| reduced.row(r).to_vec()).collect());
        let pivot_row: HashMap<usize, usize> = pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let mut basis_cols: Vec<usize> = (0..cols.len()).filter(|c| !pivot_row.contains_key(c)).collect();
        basis_cols.sort_by(|&a, &b| (cols[a].len(), ids(q, &cols[a])).cmp(&(cols[b].len(), ids(q, &cols[b]))));
        let basis_pos = basis_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        PairSpace {
            col_ix,
            rref: if rank == 0 { QMatrix::zeros(0, cols.len()) } else { rref },
            pivot_row,
            basis_cols,
            basis_pos,
            cols,
        }
    }

    /// Whether the path lies in the span (some reduced row is its unit vector).
    fn contains_path(&self, p: &[usize]) -> bool {
        let Some(&c) = self.col_ix.get(p) else { return false };
        match self.pivot_row.get(&c) {
            None => false,
            Some(&r) => (0..self.cols.len()).all(|k| k == c || self.rref[(r, k)].is_zero()),
        }
    }

    fn dim(&self) -> usize {
        self.basis_cols.len()
    }

    /// Coordinates of a path in the basis; zero for paths outside the columns.
    fn reduce(&self, p: &[usize]) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dim()];
        let Some(&c) = self.col_ix.get(p) else { return v };
        if let Some(&pos) = self.basis_pos.get(&c) {
            v[pos] = BigRational::one();
        } else {
            let r = self.pivot_row[&c];
            for (pos, &b) in self.basis_cols.iter().enumerate() {
                v[pos] = -self.rref[(r, b)].clone();
            }
        }
        v
    }

    /// Whether a vector (in path coordinates) lies in the span; paths beyond
    /// the columns are treated as zero.
    fn contains_vector(&self, terms: &[(BigRational, IxPath)]) -> bool {
        let mut residual: HashMap<usize, BigRational> = HashMap::new();
        for (c, p) in terms {
            if let Some(&k) = self.col_ix.get(p) {
                *residual.entry(k).or_insert_with(BigRational::zero) += c;
            }
        }
        let mut cols: Vec<usize> = residual.keys().copied().collect();
        cols.sort_unstable();
        for k in cols {
            let coeff = residual[&k].clone();
            if coeff.is_zero() {
                continue;
            }
            let Some(&r) = self.pivot_row.get(&k) else { return false };
            for j in 0..self.cols.len() {
                if !self.rref[(r, j)].is_zero() {
                    let delta = &coeff * &self.rref[(r, j)];
                    *residual.entry(j).or_insert_with(BigRational::zero) -= delta;
                }
            }
        }
        residual.values().all(Zero::is_zero)
    }
}

/// The finite-dimensional algebra `kQ/I` with a chosen path basis.
#[derive(Debug)]
pub struct PathAlgebra {
    presentation: Presentation,
    cutoff: usize,
    nilpotency: usize,
    spaces: Vec<Vec<PairSpace>>,
}

impl std::fmt::Debug for PairSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PairSpace(dim {})", self.dim())
    }
}

/// Ideal generators `u·ρ·v` inside `(i, j)`, keeping terms shorter than `trunc`.
/// With `whole`, only generators all of whose terms are shorter than `trunc`;
/// with `proper`, only those with `u` or `v` nontrivial.
struct GenFilter {
    trunc: usize,
    whole: bool,
    proper: bool,
}

fn generators(
    rels: &[IxRelation],
    paths: &[Vec<Vec<IxPath>>],
    i: usize,
    j: usize,
    filter: GenFilter,
) -> Vec<Vec<(BigRational, IxPath)>> {
    let GenFilter { trunc, whole, proper } = filter;
    let mut rows = Vec::new();
    for r in rels {
        let need = if whole { r.max_len } else { r.min_len };
        for u in &paths[i][r.source] {
            for v in &paths[r.target][j] {
                if u.len() + v.len() + need >= trunc || (proper && u.is_empty() && v.is_empty()) {
                    continue;
                }
                let row: Vec<(BigRational, IxPath)> = r
                    .terms
                    .iter()
                    .filter(|(_, d)| u.len() + d.len() + v.len() < trunc)
                    .map(|(c, d)| (c.clone(), concat(&[u, d, v])))
                    .collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

impl PathAlgebra {
    pub fn new(p: &Presentation) -> Result<PathAlgebra> {
        PathAlgebra::with_options(p, &AlgebraOptions::from_env())
    }

    pub fn with_options(p: &Presentation, opts: &AlgebraOptions) -> Result<PathAlgebra> {
        let cutoff = opts.cutoff(p);
        let nilpotency = find_nilpotency(p, cutoff)?;
        let q = p.quiver();
        let n = q.vertex_count();
        let rels = index_relations(p);
        let paths = paths_up_to(q, nilpotency.saturating_sub(1));
        let spaces = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let rows = generators(&rels, &paths, i, j, GenFilter { trunc: nilpotency, whole: false, proper: false });
                        PairSpace::build(q, paths[i][j].clone(), &rows)
                    })
                    .collect()
            })
            .collect();
        Ok(PathAlgebra {
            presentation: p.clone(),
            cutoff,
            nilpotency,
            spaces,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        self.presentation.quiver()
    }

    /// The length cutoff used for the finiteness test.
    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Least `N` with every path of length `N` in the ideal.
    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency
    }

    pub fn space(&self, i: &str, j: &str) -> Result<PathSpaceBasis> {
        let q = self.quiver();
        let (a, b) = (q.require_vertex(i)?, q.require_vertex(j)?);
        let s = &self.spaces[a][b];
        Ok(PathSpaceBasis {
            source: i.to_string(),
            target: j.to_string(),
            basis: s.basis_cols.iter().map(|&c| q.path_from_indices(a, &s.cols[c])).collect(),
        })
    }

    pub(crate) fn dim_ix(&self, i: usize, j: usize) -> usize {
        self.spaces[i][j].dim()
    }

    pub fn dim(&self, i: &str, j: &str) -> Result<usize> {
        let q = self.quiver();
        Ok(self.dim_ix(q.require_vertex(i)?, q.require_vertex(j)?))
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().flatten().map(PairSpace::dim).sum()
    }

    /// `dim e_j A e_i` for all `i` (rows) and `j` (columns).
    pub fn dimension_table(&self) -> Vec<Vec<usize>> {
        self.spaces.iter().map(|row| row.iter().map(PairSpace::dim).collect()).collect()
    }

    pub(crate) fn reduce_ix(&self, i: usize, j: usize, p: &[usize]) -> Vec<BigRational> {
        self.spaces[i][j].reduce(p)
    }

    /// Basis paths of `(i, j)` as arrow indices.
    pub(crate) fn basis_ix(&self, i: usize, j: usize) -> Vec<IxPath> {
        let s = &self.spaces[i][j];
        s.basis_cols.iter().map(|&c| s.cols[c].clone()).collect()
    }

    /// Coordinates of a path in the basis of its endpoint pair.
    pub fn reduce(&self, p: &Path) -> Result<Vec<BigRational>> {
        let q = self.quiver();
        let i = q.require_vertex(p.source())?;
        let j = q.require_vertex(p.target())?;
        let ix: IxPath = p.arrows().iter().map(|a| q.require_arrow(a)).collect::<Result<_>>()?;
        Ok(self.reduce_ix(i, j, &ix))
    }

    /// Checks that no relation lies in `rad·I + I·rad` or in the span of the
    /// earlier relations with the same endpoints.
    pub fn check_minimal(&self) -> Result<()> {
        let p = &self.presentation;
        let q = p.quiver();
        let rels = index_relations(p);
        // rad^{N+1} ⊆ rad·I, so working modulo it is exact
        let trunc = self.nilpotency + 1;
        let paths = paths_up_to(q, self.nilpotency);
        for (k, r) in rels.iter().enumerate() {
            let (i, j) = (r.source, r.target);
            let mut rows: Vec<Vec<(BigRational, IxPath)>> = generators(&rels, &paths, i, j, GenFilter { trunc, whole: false, proper: true });
            let proper = PairSpace::build(q, paths[i][j].clone(), &rows);
            if proper.contains_vector(&r.terms) {
                return Err(Error::NonMinimalRelation {
                    index: k,
                    reason: "lies in rad·I + I·rad".into(),
                });
            }
            rows.extend(rels[..k].iter().filter(|e| (e.source, e.target) == (i, j)).map(|e| e.terms.clone()));
            let with_earlier = PairSpace::build(q, paths[i][j].clone(), &rows);
            if with_earlier.contains_vector(&r.terms) {
                return Err(Error::NonMinimalRelation {
                    index: k,
                    reason: "redundant with earlier relations".into(),
                });
            }
        }
        Ok(())
    }

    /// Projective dimension of the simple module at `x`, if its minimal
    /// projective resolution stops within `max_steps` syzygies.
    pub fn projective_dimension_of_simple(&self, x: &str, max_steps: usize) -> Result<Option<usize>> {
        let xi = self.quiver().require_vertex(x)?;
        Ok(self.pd_simple(xi, max_steps))
    }

    /// Global dimension as the largest projective dimension of a simple, if
    /// every minimal resolution stops within `max_steps` syzygies.
    pub fn global_dimension(&self, max_steps: usize) -> Option<usize> {
        (0..self.quiver().vertex_count())
            .map(|x| self.pd_simple(x, max_steps))
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    fn pd_simple(&self, x: usize, max_steps: usize) -> Option<usize> {
        // Ω¹(S_x) = rad P_x inside P_x
        let free = Free::new(self, vec![x]);
        let n = self.quiver().vertex_count();
        let mut sub: Vec<Vec<Vec<BigRational>>> = vec![Vec::new(); n];
        for z in 0..n {
            for (pos, b) in self.basis_ix(x, z).iter().enumerate() {
                if !b.is_empty() {
                    let mut v = vec![BigRational::zero(); free.width];
                    v[free.offset[0][z] + pos] = BigRational::one();
                    sub[z].push(v);
                }
            }
        }
        let mut module = (free, sub);
        for k in 1..=max_steps + 1 {
            if module.1.iter().all(Vec::is_empty) {
                return Some(k - 1);
            }
            module = self.syzygy(&module.0, &module.1);
        }
        None
    }

    /// Kernel of a projective cover of the submodule `sub` (vertexwise bases)
    /// of the free module `free`.
    fn syzygy(&self, free: &Free, sub: &[Vec<Vec<BigRational>>]) -> (Free, Vec<Vec<Vec<BigRational>>>) {
        let q = self.quiver();
        let n = q.vertex_count();
        // generators: a complement of sub·rad in sub, vertex by vertex
        let mut gens: Vec<(usize, Vec<BigRational>)> = Vec::new();
        for z in 0..n {
            let mut span: Vec<Vec<BigRational>> = Vec::new();
            for a in 0..q.arrow_count() {
                let (s, t) = q.ends(a);
                if t == z {
                    span.extend(sub[s].iter().map(|m| free.times_arrow(self, m, s, a)));
                }
            }
            let mut rank = rank_of(&span);
            for m in &sub[z] {
                span.push(m.clone());
                let r = rank_of(&span);
                if r > rank {
                    rank = r;
                    gens.push((z, m.clone()));
                } else {
                    span.pop();
                }
            }
        }
        let cover = Free::new(self, gens.iter().map(|(z, _)| *z).collect());
        let mut kernel = vec![Vec::new(); n];
        for w in 0..n {
            // images of the basis paths of the cover ending at w
            let mut images = Vec::new();
            let mut coords = Vec::new();
            for (k, (z, g)) in gens.iter().enumerate() {
                for (pos, b) in self.basis_ix(*z, w).iter().enumerate() {
                    let mut v = g.clone();
                    let mut at = *z;
                    for &a in b {
                        v = free.times_arrow(self, &v, at, a);
                        at = q.ends(a).1;
                    }
                    images.push(v);
                    coords.push(cover.offset[k][w] + pos);
                }
            }
            if images.is_empty() {
                continue;
            }
            for kv in QMatrix::from_rows(images).transpose().kernel() {
                let mut v = vec![BigRational::zero(); cover.width];
                for (c, x) in coords.iter().zip(kv) {
                    v[*c] = x;
                }
                kernel[w].push(v);
            }
        }
        (cover, kernel)
    }
}

fn rank_of(rows: &[Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        0
    } else {
        QMatrix::from_rows(rows.to_vec()).rank()
    }
}

/// A free right module `⊕_k P_{v_k}` with coordinates over the path bases.
struct Free {
    summands: Vec<usize>,
    offset: Vec<Vec<usize>>,
    width: usize,
}

impl Free {
    fn new(alg: &PathAlgebra, summands: Vec<usize>) -> Free {
        let n = alg.quiver().vertex_count();
        let mut offset = Vec::with_capacity(summands.len());
        let mut width = 0;
        for &v in &summands {
            let mut row = Vec::with_capacity(n);
            for z in 0..n {
                row.push(width);
                width += alg.dim_ix(v, z);
            }
            offset.push(row);
        }
        Free { summands, offset, width }
    }

    /// `m·a` for `m` supported at vertex `z = s(a)`.
    fn times_arrow(&self, alg: &PathAlgebra, m: &[BigRational], z: usize, a: usize) -> Vec<BigRational> {
        let w = alg.quiver().ends(a).1;
        let mut out = vec![BigRational::zero(); self.width];
        for (k, &v) in self.summands.iter().enumerate() {
            for (pos, b) in alg.basis_ix(v, z).iter().enumerate() {
                let c = &m[self.offset[k][z] + pos];
                if c.is_zero() {
                    continue;
                }
                let mut ba = b.clone();
                ba.push(a);
                for (j, x) in alg.reduce_ix(v, w, &ba).into_iter().enumerate() {
                    out[self.offset[k][w] + j] += c * x;
                }
            }
        }
        out
    }
}

/// Least `N ≤ cutoff` such that every path of length `N` lies in the span of
/// untruncated generators; tried with growing windows.
fn find_nilpotency(p: &Presentation, cutoff: usize) -> Result<usize> {
    let q = p.quiver();
    let n = q.vertex_count();
    let rels = index_relations(p);
    let longest = rels.iter().map(|r| r.max_len).max().unwrap_or(0);
    let mut window = (longest + 1).min(cutoff).max(1);
    loop {
        let paths = paths_up_to(q, window);
        let spaces: Vec<Vec<PairSpace>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let rows = generators(&rels, &paths, i, j, GenFilter { trunc: window + 1, whole: true, proper: false });
                        PairSpace::build(q, paths[i][j].clone(), &rows)
                    })
                    .collect()
            })
            .collect();
        for len in 0..=window {
            let all_in = (0..n).all(|i| {
                (0..n).all(|j| {
                    paths[i][j]
                        .iter()
                        .filter(|p| p.len() == len)
                        .all(|p| spaces[i][j].contains_path(p))
                })
            });
            if all_in {
                return Ok(len);
            }
        }
        if window >= cutoff {
            return Err(Error::PossiblyInfinite { cutoff });
        }
        window = (window * 2).min(cutoff);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::quiver::make_cycle;

    fn rad2_c3() -> Presentation {
        let c3 = make_cycle(3).unwrap();
        let rels = [["a1", "a2"], ["a2", "a3"], ["a3", "a1"]]
            .iter()
            .map(|ids| Presentation::relation_from_ids(&c3, None, &[(q(1), &ids[..])]).unwrap())
            .collect();
        Presentation::new(c3, rels).unwrap()
    }

    fn square(coeff: i64) -> Presentation {
        let sq = Quiver::new(
            ["1", "2", "3", "4"],
            [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let r = Presentation::relation_from_ids(&sq, None, &[(q(1), &["a", "b"][..]), (q(coeff), &["c", "d"][..])]).unwrap();
        Presentation::new(sq, vec![r]).unwrap()
    }

    #[test]
    fn radical_square_zero_cycle() {
        let a = PathAlgebra::new(&rad2_c3()).unwrap();
        assert_eq!(a.nilpotency_index(), 2);
        assert_eq!(a.dim("1", "2").unwrap(), 1);
        assert_eq!(a.dim("1", "3").unwrap(), 0);
        assert_eq!(a.dim("1", "1").unwrap(), 1);
        assert_eq!(a.total_dim(), 6);
        a.check_minimal().unwrap();
    }

    #[test]
    fn commutative_square() {
        let a = PathAlgebra::new(&square(-1)).unwrap();
        let s = a.space("1", "4").unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis[0].arrows(), ["a", "b"]);
        let cd = a.presentation().quiver().path(&["c", "d"]).unwrap();
        assert_eq!(a.reduce(&cd).unwrap(), vec![q(1)]);
        assert_eq!(a.total_dim(), 9);
        assert_eq!(a.global_dimension(4), Some(2));
    }

    #[test]
    fn free_cycle_is_infinite() {
        let p = Presentation::free(make_cycle(3).unwrap());
        assert!(matches!(PathAlgebra::new(&p), Err(Error::PossiblyInfinite { .. })));
        let opts = AlgebraOptions { max_path_len: Some(7) };
        assert!(matches!(
            PathAlgebra::with_options(&p, &opts),
            Err(Error::PossiblyInfinite { cutoff: 7 })
        ));
    }

    #[test]
    fn redundant_relation_is_flagged() {
        let base = square(-1);
        let mut rels = base.relations().to_vec();
        rels.push(rels[0].normalized());
        let p = Presentation::new(base.quiver().clone(), rels).unwrap();
        let a = PathAlgebra::new(&p).unwrap();
        assert!(matches!(a.check_minimal(), Err(Error::NonMinimalRelation { index: 1, .. })));
    }

    #[test]
    fn non_minimal_long_relation() {
        // a1·a2 = 0 makes a1·a2·a3 a consequence
        let c3 = make_cycle(3).unwrap();
        let r1 = Presentation::relation_from_ids(&c3, None, &[(q(1), &["a1", "a2"][..])]).unwrap();
        let r2 = Presentation::relation_from_ids(&c3, None, &[(q(1), &["a1", "a2", "a3"][..])]).unwrap();
        let r3 = Presentation::relation_from_ids(&c3, None, &[(q(1), &["a2", "a3"][..])]).unwrap();
        let r4 = Presentation::relation_from_ids(&c3, None, &[(q(1), &["a3", "a1"][..])]).unwrap();
        let p = Presentation::new(c3, vec![r1, r2, r3, r4]).unwrap();
        let a = PathAlgebra::new(&p).unwrap();
        assert!(matches!(a.check_minimal(), Err(Error::NonMinimalRelation { index: 1, .. })));
    }
}
