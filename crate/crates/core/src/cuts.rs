//! Admissible cuts of cyclically oriented quivers and their quotients.
//!
//! A cut is a set of arrows lying on chordless cycles that meets every
//! (necessarily oriented) chordless cycle in exactly one arrow. An acyclic
//! quiver has exactly one cut, the empty one.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::algebra::homotopy::first_homology;
use crate::algebra::pathspace::PathAlgebra;
use crate::algebra::relation::Presentation;
use crate::cycles::{decompose_at_arrow, require_cyclically_oriented};
use crate::error::{Error, Result};
use crate::quiver::{Path, Quiver};

/// A validated admissible cut; arrows are listed in the host's arrow order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibleCut {
    arrows: Vec<String>,
    #[serde(skip)]
    host: Quiver,
}

impl AdmissibleCut {
    pub fn new<S: AsRef<str>>(q: &Quiver, arrows: &[S]) -> Result<AdmissibleCut> {
        let cycles = cut_cycles(q)?;
        let mut ix = BTreeSet::new();
        for a in arrows {
            let a = q.require_arrow(a.as_ref())?;
            if !ix.insert(a) {
                return Err(Error::InvalidCut(format!("arrow `{}` listed twice", q.arrows()[a].id)));
            }
        }
        let cyclic: HashSet<usize> = cycles.iter().flatten().copied().collect();
        if let Some(&a) = ix.iter().find(|a| !cyclic.contains(a)) {
            return Err(Error::InvalidCut(format!(
                "arrow `{}` lies on no chordless cycle",
                q.arrows()[a].id
            )));
        }
        for c in &cycles {
            let hits = c.iter().filter(|a| ix.contains(a)).count();
            if hits != 1 {
                let ids: Vec<&str> = c.iter().map(|&a| q.arrows()[a].id.as_str()).collect();
                return Err(Error::InvalidCut(format!(
                    "cycle {} contains {hits} cut arrows",
                    ids.join("·")
                )));
            }
        }
        Ok(AdmissibleCut {
            arrows: ix.into_iter().map(|a| q.arrows()[a].id.clone()).collect(),
            host: q.clone(),
        })
    }

    pub fn arrows(&self) -> &[String] {
        &self.arrows
    }

    pub fn host(&self) -> &Quiver {
        &self.host
    }

    pub fn contains(&self, a: &str) -> bool {
        self.arrows.iter().any(|x| x == a)
    }
}

/// Arrow-index sets of the chordless cycles, which must all be oriented.
fn cut_cycles(q: &Quiver) -> Result<Vec<Vec<usize>>> {
    let cycles = require_cyclically_oriented(q)?;
    Ok(cycles
        .iter()
        .map(|c| c.arrows().iter().map(|a| q.arrow_index(a).unwrap()).collect())
        .collect())
}

/// Every admissible cut, sorted by arrow positions.
pub fn enumerate_admissible_cuts(q: &Quiver) -> Result<Vec<AdmissibleCut>> {
    let cycles = cut_cycles(q)?;
    let m = q.arrow_count();
    let mut on_cycles: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (c, cyc) in cycles.iter().enumerate() {
        for &a in cyc {
            on_cycles[a].push(c);
        }
    }
    let mut state = Search {
        cycles: &cycles,
        on_cycles: &on_cycles,
        chosen: Vec::new(),
        covered: vec![false; cycles.len()],
        excluded: vec![false; m],
        found: Vec::new(),
    };
    state.run();
    let mut found = state.found;
    for f in &mut found {
        f.sort_unstable();
    }
    found.sort();
    Ok(found
        .into_iter()
        .map(|ix| AdmissibleCut {
            arrows: ix.iter().map(|&a| q.arrows()[a].id.clone()).collect(),
            host: q.clone(),
        })
        .collect())
}

struct Search<'a> {
    cycles: &'a [Vec<usize>],
    on_cycles: &'a [Vec<usize>],
    chosen: Vec<usize>,
    covered: Vec<bool>,
    excluded: Vec<bool>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn candidates(&self, c: usize) -> Vec<usize> {
        self.cycles[c]
            .iter()
            .copied()
            .filter(|&a| !self.excluded[a] && self.on_cycles[a].iter().all(|&d| !self.covered[d]))
            .collect()
    }

    fn run(&mut self) {
        // uncovered cycle with the fewest candidates
        let next = (0..self.cycles.len())
            .filter(|&c| !self.covered[c])
            .map(|c| (self.candidates(c), c))
            .min_by_key(|(cands, c)| (cands.len(), *c));
        let Some((cands, _)) = next else {
            self.found.push(self.chosen.clone());
            return;
        };
        let mut newly_excluded = Vec::new();
        for a in cands {
            for &d in &self.on_cycles[a] {
                self.covered[d] = true;
            }
            self.chosen.push(a);
            self.run();
            self.chosen.pop();
            for &d in &self.on_cycles[a] {
                self.covered[d] = false;
            }
            self.excluded[a] = true;
            newly_excluded.push(a);
        }
        for a in newly_excluded {
            self.excluded[a] = false;
        }
    }
}

/// The connected component of `q` containing vertex `v`, as a full subquiver.
fn component_of(q: &Quiver, v: usize) -> Quiver {
    let comp = q
        .component_indices()
        .into_iter()
        .find(|c| c.contains(&v))
        .expect("every vertex has a component");
    let mut mask = vec![false; q.vertex_count()];
    for u in comp {
        mask[u] = true;
    }
    q.restrict(&mask, &vec![true; q.arrow_count()])
}

/// An admissible cut containing `alpha`, built by the decomposition recursion:
/// around the arrow `η` preceding `alpha` on a chordless cycle, cut `alpha`
/// and one arrow of every other path antiparallel to `η`, then recurse into
/// the closures with the remaining arrows of those paths forbidden.
pub fn cut_containing(q: &Quiver, alpha: &str) -> Result<AdmissibleCut> {
    let a = q.require_arrow(alpha)?;
    let cycles = cut_cycles(q)?;
    if !cycles.iter().any(|c| c.contains(&a)) {
        return Err(Error::NotOnOrientedCycle(alpha.to_string()));
    }
    let forbidden = HashSet::new();
    let home = component_of(q, q.ends(a).0);
    let mut cut = forced(&home, alpha, &forbidden)?
        .ok_or_else(|| Error::InvalidCut(format!("no admissible cut through `{alpha}` found")))?;
    for comp in q.component_indices() {
        if comp.contains(&q.ends(a).0) {
            continue;
        }
        let sub = component_of(q, comp[0]);
        cut.extend(any_cut(&sub, &forbidden)?.ok_or_else(|| Error::InvalidCut("component without a cut".into()))?);
    }
    let result = AdmissibleCut::new(q, &cut)?;
    if !result.contains(alpha) {
        return Err(Error::Invariant(format!("cut lost `{alpha}`")));
    }
    Ok(result)
}

/// A cut of the connected quiver `q` containing `alpha` and avoiding `forbidden`.
fn forced(q: &Quiver, alpha: &str, forbidden: &HashSet<String>) -> Result<Option<Vec<String>>> {
    if forbidden.contains(alpha) {
        return Ok(None);
    }
    let cycles = require_cyclically_oriented(q)?;
    let Some(cycle) = cycles.iter().find(|c| c.contains_arrow(alpha)) else {
        let mut rest = match any_cut(q, forbidden)? {
            Some(r) => r,
            None => return Ok(None),
        };
        rest.push(alpha.to_string());
        return Ok(Some(rest));
    };
    let around = cycle.oriented_arrows().expect("cycles are oriented");
    let pos = around.iter().position(|x| x == alpha).unwrap();
    let eta = &around[(pos + around.len() - 1) % around.len()];
    let dec = decompose_at_arrow(q, eta)?;

    let mut cut = Vec::new();
    for (path, closure) in dec.paths.iter().zip(&dec.closures) {
        let candidates: Vec<&String> = if path.iter().any(|x| x == alpha) {
            vec![path.iter().find(|x| *x == alpha).unwrap()]
        } else {
            path.iter().filter(|x| !forbidden.contains(*x)).collect()
        };
        let mut solved = None;
        for c in candidates {
            let mut inner = forbidden.clone();
            inner.extend(path.iter().filter(|x| *x != c).cloned());
            if let Some(sub) = forced(closure, c, &inner)? {
                solved = Some(sub);
                break;
            }
        }
        match solved {
            Some(sub) => cut.extend(sub),
            None => return Ok(None),
        }
    }
    let mut outer = vec![&dec.closure_x];
    if dec.closure_y != dec.closure_x {
        outer.push(&dec.closure_y);
    }
    for sub in outer {
        match any_cut(sub, forbidden)? {
            Some(c) => cut.extend(c),
            None => return Ok(None),
        }
    }
    Ok(Some(cut))
}

/// Some cut of the connected quiver `q` avoiding `forbidden`.
fn any_cut(q: &Quiver, forbidden: &HashSet<String>) -> Result<Option<Vec<String>>> {
    let cycles = require_cyclically_oriented(q)?;
    let Some(first) = cycles.first() else {
        return Ok(Some(Vec::new()));
    };
    for a in first.arrows() {
        if let Some(c) = forced(q, &a, forbidden)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// The quotient of a standard presentation by a cut: cut arrows are deleted,
/// relations tagged by cut arrows survive unchanged and all others vanish.
/// Both facts are checked term by term.
pub fn quotient_by_cut(p: &Presentation, cut: &AdmissibleCut) -> Result<Presentation> {
    let q = p.quiver();
    let cut = AdmissibleCut::new(q, cut.arrows())?;
    let mut kept = Vec::new();
    for (k, r) in p.relations().iter().enumerate() {
        let anti = antiparallel_arrow(q, r.source(), r.target(), r.tag())
            .ok_or_else(|| Error::InvalidCut(format!("relation {k} has no antiparallel arrow")))?;
        let hit: Vec<bool> = r.paths().map(|d| d.arrows().iter().any(|a| cut.contains(a))).collect();
        if cut.contains(&anti) {
            if hit.iter().any(|&h| h) {
                return Err(Error::Invariant(format!(
                    "relation {k} antiparallel to cut arrow `{anti}` has a term through the cut"
                )));
            }
            kept.push(r.clone());
        } else if !hit.iter().all(|&h| h) {
            return Err(Error::Invariant(format!(
                "relation {k} antiparallel to `{anti}` has a term avoiding the cut"
            )));
        }
    }
    Presentation::new(q.delete_arrows(cut.arrows())?, kept)
}

/// The arrow `target -> source` a relation is antiparallel to: its tag when
/// that names such an arrow, else the unique arrow with those endpoints.
pub(crate) fn antiparallel_arrow(q: &Quiver, source: &str, target: &str, tag: Option<&str>) -> Option<String> {
    if let Some(t) = tag.and_then(|t| q.arrow(t)) {
        return (t.from == target && t.to == source).then(|| t.id.clone());
    }
    let mut it = q.arrows().iter().filter(|a| a.from == target && a.to == source);
    let first = it.next()?;
    it.next().is_none().then(|| first.id.clone())
}

/// Syzygy steps computed before the global dimension is reported as unknown.
pub const MAX_SYZYGY_STEPS: usize = 4;

/// Global dimension from minimal resolutions of the simples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GlobalDimension {
    Exactly(usize),
    NotDetermined,
}

impl GlobalDimension {
    pub fn at_most_two(self) -> bool {
        matches!(self, GlobalDimension::Exactly(d) if d <= 2)
    }
}

/// Structural checks on a cut quotient.
#[derive(Clone, Debug, Serialize)]
pub struct CutQuotientReport {
    pub acyclic: bool,
    pub bypass: Option<(String, Path)>,
    /// H₁ vanishes on every connected convex full subquiver.
    pub simply_connected: bool,
    pub h1_failures: Vec<Vec<String>>,
    pub global_dimension: GlobalDimension,
}

impl CutQuotientReport {
    pub fn passed(&self) -> bool {
        self.acyclic
            && self.bypass.is_none()
            && self.simply_connected
            && self.global_dimension.at_most_two()
    }
}

pub fn verify_cut_quotient(a: &Presentation) -> CutQuotientReport {
    let q = a.quiver();
    let h1_failures = if q.is_acyclic() {
        convex_h1_failures(a)
    } else {
        vec![q.vertices().to_vec()]
    };
    let global_dimension = match PathAlgebra::new(a).map(|alg| alg.global_dimension(MAX_SYZYGY_STEPS)) {
        Ok(Some(d)) => GlobalDimension::Exactly(d),
        _ => GlobalDimension::NotDetermined,
    };
    CutQuotientReport {
        acyclic: q.is_acyclic(),
        bypass: q.find_bypass(),
        simply_connected: h1_failures.is_empty(),
        h1_failures,
        global_dimension,
    }
}

/// Vertex sets of connected convex full subquivers with nontrivial H₁.
pub fn convex_h1_failures(a: &Presentation) -> Vec<Vec<String>> {
    let q = a.quiver();
    let n = q.vertex_count();
    assert!(n < 24, "subset enumeration is for small quivers");
    let mut failures = Vec::new();
    for mask in 1u32..(1 << n) {
        let members: Vec<&String> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &q.vertices()[i]).collect();
        if !q.is_convex(&members).unwrap_or(false) {
            continue;
        }
        let sub = restrict_presentation(a, &members);
        if !sub.quiver().is_connected() {
            continue;
        }
        match first_homology(&sub) {
            Ok(h) if h.is_trivial() => {}
            _ => failures.push(members.into_iter().cloned().collect()),
        }
    }
    failures
}

/// Full subquiver on `vertices` with the relations whose paths all stay inside.
pub fn restrict_presentation<S: AsRef<str>>(a: &Presentation, vertices: &[S]) -> Presentation {
    let sub = a.quiver().full_subquiver(vertices).expect("vertices of the quiver");
    let rels = a
        .relations()
        .iter()
        .filter(|r| r.paths().all(|p| p.arrows().iter().all(|x| sub.arrow(x).is_some())))
        .cloned()
        .collect();
    Presentation::new(sub, rels).expect("restriction keeps valid paths")
}
