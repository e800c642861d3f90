//! Homotopy of parallel paths in a bound quiver and the first homology group.

use std::collections::{HashMap, VecDeque};

use num::bigint::BigInt;
use num::One;
use serde::{Serialize, Serializer};

use crate::algebra::pathspace::paths_up_to;
use crate::algebra::relation::Presentation;
use crate::error::{Error, Result};
use crate::linalg::smith_invariants;
use crate::quiver::Path;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut a = a;
        while self.0[a] != r {
            let next = self.0[a];
            self.0[a] = r;
            a = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Homotopy classes of the paths `x -> y` of length at most `max_len`.
///
/// Two paths are identified when they are `u·δ·v` and `u·δ'·v` for terms
/// `δ, δ'` of one relation and a common context `u, v`; the classes are the
/// equivalence closure of these pairs. Classes are listed by their shortest
/// member, and members by length, then arrow ids.
pub fn homotopy_classes(p: &Presentation, x: &str, y: &str, max_len: usize) -> Result<Vec<Vec<Path>>> {
    let q = p.quiver();
    let (xi, yi) = (q.require_vertex(x)?, q.require_vertex(y)?);
    let table = paths_up_to(q, max_len);
    let members = &table[xi][yi];
    let index: HashMap<&Vec<usize>, usize> = members.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut uf = UnionFind((0..members.len()).collect());

    for r in p.relations() {
        let s = q.vertex_index(r.source()).unwrap();
        let t = q.vertex_index(r.target()).unwrap();
        let terms: Vec<Vec<usize>> = r
            .paths()
            .map(|d| d.arrows().iter().map(|a| q.arrow_index(a).unwrap()).collect())
            .collect();
        for u in &table[xi][s] {
            for v in &table[t][yi] {
                let inside: Vec<usize> = terms
                    .iter()
                    .filter(|d| u.len() + d.len() + v.len() <= max_len)
                    .map(|d| {
                        let full: Vec<usize> = u.iter().chain(d.iter()).chain(v.iter()).copied().collect();
                        index[&full]
                    })
                    .collect();
                for w in inside.windows(2) {
                    uf.union(w[0], w[1]);
                }
            }
        }
    }

    let mut paths: Vec<(usize, Path)> = members
        .iter()
        .enumerate()
        .map(|(i, m)| (i, q.path_from_indices(xi, m)))
        .collect();
    paths.sort_by(|a, b| (a.1.len(), a.1.arrows()).cmp(&(b.1.len(), b.1.arrows())));
    let mut classes: Vec<Vec<Path>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for (i, path) in paths {
        let root = uf.find(i);
        let k = *slot.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[k].push(path);
    }
    Ok(classes)
}

/// `H₁` of the bound quiver as `ℤ^rank ⊕ ⊕ ℤ/d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FirstHomology {
    pub rank: usize,
    #[serde(serialize_with = "as_strings")]
    pub torsion: Vec<BigInt>,
}

fn as_strings<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl FirstHomology {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Abelianised fundamental group: the cycle space of the underlying graph
/// (one generator per arrow outside a spanning tree) modulo `[u] - [v]` for
/// every pair of homotopic parallel paths.
pub fn first_homology(p: &Presentation) -> Result<FirstHomology> {
    let q = p.quiver();
    if !q.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = q.vertex_count();
    let mut in_tree = vec![false; q.arrow_count()];
    let mut seen = vec![false; n];
    if n > 0 {
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for a in 0..q.arrow_count() {
                let (s, t) = q.ends(a);
                let w = if s == u { t } else if t == u { s } else { continue };
                if !seen[w] {
                    seen[w] = true;
                    in_tree[a] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let column: HashMap<String, usize> = q
        .arrows()
        .iter()
        .enumerate()
        .filter(|(a, _)| !in_tree[*a])
        .enumerate()
        .map(|(c, (_, arrow))| (arrow.id.clone(), c))
        .collect();
    let cols = column.len();
    let project = |path: &Path| -> Vec<BigInt> {
        let mut v = vec![BigInt::from(0); cols];
        for a in path.arrows() {
            if let Some(&c) = column.get(a) {
                v[c] += BigInt::one();
            }
        }
        v
    };

    let longest = p.relations().iter().map(|r| r.max_len()).max().unwrap_or(0);
    let mut rows = Vec::new();
    if longest > 0 {
        for x in q.vertices() {
            for y in q.vertices() {
                for class in homotopy_classes(p, x, y, longest)? {
                    for w in class.windows(2) {
                        let (a, b) = (project(&w[0]), project(&w[1]));
                        rows.push(a.iter().zip(&b).map(|(i, j)| i - j).collect());
                    }
                }
            }
        }
    }
    let inv = if cols == 0 || rows.is_empty() { Vec::new() } else { smith_invariants(&rows) };
    Ok(FirstHomology {
        rank: cols - inv.len(),
        torsion: inv.into_iter().filter(|d| !d.is_one()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::quiver::{make_cycle, Quiver};

    fn square(relations: bool) -> Presentation {
        let sq = Quiver::new(
            ["1", "2", "3", "4"],
            [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let rels = if relations {
            vec![Presentation::relation_from_ids(&sq, None, &[(q(1), &["a", "b"][..]), (q(-1), &["c", "d"][..])]).unwrap()]
        } else {
            Vec::new()
        };
        Presentation::new(sq, rels).unwrap()
    }

    #[test]
    fn square_classes() {
        assert_eq!(homotopy_classes(&square(true), "1", "4", 4).unwrap().len(), 1);
        assert_eq!(homotopy_classes(&square(false), "1", "4", 4).unwrap().len(), 2);
    }

    #[test]
    fn homology() {
        assert!(first_homology(&square(true)).unwrap().is_trivial());
        let free_square = first_homology(&square(false)).unwrap();
        assert_eq!((free_square.rank, free_square.torsion.len()), (1, 0));
        let c4 = first_homology(&Presentation::free(make_cycle(4).unwrap())).unwrap();
        assert_eq!(c4.rank, 1);
        let tree = Quiver::new(["1", "2", "3"], [("a", "1", "2"), ("b", "3", "2")]).unwrap();
        assert!(first_homology(&Presentation::free(tree)).unwrap().is_trivial());
    }
}
