//! Chordless cycles, cyclic orientation, antiparallel shortest paths and the
//! decomposition of a cyclically oriented quiver around one arrow.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{Path, Quiver};

/// Direction in which a walk traverses an arrow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "i8")]
pub enum Sign {
    Forward,
    Backward,
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Forward => 1,
            Sign::Backward => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Step {
    pub arrow: String,
    pub sign: Sign,
}

/// A walk `x_0 - x_1 - ... - x_p`; each step names the arrow joining
/// consecutive vertices and whether it is traversed along its direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Walk {
    pub start: String,
    pub steps: Vec<Step>,
}

impl Walk {
    /// Checks incidence of consecutive steps and returns the visited vertices.
    pub fn vertices(&self, q: &Quiver) -> Result<Vec<String>> {
        let mut at = self.start.clone();
        let mut out = vec![at.clone()];
        for step in &self.steps {
            let arrow = q
                .arrow(&step.arrow)
                .ok_or_else(|| Error::UnknownArrow(step.arrow.clone()))?;
            let (enter, exit) = match step.sign {
                Sign::Forward => (&arrow.from, &arrow.to),
                Sign::Backward => (&arrow.to, &arrow.from),
            };
            if *enter != at {
                return Err(Error::Malformed(format!(
                    "step over `{}` does not start at `{at}`",
                    step.arrow
                )));
            }
            at = exit.clone();
            out.push(at.clone());
        }
        Ok(out)
    }

    /// A walk whose steps all go forward is a path.
    pub fn is_path(&self) -> bool {
        self.steps.iter().all(|s| s.sign == Sign::Forward)
    }
}

/// A non-intersecting cycle stored in canonical form: the rotation starting at
/// the vertex of smallest index, traversed towards the smaller of its two
/// neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cycle {
    vertices: Vec<String>,
    walk: Walk,
    oriented: bool,
    chordless: bool,
}

impl Cycle {
    /// Builds the cycle through `seq` (vertex indices, canonical order) in a
    /// quiver without multiple arrows.
    pub(crate) fn from_vertex_sequence(q: &Quiver, seq: &[usize]) -> Cycle {
        let p = seq.len();
        let mut steps = Vec::with_capacity(p);
        for i in 0..p {
            let (u, v) = (seq[i], seq[(i + 1) % p]);
            let a = q
                .edge_between(u, v)
                .expect("consecutive cycle vertices are joined by one arrow");
            let sign = if q.ends(a).0 == u {
                Sign::Forward
            } else {
                Sign::Backward
            };
            steps.push(Step {
                arrow: q.arrows()[a].id.clone(),
                sign,
            });
        }
        let oriented = steps.iter().all(|s| s.sign == steps[0].sign);
        let on_cycle: HashSet<&str> = steps.iter().map(|s| s.arrow.as_str()).collect();
        let chordless = q.arrows().iter().enumerate().all(|(a, arrow)| {
            let (s, t) = q.ends(a);
            on_cycle.contains(arrow.id.as_str()) || !(seq.contains(&s) && seq.contains(&t))
        });
        Cycle {
            vertices: seq.iter().map(|&i| q.vertices()[i].clone()).collect(),
            walk: Walk {
                start: q.vertices()[seq[0]].clone(),
                steps,
            },
            oriented,
            chordless,
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn walk(&self) -> &Walk {
        &self.walk
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_oriented(&self) -> bool {
        self.oriented
    }

    pub fn is_chordless(&self) -> bool {
        self.chordless
    }

    pub fn arrows(&self) -> Vec<String> {
        self.walk.steps.iter().map(|s| s.arrow.clone()).collect()
    }

    pub fn contains_arrow(&self, a: &str) -> bool {
        self.walk.steps.iter().any(|s| s.arrow == a)
    }

    /// Arrows in the order of the cycle's orientation, for oriented cycles.
    pub fn oriented_arrows(&self) -> Option<Vec<String>> {
        if !self.oriented {
            return None;
        }
        let mut arrows = self.arrows();
        if self.walk.steps[0].sign == Sign::Backward {
            arrows.reverse();
        }
        Some(arrows)
    }
}

/// Canonical vertex sequences of all chordless cycles of the underlying
/// simple graph. Paths grow from their smallest vertex through larger
/// vertices only; chords are rejected as soon as they appear.
pub(crate) fn chordless_vertex_cycles(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.vertex_count();
    let adj = q.underlying_adjacency();
    let mut found = Vec::new();
    let mut path = Vec::with_capacity(n);
    for anchor in 0..n {
        path.clear();
        path.push(anchor);
        grow(&adj, anchor, &mut path, &mut found);
    }
    found
}

fn grow(adj: &[Vec<bool>], anchor: usize, path: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    for w in anchor + 1..adj.len() {
        if !adj[last][w] || path.contains(&w) {
            continue;
        }
        // interior vertices other than the current end must not see w
        if path.len() > 2 && path[1..path.len() - 1].iter().any(|&v| adj[v][w]) {
            continue;
        }
        if path.len() >= 2 && adj[anchor][w] {
            if path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                found.push(cycle);
            }
            continue;
        }
        path.push(w);
        grow(adj, anchor, path, found);
        path.pop();
    }
}

/// All chordless cycles of a quiver without loops, 2-cycles and multiple
/// arrows, each once in canonical form.
pub fn enumerate_chordless_cycles(q: &Quiver) -> Result<Vec<Cycle>> {
    q.validate().require_simple()?;
    Ok(chordless_vertex_cycles(q)
        .iter()
        .map(|seq| Cycle::from_vertex_sequence(q, seq))
        .collect())
}

/// Answer of [`is_cyclically_oriented`] with a witness on failure.
#[derive(Clone, Debug, Serialize)]
pub struct OrientationCheck {
    pub cyclically_oriented: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Cycle>,
}

/// Whether every chordless cycle is oriented.
pub fn is_cyclically_oriented(q: &Quiver) -> Result<OrientationCheck> {
    let witness = enumerate_chordless_cycles(q)?
        .into_iter()
        .find(|c| !c.is_oriented());
    Ok(OrientationCheck {
        cyclically_oriented: witness.is_none(),
        witness,
    })
}

/// Chordless cycles of a quiver that must be cyclically oriented.
pub(crate) fn require_cyclically_oriented(q: &Quiver) -> Result<Vec<Cycle>> {
    let cycles = enumerate_chordless_cycles(q)?;
    if let Some(bad) = cycles.iter().find(|c| !c.is_oriented()) {
        return Err(Error::NotCyclicallyOriented {
            witness: bad.vertices().to_vec(),
        });
    }
    Ok(cycles)
}

/// Arrow-index sequences of all paths `δ` with `ηδ` a chordless cycle,
/// sorted by arrow ids. Assumes a simple quiver.
pub(crate) fn antiparallel_indices(q: &Quiver, eta: usize) -> Vec<Vec<usize>> {
    let (y, x) = q.ends(eta);
    if x == y {
        return Vec::new();
    }
    let adj = q.underlying_adjacency();
    let out = q.out_arrows();
    let mut found = Vec::new();
    let mut verts = vec![x];
    let mut arrows = Vec::new();
    search(q, &adj, &out, y, &mut verts, &mut arrows, &mut found);
    found.sort_by(|a: &Vec<usize>, b: &Vec<usize>| {
        let ka: Vec<&str> = a.iter().map(|&i| q.arrows()[i].id.as_str()).collect();
        let kb: Vec<&str> = b.iter().map(|&i| q.arrows()[i].id.as_str()).collect();
        ka.cmp(&kb)
    });
    found
}

fn search(
    q: &Quiver,
    adj: &[Vec<bool>],
    out: &[Vec<usize>],
    y: usize,
    verts: &mut Vec<usize>,
    arrows: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    let last = *verts.last().unwrap();
    let earlier: Vec<usize> = verts[..verts.len() - 1].to_vec();
    for &a in &out[last] {
        let w = q.ends(a).1;
        if w == y {
            // y may only touch x (through eta) and the current end
            if verts.len() >= 2 && earlier[1..].iter().all(|&v| !adj[v][y]) {
                let mut p = arrows.clone();
                p.push(a);
                found.push(p);
            }
            continue;
        }
        if verts.contains(&w) || earlier.iter().any(|&v| adj[v][w]) {
            continue;
        }
        verts.push(w);
        arrows.push(a);
        search(q, adj, out, y, verts, arrows, found);
        verts.pop();
        arrows.pop();
    }
}

/// All shortest paths antiparallel to `eta`: the paths `δ` for which `ηδ` is a
/// chordless oriented cycle. Empty iff `eta` lies on no oriented cycle.
///
/// Distinct paths share only their endpoints; this is checked.
pub fn antiparallel_shortest_paths(q: &Quiver, eta: &str) -> Result<Vec<Path>> {
    let e = q.require_arrow(eta)?;
    require_cyclically_oriented(q)?;
    let found = antiparallel_indices(q, e);
    check_internally_disjoint(q, &found)?;
    let x = q.ends(e).1;
    Ok(found.iter().map(|p| q.path_from_indices(x, p)).collect())
}

fn check_internally_disjoint(q: &Quiver, paths: &[Vec<usize>]) -> Result<()> {
    let interiors: Vec<HashSet<usize>> = paths
        .iter()
        .map(|p| p[..p.len() - 1].iter().map(|&a| q.ends(a).1).collect())
        .collect();
    for i in 0..interiors.len() {
        for j in i + 1..interiors.len() {
            if !interiors[i].is_disjoint(&interiors[j]) {
                return Err(Error::Invariant(format!(
                    "antiparallel paths {i} and {j} share an interior vertex"
                )));
            }
        }
    }
    Ok(())
}

/// The structure of a connected cyclically oriented quiver around an arrow
/// `eta: y -> x` lying on an oriented cycle.
///
/// `components[i]` is the connected component of `Q \ {x, y}` met by the
/// interior of `paths[i]`; `closures[i]` is the full subquiver on that
/// component plus `x` and `y`, without `eta`. `closure_x` and `closure_y` are
/// the components of `x` and `y` after deleting every `components[i]` and the
/// arrow `eta`; they may coincide.
#[derive(Clone, Debug, Serialize)]
pub struct ArrowDecomposition {
    pub eta: String,
    pub x: String,
    pub y: String,
    pub paths: Vec<Vec<String>>,
    pub components: Vec<Vec<String>>,
    pub closures: Vec<Quiver>,
    pub closure_x: Quiver,
    pub closure_y: Quiver,
}

impl ArrowDecomposition {
    /// All closures; `closure_y` is omitted when it equals `closure_x`.
    pub fn all_closures(&self) -> Vec<&Quiver> {
        let mut out = vec![&self.closure_x];
        if self.closure_y != self.closure_x {
            out.push(&self.closure_y);
        }
        out.extend(self.closures.iter());
        out
    }
}

pub fn decompose_at_arrow(q: &Quiver, eta: &str) -> Result<ArrowDecomposition> {
    let e = q.require_arrow(eta)?;
    if !q.is_connected() {
        return Err(Error::Disconnected);
    }
    let cycles = require_cyclically_oriented(q)?;
    decompose_indices(q, e, &cycles)
}

pub(crate) fn decompose_indices(q: &Quiver, e: usize, cycles: &[Cycle]) -> Result<ArrowDecomposition> {
    let n = q.vertex_count();
    let (y, x) = q.ends(e);
    let eta = q.arrows()[e].id.clone();
    let paths = antiparallel_indices(q, e);
    if paths.is_empty() {
        return Err(Error::NotOnOrientedCycle(eta));
    }
    check_internally_disjoint(q, &paths)?;
    let adj = q.underlying_adjacency();

    // components of Q' = Q \ {x, y}
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if s == x || s == y || comp_of[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        comp_of[s] = id;
        let mut stack = vec![s];
        let mut members = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if adj[u][v] && v != x && v != y && comp_of[v] == usize::MAX {
                    comp_of[v] = id;
                    stack.push(v);
                    members.push(v);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }

    let mut gamma_ids = Vec::with_capacity(paths.len());
    for p in &paths {
        let inner = q.ends(p[0]).1;
        let id = comp_of[inner];
        if gamma_ids.contains(&id) {
            return Err(Error::Invariant(format!(
                "two antiparallel paths of `{eta}` meet the same component of Q \\ {{x, y}}"
            )));
        }
        gamma_ids.push(id);
    }

    let mut keep_arrow = vec![true; q.arrow_count()];
    keep_arrow[e] = false;

    let mut in_gamma = vec![false; n];
    for &id in &gamma_ids {
        for &v in &comps[id] {
            in_gamma[v] = true;
        }
    }
    let outside: Vec<bool> = in_gamma.iter().map(|g| !g).collect();
    let double_prime = q.restrict(&outside, &keep_arrow);
    let component_of = |v: usize| -> Vec<bool> {
        let name = &q.vertices()[v];
        let comp = double_prime
            .connected_components()
            .into_iter()
            .find(|c| c.contains(name))
            .expect("x and y survive in Q''");
        let mut mask = vec![false; n];
        for c in comp {
            mask[q.vertex_index(&c).unwrap()] = true;
        }
        mask
    };
    let closure_x = q.restrict(&component_of(x), &keep_arrow);
    let closure_y = q.restrict(&component_of(y), &keep_arrow);

    let closures: Vec<Quiver> = gamma_ids
        .iter()
        .map(|&id| {
            let mut mask = vec![false; n];
            for &v in &comps[id] {
                mask[v] = true;
            }
            mask[x] = true;
            mask[y] = true;
            q.restrict(&mask, &keep_arrow)
        })
        .collect();

    let decomposition = ArrowDecomposition {
        eta: eta.clone(),
        x: q.vertices()[x].clone(),
        y: q.vertices()[y].clone(),
        paths: paths
            .iter()
            .map(|p| p.iter().map(|&a| q.arrows()[a].id.clone()).collect())
            .collect(),
        components: gamma_ids
            .iter()
            .map(|&id| comps[id].iter().map(|&v| q.vertices()[v].clone()).collect())
            .collect(),
        closures,
        closure_x,
        closure_y,
    };

    // every other chordless cycle lies inside one closure
    for c in cycles {
        if c.contains_arrow(&eta) {
            continue;
        }
        let inside = decomposition
            .all_closures()
            .into_iter()
            .any(|sub| c.arrows().iter().all(|a| sub.arrow(a).is_some()));
        if !inside {
            return Err(Error::Invariant(format!(
                "chordless cycle through {} is not contained in a closure around `{eta}`",
                c.vertices().join(", ")
            )));
        }
    }
    Ok(decomposition)
}
