//! Finite quivers: vertices, arrows, paths, validation and subquiver surgery.
//!
//! Vertices and arrows are identified by nonempty strings. Iteration order is
//! insertion order everywhere, and every algorithm in the crate that needs a
//! tie-break uses that order.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A directed arrow `from -> to` with a unique id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub id: String,
    pub from: String,
    pub to: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverDoc {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// A finite quiver, possibly with multiple arrows, loops and 2-cycles.
///
/// Predicates about cyclically oriented quivers reject loops, 2-cycles and
/// multiple arrows up front; mutation accepts multiple arrows.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "QuiverDoc", into = "QuiverDoc")]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_ix: HashMap<String, usize>,
    arrow_ix: HashMap<String, usize>,
    ends: Vec<(usize, usize)>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl TryFrom<QuiverDoc> for Quiver {
    type Error = Error;

    fn try_from(doc: QuiverDoc) -> Result<Self> {
        Quiver::new(
            doc.vertices,
            doc.arrows.into_iter().map(|a| (a.id, a.from, a.to)),
        )
    }
}

impl From<Quiver> for QuiverDoc {
    fn from(q: Quiver) -> Self {
        QuiverDoc {
            vertices: q.vertices,
            arrows: q.arrows,
        }
    }
}

impl Quiver {
    pub fn new<V, S, A, I, F, T>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        A: IntoIterator<Item = (I, F, T)>,
        I: Into<String>,
        F: Into<String>,
        T: Into<String>,
    {
        let mut q = Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
            vertex_ix: HashMap::new(),
            arrow_ix: HashMap::new(),
            ends: Vec::new(),
        };
        for v in vertices {
            let v = v.into();
            if v.is_empty() {
                return Err(Error::Malformed("empty vertex id".into()));
            }
            if q.vertex_ix.contains_key(&v) {
                return Err(Error::Malformed(format!("duplicate vertex `{v}`")));
            }
            q.vertex_ix.insert(v.clone(), q.vertices.len());
            q.vertices.push(v);
        }
        for (id, from, to) in arrows {
            q.push_arrow(id.into(), from.into(), to.into())?;
        }
        Ok(q)
    }

    fn push_arrow(&mut self, id: String, from: String, to: String) -> Result<()> {
        if id.is_empty() {
            return Err(Error::Malformed("empty arrow id".into()));
        }
        if self.arrow_ix.contains_key(&id) {
            return Err(Error::Malformed(format!("duplicate arrow `{id}`")));
        }
        let s = *self
            .vertex_ix
            .get(&from)
            .ok_or_else(|| Error::Malformed(format!("arrow `{id}` starts at undeclared `{from}`")))?;
        let t = *self
            .vertex_ix
            .get(&to)
            .ok_or_else(|| Error::Malformed(format!("arrow `{id}` ends at undeclared `{to}`")))?;
        self.arrow_ix.insert(id.clone(), self.arrows.len());
        self.ends.push((s, t));
        self.arrows.push(Arrow { id, from, to });
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, v: &str) -> Option<usize> {
        self.vertex_ix.get(v).copied()
    }

    pub fn arrow_index(&self, a: &str) -> Option<usize> {
        self.arrow_ix.get(a).copied()
    }

    pub fn arrow(&self, a: &str) -> Option<&Arrow> {
        self.arrow_index(a).map(|i| &self.arrows[i])
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertex_ix.contains_key(v)
    }

    pub(crate) fn require_vertex(&self, v: &str) -> Result<usize> {
        self.vertex_index(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub(crate) fn require_arrow(&self, a: &str) -> Result<usize> {
        self.arrow_index(a)
            .ok_or_else(|| Error::UnknownArrow(a.to_string()))
    }

    /// Source and target indices of arrow `a`.
    pub(crate) fn ends(&self, a: usize) -> (usize, usize) {
        self.ends[a]
    }

    /// Number of arrows `from -> to`.
    pub fn multiplicity(&self, from: &str, to: &str) -> usize {
        match (self.vertex_index(from), self.vertex_index(to)) {
            (Some(s), Some(t)) => self.ends.iter().filter(|&&e| e == (s, t)).count(),
            _ => 0,
        }
    }

    /// Arrow indices grouped by source vertex.
    pub(crate) fn out_arrows(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for (a, &(s, _)) in self.ends.iter().enumerate() {
            out[s].push(a);
        }
        out
    }

    /// Symmetric adjacency of the underlying graph, ignoring loops.
    pub(crate) fn underlying_adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut adj = vec![vec![false; n]; n];
        for &(s, t) in &self.ends {
            if s != t {
                adj[s][t] = true;
                adj[t][s] = true;
            }
        }
        adj
    }

    /// The arrow between two vertices in either direction, if there is exactly one.
    pub(crate) fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let mut found = None;
        for (a, &(s, t)) in self.ends.iter().enumerate() {
            if (s, t) == (u, v) || (s, t) == (v, u) {
                if found.is_some() {
                    return None;
                }
                found = Some(a);
            }
        }
        found
    }

    /// Reports loops, 2-cycles and multiple arrows.
    pub fn validate(&self) -> ValidationReport {
        let n = self.vertices.len();
        let mut count = vec![vec![0usize; n]; n];
        let mut loops = Vec::new();
        for (a, &(s, t)) in self.ends.iter().enumerate() {
            if s == t {
                loops.push(self.arrows[a].id.clone());
            } else {
                count[s][t] += 1;
            }
        }
        let mut two_cycles = Vec::new();
        let mut multiple_arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i < j && count[i][j] > 0 && count[j][i] > 0 {
                    two_cycles.push((self.vertices[i].clone(), self.vertices[j].clone()));
                }
                if count[i][j] > 1 {
                    multiple_arrows.push((
                        self.vertices[i].clone(),
                        self.vertices[j].clone(),
                        count[i][j],
                    ));
                }
            }
        }
        ValidationReport {
            loops,
            two_cycles,
            multiple_arrows,
        }
    }

    /// Vertex sets of the connected components of the underlying graph.
    pub fn connected_components(&self) -> Vec<Vec<String>> {
        self.component_indices()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.vertices[i].clone()).collect())
            .collect()
    }

    pub(crate) fn component_indices(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let adj = self.underlying_adjacency();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if adj[u][v] && !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.component_indices().len() <= 1
    }

    /// Full subquiver on the named vertices, keeping this quiver's order.
    pub fn full_subquiver<S: AsRef<str>>(&self, vertices: &[S]) -> Result<Quiver> {
        let keep = self.vertex_mask(vertices)?;
        Ok(self.restrict(&keep, &vec![true; self.arrows.len()]))
    }

    /// Removes the named arrows, keeping every vertex.
    pub fn delete_arrows<S: AsRef<str>>(&self, arrows: &[S]) -> Result<Quiver> {
        let mut keep_arrow = vec![true; self.arrows.len()];
        for a in arrows {
            keep_arrow[self.require_arrow(a.as_ref())?] = false;
        }
        Ok(self.restrict(&vec![true; self.vertices.len()], &keep_arrow))
    }

    /// Removes the named vertices together with every incident arrow.
    pub fn kill_vertices<S: AsRef<str>>(&self, vertices: &[S]) -> Result<Quiver> {
        let kill = self.vertex_mask(vertices)?;
        let keep: Vec<bool> = kill.iter().map(|k| !k).collect();
        Ok(self.restrict(&keep, &vec![true; self.arrows.len()]))
    }

    fn vertex_mask<S: AsRef<str>>(&self, vertices: &[S]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.vertices.len()];
        for v in vertices {
            mask[self.require_vertex(v.as_ref())?] = true;
        }
        Ok(mask)
    }

    pub(crate) fn restrict(&self, keep_vertex: &[bool], keep_arrow: &[bool]) -> Quiver {
        let vertices: Vec<&String> = self
            .vertices
            .iter()
            .zip(keep_vertex)
            .filter_map(|(v, &k)| k.then_some(v))
            .collect();
        let arrows = self
            .arrows
            .iter()
            .enumerate()
            .filter(|&(a, _)| {
                let (s, t) = self.ends[a];
                keep_arrow[a] && keep_vertex[s] && keep_vertex[t]
            })
            .map(|(_, a)| (a.id.clone(), a.from.clone(), a.to.clone()));
        Quiver::new(vertices.into_iter().cloned(), arrows)
            .expect("restriction of a valid quiver is valid")
    }

    /// Whether the full subquiver on `vertices` is convex: every path between
    /// two of its vertices stays inside it.
    pub fn is_convex<S: AsRef<str>>(&self, vertices: &[S]) -> Result<bool> {
        let inside = self.vertex_mask(vertices)?;
        let from_inside = self.reachable(&inside, false);
        let to_inside = self.reachable(&inside, true);
        Ok((0..self.vertices.len()).all(|w| inside[w] || !(from_inside[w] && to_inside[w])))
    }

    /// Vertices reachable by a path of positive length from (or, reversed, to) the seed set.
    fn reachable(&self, seeds: &[bool], reversed: bool) -> Vec<bool> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| seeds[i]).collect();
        while let Some(u) = queue.pop_front() {
            for &(s, t) in &self.ends {
                let (a, b) = if reversed { (t, s) } else { (s, t) };
                if a == u && !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        seen
    }

    /// A topological order of the vertices, if the quiver has no oriented cycle.
    pub(crate) fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for &(_, t) in &self.ends {
            indeg[t] += 1;
        }
        let out = self.out_arrows();
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &a in &out[u] {
                let t = self.ends[a].1;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push_back(t);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// True iff the quiver has no oriented cycle (loops count as cycles).
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// An arrow parallel to a directed path of length at least two, with that path.
    pub fn find_bypass(&self) -> Option<(String, Path)> {
        let out = self.out_arrows();
        for (a, &(u, v)) in self.ends.iter().enumerate() {
            if u == v {
                continue;
            }
            for &b in &out[u] {
                let w = self.ends[b].1;
                if b == a || w == u || w == v {
                    continue;
                }
                if let Some(mut tail) = self.shortest_directed_path(w, v, &[u]) {
                    tail.insert(0, b);
                    let path = self.path_from_indices(u, &tail);
                    return Some((self.arrows[a].id.clone(), path));
                }
            }
        }
        None
    }

    pub fn has_bypass(&self) -> bool {
        self.find_bypass().is_some()
    }

    /// BFS for a directed path `from -> to` avoiding the given vertices; arrow indices.
    fn shortest_directed_path(&self, from: usize, to: usize, avoid: &[usize]) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let out = self.out_arrows();
        let mut prev: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        for &x in avoid {
            seen[x] = true;
        }
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut arrows = Vec::new();
                let mut cur = to;
                while let Some(a) = prev[cur] {
                    arrows.push(a);
                    cur = self.ends[a].0;
                }
                arrows.reverse();
                return Some(arrows);
            }
            for &a in &out[u] {
                let t = self.ends[a].1;
                if !seen[t] {
                    seen[t] = true;
                    prev[t] = Some(a);
                    queue.push_back(t);
                }
            }
        }
        None
    }

    pub(crate) fn path_from_indices(&self, source: usize, arrows: &[usize]) -> Path {
        let target = arrows.last().map_or(source, |&a| self.ends[a].1);
        Path {
            arrows: arrows.iter().map(|&a| self.arrows[a].id.clone()).collect(),
            source: self.vertices[source].clone(),
            target: self.vertices[target].clone(),
        }
    }

    /// Resolves a sequence of arrow ids into a path, checking composability.
    pub fn path<S: AsRef<str>>(&self, arrows: &[S]) -> Result<Path> {
        let Some(first) = arrows.first() else {
            return Err(Error::Malformed("path without arrows needs an explicit vertex".into()));
        };
        let first = self.require_arrow(first.as_ref())?;
        let source = self.ends[first].0;
        let mut at = source;
        let mut ix = Vec::with_capacity(arrows.len());
        for a in arrows {
            let a = self.require_arrow(a.as_ref())?;
            let (s, t) = self.ends[a];
            if s != at {
                return Err(Error::Malformed(format!(
                    "arrow `{}` does not start where the path ends (`{}`)",
                    self.arrows[a].id, self.vertices[at]
                )));
            }
            at = t;
            ix.push(a);
        }
        Ok(self.path_from_indices(source, &ix))
    }

    /// Graphviz rendering: one node per vertex, one labelled edge per arrow.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for v in &self.vertices {
            out.push_str(&format!("  {};\n", dot_quote(v)));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "  {} -> {} [label={}];\n",
                dot_quote(&a.from),
                dot_quote(&a.to),
                dot_quote(&a.id)
            ));
        }
        out.push_str("}\n");
        out
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The oriented cycle `C_n`: vertices `1..n`, arrows `a_i: i -> i+1` and `a_n: n -> 1`.
pub fn make_cycle(n: usize) -> Result<Quiver> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("C_n needs n >= 3, got {n}")));
    }
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows = (1..=n).map(|i| (format!("a{i}"), i.to_string(), (i % n + 1).to_string()));
    Quiver::new(vertices, arrows)
}

/// `G(m, n)`: an arrow `eta: y -> x` and two directed arms `x -> ... -> y` of
/// lengths `m` (arrows `a1..am` via `p1..`) and `n` (arrows `b1..bn` via `q1..`).
pub fn make_g(m: usize, n: usize) -> Result<Quiver> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "G(m, n) needs m, n >= 2 (shorter arms create a 2-cycle), got ({m}, {n})"
        )));
    }
    let mut vertices = vec!["x".to_string()];
    vertices.extend((1..m).map(|i| format!("p{i}")));
    vertices.extend((1..n).map(|i| format!("q{i}")));
    vertices.push("y".to_string());
    let arm = |len: usize, letter: char, stop: char| -> Vec<(String, String, String)> {
        (1..=len)
            .map(|i| {
                let from = if i == 1 { "x".to_string() } else { format!("{stop}{}", i - 1) };
                let to = if i == len { "y".to_string() } else { format!("{stop}{i}") };
                (format!("{letter}{i}"), from, to)
            })
            .collect()
    };
    let mut arrows = arm(m, 'a', 'p');
    arrows.extend(arm(n, 'b', 'q'));
    arrows.push(("eta".into(), "y".into(), "x".into()));
    Quiver::new(vertices, arrows)
}

/// Outcome of [`Quiver::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Ids of loop arrows.
    pub loops: Vec<String>,
    /// Unordered vertex pairs joined by arrows in both directions.
    pub two_cycles: Vec<(String, String)>,
    /// `(from, to, count)` for every pair joined by more than one arrow.
    pub multiple_arrows: Vec<(String, String, usize)>,
}

impl ValidationReport {
    /// No loops and no 2-cycles; multiple arrows are allowed (mutation input).
    pub fn is_cluster_quiver(&self) -> bool {
        self.loops.is_empty() && self.two_cycles.is_empty()
    }

    /// Cluster quiver without multiple arrows.
    pub fn is_simple(&self) -> bool {
        self.is_cluster_quiver() && self.multiple_arrows.is_empty()
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out: Vec<String> = self.loops.iter().map(|a| format!("loop {a}")).collect();
        out.extend(
            self.two_cycles
                .iter()
                .map(|(a, b)| format!("2-cycle {{{a},{b}}}")),
        );
        out.extend(
            self.multiple_arrows
                .iter()
                .map(|(a, b, k)| format!("multiple arrow {a}→{b} ({k} arrows)")),
        );
        out
    }

    pub(crate) fn require_cluster(&self) -> Result<()> {
        if self.is_cluster_quiver() {
            Ok(())
        } else {
            Err(Error::NotClusterQuiver(self.violations()))
        }
    }

    pub(crate) fn require_simple(&self) -> Result<()> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(Error::NotClusterQuiver(self.violations()))
        }
    }
}

/// A directed path, stored in traversal order (source to target).
///
/// Algebraic notation usually composes right to left, so the product
/// `γ_L ⋯ γ_1` is stored as `[γ_1, …, γ_L]`. A path of length zero is the
/// trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    arrows: Vec<String>,
    source: String,
    target: String,
}

impl Path {
    pub fn trivial(vertex: impl Into<String>) -> Path {
        let v = vertex.into();
        Path {
            arrows: Vec::new(),
            source: v.clone(),
            target: v,
        }
    }

    pub fn arrows(&self) -> &[String] {
        &self.arrows
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn target(&self) -> &str {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_parallel(&self, other: &Path) -> bool {
        self.source == other.source && self.target == other.target
    }

    pub fn contains_arrow(&self, a: &str) -> bool {
        self.arrows.iter().any(|x| x == a)
    }

    /// `self` followed by `next`, if `next` starts where `self` ends.
    pub fn then(&self, next: &Path) -> Option<Path> {
        (self.target == next.source).then(|| Path {
            arrows: self.arrows.iter().chain(&next.arrows).cloned().collect(),
            source: self.source.clone(),
            target: next.target.clone(),
        })
    }

    /// Visited vertices in order, including both endpoints.
    pub fn vertices(&self, q: &Quiver) -> Vec<String> {
        let mut out = vec![self.source.clone()];
        for a in &self.arrows {
            if let Some(arrow) = q.arrow(a) {
                out.push(arrow.to.clone());
            }
        }
        out
    }

    /// Renames arrows and endpoints; used to transport paths along isomorphisms.
    pub fn relabel(
        &self,
        vertex: impl Fn(&str) -> String,
        arrow: impl Fn(&str) -> String,
    ) -> Path {
        Path {
            arrows: self.arrows.iter().map(|a| arrow(a)).collect(),
            source: vertex(&self.source),
            target: vertex(&self.target),
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            write!(f, "e_{}", self.source)
        } else {
            write!(f, "{}", self.arrows.join("·"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(vs: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
        Quiver::new(vs.iter().copied(), arrows.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Quiver::new(["1", "1"], Vec::<(&str, &str, &str)>::new()).is_err());
        assert!(Quiver::new(["1"], [("a", "1", "2")]).is_err());
        assert!(Quiver::new(["1", "2"], [("a", "1", "2"), ("a", "2", "1")]).is_err());
        assert!(Quiver::new([""], Vec::<(&str, &str, &str)>::new()).is_err());
    }

    #[test]
    fn validation_report() {
        let tri = make_cycle(3).unwrap();
        assert!(tri.validate().is_simple());

        let two = q(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        let r = two.validate();
        assert!(!r.is_cluster_quiver());
        assert_eq!(r.violations(), vec!["2-cycle {1,2}".to_string()]);

        let double = q(&["1", "2"], &[("a1", "1", "2"), ("a2", "1", "2")]);
        let r = double.validate();
        assert!(r.is_cluster_quiver());
        assert!(!r.is_simple());
        assert_eq!(r.multiple_arrows, vec![("1".into(), "2".into(), 2)]);

        let lp = q(&["1"], &[("l", "1", "1")]);
        assert_eq!(lp.validate().loops, vec!["l".to_string()]);
    }

    #[test]
    fn generators() {
        let c3 = make_cycle(3).unwrap();
        assert_eq!((c3.vertex_count(), c3.arrow_count()), (3, 3));
        let g = make_g(2, 2).unwrap();
        assert_eq!((g.vertex_count(), g.arrow_count()), (4, 5));
        let g32 = make_g(3, 2).unwrap();
        assert_eq!((g32.vertex_count(), g32.arrow_count()), (5, 6));
        assert!(make_g(1, 3).is_err());
        assert!(make_cycle(2).is_err());
    }

    #[test]
    fn surgery() {
        let c3 = make_cycle(3).unwrap();
        let a3 = c3.delete_arrows(&["a3"]).unwrap();
        assert_eq!(a3.arrow_count(), 2);
        assert!(a3.is_acyclic());
        assert!(c3.delete_arrows(&["zz"]).is_err());

        let g32 = make_g(3, 2).unwrap();
        let killed = g32.kill_vertices(&["p1"]).unwrap();
        assert_eq!(killed.vertex_count(), 4);
        assert!(!killed.arrows().iter().any(|a| a.from == "p1" || a.to == "p1"));
        // the length-3 arm is broken, only arm b and eta remain around x, y
        assert_eq!(killed.arrow_count(), 4);
    }

    #[test]
    fn convexity() {
        let p = q(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]);
        assert!(!p.is_convex(&["1", "3"]).unwrap());
        assert!(p.is_convex(&["1", "2"]).unwrap());
        assert!(p.is_convex(&["1", "2", "3"]).unwrap());
    }

    #[test]
    fn acyclicity_and_bypass() {
        assert!(!make_cycle(3).unwrap().is_acyclic());
        let t = q(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "1", "3")],
        );
        let (arrow, path) = t.find_bypass().unwrap();
        assert_eq!(arrow, "c");
        assert_eq!(path.arrows(), &["a".to_string(), "b".to_string()]);
        let p = q(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]);
        assert!(!p.has_bypass());
        // parallel arrows are not bypasses
        let d = q(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]);
        assert!(!d.has_bypass());
    }

    #[test]
    fn paths_compose() {
        let c3 = make_cycle(3).unwrap();
        let p = c3.path(&["a1", "a2"]).unwrap();
        assert_eq!((p.source(), p.target(), p.len()), ("1", "3", 2));
        assert!(c3.path(&["a1", "a3"]).is_err());
        let r = p.then(&c3.path(&["a3"]).unwrap()).unwrap();
        assert_eq!(r.target(), "1");
        assert_eq!(r.vertices(&c3), vec!["1", "2", "3", "1"]);
    }

    #[test]
    fn json_and_dot() {
        let g = make_g(2, 2).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let back: Quiver = serde_json::from_str(&s).unwrap();
        assert_eq!(g, back);
        let bad = r#"{"vertices":["1"],"arrows":[{"id":"a","from":"1","to":"9"}]}"#;
        assert!(serde_json::from_str::<Quiver>(bad).is_err());
        let dot = make_cycle(3).unwrap().to_dot();
        assert!(dot.contains("\"3\" -> \"1\" [label=\"a3\"]"));
    }

    #[test]
    fn components() {
        let qq = q(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "4", "3")]);
        assert_eq!(
            qq.connected_components(),
            vec![vec!["1".to_string(), "2".to_string()], vec!["3".to_string(), "4".to_string()]]
        );
        assert!(!qq.is_connected());
    }
}
