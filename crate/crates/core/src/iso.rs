//! Brute-force quiver isomorphism for small quivers.

use std::collections::HashMap;

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// Default vertex bound for [`quiver_isomorphic`].
pub const DEFAULT_ISO_BOUND: usize = 12;

/// Vertex bijection, keyed in the order of the first quiver's vertices.
pub type VertexMap = IndexMap<String, String>;

/// First vertex bijection (lexicographic in vertex order) carrying `q1` onto
/// `q2` with arrow multiplicities preserved.
pub fn quiver_isomorphic(q1: &Quiver, q2: &Quiver) -> Result<Option<VertexMap>> {
    quiver_isomorphic_bounded(q1, q2, DEFAULT_ISO_BOUND)
}

pub fn quiver_isomorphic_bounded(q1: &Quiver, q2: &Quiver, bound: usize) -> Result<Option<VertexMap>> {
    for q in [q1, q2] {
        if q.vertex_count() > bound {
            return Err(Error::SizeBound {
                what: "vertex count",
                actual: q.vertex_count(),
                limit: bound,
            });
        }
    }
    let n = q1.vertex_count();
    if n != q2.vertex_count() || q1.arrow_count() != q2.arrow_count() {
        return Ok(None);
    }
    let m1 = multiplicities(q1);
    let m2 = multiplicities(q2);
    let sig = |m: &[Vec<usize>], i: usize| -> (usize, usize, usize) {
        let out: usize = m[i].iter().sum();
        let inn: usize = m.iter().map(|row| row[i]).sum();
        (out, inn, m[i][i])
    };
    let s1: Vec<_> = (0..n).map(|i| sig(&m1, i)).collect();
    let s2: Vec<_> = (0..n).map(|i| sig(&m2, i)).collect();
    let mut s1_sorted = s1.clone();
    let mut s2_sorted = s2.clone();
    s1_sorted.sort_unstable();
    s2_sorted.sort_unstable();
    if s1_sorted != s2_sorted {
        return Ok(None);
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !assign(0, &m1, &m2, &s1, &s2, &mut image, &mut used) {
        return Ok(None);
    }
    Ok(Some(
        (0..n)
            .map(|i| (q1.vertices()[i].clone(), q2.vertices()[image[i]].clone()))
            .collect(),
    ))
}

fn multiplicities(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.vertex_count();
    let mut m = vec![vec![0; n]; n];
    for a in 0..q.arrow_count() {
        let (s, t) = q.ends(a);
        m[s][t] += 1;
    }
    m
}

fn assign(
    i: usize,
    m1: &[Vec<usize>],
    m2: &[Vec<usize>],
    s1: &[(usize, usize, usize)],
    s2: &[(usize, usize, usize)],
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = m1.len();
    if i == n {
        return true;
    }
    for j in 0..n {
        if used[j] || s1[i] != s2[j] {
            continue;
        }
        let consistent = (0..i).all(|k| {
            let fk = image[k];
            m1[i][k] == m2[j][fk] && m1[k][i] == m2[fk][j]
        });
        if !consistent {
            continue;
        }
        image[i] = j;
        used[j] = true;
        if assign(i + 1, m1, m2, s1, s2, image, used) {
            return true;
        }
        used[j] = false;
    }
    image[i] = usize::MAX;
    false
}

/// Arrow bijection induced by a vertex bijection; parallel arrows are matched
/// in order of appearance.
pub fn induced_arrow_map(q1: &Quiver, q2: &Quiver, vertices: &VertexMap) -> Option<IndexMap<String, String>> {
    let mut pool: HashMap<(&str, &str), Vec<&str>> = HashMap::new();
    for a in q2.arrows() {
        pool.entry((a.from.as_str(), a.to.as_str()))
            .or_default()
            .push(a.id.as_str());
    }
    for v in pool.values_mut() {
        v.reverse();
    }
    let mut out = IndexMap::new();
    for a in q1.arrows() {
        let from = vertices.get(&a.from)?;
        let to = vertices.get(&a.to)?;
        let target = pool.get_mut(&(from.as_str(), to.as_str()))?.pop()?;
        out.insert(a.id.clone(), target.to_string());
    }
    Some(out)
}
