//! Fomin–Zelevinsky quiver mutation.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::Result;
use crate::quiver::Quiver;

/// One mutation with its input and output.
#[derive(Clone, Debug, Serialize)]
pub struct MutationStep {
    pub vertex: String,
    pub before: Quiver,
    pub after: Quiver,
}

impl MutationStep {
    pub fn new(q: &Quiver, k: &str) -> Result<MutationStep> {
        Ok(MutationStep {
            vertex: k.to_string(),
            before: q.clone(),
            after: mutate(q, k)?,
        })
    }
}

/// Mutation of `q` at `k`.
///
/// Arrows at `k` are reversed (id gets a `*` suffix), every path `i -> k -> j`
/// contributes a new arrow `m<k>_<i>_<j>_<n>`, and opposite pairs `i ⇄ j` are
/// cancelled earliest-created first. Arrow ids carry no meaning across
/// mutation; only multiplicities do.
pub fn mutate(q: &Quiver, k: &str) -> Result<Quiver> {
    q.validate().require_cluster()?;
    let k_ix = q.require_vertex(k)?;

    let mut used: HashSet<String> = HashSet::new();
    let mut fresh = |base: String| -> String {
        let mut id = base;
        while used.contains(&id) {
            id.push('\'');
        }
        used.insert(id.clone());
        id
    };

    let mut entries: Vec<(String, usize, usize)> = Vec::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        let (s, t) = q.ends(a);
        if s != k_ix && t != k_ix {
            entries.push((fresh(arrow.id.clone()), s, t));
        }
    }
    for (a, arrow) in q.arrows().iter().enumerate() {
        let (s, t) = q.ends(a);
        if s == k_ix || t == k_ix {
            entries.push((fresh(format!("{}*", arrow.id)), t, s));
        }
    }
    let mut counter: HashMap<(usize, usize), usize> = HashMap::new();
    for a in 0..q.arrow_count() {
        let (i, ka) = q.ends(a);
        if ka != k_ix {
            continue;
        }
        for b in 0..q.arrow_count() {
            let (kb, j) = q.ends(b);
            if kb != k_ix {
                continue;
            }
            let n = counter.entry((i, j)).or_insert(0);
            *n += 1;
            let id = format!("m{}_{}_{}_{}", k, q.vertices()[i], q.vertices()[j], n);
            entries.push((fresh(id), i, j));
        }
    }

    // cancel 2-cycles
    let mut count: HashMap<(usize, usize), usize> = HashMap::new();
    for &(_, s, t) in &entries {
        *count.entry((s, t)).or_insert(0) += 1;
    }
    let mut to_remove: HashMap<(usize, usize), usize> = HashMap::new();
    for (&(s, t), &c) in &count {
        let back = count.get(&(t, s)).copied().unwrap_or(0);
        let r = c.min(back);
        if r > 0 {
            to_remove.insert((s, t), r);
        }
    }
    let kept = entries.into_iter().filter(|(_, s, t)| match to_remove.get_mut(&(*s, *t)) {
        Some(r) if *r > 0 => {
            *r -= 1;
            false
        }
        _ => true,
    });
    let arrows: Vec<(String, String, String)> = kept
        .map(|(id, s, t)| (id, q.vertices()[s].clone(), q.vertices()[t].clone()))
        .collect();
    Quiver::new(q.vertices().iter().cloned(), arrows)
}

/// Signed adjacency matrix `b_ij = #(i -> j) - #(j -> i)` in vertex order.
pub fn exchange_matrix(q: &Quiver) -> Vec<Vec<i64>> {
    let n = q.vertex_count();
    let mut b = vec![vec![0i64; n]; n];
    for a in 0..q.arrow_count() {
        let (s, t) = q.ends(a);
        if s != t {
            b[s][t] += 1;
            b[t][s] -= 1;
        }
    }
    b
}
