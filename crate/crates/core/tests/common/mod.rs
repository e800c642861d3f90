//! Brute-force oracles shared by the integration tests. None of them call the
//! library algorithms they are used to check.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use quiverforge::Quiver;

/// Arrow-id set of every chordless cycle, with its orientation, found by
/// testing each vertex subset of size at least 3 for inducing a cycle graph.
pub fn chordless_cycles(q: &Quiver) -> Vec<(BTreeSet<String>, bool)> {
    let vs = q.vertices();
    let n = vs.len();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        let inside = |v: &str| vs.iter().position(|x| x == v).is_some_and(|i| mask >> i & 1 == 1);
        let arrows: Vec<_> = q.arrows().iter().filter(|a| inside(&a.from) && inside(&a.to)).collect();
        if arrows.len() != mask.count_ones() as usize {
            continue;
        }
        let mut degree: HashMap<&str, usize> = HashMap::new();
        let mut out_deg: HashMap<&str, usize> = HashMap::new();
        for a in &arrows {
            *degree.entry(&a.from).or_default() += 1;
            *degree.entry(&a.to).or_default() += 1;
            *out_deg.entry(&a.from).or_default() += 1;
        }
        if degree.len() != arrows.len() || degree.values().any(|&d| d != 2) {
            continue;
        }
        // connected: walk the underlying cycle from one vertex
        let start = arrows[0].from.as_str();
        let mut seen: HashSet<&str> = HashSet::from([start]);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for a in &arrows {
                for (x, y) in [(&a.from, &a.to), (&a.to, &a.from)] {
                    if x == v && seen.insert(y.as_str()) {
                        frontier.push(y);
                    }
                }
            }
        }
        if seen.len() != arrows.len() {
            continue;
        }
        let oriented = out_deg.len() == arrows.len() && out_deg.values().all(|&d| d == 1);
        out.push((arrows.iter().map(|a| a.id.clone()).collect(), oriented));
    }
    out
}

/// Arrow sets meeting every chordless cycle exactly once and lying on
/// chordless cycles, by exhaustive subset search.
pub fn cuts_by_subsets(q: &Quiver) -> Vec<BTreeSet<String>> {
    let cycles = chordless_cycles(q);
    let cyclic: Vec<String> = q
        .arrows()
        .iter()
        .filter(|a| cycles.iter().any(|(c, _)| c.contains(&a.id)))
        .map(|a| a.id.clone())
        .collect();
    assert!(cyclic.len() <= 20);
    let mut out = Vec::new();
    for mask in 0u32..(1 << cyclic.len()) {
        let set: BTreeSet<String> = (0..cyclic.len()).filter(|i| mask >> i & 1 == 1).map(|i| cyclic[i].clone()).collect();
        if cycles.iter().all(|(c, _)| c.intersection(&set).count() == 1) {
            out.push(set);
        }
    }
    out
}

pub fn meets_every_cycle_once(q: &Quiver, cut: &[String]) -> bool {
    let set: BTreeSet<String> = cut.iter().cloned().collect();
    set.len() == cut.len() && chordless_cycles(q).iter().all(|(c, _)| c.intersection(&set).count() == 1)
}

/// Reachability by directed paths of length at least one.
fn reach(q: &Quiver) -> HashMap<(String, String), bool> {
    let vs = q.vertices();
    let mut r: HashMap<(String, String), bool> = HashMap::new();
    for a in q.arrows() {
        r.insert((a.from.clone(), a.to.clone()), true);
    }
    for k in vs {
        for i in vs {
            for j in vs {
                let via = r.get(&(i.clone(), k.clone())).copied().unwrap_or(false)
                    && r.get(&(k.clone(), j.clone())).copied().unwrap_or(false);
                if via {
                    r.insert((i.clone(), j.clone()), true);
                }
            }
        }
    }
    r
}

pub fn acyclic(q: &Quiver) -> bool {
    let r = reach(q);
    q.vertices().iter().all(|v| !r.get(&(v.clone(), v.clone())).copied().unwrap_or(false))
}

/// An arrow `u -> v` together with a path `u -> w ⇝ v`, `w ≠ v`, in an acyclic quiver.
pub fn has_bypass(q: &Quiver) -> bool {
    let r = reach(q);
    q.arrows().iter().any(|a| {
        q.arrows()
            .iter()
            .any(|b| b.from == a.from && b.to != a.to && r.get(&(b.to.clone(), a.to.clone())).copied().unwrap_or(false))
    })
}

fn multiplicity(q: &Quiver) -> HashMap<(String, String), usize> {
    let mut m = HashMap::new();
    for a in q.arrows() {
        *m.entry((a.from.clone(), a.to.clone())).or_insert(0) += 1;
    }
    m
}

/// A vertex bijection preserving arrow multiplicities, by trying every permutation.
pub fn isomorphism(q1: &Quiver, q2: &Quiver) -> Option<HashMap<String, String>> {
    let n = q1.vertex_count();
    if n != q2.vertex_count() || q1.arrow_count() != q2.arrow_count() {
        return None;
    }
    let (m1, m2) = (multiplicity(q1), multiplicity(q2));
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let map: HashMap<String, String> =
            (0..n).map(|i| (q1.vertices()[i].clone(), q2.vertices()[perm[i]].clone())).collect();
        if m1.iter().all(|((s, t), c)| m2.get(&(map[s].clone(), map[t].clone())) == Some(c)) {
            return Some(map);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All directed paths (as arrow-id lists) from `s` to `t`, in an acyclic quiver.
pub fn all_paths(q: &Quiver, s: &str, t: &str) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    let mut stack = vec![(s.to_string(), Vec::<String>::new())];
    while let Some((v, p)) = stack.pop() {
        if v == t {
            out.push(p.clone());
        }
        for a in q.arrows().iter().filter(|a| a.from == v) {
            let mut next = p.clone();
            next.push(a.id.clone());
            stack.push((a.to.clone(), next));
        }
    }
    out
}

/// Cartan matrix of an acyclic quiver modulo zero relations: paths avoiding
/// every relation path as a contiguous subpath.
pub fn monomial_cartan(q: &Quiver, zero: &[Vec<String>]) -> Vec<Vec<i64>> {
    let vs = q.vertices();
    vs.iter()
        .map(|i| {
            vs.iter()
                .map(|j| {
                    all_paths(q, i, j)
                        .iter()
                        .filter(|p| !zero.iter().any(|z| p.windows(z.len()).any(|w| w == z.as_slice())))
                        .count() as i64
                })
                .collect()
        })
        .collect()
}

/// Inverse of a unitriangular-up-to-permutation integer matrix by integer
/// Gauss-Jordan; panics when a pivot is not ±1.
pub fn integer_inverse(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = c.len();
    let mut a: Vec<Vec<i64>> = c.iter().cloned().collect();
    let mut inv: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| a[r][col].abs() == 1).expect("unit pivot");
        a.swap(col, p);
        inv.swap(col, p);
        let s = a[col][col];
        for j in 0..n {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                for j in 0..n {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
    }
    inv
}

fn det_i128(m: &[Vec<i128>]) -> i128 {
    // Bareiss fraction-free elimination
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Coefficients (constant term first) of `det(tI - Φ)` for `Φ = -C⁻¹Cᵀ`,
/// by evaluating at `t = 0..=n` and interpolating.
pub fn coxeter_oracle(c: &[Vec<i64>]) -> Vec<i64> {
    let n = c.len();
    let inv = integer_inverse(c);
    let phi: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| -(0..n).map(|k| inv[i][k] * c[j][k]).sum::<i64>()).collect())
        .collect();
    let values: Vec<i128> = (0..=n as i128)
        .map(|t| {
            let m: Vec<Vec<i128>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { t } else { 0 } - phi[i][j] as i128).collect())
                .collect();
            det_i128(&m)
        })
        .collect();
    // Newton divided differences on integer nodes, then expand
    let mut coef: Vec<f64> = values.iter().map(|&v| v as f64).collect();
    for k in 1..=n {
        for i in (k..=n).rev() {
            coef[i] = (coef[i] - coef[i - 1]) / k as f64;
        }
    }
    let mut poly = vec![0f64; n + 1];
    let mut basis = vec![1f64];
    for (k, ck) in coef.iter().enumerate() {
        for (d, b) in basis.iter().enumerate() {
            poly[d] += ck * b;
        }
        let mut next = vec![0f64; basis.len() + 1];
        for (d, b) in basis.iter().enumerate() {
            next[d + 1] += b;
            next[d] -= b * k as f64;
        }
        basis = next;
    }
    poly.iter().map(|x| x.round() as i64).collect()
}

/// Roots of `x·S·xᵀ = 2` with `|x_i| ≤ 6`, by plain enumeration on small
/// ranks and on the box `|x_i| ≤ bound` otherwise.
pub fn count_roots_brute(s: &[Vec<i64>], bound: i64) -> usize {
    let n = s.len();
    let mut x = vec![-bound; n];
    let mut count = 0;
    loop {
        let v: i64 = (0..n).map(|i| (0..n).map(|j| x[i] * s[i][j] * x[j]).sum::<i64>()).sum();
        if v == 2 {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            if x[k] < bound {
                x[k] += 1;
                break;
            }
            x[k] = -bound;
            k += 1;
        }
    }
}
