mod common;

use std::collections::{BTreeSet, HashMap};

use nalgebra::DMatrix;
use num::rational::BigRational;
use num::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use quiverforge::algebra::{
    homotopy_classes, normalize_coefficients, path_space, standard_relations, PathAlgebra, Presentation, Relation,
};
use quiverforge::cuts::{cut_containing, enumerate_admissible_cuts, quotient_by_cut};
use quiverforge::cycles::{antiparallel_shortest_paths, enumerate_chordless_cycles, is_cyclically_oriented};
use quiverforge::fixtures::{fixture, fixtures};
use quiverforge::forms::{count_roots, coxeter_polynomial, euler_symmetrized, Definiteness, SymmetricForm};
use quiverforge::linalg::QMatrix;
use quiverforge::mutation::{exchange_matrix, mutate};
use quiverforge::Quiver;

/// Simple quivers on `3..=max` vertices: each pair gets no arrow or one
/// arrow in either direction.
fn simple_quiver(max: usize) -> impl Strategy<Value = Quiver> {
    (3..=max).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(0u8..3, pairs).prop_map(move |choice| {
            let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let mut arrows = Vec::new();
            let mut k = 0;
            for i in 1..=n {
                for j in i + 1..=n {
                    match choice[k] {
                        1 => arrows.push((format!("e{i}_{j}"), i.to_string(), j.to_string())),
                        2 => arrows.push((format!("e{j}_{i}"), j.to_string(), i.to_string())),
                        _ => {}
                    }
                    k += 1;
                }
            }
            Quiver::new(vs, arrows).unwrap()
        })
    })
}

/// Quivers on up to 6 vertices with up to 2 arrows between a pair, all one way.
fn cluster_quiver() -> impl Strategy<Value = Quiver> {
    (2usize..=6).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(-2i8..=2, pairs).prop_map(move |b| {
            let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let mut arrows = Vec::new();
            let mut k = 0;
            for i in 1..=n {
                for j in i + 1..=n {
                    for c in 0..b[k].unsigned_abs() {
                        let (s, t) = if b[k] > 0 { (i, j) } else { (j, i) };
                        arrows.push((format!("x{s}_{t}_{c}"), s.to_string(), t.to_string()));
                    }
                    k += 1;
                }
            }
            Quiver::new(vs, arrows).unwrap()
        })
    })
}

fn cyclically_oriented_quiver() -> impl Strategy<Value = Quiver> {
    simple_quiver(6).prop_filter("cyclically oriented and connected with a cycle", |q| {
        q.is_connected()
            && is_cyclically_oriented(q).unwrap().cyclically_oriented
            && common::chordless_cycles(q).iter().any(|(_, o)| *o)
    })
}

fn catalog_quiver() -> impl Strategy<Value = Quiver> {
    prop::sample::select(vec!["C3", "C4", "C5", "G22", "G32"])
        .prop_map(|n| fixture(n).unwrap().presentation.quiver().clone())
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=20)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn chordless_cycles_match_subset_oracle(q in simple_quiver(7)) {
        let got: BTreeSet<(BTreeSet<String>, bool)> = enumerate_chordless_cycles(&q)
            .unwrap()
            .iter()
            .map(|c| (c.arrows().into_iter().collect(), c.is_oriented()))
            .collect();
        let want: BTreeSet<(BTreeSet<String>, bool)> = common::chordless_cycles(&q).into_iter().collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn kill_vertices_is_complementary_full_subquiver(q in simple_quiver(6), mask in any::<u8>()) {
        let (kill, keep): (Vec<String>, Vec<String>) = q
            .vertices()
            .iter()
            .enumerate()
            .fold((Vec::new(), Vec::new()), |(mut k, mut s), (i, v)| {
                if mask >> i & 1 == 1 { k.push(v.clone()) } else { s.push(v.clone()) }
                (k, s)
            });
        prop_assert_eq!(q.kill_vertices(&kill).unwrap(), q.full_subquiver(&keep).unwrap());
    }

    #[test]
    fn mutation_matches_matrix_rule_and_is_involutive(q in cluster_quiver(), k in 0usize..6) {
        let k = k % q.vertex_count();
        let v = q.vertices()[k].clone();
        let b = exchange_matrix(&q);
        let n = b.len();
        let expected: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == k || j == k {
                            -b[i][j]
                        } else {
                            b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
                        }
                    })
                    .collect()
            })
            .collect();
        let once = mutate(&q, &v).unwrap();
        prop_assert_eq!(exchange_matrix(&once), expected);
        prop_assert_eq!(exchange_matrix(&mutate(&once, &v).unwrap()), b);
    }

    #[test]
    fn antiparallel_paths_share_only_endpoints(q in cyclically_oriented_quiver()) {
        for a in q.arrows() {
            let paths = antiparallel_shortest_paths(&q, &a.id).unwrap();
            for (i, p) in paths.iter().enumerate() {
                prop_assert_eq!(p.source(), a.to.as_str());
                prop_assert_eq!(p.target(), a.from.as_str());
                for r in &paths[i + 1..] {
                    let x: BTreeSet<String> = p.vertices(&q).into_iter().collect();
                    let y: BTreeSet<String> = r.vertices(&q).into_iter().collect();
                    let both: BTreeSet<String> = x.intersection(&y).cloned().collect();
                    let ends: BTreeSet<String> = [a.from.clone(), a.to.clone()].into_iter().collect();
                    prop_assert_eq!(both, ends);
                }
            }
        }
    }

    #[test]
    fn cuts_match_oracle_on_random_quivers(q in cyclically_oriented_quiver()) {
        let got: BTreeSet<BTreeSet<String>> = enumerate_admissible_cuts(&q)
            .unwrap()
            .iter()
            .map(|c| c.arrows().iter().cloned().collect())
            .collect();
        let want: BTreeSet<BTreeSet<String>> = common::cuts_by_subsets(&q).into_iter().collect();
        prop_assert_eq!(got, want);
        let cycles = common::chordless_cycles(&q);
        for a in q.arrows() {
            if cycles.iter().any(|(c, _)| c.contains(&a.id)) {
                let cut = cut_containing(&q, &a.id).unwrap();
                prop_assert!(cut.contains(&a.id));
                prop_assert!(common::meets_every_cycle_once(&q, cut.arrows()));
                let quotient = q.delete_arrows(cut.arrows()).unwrap();
                prop_assert!(common::acyclic(&quotient));
                prop_assert!(!common::has_bypass(&quotient));
            }
        }
    }

    #[test]
    fn normalization_rescales_to_standard(q in catalog_quiver(), coeffs in proptest::collection::vec(nonzero_rational(), 32)) {
        let std = standard_relations(&q).unwrap();
        let mut it = coeffs.into_iter().cycle();
        let rels: Vec<Relation> = std
            .relations()
            .iter()
            .map(|r| Relation::new(r.tag().map(str::to_string), r.terms().iter().map(|t| (it.next().unwrap(), t.path.clone()))).unwrap())
            .collect();
        let p = Presentation::new(q.clone(), rels).unwrap();
        let n = normalize_coefficients(&p).unwrap();
        for r in p.relations() {
            let scaled: Vec<BigRational> = r
                .terms()
                .iter()
                .map(|t| &t.coeff / t.path.arrows().iter().map(|a| n.scaling[a].clone()).product::<BigRational>())
                .collect();
            prop_assert!(scaled.iter().all(|c| *c == scaled[0]));
        }
        prop_assert_eq!(n.presentation, std);
    }

    #[test]
    fn homotopy_matches_pairwise_fixed_point(q in catalog_quiver(), pick in any::<prop::sample::Index>()) {
        let std = standard_relations(&q).unwrap();
        let cuts = enumerate_admissible_cuts(&q).unwrap();
        let cut = pick.get(&cuts);
        let a = quotient_by_cut(&std, cut).unwrap();
        let bound = a.relations().iter().map(|r| r.max_len()).max().unwrap_or(1) + 1;
        for x in a.quiver().vertices() {
            for y in a.quiver().vertices() {
                let got: BTreeSet<BTreeSet<Vec<String>>> = homotopy_classes(&a, x, y, bound)
                    .unwrap()
                    .into_iter()
                    .map(|c| c.iter().map(|p| p.arrows().to_vec()).collect())
                    .collect();
                prop_assert_eq!(got, naive_classes(&a, x, y, bound));
            }
        }
    }

    #[test]
    fn path_spaces_ignore_arrow_order(q in catalog_quiver(), pick in any::<prop::sample::Index>()) {
        let std = standard_relations(&q).unwrap();
        let cuts = enumerate_admissible_cuts(&q).unwrap();
        let a = quotient_by_cut(&std, pick.get(&cuts)).unwrap();
        let reversed = Quiver::new(
            a.quiver().vertices().iter().cloned(),
            a.quiver().arrows().iter().rev().map(|x| (x.id.clone(), x.from.clone(), x.to.clone())),
        )
        .unwrap();
        let moved = Presentation::new(reversed, a.relations().to_vec()).unwrap();
        for x in a.quiver().vertices() {
            for y in a.quiver().vertices() {
                prop_assert_eq!(path_space(&a, x, y).unwrap().dim(), path_space(&moved, x, y).unwrap().dim());
            }
        }
    }

    #[test]
    fn root_count_and_coxeter_invariant_under_relabelling(
        name in prop::sample::select(vec!["A3", "A4", "D4", "D5", "commutative-square"]),
        perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let p = fixture(name).unwrap().presentation;
        let n = p.quiver().vertex_count();
        let order: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        let f = euler_symmetrized(&p).unwrap();
        let permuted = SymmetricForm::new(QMatrix::from_rows(
            order.iter().map(|&i| order.iter().map(|&j| f.matrix[(i, j)].clone()).collect()).collect(),
        ))
        .unwrap();
        prop_assert_eq!(count_roots(&f).unwrap(), count_roots(&permuted).unwrap());

        let q = p.quiver();
        let rename = |v: &str| format!("v{}", order.iter().position(|&i| q.vertices()[i] == v).unwrap());
        let relabelled = Quiver::new(
            order.iter().map(|&i| rename(&q.vertices()[i])),
            q.arrows().iter().map(|a| (a.id.clone(), rename(&a.from), rename(&a.to))),
        )
        .unwrap();
        let rels: Vec<Relation> = p
            .relations()
            .iter()
            .map(|r| Relation::new(None, r.terms().iter().map(|t| (t.coeff.clone(), relabelled.path(t.path.arrows()).unwrap()))).unwrap())
            .collect();
        let moved = Presentation::new(relabelled, rels).unwrap();
        let poly = coxeter_polynomial(&p).unwrap();
        prop_assert_eq!(&poly, &coxeter_polynomial(&moved).unwrap());
        prop_assert!(poly[0].abs() == 1.into());
    }

    #[test]
    fn definiteness_agrees_with_eigenvalues(entries in proptest::collection::vec(-2i64..=2, 10)) {
        // symmetric 4x4 with diagonal 2
        let mut m = vec![vec![2i64; 4]; 4];
        let mut k = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                m[i][j] = entries[k];
                m[j][i] = entries[k];
                k += 1;
            }
        }
        check_eigen(&SymmetricForm::new(QMatrix::from_i64(&m)).unwrap());
    }
}

fn check_eigen(f: &SymmetricForm) {
    let n = f.dim();
    let m = DMatrix::from_fn(n, n, |i, j| f.matrix[(i, j)].to_f64().unwrap());
    let eig = m.symmetric_eigenvalues();
    let neg = eig.iter().filter(|&&e| e < -1e-9).count();
    let zero = eig.iter().filter(|&&e| e.abs() <= 1e-9).count();
    let expected = match (neg, zero) {
        (0, 0) => Definiteness::PositiveDefinite,
        (0, c) => Definiteness::PositiveSemidefinite { corank: c },
        _ => Definiteness::Indefinite,
    };
    assert_eq!(f.definiteness, expected, "{:?}", f.matrix.to_rows());
    for v in &f.radical {
        let image = f.matrix.mul(&QMatrix::from_rows(v.iter().map(|x| vec![x.clone()]).collect()));
        assert!(image.to_rows().iter().all(|r| r[0].is_zero()));
    }
}

#[test]
fn fixture_forms_agree_with_eigenvalues() {
    for f in fixtures() {
        if !f.presentation.quiver().is_acyclic() {
            continue;
        }
        if let Ok(form) = euler_symmetrized(&f.presentation) {
            check_eigen(&form);
        }
    }
    let dt = euler_symmetrized(&fixture("D~4").unwrap().presentation).unwrap();
    assert_eq!(dt.definiteness, Definiteness::PositiveSemidefinite { corank: 1 });
    assert!(dt.radical[0].iter().all(|x| !x.is_negative()) || dt.radical[0].iter().all(|x| !x.is_positive()));
}

#[test]
fn path_algebra_dimensions_of_fixtures() {
    let square = PathAlgebra::new(&fixture("commutative-square").unwrap().presentation).unwrap();
    assert_eq!(square.total_dim(), 9);
    let rad2 = PathAlgebra::new(&fixture("C3-rad2").unwrap().presentation).unwrap();
    assert_eq!(rad2.total_dim(), 6);
}

/// Homotopy classes by repeated pairwise merging: two paths are merged when
/// they differ in one place by two terms of the same relation.
fn naive_classes(a: &Presentation, x: &str, y: &str, bound: usize) -> BTreeSet<BTreeSet<Vec<String>>> {
    let q = a.quiver();
    let paths: Vec<Vec<String>> = common::all_paths(q, x, y).into_iter().filter(|p| p.len() <= bound).collect();
    let mut class: HashMap<Vec<String>, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let terms: Vec<Vec<Vec<String>>> = a
        .relations()
        .iter()
        .map(|r| r.paths().map(|p| p.arrows().to_vec()).collect())
        .collect();
    let mut changed = true;
    while changed {
        changed = false;
        for p in &paths {
            for r in &terms {
                for d in r {
                    for start in 0..=p.len().saturating_sub(d.len()) {
                        if p.len() < d.len() || p[start..start + d.len()] != d[..] {
                            continue;
                        }
                        for e in r {
                            let mut other = p[..start].to_vec();
                            other.extend(e.iter().cloned());
                            other.extend(p[start + d.len()..].iter().cloned());
                            if let Some(&c) = class.get(&other) {
                                let own = class[p];
                                if c != own {
                                    let low = c.min(own);
                                    for v in class.values_mut() {
                                        if *v == c || *v == own {
                                            *v = low;
                                        }
                                    }
                                    changed = true;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut groups: HashMap<usize, BTreeSet<Vec<String>>> = HashMap::new();
    for (p, c) in class {
        groups.entry(c).or_default().insert(p);
    }
    groups.into_values().collect()
}
