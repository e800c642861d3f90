//! Standard relations of a cyclically oriented quiver, the (R1)/(R2) shape
//! check, and normalization of coefficients by rescaling arrows.

use std::collections::BTreeMap;

use indexmap::IndexMap;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::relation::{Presentation, Relation};
use crate::cuts::{antiparallel_arrow, cut_containing};
use crate::cycles::{antiparallel_shortest_paths, decompose_at_arrow, require_cyclically_oriented};
use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// Arrows lying on a chordless cycle, in arrow order.
pub fn cyclic_arrows(q: &Quiver) -> Result<Vec<String>> {
    let cycles = require_cyclically_oriented(q)?;
    Ok(q.arrows()
        .iter()
        .filter(|a| cycles.iter().any(|c| c.contains_arrow(&a.id)))
        .map(|a| a.id.clone())
        .collect())
}

/// One relation `ρ_α` per cyclic arrow `α`: the sum of all shortest paths
/// antiparallel to `α`, tagged with `α`.
pub fn standard_relations(q: &Quiver) -> Result<Presentation> {
    let mut rels = Vec::new();
    for alpha in cyclic_arrows(q)? {
        let paths = antiparallel_shortest_paths(q, &alpha)?;
        rels.push(Relation::sum(Some(alpha), paths)?);
    }
    Presentation::new(q.clone(), rels)
}

/// Result of [`check_r1_r2`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeCheck {
    pub ok: bool,
    pub diagnostics: Vec<String>,
}

/// Whether the relations correspond bijectively to the cyclic arrows by
/// antiparallelism (R1), each supported on exactly the shortest paths
/// antiparallel to its arrow (R2).
pub fn check_r1_r2(p: &Presentation) -> ShapeCheck {
    let q = p.quiver();
    let mut diagnostics = Vec::new();
    let cyclic = match cyclic_arrows(q) {
        Ok(c) => c,
        Err(e) => {
            return ShapeCheck {
                ok: false,
                diagnostics: vec![e.to_string()],
            }
        }
    };
    let mut by_arrow: BTreeMap<String, usize> = BTreeMap::new();
    for (k, r) in p.relations().iter().enumerate() {
        let Some(alpha) = antiparallel_arrow(q, r.source(), r.target(), r.tag()) else {
            diagnostics.push(format!("relation {k} has no antiparallel arrow"));
            continue;
        };
        *by_arrow.entry(alpha.clone()).or_insert(0) += 1;
        if !cyclic.contains(&alpha) {
            diagnostics.push(format!("relation {k} is antiparallel to `{alpha}`, which lies on no chordless cycle"));
            continue;
        }
        let expected = antiparallel_shortest_paths(q, &alpha).unwrap_or_default();
        if expected.iter().any(|d| !r.paths().any(|x| x == d)) {
            diagnostics.push(format!("support incomplete at {alpha}"));
        }
        for x in r.paths() {
            if !expected.contains(x) {
                diagnostics.push(format!("support at {alpha} contains `{x}`, not a shortest antiparallel path"));
            }
        }
    }
    for alpha in &cyclic {
        match by_arrow.get(alpha) {
            None => diagnostics.push(format!("no relation antiparallel to {alpha}")),
            Some(&c) if c > 1 => diagnostics.push(format!("{c} relations antiparallel to {alpha}")),
            _ => {}
        }
    }
    ShapeCheck {
        ok: diagnostics.is_empty(),
        diagnostics,
    }
}

/// A presentation in standard form together with arrow scalars `f_β`.
///
/// The algebra map `β ↦ f_β β` carries the standard relations onto the
/// input relations up to scalars; equivalently, writing the input relations
/// in the rescaled arrows `β' = f_β β` gives every term coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub presentation: Presentation,
    #[serde(serialize_with = "rational_map")]
    pub scaling: IndexMap<String, BigRational>,
}

fn rational_map<S: Serializer>(m: &IndexMap<String, BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(k, v)| (k, v.to_string())))
}

/// Relations rewritten in the arrows `β' = f_β β`: each term coefficient is
/// divided by the product of `f_β` along its path.
pub fn rescale_relations(p: &Presentation, scaling: &IndexMap<String, BigRational>) -> Result<Presentation> {
    let rels = p
        .relations()
        .iter()
        .map(|r| {
            let terms = r.terms().iter().map(|t| {
                let f: BigRational = t
                    .path
                    .arrows()
                    .iter()
                    .map(|a| scaling.get(a).cloned().unwrap_or_else(BigRational::one))
                    .product();
                (&t.coeff / f, t.path.clone())
            });
            Relation::new(r.tag().map(str::to_string), terms)
        })
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(p.quiver().clone(), rels)
}

/// Finds arrow scalars that bring an (R1)/(R2) presentation to standard form.
///
/// Each step takes the first coefficient `λ ≠ 1` (after scaling every
/// relation to lead with 1), ordered by (antiparallel arrow, path), say on
/// the path `φ` of the relation at `ξ`. With `Σ` a cut containing the first
/// arrow of `φ` and `Γ̄` the closure of `φ` in the decomposition at `ξ`, the
/// arrows of `Σ ∩ Γ̄` are scaled by `λ`. This fixes that coefficient and
/// leaves every other ratio unchanged.
pub fn normalize_coefficients(p: &Presentation) -> Result<Normalization> {
    let check = check_r1_r2(p);
    if !check.ok {
        return Err(Error::RelationShape(check.diagnostics));
    }
    let q = p.quiver();
    let mut scaling: IndexMap<String, BigRational> =
        q.arrows().iter().map(|a| (a.id.clone(), BigRational::one())).collect();
    let budget: usize = p.relations().iter().map(|r| r.terms().len()).sum::<usize>() + 1;

    for _ in 0..budget {
        let current = rescale_relations(p, &scaling)?;
        let mut target = None;
        for r in current.relations() {
            let xi = antiparallel_arrow(q, r.source(), r.target(), r.tag()).expect("checked above");
            let n = r.normalized();
            for t in n.terms() {
                if !t.coeff.is_one() {
                    let key = (xi.clone(), t.path.arrows().to_vec());
                    if target.as_ref().is_none_or(|(k, _)| key < *k) {
                        target = Some((key, t.coeff.clone()));
                    }
                }
            }
        }
        let Some(((xi, phi), lambda)) = target else {
            let standard = crate::algebra::standard::standard_relations(q)?;
            verify_normalization(p, &scaling, &standard)?;
            return Ok(Normalization {
                presentation: standard,
                scaling,
            });
        };

        let host = component_quiver(q, &xi);
        let sigma = cut_containing(&host, &phi[0])?;
        let dec = decompose_at_arrow(&host, &xi)?;
        let i = dec
            .paths
            .iter()
            .position(|d| *d == phi)
            .ok_or_else(|| Error::Invariant(format!("`{}` is not antiparallel to `{xi}`", phi.join("·"))))?;
        let closure = &dec.closures[i];
        for a in sigma.arrows() {
            if closure.arrow(a).is_some() {
                let f = scaling.get_mut(a).unwrap();
                *f *= &lambda;
            }
        }
    }
    Err(Error::Invariant("normalization did not terminate".into()))
}

fn component_quiver(q: &Quiver, arrow: &str) -> Quiver {
    let v = q.ends(q.arrow_index(arrow).unwrap()).0;
    let comp = q
        .component_indices()
        .into_iter()
        .find(|c| c.contains(&v))
        .unwrap();
    let mut mask = vec![false; q.vertex_count()];
    for u in comp {
        mask[u] = true;
    }
    q.restrict(&mask, &vec![true; q.arrow_count()])
}

fn verify_normalization(
    p: &Presentation,
    scaling: &IndexMap<String, BigRational>,
    standard: &Presentation,
) -> Result<()> {
    if scaling.values().any(Zero::is_zero) {
        return Err(Error::Invariant("zero arrow scalar".into()));
    }
    let rescaled = rescale_relations(p, scaling)?;
    let q = p.quiver();
    for r in rescaled.relations() {
        let xi = antiparallel_arrow(q, r.source(), r.target(), r.tag()).unwrap();
        let expected = standard.relation_tagged(&xi).expect("standard relation for every cyclic arrow");
        let mut got = r.normalized().with_tag(Some(xi.clone()));
        got = Relation::new(got.tag().map(str::to_string), got.terms().iter().map(|t| (t.coeff.clone(), t.path.clone())))?;
        if got != *expected {
            return Err(Error::Invariant(format!("relation at `{xi}` is not standard after rescaling")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::quiver::{make_cycle, make_g};

    fn g22_with(lambda: i64, drop_second: bool) -> Presentation {
        let g = make_g(2, 2).unwrap();
        let std = standard_relations(&g).unwrap();
        let rels = std
            .relations()
            .iter()
            .map(|r| {
                if r.tag() != Some("eta") {
                    return r.clone();
                }
                let mut terms: Vec<_> = r.terms().iter().map(|t| (t.coeff.clone(), t.path.clone())).collect();
                if drop_second {
                    terms.pop();
                } else {
                    terms[1].0 = q(lambda);
                }
                Relation::new(Some("eta".into()), terms).unwrap()
            })
            .collect();
        Presentation::new(g, rels).unwrap()
    }

    #[test]
    fn cyclic_arrows_of_catalog() {
        assert_eq!(cyclic_arrows(&make_cycle(4).unwrap()).unwrap().len(), 4);
        assert_eq!(cyclic_arrows(&make_g(2, 2).unwrap()).unwrap().len(), 5);
        let pendant = Quiver::new(
            ["1", "2", "3", "4"],
            [("a1", "1", "2"), ("a2", "2", "3"), ("a3", "3", "1"), ("p", "3", "4")],
        )
        .unwrap();
        assert_eq!(cyclic_arrows(&pendant).unwrap(), ["a1", "a2", "a3"]);
    }

    #[test]
    fn standard_g22() {
        let std = standard_relations(&make_g(2, 2).unwrap()).unwrap();
        assert_eq!(std.relations().len(), 5);
        let eta = std.relation_tagged("eta").unwrap();
        assert_eq!(eta.terms().len(), 2);
        assert!(eta.terms().iter().all(|t| t.coeff.is_one() && t.path.len() == 2));
        assert!(check_r1_r2(&std).ok);
    }

    #[test]
    fn shape_diagnostics() {
        assert!(check_r1_r2(&g22_with(5, false)).ok);
        let bad = check_r1_r2(&g22_with(1, true));
        assert!(!bad.ok);
        assert!(bad.diagnostics.contains(&"support incomplete at eta".to_string()));
    }

    #[test]
    fn normalize_g22() {
        let n = normalize_coefficients(&g22_with(5, false)).unwrap();
        let changed: Vec<(&String, &BigRational)> = n.scaling.iter().filter(|(_, f)| !f.is_one()).collect();
        assert_eq!(changed.len(), 1);
        assert_eq!(*changed[0].1, q(5));
        assert!(changed[0].0.starts_with('b'));
        assert_eq!(n.presentation, standard_relations(&make_g(2, 2).unwrap()).unwrap());
    }

    #[test]
    fn normalize_identity() {
        let std = standard_relations(&make_cycle(3).unwrap()).unwrap();
        let n = normalize_coefficients(&std).unwrap();
        assert!(n.scaling.values().all(One::is_one));
    }
}
