//! Relation-extension quivers and the round trip between cyclically oriented
//! quivers and the quotients of their standard algebras by admissible cuts.
//!
//! The extension quiver of `A = kQ/I` is `Q` plus one arrow `e(ρ) -> s(ρ)`
//! per minimal relation `ρ`. No Ext groups are computed.

use std::collections::{BTreeMap, HashSet};

use num::rational::BigRational;
use num::Zero;
use serde::Serialize;

use crate::algebra::pathspace::PathAlgebra;
use crate::algebra::relation::{Presentation, Relation};
use crate::algebra::standard::standard_relations;
use crate::cuts::{enumerate_admissible_cuts, quotient_by_cut, AdmissibleCut};
use crate::cycles::is_cyclically_oriented;
use crate::error::{Error, Result};
use crate::iso::{induced_arrow_map, quiver_isomorphic};
use crate::linalg::q;
use crate::quiver::Quiver;

/// The arrow added for one relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewArrow {
    pub relation: usize,
    pub arrow: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionResult {
    pub quiver: Quiver,
    pub new_arrows: Vec<NewArrow>,
    pub cyclically_oriented: bool,
    /// A non-oriented chordless cycle, or a loop/2-cycle/multiple-arrow
    /// violation, when the extension quiver is not cyclically oriented.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// Standard relations of the extension quiver; `None` outside the
    /// cyclically oriented setting.
    pub reconstructed: Option<Presentation>,
    pub outside_theorem_scope: bool,
}

/// Extension quiver of an algebra with acyclic quiver.
pub fn relation_extension_quiver(a: &Presentation) -> Result<ExtensionResult> {
    relation_extension_quiver_with(a, false)
}

/// As [`relation_extension_quiver`]; `allow_cycles` skips the requirement
/// that the quiver of `a` be acyclic.
pub fn relation_extension_quiver_with(a: &Presentation, allow_cycles: bool) -> Result<ExtensionResult> {
    let q = a.quiver();
    if !allow_cycles && !q.is_acyclic() {
        return Err(Error::NotTriangular);
    }
    PathAlgebra::new(a)?.check_minimal()?;

    let mut used: HashSet<String> = q.arrows().iter().map(|x| x.id.clone()).collect();
    let mut arrows: Vec<(String, String, String)> =
        q.arrows().iter().map(|x| (x.id.clone(), x.from.clone(), x.to.clone())).collect();
    let mut new_arrows = Vec::new();
    for (k, r) in a.relations().iter().enumerate() {
        let mut id = match r.tag() {
            Some(t) if !used.contains(t) => t.to_string(),
            _ => format!("r{k}"),
        };
        while used.contains(&id) {
            id.push('\'');
        }
        used.insert(id.clone());
        arrows.push((id.clone(), r.target().to_string(), r.source().to_string()));
        new_arrows.push(NewArrow { relation: k, arrow: id });
    }
    let ext = Quiver::new(q.vertices().iter().cloned(), arrows)?;

    let report = ext.validate();
    let (cyclically_oriented, witness) = if report.is_simple() {
        let check = is_cyclically_oriented(&ext)?;
        (check.cyclically_oriented, check.witness.map(|c| c.vertices().to_vec()))
    } else {
        (false, Some(report.violations()))
    };
    let reconstructed = if cyclically_oriented {
        Some(standard_relations(&ext)?)
    } else {
        None
    };
    Ok(ExtensionResult {
        quiver: ext,
        new_arrows,
        cyclically_oriented,
        witness,
        outside_theorem_scope: reconstructed.is_none(),
        reconstructed,
    })
}

/// Outcome of the round trip for one cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutRoundTrip {
    pub cut: Vec<String>,
    pub isomorphic: bool,
    pub relations_match: bool,
    pub passed: bool,
}

/// For every cut `Σ` of `q`, rebuilds the extension of the quotient of the
/// standard algebra by `Σ` and compares it with `q` and its standard
/// relations, transported along the quiver isomorphism found.
pub fn check_cut_theorem(q: &Quiver) -> Result<Vec<CutRoundTrip>> {
    let standard = standard_relations(q)?;
    PathAlgebra::new(&standard)?;
    let mut reports = Vec::new();
    for cut in enumerate_admissible_cuts(q)? {
        let a = quotient_by_cut(&standard, &cut)?;
        let ext = relation_extension_quiver(&a)?;
        let iso = quiver_isomorphic(&ext.quiver, q)?;
        let relations_match = match (&iso, &ext.reconstructed) {
            (Some(vm), Some(rec)) => {
                let am = induced_arrow_map(&ext.quiver, q, vm)
                    .ok_or_else(|| Error::Invariant("isomorphism does not induce an arrow map".into()))?;
                let moved = rec
                    .relations()
                    .iter()
                    .map(|r| {
                        let tag = r.tag().map(|t| am.get(t).cloned().unwrap_or_else(|| t.to_string()));
                        let terms = r.terms().iter().map(|t| {
                            (t.coeff.clone(), t.path.relabel(|v| vm[v].clone(), |x| am[x].clone()))
                        });
                        Relation::new(tag, terms)
                    })
                    .collect::<Result<Vec<_>>>()?;
                by_tag(&moved) == by_tag(standard.relations())
            }
            _ => false,
        };
        reports.push(CutRoundTrip {
            cut: cut.arrows().to_vec(),
            isomorphic: iso.is_some(),
            relations_match,
            passed: iso.is_some() && relations_match,
        });
    }
    Ok(reports)
}

fn by_tag(rels: &[Relation]) -> BTreeMap<Option<String>, Vec<String>> {
    let mut out: BTreeMap<Option<String>, Vec<String>> = BTreeMap::new();
    for r in rels {
        out.entry(r.tag().map(str::to_string)).or_default().push(r.to_string());
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

/// Summary of the inclusion `A -> C` and projection `C -> A` for a cut
/// quotient `A` of the standard algebra `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitExtension {
    pub dim_a: usize,
    pub dim_c: usize,
    /// Basis paths of `C` avoiding the cut.
    pub degree_zero_dim: usize,
    pub identity_verified: bool,
}

/// Checks that including the paths of `A` into `C = standard(Q̃)` and then
/// killing the cut arrows is the identity on a basis of `A`.
pub fn split_extension_maps(a: &Presentation, cut: &AdmissibleCut) -> Result<SplitExtension> {
    let host = cut.host();
    let c = standard_relations(host)?;
    let expected = quotient_by_cut(&c, cut)?;
    if expected.quiver() != a.quiver() {
        return Err(Error::InvalidParameter("algebra is not the quotient by this cut".into()));
    }
    let alg_a = PathAlgebra::new(a)?;
    let alg_c = PathAlgebra::new(&c)?;
    let mismatch = |what: String| Error::Invariant(format!("dimension mismatch: {what}"));

    let mut degree_zero = 0;
    for i in host.vertices() {
        for j in host.vertices() {
            let basis_a = alg_a.space(i, j)?.basis;
            let basis_c = alg_c.space(i, j)?.basis;
            let zero_c: Vec<usize> = (0..basis_c.len())
                .filter(|&k| !basis_c[k].arrows().iter().any(|x| cut.contains(x)))
                .collect();
            degree_zero += zero_c.len();
            if zero_c.len() != basis_a.len() {
                return Err(mismatch(format!(
                    "{i}->{j}: {} paths in A, {} cut-free basis paths in C",
                    basis_a.len(),
                    zero_c.len()
                )));
            }
            // images of the C-basis under the projection, in A-coordinates
            let proj: Vec<Vec<_>> = basis_c
                .iter()
                .map(|p| {
                    if p.arrows().iter().any(|x| cut.contains(x)) {
                        Ok(vec![BigRational::zero(); basis_a.len()])
                    } else {
                        alg_a.reduce(p)
                    }
                })
                .collect::<Result<_>>()?;
            for (k, b) in basis_a.iter().enumerate() {
                let in_c = alg_c.reduce(b)?;
                for m in 0..basis_a.len() {
                    let got: BigRational = in_c.iter().zip(&proj).map(|(x, y)| x * &y[m]).sum();
                    if got != q(i64::from(m == k)) {
                        return Err(Error::Invariant(format!("projection after inclusion moves `{b}`")));
                    }
                }
            }
        }
    }
    let (dim_a, dim_c) = (alg_a.total_dim(), alg_c.total_dim());
    if degree_zero != dim_a {
        return Err(mismatch(format!("A has dimension {dim_a}, C has {degree_zero} cut-free basis paths")));
    }
    Ok(SplitExtension {
        dim_a,
        dim_c,
        degree_zero_dim: degree_zero,
        identity_verified: true,
    })
}
