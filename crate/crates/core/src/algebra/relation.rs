//! Relations and presentations `kQ/I`, with their JSON form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{Path, Quiver};

/// One summand `coeff · path` of a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub path: Path,
}

/// A rational linear combination of pairwise parallel paths.
///
/// Terms are kept with nonzero coefficients, distinct paths, and sorted by
/// their arrow-id sequences. The optional tag names the arrow the relation is
/// antiparallel to (or any free label).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    tag: Option<String>,
    terms: Vec<Term>,
}

impl Relation {
    pub fn new(tag: Option<String>, terms: impl IntoIterator<Item = (BigRational, Path)>) -> Result<Relation> {
        let mut merged: BTreeMap<Path, BigRational> = BTreeMap::new();
        let mut ends: Option<(String, String)> = None;
        for (c, p) in terms {
            let e = (p.source().to_string(), p.target().to_string());
            match &ends {
                None => ends = Some(e),
                Some(prev) if *prev != e => {
                    return Err(Error::Malformed(format!(
                        "relation mixes paths {}→{} and {}→{}",
                        prev.0, prev.1, e.0, e.1
                    )))
                }
                _ => {}
            }
            *merged.entry(p).or_insert_with(BigRational::zero) += c;
        }
        let terms: Vec<Term> = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(path, coeff)| Term { coeff, path })
            .collect();
        if terms.is_empty() {
            return Err(Error::Malformed("relation is zero".into()));
        }
        Ok(Relation { tag, terms })
    }

    /// Sum of the given paths with coefficient 1.
    pub fn sum(tag: Option<String>, paths: impl IntoIterator<Item = Path>) -> Result<Relation> {
        Relation::new(tag, paths.into_iter().map(|p| (BigRational::one(), p)))
    }

    pub fn tag(&self) -> Option<&str> {
        self.tag.as_deref()
    }

    pub fn with_tag(mut self, tag: Option<String>) -> Relation {
        self.tag = tag;
        self
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn source(&self) -> &str {
        self.terms[0].path.source()
    }

    pub fn target(&self) -> &str {
        self.terms[0].path.target()
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.terms.iter().map(|t| &t.path)
    }

    pub fn max_len(&self) -> usize {
        self.paths().map(Path::len).max().unwrap_or(0)
    }

    pub fn min_len(&self) -> usize {
        self.paths().map(Path::len).min().unwrap_or(0)
    }

    /// Scaled so the first term has coefficient 1.
    pub fn normalized(&self) -> Relation {
        let lead = self.terms[0].coeff.clone();
        Relation {
            tag: self.tag.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff / &lead,
                    path: t.path.clone(),
                })
                .collect(),
        }
    }

    /// True when the relation is a plain sum of its paths up to a common scalar.
    pub fn is_unit_sum(&self) -> bool {
        let lead = &self.terms[0].coeff;
        self.terms.iter().all(|t| &t.coeff == lead)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if t.coeff.is_one() {
                write!(f, "{}", t.path)?;
            } else {
                write!(f, "({})·{}", t.coeff, t.path)?;
            }
        }
        Ok(())
    }
}

/// A quiver with a list of relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PresentationDoc", into = "PresentationDoc")]
pub struct Presentation {
    quiver: Quiver,
    relations: Vec<Relation>,
}

impl Presentation {
    /// Checks that every path lives in `quiver` and has length at least 2.
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<Presentation> {
        for (k, r) in relations.iter().enumerate() {
            for p in r.paths() {
                if p.len() < 2 {
                    return Err(Error::Malformed(format!("relation {k}: path `{p}` has length < 2")));
                }
                let rebuilt = quiver.path(p.arrows())?;
                if rebuilt != *p {
                    return Err(Error::Malformed(format!("relation {k}: path `{p}` has wrong endpoints")));
                }
            }
        }
        Ok(Presentation { quiver, relations })
    }

    /// The path algebra `kQ` itself.
    pub fn free(quiver: Quiver) -> Presentation {
        Presentation {
            quiver,
            relations: Vec::new(),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Relation tagged `tag`, if any.
    pub fn relation_tagged(&self, tag: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.tag() == Some(tag))
    }

    /// Builds a relation on this quiver from arrow-id sequences.
    pub fn relation_from_ids<S: AsRef<str>>(
        quiver: &Quiver,
        tag: Option<&str>,
        terms: &[(BigRational, &[S])],
    ) -> Result<Relation> {
        let terms = terms
            .iter()
            .map(|(c, ids)| Ok((c.clone(), quiver.path(ids)?)))
            .collect::<Result<Vec<_>>>()?;
        Relation::new(tag.map(str::to_string), terms)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    coeff: String,
    path: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arrow: Option<String>,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDoc {
    quiver: Quiver,
    #[serde(default)]
    relations: Vec<RelationDoc>,
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Malformed(format!("bad coefficient `{s}`"));
    let r = BigRational::from_str(s.trim()).map_err(|_| bad())?;
    Ok(r)
}

impl TryFrom<PresentationDoc> for Presentation {
    type Error = Error;

    fn try_from(doc: PresentationDoc) -> Result<Self> {
        let mut relations = Vec::with_capacity(doc.relations.len());
        for r in doc.relations {
            let terms = r
                .terms
                .iter()
                .map(|t| Ok((parse_rational(&t.coeff)?, doc.quiver.path(&t.path)?)))
                .collect::<Result<Vec<_>>>()?;
            relations.push(Relation::new(r.arrow, terms)?);
        }
        Presentation::new(doc.quiver, relations)
    }
}

impl From<Presentation> for PresentationDoc {
    fn from(p: Presentation) -> Self {
        PresentationDoc {
            relations: p
                .relations
                .iter()
                .map(|r| RelationDoc {
                    arrow: r.tag.clone(),
                    terms: r
                        .terms
                        .iter()
                        .map(|t| TermDoc {
                            coeff: t.coeff.to_string(),
                            path: t.path.arrows().to_vec(),
                        })
                        .collect(),
                })
                .collect(),
            quiver: p.quiver,
        }
    }
}
