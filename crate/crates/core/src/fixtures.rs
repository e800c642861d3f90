//! Built-in catalog of quivers and presentations.

use serde::{Deserialize, Serialize};

use crate::algebra::relation::{Presentation, Relation};
use crate::algebra::standard::standard_relations;
use crate::linalg::q;
use crate::quiver::{make_cycle, make_g, Quiver};

/// A named presentation; plain quivers carry no relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub presentation: Presentation,
}

impl Fixture {
    fn new(name: &str, description: &str, presentation: Presentation) -> Fixture {
        Fixture {
            name: name.into(),
            description: description.into(),
            presentation,
        }
    }

    fn quiver(name: &str, description: &str, q: Quiver) -> Fixture {
        Fixture::new(name, description, Presentation::free(q))
    }

    pub fn quiver_ref(&self) -> &Quiver {
        self.presentation.quiver()
    }
}

fn quiver(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
    Quiver::new(vertices.iter().copied(), arrows.iter().copied()).expect("fixture quiver")
}

fn with_relations(base: Quiver, relations: &[(Option<&str>, &[(i64, &[&str])])]) -> Presentation {
    let rels = relations
        .iter()
        .map(|(tag, terms)| {
            let terms: Vec<_> = terms.iter().map(|(c, ids)| (q(*c), *ids)).collect();
            Presentation::relation_from_ids(&base, *tag, &terms).expect("fixture relation")
        })
        .collect();
    Presentation::new(base, rels).expect("fixture presentation")
}

fn linear(n: usize) -> Quiver {
    let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> =
        (1..n).map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string())).collect();
    Quiver::new(vs, arrows).expect("linear quiver")
}

fn radical_square_zero_cycle(n: usize) -> Presentation {
    let c = make_cycle(n).expect("cycle");
    let rels = (1..=n)
        .map(|i| {
            let ids = [format!("a{i}"), format!("a{}", i % n + 1)];
            Relation::sum(None, [c.path(&ids).expect("path of the cycle")]).expect("relation")
        })
        .collect();
    Presentation::new(c, rels).expect("presentation")
}

/// Every fixture, in a fixed order.
pub fn fixtures() -> Vec<Fixture> {
    let mut out = vec![
        Fixture::quiver("C3", "oriented 3-cycle", make_cycle(3).unwrap()),
        Fixture::quiver("C4", "oriented 4-cycle", make_cycle(4).unwrap()),
        Fixture::quiver("C5", "oriented 5-cycle", make_cycle(5).unwrap()),
        Fixture::quiver(
            "G22",
            "two arms of length 2 from x to y closed by eta: y -> x",
            make_g(2, 2).unwrap(),
        ),
        Fixture::quiver(
            "G32",
            "arms of length 3 and 2 from x to y closed by eta: y -> x",
            make_g(3, 2).unwrap(),
        ),
        Fixture::quiver(
            "double-arrow",
            "double arrows 1 -> 2 and 2 -> 3 with one arrow 1 -> 3; mutation input",
            quiver(
                &["1", "2", "3"],
                &[
                    ("alpha1", "1", "2"),
                    ("alpha2", "1", "2"),
                    ("beta1", "2", "3"),
                    ("beta2", "2", "3"),
                    ("gamma1", "1", "3"),
                ],
            ),
        ),
        Fixture::new(
            "example13-B",
            "gldim 2 algebra with zero relation gamma·phi from 4 to 2",
            with_relations(
                quiver(
                    &["1", "2", "3", "4"],
                    &[("alpha", "1", "2"), ("beta", "1", "3"), ("phi", "4", "3"), ("gamma", "3", "2")],
                ),
                &[(None, &[(1, &["phi", "gamma"])])],
            ),
        ),
        Fixture::new(
            "example13-C",
            "gldim 2 algebra with zero relation phi·eta from 2 to 3",
            with_relations(
                quiver(
                    &["1", "2", "3", "4"],
                    &[("alpha", "1", "2"), ("beta", "1", "3"), ("phi", "4", "3"), ("eta", "2", "4")],
                ),
                &[(None, &[(1, &["eta", "phi"])])],
            ),
        ),
        Fixture::new(
            "commutative-square",
            "commutative square ab = cd",
            with_relations(
                quiver(
                    &["1", "2", "3", "4"],
                    &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
                ),
                &[(None, &[(1, &["a", "b"]), (-1, &["c", "d"])])],
            ),
        ),
        Fixture::new("C3-rad2", "oriented 3-cycle modulo all paths of length 2", radical_square_zero_cycle(3)),
    ];
    for n in 2..=5 {
        out.push(Fixture::quiver(&format!("A{n}"), "hereditary, linear orientation", linear(n)));
    }
    out.push(Fixture::quiver(
        "D4",
        "hereditary, arms into the branch vertex 3",
        quiver(&["1", "2", "3", "4"], &[("a1", "1", "3"), ("a2", "2", "3"), ("a3", "3", "4")]),
    ));
    out.push(Fixture::quiver(
        "D5",
        "hereditary, arms into the branch vertex 3",
        quiver(
            &["1", "2", "3", "4", "5"],
            &[("a1", "1", "3"), ("a2", "2", "3"), ("a3", "3", "4"), ("a4", "4", "5")],
        ),
    ));
    out.push(Fixture::quiver(
        "E6",
        "hereditary, all arrows towards the branch vertex 3",
        quiver(
            &["1", "2", "3", "4", "5", "6"],
            &[("a1", "1", "2"), ("a2", "2", "3"), ("a3", "4", "3"), ("a4", "5", "4"), ("a5", "6", "3")],
        ),
    ));
    out.push(Fixture::quiver(
        "D~4",
        "hereditary extended Dynkin, four arrows into the centre 5",
        quiver(
            &["1", "2", "3", "4", "5"],
            &[("a1", "1", "5"), ("a2", "2", "5"), ("a3", "3", "5"), ("a4", "4", "5")],
        ),
    ));
    out
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

/// Cyclically oriented catalog quivers.
pub fn cyclic_catalog() -> Vec<Fixture> {
    ["C3", "C4", "C5", "G22", "G32"]
        .iter()
        .map(|n| fixture(n).expect("catalog fixture"))
        .collect()
}

/// Standard presentation of a catalog quiver.
pub fn standard_fixture(name: &str) -> Option<Presentation> {
    standard_relations(fixture(name)?.quiver_ref()).ok()
}
