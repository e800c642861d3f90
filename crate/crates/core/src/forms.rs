//! Cartan matrices, Euler forms, root counts, Dynkin and extended Dynkin
//! labels, quasi-Cartan companions and Coxeter polynomials.
//!
//! Conventions: the Cartan matrix has rows indexed by source vertices, so
//! `C[i][j]` counts paths `i -> j` in a basis of `A`. The Euler form is
//! `⟨x, y⟩ = x·E·yᵀ` with `E = C⁻ᵀ`, and the symmetric form is `E + Eᵀ`, so
//! the quadratic form is `q(x) = x·(E + Eᵀ)·xᵀ / 2`. The Coxeter matrix is
//! `Φ = -C⁻¹·Cᵀ`.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::pathspace::PathAlgebra;
use crate::algebra::relation::Presentation;
use crate::error::{Error, Result};
use crate::linalg::{q, QMatrix};
use crate::quiver::Quiver;

/// Arrow bound for [`quasi_cartan_companions`].
pub const MAX_COMPANION_ARROWS: usize = 20;

/// `C[i][j] = dim e_j A e_i`, rows indexed by source vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    pub vertices: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn to_qmatrix(&self) -> QMatrix {
        QMatrix::from_i64(&self.entries)
    }
}

pub fn cartan_matrix(a: &Presentation) -> Result<CartanMatrix> {
    let alg = PathAlgebra::new(a)?;
    Ok(CartanMatrix {
        vertices: a.quiver().vertices().to_vec(),
        entries: alg
            .dimension_table()
            .into_iter()
            .map(|row| row.into_iter().map(|d| d as i64).collect())
            .collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite { corank: usize },
    Indefinite,
}

impl Definiteness {
    pub fn corank(self) -> Option<usize> {
        match self {
            Definiteness::PositiveDefinite => Some(0),
            Definiteness::PositiveSemidefinite { corank } => Some(corank),
            Definiteness::Indefinite => None,
        }
    }
}

/// A symmetric rational matrix with its definiteness and, when semidefinite,
/// a radical basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricForm {
    #[serde(serialize_with = "matrix_strings")]
    pub matrix: QMatrix,
    pub definiteness: Definiteness,
    #[serde(serialize_with = "vectors_strings")]
    pub radical: Vec<Vec<BigRational>>,
}

fn matrix_strings<S: Serializer>(m: &QMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    vectors_strings(&m.to_rows(), s)
}

fn vectors_strings<S: Serializer>(v: &[Vec<BigRational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>()))
}

impl SymmetricForm {
    /// Classifies a symmetric matrix.
    pub fn new(matrix: QMatrix) -> Result<SymmetricForm> {
        if matrix.rows() != matrix.cols() || !matrix.is_symmetric() {
            return Err(Error::InvalidParameter("form matrix is not symmetric".into()));
        }
        let definiteness = classify_symmetric(&matrix);
        let radical = match definiteness {
            Definiteness::PositiveSemidefinite { .. } => matrix.kernel(),
            _ => Vec::new(),
        };
        Ok(SymmetricForm {
            matrix,
            definiteness,
            radical,
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `x·M·xᵀ` for an integer vector.
    pub fn eval(&self, x: &[i64]) -> BigRational {
        let n = self.dim();
        let mut s = BigRational::zero();
        for i in 0..n {
            for j in 0..n {
                if x[i] != 0 && x[j] != 0 {
                    s += &self.matrix[(i, j)] * q(x[i] * x[j]);
                }
            }
        }
        s
    }

    /// Leading principal minors, the Sylvester certificate for definiteness.
    pub fn leading_minors(&self) -> Vec<BigRational> {
        self.matrix.leading_minors()
    }

    /// Form on the coordinates other than `k`.
    pub fn delete(&self, k: usize) -> Result<SymmetricForm> {
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| i != k).collect();
        SymmetricForm::new(self.matrix.submatrix(&keep))
    }
}

/// Symmetric Gaussian elimination: a negative pivot, or a zero diagonal with
/// a nonzero row, means indefinite; otherwise the number of vanishing rows
/// is the corank.
fn classify_symmetric(m: &QMatrix) -> Definiteness {
    let n = m.rows();
    let mut a = m.clone();
    let mut live: Vec<usize> = (0..n).collect();
    let mut corank = 0;
    while !live.is_empty() {
        if let Some(pos) = live.iter().position(|&i| a[(i, i)].is_positive()) {
            let p = live.remove(pos);
            let pivot = a[(p, p)].clone();
            for &i in &live {
                let f = &a[(i, p)] / &pivot;
                if f.is_zero() {
                    continue;
                }
                for &j in &live {
                    let v = &f * &a[(p, j)];
                    a[(i, j)] -= v;
                }
            }
            continue;
        }
        if live.iter().any(|&i| a[(i, i)].is_negative()) {
            return Definiteness::Indefinite;
        }
        // all remaining diagonal entries vanish
        if live.iter().any(|&i| live.iter().any(|&j| !a[(i, j)].is_zero())) {
            return Definiteness::Indefinite;
        }
        corank = live.len();
        break;
    }
    if corank == 0 {
        Definiteness::PositiveDefinite
    } else {
        Definiteness::PositiveSemidefinite { corank }
    }
}

/// The Euler form `E = C⁻ᵀ`.
pub fn euler_matrix(a: &Presentation) -> Result<QMatrix> {
    let c = cartan_matrix(a)?.to_qmatrix();
    Ok(c.inverse().ok_or(Error::SingularCartan)?.transpose())
}

/// `E + Eᵀ` for the Euler form `E` of `a`.
pub fn euler_symmetrized(a: &Presentation) -> Result<SymmetricForm> {
    let e = euler_matrix(a)?;
    SymmetricForm::new(e.add(&e.transpose()))
}

/// Number of integer `x` with `x·M·xᵀ = 2` (roots of the unit form
/// `q = x·M·xᵀ / 2`). Coordinates are enumerated over the exact ranges given
/// by an `LDLᵀ` factorisation, so no box is assumed; in the simple-root basis
/// of a Dynkin form this stays inside `|x_i| ≤ 6`.
pub fn count_roots(f: &SymmetricForm) -> Result<usize> {
    if f.definiteness != Definiteness::PositiveDefinite {
        return Err(Error::NotPositiveDefinite);
    }
    let n = f.dim();
    if let Some(i) = (0..n).find(|&i| f.matrix[(i, i)] != q(2)) {
        return Err(Error::NotUnitForm(format!("{i} is {}/2", f.matrix[(i, i)])));
    }
    let (l, d) = ldl(&f.matrix);
    let mut x = vec![0i64; n];
    let mut count = 0;
    search_roots(&l, &d, n, &q(2), &mut x, &mut count);
    // x = 0 never counts; the budget check requires equality with 2
    Ok(count)
}

/// `M = L·D·Lᵀ` with `L` unit lower triangular, for positive definite `M`.
fn ldl(m: &QMatrix) -> (QMatrix, Vec<BigRational>) {
    let n = m.rows();
    let mut l = QMatrix::identity(n);
    let mut d = vec![BigRational::zero(); n];
    for j in 0..n {
        let mut dj = m[(j, j)].clone();
        for k in 0..j {
            dj -= &l[(j, k)] * &l[(j, k)] * &d[k];
        }
        d[j] = dj;
        for i in j + 1..n {
            let mut v = m[(i, j)].clone();
            for k in 0..j {
                v -= &l[(i, k)] * &l[(j, k)] * &d[k];
            }
            l[(i, j)] = v / &d[j];
        }
    }
    (l, d)
}

// x·M·xᵀ = Σ_k d_k (x_k + Σ_{i>k} L_ik x_i)²; coordinates are fixed from the
// last one down, so term k is known once x_k is chosen, and the admissible
// x_k form an interval around -shift.
fn search_roots(l: &QMatrix, d: &[BigRational], k: usize, budget: &BigRational, x: &mut [i64], count: &mut usize) {
    if k == 0 {
        if budget.is_zero() {
            *count += 1;
        }
        return;
    }
    let k = k - 1;
    let n = x.len();
    let mut shift = BigRational::zero();
    for i in k + 1..n {
        if x[i] != 0 {
            shift += &l[(i, k)] * q(x[i]);
        }
    }
    let fits = |v: i64| -> Option<BigRational> {
        let t = q(v) + &shift;
        let used = &d[k] * &t * &t;
        (used <= *budget).then(|| budget - used)
    };
    let centre: i64 = (-&shift).round().to_integer().try_into().expect("root coordinate fits in i64");
    let mut lo = centre;
    while fits(lo - 1).is_some() {
        lo -= 1;
    }
    let mut v = lo;
    loop {
        match fits(v) {
            Some(rest) => {
                x[k] = v;
                search_roots(l, d, k, &rest, x, count);
            }
            None if v > centre => break,
            None => {}
        }
        v += 1;
    }
    x[k] = 0;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    A,
    D,
    E,
    #[serde(rename = "A~")]
    ATilde,
    #[serde(rename = "D~")]
    DTilde,
    #[serde(rename = "E~")]
    ETilde,
    #[serde(rename = "none")]
    None,
}

/// A Dynkin or extended Dynkin label. For the extended families the rank is
/// one less than the number of vertices, as in `Ã_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: usize,
}

impl TypeLabel {
    pub const NONE: TypeLabel = TypeLabel {
        family: Family::None,
        rank: 0,
    };

    pub fn new(family: Family, rank: usize) -> TypeLabel {
        TypeLabel { family, rank }
    }

    fn extended(self) -> TypeLabel {
        let family = match self.family {
            Family::A => Family::ATilde,
            Family::D => Family::DTilde,
            Family::E => Family::ETilde,
            other => other,
        };
        TypeLabel { family, ..self }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
            Family::ATilde => "A~",
            Family::DTilde => "D~",
            Family::ETilde => "E~",
            Family::None => return write!(f, "none"),
        };
        write!(f, "{name}{}", self.rank)
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Dynkin label of a connected positive definite unit form in `n` variables
/// with the given number of roots.
pub fn dynkin_from_roots(n: usize, roots: usize) -> TypeLabel {
    match (n, roots) {
        (n, r) if r == n * (n + 1) && n >= 1 => TypeLabel::new(Family::A, n),
        (n, r) if n >= 4 && r == 2 * n * (n - 1) => TypeLabel::new(Family::D, n),
        (6, 72) | (7, 126) | (8, 240) => TypeLabel::new(Family::E, n),
        _ => TypeLabel::NONE,
    }
}

/// Extended Dynkin label suggested by the entries of a positive radical
/// vector, when they match an affine null root.
pub fn extended_from_delta(delta: &[BigInt]) -> Option<TypeLabel> {
    let mut d: Vec<i64> = delta.iter().map(|x| x.try_into().ok()).collect::<Option<_>>()?;
    d.sort_unstable();
    let n = d.len();
    let ones = d.iter().filter(|&&x| x == 1).count();
    if n >= 2 && ones == n {
        return Some(TypeLabel::new(Family::ATilde, n - 1));
    }
    if n >= 5 && ones == 4 && d[4..].iter().all(|&x| x == 2) {
        return Some(TypeLabel::new(Family::DTilde, n - 1));
    }
    match d.as_slice() {
        [1, 1, 1, 2, 2, 2, 3] => Some(TypeLabel::new(Family::ETilde, 6)),
        [1, 1, 2, 2, 2, 3, 3, 4] => Some(TypeLabel::new(Family::ETilde, 7)),
        [1, 2, 2, 3, 3, 4, 4, 5, 6] => Some(TypeLabel::new(Family::ETilde, 8)),
        _ => None,
    }
}

/// Full classification data for a triangular algebra.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub cartan: CartanMatrix,
    pub form: SymmetricForm,
    pub corank: Option<usize>,
    /// Roots of the form when positive definite.
    pub roots: Option<usize>,
    /// Primitive radical vector, sign chosen so its first nonzero entry is positive.
    #[serde(serialize_with = "opt_ints")]
    pub delta: Option<Vec<BigInt>>,
    #[serde(rename = "type")]
    pub label: TypeLabel,
    #[serde(serialize_with = "ints")]
    pub coxeter_polynomial: Vec<BigInt>,
    pub diagnostics: Vec<String>,
}

fn ints<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn opt_ints<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => ints(v, s),
        None => s.serialize_none(),
    }
}

/// Dynkin label of a triangular algebra; see [`classify`].
pub fn classify_type(a: &Presentation) -> Result<TypeLabel> {
    Ok(classify(a)?.label)
}

/// Positive definite forms are labelled by their root count. Corank-one
/// semidefinite forms get the extended label of the form left after deleting
/// a coordinate where the primitive radical vector is `±1`; this form is the
/// one induced on the lattice modulo the radical.
pub fn classify(a: &Presentation) -> Result<Classification> {
    if !a.quiver().is_acyclic() {
        return Err(Error::NotTriangular);
    }
    let cartan = cartan_matrix(a)?;
    let form = euler_symmetrized(a)?;
    let coxeter_polynomial = coxeter_polynomial(a)?;
    let n = form.dim();
    let mut diagnostics = Vec::new();
    let mut roots = None;
    let mut delta = None;
    let label = match form.definiteness {
        Definiteness::PositiveDefinite => {
            let r = count_roots(&form)?;
            roots = Some(r);
            let label = dynkin_from_roots(n, r);
            if label.family == Family::None {
                diagnostics.push(format!("{r} roots in rank {n} match no connected Dynkin diagram"));
            }
            label
        }
        Definiteness::PositiveSemidefinite { corank: 1 } => {
            let d = primitive(&form.radical[0]);
            let label = match d.iter().position(|x| x.abs().is_one()) {
                Some(k) => {
                    let sub = form.delete(k)?;
                    let r = count_roots(&sub)?;
                    let base = dynkin_from_roots(n - 1, r);
                    if base.family == Family::None {
                        diagnostics.push(format!("form off the radical has {r} roots in rank {}", n - 1));
                    }
                    base.extended()
                }
                None => {
                    diagnostics.push("no radical coordinate equal to ±1".into());
                    TypeLabel::NONE
                }
            };
            if d.iter().all(|x| x.is_positive()) {
                if let Some(by_delta) = extended_from_delta(&d) {
                    if by_delta != label {
                        diagnostics.push(format!("radical vector suggests {by_delta}, sub-form gives {label}"));
                    }
                }
            }
            delta = Some(d);
            label
        }
        Definiteness::PositiveSemidefinite { corank } => {
            diagnostics.push(format!("semidefinite of corank {corank}"));
            TypeLabel::NONE
        }
        Definiteness::Indefinite => {
            diagnostics.push("indefinite form".into());
            TypeLabel::NONE
        }
    };
    Ok(Classification {
        cartan,
        corank: form.definiteness.corank(),
        form,
        roots,
        delta,
        label,
        coxeter_polynomial,
        diagnostics,
    })
}

/// Integer multiple of `v` with coprime entries and first nonzero entry positive.
fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(BigInt::one(), |x| x.signum());
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x * &sign / &g).collect()
}

/// Outcome of the sign-pattern search over quasi-Cartan companions.
#[derive(Clone, Debug, Serialize)]
pub struct CompanionReport {
    pub patterns: u64,
    pub positive_definite: u64,
    pub semidefinite_corank_one: u64,
    pub example_positive_definite: Option<SymmetricForm>,
    pub example_semidefinite: Option<SymmetricForm>,
}

impl CompanionReport {
    pub fn has_positive_definite(&self) -> bool {
        self.positive_definite > 0
    }

    pub fn has_semidefinite_corank_one(&self) -> bool {
        self.semidefinite_corank_one > 0
    }
}

/// All symmetric `M` with `M_ii = 2` and `M_ij = ±1` exactly where an arrow
/// joins `i` and `j`. Patterns are fixed vertex by vertex and a branch is
/// dropped once a leading minor goes negative, which rules out both positive
/// definite and positive semidefinite completions.
pub fn quasi_cartan_companions(quiver: &Quiver) -> Result<CompanionReport> {
    quiver.validate().require_simple()?;
    if quiver.arrow_count() > MAX_COMPANION_ARROWS {
        return Err(Error::SizeBound {
            what: "arrow count",
            actual: quiver.arrow_count(),
            limit: MAX_COMPANION_ARROWS,
        });
    }
    let n = quiver.vertex_count();
    // edges grouped by their larger endpoint
    let mut by_vertex: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for a in 0..quiver.arrow_count() {
        let (s, t) = quiver.ends(a);
        by_vertex[s.max(t)].push((s.min(t), s.max(t)));
    }
    let mut m = QMatrix::identity(n).scale(&q(2));
    let mut report = CompanionReport {
        patterns: 1u64 << quiver.arrow_count(),
        positive_definite: 0,
        semidefinite_corank_one: 0,
        example_positive_definite: None,
        example_semidefinite: None,
    };
    companions_from(0, &by_vertex, &mut m, &mut report)?;
    Ok(report)
}

fn companions_from(
    v: usize,
    by_vertex: &[Vec<(usize, usize)>],
    m: &mut QMatrix,
    report: &mut CompanionReport,
) -> Result<()> {
    let n = by_vertex.len();
    if v == n {
        let form = SymmetricForm::new(m.clone())?;
        match form.definiteness {
            Definiteness::PositiveDefinite => {
                report.positive_definite += 1;
                report.example_positive_definite.get_or_insert(form);
            }
            Definiteness::PositiveSemidefinite { corank: 1 } => {
                report.semidefinite_corank_one += 1;
                report.example_semidefinite.get_or_insert(form);
            }
            _ => {}
        }
        return Ok(());
    }
    let edges = &by_vertex[v];
    for signs in 0u32..(1 << edges.len()) {
        for (b, &(i, j)) in edges.iter().enumerate() {
            let s = if signs >> b & 1 == 1 { q(1) } else { q(-1) };
            m[(i, j)] = s.clone();
            m[(j, i)] = s;
        }
        let minor = m.submatrix(&(0..=v).collect::<Vec<_>>()).det();
        if !minor.is_negative() {
            companions_from(v + 1, by_vertex, m, report)?;
        }
    }
    for &(i, j) in edges {
        m[(i, j)] = BigRational::zero();
        m[(j, i)] = BigRational::zero();
    }
    Ok(())
}

/// Characteristic polynomial of `Φ = -C⁻¹·Cᵀ`, coefficients from the
/// constant term up.
pub fn coxeter_polynomial(a: &Presentation) -> Result<Vec<BigInt>> {
    let c = cartan_matrix(a)?.to_qmatrix();
    let inv = c.inverse().ok_or(Error::SingularCartan)?;
    let phi = inv.mul(&c.transpose()).scale(&q(-1));
    phi.charpoly()
        .into_iter()
        .map(|x| {
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(Error::NonIntegral(x.to_string()))
            }
        })
        .collect()
}

/// Renders coefficients (constant term first) as a polynomial in `x`.
pub fn format_polynomial(coeffs: &[BigInt]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = match (k, mag.is_one()) {
            (0, _) => mag.to_string(),
            (1, true) => "x".to_string(),
            (1, false) => format!("{mag}x"),
            (_, true) => format!("x^{k}"),
            (_, false) => format!("{mag}x^{k}"),
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{sign} {body}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}
