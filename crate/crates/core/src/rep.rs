//! Representations given by generator lists, their closures, spinning and
//! the irreducibility decision.

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commutant::{self, DivisionType};
use crate::error::{Error, Result};
use crate::linalg::nullspace::{rref, SpanBuilder};
use crate::linalg::{
    coordinates, format_rational, minimal_polynomial, parse_rational, Polynomial, Rational, RationalMatrix,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    LieAlgebra,
    Group,
}

impl Level {
    pub fn as_str(self) -> &'static str {
        match self {
            Level::LieAlgebra => "lie_algebra",
            Level::Group => "group",
        }
    }
}

/// A real matrix Lie algebra (or group) given by generators acting on `R^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub name: String,
    pub n: usize,
    pub level: Level,
    pub generators: Vec<RationalMatrix>,
}

impl Representation {
    pub fn new(name: impl Into<String>, level: Level, generators: Vec<RationalMatrix>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::validation("generator list is empty"))?;
        let n = first.rows();
        for (k, g) in generators.iter().enumerate() {
            if !g.is_square() {
                return Err(Error::format(format!("generator {k} not square")));
            }
            if g.rows() != n {
                return Err(Error::format(format!(
                    "generator {k} has size {}x{}, expected {n}x{n}",
                    g.rows(),
                    g.cols()
                )));
            }
        }
        if n == 0 {
            return Err(Error::format("generators must be at least 1x1"));
        }
        if level == Level::Group {
            if let Some(k) = generators.iter().position(|g| !g.is_invertible()) {
                return Err(Error::validation(format!("generator {k} not invertible")));
            }
        }
        Ok(Self {
            name: name.into(),
            n,
            level,
            generators,
        })
    }

    pub fn lie_algebra(name: impl Into<String>, generators: Vec<RationalMatrix>) -> Result<Self> {
        Self::new(name, Level::LieAlgebra, generators)
    }

    pub fn group(name: impl Into<String>, generators: Vec<RationalMatrix>) -> Result<Self> {
        Self::new(name, Level::Group, generators)
    }

    pub fn require_algebra(&self, operation: &str) -> Result<()> {
        match self.level {
            Level::LieAlgebra => Ok(()),
            Level::Group => Err(Error::precondition(format!("{operation} requires algebra-level input"))),
        }
    }

    /// The input document for this representation.
    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self
            .generators
            .iter()
            .map(|g| {
                Value::Array(
                    (0..g.rows())
                        .map(|i| Value::Array(g.row(i).iter().map(entry_to_json).collect()))
                        .collect(),
                )
            })
            .collect();
        json!({
            "name": self.name,
            "dimension": self.n,
            "level": self.level.as_str(),
            "generators": gens,
        })
    }

    pub fn to_document(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("representation serialises")
    }
}

fn entry_to_json(x: &Rational) -> Value {
    match x.is_integer().then(|| x.to_integer().to_i64()).flatten() {
        Some(v) => Value::from(v),
        None => Value::from(format_rational(x)),
    }
}

fn entry_from_json(v: &Value, k: usize) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| Error::format(format!("generator {k}: {e}"))),
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = num.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(Error::format(format!(
                    "generator {k}: malformed rational {num}; use an integer or a \"p/q\" string"
                )))
            }
        }
        other => Err(Error::format(format!("generator {k}: malformed rational {other}"))),
    }
}

/// Parses and validates the JSON input format.
pub fn parse_representation(document: &str) -> Result<Representation> {
    let doc: Value = serde_json::from_str(document).map_err(|e| Error::format(format!("invalid JSON: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::format("document must be a JSON object"))?;
    let name = obj
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::format("missing string field \"name\""))?;
    let n = obj
        .get("dimension")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::format("missing non-negative integer field \"dimension\""))? as usize;
    let level = match obj.get("level").and_then(Value::as_str) {
        Some("lie_algebra") => Level::LieAlgebra,
        Some("group") => Level::Group,
        Some(other) => return Err(Error::format(format!("unknown level {other:?}"))),
        None => return Err(Error::format("missing string field \"level\"")),
    };
    let gens = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::format("missing array field \"generators\""))?;
    let mut generators = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        let rows = g
            .as_array()
            .ok_or_else(|| Error::format(format!("generator {k} is not a list of rows")))?;
        let mut parsed = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| Error::format(format!("generator {k} has a row that is not a list")))?;
            parsed.push(row.iter().map(|v| entry_from_json(v, k)).collect::<Result<Vec<_>>>()?);
        }
        let width = parsed.first().map_or(0, Vec::len);
        if parsed.is_empty() || parsed.iter().any(|r| r.len() != width) {
            return Err(Error::format(format!("generator {k} has ragged or empty rows")));
        }
        if parsed.len() != width {
            return Err(Error::format(format!("generator {k} not square")));
        }
        if width != n {
            return Err(Error::format(format!(
                "generator {k} has size {width}x{width}, but dimension is {n}"
            )));
        }
        generators.push(RationalMatrix::from_rows(parsed)?);
    }
    Representation::new(name, level, generators)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpanKind {
    LieSpan,
    AssociativeHull,
}

/// A linearly independent family of `n x n` matrices closed under the
/// bracket (`LieSpan`) or the product (`AssociativeHull`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixAlgebraSpan {
    pub n: usize,
    pub basis: Vec<RationalMatrix>,
    pub kind: SpanKind,
}

impl MatrixAlgebraSpan {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self, m: &RationalMatrix) -> Option<Vec<Rational>> {
        let basis: Vec<Vec<Rational>> = self.basis.iter().map(RationalMatrix::to_vec).collect();
        coordinates(&basis, &m.to_vec())
    }

    pub fn contains(&self, m: &RationalMatrix) -> bool {
        self.coordinates(m).is_some()
    }
}

/// Bracket closure of `mats`.
pub fn lie_closure_of(n: usize, mats: &[RationalMatrix]) -> Result<MatrixAlgebraSpan> {
    let mut span = SpanBuilder::new(n * n);
    let mut basis: Vec<RationalMatrix> = Vec::new();
    for m in mats {
        if span.insert(&m.to_vec()) {
            basis.push(m.clone());
        }
    }
    // Each element is bracketed with all earlier ones once; elements that
    // enter later are handled when the cursor reaches them.
    let mut cursor = 0;
    while cursor < basis.len() {
        for j in 0..cursor {
            let b = basis[j].bracket(&basis[cursor]);
            if span.insert(&b.to_vec()) {
                basis.push(b);
            }
        }
        if basis.len() > n * n {
            return Err(Error::inconsistency("lie closure exceeded n^2 elements"));
        }
        cursor += 1;
    }
    Ok(MatrixAlgebraSpan {
        n,
        basis,
        kind: SpanKind::LieSpan,
    })
}

pub fn lie_closure(rep: &Representation) -> Result<MatrixAlgebraSpan> {
    rep.require_algebra("lie_closure")?;
    lie_closure_of(rep.n, &rep.generators)
}

/// Unital associative algebra generated by `mats`.
pub fn associative_hull_of(n: usize, mats: &[RationalMatrix]) -> MatrixAlgebraSpan {
    let mut span = SpanBuilder::new(n * n);
    let id = RationalMatrix::identity(n);
    span.insert(&id.to_vec());
    let mut basis = vec![id];
    // A subspace containing Id and stable under left multiplication by every
    // generator contains all words, hence is the generated algebra.
    let mut cursor = 0;
    while cursor < basis.len() {
        for g in mats {
            let p = g * &basis[cursor];
            if span.insert(&p.to_vec()) {
                basis.push(p);
            }
        }
        cursor += 1;
    }
    MatrixAlgebraSpan {
        n,
        basis,
        kind: SpanKind::AssociativeHull,
    }
}

pub fn associative_hull(rep: &Representation) -> MatrixAlgebraSpan {
    associative_hull_of(rep.n, &rep.generators)
}

/// Smallest subspace containing `seed` and stable under every generator,
/// as a reduced row echelon basis.
pub fn spin_from(n: usize, generators: &[RationalMatrix], seed: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    if seed.len() != n {
        return Err(Error::format(format!("seed has length {}, expected {n}", seed.len())));
    }
    if seed.iter().all(Zero::is_zero) {
        return Err(Error::precondition("spin seed must be nonzero"));
    }
    let mut span = SpanBuilder::new(n);
    span.insert(seed);
    let mut cursor = 0;
    while cursor < span.dim() {
        let v = span.basis()[cursor].clone();
        for g in generators {
            span.insert(&g.apply(&v));
            if span.is_full() {
                break;
            }
        }
        cursor += 1;
    }
    Ok(rref(span.basis(), n).rows)
}

pub fn spin_subspace(rep: &Representation, seed: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    spin_from(rep.n, &rep.generators, seed)
}

/// Where a reducibility witness came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SeedOrigin {
    StandardBasis { index: usize },
    CommutantKernel { element: usize },
    RepeatedFactor { element: usize },
    RationalEigenvalue { element: usize, eigenvalue: String },
    HullRadical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Commutant is a division algebra and `hull_dim * commutant_dim = n^2`.
    Division {
        division_type: DivisionType,
        hull_dim: usize,
        commutant_dim: usize,
    },
    /// A proper invariant subspace obtained by spinning `seed`.
    InvariantSubspace {
        origin: SeedOrigin,
        seed: Vec<Rational>,
        basis: Vec<Vec<Rational>>,
    },
    /// A commutant element whose minimal polynomial splits over the reals,
    /// so its primary decomposition is a nontrivial invariant splitting that
    /// need not be defined over the rationals.
    SplitElement {
        element: RationalMatrix,
        minimal_polynomial: Polynomial,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducibility {
    pub irreducible: bool,
    pub certificate: Certificate,
    pub hull_dim: usize,
    pub commutant_dim: usize,
}

fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn proper_spin(rep: &Representation, seed: &[Rational]) -> Result<Option<Vec<Vec<Rational>>>> {
    let basis = spin_subspace(rep, seed)?;
    Ok((basis.len() < rep.n).then_some(basis))
}

/// Columns of `m` that are nonzero, as vectors (they span the image).
fn image_vectors(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    (0..m.cols())
        .map(|j| m.column(j))
        .filter(|c| c.iter().any(|x| !x.is_zero()))
        .collect()
}

fn kernel_vectors(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    crate::linalg::nullspace::nullspace_with_width(&m.row_vectors(), m.cols())
}

/// Decides irreducibility by the double-centralizer count and backs the
/// answer with a certificate; the two methods are checked against each other.
pub fn is_irreducible(rep: &Representation) -> Result<Irreducibility> {
    let n = rep.n;
    let comm = commutant::commutant_basis(rep)?;
    let hull = associative_hull(rep);
    let division = commutant::division_structure(n, &comm.basis)?;
    let algebra_says_irreducible = division.is_some() && hull.dim() * comm.basis.len() == n * n;

    let mut witness = None;
    for i in 0..n {
        let seed = unit_vector(n, i);
        if let Some(basis) = proper_spin(rep, &seed)? {
            witness = Some((SeedOrigin::StandardBasis { index: i }, seed, basis));
            break;
        }
    }

    if algebra_says_irreducible {
        if let Some((origin, _, basis)) = witness {
            return Err(Error::inconsistency(format!(
                "commutant test says irreducible but spinning from {origin:?} gives a {}-dimensional invariant subspace",
                basis.len()
            )));
        }
        let division_type = division.map(|d| d.division_type).expect("checked above");
        return Ok(Irreducibility {
            irreducible: true,
            certificate: Certificate::Division {
                division_type,
                hull_dim: hull.dim(),
                commutant_dim: comm.basis.len(),
            },
            hull_dim: hull.dim(),
            commutant_dim: comm.basis.len(),
        });
    }

    let reducible = |certificate| {
        Ok(Irreducibility {
            irreducible: false,
            certificate,
            hull_dim: hull.dim(),
            commutant_dim: comm.basis.len(),
        })
    };
    let subspace = |(origin, seed, basis)| Certificate::InvariantSubspace { origin, seed, basis };

    if let Some(w) = witness {
        return reducible(subspace(w));
    }
    let mut candidates: Vec<(SeedOrigin, Vec<Vec<Rational>>)> = Vec::new();
    let mut minpolys = Vec::with_capacity(comm.basis.len());
    for (k, b) in comm.basis.iter().enumerate() {
        candidates.push((SeedOrigin::CommutantKernel { element: k }, kernel_vectors(b)));
        let mu = minimal_polynomial(b)?;
        let g = mu.gcd(&mu.derivative());
        if g.degree().unwrap_or(0) >= 1 {
            candidates.push((
                SeedOrigin::RepeatedFactor { element: k },
                kernel_vectors(&g.eval_matrix(b)),
            ));
        }
        for r in mu.rational_roots().unwrap_or_default() {
            let shifted = b - &RationalMatrix::identity(n).scale(&r);
            candidates.push((
                SeedOrigin::RationalEigenvalue {
                    element: k,
                    eigenvalue: format_rational(&r),
                },
                kernel_vectors(&shifted),
            ));
        }
        minpolys.push(mu);
    }
    for (origin, seeds) in &candidates {
        for seed in seeds {
            if let Some(basis) = proper_spin(rep, seed)? {
                return reducible(subspace((origin.clone(), seed.clone(), basis)));
            }
        }
    }
    for r in hull_radical(&hull) {
        for seed in image_vectors(&r) {
            if let Some(basis) = proper_spin(rep, &seed)? {
                return reducible(subspace((SeedOrigin::HullRadical, seed, basis)));
            }
        }
    }
    for (b, mu) in comm.basis.iter().zip(&minpolys) {
        if splits_over_reals(mu) {
            return reducible(Certificate::SplitElement {
                element: b.clone(),
                minimal_polynomial: mu.clone(),
            });
        }
    }
    // Generic combinations catch split elements missed by the basis.
    for shift in 1..=3i64 {
        let coeffs: Vec<Rational> = (0..comm.basis.len())
            .map(|k| Rational::from_integer(((k as i64 + 1) * shift + k as i64 * k as i64).into()))
            .collect();
        let b = RationalMatrix::combination(&coeffs, &comm.basis);
        let mu = minimal_polynomial(&b)?;
        if splits_over_reals(&mu) {
            return reducible(Certificate::SplitElement {
                element: b,
                minimal_polynomial: mu,
            });
        }
    }
    Err(Error::inconsistency(
        "commutant test says reducible but no invariant subspace or split commutant element was found",
    ))
}

/// Whether `mu` has at least two distinct real-irreducible factors or a
/// repeated one, i.e. it is neither linear nor an irreducible real quadratic.
fn splits_over_reals(mu: &Polynomial) -> bool {
    match mu.degree() {
        Some(0) | Some(1) | None => false,
        Some(2) => mu.real_root_count() > 0,
        Some(_) => true,
    }
}

/// Jacobson radical of a matrix algebra: the radical of its trace form.
pub fn hull_radical(hull: &MatrixAlgebraSpan) -> Vec<RationalMatrix> {
    let m = hull.dim();
    let gram: Vec<Vec<Rational>> = (0..m)
        .map(|i| (0..m).map(|j| (&hull.basis[i] * &hull.basis[j]).trace()).collect())
        .collect();
    crate::linalg::nullspace::nullspace_with_width(&gram, m)
        .into_iter()
        .map(|c| RationalMatrix::combination(&c, &hull.basis))
        .collect()
}
