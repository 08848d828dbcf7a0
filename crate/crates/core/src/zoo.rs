//! Deterministic constructors for the representations used throughout the
//! test suite, with expected analysis records.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classical::{
    complex_solutions, ipq, quaternion_solutions, standard_symplectic, ComplexMatrix, QuaternionMatrix,
};
use crate::commutant::TypeTag;
use crate::error::{Error, Result};
use crate::linalg::{kernel_of_map, rat, Rational, RationalMatrix};
use crate::rep::Representation;
use crate::report::{analyze, AnalysisReport};
use crate::structure::so1n_basis;

/// A catalog key with its parameter names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZooKey {
    pub key: &'static str,
    pub params: &'static [&'static str],
    pub description: &'static str,
}

pub const KEYS: &[ZooKey] = &[
    ZooKey {
        key: "so",
        params: &["p", "q"],
        description: "so(p,q) on R^(p+q)",
    },
    ZooKey {
        key: "co",
        params: &["n"],
        description: "so(n) + R Id on R^n",
    },
    ZooKey {
        key: "sp_real",
        params: &["m"],
        description: "sp(m,R) on R^(2m)",
    },
    ZooKey {
        key: "u_real",
        params: &["p", "q"],
        description: "u(p,q) realified on R^(2(p+q))",
    },
    ZooKey {
        key: "so_complex",
        params: &["m"],
        description: "so(m,C) realified on R^(2m), m >= 3",
    },
    ZooKey {
        key: "sp_complex",
        params: &["m"],
        description: "sp(m,C) realified on R^(4m)",
    },
    ZooKey {
        key: "sp_quaternionic",
        params: &["p", "q"],
        description: "sp(p,q) via the complex-pair recipe on R^(4(p+q))",
    },
    ZooKey {
        key: "o_star",
        params: &["m"],
        description: "o*(m) as u(m,m) ∩ o(2m,C), realified on R^(4m), m >= 2",
    },
    ZooKey {
        key: "gl1H_right",
        params: &[],
        description: "right multiplications by 1, i, j, k on H = R^4",
    },
    ZooKey {
        key: "sp1_left",
        params: &[],
        description: "left multiplications by i, j, k on H = R^4",
    },
    ZooKey {
        key: "conformal_circle",
        params: &["n"],
        description: "realified S^1 x CO(n) on R^(2n)",
    },
    ZooKey {
        key: "spiral",
        params: &["n"],
        description: "diag(A, A), A in so(n), plus R [[I, I], [-I, I]] on R^(2n)",
    },
    ZooKey {
        key: "parabolic_so1n",
        params: &["n"],
        description: "null-line stabilizer in so(1,n) on R^(n+1)",
    },
    ZooKey {
        key: "so2_plus_so2",
        params: &[],
        description: "block-diagonal so(2) + so(2) on R^4",
    },
    ZooKey {
        key: "so2_in_so12",
        params: &[],
        description: "spatial rotations inside so(1,2) on R^3",
    },
    ZooKey {
        key: "borel",
        params: &["n"],
        description: "upper triangular matrices on R^n",
    },
];

fn param(key: &str, params: &[usize], i: usize) -> Result<usize> {
    params
        .get(i)
        .copied()
        .ok_or_else(|| Error::validation(format!("{key}: missing parameter {}", i + 1)))
}

fn check_arity(spec: &ZooKey, params: &[usize]) -> Result<()> {
    if params.len() != spec.params.len() {
        return Err(Error::validation(format!(
            "{} takes {} parameter(s) ({}), got {}",
            spec.key,
            spec.params.len(),
            spec.params.join(", "),
            params.len()
        )));
    }
    Ok(())
}

/// `X_ij = eta_i E_ij - eta_j E_ji` for `i < j`: a basis of `so(p,q)`.
pub fn so_pq_basis(p: usize, q: usize) -> Vec<RationalMatrix> {
    let n = p + q;
    let eta = |i: usize| if i < p { rat(-1) } else { rat(1) };
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut x = RationalMatrix::zeros(n, n);
            x.set(i, j, eta(i));
            x.set(j, i, -eta(j));
            out.push(x);
        }
    }
    out
}

fn real_solutions(n: usize, condition: impl Fn(&RationalMatrix) -> RationalMatrix) -> Vec<RationalMatrix> {
    let basis: Vec<RationalMatrix> = (0..n)
        .flat_map(|i| (0..n).map(move |j| RationalMatrix::unit(n, i, j)))
        .collect();
    let images: Vec<Vec<Rational>> = basis.iter().map(|b| condition(b).to_vec()).collect();
    kernel_of_map(&images)
        .into_iter()
        .map(|c| RationalMatrix::combination(&c, &basis))
        .collect()
}

fn realified(mats: Vec<ComplexMatrix>) -> Vec<RationalMatrix> {
    mats.iter().map(ComplexMatrix::realify).collect()
}

/// `[[A, 0], [0, A]]`
fn doubled(a: &RationalMatrix) -> RationalMatrix {
    RationalMatrix::block_diag(&[a.clone(), a.clone()])
}

/// Quaternion product on coordinates `(1, i, j, k)`.
fn quat_mul(a: [i64; 4], b: [i64; 4]) -> [Rational; 4] {
    let q = |c: [i64; 4]| QuaternionMatrix::new(std::array::from_fn(|k| RationalMatrix::from_i64(&[&[c[k]]])));
    let p = q(a).mul(&q(b));
    std::array::from_fn(|k| p.parts[k].get(0, 0).clone())
}

fn quaternion_multiplication(unit: usize, right: bool) -> RationalMatrix {
    let mut u = [0i64; 4];
    u[unit] = 1;
    let columns: Vec<Vec<Rational>> = (0..4)
        .map(|j| {
            let mut e = [0i64; 4];
            e[j] = 1;
            let prod = if right { quat_mul(e, u) } else { quat_mul(u, e) };
            prod.to_vec()
        })
        .collect();
    RationalMatrix::from_columns(&columns).expect("4 columns of length 4")
}

/// Builds the catalog representation `key` with integer parameters.
pub fn make(key: &str, params: &[usize]) -> Result<Representation> {
    let spec = KEYS
        .iter()
        .find(|k| k.key == key)
        .ok_or_else(|| Error::validation(format!("unknown zoo key {key:?}")))?;
    check_arity(spec, params)?;
    let p0 = || param(key, params, 0);
    let p1 = || param(key, params, 1);
    let positive = |v: usize, what: &str| {
        if v == 0 {
            Err(Error::validation(format!("{key}: {what} must be positive")))
        } else {
            Ok(v)
        }
    };
    let (name, gens) = match key {
        "so" => {
            let (p, q) = (p0()?, p1()?);
            if p + q < 2 {
                return Err(Error::validation("so(p,q) needs p + q >= 2"));
            }
            (format!("so({p},{q})"), so_pq_basis(p, q))
        }
        "co" => {
            let n = p0()?;
            if n < 2 {
                return Err(Error::validation("co(n) needs n >= 2"));
            }
            let mut gens = so_pq_basis(0, n);
            gens.push(RationalMatrix::identity(n));
            (format!("co({n})"), gens)
        }
        "sp_real" => {
            let m = positive(p0()?, "m")?;
            let omega = standard_symplectic(m);
            let gens = real_solutions(2 * m, |x| &(&x.transpose() * &omega) + &(&omega * x));
            (format!("sp({m},R)"), gens)
        }
        "u_real" => {
            let (p, q) = (p0()?, p1()?);
            positive(p + q, "p + q")?;
            let h = ComplexMatrix::real(ipq(p, q));
            let gens = complex_solutions(p + q, &[&|c: &ComplexMatrix| c.adjoint().mul(&h).add(&h.mul(c))]);
            (format!("u({p},{q}) realified"), realified(gens))
        }
        "so_complex" => {
            let m = p0()?;
            if m < 3 {
                return Err(Error::validation(format!(
                    "so({m},C): reducible or guard case, need m >= 3"
                )));
            }
            let gens = complex_solutions(m, &[&|c: &ComplexMatrix| c.transpose().add(c)]);
            (format!("so({m},C) realified"), realified(gens))
        }
        "sp_complex" => {
            let m = positive(p0()?, "m")?;
            let omega = ComplexMatrix::real(standard_symplectic(m));
            let gens = complex_solutions(
                2 * m,
                &[&|c: &ComplexMatrix| c.transpose().mul(&omega).add(&omega.mul(c))],
            );
            (format!("sp({m},C) realified"), realified(gens))
        }
        "sp_quaternionic" => {
            let (p, q) = (p0()?, p1()?);
            positive(p + q, "p + q")?;
            let d = QuaternionMatrix::unit_times(ipq(p, q), 0);
            let gens = quaternion_solutions(p + q, &[&|a: &QuaternionMatrix| a.adjoint().mul(&d).add(&d.mul(a))]);
            (
                format!("sp({p},{q}) realified"),
                gens.iter().map(QuaternionMatrix::realify).collect(),
            )
        }
        "o_star" => {
            let m = p0()?;
            if m < 2 {
                return Err(Error::validation(format!(
                    "o*({m}): reducible or guard case, need m >= 2"
                )));
            }
            let id = RationalMatrix::identity(m);
            let zero = RationalMatrix::zeros(m, m);
            let skew_herm = ComplexMatrix::imaginary(RationalMatrix::block_diag(&[id.clone(), -&id]));
            let sym = ComplexMatrix::real(RationalMatrix::from_blocks(&zero, &id, &id, &zero));
            let gens = complex_solutions(
                2 * m,
                &[
                    &|c: &ComplexMatrix| c.adjoint().mul(&skew_herm).add(&skew_herm.mul(c)),
                    &|c: &ComplexMatrix| c.transpose().mul(&sym).add(&sym.mul(c)),
                ],
            );
            (format!("o*({m}) realified"), realified(gens))
        }
        "gl1H_right" => (
            "gl(1,H) by right multiplication".to_string(),
            (0..4).map(|u| quaternion_multiplication(u, true)).collect(),
        ),
        "sp1_left" => (
            "sp(1) by left multiplication".to_string(),
            (1..4).map(|u| quaternion_multiplication(u, false)).collect(),
        ),
        "conformal_circle" => {
            let n = p0()?;
            if n < 2 {
                return Err(Error::validation("conformal_circle needs n >= 2"));
            }
            let id = RationalMatrix::identity(n);
            let zero = RationalMatrix::zeros(n, n);
            let mut gens: Vec<RationalMatrix> = so_pq_basis(0, n).iter().map(doubled).collect();
            gens.push(doubled(&id));
            gens.push(RationalMatrix::from_blocks(&zero, &id, &(-&id), &zero));
            (format!("S^1 x CO({n}) realified"), gens)
        }
        "spiral" => {
            let n = p0()?;
            if n < 2 {
                return Err(Error::validation("spiral needs n >= 2"));
            }
            let id = RationalMatrix::identity(n);
            let mut gens: Vec<RationalMatrix> = so_pq_basis(0, n).iter().map(doubled).collect();
            gens.push(RationalMatrix::from_blocks(&id, &id, &(-&id), &id));
            (format!("spiral center algebra, n = {n}"), gens)
        }
        "parabolic_so1n" => {
            let n = p0()?;
            if n < 2 {
                return Err(Error::validation("parabolic_so1n needs n >= 2"));
            }
            (format!("null-line stabilizer in so(1,{n})"), parabolic_so1n(n))
        }
        "so2_plus_so2" => {
            let j = so_pq_basis(0, 2).remove(0);
            let z = RationalMatrix::zeros(2, 2);
            (
                "so(2) + so(2) block diagonal".to_string(),
                vec![
                    RationalMatrix::block_diag(&[j.clone(), z.clone()]),
                    RationalMatrix::block_diag(&[z, j]),
                ],
            )
        }
        "so2_in_so12" => ("so(2) inside so(1,2)".to_string(), vec![so1n_basis(2)[2].clone()]),
        "borel" => {
            let n = positive(p0()?, "n")?;
            let gens = (0..n)
                .flat_map(|i| (i..n).map(move |j| RationalMatrix::unit(n, i, j)))
                .collect();
            (format!("upper triangular {n}x{n}"), gens)
        }
        _ => unreachable!("key checked above"),
    };
    Representation::lie_algebra(name, gens)
}

/// Stabilizer of the null line through `(1, 1, 0, ..., 0)` in `so(1,n)`:
/// the boost in the 0-1 plane, the null rotations `X_0k - X_1k` and the
/// rotations among coordinates `2..n`.
pub fn parabolic_so1n(n: usize) -> Vec<RationalMatrix> {
    let d = n + 1;
    let eta = |i: usize| if i == 0 { rat(-1) } else { rat(1) };
    let x = |i: usize, j: usize| {
        let mut m = RationalMatrix::zeros(d, d);
        m.set(i, j, eta(i));
        m.set(j, i, -eta(j));
        m
    };
    let mut gens = vec![x(0, 1)];
    for k in 2..d {
        gens.push(&x(0, k) - &x(1, k));
    }
    for k in 2..d {
        for l in (k + 1)..d {
            gens.push(x(k, l));
        }
    }
    gens
}

/// Expected analysis of a catalog entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub irreducible: bool,
    #[serde(rename = "type")]
    pub type_tag: TypeTag,
    pub commutant_dim: usize,
    pub dim_sym: usize,
    pub dim_skew: usize,
    /// Normalised signatures of the symmetric basis forms.
    pub signatures: Vec<[usize; 2]>,
    /// Instantiated stabilizer name, for irreducible entries.
    pub stabilizer: Option<String>,
    pub family: Option<String>,
    pub table_signature: Option<[usize; 2]>,
    pub center_shape: String,
    pub closedness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZooEntry {
    pub key: String,
    pub params: Vec<usize>,
    pub expected: Expected,
}

impl ZooEntry {
    pub fn label(&self) -> String {
        if self.params.is_empty() {
            self.key.clone()
        } else {
            let p: Vec<String> = self.params.iter().map(usize::to_string).collect();
            format!("{}({})", self.key, p.join(","))
        }
    }

    pub fn build(&self) -> Result<Representation> {
        make(&self.key, &self.params)
    }
}

struct E<'a> {
    irreducible: bool,
    type_tag: TypeTag,
    commutant_dim: usize,
    dims: (usize, usize),
    signatures: &'a [[usize; 2]],
    stabilizer: Option<(&'a str, &'a str)>,
    table_signature: Option<[usize; 2]>,
    center_shape: &'a str,
}

fn entry(key: &str, params: &[usize], e: E) -> ZooEntry {
    ZooEntry {
        key: key.to_string(),
        params: params.to_vec(),
        expected: Expected {
            irreducible: e.irreducible,
            type_tag: e.type_tag,
            commutant_dim: e.commutant_dim,
            dim_sym: e.dims.0,
            dim_skew: e.dims.1,
            signatures: e.signatures.to_vec(),
            stabilizer: e.stabilizer.map(|s| s.0.to_string()),
            family: e.stabilizer.map(|s| s.1.to_string()),
            table_signature: e.table_signature,
            center_shape: e.center_shape.to_string(),
            closedness: if e.irreducible {
                "closed_by_irreducibility"
            } else {
                "undetermined_reducible"
            }
            .to_string(),
        },
    }
}

/// Every catalog entry with its expected record.
pub fn catalog() -> Vec<ZooEntry> {
    use TypeTag::*;
    let irr = |type_tag, commutant_dim, dims, signatures, stabilizer, table_signature, center_shape| E {
        irreducible: true,
        type_tag,
        commutant_dim,
        dims,
        signatures,
        stabilizer: Some(stabilizer),
        table_signature,
        center_shape,
    };
    let red = |type_tag, commutant_dim, dims, signatures, center_shape| E {
        irreducible: false,
        type_tag,
        commutant_dim,
        dims,
        signatures,
        stabilizer: None,
        table_signature: None,
        center_shape,
    };
    vec![
        entry(
            "so",
            &[1, 2],
            irr(R, 1, (1, 0), &[[1, 2]], ("O(1,2)", "O(p,q)"), Some([1, 2]), "trivial"),
        ),
        entry(
            "so",
            &[0, 3],
            irr(R, 1, (1, 0), &[[0, 3]], ("O(0,3)", "O(p,q)"), Some([0, 3]), "trivial"),
        ),
        entry(
            "sp_real",
            &[1],
            irr(R, 1, (0, 1), &[], ("Sp(1,R)", "Sp(n/2,R)"), None, "trivial"),
        ),
        entry(
            "so_complex",
            &[3],
            irr(
                C,
                2,
                (2, 0),
                &[[3, 3], [3, 3]],
                ("O(3,C)", "O(n/2,C)"),
                Some([3, 3]),
                "trivial",
            ),
        ),
        entry(
            "sp_complex",
            &[1],
            irr(C, 2, (0, 2), &[], ("Sp(1,C)", "Sp(n/4,C)"), None, "trivial"),
        ),
        entry(
            "u_real",
            &[0, 2],
            irr(
                C,
                2,
                (1, 1),
                &[[0, 4]],
                ("U(0,2)", "U(p/2,q/2)"),
                Some([0, 4]),
                "circle",
            ),
        ),
        entry(
            "u_real",
            &[1, 1],
            irr(
                C,
                2,
                (1, 1),
                &[[2, 2]],
                ("U(1,1)", "U(p/2,q/2)"),
                Some([2, 2]),
                "circle",
            ),
        ),
        entry(
            "u_real",
            &[0, 1],
            irr(
                C,
                2,
                (1, 1),
                &[[0, 2]],
                ("U(0,1)", "U(p/2,q/2)"),
                Some([0, 2]),
                "circle",
            ),
        ),
        entry(
            "sp_quaternionic",
            &[0, 1],
            irr(
                H,
                4,
                (1, 3),
                &[[0, 4]],
                ("Sp(0,1)", "Sp(p/4,q/4)"),
                Some([0, 4]),
                "trivial",
            ),
        ),
        entry(
            "sp1_left",
            &[],
            irr(
                H,
                4,
                (1, 3),
                &[[0, 4]],
                ("Sp(0,1)", "Sp(p/4,q/4)"),
                Some([0, 4]),
                "trivial",
            ),
        ),
        entry(
            "sp_quaternionic",
            &[1, 0],
            irr(
                H,
                4,
                (1, 3),
                &[[0, 4]],
                ("Sp(0,1)", "Sp(p/4,q/4)"),
                Some([0, 4]),
                "trivial",
            ),
        ),
        entry(
            "sp_quaternionic",
            &[1, 1],
            irr(
                H,
                4,
                (1, 3),
                &[[4, 4]],
                ("Sp(1,1)", "Sp(p/4,q/4)"),
                Some([4, 4]),
                "trivial",
            ),
        ),
        entry(
            "o_star",
            &[2],
            irr(
                H,
                4,
                (3, 1),
                &[[4, 4], [4, 4], [4, 4]],
                ("O*(2)", "O*(n/4)"),
                Some([4, 4]),
                "trivial",
            ),
        ),
        entry(
            "gl1H_right",
            &[],
            irr(H, 4, (0, 0), &[], ("NotSelfDual", "NotSelfDual"), None, "real_scaling"),
        ),
        entry(
            "co",
            &[3],
            irr(R, 1, (0, 0), &[], ("NotSelfDual", "NotSelfDual"), None, "real_scaling"),
        ),
        entry(
            "conformal_circle",
            &[3],
            irr(C, 2, (0, 0), &[], ("NotSelfDual", "NotSelfDual"), None, "full_complex"),
        ),
        entry(
            "spiral",
            &[3],
            irr(C, 2, (0, 0), &[], ("NotSelfDual", "NotSelfDual"), None, "spiral"),
        ),
        // For n = 2 both algebras are abelian: R^4 splits into two inequivalent
        // complex lines, so the commutant is C + C.
        entry(
            "conformal_circle",
            &[2],
            red(NonDivision, 4, (0, 0), &[], "unclassified"),
        ),
        entry("spiral", &[2], red(NonDivision, 4, (0, 0), &[], "unclassified")),
        entry("parabolic_so1n", &[2], red(R, 1, (1, 0), &[[1, 2]], "trivial")),
        entry(
            "so2_plus_so2",
            &[],
            red(NonDivision, 4, (2, 2), &[[0, 2], [0, 2]], "unclassified"),
        ),
        entry(
            "so2_in_so12",
            &[],
            red(NonDivision, 3, (2, 1), &[[0, 1], [0, 2]], "unclassified"),
        ),
        entry("borel", &[2], red(R, 1, (0, 0), &[], "real_scaling")),
    ]
}

/// The analyzer's output in the shape of an expected record.
pub fn observe(report: &AnalysisReport) -> Expected {
    let row = report.forms.table_row.as_ref();
    let structure = report.structure.as_ref();
    Expected {
        irreducible: report.irreducible,
        type_tag: report.commutant.type_tag,
        commutant_dim: report.commutant.dim,
        dim_sym: report.forms.dim_sym,
        dim_skew: report.forms.dim_skew,
        signatures: report.forms.signatures.clone(),
        stabilizer: row.map(|r| r.stabilizer.clone()),
        family: row.map(|r| r.family.clone()),
        table_signature: row.and_then(|r| r.signature),
        center_shape: structure.map_or_else(String::new, |s| s.center_shape.clone()),
        closedness: structure.map_or_else(String::new, |s| s.closedness.clone()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryCheck {
    pub label: String,
    pub expected: Expected,
    /// `None` when the pipeline itself failed; see `error`.
    pub observed: Option<Expected>,
    pub error: Option<String>,
    /// The error was a theorem violation rather than bad input.
    pub inconsistent: bool,
}

impl EntryCheck {
    pub fn passed(&self) -> bool {
        self.observed.as_ref() == Some(&self.expected)
    }
}

pub fn check_entry(entry: &ZooEntry) -> EntryCheck {
    let outcome = entry.build().and_then(|rep| analyze(&rep));
    let (observed, error, inconsistent) = match outcome {
        Ok(report) => (Some(observe(&report)), None, false),
        Err(e) => (None, Some(e.to_string()), e.is_inconsistency()),
    };
    EntryCheck {
        label: entry.label(),
        expected: entry.expected.clone(),
        observed,
        error,
        inconsistent,
    }
}

/// The seven rows of the classification table: type, dim S, dim Λ and the
/// stabilizer family.
pub const TABLE_ROWS: [(TypeTag, usize, usize, &str); 7] = [
    (TypeTag::R, 1, 0, "O(p,q)"),
    (TypeTag::R, 0, 1, "Sp(n/2,R)"),
    (TypeTag::C, 2, 0, "O(n/2,C)"),
    (TypeTag::C, 0, 2, "Sp(n/4,C)"),
    (TypeTag::C, 1, 1, "U(p/2,q/2)"),
    (TypeTag::H, 1, 3, "Sp(p/4,q/4)"),
    (TypeTag::H, 3, 1, "O*(n/4)"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCheck {
    pub entries: Vec<EntryCheck>,
    /// Labels of the passing entries that realise each table row.
    pub rows: Vec<Vec<String>>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(EntryCheck::passed) && self.rows.iter().all(|r| !r.is_empty())
    }

    /// The table layout, one line per row, followed by the mismatches.
    pub fn to_text(&self) -> String {
        let mut out = vec![format!(
            "{:<4} | {:>5} | {:>5} | {:<12} | entries",
            "type", "dim S", "dim Λ", "stabilizer"
        )];
        for ((tag, s, k, family), labels) in TABLE_ROWS.iter().zip(&self.rows) {
            let status = if labels.is_empty() { "MISSING" } else { "ok" };
            out.push(format!(
                "{:<4} | {:>5} | {:>5} | {:<12} | {} [{status}]",
                tag.as_str(),
                s,
                k,
                family,
                labels.join(", ")
            ));
        }
        for e in self.entries.iter().filter(|e| !e.passed()) {
            match (&e.observed, &e.error) {
                (_, Some(err)) => out.push(format!("MISMATCH {}: error {err}", e.label)),
                (Some(obs), _) => out.push(format!(
                    "MISMATCH {}: expected {:?}, computed {:?}",
                    e.label, e.expected, obs
                )),
                (None, None) => out.push(format!("MISMATCH {}", e.label)),
            }
        }
        let passed = self.entries.iter().filter(|e| e.passed()).count();
        out.push(format!("{passed}/{} entries match", self.entries.len()));
        out.join("\n")
    }
}

/// Runs every entry through the full pipeline and files the passing
/// irreducible ones under their table row.
pub fn check_table(entries: &[ZooEntry]) -> TableCheck {
    let checks: Vec<EntryCheck> = entries.par_iter().map(check_entry).collect();
    let rows = TABLE_ROWS
        .iter()
        .map(|(tag, s, k, family)| {
            checks
                .iter()
                .filter(|c| c.passed())
                .filter_map(|c| {
                    let o = c.observed.as_ref()?;
                    (o.type_tag == *tag && o.dim_sym == *s && o.dim_skew == *k && o.family.as_deref() == Some(family))
                        .then(|| c.label.clone())
                })
                .collect()
        })
        .collect();
    TableCheck { entries: checks, rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::form_condition;

    #[test]
    fn so_pq_generators_preserve_the_form() {
        for (p, q) in [(1, 2), (0, 3), (2, 2)] {
            let eta = ipq(p, q);
            for g in so_pq_basis(p, q) {
                assert!(form_condition(&g, &eta).is_zero());
            }
        }
    }

    #[test]
    fn right_and_left_multiplications_commute() {
        for a in 0..4 {
            for b in 0..4 {
                let r = quaternion_multiplication(a, true);
                let l = quaternion_multiplication(b, false);
                assert_eq!(&r * &l, &l * &r);
            }
        }
    }

    #[test]
    fn bad_keys_and_params() {
        assert!(make("g2", &[]).is_err());
        assert!(make("so_complex", &[2]).is_err());
        assert!(make("so", &[1]).is_err());
        assert_eq!(make("gl1H_right", &[]).unwrap().generators.len(), 4);
    }
}
