//! The five isomorphisms between the complex/quaternionic classical groups
//! and intersections of real ones, checked at the Lie algebra level as
//! equalities of solution spaces inside `gl(n, R)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classical::{
    bilinear_real_part, complex_solutions, form_condition, ipq, quaternion_solutions, sesquilinear_imaginary_part,
    sesquilinear_real_part, standard_complex_structure, standard_symplectic, ComplexMatrix, QuaternionMatrix,
};
use crate::error::{Error, Result};
use crate::linalg::{kernel_of_map, RationalMatrix, SpanBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "identity", rename_all = "snake_case")]
pub enum Identification {
    /// `O(m,C) = O(m,m) ∩ Gl(m,C)` on `R^{2m}`.
    ComplexOrthogonal { m: usize },
    /// `Sp(k,C) = O(2k,2k)' ∩ Gl(2k,C)` on `R^{4k}`.
    ComplexSymplectic { k: usize },
    /// `U(p,q) = O(2p,2q) ∩ Sp(p+q,R)` on `R^{2(p+q)}`.
    Unitary { p: usize, q: usize },
    /// `Sp(p,q) = U(2p,2q) ∩ Sp(p+q,C)` on `R^{4(p+q)}`.
    QuaternionicUnitary { p: usize, q: usize },
    /// `O*(k) = U(k,k) ∩ O(2k,C)` on `R^{4k}`.
    OStar { k: usize },
}

impl Identification {
    pub const NAMES: [&'static str; 5] = ["o_complex", "sp_complex", "unitary", "sp_quaternionic", "o_star"];

    /// The identity with the given name at its default small parameters.
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "o_complex" => Ok(Identification::ComplexOrthogonal { m: 2 }),
            "sp_complex" => Ok(Identification::ComplexSymplectic { k: 1 }),
            "unitary" => Ok(Identification::Unitary { p: 1, q: 1 }),
            "sp_quaternionic" => Ok(Identification::QuaternionicUnitary { p: 0, q: 1 }),
            "o_star" => Ok(Identification::OStar { k: 1 }),
            other => Err(Error::validation(format!(
                "unknown identity {other:?}; expected one of {}",
                Self::NAMES.join(", ")
            ))),
        }
    }

    pub fn smallest() -> Vec<Self> {
        Self::NAMES
            .iter()
            .map(|n| Self::from_name(n).expect("known name"))
            .collect()
    }

    pub fn name(&self) -> &'static str {
        match self {
            Identification::ComplexOrthogonal { .. } => "o_complex",
            Identification::ComplexSymplectic { .. } => "sp_complex",
            Identification::Unitary { .. } => "unitary",
            Identification::QuaternionicUnitary { .. } => "sp_quaternionic",
            Identification::OStar { .. } => "o_star",
        }
    }

    pub fn real_dimension(&self) -> usize {
        match *self {
            Identification::ComplexOrthogonal { m } => 2 * m,
            Identification::ComplexSymplectic { k } => 4 * k,
            Identification::Unitary { p, q } => 2 * (p + q),
            Identification::QuaternionicUnitary { p, q } => 4 * (p + q),
            Identification::OStar { k } => 4 * k,
        }
    }
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Identification::ComplexOrthogonal { m } => write!(f, "o({m},C) = o({m},{m}) ∩ gl({m},C)"),
            Identification::ComplexSymplectic { k } => write!(f, "sp({k},C) = o({0},{0}) ∩ gl({0},C)", 2 * k),
            Identification::Unitary { p, q } => write!(f, "u({p},{q}) = o({},{}) ∩ sp({},R)", 2 * p, 2 * q, p + q),
            Identification::QuaternionicUnitary { p, q } => {
                write!(f, "sp({p},{q}) = u({},{}) ∩ sp({},C)", 2 * p, 2 * q, p + q)
            }
            Identification::OStar { k } => write!(f, "o*({k}) = u({k},{k}) ∩ o({},C)", 2 * k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentificationReport {
    pub identity: Identification,
    pub statement: String,
    pub n: usize,
    pub left_dim: usize,
    pub right_dim: usize,
    pub left_in_right: bool,
    pub right_in_left: bool,
}

impl IdentificationReport {
    pub fn holds(&self) -> bool {
        self.left_in_right && self.right_in_left
    }
}

type RealCondition<'a> = &'a dyn Fn(&RationalMatrix) -> RationalMatrix;

/// Basis of the real `n x n` matrices annihilated by every condition.
fn real_solutions(n: usize, conditions: &[RealCondition]) -> Vec<RationalMatrix> {
    let basis: Vec<RationalMatrix> = (0..n)
        .flat_map(|i| (0..n).map(move |j| RationalMatrix::unit(n, i, j)))
        .collect();
    let images: Vec<Vec<_>> = basis
        .iter()
        .map(|b| conditions.iter().flat_map(|c| c(b).to_vec()).collect())
        .collect();
    kernel_of_map(&images)
        .into_iter()
        .map(|c| RationalMatrix::combination(&c, &basis))
        .collect()
}

fn contained(n: usize, inner: &[RationalMatrix], outer: &[RationalMatrix]) -> bool {
    let mut span = SpanBuilder::new(n * n);
    for m in outer {
        span.insert(&m.to_vec());
    }
    inner.iter().all(|m| span.contains(&m.to_vec()))
}

fn commutes_with(j: &RationalMatrix) -> impl Fn(&RationalMatrix) -> RationalMatrix + '_ {
    move |x| x.bracket(j)
}

fn preserves(f: &RationalMatrix) -> impl Fn(&RationalMatrix) -> RationalMatrix + '_ {
    move |x| form_condition(x, f)
}

/// Constructs both sides as solution spaces and compares them.
pub fn verify_identification(which: Identification) -> Result<IdentificationReport> {
    let n = which.real_dimension();
    if n == 0 {
        return Err(Error::validation("identity parameters give the zero space"));
    }
    let (left, right): (Vec<RationalMatrix>, Vec<RationalMatrix>) = match which {
        Identification::ComplexOrthogonal { m } => {
            let left = complex_solutions(m, &[&|c: &ComplexMatrix| c.transpose().add(c)]);
            let j = standard_complex_structure(m);
            let f = bilinear_real_part(&ComplexMatrix::identity(m));
            let right = real_solutions(n, &[&commutes_with(&j), &preserves(&f)]);
            (left.iter().map(ComplexMatrix::realify).collect(), right)
        }
        Identification::ComplexSymplectic { k } => {
            let m = 2 * k;
            let omega = ComplexMatrix::real(standard_symplectic(k));
            let left = complex_solutions(m, &[&|c: &ComplexMatrix| c.transpose().mul(&omega).add(&omega.mul(c))]);
            let j = standard_complex_structure(m);
            let f = bilinear_real_part(&omega);
            let right = real_solutions(n, &[&commutes_with(&j), &preserves(&f)]);
            (left.iter().map(ComplexMatrix::realify).collect(), right)
        }
        Identification::Unitary { p, q } => {
            let h = ComplexMatrix::real(ipq(p, q));
            let left = complex_solutions(p + q, &[&|c: &ComplexMatrix| c.adjoint().mul(&h).add(&h.mul(c))]);
            let re = sesquilinear_real_part(&h);
            let im = sesquilinear_imaginary_part(&h);
            let right = real_solutions(n, &[&preserves(&re), &preserves(&im)]);
            (left.iter().map(ComplexMatrix::realify).collect(), right)
        }
        Identification::QuaternionicUnitary { p, q } => {
            let m = p + q;
            let d = ipq(p, q);
            let dq = QuaternionMatrix::unit_times(d.clone(), 0);
            let left = quaternion_solutions(m, &[&|a: &QuaternionMatrix| a.adjoint().mul(&dq).add(&dq.mul(a))]);
            let j = standard_complex_structure(2 * m);
            let herm = ComplexMatrix::real(RationalMatrix::block_diag(&[d.clone(), d.clone()]));
            let zero = RationalMatrix::zeros(m, m);
            let sympl = ComplexMatrix::real(RationalMatrix::from_blocks(&zero, &(-&d), &d, &zero));
            let re_h = sesquilinear_real_part(&herm);
            let re_s = bilinear_real_part(&sympl);
            let right = real_solutions(n, &[&commutes_with(&j), &preserves(&re_h), &preserves(&re_s)]);
            (left.iter().map(QuaternionMatrix::realify).collect(), right)
        }
        Identification::OStar { k } => {
            let iq = QuaternionMatrix::unit_times(RationalMatrix::identity(k), 1);
            let left = quaternion_solutions(k, &[&|a: &QuaternionMatrix| a.adjoint().mul(&iq).add(&iq.mul(a))]);
            let j = standard_complex_structure(2 * k);
            let id = RationalMatrix::identity(k);
            let zero = RationalMatrix::zeros(k, k);
            let skew_herm = ComplexMatrix::imaginary(RationalMatrix::block_diag(&[id.clone(), -&id]));
            let sym = ComplexMatrix::real(RationalMatrix::from_blocks(&zero, &id, &id, &zero));
            let re_h = sesquilinear_real_part(&skew_herm);
            let re_s = bilinear_real_part(&sym);
            let right = real_solutions(n, &[&commutes_with(&j), &preserves(&re_h), &preserves(&re_s)]);
            (left.iter().map(QuaternionMatrix::realify).collect(), right)
        }
    };
    Ok(IdentificationReport {
        identity: which,
        statement: which.to_string(),
        n,
        left_dim: left.len(),
        right_dim: right.len(),
        left_in_right: contained(n, &left, &right),
        right_in_left: contained(n, &right, &left),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_parameters_hold() {
        let expected = [2, 6, 4, 3, 1];
        for (which, dim) in Identification::smallest().into_iter().zip(expected) {
            let r = verify_identification(which).unwrap();
            assert!(r.holds(), "{r:?}");
            assert_eq!((r.left_dim, r.right_dim), (dim, dim), "{which}");
        }
    }

    #[test]
    fn unknown_name_rejected() {
        assert!(matches!(Identification::from_name("g2"), Err(Error::Validation(_))));
    }
}
