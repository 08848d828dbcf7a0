//! The adjointness dichotomy and the table of maximal stabilizers.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{distinguished_symmetric, riesz_endomorphism, FormSpace};
use crate::commutant::{decompose_endomorphism, CommutantAlgebra, TypeTag};
use crate::error::{Error, Result};
use crate::linalg::{congruence_signature, independent_subset, Rational, RationalMatrix, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdjointnessCase {
    /// Both forms symmetric or both skew: `J` is an anti-isometry.
    SameSymmetry,
    /// One symmetric, one skew: `B = beta J` and `J` is an isometry.
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointnessReport {
    pub case: AdjointnessCase,
    /// `B` with `b = a B`.
    pub endomorphism: RationalMatrix,
    pub alpha: Rational,
    pub beta: Rational,
    pub j: RationalMatrix,
    pub lambda: Rational,
    /// Signatures of `a` and `b` when symmetric.
    pub signatures: (Option<Signature>, Option<Signature>),
}

fn symmetry(f: &RationalMatrix) -> Option<bool> {
    if f.is_symmetric() {
        Some(true)
    } else if f.is_skew() {
        Some(false)
    } else {
        None
    }
}

/// Verifies the dichotomy for two independent invariant forms `a`, `b`.
pub fn adjointness_check(a: &RationalMatrix, b: &RationalMatrix, comm: &CommutantAlgebra) -> Result<AdjointnessReport> {
    let n = comm.n;
    if independent_subset(&[a.to_vec(), b.to_vec()], n * n).len() != 2 {
        return Err(Error::precondition("forms must be linearly independent"));
    }
    let (Some(sym_a), Some(sym_b)) = (symmetry(a), symmetry(b)) else {
        return Err(Error::precondition("each form must be symmetric or skew"));
    };
    let endo = riesz_endomorphism(a, b)?;
    if !comm.contains(&endo) {
        return Err(Error::inconsistency(
            "Riesz endomorphism of two invariant forms is not in the commutant",
        ));
    }
    let d = decompose_endomorphism(&endo, comm)?;
    let (Some(j), Some(lambda)) = (d.j.clone(), d.lambda.clone()) else {
        return Err(Error::inconsistency(
            "independent forms related by a scalar endomorphism",
        ));
    };
    let jt = j.transpose();
    let pullback = |f: &RationalMatrix| &(&jt * f) * &j;
    let sig = |f: &RationalMatrix, s: bool| if s { congruence_signature(f).ok() } else { None };
    let signatures = (sig(a, sym_a), sig(b, sym_b));
    let case = if sym_a == sym_b {
        let neg = -lambda.clone();
        let anti = pullback(a) == a.scale(&neg) && pullback(b) == b.scale(&neg);
        let neutral = [signatures.0, signatures.1].iter().flatten().all(Signature::is_neutral);
        if !(anti && neutral) {
            return Err(Error::inconsistency(format!(
                "same-symmetry forms: anti-isometry {anti}, neutral signatures {neutral}"
            )));
        }
        AdjointnessCase::SameSymmetry
    } else {
        let iso = pullback(a) == a.scale(&lambda) && pullback(b) == b.scale(&lambda);
        if !(d.alpha.is_zero() && iso) {
            return Err(Error::inconsistency(format!(
                "mixed-symmetry forms: alpha = {}, isometry {iso}",
                d.alpha
            )));
        }
        AdjointnessCase::Mixed
    };
    Ok(AdjointnessReport {
        case,
        endomorphism: endo,
        alpha: d.alpha,
        beta: d.beta,
        j,
        lambda,
        signatures,
    })
}

/// The maximal subgroup `L` of `Gl(n, R)` preserving all invariant forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Stabilizer {
    Orthogonal { p: usize, q: usize },
    RealSymplectic { m: usize },
    ComplexOrthogonal { m: usize },
    ComplexSymplectic { m: usize },
    Unitary { p: usize, q: usize },
    QuaternionicUnitary { p: usize, q: usize },
    OStar { m: usize },
    NotSelfDual,
}

impl Stabilizer {
    /// The table's family label, e.g. `O(p,q)`.
    pub fn family(&self) -> &'static str {
        match self {
            Stabilizer::Orthogonal { .. } => "O(p,q)",
            Stabilizer::RealSymplectic { .. } => "Sp(n/2,R)",
            Stabilizer::ComplexOrthogonal { .. } => "O(n/2,C)",
            Stabilizer::ComplexSymplectic { .. } => "Sp(n/4,C)",
            Stabilizer::Unitary { .. } => "U(p/2,q/2)",
            Stabilizer::QuaternionicUnitary { .. } => "Sp(p/4,q/4)",
            Stabilizer::OStar { .. } => "O*(n/4)",
            Stabilizer::NotSelfDual => "NotSelfDual",
        }
    }

    /// Parameters substituted, e.g. `O(1,2)`.
    pub fn name(&self) -> String {
        match *self {
            Stabilizer::Orthogonal { p, q } => format!("O({p},{q})"),
            Stabilizer::RealSymplectic { m } => format!("Sp({m},R)"),
            Stabilizer::ComplexOrthogonal { m } => format!("O({m},C)"),
            Stabilizer::ComplexSymplectic { m } => format!("Sp({m},C)"),
            Stabilizer::Unitary { p, q } => format!("U({p},{q})"),
            Stabilizer::QuaternionicUnitary { p, q } => format!("Sp({p},{q})"),
            Stabilizer::OStar { m } => format!("O*({m})"),
            Stabilizer::NotSelfDual => "NotSelfDual".to_string(),
        }
    }

    /// All seven table rows in table order, as family labels.
    pub fn table_families() -> [&'static str; 7] {
        [
            "O(p,q)",
            "Sp(n/2,R)",
            "O(n/2,C)",
            "Sp(n/4,C)",
            "U(p/2,q/2)",
            "Sp(p/4,q/4)",
            "O*(n/4)",
        ]
    }
}

impl fmt::Display for Stabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub type_tag: TypeTag,
    pub dim_sym: usize,
    pub dim_skew: usize,
    /// Signature `(p, q)`, `p <= q`, of the distinguished symmetric form.
    pub signature: Option<(usize, usize)>,
    pub stabilizer: Stabilizer,
    /// Set when `n` is below the dimension guard printed in the table.
    pub guard_note: Option<String>,
}

fn guard(n: usize, min: usize) -> Option<String> {
    (n < min).then(|| format!("below table guard (n >= {min})"))
}

fn even_halves(p: usize, q: usize, d: usize, what: &str) -> Result<(usize, usize)> {
    if !p.is_multiple_of(d) || !q.is_multiple_of(d) {
        return Err(Error::inconsistency(format!(
            "{what} row with signature ({p},{q}) not divisible by {d}"
        )));
    }
    Ok((p / d, q / d))
}

/// Places an irreducible representation in the table from its commutant
/// type and form dimensions.
pub fn classify_table_row(comm: &CommutantAlgebra, forms: &FormSpace) -> Result<TableRow> {
    if comm.irreducible == Some(false) {
        return Err(Error::precondition(
            "table classification needs an irreducible representation",
        ));
    }
    let type_tag = comm
        .type_tag
        .ok_or_else(|| Error::precondition("commutant type has not been classified"))?;
    let n = forms.n;
    let (ds, dk) = (forms.dim_sym(), forms.dim_skew());
    let signature = distinguished_symmetric(forms).map(|(_, s)| s.normalized());
    let row = |stabilizer, guard_note| {
        Ok(TableRow {
            type_tag,
            dim_sym: ds,
            dim_skew: dk,
            signature,
            stabilizer,
            guard_note,
        })
    };
    if ds + dk == 0 {
        return row(Stabilizer::NotSelfDual, None);
    }
    let (p, q) = signature.unwrap_or((0, 0));
    match (type_tag, ds, dk) {
        (TypeTag::R, 1, 0) => row(Stabilizer::Orthogonal { p, q }, None),
        (TypeTag::R, 0, 1) => row(Stabilizer::RealSymplectic { m: n / 2 }, None),
        (TypeTag::C, 2, 0) => row(Stabilizer::ComplexOrthogonal { m: n / 2 }, guard(n, 4)),
        (TypeTag::C, 0, 2) => row(Stabilizer::ComplexSymplectic { m: n / 4 }, None),
        (TypeTag::C, 1, 1) => {
            let (p, q) = even_halves(p, q, 2, "unitary")?;
            row(Stabilizer::Unitary { p, q }, None)
        }
        (TypeTag::H, 1, 3) => {
            let (p, q) = even_halves(p, q, 4, "quaternionic unitary")?;
            row(Stabilizer::QuaternionicUnitary { p, q }, guard(n, 8))
        }
        (TypeTag::H, 3, 1) => row(Stabilizer::OStar { m: n / 4 }, guard(n, 8)),
        _ => Err(Error::inconsistency(format!(
            "type {} with dim S = {ds}, dim Lambda = {dk} is not a table row",
            type_tag.as_str()
        ))),
    }
}
