//! Invariant bilinear forms: the form space and its symmetric/skew split,
//! signatures, the Riesz correspondence with the commutant, the table of
//! maximal stabilizers, and the complex/quaternionic extensions.

mod extension;
mod identification;
mod table;

pub use extension::{complex_extension, quaternionic_extension, ExtendedForm, ExtensionFlavor};
pub use identification::{verify_identification, Identification, IdentificationReport};
pub use table::{adjointness_check, classify_table_row, AdjointnessCase, AdjointnessReport, Stabilizer, TableRow};

use num_traits::Zero;

use crate::commutant::CommutantAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{
    congruence_signature, independent_subset, invariant_matrices, InvarianceMode, Rational, RationalMatrix, Signature,
    SpanBuilder,
};
use crate::rep::{Level, Representation};

/// `B_G(V) = S_G(V) + Lambda_G(V)` for a representation on `R^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpace {
    pub n: usize,
    pub mode: InvarianceMode,
    pub sym_basis: Vec<RationalMatrix>,
    pub skew_basis: Vec<RationalMatrix>,
    pub sym_signatures: Vec<Signature>,
    pub self_dual: bool,
}

impl FormSpace {
    pub fn dim(&self) -> usize {
        self.sym_basis.len() + self.skew_basis.len()
    }

    pub fn dim_sym(&self) -> usize {
        self.sym_basis.len()
    }

    pub fn dim_skew(&self) -> usize {
        self.skew_basis.len()
    }

    /// Symmetric basis followed by skew basis.
    pub fn basis(&self) -> Vec<RationalMatrix> {
        self.sym_basis.iter().chain(&self.skew_basis).cloned().collect()
    }

    /// Signatures normalised to `p <= q`.
    pub fn normalized_signatures(&self) -> Vec<(usize, usize)> {
        self.sym_signatures.iter().map(Signature::normalized).collect()
    }

    pub fn contains(&self, f: &RationalMatrix) -> bool {
        let mut span = SpanBuilder::new(self.n * self.n);
        for b in self.basis() {
            span.insert(&b.to_vec());
        }
        span.contains(&f.to_vec())
    }
}

pub fn invariance_mode(level: Level) -> InvarianceMode {
    match level {
        Level::LieAlgebra => InvarianceMode::AlgebraForm,
        Level::Group => InvarianceMode::GroupForm,
    }
}

fn matrices(vectors: Vec<Vec<Rational>>) -> Result<Vec<RationalMatrix>> {
    vectors.iter().map(|v| RationalMatrix::from_vec_square(v)).collect()
}

/// Solves the invariance system and splits the solution space into its
/// symmetric and skew parts.
pub fn invariant_forms(rep: &Representation) -> Result<FormSpace> {
    let n = rep.n;
    let mode = invariance_mode(rep.level);
    let kernel = invariant_matrices(&rep.generators, mode)?;
    let sym: Vec<Vec<Rational>> = kernel
        .iter()
        .map(|k| k.symmetric_part().to_vec())
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    let skew: Vec<Vec<Rational>> = kernel
        .iter()
        .map(|k| k.skew_part().to_vec())
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    let sym_basis = matrices(independent_subset(&sym, n * n))?;
    let skew_basis = matrices(independent_subset(&skew, n * n))?;
    if sym_basis.len() + skew_basis.len() != kernel.len() {
        return Err(Error::inconsistency(
            "invariant form space is not the sum of its symmetric and skew parts",
        ));
    }
    let sym_signatures = sym_basis.iter().map(congruence_signature).collect::<Result<Vec<_>>>()?;
    Ok(FormSpace {
        n,
        mode,
        self_dual: !kernel.is_empty(),
        sym_basis,
        skew_basis,
        sym_signatures,
    })
}

/// `b(x, y) = a(x, B y)`, i.e. the matrix product `a B`.
pub fn riesz_transfer(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    if !a.is_invertible() {
        return Err(Error::precondition("riesz transfer needs a non-degenerate form"));
    }
    if b.rows() != a.rows() || !b.is_square() {
        return Err(Error::format("form and endomorphism sizes differ"));
    }
    Ok(a * b)
}

/// Inverse of `riesz_transfer`: the endomorphism `a^{-1} b`.
pub fn riesz_endomorphism(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    let inv = a
        .inverse()
        .ok_or_else(|| Error::precondition("riesz transfer needs a non-degenerate form"))?;
    Ok(&inv * b)
}

/// Outcome of checking that `B -> a B` maps the commutant bijectively onto
/// the form space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RieszReport {
    pub reference_form: RationalMatrix,
    pub commutant_dim: usize,
    pub form_dim: usize,
    /// Every image is an invariant form.
    pub lands_in_forms: bool,
    /// Images of a commutant basis are linearly independent.
    pub injective: bool,
    pub bijective: bool,
}

/// Checks the Riesz correspondence using the first non-degenerate basis form
/// as reference.
pub fn riesz_bijection(forms: &FormSpace, comm: &CommutantAlgebra) -> Result<RieszReport> {
    let a = forms
        .basis()
        .into_iter()
        .find(RationalMatrix::is_invertible)
        .ok_or_else(|| Error::precondition("no non-degenerate basis form"))?;
    let images = comm
        .basis
        .iter()
        .map(|b| riesz_transfer(&a, b))
        .collect::<Result<Vec<_>>>()?;
    let lands_in_forms = images.iter().all(|f| forms.contains(f));
    let vecs: Vec<Vec<Rational>> = images.iter().map(RationalMatrix::to_vec).collect();
    let injective = independent_subset(&vecs, forms.n * forms.n).len() == images.len();
    let bijective = lands_in_forms && injective && comm.dim() == forms.dim();
    Ok(RieszReport {
        reference_form: a,
        commutant_dim: comm.dim(),
        form_dim: forms.dim(),
        lands_in_forms,
        injective,
        bijective,
    })
}

/// The symmetric form used for signature reporting: the unique one when
/// `dim S = 1`, otherwise the first basis element (all are neutral then).
pub fn distinguished_symmetric(forms: &FormSpace) -> Option<(&RationalMatrix, Signature)> {
    forms.sym_basis.first().zip(forms.sym_signatures.first().copied())
}
