//! The commutant `End_G(R^n)`, its type (real, complex, quaternionic or not a
//! division algebra) and the `alpha Id + beta J` decomposition of its elements.
//!
//! Complex and quaternionic structures are kept scaled, `J^2 = -lambda Id`
//! with rational `lambda > 0`, since normalising needs square roots.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    congruence_signature, coordinates, independent_subset, invariant_matrices, minimal_polynomial, rat, rational_sqrt,
    InvarianceMode, Rational, RationalMatrix,
};
use crate::rep::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeTag {
    R,
    C,
    H,
    NonDivision,
}

impl TypeTag {
    pub fn as_str(self) -> &'static str {
        match self {
            TypeTag::R => "R",
            TypeTag::C => "C",
            TypeTag::H => "H",
            TypeTag::NonDivision => "NonDivision",
        }
    }

    pub fn division_type(self) -> Option<DivisionType> {
        match self {
            TypeTag::R => Some(DivisionType::R),
            TypeTag::C => Some(DivisionType::C),
            TypeTag::H => Some(DivisionType::H),
            TypeTag::NonDivision => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DivisionType {
    R,
    C,
    H,
}

impl DivisionType {
    pub fn dim(self) -> usize {
        match self {
            DivisionType::R => 1,
            DivisionType::C => 2,
            DivisionType::H => 4,
        }
    }

    pub fn tag(self) -> TypeTag {
        match self {
            DivisionType::R => TypeTag::R,
            DivisionType::C => TypeTag::C,
            DivisionType::H => TypeTag::H,
        }
    }
}

/// `J` with `J^2 = -lambda Id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexStructure {
    pub j: RationalMatrix,
    pub lambda: Rational,
}

/// Anticommuting `I`, `J` with `I^2 = -lambda_i Id`, `J^2 = -lambda_j Id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionFrame {
    pub i: RationalMatrix,
    pub j: RationalMatrix,
    pub lambda_i: Rational,
    pub lambda_j: Rational,
}

impl QuaternionFrame {
    /// `K = IJ`, with `K^2 = -lambda_i lambda_j Id`.
    pub fn k(&self) -> RationalMatrix {
        &self.i * &self.j
    }

    pub fn lambda_k(&self) -> Rational {
        &self.lambda_i * &self.lambda_j
    }
}

/// Result of the division-algebra test on a commutant basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionStructure {
    pub division_type: DivisionType,
    pub complex_structure: Option<ComplexStructure>,
    pub quaternion_frame: Option<QuaternionFrame>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutantAlgebra {
    pub n: usize,
    pub basis: Vec<RationalMatrix>,
    pub type_tag: Option<TypeTag>,
    pub complex_structure: Option<ComplexStructure>,
    pub quaternion_frame: Option<QuaternionFrame>,
    /// Irreducibility flag recorded by `classify_type`.
    pub irreducible: Option<bool>,
}

impl CommutantAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, a: &RationalMatrix) -> bool {
        let basis: Vec<Vec<Rational>> = self.basis.iter().map(RationalMatrix::to_vec).collect();
        coordinates(&basis, &a.to_vec()).is_some()
    }
}

/// Kernel of the commute-mode system, in nullspace order.
pub fn commutant_basis(rep: &Representation) -> Result<CommutantAlgebra> {
    let basis = invariant_matrices(&rep.generators, InvarianceMode::Commute)?;
    for (k, b) in basis.iter().enumerate() {
        if let Some(g) = rep.generators.iter().position(|g| (g * b) != (b * g)) {
            return Err(Error::inconsistency(format!(
                "commutant element {k} fails to commute with generator {g}"
            )));
        }
    }
    Ok(CommutantAlgebra {
        n: rep.n,
        basis,
        type_tag: None,
        complex_structure: None,
        quaternion_frame: None,
        irreducible: None,
    })
}

fn first_non_scalar(n: usize, basis: &[RationalMatrix]) -> Option<RationalMatrix> {
    let id = RationalMatrix::identity(n).to_vec();
    basis
        .iter()
        .find(|b| independent_subset(&[id.clone(), b.to_vec()], n * n).len() == 2)
        .cloned()
}

/// Tests whether the algebra spanned by `basis` (assumed to be a unital
/// subalgebra of `gl(n)`) is isomorphic to R, C or H, and extracts the
/// structure. `None` means it is not a division algebra.
pub fn division_structure(n: usize, basis: &[RationalMatrix]) -> Result<Option<DivisionStructure>> {
    let id = RationalMatrix::identity(n);
    match basis.len() {
        1 => Ok(Some(DivisionStructure {
            division_type: DivisionType::R,
            complex_structure: None,
            quaternion_frame: None,
        })),
        2 => {
            let b = first_non_scalar(n, basis)
                .ok_or_else(|| Error::inconsistency("2-dimensional commutant without a non-scalar element"))?;
            let mu = minimal_polynomial(&b)?;
            if mu.degree() != Some(2) {
                return Err(Error::inconsistency(format!(
                    "non-scalar element of a 2-dimensional algebra has minimal polynomial {mu}"
                )));
            }
            // x^2 + c1 x + c0 = (x - alpha)^2 + beta^2
            let alpha = -mu.coeff(1) / rat(2);
            let beta_sq = mu.coeff(0) - &alpha * &alpha;
            if !beta_sq.is_positive() {
                return Ok(None);
            }
            Ok(Some(DivisionStructure {
                division_type: DivisionType::C,
                complex_structure: Some(ComplexStructure {
                    j: &b - &id.scale(&alpha),
                    lambda: beta_sq,
                }),
                quaternion_frame: None,
            }))
        }
        4 => {
            let nr = Rational::from_integer(n.into());
            let pure: Vec<Vec<Rational>> = basis
                .iter()
                .map(|b| (b - &id.scale(&(b.trace() / &nr))).to_vec())
                .collect();
            let pure: Vec<RationalMatrix> = independent_subset(&pure, n * n)
                .iter()
                .map(|v| RationalMatrix::from_vec_square(v))
                .collect::<Result<_>>()?;
            if pure.len() != 3 {
                return Ok(None);
            }
            let mut q = RationalMatrix::zeros(3, 3);
            for a in 0..3 {
                for b in a..3 {
                    let anti = &(&pure[a] * &pure[b]) + &(&pure[b] * &pure[a]);
                    let c = anti.get(0, 0).clone();
                    if anti != id.scale(&c) {
                        return Ok(None);
                    }
                    let half = c / rat(2);
                    q.set(a, b, half.clone());
                    q.set(b, a, half);
                }
            }
            let sig = congruence_signature(&q)?;
            if sig.negative != 3 {
                return Ok(None);
            }
            let q11 = q.get(0, 0).clone();
            let t = q.get(0, 1) / &q11;
            let i = pure[0].clone();
            let j = &pure[1] - &pure[0].scale(&t);
            let lambda_i = -q11.clone();
            let lambda_j = -(q.get(1, 1) - q.get(0, 1) * &t);
            Ok(Some(DivisionStructure {
                division_type: DivisionType::H,
                complex_structure: None,
                quaternion_frame: Some(QuaternionFrame {
                    i,
                    j,
                    lambda_i,
                    lambda_j,
                }),
            }))
        }
        _ => Ok(None),
    }
}

/// Tags the commutant; for an irreducible representation anything but R, C
/// or H contradicts Schur's lemma and is reported as an inconsistency.
pub fn classify_type(comm: &mut CommutantAlgebra, irreducible: bool) -> Result<TypeTag> {
    let structure = division_structure(comm.n, &comm.basis)?;
    comm.irreducible = Some(irreducible);
    let tag = match structure {
        Some(s) => {
            comm.complex_structure = s.complex_structure;
            comm.quaternion_frame = s.quaternion_frame;
            s.division_type.tag()
        }
        None => {
            if irreducible {
                return Err(Error::inconsistency(format!(
                    "irreducible representation with a {}-dimensional commutant that is not R, C or H",
                    comm.dim()
                )));
            }
            TypeTag::NonDivision
        }
    };
    comm.type_tag = Some(tag);
    Ok(tag)
}

/// `A = alpha Id + beta J` with `beta >= 0` and `J^2 = -lambda Id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoDecomposition {
    pub alpha: Rational,
    pub beta: Rational,
    pub j: Option<RationalMatrix>,
    pub lambda: Option<Rational>,
}

impl EndoDecomposition {
    pub fn reconstruct(&self, n: usize) -> RationalMatrix {
        let base = RationalMatrix::identity(n).scale(&self.alpha);
        match &self.j {
            Some(j) => &base + &j.scale(&self.beta),
            None => base,
        }
    }
}

pub fn decompose_endomorphism(a: &RationalMatrix, comm: &CommutantAlgebra) -> Result<EndoDecomposition> {
    if !a.is_square() || a.rows() != comm.n {
        return Err(Error::format("endomorphism has the wrong shape"));
    }
    if !comm.contains(a) {
        return Err(Error::validation("matrix is not in the span of the commutant"));
    }
    let n = comm.n;
    let id = RationalMatrix::identity(n);
    let mu = minimal_polynomial(a)?;
    let is_division = comm.type_tag.is_some_and(|t| t != TypeTag::NonDivision);
    let fail = |msg: String| {
        if is_division {
            Error::inconsistency(msg)
        } else {
            Error::precondition(msg)
        }
    };
    match mu.degree() {
        Some(1) => Ok(EndoDecomposition {
            alpha: -mu.coeff(0),
            beta: Rational::zero(),
            j: None,
            lambda: None,
        }),
        Some(2) => {
            let alpha = -mu.coeff(1) / rat(2);
            let disc = mu.coeff(0) - &alpha * &alpha;
            if !disc.is_positive() {
                return Err(fail(format!("minimal polynomial {mu} has real roots")));
            }
            let rest = a - &id.scale(&alpha);
            if let Some(cs) = &comm.complex_structure {
                if let Some(c) = coordinates(&[cs.j.to_vec()], &rest.to_vec()) {
                    let b = c[0].clone();
                    let sign = if b.is_negative() { rat(-1) } else { Rational::one() };
                    return Ok(EndoDecomposition {
                        alpha,
                        beta: b.abs(),
                        j: Some(cs.j.scale(&sign)),
                        lambda: Some(cs.lambda.clone()),
                    });
                }
            }
            match rational_sqrt(&disc) {
                Some(beta) => Ok(EndoDecomposition {
                    j: Some(rest.scale(&(Rational::one() / &beta))),
                    alpha,
                    beta,
                    lambda: Some(Rational::one()),
                }),
                None => Ok(EndoDecomposition {
                    alpha,
                    beta: Rational::one(),
                    j: Some(rest),
                    lambda: Some(disc),
                }),
            }
        }
        _ => Err(fail(format!("minimal polynomial {mu} has degree above 2"))),
    }
}

/// Commutant computed and classified using the irreducibility decision.
pub fn analyze_commutant(rep: &Representation, irreducible: bool) -> Result<CommutantAlgebra> {
    let mut comm = commutant_basis(rep)?;
    classify_type(&mut comm, irreducible)?;
    Ok(comm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j2() -> RationalMatrix {
        RationalMatrix::from_i64(&[&[0, -1], &[1, 0]])
    }

    #[test]
    fn rotation_commutant_is_complex() {
        let rep = Representation::lie_algebra("u1", vec![j2()]).unwrap();
        let mut comm = commutant_basis(&rep).unwrap();
        assert_eq!(comm.dim(), 2);
        assert!(comm.contains(&RationalMatrix::identity(2)));
        assert!(comm.contains(&j2()));
        assert_eq!(classify_type(&mut comm, true).unwrap(), TypeTag::C);
        let cs = comm.complex_structure.clone().unwrap();
        assert_eq!(cs.lambda, rat(1));
        assert_eq!(&cs.j * &cs.j, RationalMatrix::identity(2).scale(&-cs.lambda.clone()));

        let a = &RationalMatrix::identity(2).scale(&rat(2)) + &j2().scale(&rat(3));
        let d = decompose_endomorphism(&a, &comm).unwrap();
        assert_eq!((d.alpha.clone(), d.beta.clone()), (rat(2), rat(3)));
        assert_eq!(d.j.clone().unwrap(), j2());
        assert_eq!(d.reconstruct(2), a);
    }

    #[test]
    fn non_commuting_input_rejected() {
        let rep = Representation::lie_algebra("u1", vec![j2()]).unwrap();
        let comm = commutant_basis(&rep).unwrap();
        let e = RationalMatrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert!(matches!(decompose_endomorphism(&e, &comm), Err(Error::Validation(_))));
    }

    #[test]
    fn scalar_nilpotent_commutant_is_not_division() {
        let rep = Representation::lie_algebra("e12", vec![RationalMatrix::from_i64(&[&[0, 1], &[0, 0]])]).unwrap();
        let mut comm = commutant_basis(&rep).unwrap();
        assert_eq!(classify_type(&mut comm, false).unwrap(), TypeTag::NonDivision);
        let mut comm2 = commutant_basis(&rep).unwrap();
        assert!(classify_type(&mut comm2, true).unwrap_err().is_inconsistency());
    }
}
