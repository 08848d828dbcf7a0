//! Complex and quaternionic extensions of a real invariant form.
//!
//! Entries are recorded in the real picture with the scaled structures, so
//! no square roots are taken: for a complex structure `I` with
//! `I^2 = -lambda Id` the components are `a(b_k, b_l)` and `a(b_k, I b_l)`,
//! and the unit-normalised imaginary part is the latter divided by
//! `sqrt(lambda)`.

use serde::{Deserialize, Serialize};

use super::FormSpace;
use crate::commutant::{CommutantAlgebra, TypeTag};
use crate::error::{Error, Result};
use crate::linalg::{congruence_signature, Rational, RationalMatrix, Signature, SpanBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionFlavor {
    ComplexBilinear,
    ComplexHermitian,
    QuaternionicHermitian,
    QuaternionicSkewHermitian,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedForm {
    pub flavor: ExtensionFlavor,
    /// Whether the real form being extended is symmetric (else skew).
    pub source_symmetric: bool,
    /// Complex: `[a(b_k, b_l)], [a(b_k, I b_l)]`. Quaternionic:
    /// `[a(b_k, b_l)], [a(-I b_k, b_l)], [a(-J b_k, b_l)], [a(-K b_k, b_l)]`.
    pub components: Vec<RationalMatrix>,
    /// Real vectors `b_k` forming a basis over the discovered skew field.
    pub basis_map: Vec<Vec<Rational>>,
    /// `lambda` of `I`, or `(lambda_I, lambda_J)` for a quaternion frame.
    pub scales: Vec<Rational>,
    /// Signature over the skew field, for Hermitian flavors.
    pub signature: Option<(usize, usize)>,
}

impl ExtendedForm {
    /// `symmetric`, `skew`, `hermitian` or `skew_hermitian`.
    pub fn symmetry_label(&self) -> &'static str {
        match (self.flavor, self.source_symmetric) {
            (ExtensionFlavor::ComplexBilinear, true) => "symmetric",
            (ExtensionFlavor::ComplexBilinear, false) => "skew",
            (ExtensionFlavor::ComplexHermitian, true) | (ExtensionFlavor::QuaternionicHermitian, _) => "hermitian",
            _ => "skew_hermitian",
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::from_integer(0.into()); n];
    v[i] = Rational::from_integer(1.into());
    v
}

/// Greedy basis over the algebra generated by `structures`: `e_i` is taken
/// when it is outside the real span of all `S b` for chosen `b`.
fn adapted_basis(n: usize, structures: &[RationalMatrix]) -> Vec<Vec<Rational>> {
    let mut span = SpanBuilder::new(n);
    let mut chosen = Vec::new();
    for i in 0..n {
        let e = unit(n, i);
        if span.contains(&e) {
            continue;
        }
        span.insert(&e);
        for s in structures {
            span.insert(&s.apply(&e));
        }
        chosen.push(e);
    }
    chosen
}

/// `[x_k^t A y_l]`
fn gram(a: &RationalMatrix, xs: &[Vec<Rational>], ys: &[Vec<Rational>]) -> RationalMatrix {
    let m = xs.len();
    let mut out = RationalMatrix::zeros(m, ys.len());
    for (k, x) in xs.iter().enumerate() {
        let ax = a.transpose().apply(x);
        for (l, y) in ys.iter().enumerate() {
            out.set(k, l, ax.iter().zip(y).map(|(p, q)| p * q).sum());
        }
    }
    out
}

fn distinguished(forms: &FormSpace) -> Result<(RationalMatrix, bool)> {
    if let Some(a) = forms.sym_basis.first() {
        Ok((a.clone(), true))
    } else if let Some(a) = forms.skew_basis.first() {
        Ok((a.clone(), false))
    } else {
        Err(Error::precondition("representation is not self-dual"))
    }
}

fn halved(sig: Signature, d: usize) -> Result<(usize, usize)> {
    if sig.zero != 0 || !sig.negative.is_multiple_of(d) || !sig.positive.is_multiple_of(d) {
        return Err(Error::inconsistency(format!(
            "real signature ({}, {}, {}) is not that of a form over a {d}-dimensional skew field",
            sig.negative, sig.positive, sig.zero
        )));
    }
    Ok((sig.negative / d, sig.positive / d))
}

/// Extends the distinguished form `a` over the complex structure of a
/// type-C commutant. Exactly one of the bilinear and sesquilinear
/// extensions survives; which one decides the flavor.
pub fn complex_extension(forms: &FormSpace, comm: &CommutantAlgebra) -> Result<ExtendedForm> {
    let cs = match (comm.type_tag, &comm.complex_structure) {
        (Some(TypeTag::C), Some(cs)) => cs,
        _ => return Err(Error::precondition("complex extension needs a commutant of type C")),
    };
    let (a, source_symmetric) = distinguished(forms)?;
    let n = forms.n;
    let i = &cs.j;
    let it = i.transpose();
    let ai = &a * i;
    let ita = &it * &a;
    let ita_i = &ita * i;
    // I a-selfadjoint: the Hermitian extension vanishes, the bilinear one survives.
    let bilinear = ita_i == a.scale(&-cs.lambda.clone()) && ai == ita;
    // I a-skew: the bilinear extension vanishes.
    let hermitian = ita_i == a.scale(&cs.lambda) && (&ai + &ita).is_zero();
    if bilinear == hermitian {
        return Err(Error::inconsistency(format!(
            "complex extension dichotomy fails: bilinear {bilinear}, hermitian {hermitian}"
        )));
    }
    let basis = adapted_basis(n, std::slice::from_ref(i));
    if basis.len() * 2 != n {
        return Err(Error::inconsistency(
            "complex structure does not give a complex basis of half size",
        ));
    }
    let i_basis: Vec<Vec<Rational>> = basis.iter().map(|b| i.apply(b)).collect();
    let re = gram(&a, &basis, &basis);
    let ims = gram(&a, &basis, &i_basis);
    let (re_ok, im_ok) = match (bilinear, source_symmetric) {
        (true, true) => (re.is_symmetric(), ims.is_symmetric()),
        (true, false) => (re.is_skew(), ims.is_skew()),
        (false, true) => (re.is_symmetric(), ims.is_skew()),
        (false, false) => (re.is_skew(), ims.is_symmetric()),
    };
    if !(re_ok && im_ok) {
        return Err(Error::inconsistency("extended form lacks the expected symmetry"));
    }
    let signature = if hermitian {
        // Real part of the Hermitian form (i times it in the skew case).
        let real = if source_symmetric { a.clone() } else { ai.clone() };
        Some(halved(congruence_signature(&real)?, 2)?)
    } else {
        None
    };
    Ok(ExtendedForm {
        flavor: if bilinear {
            ExtensionFlavor::ComplexBilinear
        } else {
            ExtensionFlavor::ComplexHermitian
        },
        source_symmetric,
        components: vec![re, ims],
        basis_map: basis,
        scales: vec![cs.lambda.clone()],
        signature,
    })
}

/// Builds `a_H(x, y) = a(x,y) + i a(xi,y) + j a(xj,y) + k a(xk,y)` with
/// `x q = conj(q)(x)`, from the one-dimensional part of the form space.
pub fn quaternionic_extension(forms: &FormSpace, comm: &CommutantAlgebra) -> Result<ExtendedForm> {
    let frame = match (comm.type_tag, &comm.quaternion_frame) {
        (Some(TypeTag::H), Some(f)) => f,
        _ => {
            return Err(Error::precondition(
                "quaternionic extension needs a commutant of type H",
            ))
        }
    };
    if !forms.self_dual {
        return Err(Error::precondition("representation is not self-dual"));
    }
    let (a, source_symmetric) = match (forms.dim_sym(), forms.dim_skew()) {
        (1, 3) => (forms.sym_basis[0].clone(), true),
        (3, 1) => (forms.skew_basis[0].clone(), false),
        (s, k) => {
            return Err(Error::inconsistency(format!(
                "quaternionic type with dim S = {s}, dim Lambda = {k}; expected 1 and 3"
            )))
        }
    };
    let n = forms.n;
    let k = frame.k();
    let units = [frame.i.clone(), frame.j.clone(), k];
    for (name, u) in ["I", "J", "K"].iter().zip(&units) {
        if !(&(&a * u) + &(&u.transpose() * &a)).is_zero() {
            return Err(Error::inconsistency(format!(
                "{name} is not skew-adjoint for the distinguished form"
            )));
        }
    }
    let basis = adapted_basis(n, &units);
    if basis.len() * 4 != n {
        return Err(Error::inconsistency(
            "quaternion frame does not give a quaternionic basis of quarter size",
        ));
    }
    let mut components = vec![gram(&a, &basis, &basis)];
    for u in &units {
        let moved: Vec<Vec<Rational>> = basis
            .iter()
            .map(|b| u.scale(&Rational::from_integer((-1).into())).apply(b))
            .collect();
        components.push(gram(&a, &moved, &basis));
    }
    let (real_ok, imag_ok) = if source_symmetric {
        (
            components[0].is_symmetric(),
            components[1..].iter().all(RationalMatrix::is_skew),
        )
    } else {
        (
            components[0].is_skew(),
            components[1..].iter().all(RationalMatrix::is_symmetric),
        )
    };
    if !(real_ok && imag_ok) {
        return Err(Error::inconsistency(
            "quaternionic extension lacks (skew-)Hermitian symmetry",
        ));
    }
    let signature = if source_symmetric {
        Some(halved(congruence_signature(&a)?, 4)?)
    } else {
        None
    };
    Ok(ExtendedForm {
        flavor: if source_symmetric {
            ExtensionFlavor::QuaternionicHermitian
        } else {
            ExtensionFlavor::QuaternionicSkewHermitian
        },
        source_symmetric,
        components,
        basis_map: basis,
        scales: vec![frame.lambda_i.clone(), frame.lambda_j.clone()],
        signature,
    })
}
