//! Deterministic Krylov computation of minimal polynomials.

use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use super::nullspace::{coordinates, SpanBuilder};
use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Minimal polynomial of `v` with respect to `a`: the monic `p` of least
/// degree with `p(a) v = 0`. Every Krylov vector is also pushed into
/// `covered`.
fn local_minimal_polynomial(a: &RationalMatrix, v: Vec<Rational>, covered: &mut SpanBuilder) -> Polynomial {
    let mut krylov = vec![v];
    loop {
        let next = a.apply(krylov.last().unwrap());
        if let Some(c) = coordinates(&krylov, &next) {
            for k in &krylov {
                covered.insert(k);
            }
            // x^d - sum c_k x^k
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            return Polynomial::new(coeffs);
        }
        krylov.push(next);
    }
}

/// Minimal polynomial of a square matrix.
///
/// Krylov sequences are seeded with `e_1, e_2, ...` in order, skipping seeds
/// already inside the union of previous Krylov spaces, until that union is
/// the whole space; the result is the lcm of the local minimal polynomials.
pub fn minimal_polynomial(a: &RationalMatrix) -> Result<Polynomial> {
    if !a.is_square() {
        return Err(Error::format(format!(
            "minimal polynomial of a non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut covered = SpanBuilder::new(n);
    let mut result = Polynomial::one();
    for i in 0..n {
        if covered.is_full() {
            break;
        }
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        if covered.contains(&e) {
            continue;
        }
        let local = local_minimal_polynomial(a, e, &mut covered);
        result = result.lcm(&local);
    }
    Ok(result)
}

/// Characteristic polynomial `det(x I - A)` via Faddeev-LeVerrier; used as
/// an independent check on `minimal_polynomial`.
pub fn characteristic_polynomial(a: &RationalMatrix) -> Result<Polynomial> {
    if !a.is_square() {
        return Err(Error::format("characteristic polynomial of a non-square matrix"));
    }
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = RationalMatrix::zeros(n, n);
    for k in 1..=n {
        let shifted = &m + &RationalMatrix::identity(n).scale(&coeffs[n - k + 1]);
        m = a * &shifted;
        let c = -(m.trace()) / Rational::from_integer((k as i64).into());
        coeffs[n - k] = c;
    }
    Ok(Polynomial::new(coeffs))
}
