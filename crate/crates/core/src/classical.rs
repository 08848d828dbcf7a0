//! Complex and quaternionic matrices over the rationals, their
//! realifications, and the standard forms defining the classical groups.
//!
//! Conventions:
//! - a complex matrix `A + iB` realifies to `[[A, -B], [B, A]]`, so the
//!   standard complex structure on `R^{2m}` is `[[0, -I], [I, 0]]`;
//! - a quaternionic matrix `A + iB + jC + kD = U + Vj` with `U = A + iB`,
//!   `V = C + iD` maps to the complex matrix `[[U, -V], [conj V, conj U]]`.

use crate::linalg::nullspace::kernel_of_map;
use crate::linalg::{rat, Rational, RationalMatrix};

/// `diag(-I_p, I_q)`
pub fn ipq(p: usize, q: usize) -> RationalMatrix {
    let entries: Vec<Rational> = (0..p).map(|_| rat(-1)).chain((0..q).map(|_| rat(1))).collect();
    RationalMatrix::diagonal(&entries)
}

/// `[[0, -I_m], [I_m, 0]]`
pub fn standard_symplectic(m: usize) -> RationalMatrix {
    let i = RationalMatrix::identity(m);
    let z = RationalMatrix::zeros(m, m);
    RationalMatrix::from_blocks(&z, &(-&i), &i, &z)
}

/// The standard complex structure on `R^{2m}`; equal to `realify(i I_m)`.
pub fn standard_complex_structure(m: usize) -> RationalMatrix {
    standard_symplectic(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMatrix {
    pub re: RationalMatrix,
    pub im: RationalMatrix,
}

impl ComplexMatrix {
    pub fn new(re: RationalMatrix, im: RationalMatrix) -> Self {
        assert!(re.rows() == im.rows() && re.cols() == im.cols());
        Self { re, im }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(RationalMatrix::zeros(rows, cols), RationalMatrix::zeros(rows, cols))
    }

    pub fn real(re: RationalMatrix) -> Self {
        let (r, c) = (re.rows(), re.cols());
        Self::new(re, RationalMatrix::zeros(r, c))
    }

    pub fn imaginary(im: RationalMatrix) -> Self {
        let (r, c) = (im.rows(), im.cols());
        Self::new(RationalMatrix::zeros(r, c), im)
    }

    pub fn identity(n: usize) -> Self {
        Self::real(RationalMatrix::identity(n))
    }

    pub fn rows(&self) -> usize {
        self.re.rows()
    }

    pub fn times_i(&self) -> Self {
        Self::new(-&self.im, self.re.clone())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.re.transpose(), self.im.transpose())
    }

    pub fn adjoint(&self) -> Self {
        self.conj().transpose()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let re = &(&self.re * &other.re) - &(&self.im * &other.im);
        let im = &(&self.re * &other.im) + &(&self.im * &other.re);
        Self::new(re, im)
    }

    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `[[A, -B], [B, A]]`
    pub fn realify(&self) -> RationalMatrix {
        RationalMatrix::from_blocks(&self.re, &(-&self.im), &self.im, &self.re)
    }

    /// Real and imaginary entries, row-major, concatenated.
    pub fn to_real_vec(&self) -> Vec<Rational> {
        let mut v = self.re.to_vec();
        v.extend(self.im.to_vec());
        v
    }

    /// Real basis of `gl(n, C)`: `E_ij` then `i E_ij`.
    pub fn real_basis(n: usize) -> Vec<ComplexMatrix> {
        let mut out = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(Self::real(RationalMatrix::unit(n, i, j)));
            }
        }
        for i in 0..n {
            for j in 0..n {
                out.push(Self::imaginary(RationalMatrix::unit(n, i, j)));
            }
        }
        out
    }

    pub fn combination(coeffs: &[Rational], mats: &[ComplexMatrix]) -> Self {
        let re: Vec<RationalMatrix> = mats.iter().map(|m| m.re.clone()).collect();
        let im: Vec<RationalMatrix> = mats.iter().map(|m| m.im.clone()).collect();
        Self::new(
            RationalMatrix::combination(coeffs, &re),
            RationalMatrix::combination(coeffs, &im),
        )
    }
}

/// Real basis of the complex `n x n` matrices `C` with `condition(C) = 0` for
/// every condition. The conditions must be real-linear.
pub fn complex_solutions(n: usize, conditions: &[&dyn Fn(&ComplexMatrix) -> ComplexMatrix]) -> Vec<ComplexMatrix> {
    let basis = ComplexMatrix::real_basis(n);
    let images: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| conditions.iter().flat_map(|f| f(b).to_real_vec()).collect())
        .collect();
    kernel_of_map(&images)
        .into_iter()
        .map(|c| ComplexMatrix::combination(&c, &basis))
        .collect()
}

/// Quaternionic matrix `a0 + a1 i + a2 j + a3 k` with real matrix parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionMatrix {
    pub parts: [RationalMatrix; 4],
}

impl QuaternionMatrix {
    pub fn new(parts: [RationalMatrix; 4]) -> Self {
        Self { parts }
    }

    pub fn zeros(n: usize) -> Self {
        Self::new(std::array::from_fn(|_| RationalMatrix::zeros(n, n)))
    }

    /// `m` times the quaternion unit with index `unit` (0 = 1, 1 = i, 2 = j, 3 = k).
    pub fn unit_times(m: RationalMatrix, unit: usize) -> Self {
        let n = m.rows();
        let mut parts: [RationalMatrix; 4] = std::array::from_fn(|_| RationalMatrix::zeros(n, n));
        parts[unit] = m;
        Self::new(parts)
    }

    pub fn dim(&self) -> usize {
        self.parts[0].rows()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(std::array::from_fn(|k| &self.parts[k] + &other.parts[k]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let [a0, a1, a2, a3] = &self.parts;
        let [b0, b1, b2, b3] = &other.parts;
        let m = |x: &RationalMatrix, y: &RationalMatrix| x * y;
        let r = &(&(&m(a0, b0) - &m(a1, b1)) - &m(a2, b2)) - &m(a3, b3);
        let i = &(&(&m(a0, b1) + &m(a1, b0)) + &m(a2, b3)) - &m(a3, b2);
        let j = &(&(&m(a0, b2) - &m(a1, b3)) + &m(a2, b0)) + &m(a3, b1);
        let k = &(&(&m(a0, b3) + &m(a1, b2)) - &m(a2, b1)) + &m(a3, b0);
        Self::new([r, i, j, k])
    }

    /// Quaternionic conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let [a0, a1, a2, a3] = &self.parts;
        Self::new([a0.transpose(), -&a1.transpose(), -&a2.transpose(), -&a3.transpose()])
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(RationalMatrix::is_zero)
    }

    pub fn to_real_vec(&self) -> Vec<Rational> {
        self.parts.iter().flat_map(RationalMatrix::to_vec).collect()
    }

    /// `U + Vj  ->  [[U, -V], [conj V, conj U]]`
    pub fn to_complex(&self) -> ComplexMatrix {
        let [a0, a1, a2, a3] = &self.parts;
        let u = ComplexMatrix::new(a0.clone(), a1.clone());
        let v = ComplexMatrix::new(a2.clone(), a3.clone());
        let re = RationalMatrix::from_blocks(&u.re, &(-&v.re), &v.re, &u.re);
        let im = RationalMatrix::from_blocks(&u.im, &(-&v.im), &(-&v.im), &(-&u.im));
        ComplexMatrix::new(re, im)
    }

    pub fn realify(&self) -> RationalMatrix {
        self.to_complex().realify()
    }

    pub fn real_basis(n: usize) -> Vec<QuaternionMatrix> {
        (0..4)
            .flat_map(|unit| {
                (0..n).flat_map(move |i| (0..n).map(move |j| Self::unit_times(RationalMatrix::unit(n, i, j), unit)))
            })
            .collect()
    }

    pub fn combination(coeffs: &[Rational], mats: &[QuaternionMatrix]) -> Self {
        Self::new(std::array::from_fn(|k| {
            let parts: Vec<RationalMatrix> = mats.iter().map(|m| m.parts[k].clone()).collect();
            RationalMatrix::combination(coeffs, &parts)
        }))
    }
}

/// Real basis of the quaternionic `n x n` matrices satisfying the given
/// real-linear conditions.
pub fn quaternion_solutions(
    n: usize,
    conditions: &[&dyn Fn(&QuaternionMatrix) -> QuaternionMatrix],
) -> Vec<QuaternionMatrix> {
    let basis = QuaternionMatrix::real_basis(n);
    let images: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| conditions.iter().flat_map(|f| f(b).to_real_vec()).collect())
        .collect();
    kernel_of_map(&images)
        .into_iter()
        .map(|c| QuaternionMatrix::combination(&c, &basis))
        .collect()
}

/// Real matrix of `Re s` for the sesquilinear form `s(z, w) = conj(z)^t S w`
/// in the real coordinates `(Re z, Im z)`.
pub fn sesquilinear_real_part(s: &ComplexMatrix) -> RationalMatrix {
    RationalMatrix::from_blocks(&s.re, &(-&s.im), &s.im, &s.re)
}

/// Real matrix of `Re b` for the complex bilinear form `b(z, w) = z^t S w`.
pub fn bilinear_real_part(s: &ComplexMatrix) -> RationalMatrix {
    RationalMatrix::from_blocks(&s.re, &(-&s.im), &(-&s.im), &(-&s.re))
}

/// Real matrix of `Im s` for the sesquilinear form `s(z, w) = conj(z)^t S w`.
pub fn sesquilinear_imaginary_part(s: &ComplexMatrix) -> RationalMatrix {
    RationalMatrix::from_blocks(&s.im, &s.re, &(-&s.re), &s.im)
}

/// Infinitesimal isometry condition `X^t F + F X` for a real form `F`.
pub fn form_condition(x: &RationalMatrix, form: &RationalMatrix) -> RationalMatrix {
    &(&x.transpose() * form) + &(form * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realify_is_multiplicative() {
        let a = ComplexMatrix::new(
            RationalMatrix::from_i64(&[&[1, 2], &[0, -1]]),
            RationalMatrix::from_i64(&[&[0, 1], &[3, 0]]),
        );
        let b = ComplexMatrix::new(
            RationalMatrix::from_i64(&[&[2, 0], &[1, 1]]),
            RationalMatrix::from_i64(&[&[1, -1], &[0, 2]]),
        );
        assert_eq!(a.mul(&b).realify(), &a.realify() * &b.realify());
        assert_eq!(
            ComplexMatrix::identity(2).times_i().realify(),
            standard_complex_structure(2)
        );
    }

    #[test]
    fn quaternion_units_multiply_correctly() {
        let one = RationalMatrix::identity(1);
        let i = QuaternionMatrix::unit_times(one.clone(), 1);
        let j = QuaternionMatrix::unit_times(one.clone(), 2);
        let k = QuaternionMatrix::unit_times(one.clone(), 3);
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        let minus_one = QuaternionMatrix::unit_times(-&one, 0);
        assert_eq!(i.mul(&i), minus_one);
    }

    #[test]
    fn complex_pair_recipe_is_multiplicative() {
        let a = QuaternionMatrix::new([
            RationalMatrix::from_i64(&[&[1, 0], &[2, 1]]),
            RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]),
            RationalMatrix::from_i64(&[&[3, 0], &[0, -1]]),
            RationalMatrix::from_i64(&[&[0, 0], &[1, 2]]),
        ]);
        let b = QuaternionMatrix::new([
            RationalMatrix::from_i64(&[&[0, 1], &[1, 1]]),
            RationalMatrix::from_i64(&[&[2, 0], &[0, 1]]),
            RationalMatrix::from_i64(&[&[1, 1], &[0, 0]]),
            RationalMatrix::from_i64(&[&[0, -1], &[2, 0]]),
        ]);
        assert_eq!(a.mul(&b).to_complex(), a.to_complex().mul(&b.to_complex()));
        assert_eq!(a.adjoint().to_complex(), a.to_complex().adjoint());
        assert_eq!(a.mul(&b).realify(), &a.realify() * &b.realify());
    }

    #[test]
    fn skew_hermitian_solutions() {
        // u(2): C^* + C = 0 has real dimension 4.
        let sols = complex_solutions(2, &[&|c: &ComplexMatrix| c.adjoint().add(c)]);
        assert_eq!(sols.len(), 4);
    }
}
