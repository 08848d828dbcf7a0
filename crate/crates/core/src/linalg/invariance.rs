//! Linear systems over `vec(X)` expressing invariance conditions.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::RationalMatrix;
use super::nullspace::nullspace_with_width;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvarianceMode {
    /// `X g = g X`
    Commute,
    /// `g^t X + X g = 0`
    AlgebraForm,
    /// `g^t X g = X`
    GroupForm,
}

fn check_generators(generators: &[RationalMatrix]) -> Result<usize> {
    let first = generators
        .first()
        .ok_or_else(|| Error::precondition("unconstrained system: empty generator list"))?;
    let n = first.rows();
    if generators.iter().any(|g| g.rows() != n || g.cols() != n) {
        return Err(Error::format("generators must be square of equal dimension"));
    }
    Ok(n)
}

/// Stacked linear system in the `n^2` unknowns `vec(X)` (row-major, `X[i][j]`
/// at index `i n + j`), `n^2` rows per generator.
pub fn invariance_system(generators: &[RationalMatrix], mode: InvarianceMode) -> Result<Vec<Vec<Rational>>> {
    let n = check_generators(generators)?;
    let idx = |i: usize, j: usize| i * n + j;
    let mut rows = Vec::with_capacity(generators.len() * n * n);
    for g in generators {
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                match mode {
                    InvarianceMode::Commute => {
                        // (Xg - gX)[r][c] = sum_k X[r][k] g[k][c] - g[r][k] X[k][c]
                        for k in 0..n {
                            row[idx(r, k)] += g.get(k, c);
                            row[idx(k, c)] -= g.get(r, k);
                        }
                    }
                    InvarianceMode::AlgebraForm => {
                        // (g^t X + X g)[r][c] = sum_k g[k][r] X[k][c] + X[r][k] g[k][c]
                        for k in 0..n {
                            row[idx(k, c)] += g.get(k, r);
                            row[idx(r, k)] += g.get(k, c);
                        }
                    }
                    InvarianceMode::GroupForm => {
                        // (g^t X g - X)[r][c] = sum_{k,l} g[k][r] X[k][l] g[l][c] - X[r][c]
                        for k in 0..n {
                            let gkr = g.get(k, r);
                            if gkr.is_zero() {
                                continue;
                            }
                            for l in 0..n {
                                let glc = g.get(l, c);
                                if !glc.is_zero() {
                                    row[idx(k, l)] += gkr * glc;
                                }
                            }
                        }
                        row[idx(r, c)] -= Rational::from_integer(1.into());
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    Ok(rows)
}

/// Kernel of the invariance system, reshaped into `n x n` matrices.
pub fn invariant_matrices(generators: &[RationalMatrix], mode: InvarianceMode) -> Result<Vec<RationalMatrix>> {
    let n = check_generators(generators)?;
    let rows = invariance_system(generators, mode)?;
    nullspace_with_width(&rows, n * n)
        .into_iter()
        .map(|v| RationalMatrix::from_flat(n, n, v))
        .collect()
}

/// Whether `x` satisfies the invariance condition for `g`.
pub fn satisfies(g: &RationalMatrix, x: &RationalMatrix, mode: InvarianceMode) -> bool {
    match mode {
        InvarianceMode::Commute => g.bracket(x).is_zero(),
        InvarianceMode::AlgebraForm => (&(&g.transpose() * x) + &(x * g)).is_zero(),
        InvarianceMode::GroupForm => &(&g.transpose() * x) * g == *x,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{rat, ratio};

    #[test]
    fn rotation_commutant_is_two_dimensional() {
        let j = RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        let k = invariant_matrices(std::slice::from_ref(&j), InvarianceMode::Commute).unwrap();
        assert_eq!(k.len(), 2);
        for x in &k {
            assert!(satisfies(&j, x, InvarianceMode::Commute));
        }
    }

    #[test]
    fn group_form_for_hyperbolic_scaling() {
        // g = diag(2, 1/2): g^t X g = X forces X00 = X11 = 0.
        let g = RationalMatrix::diagonal(&[rat(2), ratio(1, 2)]);
        let k = invariant_matrices(&[g], InvarianceMode::GroupForm).unwrap();
        assert_eq!(k, vec![RationalMatrix::unit(2, 0, 1), RationalMatrix::unit(2, 1, 0)]);
    }

    #[test]
    fn empty_generators_rejected() {
        assert!(matches!(
            invariance_system(&[], InvarianceMode::Commute),
            Err(Error::Precondition(_))
        ));
    }
}
