//! Inertia of symmetric forms by exact congruence diagonalisation.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::RationalMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Counts of negative, positive and zero diagonal entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub negative: usize,
    pub positive: usize,
    pub zero: usize,
}

impl Signature {
    pub fn dim(&self) -> usize {
        self.negative + self.positive + self.zero
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }

    /// Nondegenerate with as many negative as positive directions.
    pub fn is_neutral(&self) -> bool {
        self.zero == 0 && self.negative == self.positive
    }

    /// `(p, q)` with `p <= q`, removing the sign ambiguity of `F` vs `-F`.
    pub fn normalized(&self) -> (usize, usize) {
        (self.negative.min(self.positive), self.negative.max(self.positive))
    }
}

/// Diagonal of a congruent diagonal form `P^t S P`.
///
/// Pivoting: the current diagonal entry if nonzero, otherwise the first later
/// nonzero diagonal entry (swapped in), otherwise the lowest-index nonzero
/// partner `j` in the current row, whose row and column are added to the
/// current ones to create a nonzero pivot.
pub fn congruence_diagonal(s: &RationalMatrix) -> Result<Vec<Rational>> {
    if !s.is_symmetric() {
        return Err(Error::precondition("congruence signature requires a symmetric matrix"));
    }
    let n = s.rows();
    let mut a = s.row_vectors();
    let swap = |a: &mut Vec<Vec<Rational>>, i: usize, j: usize| {
        a.swap(i, j);
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    };
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                swap(&mut a, k, i);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // row_k += row_j, then col_k += col_j
                let row_j = a[j].clone();
                for (x, y) in a[k].iter_mut().zip(&row_j) {
                    *x += y;
                }
                for row in a.iter_mut() {
                    let y = row[j].clone();
                    row[k] += y;
                }
            } else {
                continue;
            }
        }
        let pivot = a[k][k].clone();
        for j in k + 1..n {
            if a[j][k].is_zero() {
                continue;
            }
            let factor = &a[j][k] / &pivot;
            let row_k = a[k].clone();
            for (x, y) in a[j].iter_mut().zip(&row_k) {
                *x -= &factor * y;
            }
            for row in a.iter_mut() {
                let y = row[k].clone();
                row[j] -= &factor * y;
            }
        }
    }
    Ok((0..n).map(|i| a[i][i].clone()).collect())
}

pub fn congruence_signature(s: &RationalMatrix) -> Result<Signature> {
    let diag = congruence_diagonal(s)?;
    let mut sig = Signature {
        negative: 0,
        positive: 0,
        zero: 0,
    };
    for d in &diag {
        if d.is_zero() {
            sig.zero += 1;
        } else if d.is_positive() {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
    }
    Ok(sig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::rat;

    #[test]
    fn diagonal_input() {
        let s = RationalMatrix::diagonal(&[rat(-1), rat(1), rat(1)]);
        assert_eq!(
            congruence_signature(&s).unwrap(),
            Signature {
                negative: 1,
                positive: 2,
                zero: 0
            }
        );
    }

    #[test]
    fn hyperbolic_plane_is_neutral() {
        let s = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let sig = congruence_signature(&s).unwrap();
        assert_eq!(
            sig,
            Signature {
                negative: 1,
                positive: 1,
                zero: 0
            }
        );
        assert!(sig.is_neutral());
    }

    #[test]
    fn degenerate_and_zero_rows() {
        let s = RationalMatrix::from_i64(&[&[0, 0, 0], &[0, 0, 2], &[0, 2, 0]]);
        assert_eq!(
            congruence_signature(&s).unwrap(),
            Signature {
                negative: 1,
                positive: 1,
                zero: 1
            }
        );
        let z = RationalMatrix::zeros(2, 2);
        assert_eq!(congruence_signature(&z).unwrap().zero, 2);
    }

    #[test]
    fn non_symmetric_rejected() {
        let s = RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(matches!(congruence_signature(&s), Err(Error::Precondition(_))));
    }
}
