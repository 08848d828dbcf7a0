//! Row reduction, kernels and incremental span bookkeeping.

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced row echelon form of a row list with `width` columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
    pub width: usize,
}

pub fn rref(rows: &[Vec<Rational>], width: usize) -> Echelon {
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let pivot = a[r][col].clone();
        if !pivot.is_one() {
            for x in a[r][col..].iter_mut() {
                *x /= &pivot;
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots, width }
}

pub fn rank(rows: &[Vec<Rational>], width: usize) -> usize {
    rref(rows, width).pivots.len()
}

fn check_rows(rows: &[Vec<Rational>]) -> Result<usize> {
    let width = rows
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::format("nullspace of an empty row list has no defined width"))?;
    if width == 0 {
        return Err(Error::format("rows must have at least one column"));
    }
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::format("ragged rows in linear system"));
    }
    Ok(width)
}

/// Basis of the right kernel of `rows`.
///
/// One vector per free column, in ascending free-column order. Each vector
/// is scaled so that its first nonzero entry is 1.
pub fn nullspace_basis(rows: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let width = check_rows(rows)?;
    Ok(nullspace_with_width(rows, width))
}

/// Kernel of a system with `width` unknowns; an empty row list means every
/// vector is a solution.
pub fn nullspace_with_width(rows: &[Vec<Rational>], width: usize) -> Vec<Vec<Rational>> {
    let ech = rref(rows, width);
    let mut is_pivot = vec![false; width];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..width)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut v = vec![Rational::zero(); width];
            v[free] = Rational::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if !row[free].is_zero() {
                    v[p] = -row[free].clone();
                }
            }
            normalize_leading(&mut v);
            v
        })
        .collect()
}

/// Kernel of a linear map given by the images of the domain basis vectors.
/// Returns coordinate vectors with respect to that domain basis.
pub fn kernel_of_map(images: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let domain = images.len();
    let codomain = images.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Rational>> = (0..codomain)
        .map(|r| images.iter().map(|img| img[r].clone()).collect())
        .collect();
    nullspace_with_width(&rows, domain)
}

/// Scales `v` so that its first nonzero entry equals 1.
pub fn normalize_leading(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        if !lead.is_one() {
            for x in v.iter_mut() {
                *x /= &lead;
            }
        }
    }
}

/// Coordinates of `target` in terms of linearly independent `basis`
/// vectors, or `None` when `target` is outside their span.
pub fn coordinates(basis: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let m = target.len();
    if basis.iter().any(|b| b.len() != m) {
        return None;
    }
    // Augmented system: column j is basis[j], last column is target.
    let rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let ech = rref(&rows, k + 1);
    if ech.pivots.contains(&k) {
        return None;
    }
    if ech.pivots.len() != k {
        // Dependent basis: no unique coordinates.
        return None;
    }
    let mut coords = vec![Rational::zero(); k];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        coords[p] = row[k].clone();
    }
    Some(coords)
}

/// Incrementally grown span with a semi-echelon shadow for membership tests.
///
/// `basis()` returns the accepted input vectors in insertion order; the
/// echelon rows are only used for reduction.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    width: usize,
    echelon: Vec<(usize, Vec<Rational>)>,
    accepted: Vec<Vec<Rational>>,
}

impl SpanBuilder {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            echelon: Vec::new(),
            accepted: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.accepted.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.accepted
    }

    pub fn into_basis(self) -> Vec<Vec<Rational>> {
        self.accepted
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (pivot, row) in &self.echelon {
            if r[*pivot].is_zero() {
                continue;
            }
            let factor = r[*pivot].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` if it is independent of the current span; returns whether it
    /// was added.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = r[pivot].clone();
        for x in r.iter_mut() {
            *x /= &lead;
        }
        self.echelon.push((pivot, r));
        self.accepted.push(v.to_vec());
        true
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.width
    }
}

/// Independent subset of `vectors`, first occurrence wins.
pub fn independent_subset(vectors: &[Vec<Rational>], width: usize) -> Vec<Vec<Rational>> {
    let mut span = SpanBuilder::new(width);
    for v in vectors {
        span.insert(v);
    }
    span.into_basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::rat;

    fn rows(data: &[&[i64]]) -> Vec<Vec<Rational>> {
        data.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(nullspace_basis(&rows(&[&[1, 0], &[0, 1]])).unwrap().is_empty());
    }

    #[test]
    fn single_relation_canonical_vector() {
        let k = nullspace_basis(&rows(&[&[1, 1]])).unwrap();
        assert_eq!(k, rows(&[&[1, -1]]));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(matches!(
            nullspace_basis(&rows(&[&[1, 1], &[1]])),
            Err(Error::Format(_))
        ));
        assert!(nullspace_basis(&[]).is_err());
    }

    #[test]
    fn kernel_vectors_annihilate_rows() {
        let a = rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let k = nullspace_basis(&a).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in &a {
                let dot: Rational = r.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn coordinates_solve_or_reject() {
        let basis = rows(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(
            coordinates(&basis, &[rat(2), rat(3), rat(5)]),
            Some(vec![rat(2), rat(3)])
        );
        assert_eq!(coordinates(&basis, &[rat(1), rat(1), rat(0)]), None);
    }

    #[test]
    fn span_builder_tracks_dimension() {
        let mut s = SpanBuilder::new(3);
        assert!(s.insert(&[rat(1), rat(1), rat(0)]));
        assert!(s.insert(&[rat(0), rat(1), rat(1)]));
        assert!(!s.insert(&[rat(1), rat(2), rat(1)]));
        assert!(s.contains(&[rat(2), rat(0), rat(-2)]));
        assert!(!s.contains(&[rat(0), rat(0), rat(1)]));
        assert_eq!(s.dim(), 2);
    }
}
