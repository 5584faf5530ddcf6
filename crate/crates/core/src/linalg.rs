//! Exact Gaussian elimination over a [`Field`]: reduced echelon bases,
//! membership residues, kernels, and matrix inversion. Vectors are rows.

use crate::scalar::{Field, Scalar};

/// A reduced row-echelon basis: rows sorted by pivot column, pivots
/// normalized to 1, pivot columns cleared everywhere else, no zero rows.
/// This form is canonical for the row span, so two spans are equal iff their
/// `Echelon` bases are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Echelon {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Reduced echelon form of the row span of `rows`.
pub fn echelon(field: &Field, rows: Vec<Vec<Scalar>>, ncols: usize) -> Echelon {
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in rows {
        debug_assert_eq!(row.len(), ncols);
        let mut r = reduce_against(field, &basis, &pivots, &row);
        if let Some(p) = r.iter().position(|x| !field.is_zero(x)) {
            let inv = field.inv(&r[p]).expect("pivot nonzero");
            for x in r.iter_mut() {
                *x = field.mul(x, &inv);
            }
            // Clear column p in the existing rows.
            for (b, _) in basis.iter_mut().zip(&pivots) {
                let c = b[p].clone();
                if !field.is_zero(&c) {
                    for (bx, rx) in b.iter_mut().zip(&r) {
                        *bx = field.sub(bx, &field.mul(&c, rx));
                    }
                }
            }
            let at = pivots.iter().position(|&q| q > p).unwrap_or(pivots.len());
            basis.insert(at, r);
            pivots.insert(at, p);
        }
    }
    Echelon {
        rows: basis,
        pivots,
    }
}

/// Residue of `v` after reduction against an echelon basis; zero iff `v` is
/// in the span.
pub fn reduce_against(
    field: &Field,
    basis: &[Vec<Scalar>],
    pivots: &[usize],
    v: &[Scalar],
) -> Vec<Scalar> {
    let mut r = v.to_vec();
    for (b, &p) in basis.iter().zip(pivots) {
        let c = r[p].clone();
        if !field.is_zero(&c) {
            for (rx, bx) in r.iter_mut().zip(b) {
                *rx = field.sub(rx, &field.mul(&c, bx));
            }
        }
    }
    r
}

pub fn contains(field: &Field, e: &Echelon, v: &[Scalar]) -> bool {
    reduce_against(field, &e.rows, &e.pivots, v)
        .iter()
        .all(|x| field.is_zero(x))
}

/// Basis of `{ x : A x^T = 0 }` where the rows of `a` are the constraints and
/// `x` has `ncols` coordinates.
pub fn kernel_basis(field: &Field, a: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let e = echelon(field, a.to_vec(), ncols);
    let mut basis = Vec::new();
    for j in 0..ncols {
        if e.pivots.contains(&j) {
            continue;
        }
        let mut x = vec![field.zero(); ncols];
        x[j] = field.one();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            x[p] = field.neg(&row[j]);
        }
        basis.push(x);
    }
    basis
}

/// Inverse of a square matrix (rows), or `None` if singular.
pub fn invert(field: &Field, m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    // Augment with the identity and reduce.
    let rows: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            debug_assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let e = echelon(field, rows, 2 * n);
    if e.pivots.len() != n || e.pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(e.rows.iter().map(|r| r[n..].to_vec()).collect())
}

pub fn rank(field: &Field, rows: &[Vec<Scalar>], ncols: usize) -> usize {
    echelon(field, rows.to_vec(), ncols).dim()
}

/// Row vector times matrix (rows of `m` indexed by coordinates of `v`).
pub fn apply(field: &Field, v: &[Scalar], m: &[Vec<Scalar>]) -> Vec<Scalar> {
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut out = vec![field.zero(); ncols];
    for (c, row) in v.iter().zip(m) {
        if field.is_zero(c) {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o = field.add(o, &field.mul(c, x));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::rationals().from_integer(n)
    }

    #[test]
    fn echelon_is_canonical() {
        let f = Field::rationals();
        let a = echelon(&f, vec![vec![q(1), q(2)], vec![q(2), q(4)]], 2);
        let b = echelon(&f, vec![vec![q(3), q(6)]], 2);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn membership() {
        let f = Field::rationals();
        let e = echelon(&f, vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]], 3);
        assert!(contains(&f, &e, &[q(1), q(1), q(2)]));
        assert!(!contains(&f, &e, &[q(1), q(1), q(1)]));
    }

    #[test]
    fn kernel() {
        let f = Field::rationals();
        // x + y + z = 0 has a 2-dimensional kernel.
        let k = kernel_basis(&f, &[vec![q(1), q(1), q(1)]], 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            let s = f.add(&f.add(&x[0], &x[1]), &x[2]);
            assert!(f.is_zero(&s));
        }
    }

    #[test]
    fn inversion() {
        let f = Field::rationals();
        let m = vec![vec![q(1), q(1)], vec![q(0), q(2)]];
        let inv = invert(&f, &m).unwrap();
        let prod = apply(&f, &m[0], &inv);
        assert_eq!(prod, vec![q(1), q(0)]);
        assert!(invert(&f, [vec![q(1), q(2)], vec![q(2), q(4)]].as_ref()).is_none());
    }
}
