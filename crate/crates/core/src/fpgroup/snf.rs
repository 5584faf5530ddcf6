//! Smith normal form of integer matrices, with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix (rows x cols), arbitrary precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|x| BigInt::from(*x)).collect())
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal satisfying the
/// divisibility chain `d1 | d2 | ...`, all diagonal entries nonnegative.
#[derive(Debug, Clone)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    /// Torsion coefficients (diagonal entries > 1) followed by one `0` per
    /// free rank, for a presentation with `ngens` generators.
    pub fn abelian_invariants(&self, ngens: usize) -> Vec<BigInt> {
        let mut inv: Vec<BigInt> = self
            .diagonal()
            .into_iter()
            .filter(|d| *d > BigInt::one())
            .collect();
        let free_rank = ngens - self.rank;
        inv.extend(std::iter::repeat_n(BigInt::zero(), free_rank));
        inv
    }
}

/// Smith normal form by elementary row/column operations, tracking the
/// unimodular transforms.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);
    let mut t = 0;
    while t < n {
        // Pick the nonzero entry of smallest absolute value in the submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..d.rows {
            for j in t..d.cols {
                if !d[(i, j)].is_zero()
                    && pivot
                        .map(|(pi, pj)| d[(i, j)].abs() < d[(pi, pj)].abs())
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut d, &mut u, t, pi);
        swap_cols(&mut d, &mut v, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..d.rows {
                if !d[(i, t)].is_zero() {
                    let q = div_nearest(&d[(i, t)], &d[(t, t)]);
                    row_op(&mut d, &mut u, i, t, &q);
                    if !d[(i, t)].is_zero() {
                        swap_rows(&mut d, &mut u, t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..d.cols {
                if !d[(t, j)].is_zero() {
                    let q = div_nearest(&d[(t, j)], &d[(t, t)]);
                    col_op(&mut d, &mut v, j, t, &q);
                    if !d[(t, j)].is_zero() {
                        swap_cols(&mut d, &mut v, t, j);
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        // Make the pivot divide everything below/right of it.
        let mut offending = None;
        'search: for i in t + 1..d.rows {
            for j in t + 1..d.cols {
                if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                    offending = Some(i);
                    break 'search;
                }
            }
        }
        if let Some(i) = offending {
            // Add row i to row t and redo this pivot.
            add_row(&mut d, &mut u, t, i);
            continue;
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, &mut u, t);
        }
        t += 1;
    }
    let rank = (0..n).filter(|i| !d[(*i, *i)].is_zero()).count();
    Snf { d, u, v, rank }
}

fn swap_rows(d: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..d.cols {
        let x = d[(a, j)].clone();
        d[(a, j)] = d[(b, j)].clone();
        d[(b, j)] = x;
    }
    for j in 0..u.cols {
        let x = u[(a, j)].clone();
        u[(a, j)] = u[(b, j)].clone();
        u[(b, j)] = x;
    }
}

fn swap_cols(d: &mut IntMatrix, v: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..d.rows {
        let x = d[(i, a)].clone();
        d[(i, a)] = d[(i, b)].clone();
        d[(i, b)] = x;
    }
    for i in 0..v.rows {
        let x = v[(i, a)].clone();
        v[(i, a)] = v[(i, b)].clone();
        v[(i, b)] = x;
    }
}

/// row_i -= q * row_t
fn row_op(d: &mut IntMatrix, u: &mut IntMatrix, i: usize, t: usize, q: &BigInt) {
    for j in 0..d.cols {
        let sub = q * &d[(t, j)];
        d[(i, j)] -= sub;
    }
    for j in 0..u.cols {
        let sub = q * &u[(t, j)];
        u[(i, j)] -= sub;
    }
}

/// col_j -= q * col_t
fn col_op(d: &mut IntMatrix, v: &mut IntMatrix, j: usize, t: usize, q: &BigInt) {
    for i in 0..d.rows {
        let sub = q * &d[(i, t)];
        d[(i, j)] -= sub;
    }
    for i in 0..v.rows {
        let sub = q * &v[(i, t)];
        v[(i, j)] -= sub;
    }
}

fn add_row(d: &mut IntMatrix, u: &mut IntMatrix, t: usize, i: usize) {
    for j in 0..d.cols {
        let add = d[(i, j)].clone();
        d[(t, j)] += add;
    }
    for j in 0..u.cols {
        let add = u[(i, j)].clone();
        u[(t, j)] += add;
    }
}

fn negate_row(d: &mut IntMatrix, u: &mut IntMatrix, t: usize) {
    for j in 0..d.cols {
        let x = -d[(t, j)].clone();
        d[(t, j)] = x;
    }
    for j in 0..u.cols {
        let x = -u[(t, j)].clone();
        u[(t, j)] = x;
    }
}

/// Quotient rounded to nearest, so remainders stay small.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Is `vec` in the lattice spanned by the rows of `m`? Decided through the
/// Smith form: `vec` is a row-lattice member iff the coordinates of `vec * v`
/// are divisible by the corresponding diagonal entries.
pub fn in_row_lattice(snf: &Snf, vec: &[BigInt]) -> bool {
    assert_eq!(vec.len(), snf.v.rows);
    let y: Vec<BigInt> = (0..snf.v.cols)
        .map(|j| (0..snf.v.rows).map(|i| &vec[i] * &snf.v[(i, j)]).sum())
        .collect();
    for (j, yj) in y.iter().enumerate() {
        let dj = if j < snf.d.rows.min(snf.d.cols) {
            snf.d[(j, j)].clone()
        } else {
            BigInt::zero()
        };
        if dj.is_zero() {
            if !yj.is_zero() {
                return false;
            }
        } else if !(yj % &dj).is_zero() {
            return false;
        }
    }
    true
}
