//! Row-echelon linear algebra over F_p.

use super::prime::{FpScalar, Prime};

/// Reduced row echelon basis of a span, with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Echelon {
    pub rows: Vec<Vec<FpScalar>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; zero result means `v` is in the span.
    pub fn residual(&self, p: Prime, v: &[FpScalar]) -> Vec<FpScalar> {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c];
            if f != 0 {
                axpy(p, &mut v, p.neg(f), row);
            }
        }
        v
    }

    pub fn contains(&self, p: Prime, v: &[FpScalar]) -> bool {
        self.residual(p, v).iter().all(|&x| x == 0)
    }
}

/// `y += a * x`
#[inline]
pub fn axpy(p: Prime, y: &mut [FpScalar], a: FpScalar, x: &[FpScalar]) {
    if a == 0 {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = p.add(*yi, p.mul(a, xi));
    }
}

/// Canonical reduced row echelon form of the span of `rows`.
///
/// Pivots increase, pivot entries are 1, and pivot columns are zero in every
/// other row. Empty input gives an empty basis.
pub fn rref_fp(p: Prime, rows: &[Vec<FpScalar>]) -> Echelon {
    let width = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<FpScalar>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = p.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = p.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = p.neg(row[c]);
                axpy(p, row, f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    Echelon { rows: m, pivots }
}

/// Basis of `{c : sum_i c_i rows_i = 0}`, in echelon form.
pub fn left_kernel(p: Prime, rows: &[Vec<FpScalar>]) -> Vec<Vec<FpScalar>> {
    let k = rows.len();
    if k == 0 {
        return Vec::new();
    }
    let width = rows[0].len();
    let aug: Vec<Vec<FpScalar>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..k).map(|j| u64::from(i == j)));
            v
        })
        .collect();
    let ech = rref_fp(p, &aug);
    let kernel: Vec<Vec<FpScalar>> = ech
        .rows
        .into_iter()
        .filter(|r| r[..width].iter().all(|&x| x == 0))
        .map(|r| r[width..].to_vec())
        .collect();
    rref_fp(p, &kernel).rows
}

/// Basis of the right nullspace `{x : A x = 0}` of the matrix with the given rows.
pub fn nullspace(p: Prime, rows: &[Vec<FpScalar>], width: usize) -> Vec<Vec<FpScalar>> {
    let ech = rref_fp(p, rows);
    let free: Vec<usize> = (0..width).filter(|c| !ech.pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![0; width];
        x[f] = 1;
        for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
            x[pc] = p.neg(row[f]);
        }
        basis.push(x);
    }
    rref_fp(p, &basis).rows
}

/// Expresses vectors as combinations of a fixed, linearly independent list.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    p: Prime,
    len: usize,
    /// echelon rows over `[vector | coefficients]`
    rows: Vec<Vec<FpScalar>>,
    pivots: Vec<usize>,
    width: usize,
}

impl SpanSolver {
    /// Returns `None` if the basis is linearly dependent.
    pub fn new(p: Prime, basis: &[Vec<FpScalar>]) -> Option<Self> {
        let len = basis.len();
        let width = basis.first().map_or(0, Vec::len);
        let aug: Vec<Vec<FpScalar>> = basis
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = r.clone();
                v.extend((0..len).map(|j| u64::from(i == j)));
                v
            })
            .collect();
        let ech = rref_fp(p, &aug);
        // an independent list keeps every pivot in the vector part
        if ech.pivots.iter().any(|&c| c >= width) || ech.rank() != len {
            return None;
        }
        Some(SpanSolver {
            p,
            len,
            rows: ech.rows,
            pivots: ech.pivots,
            width,
        })
    }

    pub fn dim(&self) -> usize {
        self.len
    }

    /// Coefficients of `v` in the basis, or `None` if `v` is outside the span.
    pub fn solve(&self, v: &[FpScalar]) -> Option<Vec<FpScalar>> {
        let p = self.p;
        let mut acc = v.to_vec();
        acc.extend(std::iter::repeat_n(0, self.len));
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = acc[c];
            if f != 0 {
                axpy(p, &mut acc, p.neg(f), row);
            }
        }
        if acc[..self.width].iter().any(|&x| x != 0) {
            return None;
        }
        // acc = v - sum coeff_i b_i in the vector part, and -coeff in the tail
        Some(acc[self.width..].iter().map(|&x| p.neg(x)).collect())
    }
}
