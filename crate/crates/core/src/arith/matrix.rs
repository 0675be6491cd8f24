//! Square matrices over Q (exact) and over F_p.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::prime::{FpScalar, Prime};
use super::rat::{PRational, Valuation};
use crate::error::{Error, Result};

/// An `n x n` matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatRat {
    n: usize,
    entries: Vec<PRational>,
}

impl MatRat {
    pub fn zero(n: usize) -> Self {
        MatRat {
            n,
            entries: vec![PRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = PRational::one();
        }
        m
    }

    /// Matrix unit `E_{ij}` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.entries[i * n + j] = PRational::one();
        m
    }

    pub fn diag<I: IntoIterator<Item = PRational>>(values: I) -> Self {
        let values: Vec<_> = values.into_iter().collect();
        let n = values.len();
        let mut m = Self::zero(n);
        for (i, v) in values.into_iter().enumerate() {
            m.entries[i * n + i] = v;
        }
        m
    }

    /// Build from row-major entries; `entries.len()` must be a perfect square.
    pub fn from_vec(entries: Vec<PRational>) -> Result<Self> {
        let n = (entries.len() as f64).sqrt().round() as usize;
        if n * n != entries.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} entries do not form a square matrix",
                entries.len()
            )));
        }
        Ok(MatRat { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<PRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "matrix with {n} rows is not square"
            )));
        }
        Ok(MatRat {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| PRational::from_int(x)).collect())
                .collect(),
        )
        .expect("square literal")
    }

    /// Parse rows of rational literals (`"a"` or `"a/b"`).
    pub fn parse_rows<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| s.as_ref().parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &PRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: PRational) {
        self.entries[i * self.n + j] = v;
    }

    /// Row-major vectorization.
    pub fn entries(&self) -> &[PRational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<PRational> {
        self.entries
    }

    pub fn rows(&self) -> Vec<Vec<PRational>> {
        self.entries.chunks(self.n).map(|c| c.to_vec()).collect()
    }

    pub fn scale(&self, c: &PRational) -> Self {
        MatRat {
            n: self.n,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> PRational {
        let mut t = PRational::zero();
        for i in 0..self.n {
            t += self.get(i, i);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(PRational::is_zero)
    }

    /// Minimum entry valuation: `v_p` of the sup-norm. The operator-norm
    /// exponent is its negative.
    pub fn val_p(&self, p: Prime) -> Valuation {
        self.entries
            .iter()
            .map(|x| x.val_p(p))
            .min()
            .unwrap_or(Valuation::Infinite)
    }

    pub fn norm_exponent(&self, p: Prime) -> Option<i64> {
        self.val_p(p).finite().map(|v| -v)
    }

    pub fn is_integral(&self, p: Prime) -> bool {
        self.val_p(p).at_least(0)
    }

    /// First non-integral position, if any.
    pub fn non_integral_position(&self, p: Prime) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|x| !x.is_integral(p))
            .map(|k| (k / self.n, k % self.n))
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.rows();
        let mut inv = MatRat::identity(n).rows();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::SingularBasis)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let s = a[col][col].recip();
            for j in 0..n {
                a[col][j] = &a[col][j] * &s;
                inv[col][j] = &inv[col][j] * &s;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..n {
                        let t = &f * &a[col][j];
                        a[r][j] -= &t;
                        let t = &f * &inv[col][j];
                        inv[r][j] -= &t;
                    }
                }
            }
        }
        MatRat::from_rows(inv)
    }

    /// Entrywise reduction to `M_n(F_p)`.
    pub fn reduce(&self, p: Prime) -> Result<MatFp> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for (k, x) in self.entries.iter().enumerate() {
            entries.push(x.reduce(p).map_err(|_| Error::NotIntegral {
                what: x.to_string(),
                row: k / self.n,
                col: k % self.n,
            })?);
        }
        Ok(MatFp {
            p,
            n: self.n,
            entries,
        })
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &MatRat) -> MatRat {
        &(self * other) - &(other * self)
    }
}

/// Entrywise reduction; see [`MatRat::reduce`].
pub fn reduce_matrix(m: &MatRat, p: Prime) -> Result<MatFp> {
    m.reduce(p)
}

impl Mul for &MatRat {
    type Output = MatRat;
    fn mul(self, rhs: &MatRat) -> MatRat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = MatRat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Add for &MatRat {
    type Output = MatRat;
    fn add(self, rhs: &MatRat) -> MatRat {
        assert_eq!(self.n, rhs.n);
        MatRat {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &MatRat {
    type Output = MatRat;
    fn sub(self, rhs: &MatRat) -> MatRat {
        assert_eq!(self.n, rhs.n);
        MatRat {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for MatRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// An `n x n` matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatFp {
    p: Prime,
    n: usize,
    entries: Vec<FpScalar>,
}

impl MatFp {
    pub fn zero(p: Prime, n: usize) -> Self {
        MatFp {
            p,
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = Self::zero(p, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn unit(p: Prime, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(p, n);
        m.entries[i * n + j] = 1;
        m
    }

    /// Build from a row-major vector of residues (reduced mod p on entry).
    pub fn from_vec(p: Prime, entries: Vec<FpScalar>) -> Self {
        let n = (entries.len() as f64).sqrt().round() as usize;
        assert_eq!(n * n, entries.len(), "not a square matrix");
        MatFp {
            p,
            n,
            entries: entries.into_iter().map(|x| x % p.get()).collect(),
        }
    }

    pub fn from_i64_rows(p: Prime, rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n);
                r.iter().map(|&x| p.from_i64(x))
            })
            .collect();
        MatFp { p, n, entries }
    }

    #[inline]
    pub fn p(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FpScalar {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[FpScalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn scale(&self, c: FpScalar) -> Self {
        let p = self.p;
        MatFp {
            p,
            n: self.n,
            entries: self.entries.iter().map(|&x| p.mul(x, c)).collect(),
        }
    }

    /// Lift entries to `[0, p)` integers as a rational matrix.
    pub fn lift(&self) -> MatRat {
        MatRat {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|&x| PRational::from_int(x as i64))
                .collect(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<FpScalar>> {
        self.entries.chunks(self.n).map(|c| c.to_vec()).collect()
    }
}

impl Mul for &MatFp {
    type Output = MatFp;
    fn mul(self, rhs: &MatFp) -> MatFp {
        assert_eq!(self.n, rhs.n);
        let (n, p) = (self.n, self.p);
        let mut out = MatFp::zero(p, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.entries[idx] = p.add(out.entries[idx], p.mul(a, rhs.get(k, j)));
                }
            }
        }
        out
    }
}

impl Add for &MatFp {
    type Output = MatFp;
    fn add(self, rhs: &MatFp) -> MatFp {
        let p = self.p;
        MatFp {
            p,
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| p.add(a, b)).collect(),
        }
    }
}

impl Sub for &MatFp {
    type Output = MatFp;
    fn sub(self, rhs: &MatFp) -> MatFp {
        let p = self.p;
        MatFp {
            p,
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| p.sub(a, b)).collect(),
        }
    }
}

impl fmt::Display for MatFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.n)
            .map(|r| {
                let cells: Vec<String> = r.iter().map(u64::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
