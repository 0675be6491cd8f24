//! Z_(p)-lattices of matrices and the repeated-reduction saturation.
//!
//! An [`OperatorLattice`] is a finitely generated Z_(p)-submodule of the
//! p-integral `n x n` matrices, stored as the canonical echelon basis of the
//! row-major vectorizations. Canonical means: pivot columns increase, every
//! pivot entry is an exact power of `p`, and the entries above a pivot
//! `p^e` are integers in `[0, p^e)`. Two generating sets of the same lattice
//! therefore canonicalize to identical bases, and lattice equality is
//! structural equality.

mod oracle;
mod order;
mod saturation;

pub use oracle::oracle_saturation;
pub use order::{conjugate_to_lattice_basis, order_reduction};
pub use saturation::{reduced_image, saturate, saturation_step, ChainLevel, ReductionChain};

use num_bigint::BigInt;

use crate::arith::{MatRat, PRational, Prime};
use crate::error::{Error, Result};

/// Default bound on saturation steps; only invalid input can reach it.
pub const DEFAULT_MAX_STEPS: usize = 64;

const CLOSURE_ROUNDS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorLattice {
    p: Prime,
    n: usize,
    basis: Vec<MatRat>,
    /// (column, exponent) of each basis row's pivot `p^exponent`
    pivots: Vec<(usize, u32)>,
}

impl OperatorLattice {
    #[inline]
    pub fn p(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[MatRat] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Pivot column and p-exponent of each basis element.
    pub fn pivots(&self) -> &[(usize, u32)] {
        &self.pivots
    }

    /// The lattice of all p-integral `n x n` matrices.
    pub fn full(p: Prime, n: usize) -> Self {
        let gens: Vec<MatRat> = (0..n * n).map(|k| MatRat::unit(n, k / n, k % n)).collect();
        canonicalize(p, n, &gens).expect("matrix units are integral")
    }

    /// Q-coefficients of `m` in the canonical basis, if `m` lies in the Q-span.
    pub fn coordinates(&self, m: &MatRat) -> Option<Vec<PRational>> {
        if m.n() != self.n {
            return None;
        }
        let mut v = m.entries().to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        for (b, &(c, e)) in self.basis.iter().zip(&self.pivots) {
            let coef = v[c].shift(self.p, -(e as i64));
            if !coef.is_zero() {
                for (x, y) in v.iter_mut().zip(b.entries()) {
                    if !y.is_zero() {
                        *x -= &(&coef * y);
                    }
                }
            }
            coeffs.push(coef);
        }
        v.iter().all(PRational::is_zero).then_some(coeffs)
    }

    /// Whether `m` lies in the Z_(p)-span of the basis.
    pub fn member(&self, m: &MatRat) -> bool {
        self.coordinates(m)
            .is_some_and(|c| c.iter().all(|x| x.is_integral(self.p)))
    }

    /// Every basis element of `other` is a member of `self`.
    pub fn contains_lattice(&self, other: &OperatorLattice) -> bool {
        other.basis.iter().all(|b| self.member(b))
    }

    /// Sum of pivot exponents: `log_p` of the index in the saturated lattice
    /// with the same Q-span.
    pub fn index_exponent(&self) -> u64 {
        self.pivots.iter().map(|&(_, e)| e as u64).sum()
    }
}

/// Canonical basis of the Z_(p)-span of `gens`.
pub fn canonicalize(p: Prime, n: usize, gens: &[MatRat]) -> Result<OperatorLattice> {
    for (g, m) in gens.iter().enumerate() {
        if m.n() != n {
            return Err(Error::DimensionMismatch(format!(
                "generator {g} is {0}x{0}, expected {n}x{n}",
                m.n()
            )));
        }
        if let Some((row, col)) = m.non_integral_position(p) {
            return Err(Error::NotIntegral {
                what: format!("generator {g}"),
                row,
                col,
            });
        }
    }
    let rows: Vec<Vec<PRational>> = gens.iter().map(|m| m.entries().to_vec()).collect();
    Ok(from_integral_rows(p, n, rows))
}

/// Canonical echelon form of integral rows; skips the integrality check.
fn from_integral_rows(p: Prime, n: usize, mut rows: Vec<Vec<PRational>>) -> OperatorLattice {
    let width = n * n;
    let mut pivots: Vec<(usize, u32)> = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        let best = (r..rows.len())
            .filter_map(|i| rows[i][c].val_p(p).finite().map(|v| (v, i)))
            .min();
        let Some((v, i)) = best else {
            continue;
        };
        rows.swap(r, i);
        // normalize the pivot to p^v
        let unit_inv = rows[r][c].shift(p, -v).recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &unit_inv;
        }
        let pivot_row = rows[r].clone();
        let pivot = &pivot_row[c];
        for row in rows.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / pivot;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push((c, v as u32));
        r += 1;
    }
    rows.truncate(r);

    // reduce entries above each pivot into [0, p^e)
    for k in 0..r {
        let (c, e) = pivots[k];
        let modulus = BigInt::from(p.get()).pow(e);
        let pivot_row = rows[k].clone();
        for row in rows.iter_mut().take(k) {
            let t = &row[c];
            let rem = PRational::from_bigint(t.residue_mod(&modulus));
            let q = (t - &rem).shift(p, -(e as i64));
            if q.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&q * y);
                }
            }
        }
    }

    let basis = rows
        .into_iter()
        .map(|r| MatRat::from_vec(r).expect("n*n entries"))
        .collect();
    OperatorLattice {
        p,
        n,
        basis,
        pivots,
    }
}

/// Whether `m` lies in the Z_(p)-span of `lattice`.
pub fn member(lattice: &OperatorLattice, m: &MatRat) -> bool {
    lattice.member(m)
}

/// Smallest canonical lattice containing the identity and every finite
/// product of the generators: the image of `Z_(p)[M]`.
///
/// Each generator must be p-integral, which is how unitarity of the
/// representation for the standard norm shows up.
pub fn algebra_closure(p: Prime, n: usize, gens: &[MatRat]) -> Result<OperatorLattice> {
    let mut all = vec![MatRat::identity(n)];
    all.extend(gens.iter().cloned());
    let mut lattice = canonicalize(p, n, &all)?;
    // span(words of length <= k+1) = span(words <= k) + span(words <= k) * gens
    for _ in 0..CLOSURE_ROUNDS {
        let mut rows: Vec<Vec<PRational>> =
            lattice.basis.iter().map(|m| m.entries().to_vec()).collect();
        let mut grew = false;
        for b in &lattice.basis {
            for g in gens {
                let prod = b * g;
                if !lattice.member(&prod) {
                    grew = true;
                    rows.push(prod.into_entries());
                }
            }
        }
        if !grew {
            return Ok(lattice);
        }
        lattice = from_integral_rows(p, n, rows);
    }
    Err(Error::MaxIterationsExceeded(CLOSURE_ROUNDS))
}
