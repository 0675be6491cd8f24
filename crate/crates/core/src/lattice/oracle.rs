//! Direct saturation over the integers, independent of the iterative chain.
//!
//! The saturation of a lattice `L` is `Q L ∩ Z_(p)^{n^2}`. Writing
//! `Q L = (ker B)^⊥` for the matrix `B` of vectorized basis rows, the integer
//! points of `Q L` are the integer kernel of the matrix whose rows span
//! `ker B`. That kernel is computed by unimodular column operations, so the
//! result is the Z-saturation; tensoring with Z_(p) is just canonicalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{nullspace_q, MatRat, PRational};

use super::{from_integral_rows, OperatorLattice};

/// `(Q-span of L) ∩ {p-integral matrices}`, computed without iterating
/// [`super::saturation_step`].
pub fn oracle_saturation(lattice: &OperatorLattice) -> OperatorLattice {
    let n = lattice.n();
    let width = n * n;
    let rows: Vec<Vec<PRational>> = lattice
        .basis()
        .iter()
        .map(|b| b.entries().to_vec())
        .collect();
    let constraints: Vec<Vec<BigInt>> = nullspace_q(&rows, width)
        .iter()
        .map(|v| clear_denominators(v))
        .collect();
    let kernel = integer_kernel(&constraints, width);
    let gens: Vec<Vec<PRational>> = kernel
        .into_iter()
        .map(|v| v.into_iter().map(PRational::from_bigint).collect())
        .collect();
    let sat = from_integral_rows(lattice.p(), n, gens);
    debug_assert!(sat.basis().iter().all(|m: &MatRat| m.is_integral(lattice.p())));
    sat
}

fn clear_denominators(v: &[PRational]) -> Vec<BigInt> {
    let l = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect()
}

/// Z-basis of `{x ∈ Z^width : A x = 0}` for an integer matrix `A` given by rows.
pub(crate) fn integer_kernel(a: &[Vec<BigInt>], width: usize) -> Vec<Vec<BigInt>> {
    // columns of `a` transformed by unimodular U; track U alongside
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..width)
        .map(|i| (0..width).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    let col_op = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, f: &BigInt| {
        // column dst += f * column src
        for row in m.iter_mut() {
            let t = &row[src] * f;
            row[dst] += t;
        }
        for row in u.iter_mut() {
            let t = &row[src] * f;
            row[dst] += t;
        }
    };
    let swap_cols = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
        for row in u.iter_mut() {
            row.swap(a, b);
        }
    };

    let mut start = 0;
    for r in 0..m.len() {
        if start == width {
            break;
        }
        // Euclid across columns start.. until at most one is nonzero in row r
        loop {
            let nonzero: Vec<usize> = (start..width).filter(|&j| !m[r][j].is_zero()).collect();
            if nonzero.len() <= 1 {
                if let Some(&j) = nonzero.first() {
                    swap_cols(&mut m, &mut u, start, j);
                    start += 1;
                }
                break;
            }
            let &piv = nonzero
                .iter()
                .min_by_key(|&&j| m[r][j].abs())
                .unwrap();
            for &j in &nonzero {
                if j != piv {
                    let q = m[r][j].div_floor(&m[r][piv]);
                    col_op(&mut m, &mut u, j, piv, &-q);
                }
            }
        }
    }
    (start..width)
        .map(|j| (0..width).map(|i| u[i][j].clone()).collect())
        .collect()
}
