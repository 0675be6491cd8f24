#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use repred::algebra::{generated_subalgebra, FpAlgebra};
use repred::{MatFp, MatRat, PRational, Prime};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

pub fn int_matrix(rng: &mut StdRng, n: usize, lo: i64, hi: i64) -> MatRat {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.random_range(lo..=hi)).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    MatRat::from_i64_rows(&refs)
}

pub fn fp_matrix(rng: &mut StdRng, p: Prime, n: usize) -> MatFp {
    let entries = (0..n * n).map(|_| rng.random_range(0..p.get())).collect();
    MatFp::from_vec(p, entries)
}

/// Random upper-triangular matrix over F_p; these generate algebras with
/// nonzero radical more often than uniform matrices do.
pub fn fp_upper(rng: &mut StdRng, p: Prime, n: usize) -> MatFp {
    let entries = (0..n * n)
        .map(|k| if k / n <= k % n { rng.random_range(0..p.get()) } else { 0 })
        .collect();
    MatFp::from_vec(p, entries)
}

/// Subalgebra of `M_n(F_p)` generated by one or two random matrices,
/// or `None` when `p^dim` exceeds `bound`.
pub fn random_matrix_algebra(rng: &mut StdRng, p: Prime, n: usize, bound: u128) -> Option<FpAlgebra> {
    let k = rng.random_range(1..=2);
    let upper = rng.random_bool(0.5);
    let gens: Vec<MatFp> = (0..k)
        .map(|_| if upper { fp_upper(rng, p, n) } else { fp_matrix(rng, p, n) })
        .collect();
    let a = generated_subalgebra(p, &gens, n).unwrap();
    ((p.get() as u128).pow(a.dim() as u32) <= bound).then_some(a)
}

/// An integral matrix with determinant +-1 built from elementary row operations.
pub fn unimodular(rng: &mut StdRng, n: usize) -> MatRat {
    let mut u = MatRat::identity(n);
    for _ in 0..3 * n {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i == j {
            continue;
        }
        let c = PRational::from_int(rng.random_range(-2..=2));
        let mut e = MatRat::identity(n);
        e.set(i, j, c);
        u = &e * &u;
    }
    u
}

pub fn diag01(n: usize, rank: usize) -> MatRat {
    MatRat::diag((0..n).map(|i| PRational::from_int(i64::from(i < rank))))
}
