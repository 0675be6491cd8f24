//! Jacobson radical of a finite-dimensional F_p-algebra.
//!
//! The trace form alone only detects the radical when `p > dim`. The general
//! method works in the left regular representation and refines the trace
//! ideal by the higher trace functionals
//!
//! ```text
//! g_i(x) = ( Tr(L̂_x^{p^i}) mod p^{i+1} ) / p^i   (mod p)
//! ```
//!
//! where `L̂_x` is the lift of the left-multiplication matrix to entries in
//! `[0, p)`. Starting from `I_{-1} = A`, `I_i = {x ∈ I_{i-1} : g_i(xy) = 0 ∀y}`;
//! each `g_i` is linear on `I_{i-1}` and `I_l` is the radical for
//! `p^l <= dim < p^{l+1}`.

use crate::arith::{left_kernel, rref_fp, FpScalar, Prime};
use crate::error::{Error, Result};

use super::{FpAlgebra, Subspace};

/// `Tr(M^e) mod modulus` for a matrix with entries already reduced mod `modulus`.
fn trace_power_mod(m: &[Vec<u64>], e: u64, modulus: u64) -> u64 {
    let d = m.len();
    let mul = |a: &[Vec<u64>], b: &[Vec<u64>]| -> Vec<Vec<u64>> {
        let mut out = vec![vec![0u64; d]; d];
        for i in 0..d {
            for k in 0..d {
                let aik = a[i][k] as u128;
                if aik == 0 {
                    continue;
                }
                for j in 0..d {
                    out[i][j] = ((out[i][j] as u128 + aik * b[k][j] as u128) % modulus as u128) as u64;
                }
            }
        }
        out
    };
    let mut acc: Vec<Vec<u64>> = (0..d)
        .map(|i| (0..d).map(|j| u64::from(i == j) % modulus).collect())
        .collect();
    let mut base = m.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    (0..d).fold(0, |t, i| (t + acc[i][i]) % modulus)
}

fn higher_trace(a: &FpAlgebra, z: &[FpScalar], level: u32) -> Result<FpScalar> {
    let p = a.p().get();
    let pi = p.pow(level);
    let modulus = pi * p;
    let lx = a.left_mult_matrix(z);
    let t = trace_power_mod(&lx, pi, modulus);
    if !t.is_multiple_of(pi) {
        return Err(Error::InternalInconsistency(format!(
            "trace of p^{level}-th power not divisible by p^{level}"
        )));
    }
    Ok(t / pi)
}

/// The Jacobson radical.
pub fn radical(a: &FpAlgebra) -> Subspace {
    radical_chain(a).expect("higher traces are divisible on the trace chain")
}

fn radical_chain(a: &FpAlgebra) -> Result<Subspace> {
    let p: Prime = a.p();
    let d = a.dim();
    let mut ideal: Vec<Vec<FpScalar>> = (0..d).map(|i| a.basis_vector(i)).collect();
    let mut level = 0u32;
    loop {
        if ideal.is_empty() {
            break;
        }
        // g_level(x_k y_j) for ideal basis x_k and algebra basis y_j
        let mut g = Vec::with_capacity(ideal.len());
        for x in &ideal {
            let row = (0..d)
                .map(|j| higher_trace(a, &a.mul(x, &a.basis_vector(j)), level))
                .collect::<Result<Vec<_>>>()?;
            g.push(row);
        }
        let kernel = left_kernel(p, &g);
        let next: Vec<Vec<FpScalar>> = kernel
            .iter()
            .map(|c| {
                let mut v = vec![0; d];
                for (&ck, x) in c.iter().zip(&ideal) {
                    crate::arith::axpy(p, &mut v, ck, x);
                }
                v
            })
            .collect();
        ideal = rref_fp(p, &next).rows;
        match p.get().checked_pow(level + 1) {
            Some(q) if q <= d as u64 => level += 1,
            _ => break,
        }
    }
    Ok(Subspace {
        parent_dim: d,
        basis: ideal,
    })
}

fn encode(p: u64, v: &[FpScalar]) -> usize {
    v.iter().rev().fold(0usize, |acc, &x| acc * p as usize + x as usize)
}

fn decode(p: u64, d: usize, mut code: usize) -> Vec<FpScalar> {
    (0..d)
        .map(|_| {
            let x = (code % p as usize) as u64;
            code /= p as usize;
            x
        })
        .collect()
}

/// Radical by exhaustive search over the quasi-regular elements:
/// `{x : 1 - a x is invertible for every a}`.
///
/// Enumerates all `p^dim` elements; errors if that exceeds `bound`.
pub fn radical_bruteforce(a: &FpAlgebra, bound: u128) -> Result<Subspace> {
    let p = a.p();
    let d = a.dim();
    let size = (p.get() as u128)
        .checked_pow(d as u32)
        .unwrap_or(u128::MAX);
    if size > bound {
        return Err(Error::TooLarge { size, bound });
    }
    let size = size as usize;
    // u invertible iff left multiplication by u is bijective
    let invertible: Vec<bool> = (0..size)
        .map(|code| {
            let u = decode(p.get(), d, code);
            let lm = a.left_mult_matrix(&u);
            rref_fp(p, &lm).rank() == d
        })
        .collect();

    let one = a.identity().to_vec();
    let mut members = Vec::new();
    for code in 0..size {
        let x = decode(p.get(), d, code);
        // {a x} is the span of b_j x; enumerate it
        let right: Vec<Vec<FpScalar>> = (0..d).map(|j| a.mul(&a.basis_vector(j), &x)).collect();
        let span = rref_fp(p, &right).rows;
        let combos = (p.get() as usize).pow(span.len() as u32);
        let quasi_regular = (0..combos).all(|c| {
            let coeffs = decode(p.get(), span.len(), c);
            let mut w = vec![0; d];
            for (&ck, row) in coeffs.iter().zip(&span) {
                crate::arith::axpy(p, &mut w, ck, row);
            }
            invertible[encode(p.get(), &a.sub(&one, &w))]
        });
        if quasi_regular {
            members.push(x);
        }
    }
    let sub = Subspace::from_spanning(p, d, &members);
    if (p.get() as usize).pow(sub.dim() as u32) != members.len() {
        return Err(Error::InternalInconsistency(
            "quasi-regular elements do not form a subspace".into(),
        ));
    }
    Ok(sub)
}
