//! Dense univariate polynomials over F_p, lowest degree first.

use crate::arith::{FpScalar, Prime};

pub(crate) type Poly = Vec<FpScalar>;

fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub(crate) fn degree(f: &[FpScalar]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub(crate) fn sub(p: Prime, f: &[FpScalar], g: &[FpScalar]) -> Poly {
    let len = f.len().max(g.len());
    trim(
        (0..len)
            .map(|i| p.sub(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0)))
            .collect(),
    )
}

pub(crate) fn mul(p: Prime, f: &[FpScalar], g: &[FpScalar]) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = p.add(out[i + j], p.mul(a, b));
        }
    }
    trim(out)
}

/// `(q, r)` with `f = q g + r`, `deg r < deg g`. Panics if `g` is zero.
pub(crate) fn divrem(p: Prime, f: &[FpScalar], g: &[FpScalar]) -> (Poly, Poly) {
    let dg = degree(g).expect("division by the zero polynomial");
    let lead_inv = p.inv(g[dg]);
    let mut r = trim(f.to_vec());
    let mut q = vec![0; r.len().saturating_sub(dg).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let c = p.mul(r[dr], lead_inv);
        let shift = dr - dg;
        q[shift] = c;
        for (i, &gi) in g[..=dg].iter().enumerate() {
            r[shift + i] = p.sub(r[shift + i], p.mul(c, gi));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn rem(p: Prime, f: &[FpScalar], g: &[FpScalar]) -> Poly {
    divrem(p, f, g).1
}

pub(crate) fn monic(p: Prime, f: &[FpScalar]) -> Poly {
    match degree(f) {
        None => Vec::new(),
        Some(d) => {
            let inv = p.inv(f[d]);
            f[..=d].iter().map(|&c| p.mul(c, inv)).collect()
        }
    }
}

pub(crate) fn gcd(p: Prime, f: &[FpScalar], g: &[FpScalar]) -> Poly {
    let (mut a, mut b) = (trim(f.to_vec()), trim(g.to_vec()));
    while !b.is_empty() {
        let r = rem(p, &a, &b);
        a = b;
        b = r;
    }
    monic(p, &a)
}

/// `base^e mod m`.
pub(crate) fn powmod(p: Prime, base: &[FpScalar], mut e: u128, m: &[FpScalar]) -> Poly {
    let mut acc = rem(p, &[1], m);
    let mut b = rem(p, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(p, &mul(p, &acc, &b), m);
        }
        b = rem(p, &mul(p, &b, &b), m);
        e >>= 1;
    }
    acc
}

pub(crate) fn eval(p: Prime, f: &[FpScalar], x: FpScalar) -> FpScalar {
    f.iter().rev().fold(0, |acc, &c| p.add(p.mul(acc, x), c))
}

/// Distinct roots in F_p, sorted.
///
/// Brute force for small `p`; otherwise restrict to `gcd(f, x^p - x)` and
/// split with random shifts `gcd(h, (x + a)^{(p-1)/2} - 1)`.
pub(crate) fn roots(p: Prime, f: &[FpScalar]) -> Vec<FpScalar> {
    let f = trim(f.to_vec());
    if degree(&f).is_none() {
        return Vec::new();
    }
    let pv = p.get();
    let mut out = if pv <= 1 << 12 {
        (0..pv).filter(|&x| eval(p, &f, x) == 0).collect()
    } else {
        let xpx = sub(p, &powmod(p, &[0, 1], pv as u128, &f), &[0, 1]);
        let h = gcd(p, &f, &xpx);
        let mut acc = Vec::new();
        split_linear(p, h, &mut acc, 1);
        acc
    };
    out.sort_unstable();
    out
}

/// Roots of a monic product of distinct linear factors (odd `p`).
fn split_linear(p: Prime, h: Poly, out: &mut Vec<FpScalar>, mut shift: u64) {
    match degree(&h) {
        None | Some(0) => {}
        Some(1) => out.push(p.neg(p.mul(h[0], p.inv(h[1])))),
        Some(_) => loop {
            // deterministic sequence of shifts; each succeeds with probability ~1/2
            let w = sub(
                p,
                &powmod(p, &[shift % p.get(), 1], ((p.get() - 1) / 2) as u128, &h),
                &[1],
            );
            shift += 1;
            let g = gcd(p, &h, &w);
            let dg = degree(&g).unwrap_or(0);
            if dg > 0 && dg < degree(&h).unwrap() {
                let q = divrem(p, &h, &g).0;
                split_linear(p, g, out, shift);
                split_linear(p, monic(p, &q), out, shift);
                return;
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn arithmetic() {
        let pp = p(5);
        // (x + 1)(x + 4) = x^2 + 4 mod 5
        assert_eq!(mul(pp, &[1, 1], &[4, 1]), vec![4, 0, 1]);
        let (q, r) = divrem(pp, &[4, 0, 1], &[1, 1]);
        assert_eq!((q, r), (vec![4, 1], vec![]));
        assert_eq!(gcd(pp, &[4, 0, 1], &[2, 2]), vec![1, 1]);
        assert_eq!(eval(pp, &[4, 0, 1], 2), 3);
    }

    #[test]
    fn roots_small_and_large() {
        let pp = p(7);
        let f = mul(pp, &mul(pp, &[6, 1], &[4, 1]), &[1, 0, 1]);
        // roots 1 and 3; x^2 + 1 is irreducible mod 7
        assert_eq!(roots(pp, &f), vec![1, 3]);

        let big = p(1_000_003);
        let f = mul(big, &mul(big, &[big.neg(17), 1], &[big.neg(999_999), 1]), &[big.neg(5), 1]);
        assert_eq!(roots(big, &f), vec![5, 17, 999_999]);
    }
}
