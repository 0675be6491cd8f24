use crate::arith::{nullspace, rref_fp, FpScalar, SpanSolver};
use crate::error::{Error, Result};

use super::poly;
use super::{center, radical, FpAlgebra};

type Elem = Vec<FpScalar>;

fn combine(a: &FpAlgebra, coeffs: &[FpScalar], basis: &[Elem]) -> Elem {
    let mut v = a.zero();
    for (&c, b) in coeffs.iter().zip(basis) {
        crate::arith::axpy(a.p(), &mut v, c, b);
    }
    v
}

fn is_idempotent(a: &FpAlgebra, e: &[FpScalar]) -> bool {
    a.mul(e, e) == e
}

/// Primitive central idempotents of a semisimple algebra, sorted.
///
/// Uses enumeration of the center when `p^dim(center) <= bound`, and
/// polynomial splitting otherwise.
pub fn primitive_central_idempotents(a: &FpAlgebra, bound: u128) -> Result<Vec<Elem>> {
    let r = radical(a);
    if !r.is_zero() {
        return Err(Error::NotSemisimple(r.dim()));
    }
    match enumerate_primitive_central_idempotents(a, bound) {
        Err(Error::TooLarge { .. }) => split_primitive_central_idempotents(a),
        other => other,
    }
}

/// All idempotents of the center by enumeration; keeps the minimal nonzero ones.
pub fn enumerate_primitive_central_idempotents(a: &FpAlgebra, bound: u128) -> Result<Vec<Elem>> {
    let p = a.p();
    let z = center(a);
    let k = z.dim();
    let size = (p.get() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if size > bound {
        return Err(Error::TooLarge { size, bound });
    }
    let mut idem = Vec::new();
    let mut coeffs = vec![0u64; k];
    for _ in 0..size {
        let x = combine(a, &coeffs, &z.basis);
        if x.iter().any(|&c| c != 0) && is_idempotent(a, &x) {
            idem.push(x);
        }
        // odometer increment
        for c in coeffs.iter_mut() {
            *c += 1;
            if *c < p.get() {
                break;
            }
            *c = 0;
        }
    }
    // e is primitive iff no other nonzero idempotent f satisfies e f = f
    let mut prim: Vec<Elem> = idem
        .iter()
        .filter(|e| idem.iter().all(|f| f == *e || a.mul(e, f) != *f))
        .cloned()
        .collect();
    prim.sort();
    Ok(prim)
}

/// Minimal polynomial of `x` (monic, lowest degree first).
fn minimal_polynomial(a: &FpAlgebra, x: &[FpScalar]) -> Vec<FpScalar> {
    let p = a.p();
    let mut powers: Vec<Elem> = vec![a.identity().to_vec()];
    loop {
        let next = a.mul(powers.last().unwrap(), x);
        let solver = SpanSolver::new(p, &powers).expect("powers below the degree are independent");
        if let Some(c) = solver.solve(&next) {
            let mut f: Vec<FpScalar> = c.iter().map(|&ci| p.neg(ci)).collect();
            f.push(1);
            return f;
        }
        powers.push(next);
    }
}

/// Splitting via the Frobenius-fixed subalgebra `B = {x in Z(A) : x^p = x}`.
///
/// `B` is a product of copies of F_p, one per primitive central idempotent,
/// so its elements have minimal polynomials that split into distinct linear
/// factors. Each basis element of `B` refines the current idempotents by its
/// eigenvalue projections `prod_{mu != lambda} (x - mu) / (lambda - mu)`.
pub fn split_primitive_central_idempotents(a: &FpAlgebra) -> Result<Vec<Elem>> {
    let p = a.p();
    let z = center(a);
    let k = z.dim();
    // matrix of x -> x^p - x on center coordinates; Frobenius is additive here
    let frob: Vec<Elem> = z
        .basis
        .iter()
        .map(|b| a.sub(&a.pow(b, p.get()), b))
        .collect();
    let zsolver = SpanSolver::new(p, &z.basis).expect("center basis is independent");
    let rows: Vec<Elem> = frob
        .iter()
        .map(|v| {
            zsolver
                .solve(v)
                .ok_or_else(|| Error::InternalInconsistency("x^p - x left the center".into()))
        })
        .collect::<Result<_>>()?;
    // B: coefficient vectors c with sum_i c_i rows[i] = 0
    let transposed: Vec<Elem> = (0..k).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    let fixed: Vec<Elem> = nullspace(p, &transposed, k)
        .iter()
        .map(|c| combine(a, c, &z.basis))
        .collect();

    let mut parts: Vec<Elem> = vec![a.identity().to_vec()];
    for b in &fixed {
        let mu = poly::roots(p, &minimal_polynomial(a, b));
        let mut refined = Vec::new();
        for e in &parts {
            for &lambda in &mu {
                let mut proj = e.clone();
                for &other in &mu {
                    if other == lambda {
                        continue;
                    }
                    let shifted = a.sub(b, &a.scale(other, a.identity()));
                    let factor = a.scale(p.inv(p.sub(lambda, other)), &shifted);
                    proj = a.mul(&proj, &factor);
                }
                if proj.iter().any(|&c| c != 0) {
                    refined.push(proj);
                }
            }
        }
        parts = refined;
    }
    if parts.len() != fixed.len() || parts.iter().any(|e| !is_idempotent(a, e)) {
        return Err(Error::InternalInconsistency(
            "eigenvalue splitting did not produce a complete idempotent system".into(),
        ));
    }
    parts.sort();
    Ok(parts)
}

/// Dimension of the span `{e x : x in basis}`.
pub(crate) fn span_dim(a: &FpAlgebra, e: &[FpScalar], basis: &[Elem]) -> usize {
    let rows: Vec<Elem> = basis.iter().map(|x| a.mul(e, x)).collect();
    rref_fp(a.p(), &rows).rank()
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::super::{from_matrix_span, DEFAULT_ENUMERATION_BOUND};
    use super::*;
    use crate::arith::{MatFp, Prime};

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn idempotent_examples() {
        let pp = p(2);
        let diag = from_matrix_span(pp, &[MatFp::unit(pp, 2, 0, 0), MatFp::unit(pp, 2, 1, 1)]).unwrap();
        let e = primitive_central_idempotents(&diag, DEFAULT_ENUMERATION_BOUND).unwrap();
        let mats: Vec<MatFp> = e.iter().map(|x| diag.to_matrix(x).unwrap()).collect();
        assert_eq!(mats, vec![MatFp::unit(pp, 2, 1, 1), MatFp::unit(pp, 2, 0, 0)]);

        let m2 = from_matrix_span(pp, &full_matrix_units(pp, 2)).unwrap();
        let e = primitive_central_idempotents(&m2, DEFAULT_ENUMERATION_BOUND).unwrap();
        assert_eq!(e, vec![m2.identity().to_vec()]);

        let f3 = split_product(p(3), 3);
        let e = primitive_central_idempotents(&f3, DEFAULT_ENUMERATION_BOUND).unwrap();
        assert_eq!(e, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn not_semisimple() {
        assert_eq!(
            primitive_central_idempotents(&dual_numbers(p(2)), DEFAULT_ENUMERATION_BOUND),
            Err(Error::NotSemisimple(1))
        );
    }

    #[test]
    fn splitting_matches_enumeration() {
        for (q, k) in [(2, 3), (3, 3), (5, 2), (7, 3)] {
            let a = split_product(p(q), k);
            assert_eq!(
                split_primitive_central_idempotents(&a).unwrap(),
                enumerate_primitive_central_idempotents(&a, 1 << 20).unwrap()
            );
        }
        let a = f4();
        assert_eq!(split_primitive_central_idempotents(&a).unwrap(), vec![vec![1, 0]]);
        let m2 = from_matrix_span(p(3), &full_matrix_units(p(3), 2)).unwrap();
        assert_eq!(split_primitive_central_idempotents(&m2).unwrap(), vec![m2.identity().to_vec()]);
    }

    #[test]
    fn large_prime_takes_splitting_path() {
        let big = p(65_537);
        let a = split_product(big, 3);
        let e = primitive_central_idempotents(&a, DEFAULT_ENUMERATION_BOUND).unwrap();
        assert_eq!(e, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }
}
