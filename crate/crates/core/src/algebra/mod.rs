//! Finite-dimensional associative F_p-algebras given by structure constants.

mod idempotents;
mod poly;
mod radical;
mod structure;

pub use idempotents::{
    enumerate_primitive_central_idempotents, primitive_central_idempotents,
    split_primitive_central_idempotents,
};
pub use radical::{radical, radical_bruteforce};
pub use structure::{is_semisimple, wedderburn_components, Component, StructureReport};

use serde::Serialize;

use crate::arith::{axpy, nullspace, rref_fp, FpScalar, MatFp, Prime, SpanSolver};
use crate::error::{Error, Result};

/// Default enumeration bound for brute-force routines (`p^dim <= bound`).
pub const DEFAULT_ENUMERATION_BOUND: u128 = 4096;

/// A unital associative algebra over F_p with basis `b_0, ..., b_{d-1}`.
///
/// `constants[(i*d + j)*d + k]` is the coefficient of `b_k` in `b_i b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpAlgebra {
    p: Prime,
    dim: usize,
    constants: Vec<FpScalar>,
    identity: Vec<FpScalar>,
    matrix_model: Option<Vec<MatFp>>,
}

/// A subspace of an algebra, as an echelon basis of coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subspace {
    pub parent_dim: usize,
    pub basis: Vec<Vec<FpScalar>>,
}

impl Subspace {
    pub fn from_spanning(p: Prime, parent_dim: usize, vectors: &[Vec<FpScalar>]) -> Self {
        Subspace {
            parent_dim,
            basis: rref_fp(p, vectors).rows,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, p: Prime, v: &[FpScalar]) -> bool {
        let ech = rref_fp(p, &self.basis);
        ech.contains(p, v)
    }
}

impl FpAlgebra {
    /// Validates associativity and the identity laws.
    pub fn from_structure_constants(
        p: Prime,
        dim: usize,
        constants: Vec<FpScalar>,
        identity: Vec<FpScalar>,
    ) -> Result<Self> {
        if constants.len() != dim * dim * dim || identity.len() != dim {
            return Err(Error::DimensionMismatch(
                "structure constants do not match the dimension".into(),
            ));
        }
        let a = FpAlgebra {
            p,
            dim,
            constants: constants.into_iter().map(|x| x % p.get()).collect(),
            identity: identity.into_iter().map(|x| x % p.get()).collect(),
            matrix_model: None,
        };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        if let Some((i, j, k)) = self.associativity_failure() {
            return Err(Error::InvalidInput(format!(
                "structure constants are not associative on basis triple ({i}, {j}, {k})"
            )));
        }
        for i in 0..self.dim {
            let b = self.basis_vector(i);
            if self.mul(&self.identity, &b) != b || self.mul(&b, &self.identity) != b {
                return Err(Error::NoIdentity);
            }
        }
        Ok(())
    }

    /// First basis triple violating `(b_i b_j) b_k = b_i (b_j b_k)`.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let bij = self.product_row(i, j).to_vec();
                for k in 0..d {
                    let lhs = self.mul(&bij, &self.basis_vector(k));
                    let bjk = self.product_row(j, k).to_vec();
                    let rhs = self.mul(&self.basis_vector(i), &bjk);
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    #[inline]
    pub fn p(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> &[FpScalar] {
        &self.identity
    }

    pub fn structure_constants(&self) -> &[FpScalar] {
        &self.constants
    }

    pub fn matrix_model(&self) -> Option<&[MatFp]> {
        self.matrix_model.as_deref()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<FpScalar> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn zero(&self) -> Vec<FpScalar> {
        vec![0; self.dim]
    }

    /// Coordinates of `b_i b_j`.
    #[inline]
    pub fn product_row(&self, i: usize, j: usize) -> &[FpScalar] {
        let d = self.dim;
        &self.constants[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn mul(&self, x: &[FpScalar], y: &[FpScalar]) -> Vec<FpScalar> {
        let p = self.p;
        let mut out = vec![0; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                axpy(p, &mut out, p.mul(xi, yj), self.product_row(i, j));
            }
        }
        out
    }

    pub fn add(&self, x: &[FpScalar], y: &[FpScalar]) -> Vec<FpScalar> {
        x.iter().zip(y).map(|(&a, &b)| self.p.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[FpScalar], y: &[FpScalar]) -> Vec<FpScalar> {
        x.iter().zip(y).map(|(&a, &b)| self.p.sub(a, b)).collect()
    }

    pub fn scale(&self, c: FpScalar, x: &[FpScalar]) -> Vec<FpScalar> {
        x.iter().map(|&a| self.p.mul(c, a)).collect()
    }

    pub fn pow(&self, x: &[FpScalar], mut e: u64) -> Vec<FpScalar> {
        let mut acc = self.identity.clone();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Matrix of left multiplication by `x`; column `j` holds `x b_j`.
    pub fn left_mult_matrix(&self, x: &[FpScalar]) -> Vec<Vec<FpScalar>> {
        let d = self.dim;
        let mut m = vec![vec![0; d]; d];
        for j in 0..d {
            let col = self.mul(x, &self.basis_vector(j));
            for (row, c) in m.iter_mut().zip(col) {
                row[j] = c;
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.product_row(i, j) == self.product_row(j, i)))
    }

    /// Matrix realizing an element, when a matrix model is attached.
    pub fn to_matrix(&self, x: &[FpScalar]) -> Option<MatFp> {
        let model = self.matrix_model.as_ref()?;
        let mut acc = MatFp::zero(self.p, model[0].n());
        for (&c, b) in x.iter().zip(model) {
            if c != 0 {
                acc = &acc + &b.scale(c);
            }
        }
        Some(acc)
    }

    /// Quotient by a two-sided ideal, on the complement of the ideal's pivot
    /// coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> Result<FpAlgebra> {
        let p = self.p;
        let ech = rref_fp(p, &ideal.basis);
        let keep: Vec<usize> = (0..self.dim).filter(|c| !ech.pivots.contains(c)).collect();
        let q = keep.len();
        let project = |v: &[FpScalar]| -> Vec<FpScalar> {
            let r = ech.residual(p, v);
            keep.iter().map(|&c| r[c]).collect()
        };
        let mut constants = Vec::with_capacity(q * q * q);
        for &i in &keep {
            for &j in &keep {
                constants.extend(project(self.product_row(i, j)));
            }
        }
        FpAlgebra::from_structure_constants(p, q, constants, project(&self.identity))
    }
}

/// Package a linearly independent span of matrices containing the identity
/// and closed under multiplication as an abstract algebra with that basis.
pub fn from_matrix_span(p: Prime, basis: &[MatFp]) -> Result<FpAlgebra> {
    let d = basis.len();
    if d == 0 {
        return Err(Error::NoIdentity);
    }
    let n = basis[0].n();
    let vecs: Vec<Vec<FpScalar>> = basis.iter().map(|m| m.entries().to_vec()).collect();
    let solver = SpanSolver::new(p, &vecs).ok_or(Error::DependentBasis)?;
    let identity = solver
        .solve(MatFp::identity(p, n).entries())
        .ok_or(Error::NoIdentity)?;
    let mut constants = vec![0; d * d * d];
    for i in 0..d {
        for j in 0..d {
            let prod = &basis[i] * &basis[j];
            let c = solver
                .solve(prod.entries())
                .ok_or(Error::NotClosed { left: i, right: j })?;
            constants[(i * d + j) * d..(i * d + j + 1) * d].copy_from_slice(&c);
        }
    }
    // matrix products are associative, so only the identity needs recording
    Ok(FpAlgebra {
        p,
        dim: d,
        constants,
        identity,
        matrix_model: Some(basis.to_vec()),
    })
}

/// Unital subalgebra generated by a span of matrices: the span plus the
/// identity, closed under products.
pub fn generated_subalgebra(p: Prime, span: &[MatFp], n: usize) -> Result<FpAlgebra> {
    let mut rows: Vec<Vec<FpScalar>> = span.iter().map(|m| m.entries().to_vec()).collect();
    rows.push(MatFp::identity(p, n).entries().to_vec());
    let mut ech = rref_fp(p, &rows);
    loop {
        let mats: Vec<MatFp> = ech.rows.iter().map(|r| MatFp::from_vec(p, r.clone())).collect();
        let mut grown = ech.rows.clone();
        for a in &mats {
            for b in &mats {
                let prod = &(a * b);
                if !ech.contains(p, prod.entries()) {
                    grown.push(prod.entries().to_vec());
                }
            }
        }
        if grown.len() == ech.rows.len() {
            return from_matrix_span(p, &mats);
        }
        ech = rref_fp(p, &grown);
    }
}

/// `{x : x b_j = b_j x for all j}`.
pub fn center(a: &FpAlgebra) -> Subspace {
    let p = a.p;
    let d = a.dim;
    // equation (j, k): sum_i x_i (c[i][j][k] - c[j][i][k]) = 0
    let mut rows = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            let row: Vec<FpScalar> = (0..d)
                .map(|i| p.sub(a.product_row(i, j)[k], a.product_row(j, i)[k]))
                .collect();
            rows.push(row);
        }
    }
    Subspace {
        parent_dim: d,
        basis: nullspace(p, &rows, d),
    }
}


#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn matrix_span_examples() {
        let pp = p(2);
        let a = from_matrix_span(pp, &[MatFp::identity(pp, 2), MatFp::unit(pp, 2, 0, 1)]).unwrap();
        assert_eq!(a.dim(), 2);
        let x = a.basis_vector(1);
        assert_eq!(a.mul(&x, &x), vec![0, 0]);

        let a = from_matrix_span(pp, &full_matrix_units(pp, 2)).unwrap();
        assert!(a.associativity_failure().is_none());
        assert_eq!(a.mul(&a.basis_vector(1), &a.basis_vector(2)), a.basis_vector(0));

        let a = from_matrix_span(pp, &[MatFp::unit(pp, 2, 0, 0), MatFp::unit(pp, 2, 1, 1)]).unwrap();
        assert_eq!(a, {
            let mut s = split_product(pp, 2);
            s.matrix_model = a.matrix_model.clone();
            s
        });
    }

    #[test]
    fn matrix_span_errors() {
        let pp = p(2);
        assert_eq!(
            from_matrix_span(pp, &[MatFp::identity(pp, 2), MatFp::unit(pp, 2, 0, 1), MatFp::unit(pp, 2, 1, 0)]),
            Err(Error::NotClosed { left: 1, right: 2 })
        );
        assert_eq!(
            from_matrix_span(pp, &[MatFp::unit(pp, 2, 0, 1)]),
            Err(Error::NoIdentity)
        );
    }

    #[test]
    fn generated_subalgebra_examples() {
        let pp = p(2);
        let a = generated_subalgebra(pp, &[MatFp::identity(pp, 2)], 2).unwrap();
        assert_eq!(a.dim(), 1);

        let s = &MatFp::unit(pp, 2, 0, 1) + &MatFp::unit(pp, 2, 1, 0);
        assert_eq!(&s * &s, MatFp::identity(pp, 2));
        let a = generated_subalgebra(pp, &[MatFp::identity(pp, 2), s], 2).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.is_commutative());

        let units = full_matrix_units(pp, 2);
        let closed = from_matrix_span(pp, &rref_fp(pp, &units.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>())
            .rows
            .into_iter()
            .map(|r| MatFp::from_vec(pp, r))
            .collect::<Vec<_>>())
        .unwrap();
        assert_eq!(generated_subalgebra(pp, &units, 2).unwrap(), closed);

        // E12 alone generates the dual numbers together with the identity
        let a = generated_subalgebra(pp, &[MatFp::unit(pp, 2, 0, 1)], 2).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn center_examples() {
        let pp = p(2);
        let m2 = from_matrix_span(pp, &full_matrix_units(pp, 2)).unwrap();
        let z = center(&m2);
        assert_eq!(z.dim(), 1);
        assert!(z.contains(pp, m2.identity()));

        assert_eq!(center(&split_product(pp, 2)).dim(), 2);
    }

    #[test]
    fn center_of_iwahori_by_enumeration() {
        let a = iwahori();
        let pp = a.p();
        let mut central = Vec::new();
        for code in 0..16u64 {
            let x: Vec<u64> = (0..4).map(|i| (code >> i) & 1).collect();
            if (0..4).all(|j| {
                let b = a.basis_vector(j);
                a.mul(&x, &b) == a.mul(&b, &x)
            }) {
                central.push(x);
            }
        }
        // only 0 and 1: [b1, x] = 0 kills both off-diagonal coordinates
        assert_eq!(central.len(), 2);
        let z = center(&a);
        assert_eq!(z.dim(), 1);
        assert!(central.iter().all(|x| z.contains(pp, x)));
    }

    #[test]
    fn rejects_non_associative_constants() {
        let pp = p(3);
        // 1 on b0, b1*b1 = b0 + b1 with a broken b1*b0
        let c = vec![1, 0, 0, 1, 0, 2, 1, 1];
        assert!(FpAlgebra::from_structure_constants(pp, 2, c, vec![1, 0]).is_err());
    }
}
