use crate::algebra::FpAlgebra;
use crate::arith::{MatRat, PRational, Prime, QSolver};
use crate::error::{Error, Result};

/// Matrices of the generators in the basis given by the columns of `basis`:
/// `B^{-1} g B` for each generator `g`.
///
/// The norm on `V` that makes the columns of `B` orthonormal is the norm
/// being tested, so the results must be p-integral.
pub fn conjugate_to_lattice_basis(
    p: Prime,
    gens: &[MatRat],
    basis: &MatRat,
) -> Result<Vec<MatRat>> {
    let inv = basis.inverse()?;
    gens.iter()
        .enumerate()
        .map(|(k, g)| {
            if g.n() != basis.n() {
                return Err(Error::DimensionMismatch(format!(
                    "generator {k} does not match the lattice basis size"
                )));
            }
            let c = &(&inv * g) * basis;
            match c.non_integral_position(p) {
                Some((row, col)) => Err(Error::NotUnitary {
                    generator: k,
                    row,
                    col,
                }),
                None => Ok(c),
            }
        })
        .collect()
}

/// The reduction `O / pO` of a Z_(p)-order `O` given by a basis, as an
/// abstract F_p-algebra.
///
/// Structure constants are the coefficients of `b_i b_j` in the basis, which
/// must be p-integral (closure); the identity must lie in the Z_(p)-span.
pub fn order_reduction(p: Prime, order_basis: &[MatRat]) -> Result<FpAlgebra> {
    let d = order_basis.len();
    if d == 0 {
        return Err(Error::InvalidInput("empty order basis".into()));
    }
    let n = order_basis[0].n();
    for (k, b) in order_basis.iter().enumerate() {
        if b.n() != n {
            return Err(Error::DimensionMismatch(format!(
                "order basis element {k} is not {n}x{n}"
            )));
        }
        if let Some((row, col)) = b.non_integral_position(p) {
            return Err(Error::NotIntegral {
                what: format!("order basis element {k}"),
                row,
                col,
            });
        }
    }
    let vecs: Vec<Vec<PRational>> = order_basis.iter().map(|b| b.entries().to_vec()).collect();
    let solver = QSolver::new(&vecs).ok_or(Error::DependentBasis)?;

    let reduce_coeffs = |c: Vec<PRational>| -> Option<Vec<u64>> {
        c.iter().map(|x| x.reduce(p).ok()).collect()
    };

    let identity = solver
        .solve(MatRat::identity(n).entries())
        .and_then(reduce_coeffs)
        .ok_or(Error::NoIdentity)?;

    let mut constants = vec![0u64; d * d * d];
    for i in 0..d {
        for j in 0..d {
            let prod = &order_basis[i] * &order_basis[j];
            let coeffs = solver
                .solve(prod.entries())
                .and_then(reduce_coeffs)
                .ok_or(Error::NotClosed { left: i, right: j })?;
            constants[(i * d + j) * d..(i * d + j + 1) * d].copy_from_slice(&coeffs);
        }
    }
    FpAlgebra::from_structure_constants(p, d, constants, identity)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn m(rows: &[&[i64]]) -> MatRat {
        MatRat::from_i64_rows(rows)
    }

    #[test]
    fn conjugation_examples() {
        let pp = p(2);
        let g = m(&[&[0, 1], &[1, 0]]);
        let b = m(&[&[1, 1], &[1, -1]]);
        let out = conjugate_to_lattice_basis(pp, std::slice::from_ref(&g), &b).unwrap();
        assert_eq!(out, vec![m(&[&[1, 0], &[0, -1]])]);

        let out = conjugate_to_lattice_basis(pp, std::slice::from_ref(&g), &MatRat::identity(2)).unwrap();
        assert_eq!(out, vec![g]);

        let g = m(&[&[1, 1], &[0, 1]]);
        let b = MatRat::parse_rows(&[vec!["1", "0"], vec!["0", "1/2"]]).unwrap();
        assert_eq!(
            conjugate_to_lattice_basis(pp, &[g], &b),
            Err(Error::NotUnitary {
                generator: 0,
                row: 0,
                col: 1
            })
        );
    }

    #[test]
    fn iwahori_order_reduction() {
        let pp = p(2);
        let basis = [
            MatRat::unit(2, 0, 0),
            MatRat::unit(2, 0, 1),
            m(&[&[0, 0], &[2, 0]]),
            MatRat::unit(2, 1, 1),
        ];
        let a = order_reduction(pp, &basis).unwrap();
        assert_eq!(a.dim(), 4);
        // b2 b3 = 2 E11 = 2 b1 reduces to zero, and so does b3 b2 = 2 E22
        let (b2, b3) = (a.basis_vector(1), a.basis_vector(2));
        assert_eq!(a.mul(&b2, &b3), vec![0; 4]);
        assert_eq!(a.mul(&b3, &b2), vec![0; 4]);
    }

    #[test]
    fn full_matrix_order_and_group_ring() {
        let pp = p(2);
        let units: Vec<MatRat> = (0..4).map(|k| MatRat::unit(2, k / 2, k % 2)).collect();
        let a = order_reduction(pp, &units).unwrap();
        // E_ij E_kl = delta_jk E_il
        for i in 0..4 {
            for j in 0..4 {
                let expect: Vec<u64> = (0..4)
                    .map(|k| u64::from(i % 2 == j / 2 && k == (i / 2) * 2 + j % 2))
                    .collect();
                assert_eq!(a.mul(&a.basis_vector(i), &a.basis_vector(j)), expect);
            }
        }

        let a = order_reduction(pp, &[MatRat::identity(2), m(&[&[0, 1], &[1, 0]])]).unwrap();
        let s = a.basis_vector(1);
        assert_eq!(a.mul(&s, &s), a.identity().to_vec());
    }

    #[test]
    fn order_errors() {
        let pp = p(2);
        assert_eq!(
            order_reduction(pp, &[MatRat::identity(2), MatRat::unit(2, 0, 1), MatRat::unit(2, 1, 0)]),
            Err(Error::NotClosed { left: 1, right: 2 })
        );
        assert_eq!(
            order_reduction(pp, &[MatRat::unit(2, 0, 0)]),
            Err(Error::NoIdentity)
        );
        let half_id = MatRat::identity(2).scale(&PRational::from_int(2));
        assert_eq!(order_reduction(pp, &[half_id]), Err(Error::NoIdentity));
    }
}
