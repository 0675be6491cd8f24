use crate::arith::{left_kernel, rref_fp, MatFp, MatRat, PRational};
use crate::error::{Error, Result};

use super::{from_integral_rows, OperatorLattice};

/// One level of the reduction chain: a lattice and its image mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLevel {
    pub lattice: OperatorLattice,
    /// Echelon basis of the reduction of `lattice`.
    pub alpha: Vec<MatFp>,
    pub alpha_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionChain {
    pub levels: Vec<ChainLevel>,
    /// First index `i` with `L_{i+1} = L_i`.
    pub stabilized_at: usize,
}

impl ReductionChain {
    pub fn alpha_dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.alpha_dim).collect()
    }

    pub fn final_level(&self) -> &ChainLevel {
        self.levels.last().expect("chain has at least one level")
    }

    pub fn final_lattice(&self) -> &OperatorLattice {
        &self.final_level().lattice
    }
}

fn reduced_rows(lattice: &OperatorLattice) -> Vec<Vec<u64>> {
    let p = lattice.p();
    lattice
        .basis()
        .iter()
        .map(|b| b.reduce(p).expect("lattice basis is integral").entries().to_vec())
        .collect()
}

/// Echelon basis of the image of the lattice in `M_n(F_p)`.
pub fn reduced_image(lattice: &OperatorLattice) -> Vec<MatFp> {
    let p = lattice.p();
    rref_fp(p, &reduced_rows(lattice))
        .rows
        .into_iter()
        .map(|r| MatFp::from_vec(p, r))
        .collect()
}

/// `L + p^{-1} (L ∩ p M_n)`.
///
/// `L ∩ p M_n` is generated by `p L` together with the integer lifts of the
/// F_p-relations among the reduced basis; only the latter contribute new
/// elements after division by `p`.
pub fn saturation_step(lattice: &OperatorLattice) -> OperatorLattice {
    let p = lattice.p();
    let relations = left_kernel(p, &reduced_rows(lattice));
    let mut rows: Vec<Vec<PRational>> = lattice
        .basis()
        .iter()
        .map(|b| b.entries().to_vec())
        .collect();
    let inv_p = PRational::one().shift(p, -1);
    for rel in relations {
        let mut m = MatRat::zero(lattice.n());
        for (&c, b) in rel.iter().zip(lattice.basis()) {
            if c != 0 {
                m = &m + &b.scale(&PRational::from_int(c as i64));
            }
        }
        rows.push(m.scale(&inv_p).into_entries());
    }
    from_integral_rows(p, lattice.n(), rows)
}

fn level(lattice: OperatorLattice) -> ChainLevel {
    let alpha = reduced_image(&lattice);
    let alpha_dim = alpha.len();
    ChainLevel {
        lattice,
        alpha,
        alpha_dim,
    }
}

/// Iterate [`saturation_step`] until the lattice is a fixpoint.
///
/// The stopping rule is lattice equality, which implies the reduction chain
/// has stabilized for good; the last `alpha` is the reduction of the
/// operator algebra.
pub fn saturate(l0: &OperatorLattice, max_steps: usize) -> Result<ReductionChain> {
    let mut levels = vec![level(l0.clone())];
    for _ in 0..=max_steps {
        let current = &levels.last().unwrap().lattice;
        let next = saturation_step(current);
        if &next == current {
            let stabilized_at = levels.len() - 1;
            return Ok(ReductionChain {
                levels,
                stabilized_at,
            });
        }
        if levels.len() > max_steps {
            break;
        }
        levels.push(level(next));
    }
    Err(Error::MaxIterationsExceeded(max_steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Prime;
    use crate::lattice::{algebra_closure, canonicalize};

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn m(rows: &[&[i64]]) -> MatRat {
        MatRat::from_i64_rows(rows)
    }

    fn diag(xs: &[i64]) -> MatRat {
        MatRat::diag(xs.iter().map(|&x| PRational::from_int(x)))
    }

    #[test]
    fn step_examples() {
        let pp = p(2);
        let i = MatRat::identity(2);
        let e12 = MatRat::unit(2, 0, 1);
        let l = canonicalize(pp, 2, &[i.clone(), e12.clone()]).unwrap();
        assert_eq!(saturation_step(&l), l);

        let l = canonicalize(pp, 2, &[i.clone(), e12.clone(), m(&[&[0, 0], &[2, 0]]), m(&[&[2, 0], &[0, 0]])]).unwrap();
        let expect = canonicalize(pp, 2, &[i.clone(), e12.clone(), MatRat::unit(2, 1, 0), MatRat::unit(2, 0, 0)]).unwrap();
        assert_eq!(saturation_step(&l), expect);
        assert_eq!(expect, OperatorLattice::full(pp, 2));

        let l = canonicalize(pp, 2, &[i.clone(), diag(&[0, 4])]).unwrap();
        let expect = canonicalize(pp, 2, &[i.clone(), diag(&[0, 2])]).unwrap();
        assert_eq!(saturation_step(&l), expect);
    }

    #[test]
    fn reduced_image_examples() {
        let pp = p(2);
        let i = MatRat::identity(2);
        let e12 = MatRat::unit(2, 0, 1);
        let l = canonicalize(pp, 2, &[i.clone(), e12.clone()]).unwrap();
        let img = reduced_image(&l);
        assert_eq!(img, vec![MatFp::identity(pp, 2), MatFp::unit(pp, 2, 0, 1)]);

        let l = canonicalize(pp, 2, &[i.clone(), e12.clone(), m(&[&[0, 0], &[2, 0]]), m(&[&[2, 0], &[0, 0]])]).unwrap();
        assert_eq!(reduced_image(&l).len(), 2);
        assert_eq!(reduced_image(&OperatorLattice::full(pp, 2)).len(), 4);
    }

    #[test]
    fn saturate_examples() {
        let pp = p(2);
        let g1 = m(&[&[1, 1], &[0, 1]]);
        let chain = saturate(&algebra_closure(pp, 2, std::slice::from_ref(&g1)).unwrap(), 64).unwrap();
        assert_eq!((chain.stabilized_at, chain.alpha_dims()), (0, vec![2]));

        let g3 = m(&[&[1, 0], &[2, 1]]);
        let chain = saturate(&algebra_closure(pp, 2, &[g1, g3]).unwrap(), 64).unwrap();
        assert_eq!((chain.stabilized_at, chain.alpha_dims()), (1, vec![2, 4]));

        let chain = saturate(&algebra_closure(pp, 2, &[diag(&[1, 5])]).unwrap(), 64).unwrap();
        assert_eq!((chain.stabilized_at, chain.alpha_dims()), (2, vec![1, 1, 2]));
    }

    #[test]
    fn max_steps_guard() {
        let pp = p(2);
        let l0 = algebra_closure(pp, 2, &[diag(&[1, 5])]).unwrap();
        assert_eq!(saturate(&l0, 1), Err(Error::MaxIterationsExceeded(1)));
        assert!(saturate(&l0, 2).is_ok());
    }
}
