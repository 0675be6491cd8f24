//! Exact scalars and matrices over Q_p (as p-integral rationals) and F_p.

pub mod linalg;
pub mod matrix;
pub mod prime;
pub mod qlinalg;
pub mod rat;

pub use linalg::{axpy, left_kernel, nullspace, rref_fp, Echelon, SpanSolver};
pub use matrix::{reduce_matrix, MatFp, MatRat};
pub use prime::{FpScalar, Prime};
pub use qlinalg::{nullspace_q, rref_q, QSolver};
pub use rat::{PRational, Valuation};

/// p-adic valuation of a rational; see [`PRational::val_p`].
pub fn val_p(x: &PRational, p: Prime) -> Valuation {
    x.val_p(p)
}

/// Residue of a p-integral rational in F_p.
pub fn reduce_scalar(x: &PRational, p: Prime) -> crate::Result<FpScalar> {
    x.reduce(p)
}
