//! Reduction of p-adic operator algebras.
//!
//! Given generator matrices of a finite-dimensional unitary representation
//! over `Q_p`, this crate computes the unit ball of the generated operator
//! algebra by repeated reduction, analyses the resulting `F_p`-algebra
//! (radical, center, Wedderburn components), lifts its central idempotents
//! back to characteristic zero and reports what this says about the
//! semisimplicity of the representation.

pub mod algebra;
pub mod arith;
pub mod dual;
pub mod error;
pub mod lattice;
pub mod lifting;
pub mod pipeline;

pub use algebra::{FpAlgebra, StructureReport, Subspace};
pub use arith::{MatFp, MatRat, PRational, Prime, Valuation};
pub use error::{Error, Result};
pub use lattice::{OperatorLattice, ReductionChain};
pub use lifting::{DecompositionReport, IdempotentLift, Verdict};
pub use pipeline::{emit_report, run_analysis, AnalysisInput, AnalysisOutput, Mode, ReportFormat};
