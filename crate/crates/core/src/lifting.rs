//! Lifting idempotents from the reduction to the integral model, and the
//! resulting splitting of the representation space.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::{wedderburn_components, FpAlgebra, StructureReport};
use crate::arith::{FpScalar, MatRat, PRational, Prime, SpanSolver, Valuation};
use crate::error::{Error, Result};
use crate::lattice::OperatorLattice;

/// Hard cap on Newton steps; quadratic convergence needs about `log2 N`.
const MAX_LIFT_STEPS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentLift {
    pub value: MatRat,
    /// `v_p` of `value^2 - value`.
    pub defect_valuation: Valuation,
    pub steps: usize,
    /// Defect valuation of the start and of every iterate.
    pub defect_history: Vec<Valuation>,
}

impl IdempotentLift {
    /// Residues of the entries modulo `p^precision`, row-major.
    pub fn value_mod(&self, p: Prime, precision: u32) -> Vec<BigInt> {
        let modulus = BigInt::from(p.get()).pow(precision);
        self.value
            .entries()
            .iter()
            .map(|x| x.residue_mod(&modulus))
            .collect()
    }
}

fn defect(m: &MatRat, p: Prime) -> Valuation {
    (&(m * m) - m).val_p(p)
}

fn newton_step(m: &MatRat) -> MatRat {
    let sq = m * m;
    let cube = &sq * m;
    &sq.scale(&PRational::from_int(3)) - &cube.scale(&PRational::from_int(2))
}

fn lift_checked(
    p0: &MatRat,
    p: Prime,
    precision: u32,
    mut check: impl FnMut(usize, &MatRat) -> Result<()>,
) -> Result<IdempotentLift> {
    if let Some((row, col)) = p0.non_integral_position(p) {
        return Err(Error::NotIntegral {
            what: "starting lift".into(),
            row,
            col,
        });
    }
    let mut value = p0.clone();
    let mut d = defect(&value, p);
    if let Valuation::Finite(v) = d {
        if v < 1 {
            return Err(Error::NotApproxIdempotent(v));
        }
    }
    check(0, &value)?;
    let mut history = vec![d];
    let mut steps = 0;
    while !d.at_least(precision as i64) {
        if steps == MAX_LIFT_STEPS {
            return Err(Error::MaxIterationsExceeded(MAX_LIFT_STEPS));
        }
        value = newton_step(&value);
        steps += 1;
        check(steps, &value)?;
        d = defect(&value, p);
        history.push(d);
    }
    Ok(IdempotentLift {
        value,
        defect_valuation: d,
        steps,
        defect_history: history,
    })
}

/// Iterate `P <- 3P^2 - 2P^3` from `p0` until `v_p(P^2 - P) >= precision`.
pub fn lift_idempotent(p0: &MatRat, p: Prime, precision: u32) -> Result<IdempotentLift> {
    lift_checked(p0, p, precision, |_, _| Ok(()))
}

/// Lift a central idempotent of the reduction of `lstar` into `lstar`.
///
/// `alg` must carry the reduction of `lstar` as its matrix model. The start
/// is the combination of `lstar`'s basis with coefficients in `[0, p)` whose
/// reduction is `e_bar`; every iterate is checked for lattice membership and
/// the result for centrality up to `precision`.
pub fn lift_central_idempotent(
    alg: &FpAlgebra,
    e_bar: &[FpScalar],
    lstar: &OperatorLattice,
    precision: u32,
) -> Result<IdempotentLift> {
    let p = lstar.p();
    let target = alg
        .to_matrix(e_bar)
        .ok_or_else(|| Error::InternalInconsistency("algebra has no matrix model".into()))?;
    let reduced: Vec<Vec<FpScalar>> = lstar
        .basis()
        .iter()
        .map(|b| b.reduce(p).map(|m| m.entries().to_vec()))
        .collect::<Result<_>>()?;
    let solver = SpanSolver::new(p, &reduced).ok_or_else(|| {
        Error::InternalInconsistency("lattice reduction has dependent basis images".into())
    })?;
    let coeffs = solver.solve(target.entries()).ok_or_else(|| {
        Error::InternalInconsistency("idempotent is not in the reduction of the lattice".into())
    })?;
    let mut p0 = MatRat::zero(lstar.n());
    for (&c, b) in coeffs.iter().zip(lstar.basis()) {
        if c != 0 {
            p0 = &p0 + &b.scale(&PRational::from_int(c as i64));
        }
    }
    let lift = lift_checked(&p0, p, precision, |step, m| {
        if lstar.member(m) {
            Ok(())
        } else {
            Err(Error::LeftLattice { step })
        }
    })?;
    for (k, b) in lstar.basis().iter().enumerate() {
        let v = lift.value.commutator(b).val_p(p);
        if let Valuation::Finite(v) = v {
            if v < precision as i64 {
                return Err(Error::CentralityViolation {
                    basis_index: k,
                    valuation: v,
                    precision: precision as i64,
                });
            }
        }
    }
    Ok(lift)
}

/// Dimension of `e V` for each lift: the unique integer in `[0, n]`
/// congruent to `Tr(e)` modulo `p^precision`.
pub fn split_representation(
    n: usize,
    lifts: &[IdempotentLift],
    p: Prime,
    precision: u32,
) -> Result<Vec<usize>> {
    let modulus = BigInt::from(p.get()).pow(precision);
    let mut dims = Vec::with_capacity(lifts.len());
    for lift in lifts {
        let t = lift.value.trace();
        let ambiguous = || Error::AmbiguousTrace {
            trace: t.to_string(),
            n,
            precision,
        };
        if modulus <= BigInt::from(n) {
            return Err(ambiguous());
        }
        let r = t.residue_mod(&modulus);
        match r.to_usize() {
            Some(d) if d <= n => dims.push(d),
            _ => return Err(ambiguous()),
        }
    }
    let sum: usize = dims.iter().sum();
    if sum != n {
        return Err(Error::DimMismatch { sum, n });
    }
    Ok(dims)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    SemisimpleByTheorem,
    IrreducibleByFullReduction,
    InconclusiveNonSemisimpleReduction,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::SemisimpleByTheorem => "SemisimpleByTheorem",
            Verdict::IrreducibleByFullReduction => "IrreducibleByFullReduction",
            Verdict::InconclusiveNonSemisimpleReduction => "InconclusiveNonSemisimpleReduction",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Note attached to every inconclusive verdict.
pub const CONVERSE_WARNING: &str = "the reduction is not semisimple; this proves nothing about the \
representation, which may still be semisimple (another equivalent norm can have a semisimple reduction)";

pub fn verdict(n: usize, report: &StructureReport) -> Verdict {
    if !report.semisimple {
        Verdict::InconclusiveNonSemisimpleReduction
    } else if report.simple && report.dim == n * n {
        Verdict::IrreducibleByFullReduction
    } else {
        Verdict::SemisimpleByTheorem
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub verdict: Verdict,
    pub component_dims: Vec<usize>,
    pub idempotent_lifts: Vec<IdempotentLift>,
    pub reduced_report: StructureReport,
}

/// Structure of the reduction, lifts of its primitive central idempotents
/// into `lstar`, and the induced splitting of the `n`-dimensional space.
pub fn decompose(alg: &FpAlgebra, lstar: &OperatorLattice, precision: u32) -> Result<DecompositionReport> {
    let n = lstar.n();
    let p = lstar.p();
    let report = wedderburn_components(alg)?;
    let v = verdict(n, &report);
    if !report.semisimple {
        return Ok(DecompositionReport {
            verdict: v,
            component_dims: Vec::new(),
            idempotent_lifts: Vec::new(),
            reduced_report: report,
        });
    }
    let lifts = report
        .primitive_central_idempotents
        .iter()
        .map(|e| lift_central_idempotent(alg, e, lstar, precision))
        .collect::<Result<Vec<_>>>()?;
    for (i, e) in lifts.iter().enumerate() {
        for f in &lifts[i + 1..] {
            if !(&e.value * &f.value).val_p(p).at_least(precision as i64) {
                return Err(Error::InternalInconsistency(
                    "lifted central idempotents are not orthogonal to the working precision".into(),
                ));
            }
        }
    }
    let dims = split_representation(n, &lifts, p, precision)?;
    Ok(DecompositionReport {
        verdict: v,
        component_dims: dims,
        idempotent_lifts: lifts,
        reduced_report: report,
    })
}
