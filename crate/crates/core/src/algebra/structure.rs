use serde::Serialize;

use crate::arith::FpScalar;
use crate::error::{Error, Result};

use super::idempotents::span_dim;
use super::{center, primitive_central_idempotents, radical, FpAlgebra, DEFAULT_ENUMERATION_BOUND};

/// A simple component `M_l(F_{p^m})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub dim: usize,
    pub center_degree: usize,
    pub matrix_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub dim: usize,
    pub radical_dim: usize,
    pub semisimple: bool,
    pub simple: bool,
    pub commutative: bool,
    pub center_dim: usize,
    /// Empty unless semisimple.
    pub components: Vec<Component>,
    pub primitive_central_idempotents: Vec<Vec<FpScalar>>,
}

pub fn is_semisimple(a: &FpAlgebra) -> bool {
    radical(a).is_zero()
}

fn isqrt(x: usize) -> usize {
    let mut r = (x as f64).sqrt() as usize;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Radical, center and, when semisimple, the Wedderburn invariants `(l, m)`
/// of each simple component.
pub fn wedderburn_components(a: &FpAlgebra) -> Result<StructureReport> {
    let rad = radical(a);
    let z = center(a);
    let semisimple = rad.is_zero();
    let mut report = StructureReport {
        dim: a.dim(),
        radical_dim: rad.dim(),
        semisimple,
        simple: false,
        commutative: a.is_commutative(),
        center_dim: z.dim(),
        components: Vec::new(),
        primitive_central_idempotents: Vec::new(),
    };
    if !semisimple {
        return Ok(report);
    }
    let idem = primitive_central_idempotents(a, DEFAULT_ENUMERATION_BOUND)?;
    let full: Vec<Vec<FpScalar>> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
    for e in &idem {
        let dim = span_dim(a, e, &full);
        let m = span_dim(a, e, &z.basis);
        if m == 0 || !dim.is_multiple_of(m) || isqrt(dim / m).pow(2) != dim / m {
            return Err(Error::InternalInconsistency(format!(
                "component of dimension {dim} over a center of degree {m} is not a matrix algebra"
            )));
        }
        report.components.push(Component {
            dim,
            center_degree: m,
            matrix_size: isqrt(dim / m),
        });
    }
    let total: usize = report.components.iter().map(|c| c.dim).sum();
    if total != a.dim() {
        return Err(Error::InternalInconsistency(format!(
            "component dimensions sum to {total}, expected {}",
            a.dim()
        )));
    }
    report.simple = report.components.len() == 1;
    report.primitive_central_idempotents = idem;
    Ok(report)
}
