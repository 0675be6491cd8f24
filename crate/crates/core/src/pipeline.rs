//! Input parsing, orchestration and report rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{from_matrix_span, wedderburn_components, StructureReport};
use crate::arith::{MatRat, PRational, Prime};
use crate::dual::{compare, CharacterSet, ClusterComparison, Partition};
use crate::error::{Error, Result};
use crate::lattice::{algebra_closure, conjugate_to_lattice_basis, order_reduction, saturate};
use crate::lifting::{decompose, IdempotentLift, Verdict, CONVERSE_WARNING};

pub const DEFAULT_PRECISION: u32 = 64;
pub const DEFAULT_MAX_STEPS: usize = crate::lattice::DEFAULT_MAX_STEPS;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Representation,
    Order,
    Cluster,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

type RawMatrix = Vec<Vec<PRational>>;

/// One analysis request. See `docs/format.md` for the schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisInput {
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<RawMatrix>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_lattice_basis: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_basis: Option<Vec<RawMatrix>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chars: Option<Vec<PRational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_level: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_steps: Option<usize>,
}

impl AnalysisInput {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn precision(&self) -> u32 {
        self.precision.unwrap_or(DEFAULT_PRECISION)
    }

    pub fn max_steps(&self) -> usize {
        self.max_steps.unwrap_or(DEFAULT_MAX_STEPS)
    }

    /// The same request with defaults filled in; rationals are already in
    /// lowest terms once parsed.
    pub fn canonical(&self) -> AnalysisInput {
        let mut c = self.clone();
        c.precision = Some(self.precision());
        c.max_steps = Some(self.max_steps());
        if c.mode == Mode::Cluster && c.n.is_none() {
            c.n = c.chars.as_ref().map(Vec::len);
        }
        c
    }

    /// SHA-256 of the compact JSON of [`AnalysisInput::canonical`].
    pub fn sha256(&self) -> String {
        let bytes = serde_json::to_vec(&self.canonical()).expect("input serializes");
        hex::encode(Sha256::digest(&bytes))
    }

    fn check_fields(&self) -> Result<()> {
        let present = [
            ("generators", self.generators.is_some()),
            ("v_lattice_basis", self.v_lattice_basis.is_some()),
            ("order_basis", self.order_basis.is_some()),
            ("chars", self.chars.is_some()),
            ("max_level", self.max_level.is_some()),
        ];
        let (required, allowed): (&[&str], &[&str]) = match self.mode {
            Mode::Representation => (&["generators"], &["generators", "v_lattice_basis"]),
            Mode::Order => (&["order_basis"], &["order_basis"]),
            Mode::Cluster => (&["chars", "max_level"], &["chars", "max_level"]),
        };
        for (name, here) in present {
            if here && !allowed.contains(&name) {
                return Err(Error::InvalidInput(format!(
                    "field `{name}` is not allowed in {} mode",
                    self.mode.as_str()
                )));
            }
            if !here && required.contains(&name) {
                return Err(Error::InvalidInput(format!(
                    "field `{name}` is required in {} mode",
                    self.mode.as_str()
                )));
            }
        }
        if self.mode != Mode::Cluster && self.n.is_none() {
            return Err(Error::InvalidInput(format!(
                "field `n` is required in {} mode",
                self.mode.as_str()
            )));
        }
        if self.precision == Some(0) {
            return Err(Error::InvalidInput("precision must be positive".into()));
        }
        Ok(())
    }
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Representation => "representation",
            Mode::Order => "order",
            Mode::Cluster => "cluster",
        }
    }
}

fn to_matrix(raw: &RawMatrix, n: usize, what: &str) -> Result<MatRat> {
    if raw.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{what} has {} rows, expected {n}",
            raw.len()
        )));
    }
    for (i, row) in raw.iter().enumerate() {
        if row.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{what} row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
    }
    MatRat::from_rows(raw.clone())
}

fn to_matrices(raw: &[RawMatrix], n: usize, field: &str) -> Result<Vec<MatRat>> {
    raw.iter()
        .enumerate()
        .map(|(k, m)| to_matrix(m, n, &format!("{field}[{k}]")))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftSummary {
    pub steps: usize,
    /// `null` when the lift is an exact idempotent.
    pub defect_valuation: Option<i64>,
    pub defect_history: Vec<Option<i64>>,
    /// Entries modulo `p^precision`, as decimal strings.
    pub value_mod: Vec<Vec<String>>,
    pub trace_mod: String,
}

impl LiftSummary {
    fn new(lift: &IdempotentLift, p: Prime, precision: u32) -> Self {
        let n = lift.value.n();
        let residues = lift.value_mod(p, precision);
        let modulus = num_bigint::BigInt::from(p.get()).pow(precision);
        LiftSummary {
            steps: lift.steps,
            defect_valuation: lift.defect_valuation.finite(),
            defect_history: lift.defect_history.iter().map(|v| v.finite()).collect(),
            value_mod: residues
                .chunks(n)
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
            trace_mod: lift.value.trace().residue_mod(&modulus).to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisOutput {
    pub input_sha256: String,
    pub input: AnalysisInput,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilized_at: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced: Option<StructureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub lifts: Vec<LiftSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cluster: Option<ClusterComparison>,
    pub warnings: Vec<String>,
}

impl AnalysisOutput {
    fn empty(input: &AnalysisInput) -> Self {
        AnalysisOutput {
            input_sha256: input.sha256(),
            input: input.canonical(),
            alpha_dims: None,
            stabilized_at: None,
            reduced: None,
            verdict: None,
            component_dims: None,
            lifts: Vec::new(),
            cluster: None,
            warnings: Vec::new(),
        }
    }
}

/// Validate and run one analysis.
pub fn run_analysis(input: &AnalysisInput) -> Result<AnalysisOutput> {
    input.check_fields()?;
    let p = Prime::new(input.p)?;
    match input.mode {
        Mode::Representation => run_representation(input, p),
        Mode::Order => run_order(input, p),
        Mode::Cluster => run_cluster(input, p),
    }
}

fn run_representation(input: &AnalysisInput, p: Prime) -> Result<AnalysisOutput> {
    let n = input.n.expect("checked");
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let precision = input.precision();
    let mut gens = to_matrices(input.generators.as_deref().unwrap_or_default(), n, "generators")?;
    if let Some(raw) = &input.v_lattice_basis {
        let basis = to_matrix(raw, n, "v_lattice_basis")?;
        gens = conjugate_to_lattice_basis(p, &gens, &basis)?;
    }
    let l0 = algebra_closure(p, n, &gens)?;
    let chain = saturate(&l0, input.max_steps())?;
    let alg = from_matrix_span(p, &chain.final_level().alpha)?;
    let d = decompose(&alg, chain.final_lattice(), precision)?;

    let mut out = AnalysisOutput::empty(input);
    out.alpha_dims = Some(chain.alpha_dims());
    out.stabilized_at = Some(chain.stabilized_at);
    if d.verdict == Verdict::InconclusiveNonSemisimpleReduction {
        out.warnings.push(CONVERSE_WARNING.to_string());
    }
    out.verdict = Some(d.verdict);
    out.component_dims = Some(d.component_dims);
    out.lifts = d
        .idempotent_lifts
        .iter()
        .map(|l| LiftSummary::new(l, p, precision))
        .collect();
    out.reduced = Some(d.reduced_report);
    Ok(out)
}

fn run_order(input: &AnalysisInput, p: Prime) -> Result<AnalysisOutput> {
    let n = input.n.expect("checked");
    let basis = to_matrices(input.order_basis.as_deref().unwrap_or_default(), n, "order_basis")?;
    let alg = order_reduction(p, &basis)?;
    let report = wedderburn_components(&alg)?;
    let mut out = AnalysisOutput::empty(input);
    if !report.semisimple {
        out.warnings.push("the reduction of the order is not semisimple".to_string());
    }
    out.reduced = Some(report);
    Ok(out)
}

fn run_cluster(input: &AnalysisInput, p: Prime) -> Result<AnalysisOutput> {
    let chars = input.chars.clone().unwrap_or_default();
    if let Some(n) = input.n {
        if n != chars.len() {
            return Err(Error::DimensionMismatch(format!(
                "n = {n} but {} characters given",
                chars.len()
            )));
        }
    }
    let cs = CharacterSet::new(p, chars)?;
    let cmp = compare(&cs, input.max_level.expect("checked"))?;
    let mut out = AnalysisOutput::empty(input);
    for l in cmp.levels.iter().filter(|l| !l.agree) {
        out.warnings.push(format!(
            "level {}: partition from the reduction differs from congruence modulo p^{}",
            l.level,
            l.level + 1
        ));
    }
    out.cluster = Some(cmp);
    Ok(out)
}

fn fmt_partition(part: &Partition) -> String {
    part.iter()
        .map(|b| {
            let inner: Vec<String> = b.iter().map(ToString::to_string).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn fmt_list<T: ToString>(xs: &[T]) -> String {
    let inner: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", inner.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Render a report; both formats end with a newline and are deterministic.
pub fn emit_report(out: &AnalysisOutput, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(out).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Text => render_text(out),
    }
}

fn render_text(out: &AnalysisOutput) -> String {
    let mut s = String::new();
    let input = &out.input;
    let _ = writeln!(s, "mode: {}", input.mode.as_str());
    let _ = writeln!(s, "input sha256: {}", out.input_sha256);
    match input.n {
        Some(n) => {
            let _ = writeln!(s, "p = {}, n = {}", input.p, n);
        }
        None => {
            let _ = writeln!(s, "p = {}", input.p);
        }
    }
    if let Some(dims) = &out.alpha_dims {
        let _ = writeln!(s, "alpha dims: {}", fmt_list(dims));
    }
    if let Some(k) = out.stabilized_at {
        let _ = writeln!(s, "stabilized at: {k}");
    }
    if let Some(r) = &out.reduced {
        let _ = writeln!(
            s,
            "reduced algebra: dim {}, radical dim {}, center dim {}",
            r.dim, r.radical_dim, r.center_dim
        );
        let _ = writeln!(
            s,
            "  semisimple: {}, simple: {}, commutative: {}",
            yes_no(r.semisimple),
            yes_no(r.simple),
            yes_no(r.commutative)
        );
        for c in &r.components {
            let field = match input.p.checked_pow(c.center_degree as u32) {
                Some(q) => format!("F_{q}"),
                None => format!("F_{{{}^{}}}", input.p, c.center_degree),
            };
            let _ = writeln!(s, "  component: M_{}({field}), dim {}", c.matrix_size, c.dim);
        }
    }
    if let Some(v) = out.verdict {
        let _ = writeln!(s, "verdict: {v}");
    }
    if let Some(dims) = &out.component_dims {
        if !dims.is_empty() {
            let _ = writeln!(s, "component dims: {}", fmt_list(dims));
        }
    }
    for (k, l) in out.lifts.iter().enumerate() {
        let defect = l
            .defect_valuation
            .map_or_else(|| "exact".to_string(), |v| format!("v_p = {v}"));
        let _ = writeln!(
            s,
            "lift {k}: {} steps, defect {defect}, trace {}",
            l.steps, l.trace_mod
        );
    }
    if let Some(c) = &out.cluster {
        let _ = writeln!(s, "stabilized at: {}", c.stabilized_at);
        for l in &c.levels {
            let _ = writeln!(
                s,
                "level {}: reduction {} | congruence {} | {}",
                l.level,
                fmt_partition(&l.cluster),
                fmt_partition(&l.predicted),
                if l.agree { "agree" } else { "DIFFER" }
            );
        }
        let _ = writeln!(s, "all levels agree: {}", yes_no(c.all_agree));
    }
    for w in &out.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(gens: &str, extra: &str) -> AnalysisInput {
        AnalysisInput::from_json(&format!(
            r#"{{"p": 2, "n": 2, "mode": "representation", "generators": {gens}{extra}}}"#
        ))
        .unwrap()
    }

    #[test]
    fn first_example() {
        let out = run_analysis(&rep(r#"[[[1,1],[0,1]]]"#, "")).unwrap();
        assert_eq!(out.alpha_dims, Some(vec![2]));
        let r = out.reduced.as_ref().unwrap();
        assert_eq!((r.dim, r.radical_dim, r.semisimple), (2, 1, false));
        assert_eq!(out.verdict, Some(Verdict::InconclusiveNonSemisimpleReduction));
        let json = emit_report(&out, ReportFormat::Json);
        assert!(json.contains("\"semisimple\": false"));
        assert!(json.contains("\"radical_dim\": 1"));
        assert!(emit_report(&out, ReportFormat::Text).contains("proves nothing"));
    }

    #[test]
    fn third_example_and_characters() {
        let out = run_analysis(&rep(r#"[[["1","1"],["0","1"]], [[1,0],[2,1]]]"#, "")).unwrap();
        assert_eq!(out.alpha_dims, Some(vec![2, 4]));
        assert_eq!(out.verdict, Some(Verdict::IrreducibleByFullReduction));

        let out = run_analysis(&rep(r#"[[[0,1],[1,0]]]"#, r#", "v_lattice_basis": [[1,1],[1,-1]]"#)).unwrap();
        assert_eq!(out.verdict, Some(Verdict::SemisimpleByTheorem));
        assert_eq!(out.component_dims, Some(vec![1, 1]));
    }

    #[test]
    fn field_checks() {
        let bad = AnalysisInput::from_json(r#"{"p": 2, "n": 2, "mode": "order", "generators": []}"#).unwrap();
        assert!(matches!(run_analysis(&bad), Err(Error::InvalidInput(_))));
        let bad = AnalysisInput::from_json(r#"{"p": 4, "n": 2, "mode": "representation", "generators": []}"#).unwrap();
        assert_eq!(run_analysis(&bad), Err(Error::NotPrime(4)));
        let bad = rep(r#"[[[1,1,0],[0,1]]]"#, "");
        assert!(matches!(run_analysis(&bad), Err(Error::DimensionMismatch(_))));
        assert!(matches!(
            AnalysisInput::from_json(r#"{"p": 2, "mode": "cluster", "chars": [1], "max_level": 1, "bogus": 0}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            AnalysisInput::from_json(r#"{"p": 2, "mode": "cluster", "chars": ["1/0"], "max_level": 1}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn canonical_echo_round_trips() {
        let input = rep(r#"[[["2/4","1"],["0","1"]]]"#, "");
        let out = run_analysis(&input);
        // 1/2 is not 2-integral
        assert!(matches!(out, Err(Error::NotIntegral { .. })));

        let input = rep(r#"[[["3/3","1"],["0","1"]]]"#, "");
        let out = run_analysis(&input).unwrap();
        let echo = serde_json::to_string(&out.input).unwrap();
        let back = AnalysisInput::from_json(&echo).unwrap();
        assert_eq!(back, input.canonical());
        assert_eq!(back.sha256(), out.input_sha256);
    }
}
