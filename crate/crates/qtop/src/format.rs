//! JSON file formats and report serialization.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use qtop_core::continuum::{
    ArctanChart, BallChart, BallVariant, Chart, ContinuumSpec, Exponent, LocusReport, Point,
    VerificationReport,
};
use qtop_core::finite::{AxiomReport, FiniteQuandle, Violation};
use qtop_core::poly::{BiPoly, QuandleVerdict, RackVerdict};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON in {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{0}")]
    Invalid(String),
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, FormatError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io { path: shown.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| FormatError::Json { path: shown, source })
}

/// `{"n": 3, "table": [[0, 2, 1], ...], "label": "..."}` with
/// `table[a][b] = a ▷ b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuandleFile {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub label: String,
}

impl QuandleFile {
    pub fn from_quandle(q: &FiniteQuandle) -> Self {
        QuandleFile { n: q.size(), table: q.rows(), label: q.label().to_string() }
    }

    pub fn into_quandle(self) -> Result<FiniteQuandle, FormatError> {
        if self.table.len() != self.n {
            return Err(FormatError::Invalid(format!(
                "\"n\" is {} but the table has {} rows",
                self.n,
                self.table.len()
            )));
        }
        FiniteQuandle::from_rows(&self.table, self.label).map_err(|e| FormatError::Invalid(e.to_string()))
    }
}

pub fn load_quandle(path: &Path) -> Result<FiniteQuandle, FormatError> {
    read_json::<QuandleFile>(path)?.into_quandle()
}

/// One coefficient `num/den · x^i y^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyTerm {
    pub i: u32,
    pub j: u32,
    pub num: i64,
    #[serde(default = "one")]
    pub den: i64,
}

fn one() -> i64 {
    1
}

pub fn poly_from_terms(terms: &[PolyTerm]) -> Result<BiPoly, FormatError> {
    BiPoly::from_fractions(terms.iter().map(|t| (t.i, t.j, t.num, t.den)))
        .map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn load_poly(path: &Path) -> Result<BiPoly, FormatError> {
    poly_from_terms(&read_json::<Vec<PolyTerm>>(path)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ExponentFile {
    Linear,
    Tent { peak: f64 },
}

impl From<ExponentFile> for Exponent {
    fn from(e: ExponentFile) -> Self {
        match e {
            ExponentFile::Linear => Exponent::Linear,
            ExponentFile::Tent { peak } => Exponent::Tent { peak },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariantFile {
    PaperFaithful,
    InvariantExponent,
}

impl From<VariantFile> for BallVariant {
    fn from(v: VariantFile) -> Self {
        match v {
            VariantFile::PaperFaithful => BallVariant::PaperFaithful,
            VariantFile::InvariantExponent => BallVariant::InvariantExponent,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ChartFile {
    /// `arctan : ℝ → (−π/2, π/2)`.
    Arctan,
    /// The ball `|x − center| < radius` mapped affinely onto the unit ball.
    Ball { center: Vec<f64>, radius: f64 },
}

/// JSON mirror of [`ContinuumSpec`], tagged by `"kind"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpecFile {
    UnitInterval {
        #[serde(default)]
        exponent: Option<ExponentFile>,
    },
    ClosedInterval {
        a: f64,
        b: f64,
        #[serde(default)]
        exponent: Option<ExponentFile>,
    },
    OpenIntervalG,
    BallOmega {
        dim: usize,
        variant: VariantFile,
        #[serde(default)]
        center: Option<Vec<f64>>,
        #[serde(default)]
        radius: Option<f64>,
    },
    FamilyFn {
        n: usize,
        #[serde(default)]
        a: Option<f64>,
        #[serde(default)]
        b: Option<f64>,
        #[serde(default)]
        exponent: Option<ExponentFile>,
    },
    FamilyOmegaN { n: usize, dim: usize, variant: VariantFile },
    ChartTransport { inner: Box<SpecFile>, chart: ChartFile },
    RealLineArctan,
    AffineLine { t: f64 },
    TrivialInterval { a: f64, b: f64 },
}

impl SpecFile {
    pub fn into_spec(self) -> ContinuumSpec {
        let exp = |e: Option<ExponentFile>| e.map_or(Exponent::Linear, Exponent::from);
        match self {
            SpecFile::UnitInterval { exponent } => ContinuumSpec::UnitInterval { exponent: exp(exponent) },
            SpecFile::ClosedInterval { a, b, exponent } => {
                ContinuumSpec::ClosedInterval { a, b, exponent: exp(exponent) }
            }
            SpecFile::OpenIntervalG => ContinuumSpec::OpenIntervalG,
            SpecFile::BallOmega { dim, variant, center, radius } => ContinuumSpec::BallOmega {
                dim,
                variant: variant.into(),
                center: center.unwrap_or_else(|| vec![0.0; dim]),
                radius: radius.unwrap_or(1.0),
            },
            SpecFile::FamilyFn { n, a, b, exponent } => ContinuumSpec::FamilyFn {
                n,
                a: a.unwrap_or(0.0),
                b: b.unwrap_or(1.0),
                exponent: exp(exponent),
            },
            SpecFile::FamilyOmegaN { n, dim, variant } => {
                ContinuumSpec::FamilyOmegaN { n, dim, variant: variant.into() }
            }
            SpecFile::ChartTransport { inner, chart } => {
                let chart: Arc<dyn Chart> = match chart {
                    ChartFile::Arctan => Arc::new(ArctanChart),
                    ChartFile::Ball { center, radius } => {
                        Arc::new(BallChart { center: Point::new(&center), radius })
                    }
                };
                ContinuumSpec::ChartTransport { inner: Box::new(inner.into_spec()), chart }
            }
            SpecFile::RealLineArctan => ContinuumSpec::RealLineArctan,
            SpecFile::AffineLine { t } => ContinuumSpec::AffineLine { t },
            SpecFile::TrivialInterval { a, b } => ContinuumSpec::TrivialInterval { a, b },
        }
    }
}

pub fn load_spec(path: &Path) -> Result<ContinuumSpec, FormatError> {
    Ok(read_json::<SpecFile>(path)?.into_spec())
}

/// Infinite residuals (domain escapes) serialize as `null`.
fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub check: String,
    pub grid: usize,
    pub evaluated: u64,
    pub max_residual: Option<f64>,
    pub tolerance: f64,
    pub failures: u64,
    pub passed: bool,
    pub witness: Vec<Vec<f64>>,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            check: r.check.name().to_string(),
            grid: r.grid,
            evaluated: r.evaluated,
            max_residual: finite(r.max_residual),
            tolerance: r.tolerance,
            failures: r.failures,
            passed: r.passed(),
            witness: r.witness.iter().map(|p| p.coords().to_vec()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LocusJson {
    Interval {
        intervals: Vec<[f64; 2]>,
        isolated_points: Vec<f64>,
        whole_domain: bool,
        grid: usize,
        tolerance: f64,
    },
    Ball { nontrivial_components: usize, trivial_components: usize, grid: usize, tolerance: f64 },
}

impl From<&LocusReport> for LocusJson {
    fn from(l: &LocusReport) -> Self {
        match l {
            LocusReport::Interval { intervals, isolated_points, whole_domain, grid, tolerance } => {
                LocusJson::Interval {
                    intervals: intervals.iter().map(|&(a, b)| [a, b]).collect(),
                    isolated_points: isolated_points.clone(),
                    whole_domain: *whole_domain,
                    grid: *grid,
                    tolerance: *tolerance,
                }
            }
            LocusReport::Ball { nontrivial_components, trivial_components, grid, tolerance } => {
                LocusJson::Ball {
                    nontrivial_components: *nontrivial_components,
                    trivial_components: *trivial_components,
                    grid: *grid,
                    tolerance: *tolerance,
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomJson {
    pub axiom: &'static str,
    pub holds: bool,
    /// Elements of the first counterexample, in the order `a, b, c`.
    pub witness: Option<Vec<usize>>,
    pub detail: Option<String>,
}

pub fn axioms_json(report: &AxiomReport) -> Vec<AxiomJson> {
    report
        .verdicts
        .iter()
        .map(|v| {
            let (witness, detail) = match v.witness {
                None => (None, None),
                Some(Violation::Idempotency { a, value }) => {
                    (Some(vec![a]), Some(format!("{a} ▷ {a} = {value}")))
                }
                Some(Violation::RightInvertibility { column, first, second, value }) => (
                    Some(vec![first, second, column]),
                    Some(format!("{first} ▷ {column} = {second} ▷ {column} = {value}")),
                ),
                Some(Violation::SelfDistributivity { a, b, c, lhs, rhs }) => (
                    Some(vec![a, b, c]),
                    Some(format!("({a} ▷ {b}) ▷ {c} = {lhs} but ({a} ▷ {c}) ▷ ({b} ▷ {c}) = {rhs}")),
                ),
            };
            AxiomJson { axiom: v.axiom.name(), holds: v.holds, witness, detail }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuandleVerdictJson {
    pub verdict: &'static str,
    pub passed_steps: Vec<&'static str>,
    pub failed_step: Option<&'static str>,
    pub detail: Option<String>,
}

impl From<&QuandleVerdict> for QuandleVerdictJson {
    fn from(v: &QuandleVerdict) -> Self {
        let passed_steps = v.passed().iter().map(|s| s.name()).collect();
        match v {
            QuandleVerdict::ForcedTrivial { .. } => QuandleVerdictJson {
                verdict: "forced_trivial",
                passed_steps,
                failed_step: None,
                detail: Some("p(x,y) = x".into()),
            },
            QuandleVerdict::Violated { step, detail, .. } => QuandleVerdictJson {
                verdict: "violated",
                passed_steps,
                failed_step: Some(step.name()),
                detail: Some(detail.clone()),
            },
            QuandleVerdict::Unresolved { detail, .. } => QuandleVerdictJson {
                verdict: "unresolved",
                passed_steps,
                failed_step: None,
                detail: Some(detail.clone()),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RackVerdictJson {
    pub verdict: &'static str,
    pub increasing: Option<bool>,
    pub reason: Option<String>,
}

impl From<&RackVerdict> for RackVerdictJson {
    fn from(v: &RackVerdict) -> Self {
        match v {
            RackVerdict::Valid { increasing } => {
                RackVerdictJson { verdict: "valid", increasing: Some(*increasing), reason: None }
            }
            RackVerdict::Rejected(f) => {
                RackVerdictJson { verdict: "rejected", increasing: None, reason: Some(f.to_string()) }
            }
        }
    }
}
