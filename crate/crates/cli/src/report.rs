//! Output documents. Every rational is a `"p/q"` string and every big integer
//! a decimal string; nothing is ever written as a JSON float.

use gorpoints::exactalg::{format_rational, Poly, Rational};
use gorpoints::gorenstein::{
    DecisionPath, DegreeComparison, DgoDetail, DgoResult, FailureReason, GorensteinCertificate,
    SpanRelation, StepComparison,
};
use gorpoints::lifting::Obstruction;
use gorpoints::pointset::PointSet;
use serde::Serialize;

#[derive(Debug, Clone, Copy, Default)]
pub struct Style {
    pub pretty: bool,
}

#[derive(Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub result: T,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub timings: Timings,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub total_us: u64,
}

pub fn q(x: &Rational) -> String {
    format_rational(x)
}

pub fn qvec(v: &[Rational]) -> Vec<String> {
    v.iter().map(q).collect()
}

pub fn points_doc(x: &PointSet) -> Vec<Vec<String>> {
    x.points().iter().map(|p| qvec(p.coords())).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct TermDoc {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolyDoc {
    pub nvars: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    /// Sorted by degree, then reverse lexicographically on exponents.
    pub terms: Vec<TermDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rendered: Option<String>,
}

impl PolyDoc {
    pub fn new(p: &Poly, style: Style) -> Self {
        PolyDoc {
            nvars: p.nvars(),
            degree: p.homogeneous_degree(),
            terms: p
                .terms()
                .map(|(e, c)| TermDoc {
                    exponents: e.exponents().to_vec(),
                    coefficient: q(c),
                })
                .collect(),
            rendered: style.pretty.then(|| p.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "code", rename_all = "snake_case")]
pub enum FailureDoc {
    KernelDimensionNotOne { dim: usize },
    AlphaHasZeroEntry { zero_positions: Vec<usize> },
    DualDimensionTooSmall { found: usize, required: usize },
}

impl From<&FailureReason> for FailureDoc {
    fn from(r: &FailureReason) -> Self {
        match r {
            FailureReason::KernelDimensionNotOne { dim } => {
                FailureDoc::KernelDimensionNotOne { dim: *dim }
            }
            FailureReason::AlphaHasZeroEntry { zero_positions } => FailureDoc::AlphaHasZeroEntry {
                zero_positions: zero_positions.clone(),
            },
            FailureReason::DualDimensionTooSmall { found, required } => {
                FailureDoc::DualDimensionTooSmall {
                    found: *found,
                    required: *required,
                }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DgoDetailDoc {
    Holds,
    AsymmetricHVector {
        t: usize,
    },
    CayleyBacharachFails {
        dropped: usize,
        degree: u32,
        hf_full: usize,
        hf_subset: usize,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct DgoDoc {
    pub verdict: &'static str,
    pub witness: DgoDetailDoc,
}

pub fn verdict_word(gorenstein: bool) -> &'static str {
    if gorenstein {
        "gorenstein"
    } else {
        "not_gorenstein"
    }
}

impl From<&DgoResult> for DgoDoc {
    fn from(d: &DgoResult) -> Self {
        let witness = match &d.detail {
            DgoDetail::Holds => DgoDetailDoc::Holds,
            DgoDetail::AsymmetricHVector { t } => DgoDetailDoc::AsymmetricHVector { t: *t },
            DgoDetail::CayleyBacharachFails {
                dropped,
                degree,
                hf_full,
                hf_subset,
            } => DgoDetailDoc::CayleyBacharachFails {
                dropped: *dropped,
                degree: *degree,
                hf_full: *hf_full,
                hf_subset: *hf_subset,
            },
        };
        DgoDoc {
            verdict: verdict_word(d.verdict),
            witness,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateDoc {
    pub verdict: &'static str,
    pub failure_reason: Option<FailureDoc>,
    pub path: &'static str,
    pub r: usize,
    pub n: usize,
    pub socle_degree: u32,
    pub hf: Vec<usize>,
    pub h_vector: Vec<usize>,
    pub z: Vec<String>,
    pub alpha: Option<Vec<String>>,
    pub kernel: Vec<Vec<String>>,
    pub apolar_form: Option<PolyDoc>,
    pub apolar_hf: Vec<usize>,
    pub dual_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dgo: Option<DgoDoc>,
}

impl CertificateDoc {
    pub fn new(x: &PointSet, c: &GorensteinCertificate, style: Style) -> Self {
        CertificateDoc {
            verdict: c.verdict.word(),
            failure_reason: c.failure_reason.as_ref().map(FailureDoc::from),
            path: match c.path {
                DecisionPath::ApolarForm => "apolar_form",
                DecisionPath::DgoFallback => "dgo_fallback",
            },
            r: x.len(),
            n: x.ambient_dim(),
            socle_degree: c.hilbert.socle_degree,
            hf: c.hilbert.hf.clone(),
            h_vector: c.hilbert.h_vector.clone(),
            z: qvec(&c.z),
            alpha: c.alpha.as_ref().map(|a| qvec(a.entries())),
            kernel: c.kernel.iter().map(|v| qvec(v)).collect(),
            apolar_form: c.apolar_form.as_ref().map(|f| PolyDoc::new(&f.form, style)),
            apolar_hf: c.apolar_hf.clone(),
            dual_dim: c.dual_dim,
            dgo: c.dgo.as_ref().map(DgoDoc::from),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeDoc {
    pub degree: u32,
    pub image_rank: usize,
    pub target_rank: usize,
    pub joint_rank: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct StepDoc {
    pub t: usize,
    pub relation: &'static str,
    pub degrees: Vec<DegreeDoc>,
}

pub fn relation_word(r: SpanRelation) -> &'static str {
    match r {
        SpanRelation::Equal => "equal",
        SpanRelation::StrictlyContains => "strictly_contains",
        SpanRelation::NotContaining => "not_containing",
    }
}

impl From<&StepComparison> for StepDoc {
    fn from(s: &StepComparison) -> Self {
        StepDoc {
            t: s.t,
            relation: relation_word(s.relation),
            degrees: s
                .degrees
                .iter()
                .map(|d: &DegreeComparison| DegreeDoc {
                    degree: d.degree,
                    image_rank: d.image_rank,
                    target_rank: d.target_rank,
                    joint_rank: d.joint_rank,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "code", rename_all = "snake_case")]
pub enum ObstructionDoc {
    DegreeMismatch { form_degree: u32, socle_degree: u32 },
    LinearSystemInfeasible,
    ForcedZeroCoefficient { positions: Vec<usize> },
}

impl From<&Obstruction> for ObstructionDoc {
    fn from(o: &Obstruction) -> Self {
        match o {
            Obstruction::DegreeMismatch {
                form_degree,
                socle_degree,
            } => ObstructionDoc::DegreeMismatch {
                form_degree: *form_degree,
                socle_degree: *socle_degree,
            },
            Obstruction::LinearSystemInfeasible => ObstructionDoc::LinearSystemInfeasible,
            Obstruction::ForcedZeroCoefficient { positions } => {
                ObstructionDoc::ForcedZeroCoefficient {
                    positions: positions.clone(),
                }
            }
        }
    }
}

/// Serializes a document; `pretty` indents it.
pub fn render<T: Serialize>(doc: &T, style: Style) -> String {
    let out = if style.pretty {
        serde_json::to_string_pretty(doc)
    } else {
        serde_json::to_string(doc)
    };
    out.expect("output documents contain only strings, integers and arrays")
}
