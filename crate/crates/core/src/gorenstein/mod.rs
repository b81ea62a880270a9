//! Deciding whether a point set is arithmetically Gorenstein.
//!
//! With `s` the socle degree and `z` a linear form not vanishing at any point,
//! `X` is Gorenstein iff there are `α_1..α_r` with
//!
//! * `Σ α_i L_i^{s−1} = 0`, and
//! * `F = Σ α_i / z(P_i) · L_i^s` has `dim_k ⟨F⟩ ≥ r`.
//!
//! The relation is then unique up to scale and has no zero entry, so the test
//! computes the relation space, insists on a single line with full support,
//! builds `F` and measures its apolar algebra. Failing each of the three steps
//! gives a distinct [`FailureReason`].

mod alpha;
mod apolar;
mod dgo;
mod invsys;

pub use alpha::{alpha_kernel, alpha_kernel_at, AlphaOutcome, AlphaVector, FailureReason};
pub use apolar::{
    ann_graded, apolar_form, catalecticant, dual_module_dimension, ApolarForm, DualDimension,
};
pub use dgo::{dgo_test, DgoDetail, DgoResult};
pub use invsys::{
    compare_step, inverse_system_generators, verify_g_admissible, DegreeComparison, GAdmissibility,
    InverseSystemGens, SpanRelation, StepComparison,
};

pub(crate) use apolar::apolar_form_of_degree;

use num_traits::One;

use crate::error::Result;
use crate::exactalg::Rational;
use crate::pointset::{choose_regular_form, hilbert_data, HilbertData, PointSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Gorenstein,
    NotGorenstein,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Gorenstein
        } else {
            Verdict::NotGorenstein
        }
    }

    pub fn is_gorenstein(self) -> bool {
        self == Verdict::Gorenstein
    }

    pub fn word(self) -> &'static str {
        match self {
            Verdict::Gorenstein => "gorenstein",
            Verdict::NotGorenstein => "not_gorenstein",
        }
    }
}

/// Which procedure produced the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionPath {
    ApolarForm,
    /// Socle degree 0 or 1: the verdict comes from the Hilbert-function
    /// criterion; the apolar data is still filled in where it exists.
    DgoFallback,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinCertificate {
    pub verdict: Verdict,
    pub failure_reason: Option<FailureReason>,
    pub path: DecisionPath,
    pub alpha: Option<AlphaVector>,
    /// Basis of the relation space among the `L_i^{s−1}`.
    pub kernel: Vec<Vec<Rational>>,
    pub apolar_form: Option<ApolarForm>,
    pub apolar_hf: Vec<usize>,
    pub dual_dim: usize,
    pub hilbert: HilbertData,
    pub z: Vec<Rational>,
    pub dgo: Option<DgoResult>,
}

/// Runs the apolar-form test. Only a malformed `z_hint` is an error; a
/// non-Gorenstein set is reported through the certificate.
pub fn is_arithmetically_gorenstein(
    x: &PointSet,
    z_hint: Option<&[Rational]>,
) -> Result<GorensteinCertificate> {
    let hilbert = hilbert_data(x);
    let z = choose_regular_form(x, z_hint)?;
    let s = hilbert.socle_degree;
    let r = x.len();

    let mut cert = GorensteinCertificate {
        verdict: Verdict::NotGorenstein,
        failure_reason: None,
        path: if s <= 1 {
            DecisionPath::DgoFallback
        } else {
            DecisionPath::ApolarForm
        },
        alpha: None,
        kernel: Vec::new(),
        apolar_form: None,
        apolar_hf: Vec::new(),
        dual_dim: 0,
        hilbert,
        z,
        dgo: None,
    };

    let outcome = if s == 0 {
        // a single point: the only relation is α = (1) on L^{-1}, read as F = 1/z(P)
        AlphaOutcome::Unique(AlphaVector::exact(vec![Rational::one()])?)
    } else {
        alpha_kernel_at(x, s - 1)
    };
    match outcome {
        AlphaOutcome::Failed { reason, kernel } => {
            cert.failure_reason = Some(reason);
            cert.kernel = kernel;
        }
        AlphaOutcome::Unique(alpha) => {
            cert.kernel = vec![alpha.entries().to_vec()];
            let form = apolar_form_of_degree(x, &alpha, &cert.z, s)?;
            let dims = dual_module_dimension(&form.form)?;
            assert!(
                dims.dim <= r,
                "apolar algebra of length {} exceeds {r} points",
                dims.dim
            );
            if dims.dim >= r {
                cert.verdict = Verdict::Gorenstein;
                assert_eq!(
                    dims.apolar_hf, cert.hilbert.h_vector,
                    "apolar Hilbert function differs from the h-vector"
                );
            } else {
                cert.failure_reason = Some(FailureReason::DualDimensionTooSmall {
                    found: dims.dim,
                    required: r,
                });
            }
            cert.alpha = Some(alpha);
            cert.apolar_form = Some(form);
            cert.apolar_hf = dims.apolar_hf;
            cert.dual_dim = dims.dim;
        }
    }

    if cert.path == DecisionPath::DgoFallback {
        let dgo = dgo_test(x);
        assert_eq!(
            dgo.verdict,
            cert.verdict.is_gorenstein(),
            "low socle degree: apolar data disagrees with the Hilbert-function criterion"
        );
        cert.verdict = Verdict::from_bool(dgo.verdict);
        cert.dgo = Some(dgo);
    }
    Ok(cert)
}
