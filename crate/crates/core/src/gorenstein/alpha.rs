use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{primitive, proportional, Rational};
use crate::pointset::{hilbert_data, power_matrix, PointSet};

/// Coefficients `α_1, …, α_r` of a linear relation among the powers
/// `L_i^{s−1}`. Only the ray matters; [`AlphaVector::normalized`] picks the
/// primitive integer representative with positive first nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaVector {
    entries: Vec<Rational>,
}

impl AlphaVector {
    /// Keeps the given scale.
    pub fn exact(entries: Vec<Rational>) -> Result<Self> {
        if entries.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("alpha vector is zero".into()));
        }
        Ok(AlphaVector { entries })
    }

    pub fn normalized(entries: &[Rational]) -> Result<Self> {
        AlphaVector::exact(primitive(entries))
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn normalize(&self) -> AlphaVector {
        AlphaVector {
            entries: primitive(&self.entries),
        }
    }

    pub fn scaled(&self, c: &Rational) -> Result<AlphaVector> {
        AlphaVector::exact(self.entries.iter().map(|a| a * c).collect())
    }

    pub fn eq_up_to_scalar(&self, other: &[Rational]) -> bool {
        proportional(&self.entries, other)
    }

    pub fn zero_positions(&self) -> Vec<usize> {
        zero_positions(&self.entries)
    }
}

fn zero_positions(v: &[Rational]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, a)| a.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// Why the apolar-form test rejected a point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureReason {
    /// The relations among `L_i^{s−1}` are not a single line.
    KernelDimensionNotOne { dim: usize },
    /// The unique relation leaves out some points (0-based indices).
    AlphaHasZeroEntry { zero_positions: Vec<usize> },
    /// `dim ⟨F⟩ < r`.
    DualDimensionTooSmall { found: usize, required: usize },
}

impl FailureReason {
    pub fn code(&self) -> &'static str {
        match self {
            FailureReason::KernelDimensionNotOne { .. } => "kernel_dimension_not_one",
            FailureReason::AlphaHasZeroEntry { .. } => "alpha_has_zero_entry",
            FailureReason::DualDimensionTooSmall { .. } => "dual_dimension_too_small",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaOutcome {
    Unique(AlphaVector),
    Failed {
        reason: FailureReason,
        /// Primitive integer basis of the relation space.
        kernel: Vec<Vec<Rational>>,
    },
}

impl AlphaOutcome {
    pub fn alpha(&self) -> Option<&AlphaVector> {
        match self {
            AlphaOutcome::Unique(a) => Some(a),
            AlphaOutcome::Failed { .. } => None,
        }
    }
}

/// Relations `Σ α_i L_i^{s−1} = 0`, where `s` is the socle degree of `x`.
/// Succeeds iff the relation space is a line spanned by a vector with no zero
/// entry. Requires `s ≥ 2`.
pub fn alpha_kernel(x: &PointSet) -> Result<AlphaOutcome> {
    let s = hilbert_data(x).socle_degree;
    if s < 2 {
        return Err(Error::InvalidArgument(format!(
            "alpha kernel needs socle degree at least 2, found {s}"
        )));
    }
    Ok(alpha_kernel_at(x, s - 1))
}

/// Same as [`alpha_kernel`] with the power `degree = s − 1` supplied.
pub fn alpha_kernel_at(x: &PointSet, degree: u32) -> AlphaOutcome {
    let kernel = power_matrix(x, degree).left_kernel();
    if kernel.len() != 1 {
        return AlphaOutcome::Failed {
            reason: FailureReason::KernelDimensionNotOne { dim: kernel.len() },
            kernel,
        };
    }
    let zeros = zero_positions(&kernel[0]);
    if !zeros.is_empty() {
        return AlphaOutcome::Failed {
            reason: FailureReason::AlphaHasZeroEntry {
                zero_positions: zeros,
            },
            kernel,
        };
    }
    AlphaOutcome::Unique(AlphaVector::normalized(&kernel[0]).expect("kernel vector is nonzero"))
}
