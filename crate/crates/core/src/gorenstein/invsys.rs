//! Generators `F_t` of the inverse system of a point set and the
//! G-admissibility check on them.
//!
//! With `α` a relation among the `L_i^{s−1}` and `z` regular on the points,
//!
//! ```text
//! F_t = 1/(t+s−1)! · Σ α_i / z(P_i)^t · L_i^{t+s−1},   t ≥ 1
//! ```
//!
//! satisfies `z ∘ F_t = F_{t−1}` and `z ∘ F_1 = 0`. The family is G-admissible
//! when additionally `Ann(F_t) ∘ F_{t+1} = ⟨F_1⟩` for every `t`; the chain of
//! these modules is increasing and stabilizes by `t = s`, so only `t = s` is
//! checked.

use super::alpha::AlphaVector;
use super::apolar::{ann_graded_vectors, catalecticant, weighted_power_sum};
use crate::error::{Error, Result};
use crate::exactalg::{contract, factorial, rank_of, Poly, QMatrix, Rational, Ring};
use crate::pointset::{hilbert_data, PointSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSystemGens {
    /// `gens[t − 1] = F_t` for `t = 1..=tmax`.
    pub gens: Vec<Poly>,
    pub z: Vec<Rational>,
    pub alpha: AlphaVector,
    pub socle_degree: u32,
}

impl InverseSystemGens {
    /// `F_t`, 1-based.
    pub fn get(&self, t: usize) -> Option<&Poly> {
        t.checked_sub(1).and_then(|i| self.gens.get(i))
    }

    pub fn tmax(&self) -> usize {
        self.gens.len()
    }

    fn z_operator(&self) -> Poly {
        Poly::linear(Ring::Operator, &self.z)
    }

    /// First `t` where the contraction ladder breaks, if any.
    pub fn ladder_violation(&self) -> Result<Option<usize>> {
        let z = self.z_operator();
        for (i, f) in self.gens.iter().enumerate() {
            let lowered = contract(&z, f)?;
            let ok = match i {
                0 => lowered.is_zero(),
                _ => lowered == self.gens[i - 1],
            };
            if !ok {
                return Ok(Some(i + 1));
            }
        }
        Ok(None)
    }
}

pub fn inverse_system_generators(
    x: &PointSet,
    alpha: &AlphaVector,
    z: &[Rational],
    tmax: usize,
) -> Result<InverseSystemGens> {
    if tmax == 0 {
        return Err(Error::InvalidArgument("tmax must be at least 1".into()));
    }
    let s = hilbert_data(x).socle_degree;
    let mut gens = Vec::with_capacity(tmax);
    for t in 1..=tmax as u32 {
        let degree = t + s - 1;
        let sum = weighted_power_sum(x, alpha, z, degree, t)?;
        let norm = Rational::from_integer(factorial(degree)).recip();
        gens.push(sum.scale(&norm));
    }
    let out = InverseSystemGens {
        gens,
        z: z.to_vec(),
        alpha: alpha.clone(),
        socle_degree: s,
    };
    if let Some(t) = out.ladder_violation()? {
        return Err(Error::InvalidArgument(format!(
            "contraction ladder fails at t = {t}; alpha is not a relation among the (s-1)-th powers"
        )));
    }
    Ok(out)
}

/// Ranks in one output degree `j` of the comparison
/// `Ann(F_t) ∘ F_{t+1}` versus `⟨F_1⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeComparison {
    pub degree: u32,
    pub image_rank: usize,
    pub target_rank: usize,
    pub joint_rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanRelation {
    Equal,
    /// `Ann(F_t) ∘ F_{t+1} ⊋ ⟨F_1⟩`.
    StrictlyContains,
    /// `⟨F_1⟩` is not inside `Ann(F_t) ∘ F_{t+1}`; impossible when the
    /// ladder holds.
    NotContaining,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepComparison {
    pub t: usize,
    pub degrees: Vec<DegreeComparison>,
    pub relation: SpanRelation,
}

/// Compares `Ann(F_t) ∘ F_{t+1}` with `⟨F_1⟩` degree by degree. An element of
/// `Ann(F_t)` of degree `d` sends `F_{t+1}` to degree `t + s − d`, so the
/// output degrees are `0..t+s`.
pub fn compare_step(gens: &InverseSystemGens, t: usize) -> Result<StepComparison> {
    let (Some(ft), Some(fnext), Some(f1)) = (gens.get(t), gens.get(t + 1), gens.get(1)) else {
        return Err(Error::InvalidArgument(format!(
            "need F_1..F_{} but only {} generators were built",
            t + 1,
            gens.tmax()
        )));
    };
    let top = fnext
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidArgument("F_{t+1} is zero".into()))?;
    let f1_degree = f1.homogeneous_degree().unwrap_or(0);
    let mut degrees = Vec::new();
    for j in 0..top {
        let d = top - j;
        let ann = ann_graded_vectors(ft, d)?;
        let image: Vec<Vec<Rational>> = if ann.is_empty() {
            Vec::new()
        } else {
            QMatrix::from_rows(ann)
                .mul(&catalecticant(fnext, d)?)
                .row_vecs()
        };
        let target: Vec<Vec<Rational>> = if j <= f1_degree && !f1.is_zero() {
            catalecticant(f1, f1_degree - j)?.row_vecs()
        } else {
            Vec::new()
        };
        let image_rank = rank_of(&image);
        let target_rank = rank_of(&target);
        let joint: Vec<Vec<Rational>> = image.into_iter().chain(target).collect();
        degrees.push(DegreeComparison {
            degree: j,
            image_rank,
            target_rank,
            joint_rank: rank_of(&joint),
        });
    }
    let contains = degrees.iter().all(|c| c.joint_rank == c.image_rank);
    let equal = contains && degrees.iter().all(|c| c.image_rank == c.target_rank);
    let relation = match (contains, equal) {
        (_, true) => SpanRelation::Equal,
        (true, false) => SpanRelation::StrictlyContains,
        (false, _) => SpanRelation::NotContaining,
    };
    Ok(StepComparison {
        t,
        degrees,
        relation,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GAdmissibility {
    pub verdict: bool,
    /// `None` when `z ∘ F_1 = 0` and `z ∘ F_t = F_{t−1}` all hold.
    pub ladder_violation: Option<usize>,
    pub step: StepComparison,
    pub detail: String,
}

/// Checks both G-admissibility conditions on `F_1..F_tmax`, the second one at
/// `t = s` only. Needs `tmax ≥ s + 1`.
pub fn verify_g_admissible(x: &PointSet, gens: &InverseSystemGens) -> Result<GAdmissibility> {
    let s = hilbert_data(x).socle_degree as usize;
    if s != gens.socle_degree as usize {
        return Err(Error::InvalidArgument(format!(
            "generators were built for socle degree {}, point set has {s}",
            gens.socle_degree
        )));
    }
    if s == 0 {
        return Err(Error::InvalidArgument(
            "G-admissibility check needs socle degree at least 1".into(),
        ));
    }
    if gens.tmax() < s + 1 {
        return Err(Error::InvalidArgument(format!(
            "tmax must be at least s + 1 = {}, got {}",
            s + 1,
            gens.tmax()
        )));
    }
    let ladder_violation = gens.ladder_violation()?;
    let step = compare_step(gens, s)?;
    let verdict = ladder_violation.is_none() && step.relation == SpanRelation::Equal;
    let detail = match (ladder_violation, step.relation) {
        (Some(t), _) => format!("contraction ladder fails at t={t}"),
        (None, SpanRelation::Equal) => format!("Ann(F_{s})∘F_{} = ⟨F_1⟩", s + 1),
        (None, SpanRelation::StrictlyContains) => {
            format!("at t={s}, Ann(F_{s})∘F_{} strictly contains ⟨F_1⟩", s + 1)
        }
        (None, SpanRelation::NotContaining) => {
            format!("at t={s}, Ann(F_{s})∘F_{} does not contain ⟨F_1⟩", s + 1)
        }
    };
    Ok(GAdmissibility {
        verdict,
        ladder_violation,
        step,
        detail,
    })
}
