//! Hilbert-function criterion for Gorenstein point sets: the h-vector is
//! symmetric and every subset of `r − 1` points has the same Hilbert function
//! as the whole set below the socle degree (Cayley–Bacharach). Used as an
//! oracle independent of the apolar-form machinery.

use rayon::prelude::*;

use crate::pointset::{hilbert_data, hilbert_function, PointSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DgoDetail {
    Holds,
    /// `h_t ≠ h_{s−t}` for this `t` (the first one found).
    AsymmetricHVector {
        t: usize,
    },
    /// Dropping point `dropped` lowers the Hilbert function in `degree`.
    CayleyBacharachFails {
        dropped: usize,
        degree: u32,
        hf_full: usize,
        hf_subset: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DgoResult {
    pub verdict: bool,
    pub detail: DgoDetail,
}

pub fn dgo_test(x: &PointSet) -> DgoResult {
    let h = hilbert_data(x);
    let s = h.socle_degree as usize;
    if let Some(t) = (0..=s).find(|&t| h.h_vector[t] != h.h_vector[s - t]) {
        return DgoResult {
            verdict: false,
            detail: DgoDetail::AsymmetricHVector { t },
        };
    }
    let failures: Vec<Option<DgoDetail>> = (0..x.len())
        .into_par_iter()
        .map(|i| {
            let y = x.without(i)?;
            (0..h.socle_degree).find_map(|t| {
                let hf_subset = hilbert_function(&y, t);
                let hf_full = h.hf_at(t);
                (hf_subset != hf_full).then_some(DgoDetail::CayleyBacharachFails {
                    dropped: i,
                    degree: t,
                    hf_full,
                    hf_subset,
                })
            })
        })
        .collect();
    match failures.into_iter().flatten().next() {
        Some(detail) => DgoResult {
            verdict: false,
            detail,
        },
        None => DgoResult {
            verdict: true,
            detail: DgoDetail::Holds,
        },
    }
}
