//! Artinian reductions of point sets and a counting obstruction to lifting.
//!
//! For a Gorenstein set `X` with socle degree `s` and a linear form `z`
//! regular on it, the Artinian reduction of `X` modulo `z` has dual generator
//! `F = Σ α_i / z(P_i) · L_i^s` with `Σ α_i L_i^{s−1} = 0`.
//! [`is_artinian_reduction`] decides whether a given `F` has that shape.
//!
//! The second half counts: a generic form of degree `s` in `n` variables needs
//! many powers of linear forms, more than the length `ρ(s)` of its apolar
//! algebra once `n` is large, and then it cannot come from `ρ(s)` points.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{power_of_linear, MonomialBasis, Poly, QMatrix, Rational, Ring};
use crate::gorenstein::{is_arithmetically_gorenstein, AlphaVector};
use crate::pointset::{check_regular, hilbert_data, PointSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    DegreeMismatch {
        form_degree: u32,
        socle_degree: u32,
    },
    /// No `α` satisfies both linear conditions.
    LinearSystemInfeasible,
    /// Every solution has `α_i = 0` at these positions.
    ForcedZeroCoefficient {
        positions: Vec<usize>,
    },
}

impl Obstruction {
    pub fn code(&self) -> &'static str {
        match self {
            Obstruction::DegreeMismatch { .. } => "degree_mismatch",
            Obstruction::LinearSystemInfeasible => "linear_system_infeasible",
            Obstruction::ForcedZeroCoefficient { .. } => "forced_zero_coefficient",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionVerdict {
    pub liftable: bool,
    /// Witness at the scale fixed by `F`; no zero entries.
    pub alpha: Option<AlphaVector>,
    pub obstruction: Option<Obstruction>,
    /// Whether `X` itself is Gorenstein, when that was checked. The verdict
    /// only means "Artinian reduction of `X`" when this holds.
    pub points_gorenstein: Option<bool>,
}

impl ReductionVerdict {
    fn blocked(obstruction: Obstruction) -> Self {
        ReductionVerdict {
            liftable: false,
            alpha: None,
            obstruction: Some(obstruction),
            points_gorenstein: None,
        }
    }
}

/// Solves `Σ α_i / z(P_i) · L_i^s = F` together with `Σ α_i L_i^{s−1} = 0`
/// and looks for a solution with no zero entry.
pub fn is_artinian_reduction(f: &Poly, x: &PointSet, z: &[Rational]) -> Result<ReductionVerdict> {
    if f.ring() != Ring::Dual {
        return Err(Error::RingMismatch("expected a form in the dual ring"));
    }
    if f.nvars() != x.nvars() {
        return Err(Error::DimensionMismatch {
            expected: x.nvars(),
            found: f.nvars(),
        });
    }
    let form_degree = f
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidArgument("form must be homogeneous and nonzero".into()))?;
    check_regular(x, z)?;
    let s = hilbert_data(x).socle_degree;
    if form_degree != s {
        return Ok(ReductionVerdict::blocked(Obstruction::DegreeMismatch {
            form_degree,
            socle_degree: s,
        }));
    }

    let r = x.len();
    let top = MonomialBasis::new(x.nvars(), s);
    let mut rows: Vec<Vec<Rational>> = vec![Vec::with_capacity(r); top.len()];
    for p in x.points() {
        let weight = p.eval_linear(z).recip();
        let coeffs = power_of_linear(p.coords(), s).coefficients(&top)?;
        for (row, c) in rows.iter_mut().zip(coeffs) {
            row.push(c * &weight);
        }
    }
    let mut rhs = f.coefficients(&top)?;
    if s >= 1 {
        let below = MonomialBasis::new(x.nvars(), s - 1);
        let mut lower: Vec<Vec<Rational>> = vec![Vec::with_capacity(r); below.len()];
        for p in x.points() {
            let coeffs = power_of_linear(p.coords(), s - 1).coefficients(&below)?;
            for (row, c) in lower.iter_mut().zip(coeffs) {
                row.push(c);
            }
        }
        rhs.extend(std::iter::repeat_n(Rational::zero(), lower.len()));
        rows.extend(lower);
    }

    let Some(solution) = QMatrix::from_rows(rows).solve(&rhs) else {
        return Ok(ReductionVerdict::blocked(
            Obstruction::LinearSystemInfeasible,
        ));
    };
    let forced: Vec<usize> = (0..r)
        .filter(|&i| {
            solution.particular[i].is_zero() && solution.homogeneous.iter().all(|h| h[i].is_zero())
        })
        .collect();
    if !forced.is_empty() {
        return Ok(ReductionVerdict::blocked(
            Obstruction::ForcedZeroCoefficient { positions: forced },
        ));
    }
    let alpha = nowhere_zero_member(&solution.particular, &solution.homogeneous);
    Ok(ReductionVerdict {
        liftable: true,
        alpha: Some(AlphaVector::exact(alpha)?),
        obstruction: None,
        points_gorenstein: None,
    })
}

/// Same as [`is_artinian_reduction`], also recording whether `X` is
/// Gorenstein.
pub fn is_artinian_reduction_checked(
    f: &Poly,
    x: &PointSet,
    z: &[Rational],
) -> Result<ReductionVerdict> {
    let mut verdict = is_artinian_reduction(f, x, z)?;
    verdict.points_gorenstein = Some(
        is_arithmetically_gorenstein(x, Some(z))?
            .verdict
            .is_gorenstein(),
    );
    Ok(verdict)
}

/// `p + Σ_k t^{k+1} h_k` for the least `t = 0, 1, 2, …` with no zero entry.
/// Each entry is a nonzero polynomial in `t`, so only finitely many `t` fail.
fn nowhere_zero_member(p: &[Rational], hs: &[Vec<Rational>]) -> Vec<Rational> {
    let mut t = 0i64;
    loop {
        let tq = Rational::from_integer(t.into());
        let mut v = p.to_vec();
        let mut power = tq.clone();
        for h in hs {
            for (vi, hi) in v.iter_mut().zip(h) {
                *vi += &power * hi;
            }
            power *= &tq;
        }
        if v.iter().all(|a| !a.is_zero()) {
            return v;
        }
        t += 1;
    }
}

fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Least number of `j`-th powers of linear forms summing to a generic form of
/// degree `j` in `n + 1` variables: `⌈C(n+j, j)/(n+1)⌉`, except for
/// `(j, n) = (3, 4), (4, 2), (4, 3), (4, 4)`, where it is one more.
pub fn waring_g(j: u64, n: u64) -> Result<BigUint> {
    if j < 3 {
        return Err(Error::OutOfRange(format!(
            "Waring count needs degree j >= 3, got {j}"
        )));
    }
    if n < 1 {
        return Err(Error::OutOfRange(format!(
            "Waring count needs n >= 1, got {n}"
        )));
    }
    let exception = match (j, n) {
        (3, 4) => Some(8u32),
        (4, 2) => Some(6),
        (4, 3) => Some(10),
        (4, 4) => Some(15),
        _ => None,
    };
    if let Some(g) = exception {
        return Ok(BigUint::from(g));
    }
    let total = big_binomial(n + j, j);
    let parts = BigUint::from(n + 1);
    Ok((total + &parts - BigUint::one()) / parts)
}

/// Length of the apolar algebra of a generic form of degree `s` in `n`
/// variables.
pub fn compressed_length(s: u64, n: u64) -> Result<BigUint> {
    if s < 2 || n < 1 {
        return Err(Error::OutOfRange(format!(
            "compressed length needs s >= 2 and n >= 1, got s = {s}, n = {n}"
        )));
    }
    let j = s / 2;
    Ok(if s % 2 == 1 {
        BigUint::from(2u32) * big_binomial(n + j, j)
    } else {
        BigUint::from(2u32) * big_binomial(n + j - 1, j - 1) + big_binomial(n - 1 + j, j)
    })
}

/// The strict inequality `C(2j+n, 2j+1)/n > ρ(s)` for `s = 2j+1`, or
/// `C(2j+n−1, 2j)/n > ρ(s)` for `s = 2j`, compared exactly.
pub fn nonliftable_test(s: u64, n: u64) -> Result<bool> {
    if s < 3 {
        return Err(Error::OutOfRange(format!(
            "nonliftability test needs s >= 3, got {s}"
        )));
    }
    let rho = compressed_length(s, n)?;
    let j = s / 2;
    let lhs = if s % 2 == 1 {
        big_binomial(2 * j + n, 2 * j + 1)
    } else {
        big_binomial(2 * j + n - 1, 2 * j)
    };
    Ok(lhs > BigUint::from(n) * rho)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaringData {
    pub j: u64,
    pub n: u64,
    /// `waring_g(j, n)`.
    pub g: BigUint,
    /// `compressed_length(j, n)`.
    pub rho: BigUint,
    /// `nonliftable_test(j, n)`.
    pub nonliftable: bool,
}

pub fn waring_data(s: u64, n: u64) -> Result<WaringData> {
    Ok(WaringData {
        j: s,
        n,
        g: waring_g(s, n)?,
        rho: compressed_length(s, n)?,
        nonliftable: nonliftable_test(s, n)?,
    })
}

/// Upper end of the `n₀` scan: `j² + 4j + 5` with `j = ⌊s/2⌋`, plus 16.
pub fn n0_scan_cap(s: u64) -> u64 {
    let j = s / 2;
    j * j + 4 * j + 5 + 16
}

/// Least `n` for which [`nonliftable_test`] holds, scanning up from 1. Also
/// checks that the test keeps holding up to the cap.
pub fn n0(s: u64) -> Result<u64> {
    let cap = n0_scan_cap(s);
    let mut first = None;
    for n in 1..=cap {
        let holds = nonliftable_test(s, n)?;
        match (first, holds) {
            (None, true) => first = Some(n),
            (Some(f), false) => {
                return Err(Error::InvalidArgument(format!(
                    "nonliftability for s = {s} holds at n = {f} but fails again at n = {n}"
                )))
            }
            _ => {}
        }
    }
    first.ok_or_else(|| {
        Error::OutOfRange(format!(
            "no n <= {cap} satisfies the nonliftability bound for s = {s}"
        ))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct N0Row {
    pub s: u64,
    pub n0: u64,
}

pub fn n0_table(s_values: &[u64]) -> Result<Vec<N0Row>> {
    s_values
        .par_iter()
        .map(|&s| n0(s).map(|n0| N0Row { s, n0 }))
        .collect()
}
