use num_traits::{One, Zero};

use super::alpha::AlphaVector;
use crate::error::{Error, Result};
use crate::exactalg::{
    contract, monomials_of_degree, power_of_linear, ExpVec, MonomialBasis, Poly, QMatrix, Rational,
    Ring,
};
use crate::pointset::{check_regular, hilbert_data, PointSet};

/// `F = Σ α_i / z(P_i) · L_i^s` together with the data that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApolarForm {
    pub form: Poly,
    pub z: Vec<Rational>,
    pub alpha: AlphaVector,
    pub degree: u32,
}

/// Builds the apolar form of degree `s` (the socle degree of `x`). Fails when
/// `z` vanishes at a point or when `α` is not a relation among the `L_i^{s−1}`
/// (then `z ∘ F ≠ 0`).
pub fn apolar_form(x: &PointSet, alpha: &AlphaVector, z: &[Rational]) -> Result<ApolarForm> {
    let s = hilbert_data(x).socle_degree;
    apolar_form_of_degree(x, alpha, z, s)
}

pub(crate) fn apolar_form_of_degree(
    x: &PointSet,
    alpha: &AlphaVector,
    z: &[Rational],
    s: u32,
) -> Result<ApolarForm> {
    let form = weighted_power_sum(x, alpha, z, s, 1)?;
    let zop = Poly::linear(Ring::Operator, z);
    if !contract(&zop, &form)?.is_zero() {
        return Err(Error::InvalidArgument(
            "alpha is not a relation among the (s-1)-th powers: z applied to F is nonzero".into(),
        ));
    }
    Ok(ApolarForm {
        form,
        z: z.to_vec(),
        alpha: alpha.clone(),
        degree: s,
    })
}

/// `Σ α_i / z(P_i)^t · L_i^degree`.
pub(crate) fn weighted_power_sum(
    x: &PointSet,
    alpha: &AlphaVector,
    z: &[Rational],
    degree: u32,
    t: u32,
) -> Result<Poly> {
    if alpha.len() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            found: alpha.len(),
        });
    }
    check_regular(x, z)?;
    let mut acc = Poly::zero(Ring::Dual, x.nvars());
    for (p, a) in x.points().iter().zip(alpha.entries()) {
        if a.is_zero() {
            continue;
        }
        let weight = a / num_traits::pow(p.eval_linear(z), t as usize);
        acc = &acc + &power_of_linear(p.coords(), degree).scale(&weight);
    }
    Ok(acc)
}

/// Length of the apolar algebra `R/Ann(F)` and its Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualDimension {
    pub dim: usize,
    /// `apolar_hf[j] = dim ⟨F⟩_j` for `j = 0..=deg F`; empty for `F = 0`.
    pub apolar_hf: Vec<usize>,
}

fn homogeneous_dual(f: &Poly) -> Result<u32> {
    if f.ring() != Ring::Dual {
        return Err(Error::RingMismatch(
            "expected a polynomial in the dual ring",
        ));
    }
    f.homogeneous_degree()
        .ok_or_else(|| Error::InvalidArgument("form must be homogeneous and nonzero".into()))
}

/// Catalecticant of `F` in operator degree `d`: one row per degree-`d`
/// monomial `x^γ` (in monomial order), holding the coefficients of `x^γ ∘ F`
/// over the degree-`(deg F − d)` basis.
pub fn catalecticant(f: &Poly, d: u32) -> Result<QMatrix> {
    let s = homogeneous_dual(f)?;
    let nvars = f.nvars();
    let row_monos = monomials_of_degree(nvars, d);
    if d > s {
        return Ok(QMatrix::zeros(row_monos.len(), 0));
    }
    let target = MonomialBasis::new(nvars, s - d);
    let mut m = QMatrix::zeros(row_monos.len(), target.len());
    for (i, gamma) in row_monos.iter().enumerate() {
        for (beta, c) in f.terms() {
            if let Some(rest) = beta.checked_sub(gamma) {
                let j = target.position(&rest).expect("same degree");
                let v = c * Rational::from_integer(beta.falling_factorial(gamma));
                m.set(i, j, v);
            }
        }
    }
    Ok(m)
}

/// `apolar_hf[j]` is the rank of the catalecticant in operator degree `s − j`;
/// the total is `dim_k ⟨F⟩`.
pub fn dual_module_dimension(f: &Poly) -> Result<DualDimension> {
    if f.is_zero() {
        return Ok(DualDimension {
            dim: 0,
            apolar_hf: Vec::new(),
        });
    }
    let s = homogeneous_dual(f)?;
    let apolar_hf: Vec<usize> = (0..=s)
        .map(|j| catalecticant(f, s - j).map(|m| m.rank()))
        .collect::<Result<_>>()?;
    Ok(DualDimension {
        dim: apolar_hf.iter().sum(),
        apolar_hf,
    })
}

/// Basis of the degree-`d` piece of `Ann(F)` as operator polynomials. In
/// degrees above `deg F` this is every monomial.
pub fn ann_graded(f: &Poly, d: u32) -> Result<Vec<Poly>> {
    let s = homogeneous_dual(f)?;
    let nvars = f.nvars();
    let monos = monomials_of_degree(nvars, d);
    if d > s {
        return Ok(monos
            .into_iter()
            .map(|e| Poly::monomial(Ring::Operator, e, Rational::one()))
            .collect());
    }
    let cat = catalecticant(f, d)?;
    Ok(cat
        .left_kernel()
        .into_iter()
        .map(|w| operator_from(&monos, &w))
        .collect())
}

/// Same as [`ann_graded`] but as coefficient vectors over the degree-`d`
/// monomial basis.
pub(crate) fn ann_graded_vectors(f: &Poly, d: u32) -> Result<Vec<Vec<Rational>>> {
    let s = homogeneous_dual(f)?;
    let size = monomials_of_degree(f.nvars(), d).len();
    if d > s {
        return Ok((0..size)
            .map(|i| {
                let mut v = vec![Rational::zero(); size];
                v[i] = Rational::one();
                v
            })
            .collect());
    }
    Ok(catalecticant(f, d)?.left_kernel())
}

fn operator_from(monos: &[ExpVec], w: &[Rational]) -> Poly {
    let nvars = monos.first().map_or(0, ExpVec::nvars);
    Poly::from_terms(
        Ring::Operator,
        nvars,
        monos.iter().cloned().zip(w.iter().cloned()),
    )
}
