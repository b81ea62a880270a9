//! Sparse multivariate polynomials with rational coefficients.
//!
//! A polynomial carries a [`Ring`] tag. `Operator` polynomials live in
//! `R = k[x_0..x_n]` and act by contraction on `Dual` polynomials in
//! `Γ = k[y_0..y_n]`; `Coordinate` polynomials have the unknown point
//! coordinates of a locus problem as variables. Arithmetic operators panic when
//! the two operands disagree on ring or variable count; that is always a bug in
//! the caller, never a data error.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{monomials_of_degree, ExpVec, MonomialBasis};
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Operator,
    Dual,
    Coordinate,
}

impl Ring {
    fn var_prefix(self) -> &'static str {
        match self {
            Ring::Operator => "x",
            Ring::Dual => "y",
            Ring::Coordinate => "u",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: Ring,
    nvars: usize,
    terms: BTreeMap<ExpVec, Rational>,
}

impl Poly {
    pub fn zero(ring: Ring, nvars: usize) -> Self {
        Poly {
            ring,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: Ring, nvars: usize, c: Rational) -> Self {
        Poly::monomial(ring, ExpVec::zero(nvars), c)
    }

    pub fn monomial(ring: Ring, exp: ExpVec, c: Rational) -> Self {
        let nvars = exp.nvars();
        let mut p = Poly::zero(ring, nvars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn var(ring: Ring, nvars: usize, i: usize) -> Self {
        Poly::monomial(ring, ExpVec::unit(nvars, i), Rational::one())
    }

    /// `Σ coeffs[i] · v_i`.
    pub fn linear(ring: Ring, coeffs: &[Rational]) -> Self {
        let nvars = coeffs.len();
        Poly::from_terms(
            ring,
            nvars,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (ExpVec::unit(nvars, i), c.clone())),
        )
    }

    /// Builds a polynomial, summing repeated monomials and dropping zeros.
    pub fn from_terms(
        ring: Ring,
        nvars: usize,
        terms: impl IntoIterator<Item = (ExpVec, Rational)>,
    ) -> Self {
        let mut p = Poly::zero(ring, nvars);
        for (e, c) in terms {
            assert_eq!(e.nvars(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// Inverse of [`Poly::coefficients`].
    pub fn from_coefficients(ring: Ring, basis: &MonomialBasis, coeffs: &[Rational]) -> Self {
        let nvars = basis.monomials().first().map_or(0, ExpVec::nvars);
        Poly::from_terms(
            ring,
            nvars,
            basis
                .monomials()
                .iter()
                .cloned()
                .zip(coeffs.iter().cloned()),
        )
    }

    fn add_term(&mut self, e: ExpVec, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in monomial order (see [`super::monomial`]).
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &ExpVec) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ExpVec::degree).max()
    }

    /// The common degree of all terms, if there is one. Zero has none.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(ExpVec::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn with_ring(mut self, ring: Ring) -> Self {
        self.ring = ring;
        self
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.ring, self.nvars);
        }
        Poly {
            ring: self.ring,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(self.ring, self.nvars, Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e.exponents()) {
                if k > 0 {
                    term *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Coefficient vector over a homogeneous basis. Terms of other degrees are
    /// an error since they would be silently dropped.
    pub fn coefficients(&self, basis: &MonomialBasis) -> Result<Vec<Rational>> {
        let mut out = vec![Rational::zero(); basis.len()];
        for (e, c) in &self.terms {
            let idx = basis.position(e).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "term of degree {} outside the degree-{} basis",
                    e.degree(),
                    basis.degree()
                ))
            })?;
            out[idx] = c.clone();
        }
        Ok(out)
    }

    /// Divides through by the coefficient of the first term so the leading
    /// coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.terms.values().next() {
            Some(lead) => self.scale(&lead.recip()),
            None => self.clone(),
        }
    }

    fn check_same(&self, other: &Poly) {
        assert_eq!(
            self.ring, other.ring,
            "ring mismatch in polynomial arithmetic"
        );
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
    }
}

/// The apolarity action `op ∘ target`: `x^α ∘ y^β = β!/(β−α)! · y^(β−α)` when
/// `α ≤ β` componentwise and 0 otherwise, extended bilinearly.
pub fn contract(op: &Poly, target: &Poly) -> Result<Poly> {
    if op.ring != Ring::Operator || target.ring != Ring::Dual {
        return Err(Error::RingMismatch(
            "contraction needs an operator polynomial acting on a dual polynomial",
        ));
    }
    if op.nvars != target.nvars {
        return Err(Error::DimensionMismatch {
            expected: target.nvars,
            found: op.nvars,
        });
    }
    let mut out = Poly::zero(Ring::Dual, target.nvars);
    for (a, ca) in &op.terms {
        for (b, cb) in &target.terms {
            if let Some(rest) = b.checked_sub(a) {
                let k = Rational::from_integer(b.falling_factorial(a));
                out.add_term(rest, ca * cb * k);
            }
        }
    }
    Ok(out)
}

/// `(Σ a_i y_i)^t` expanded by the multinomial theorem.
pub fn power_of_linear(coeffs: &[Rational], t: u32) -> Poly {
    let nvars = coeffs.len();
    let nonzero: Vec<usize> = (0..nvars).filter(|&i| !coeffs[i].is_zero()).collect();
    if t == 0 {
        return Poly::constant(Ring::Dual, nvars, Rational::one());
    }
    // Expand over the support only, then scatter back into nvars slots.
    let mut terms = Vec::new();
    for small in monomials_of_degree(nonzero.len(), t) {
        let mut c = Rational::from_integer(small.multinomial());
        let mut full = vec![0u32; nvars];
        for (slot, &k) in nonzero.iter().zip(small.exponents()) {
            full[*slot] = k;
            if k > 0 {
                c *= num_traits::pow(coeffs[*slot].clone(), k as usize);
            }
        }
        terms.push((ExpVec::new(full), c));
    }
    Poly::from_terms(Ring::Dual, nvars, terms)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_same(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_same(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_same(rhs);
        let mut out = Poly::zero(self.ring, self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.add(b), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let prefix = self.ring.var_prefix();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mono: Vec<String> = e
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("{prefix}{i}")
                    } else {
                        format!("{prefix}{i}^{k}")
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), mono.join("*"))?;
            }
        }
        Ok(())
    }
}
