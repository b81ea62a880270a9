//! Exponent vectors and graded monomial bases.
//!
//! Monomials are ordered by total degree (higher first) and then
//! lexicographically with `x_0 > x_1 > … > x_n`. For degree 2 in four
//! variables this gives `x0², x0x1, x0x2, x0x3, x1², x1x2, x1x3, x2², x2x3, x3²`.
//! Every matrix built over a monomial basis and every serialized polynomial
//! uses this order.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExpVec(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        ExpVec(vec![0; nvars])
    }

    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        ExpVec(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other`, or `None` when some exponent would go negative.
    pub fn checked_sub(&self, other: &ExpVec) -> Option<ExpVec> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExpVec)
    }

    /// `β!/(β−α)!` taken componentwise, for `α = sub ≤ β = self`.
    pub fn falling_factorial(&self, sub: &ExpVec) -> BigInt {
        let mut acc = BigInt::one();
        for (&b, &a) in self.0.iter().zip(&sub.0) {
            for k in (b - a + 1)..=b {
                acc *= k;
            }
        }
        acc
    }

    /// Multinomial coefficient `|e|! / Π e_i!`.
    pub fn multinomial(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut total = 0u32;
        for &e in &self.0 {
            for k in 1..=e {
                total += 1;
                acc = acc * total / k;
            }
        }
        acc
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// monomial order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<ExpVec> {
    fn fill(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExpVec>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(ExpVec(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            fill(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(ExpVec(Vec::new()));
        }
        return out;
    }
    fill(nvars, degree, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// Number of monomials of degree `degree` in `nvars` variables.
pub fn count_monomials(nvars: usize, degree: u32) -> usize {
    if nvars == 0 {
        return usize::from(degree == 0);
    }
    binomial(nvars as u64 - 1 + degree as u64, degree as u64) as usize
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// A degree-homogeneous monomial basis with reverse lookup.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    degree: u32,
    monomials: Vec<ExpVec>,
    index: HashMap<ExpVec, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let monomials = monomials_of_degree(nvars, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        MonomialBasis {
            degree,
            monomials,
            index,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[ExpVec] {
        &self.monomials
    }

    pub fn position(&self, e: &ExpVec) -> Option<usize> {
        self.index.get(e).copied()
    }
}
