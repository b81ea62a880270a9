//! Finite point sets in projective space and their Hilbert functions.
//!
//! Points are kept exactly as given; nothing is rescaled so that a chosen
//! coordinate equals 1. Wherever a normalization would be needed, the
//! computation divides by `z(P_i)` for a regular linear form `z` instead,
//! which also covers points on the hyperplane `x_n = 0`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{
    count_monomials, dot, power_of_linear, proportional, MonomialBasis, Poly, QMatrix, Rational,
    Ring,
};

#[derive(Debug, Clone)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPoint { index: 0 });
        }
        Ok(Point { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        Point::new(
            coords
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Number of homogeneous coordinates, `n + 1`.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Value of the linear form with coefficient vector `z` at this point.
    pub fn eval_linear(&self, z: &[Rational]) -> Rational {
        dot(z, &self.coords)
    }

    pub fn scaled(&self, c: &Rational) -> Point {
        assert!(!c.is_zero());
        Point {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn dual_form(&self) -> DualLinearForm {
        DualLinearForm {
            form: Poly::linear(Ring::Dual, &self.coords),
        }
    }
}

/// Projective equality: the coordinate vectors are proportional.
impl PartialEq for Point {
    fn eq(&self, other: &Self) -> bool {
        proportional(&self.coords, &other.coords)
    }
}

impl Eq for Point {}

/// `L = a_0 y_0 + … + a_n y_n` for the point `(a_0 : … : a_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualLinearForm {
    form: Poly,
}

impl DualLinearForm {
    pub fn form(&self) -> &Poly {
        &self.form
    }

    pub fn into_form(self) -> Poly {
        self.form
    }
}

/// Errors only for the zero vector.
pub fn dual_form(coords: &[Rational]) -> Result<DualLinearForm> {
    Ok(Point::new(coords.to_vec())?.dual_form())
}

/// A nonempty list of pairwise projectively distinct points in `P^n`.
#[derive(Debug, Clone)]
pub struct PointSet {
    points: Vec<Point>,
    ambient_dim: usize,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub point_set: PointSet,
    /// Rank of the coordinate matrix, `HF(1)`.
    pub linear_span: usize,
    pub degenerate: bool,
    pub warnings: Vec<String>,
}

/// Checks a raw list of coordinate vectors: equal lengths (at least 2), no
/// zero vectors, no two proportional. A configuration lying in a hyperplane is
/// accepted with a warning.
pub fn validate(raw: Vec<Vec<Rational>>) -> Result<ValidationReport> {
    if raw.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let len = raw[0].len();
    if len < 2 {
        return Err(Error::InvalidArgument(
            "points need at least two homogeneous coordinates".into(),
        ));
    }
    let mut points = Vec::with_capacity(raw.len());
    for (index, coords) in raw.into_iter().enumerate() {
        if coords.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: coords.len(),
            });
        }
        let p = Point::new(coords).map_err(|_| Error::ZeroPoint { index })?;
        if let Some(first) = points.iter().position(|q: &Point| *q == p) {
            return Err(Error::DuplicatePoints {
                first,
                second: index,
            });
        }
        points.push(p);
    }
    let point_set = PointSet {
        points,
        ambient_dim: len - 1,
    };
    let linear_span = hilbert_function(&point_set, 1);
    let degenerate = linear_span < len;
    let warnings = if degenerate {
        vec![format!(
            "points span only a P^{} inside P^{}",
            linear_span - 1,
            len - 1
        )]
    } else {
        Vec::new()
    };
    Ok(ValidationReport {
        point_set,
        linear_span,
        degenerate,
        warnings,
    })
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        Ok(validate(points.into_iter().map(|p| p.coords).collect())?.point_set)
    }

    pub fn from_i64(points: &[Vec<i64>]) -> Result<Self> {
        Ok(validate(
            points
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|&c| Rational::from_integer(c.into()))
                        .collect()
                })
                .collect(),
        )?
        .point_set)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `n` for points in `P^n`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn nvars(&self) -> usize {
        self.ambient_dim + 1
    }

    pub fn dual_forms(&self) -> Vec<DualLinearForm> {
        self.points.iter().map(Point::dual_form).collect()
    }

    /// The set with point `index` removed, or `None` if that would empty it.
    pub fn without(&self, index: usize) -> Option<PointSet> {
        if self.points.len() <= 1 {
            return None;
        }
        let mut points = self.points.clone();
        points.remove(index);
        Some(PointSet {
            points,
            ambient_dim: self.ambient_dim,
        })
    }

    /// Appends points, rejecting duplicates against the whole set.
    pub fn extended(&self, extra: Vec<Point>) -> Result<PointSet> {
        let mut all = self.points.clone();
        all.extend(extra);
        PointSet::new(all)
    }

    /// Applies `P ↦ A·P` to every point. `A` must be invertible for the result
    /// to stay a valid point set.
    pub fn transformed(&self, a: &QMatrix) -> Result<PointSet> {
        if a.cols() != self.nvars() || a.rows() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: a.cols(),
            });
        }
        PointSet::new(
            self.points
                .iter()
                .map(|p| Point::new(a.mul_vec(&p.coords)))
                .collect::<Result<_>>()?,
        )
    }

    pub fn permuted(&self, order: &[usize]) -> PointSet {
        PointSet {
            points: order.iter().map(|&i| self.points[i].clone()).collect(),
            ambient_dim: self.ambient_dim,
        }
    }
}

/// `r × C(n+j, n)` matrix whose row `i` holds the coefficients of `L_i^j` over
/// the degree-`j` monomial basis.
pub fn power_matrix(x: &PointSet, j: u32) -> QMatrix {
    let basis = MonomialBasis::new(x.nvars(), j);
    power_matrix_in(x, &basis)
}

pub(crate) fn power_matrix_in(x: &PointSet, basis: &MonomialBasis) -> QMatrix {
    QMatrix::from_rows(
        x.points
            .iter()
            .map(|p| {
                power_of_linear(&p.coords, basis.degree())
                    .coefficients(basis)
                    .expect("power of a linear form is homogeneous")
            })
            .collect(),
    )
}

/// `HF_X(j) = dim ⟨L_1^j, …, L_r^j⟩`.
pub fn hilbert_function(x: &PointSet, j: u32) -> usize {
    power_matrix(x, j).rank()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// `HF_X(j)` for `j = 0..=s`; the function is constant `r` afterwards.
    pub hf: Vec<usize>,
    /// First differences of `hf`, indexed `0..=s`.
    pub h_vector: Vec<usize>,
    pub socle_degree: u32,
}

impl HilbertData {
    pub fn r(&self) -> usize {
        *self.hf.last().expect("hf is never empty")
    }

    pub fn hf_at(&self, j: u32) -> usize {
        self.hf.get(j as usize).copied().unwrap_or_else(|| self.r())
    }

    pub fn is_symmetric(&self) -> bool {
        let h = &self.h_vector;
        h.iter().eq(h.iter().rev())
    }
}

/// Hilbert function up to the socle degree `s`, the least `j` with
/// `HF_X(j) = r`.
pub fn hilbert_data(x: &PointSet) -> HilbertData {
    let r = x.len();
    let mut hf = Vec::new();
    // Distinct points impose independent conditions by degree r - 1.
    for j in 0..=r as u32 {
        let value = hilbert_function(x, j);
        hf.push(value);
        if value == r {
            let h_vector = hf
                .iter()
                .enumerate()
                .map(|(k, &v)| if k == 0 { v } else { v - hf[k - 1] })
                .collect();
            return HilbertData {
                hf,
                h_vector,
                socle_degree: j,
            };
        }
    }
    unreachable!("Hilbert function of {r} distinct points never reached {r}")
}

/// Finds a linear form `z` with `z(P_i) ≠ 0` for every point.
///
/// Order of candidates: the hint, then `x_n, x_{n−1}, …, x_0`, then every
/// vector in `{1, …, r+1}^{n+1}` in lexicographic order. A product of `r`
/// nonzero linear forms cannot vanish on that whole grid, so the search
/// always stops.
pub fn choose_regular_form(x: &PointSet, hint: Option<&[Rational]>) -> Result<Vec<Rational>> {
    let nvars = x.nvars();
    let regular = |z: &[Rational]| x.points.iter().all(|p| !p.eval_linear(z).is_zero());
    if let Some(h) = hint {
        if h.len() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: h.len(),
            });
        }
        if regular(h) {
            return Ok(h.to_vec());
        }
    }
    for i in (0..nvars).rev() {
        let mut z = vec![Rational::zero(); nvars];
        z[i] = Rational::from_integer(1.into());
        if regular(&z) {
            return Ok(z);
        }
    }
    let side = x.len() as i64 + 1;
    let mut digits = vec![1i64; nvars];
    loop {
        let z: Vec<Rational> = digits
            .iter()
            .map(|&d| Rational::from_integer(d.into()))
            .collect();
        if regular(&z) {
            return Ok(z);
        }
        // odometer increment, last coordinate fastest
        let mut k = nvars;
        loop {
            if k == 0 {
                unreachable!("grid search for a regular form exhausted");
            }
            k -= 1;
            if digits[k] < side {
                digits[k] += 1;
                break;
            }
            digits[k] = 1;
        }
    }
}

/// Index of the first point where `z` vanishes, if any.
pub fn check_regular(x: &PointSet, z: &[Rational]) -> Result<()> {
    if z.len() != x.nvars() {
        return Err(Error::DimensionMismatch {
            expected: x.nvars(),
            found: z.len(),
        });
    }
    match x.points.iter().position(|p| p.eval_linear(z).is_zero()) {
        Some(index) => Err(Error::NotRegular { index }),
        None => Ok(()),
    }
}

/// Size of the degree-`j` monomial basis in `n + 1` variables.
pub fn basis_size(n: usize, j: u32) -> usize {
    count_monomials(n + 1, j)
}
