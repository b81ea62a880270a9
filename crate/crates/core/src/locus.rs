//! Configurations whose `(s−1)`-th powers are linearly dependent.
//!
//! For `r` points with dual forms `L_i`, let `M` be the matrix whose column
//! `i` is the coefficient vector of `L_i^{s−1}`. The configurations with
//! `rank M < r` form a closed set cut out by the maximal minors of `M`; a
//! Gorenstein set with socle degree `s` lies on it, and a point of it is
//! Gorenstein once the relation has full support and the apolar form is long
//! enough. With some points fixed and the others symbolic, the minors become
//! polynomial equations in the unknown coordinates.

use std::collections::HashSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{
    monomials_of_degree, poly_matrix_minors, power_of_linear, ExpVec, Poly, PolyMatrix, Rational,
    Ring,
};
use crate::gorenstein::{dgo_test, is_arithmetically_gorenstein, GorensteinCertificate};
use crate::pointset::{hilbert_data, validate, Point, PointSet};

/// Fixed points plus `k` symbolic ones. Unknown point `u` has coordinates
/// `u_{u(n+1)+c}`, `c = 0..=n`, in the coordinate ring.
#[derive(Debug, Clone)]
pub struct LocusProblem {
    fixed: PointSet,
    unknowns: usize,
    target_s: u32,
}

impl LocusProblem {
    pub fn new(fixed: PointSet, unknowns: usize, target_s: u32) -> Result<Self> {
        if unknowns == 0 {
            return Err(Error::InvalidArgument(
                "a locus problem needs at least one unknown point".into(),
            ));
        }
        if target_s < 2 {
            return Err(Error::InvalidArgument(format!(
                "target socle degree must be at least 2, got {target_s}"
            )));
        }
        Ok(LocusProblem {
            fixed,
            unknowns,
            target_s,
        })
    }

    pub fn fixed(&self) -> &PointSet {
        &self.fixed
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn target_s(&self) -> u32 {
        self.target_s
    }

    pub fn target_r(&self) -> usize {
        self.fixed.len() + self.unknowns
    }

    pub fn ambient_dim(&self) -> usize {
        self.fixed.ambient_dim()
    }

    /// Number of coordinate-ring variables, `k(n+1)`.
    pub fn num_unknown_coords(&self) -> usize {
        self.unknowns * self.fixed.nvars()
    }

    /// The `C(s−1+n, n) × r` matrix with fixed columns first.
    pub fn power_matrix(&self) -> PolyMatrix {
        let nvars = self.fixed.nvars();
        let m = self.num_unknown_coords();
        let rows = monomials_of_degree(nvars, self.target_s - 1);
        let constant = |c: Rational| Poly::constant(Ring::Coordinate, m, c);
        let mut columns: Vec<Vec<Poly>> = Vec::with_capacity(self.target_r());
        for p in self.fixed.points() {
            let power = power_of_linear(p.coords(), self.target_s - 1);
            columns.push(rows.iter().map(|e| constant(power.coeff(e))).collect());
        }
        for u in 0..self.unknowns {
            columns.push(
                rows.iter()
                    .map(|beta| symbolic_coefficient(beta, u, m))
                    .collect(),
            );
        }
        let matrix = (0..rows.len())
            .map(|i| columns.iter().map(|col| col[i].clone()).collect())
            .collect();
        PolyMatrix::from_rows(matrix)
    }
}

/// Coefficient of `y^β` in `(Σ_c u_c y_c)^{|β|}`: the multinomial of `β`
/// times `u^β`, placed in the block of unknown `u`.
fn symbolic_coefficient(beta: &ExpVec, u: usize, m: usize) -> Poly {
    let width = beta.nvars();
    let mut exps = vec![0u32; m];
    exps[u * width..(u + 1) * width].copy_from_slice(beta.exponents());
    Poly::monomial(
        Ring::Coordinate,
        ExpVec::new(exps),
        Rational::from_integer(beta.multinomial()),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusEquations {
    /// Nonzero maximal minors, made monic and deduplicated, in enumeration
    /// order.
    pub equations: Vec<Poly>,
    /// Number of `r × r` minors enumerated.
    pub total: usize,
    /// How many of them are identically zero.
    pub zero: usize,
    pub rows: usize,
    pub cols: usize,
    /// Set when the matrix has fewer rows than columns.
    pub note: Option<String>,
}

pub fn minor_equations(problem: &LocusProblem) -> LocusEquations {
    let m = problem.power_matrix();
    let r = problem.target_r();
    if m.rows() < r {
        return LocusEquations {
            equations: Vec::new(),
            total: 0,
            zero: 0,
            rows: m.rows(),
            cols: r,
            note: Some(format!(
                "matrix has {} rows and {r} columns, so its rank is below {r} for every choice of points",
                m.rows()
            )),
        };
    }
    let list = poly_matrix_minors(&m, r);
    let mut seen = HashSet::new();
    let equations = list
        .minors
        .into_iter()
        .map(|p| p.monic())
        .filter(|p| seen.insert(p.clone()))
        .collect();
    LocusEquations {
        equations,
        total: list.total,
        zero: list.zero,
        rows: m.rows(),
        cols: r,
        note: None,
    }
}

/// Concatenated coordinates of the unknown points, in the variable order of
/// [`LocusProblem`].
pub fn unknown_assignment(problem: &LocusProblem, points: &[Point]) -> Result<Vec<Rational>> {
    if points.len() != problem.unknowns {
        return Err(Error::DimensionMismatch {
            expected: problem.unknowns,
            found: points.len(),
        });
    }
    let mut out = Vec::with_capacity(problem.num_unknown_coords());
    for p in points {
        if p.len() != problem.fixed.nvars() {
            return Err(Error::DimensionMismatch {
                expected: problem.fixed.nvars(),
                found: p.len(),
            });
        }
        out.extend_from_slice(p.coords());
    }
    Ok(out)
}

pub fn evaluate_equations(
    equations: &[Poly],
    problem: &LocusProblem,
    points: &[Point],
) -> Result<Vec<Rational>> {
    let values = unknown_assignment(problem, points)?;
    equations.iter().map(|e| e.eval(&values)).collect()
}

/// Degree of `p` in the coordinates of each unknown point, when `p` is
/// homogeneous in each block separately.
pub fn unknown_multidegree(p: &Poly, unknowns: usize, width: usize) -> Option<Vec<u32>> {
    let mut out: Option<Vec<u32>> = None;
    for (e, _) in p.terms() {
        let degs: Vec<u32> = (0..unknowns)
            .map(|u| e.exponents()[u * width..(u + 1) * width].iter().sum())
            .collect();
        match &out {
            None => out = Some(degs),
            Some(d) if *d != degs => return None,
            Some(_) => {}
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// The completed list is not a valid point set (zero or repeated point).
    InvalidPoints(String),
    WrongSocleDegree {
        found: u32,
        target: u32,
    },
    NotGorenstein(String),
}

impl Rejection {
    pub fn code(&self) -> &'static str {
        match self {
            Rejection::InvalidPoints(_) => "invalid_points",
            Rejection::WrongSocleDegree { .. } => "wrong_socle_degree",
            Rejection::NotGorenstein(_) => "not_gorenstein",
        }
    }
}

#[derive(Debug, Clone)]
pub enum CompletionCheck {
    Accepted(Box<(PointSet, GorensteinCertificate)>),
    Rejected(Rejection),
}

/// Tests one candidate completion.
pub fn check_completion(problem: &LocusProblem, points: &[Point]) -> Result<CompletionCheck> {
    unknown_assignment(problem, points)?;
    let raw: Vec<Vec<Rational>> = problem
        .fixed
        .points()
        .iter()
        .chain(points)
        .map(|p| p.coords().to_vec())
        .collect();
    let x = match validate(raw) {
        Ok(report) => report.point_set,
        Err(e) => {
            return Ok(CompletionCheck::Rejected(Rejection::InvalidPoints(
                e.to_string(),
            )))
        }
    };
    let s = hilbert_data(&x).socle_degree;
    if s != problem.target_s {
        return Ok(CompletionCheck::Rejected(Rejection::WrongSocleDegree {
            found: s,
            target: problem.target_s,
        }));
    }
    let cert = is_arithmetically_gorenstein(&x, None)?;
    if cert.verdict.is_gorenstein() {
        Ok(CompletionCheck::Accepted(Box::new((x, cert))))
    } else {
        let why = cert
            .failure_reason
            .as_ref()
            .map_or("unknown", |r| r.code())
            .to_string();
        Ok(CompletionCheck::Rejected(Rejection::NotGorenstein(why)))
    }
}

#[derive(Debug, Clone)]
pub struct Completion {
    pub trial: usize,
    pub points: PointSet,
    pub certificate: GorensteinCertificate,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RejectionTally {
    pub invalid_points: usize,
    pub wrong_socle_degree: usize,
    pub not_gorenstein: usize,
}

#[derive(Debug, Clone)]
pub struct CompletionResult {
    /// Successes in trial order.
    pub found: Vec<Completion>,
    pub trials: usize,
    pub seed: u64,
    pub rejections: RejectionTally,
}

/// Rational in `[−B, B]` with denominator in `[1, B]`.
fn sample_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let num: i64 = rng.gen_range(-bound..=bound);
    let den: i64 = rng.gen_range(1..=bound);
    Rational::new(num.into(), den.into())
}

/// Draws the unknown points of every trial from one seeded stream.
pub fn sample_candidates(
    problem: &LocusProblem,
    trials: usize,
    seed: u64,
    coordinate_range: i64,
) -> Vec<Vec<Vec<Rational>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = problem.fixed.nvars();
    (0..trials)
        .map(|_| {
            (0..problem.unknowns)
                .map(|_| {
                    (0..width)
                        .map(|_| sample_rational(&mut rng, coordinate_range))
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Seeded random search: samples the unknown points, keeps the completions
/// that are Gorenstein with the target socle degree. Accepted completions are
/// re-checked against the Hilbert-function criterion.
pub fn complete_to_gorenstein(
    problem: &LocusProblem,
    trials: usize,
    seed: u64,
    coordinate_range: i64,
) -> Result<CompletionResult> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if coordinate_range < 1 {
        return Err(Error::InvalidArgument(format!(
            "coordinate range must be at least 1, got {coordinate_range}"
        )));
    }
    let candidates = sample_candidates(problem, trials, seed, coordinate_range);
    let outcomes: Vec<Result<CompletionCheck>> = candidates
        .into_par_iter()
        .map(|coords| {
            let mut points = Vec::with_capacity(coords.len());
            for c in coords {
                match Point::new(c) {
                    Ok(p) => points.push(p),
                    Err(e) => {
                        return Ok(CompletionCheck::Rejected(Rejection::InvalidPoints(
                            e.to_string(),
                        )))
                    }
                }
            }
            check_completion(problem, &points)
        })
        .collect();

    let mut result = CompletionResult {
        found: Vec::new(),
        trials,
        seed,
        rejections: RejectionTally::default(),
    };
    for (trial, outcome) in outcomes.into_iter().enumerate() {
        match outcome? {
            CompletionCheck::Accepted(boxed) => {
                let (points, certificate) = *boxed;
                assert!(
                    dgo_test(&points).verdict,
                    "trial {trial}: accepted completion fails the Hilbert-function criterion"
                );
                result.found.push(Completion {
                    trial,
                    points,
                    certificate,
                });
            }
            CompletionCheck::Rejected(r) => match r {
                Rejection::InvalidPoints(_) => result.rejections.invalid_points += 1,
                Rejection::WrongSocleDegree { .. } => result.rejections.wrong_socle_degree += 1,
                Rejection::NotGorenstein(_) => result.rejections.not_gorenstein += 1,
            },
        }
    }
    Ok(result)
}

/// True when every equation vanishes at `points`.
pub fn on_locus(equations: &[Poly], problem: &LocusProblem, points: &[Point]) -> Result<bool> {
    Ok(evaluate_equations(equations, problem, points)?
        .iter()
        .all(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    fn y1() -> PointSet {
        PointSet::from_i64(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 1, 1, 1],
            vec![-5, 1, -3, 1],
        ])
        .unwrap()
    }

    fn y2() -> Vec<Point> {
        vec![
            Point::from_i64(&[-2, 0, 5, 1]).unwrap(),
            Point::new(vec![rat(-2), ratio(30, 13), rat(5), rat(19)]).unwrap(),
        ]
    }

    #[test]
    fn rejects_bad_problems() {
        assert!(LocusProblem::new(y1(), 0, 3).is_err());
        assert!(LocusProblem::new(y1(), 1, 1).is_err());
    }

    #[test]
    fn eight_point_locus() {
        let problem = LocusProblem::new(y1(), 2, 3).unwrap();
        let eqs = minor_equations(&problem);
        assert_eq!((eqs.rows, eqs.cols), (10, 8));
        assert_eq!(eqs.total, 45);
        assert!(eqs.note.is_none());
        for e in &eqs.equations {
            assert_eq!(unknown_multidegree(e, 2, 4), Some(vec![2, 2]));
        }
        assert!(on_locus(&eqs.equations, &problem, &y2()).unwrap());
        match check_completion(&problem, &y2()).unwrap() {
            CompletionCheck::Accepted(b) => assert_eq!(b.1.hilbert.h_vector, vec![1, 3, 3, 1]),
            CompletionCheck::Rejected(r) => panic!("rejected: {r:?}"),
        }
    }

    #[test]
    fn short_matrix_gives_note() {
        // C(1+1, 1) = 2 rows in P^1 with s = 2, but 4 points
        let fixed = PointSet::from_i64(&[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let eqs = minor_equations(&LocusProblem::new(fixed, 1, 2).unwrap());
        assert!(eqs.equations.is_empty());
        assert!(eqs.note.is_some());
    }

    #[test]
    fn search_is_deterministic() {
        let simplex = PointSet::from_i64(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ])
        .unwrap();
        let problem = LocusProblem::new(simplex, 1, 2).unwrap();
        let a = complete_to_gorenstein(&problem, 20, 7, 3).unwrap();
        let b = complete_to_gorenstein(&problem, 20, 7, 3).unwrap();
        let trials = |r: &CompletionResult| r.found.iter().map(|c| c.trial).collect::<Vec<_>>();
        assert_eq!(trials(&a), trials(&b));
        assert_eq!(a.rejections, b.rejections);
        assert!(!a.found.is_empty());
        let rejected = a.rejections.invalid_points
            + a.rejections.wrong_socle_degree
            + a.rejections.not_gorenstein;
        assert_eq!(a.found.len() + rejected, 20);
    }
}
