//! Fixtures and slow reference implementations shared by the integration
//! tests. Nothing here calls into the library's linear algebra.

#![allow(dead_code, clippy::needless_range_loop)]

use gorpoints::exactalg::{rat, ratio, Rational};
use gorpoints::pointset::{Point, PointSet};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn points(rows: &[Vec<i64>]) -> PointSet {
    PointSet::from_i64(rows).unwrap()
}

pub fn five_points() -> PointSet {
    points(&[
        vec![1, 0, 0, 1],
        vec![0, 1, 0, 1],
        vec![0, 0, 1, 1],
        vec![0, 0, 0, 1],
        vec![-1, 0, 0, 1],
    ])
}

pub fn no_gor() -> PointSet {
    points(&[
        vec![1, 0, 0, 1],
        vec![0, 1, 0, 1],
        vec![0, 0, 1, 1],
        vec![0, 0, 0, 1],
        vec![1, 1, 1, 1],
        vec![-1, 1, -1, 1],
    ])
}

pub fn no_gor_alpha() -> Vec<Rational> {
    [-1, -3, -1, 2, 2, 1].iter().map(|&a| rat(a)).collect()
}

pub fn simplex_p3() -> PointSet {
    points(&[
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
    ])
}

pub fn simplex_plus(p5: Vec<Rational>) -> PointSet {
    simplex_p3()
        .extended(vec![Point::new(p5).unwrap()])
        .unwrap()
}

pub fn y1() -> PointSet {
    points(&[
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
        vec![1, 1, 1, 1],
        vec![-5, 1, -3, 1],
    ])
}

pub fn y2() -> Vec<Point> {
    vec![
        Point::from_i64(&[-2, 0, 5, 1]).unwrap(),
        Point::new(vec![rat(-2), ratio(30, 13), rat(5), rat(19)]).unwrap(),
    ]
}

pub fn eight_points() -> PointSet {
    y1().extended(y2()).unwrap()
}

pub fn eight_points_alpha() -> Vec<Rational> {
    vec![
        rat(7347),
        ratio(6975, 13),
        rat(12555),
        rat(-8277),
        rat(-465),
        rat(-210),
        rat(-434),
        rat(26),
    ]
}

/// Weights of `L_i^3` in the reference cubic for the eight points.
pub fn eight_points_form_weights() -> Vec<Rational> {
    vec![
        rat(7347),
        ratio(6975, 13),
        rat(12555),
        rat(-8277),
        ratio(-465, 4),
        rat(35),
        ratio(-217, 2),
        ratio(169, 158),
    ]
}

pub fn ones(n: usize) -> Vec<Rational> {
    vec![Rational::one(); n]
}

// ---------------------------------------------------------------------------
// reference linear algebra: textbook Gaussian elimination over Q
// ---------------------------------------------------------------------------

pub fn naive_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                for j in c..cols {
                    let v = &m[rank][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Null space of `m` (vectors `v` with `m v = 0`), unnormalized.
pub fn naive_null_space(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][c].recip();
        for j in 0..cols {
            a[row][j] *= &inv;
        }
        for i in 0..a.len() {
            if i != row && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let v = &a[row][j] * &f;
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][free].clone();
            }
            v
        })
        .collect()
}

/// Exponent vectors of degree `d` in `nvars` variables, any order.
pub fn exponents(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in exponents(nvars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Rows: points; columns: degree-`d` monomials evaluated at the point.
pub fn evaluation_matrix(x: &PointSet, d: u32) -> Vec<Vec<Rational>> {
    let monos = exponents(x.nvars(), d);
    x.points()
        .iter()
        .map(|p| {
            monos
                .iter()
                .map(|e| {
                    p.coords()
                        .iter()
                        .zip(e)
                        .fold(Rational::one(), |acc, (c, &k)| {
                            acc * num_traits::pow(c.clone(), k as usize)
                        })
                })
                .collect()
        })
        .collect()
}

/// Hilbert function as the number of independent conditions the points
/// impose on forms of degree `d`.
pub fn naive_hf(x: &PointSet, d: u32) -> usize {
    naive_rank(evaluation_matrix(x, d))
}

pub fn naive_socle_degree(x: &PointSet) -> u32 {
    (0..).find(|&d| naive_hf(x, d) == x.len()).unwrap()
}

/// Relations `Σ α_i L_i^d = 0`; the same as relations among the rows of the
/// evaluation matrix, since the two differ by nonzero column scalings.
pub fn naive_relations(x: &PointSet, d: u32) -> Vec<Vec<Rational>> {
    let e = evaluation_matrix(x, d);
    let cols = e.first().map_or(0, Vec::len);
    let transposed: Vec<Vec<Rational>> = (0..cols)
        .map(|j| e.iter().map(|row| row[j].clone()).collect())
        .collect();
    naive_null_space(&transposed, x.len())
}

pub fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(i) = a.iter().position(|v| !v.is_zero()) else {
        return b.iter().all(Zero::is_zero);
    };
    if b[i].is_zero() {
        return false;
    }
    let f = &b[i] / &a[i];
    a.iter().zip(b).all(|(x, y)| &(x * &f) == y)
}

// ---------------------------------------------------------------------------
// random point sets
// ---------------------------------------------------------------------------

pub fn random_rational(rng: &mut ChaCha8Rng, range: i64, max_den: i64) -> Rational {
    Rational::new(
        rng.gen_range(-range..=range).into(),
        rng.gen_range(1..=max_den).into(),
    )
}

/// Distinct points in `P^n`, coordinates `p/q` with `|p| ≤ range`,
/// `1 ≤ q ≤ max_den`. Zero and repeated draws are skipped.
pub fn random_point_set(
    rng: &mut ChaCha8Rng,
    n: usize,
    r: usize,
    range: i64,
    max_den: i64,
) -> PointSet {
    let mut pts: Vec<Point> = Vec::with_capacity(r);
    while pts.len() < r {
        let coords: Vec<Rational> = (0..=n)
            .map(|_| random_rational(rng, range, max_den))
            .collect();
        if let Ok(p) = Point::new(coords) {
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
    }
    PointSet::new(pts).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Product grid `A_1 × … × A_k` placed in the chart `x_k = 1` of `P^k`: a
/// complete intersection of type `(|A_1|, …, |A_k|)`, hence Gorenstein.
pub fn grid_complete_intersection(rng: &mut ChaCha8Rng, sizes: &[usize]) -> PointSet {
    let axes: Vec<Vec<Rational>> = sizes
        .iter()
        .map(|&m| {
            let mut vals: Vec<Rational> = Vec::with_capacity(m);
            while vals.len() < m {
                let v = random_rational(rng, 6, 2);
                if !vals.contains(&v) {
                    vals.push(v);
                }
            }
            vals
        })
        .collect();
    let mut coords: Vec<Vec<Rational>> = vec![Vec::new()];
    for axis in &axes {
        coords = coords
            .into_iter()
            .flat_map(|c| {
                axis.iter().map(move |v| {
                    let mut c = c.clone();
                    c.push(v.clone());
                    c
                })
            })
            .collect();
    }
    let pts = coords
        .into_iter()
        .map(|mut c| {
            c.push(Rational::one());
            Point::new(c).unwrap()
        })
        .collect();
    PointSet::new(pts).unwrap()
}

/// Random invertible `(n+1) × (n+1)` integer matrix.
pub fn random_invertible(rng: &mut ChaCha8Rng, size: usize) -> gorpoints::exactalg::QMatrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..size)
            .map(|_| (0..size).map(|_| rat(rng.gen_range(-3..=3))).collect())
            .collect();
        if naive_rank(rows.clone()) == size {
            return gorpoints::exactalg::QMatrix::from_rows(rows);
        }
    }
}

/// A point set that is Gorenstein by construction, picked by `kind`.
pub fn known_gorenstein(rng: &mut ChaCha8Rng, kind: u8) -> PointSet {
    match kind % 4 {
        0 => {
            let p5 = (0..4)
                .map(|_| loop {
                    let v = random_rational(rng, 5, 3);
                    if !v.is_zero() {
                        break v;
                    }
                })
                .collect();
            simplex_plus(p5)
        }
        1 => {
            let a = rng.gen_range(1..=3);
            let b = rng.gen_range(1..=3);
            grid_complete_intersection(rng, &[a, b])
        }
        2 => grid_complete_intersection(rng, &[2, 2, 2]),
        _ => {
            // n + 2 general points of P^n
            let n = rng.gen_range(1..=3);
            loop {
                let x = random_point_set(rng, n, n + 2, 5, 1);
                if gorpoints::gorenstein::dgo_test(&x).verdict {
                    return x;
                }
            }
        }
    }
}
