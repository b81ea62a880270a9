//! Acceptance suite. One line per criterion, `[PASS]` or `[FAIL]`, followed by
//! indented sub-checks. Every comparison is exact; the only tolerance is the
//! wall-clock budget printed next to each criterion. Exits nonzero if any
//! criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use gorpoints::exactalg::{contract, power_of_linear, rat, Poly, Rational, Ring};
use gorpoints::gorenstein::{
    apolar_form, compare_step, dgo_test, dual_module_dimension, inverse_system_generators,
    is_arithmetically_gorenstein, AlphaVector, SpanRelation, Verdict,
};
use gorpoints::lifting::{is_artinian_reduction, n0_table, nonliftable_test, waring_g};
use gorpoints::locus::{complete_to_gorenstein, minor_equations, on_locus, LocusProblem};
use gorpoints::pointset::{hilbert_data, PointSet};
use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;

struct Report {
    checks: Vec<(bool, String)>,
}

impl Report {
    fn new() -> Self {
        Report { checks: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.checks.push((ok, what.into()));
    }

    fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|(ok, _)| *ok)
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn(&mut Report),
}

fn weighted_powers(x: &PointSet, w: &[Rational], d: u32) -> Poly {
    x.points()
        .iter()
        .zip(w)
        .fold(Poly::zero(Ring::Dual, x.nvars()), |acc, (p, c)| {
            &acc + &power_of_linear(p.coords(), d).scale(c)
        })
}

fn x3() -> Vec<Rational> {
    vec![rat(0), rat(0), rat(0), rat(1)]
}

fn criterion_1(rep: &mut Report) {
    let x = five_points();
    let h = hilbert_data(&x);
    rep.check(
        h.h_vector == vec![1, 3, 1],
        format!("h-vector {:?} = [1, 3, 1]", h.h_vector),
    );
    let cert = is_arithmetically_gorenstein(&x, None).unwrap();
    rep.check(
        cert.verdict == Verdict::NotGorenstein,
        "main test: not Gorenstein",
    );
    rep.check(
        !dgo_test(&x).verdict,
        "Hilbert-function criterion: not Gorenstein",
    );
    let expected = vec![vec![rat(1), rat(0), rat(0), rat(-2), rat(1)]];
    rep.check(
        cert.kernel == expected,
        "relation space = span{(1,0,0,-2,1)}",
    );
}

fn criterion_2(rep: &mut Report) {
    let x = no_gor();
    let s = hilbert_data(&x).socle_degree;
    rep.check(s == 2, format!("socle degree {s} = 2"));
    let cert = is_arithmetically_gorenstein(&x, None).unwrap();
    rep.check(
        cert.verdict == Verdict::NotGorenstein,
        "verdict: not Gorenstein",
    );

    // the relation space is two-dimensional here; (-1,-3,-1,2,2,1) must lie in it
    let expected_alpha = no_gor_alpha();
    let mut span = cert.kernel.clone();
    let before = naive_rank(span.clone());
    span.push(expected_alpha.clone());
    rep.check(
        before >= 1 && naive_rank(span) == before,
        format!("(-1,-3,-1,2,2,1) is a relation among the L_i (relation space dim {before})"),
    );

    let alpha = AlphaVector::exact(expected_alpha).unwrap();
    let f = apolar_form(&x, &alpha, &x3()).unwrap();
    let dim = dual_module_dimension(&f.form).unwrap().dim;
    rep.check(dim == 5, format!("dim <F> = {dim} = 5 < 6"));

    let gens = inverse_system_generators(&x, &alpha, &x3(), 3).unwrap();
    let t1 = compare_step(&gens, 1).unwrap().relation;
    let t2 = compare_step(&gens, 2).unwrap().relation;
    rep.check(t1 == SpanRelation::Equal, format!("t=1: {t1:?} (Equal)"));
    rep.check(
        t2 == SpanRelation::StrictlyContains,
        format!("t=2: {t2:?} (StrictlyContains)"),
    );
}

fn criterion_3(rep: &mut Report) {
    let mut g = rng(45);
    let mut good = 0;
    for _ in 0..50 {
        let p5: Vec<Rational> = (0..4)
            .map(|_| loop {
                let v = random_rational(&mut g, 5, 3);
                if !v.is_zero() {
                    break v;
                }
            })
            .collect();
        let x = simplex_plus(p5);
        if is_arithmetically_gorenstein(&x, None).unwrap().verdict == Verdict::Gorenstein {
            good += 1;
        }
    }
    rep.check(
        good == 50,
        format!("{good}/50 samples with nonzero coordinates Gorenstein"),
    );

    let special: [[i64; 4]; 8] = [
        [-1, 0, 0, 1],
        [1, 1, 1, 0],
        [1, 1, 0, 1],
        [1, 0, 1, 1],
        [0, 1, 1, 1],
        [2, -3, 0, 0],
        [0, 0, 1, -1],
        [1, 0, -2, 0],
    ];
    let mut bad = 0;
    for p in special {
        let x = simplex_plus(p.iter().map(|&c| rat(c)).collect());
        let cert = is_arithmetically_gorenstein(&x, None).unwrap();
        if cert.verdict == Verdict::NotGorenstein && !dgo_test(&x).verdict {
            bad += 1;
        }
    }
    rep.check(
        bad == 8,
        format!("{bad}/8 points on coordinate planes rejected"),
    );
}

fn criterion_4(rep: &mut Report) {
    let x = eight_points();
    let z = ones(4);
    let cert = is_arithmetically_gorenstein(&x, Some(&z)).unwrap();
    rep.check(cert.verdict == Verdict::Gorenstein, "verdict: Gorenstein");
    rep.check(
        cert.hilbert.h_vector == vec![1, 3, 3, 1],
        format!("h-vector {:?} = [1, 3, 3, 1]", cert.hilbert.h_vector),
    );
    let alpha = cert.alpha.clone().unwrap();
    let expected_alpha = eight_points_alpha();
    rep.check(
        alpha.eq_up_to_scalar(&expected_alpha),
        format!(
            "alpha {:?} proportional to (7347, 6975/13, 12555, -8277, -465, -210, -434, 26)",
            alpha
                .entries()
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
        ),
    );
    let reference = weighted_powers(&x, &eight_points_form_weights(), 3);
    let form = cert.apolar_form.clone().unwrap().form;
    rep.check(
        form.monic() == reference.monic(),
        "F proportional to the reference cubic with z = x0+x1+x2+x3",
    );
    // diagnostic for the two checks above
    let zop = Poly::linear(Ring::Operator, &z);
    let reference_is_relation = contract(&zop, &reference).unwrap().is_zero();
    rep.check(
        true,
        format!("(info) z applied to the reference cubic is zero: {reference_is_relation}"),
    );

    let problem = LocusProblem::new(y1(), 2, 3).unwrap();
    let eqs = minor_equations(&problem);
    rep.check(
        eqs.total == 45,
        format!("{} maximal minors enumerated (45)", eqs.total),
    );
    rep.check(
        on_locus(&eqs.equations, &problem, &y2()).unwrap(),
        format!("all {} minors vanish at Y2", eqs.total),
    );
    let v = is_artinian_reduction(&form, &x, &z).unwrap();
    rep.check(
        v.liftable && v.alpha.as_ref() == Some(&alpha),
        "is_artinian_reduction recovers alpha from F",
    );
}

fn criterion_5(rep: &mut Report) {
    let mut g = rng(5);
    let mut agree = 0;
    let mut gorenstein = 0;
    let total = 120;
    for _ in 0..total {
        let n = g.gen_range(1..=4);
        let r = g.gen_range(1..=10);
        let x = random_point_set(&mut g, n, r, 5, 3);
        let main = is_arithmetically_gorenstein(&x, None)
            .unwrap()
            .verdict
            .is_gorenstein();
        let oracle = dgo_test(&x).verdict;
        if main == oracle {
            agree += 1;
        }
        gorenstein += main as usize;
    }
    rep.check(
        agree == total,
        format!("{agree}/{total} random sets agree ({gorenstein} Gorenstein)"),
    );
    let mut agree = 0;
    for k in 0..40u8 {
        let x = known_gorenstein(&mut g, k);
        let main = is_arithmetically_gorenstein(&x, None)
            .unwrap()
            .verdict
            .is_gorenstein();
        if main && dgo_test(&x).verdict {
            agree += 1;
        }
    }
    rep.check(
        agree == 40,
        format!("{agree}/40 constructed Gorenstein sets agree"),
    );
}

fn criterion_6(rep: &mut Report) {
    let mut g = rng(6);
    let mut symmetric = true;
    let mut bounded = true;
    let mut invariant = true;
    let mut ladder = true;
    for k in 0..60u8 {
        let x = if k % 2 == 0 {
            known_gorenstein(&mut g, k / 2)
        } else {
            let n = g.gen_range(1..=3);
            let r = g.gen_range(2..=8);
            random_point_set(&mut g, n, r, 4, 2)
        };
        let cert = is_arithmetically_gorenstein(&x, None).unwrap();
        bounded &= cert.dual_dim <= x.len();
        if cert.verdict.is_gorenstein() {
            let s = cert.hilbert.socle_degree as usize;
            symmetric &= (0..=s).all(|j| cert.apolar_hf[j] == cert.apolar_hf[s - j]);
            let alpha = cert.alpha.clone().unwrap();
            let gens = inverse_system_generators(&x, &alpha, &cert.z, s + 2).unwrap();
            ladder &= gens.ladder_violation().unwrap().is_none();
        }
        let mut order: Vec<usize> = (0..x.len()).collect();
        order.reverse();
        order.rotate_left(g.gen_range(0..x.len()));
        let scaled = PointSet::new(
            x.points()
                .iter()
                .map(|p| p.scaled(&rat(*[-3, -2, -1, 1, 2, 3].get(g.gen_range(0..6)).unwrap())))
                .collect(),
        )
        .unwrap();
        let a = random_invertible(&mut g, x.nvars());
        for y in [x.permuted(&order), scaled, x.transformed(&a).unwrap()] {
            invariant &= is_arithmetically_gorenstein(&y, None).unwrap().verdict == cert.verdict;
        }
    }
    rep.check(
        symmetric,
        "apolar_hf[j] = apolar_hf[s-j] on Gorenstein sets",
    );
    rep.check(bounded, "dim <F> <= r on every set");
    rep.check(
        invariant,
        "verdict invariant under permutation, rescaling and PGL",
    );
    rep.check(ladder, "z o F_t = F_{t-1} and z o F_1 = 0");

    let mut nondegenerate = true;
    for nvars in 1..=4 {
        for j in 0..=4u32 {
            let monos = gorpoints::exactalg::monomials_of_degree(nvars, j);
            let rows: Vec<Vec<Rational>> = monos
                .iter()
                .map(|a| {
                    let op = Poly::monomial(Ring::Operator, a.clone(), rat(1));
                    monos
                        .iter()
                        .map(|b| {
                            let t = Poly::monomial(Ring::Dual, b.clone(), rat(1));
                            contract(&op, &t)
                                .unwrap()
                                .coeff(&gorpoints::exactalg::ExpVec::zero(nvars))
                        })
                        .collect()
                })
                .collect();
            nondegenerate &= naive_rank(rows) == monos.len();
        }
    }
    rep.check(
        nondegenerate,
        "contraction pairing R_j x Gamma_j nondegenerate, j <= 4, n <= 3",
    );
}

fn criterion_7(rep: &mut Report) {
    let expected = [(3, 11), (4, 11), (5, 8), (6, 8), (7, 7), (8, 7)];
    let table = n0_table(&[3, 4, 5, 6, 7, 8]).unwrap();
    for ((s, n0), row) in expected.iter().zip(&table) {
        rep.check(
            row.s == *s && row.n0 == *n0,
            format!("n0({s}) = {} (expected {n0})", row.n0),
        );
    }
    let exceptions = [((3, 4), 8u32), ((4, 2), 6), ((4, 3), 10), ((4, 4), 15)];
    for ((j, n), g) in exceptions {
        let got = waring_g(j, n).unwrap();
        rep.check(
            got == BigUint::from(g),
            format!("G(j={j}, n={n}) = {got} ({g})"),
        );
    }
    rep.check(
        !nonliftable_test(3, 10).unwrap(),
        "nonliftable(3, 10) = false",
    );
    rep.check(
        nonliftable_test(3, 11).unwrap(),
        "nonliftable(3, 11) = true",
    );
}

fn criterion_8(rep: &mut Report) {
    let mut g = rng(8);
    let fixed = random_point_set(&mut g, 4, 9, 5, 1);
    let problem = LocusProblem::new(fixed, 1, 3).unwrap();
    let result = complete_to_gorenstein(&problem, 200, 8, 5).unwrap();
    let t = &result.rejections;
    rep.check(
        result.found.is_empty(),
        format!(
            "{} of 200 trials accepted (rejections: {} invalid, {} wrong socle degree, {} not Gorenstein)",
            result.found.len(),
            t.invalid_points,
            t.wrong_socle_degree,
            t.not_gorenstein
        ),
    );
}

fn main() {
    let ms = Duration::from_millis;
    let criteria = [
        Criterion {
            id: 1,
            name: "five points with symmetric h-vector",
            budget: ms(100),
            run: criterion_1,
        },
        Criterion {
            id: 2,
            name: "six points, annihilator chain",
            budget: ms(500),
            run: criterion_2,
        },
        Criterion {
            id: 3,
            name: "simplex plus one point",
            budget: ms(2_000),
            run: criterion_3,
        },
        Criterion {
            id: 4,
            name: "eight points in P^3",
            budget: ms(2_000),
            run: criterion_4,
        },
        Criterion {
            id: 5,
            name: "agreement with Hilbert-function criterion",
            budget: ms(60_000),
            run: criterion_5,
        },
        Criterion {
            id: 6,
            name: "property suite",
            budget: ms(30_000),
            run: criterion_6,
        },
        Criterion {
            id: 7,
            name: "Waring counts and n0 table",
            budget: ms(1_000),
            run: criterion_7,
        },
        Criterion {
            id: 8,
            name: "no completion of 9 points in P^4",
            budget: ms(60_000),
            run: criterion_8,
        },
    ];

    let mut failed = Vec::new();
    for c in &criteria {
        let mut rep = Report::new();
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| (c.run)(&mut rep)));
        let elapsed = start.elapsed();
        if let Err(e) = &outcome {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            rep.check(false, format!("panicked: {msg}"));
        }
        let in_time = elapsed <= c.budget;
        let ok = rep.passed() && in_time;
        println!(
            "[{}] criterion {}: {} ({:.3} s, budget {:.1} s{})",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs_f64(),
            if in_time { "" } else { ", over budget" }
        );
        for (pass, what) in &rep.checks {
            println!("    {} {}", if *pass { "ok  " } else { "FAIL" }, what);
        }
        if !ok {
            failed.push(c.id);
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed.len(),
        criteria.len()
    );
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
