use clap::{Parser, Subcommand};
use gorpoints::gorenstein::{
    alpha_kernel_at, dgo_test, inverse_system_generators, is_arithmetically_gorenstein,
    verify_g_admissible, AlphaOutcome, GorensteinCertificate,
};
use gorpoints::lifting::{is_artinian_reduction_checked, n0_table, waring_data};
use gorpoints::locus::{complete_to_gorenstein, minor_equations, LocusProblem};
use gorpoints::pointset::{choose_regular_form, hilbert_data};
use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;
use crate::input::{parse_form, parse_points, read_file, PointsInput};
use crate::report::*;

#[derive(Debug, Parser)]
#[command(
    name = "gorpoints",
    version,
    about = "Decide whether a set of points in projective space is arithmetically Gorenstein"
)]
pub struct Cli {
    /// Print only the verdict word instead of the JSON document.
    #[arg(long, global = true)]
    pub quiet: bool,

    /// Indent the JSON and add a rendered string to every polynomial.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full certificate: alpha, apolar form, Hilbert data, failure reason.
    Check {
        /// Points file (JSON), or - for standard input.
        points: String,
    },
    /// Hilbert-function criterion with its witness.
    Dgo { points: String },
    /// Hilbert function in degrees 0..=d.
    Hf {
        points: String,
        #[arg(long)]
        max_degree: u32,
    },
    /// h-vector and socle degree.
    Hvector { points: String },
    /// Relations among the (s-1)-th powers of the dual linear forms.
    Alphas { points: String },
    /// Apolar form F and the Hilbert function of its apolar algebra.
    ApolarForm { points: String },
    /// Inverse-system generators F_1..F_T.
    Invsys {
        points: String,
        /// Defaults to s + 1.
        #[arg(long)]
        tmax: Option<usize>,
    },
    /// G-admissibility of F_1..F_T (needs T >= s + 1).
    VerifyGadm {
        points: String,
        /// Defaults to s + 1.
        #[arg(long)]
        tmax: Option<usize>,
    },
    /// Whether a form is the Artinian reduction of the points.
    ReduceCheck {
        points: String,
        /// Form file: {"terms": [...]}, or an output document carrying one.
        #[arg(long)]
        form: String,
    },
    /// Maximal minors cutting out the Gorenstein completions.
    LocusEquations {
        points: String,
        #[arg(long)]
        unknowns: usize,
        /// Socle degree of the completed set.
        #[arg(long)]
        target_s: u32,
    },
    /// Seeded random search for Gorenstein completions.
    Complete {
        points: String,
        #[arg(long)]
        unknowns: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sampled coordinates are p/q with |p| <= B and 1 <= q <= B.
        #[arg(long, default_value_t = 5)]
        range: i64,
        #[arg(long)]
        target_s: u32,
    },
    /// Generic Waring rank and the nonliftability count for (s, n).
    Waring {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        n: u64,
    },
    /// Least n for which the count proves a generic form nonliftable, s = 3..=S.
    N0Table {
        #[arg(long)]
        smax: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Dgo { .. } => "dgo",
            Command::Hf { .. } => "hf",
            Command::Hvector { .. } => "hvector",
            Command::Alphas { .. } => "alphas",
            Command::ApolarForm { .. } => "apolar-form",
            Command::Invsys { .. } => "invsys",
            Command::VerifyGadm { .. } => "verify-gadm",
            Command::ReduceCheck { .. } => "reduce-check",
            Command::LocusEquations { .. } => "locus-equations",
            Command::Complete { .. } => "complete",
            Command::Waring { .. } => "waring",
            Command::N0Table { .. } => "n0-table",
        }
    }

    fn points_path(&self) -> Option<&str> {
        match self {
            Command::Check { points }
            | Command::Dgo { points }
            | Command::Hf { points, .. }
            | Command::Hvector { points }
            | Command::Alphas { points }
            | Command::ApolarForm { points }
            | Command::Invsys { points, .. }
            | Command::VerifyGadm { points, .. }
            | Command::ReduceCheck { points, .. }
            | Command::LocusEquations { points, .. }
            | Command::Complete { points, .. } => Some(points),
            Command::Waring { .. } | Command::N0Table { .. } => None,
        }
    }
}

/// Result of one command before timing is attached.
pub struct Outcome {
    pub name: Option<String>,
    pub result: Value,
    pub warnings: Vec<String>,
    /// What `--quiet` prints.
    pub word: String,
}

fn value<T: Serialize>(doc: T) -> Value {
    serde_json::to_value(doc).expect("output documents serialize")
}

fn certificate(input: &PointsInput) -> Result<GorensteinCertificate, CliError> {
    Ok(is_arithmetically_gorenstein(
        &input.points,
        input.z_hint.as_deref(),
    )?)
}

#[derive(Serialize)]
struct NoAlpha {
    socle_degree: u32,
    failure_reason: Option<FailureDoc>,
    kernel: Vec<Vec<String>>,
}

fn no_alpha(c: &GorensteinCertificate) -> (Value, String) {
    let reason = c.failure_reason.as_ref().map(FailureDoc::from);
    let word = c.failure_reason.as_ref().map_or("no_alpha", |r| r.code());
    let doc = NoAlpha {
        socle_degree: c.hilbert.socle_degree,
        failure_reason: reason,
        kernel: c.kernel.iter().map(|v| qvec(v)).collect(),
    };
    (value(doc), word.to_string())
}

pub fn execute(command: &Command, style: Style) -> Result<Outcome, CliError> {
    let input = match command.points_path() {
        Some(path) => Some(parse_points(&read_file(path)?)?),
        None => None,
    };
    let (name, warnings) = input
        .as_ref()
        .map_or((None, Vec::new()), |i| (i.name.clone(), i.warnings.clone()));
    let (result, word) = match (command, input.as_ref()) {
        (Command::Check { .. }, Some(i)) => {
            let c = certificate(i)?;
            let doc = CertificateDoc::new(&i.points, &c, style);
            (value(&doc), doc.verdict.to_string())
        }
        (Command::Dgo { .. }, Some(i)) => {
            let h = hilbert_data(&i.points);
            let d = dgo_test(&i.points);
            #[derive(Serialize)]
            struct Doc {
                verdict: &'static str,
                witness: DgoDetailDoc,
                socle_degree: u32,
                h_vector: Vec<usize>,
            }
            let dgo = DgoDoc::from(&d);
            let doc = Doc {
                verdict: dgo.verdict,
                witness: dgo.witness,
                socle_degree: h.socle_degree,
                h_vector: h.h_vector,
            };
            (value(doc), dgo.verdict.to_string())
        }
        (Command::Hf { max_degree, .. }, Some(i)) => {
            let h = hilbert_data(&i.points);
            #[derive(Serialize)]
            struct Doc {
                max_degree: u32,
                hf: Vec<usize>,
                r: usize,
                socle_degree: u32,
            }
            let doc = Doc {
                max_degree: *max_degree,
                hf: (0..=*max_degree).map(|j| h.hf_at(j)).collect(),
                r: h.r(),
                socle_degree: h.socle_degree,
            };
            (value(doc), "ok".to_string())
        }
        (Command::Hvector { .. }, Some(i)) => {
            let h = hilbert_data(&i.points);
            #[derive(Serialize)]
            struct Doc {
                h_vector: Vec<usize>,
                socle_degree: u32,
                r: usize,
                symmetric: bool,
            }
            let symmetric = h.is_symmetric();
            let doc = Doc {
                h_vector: h.h_vector.clone(),
                socle_degree: h.socle_degree,
                r: h.r(),
                symmetric,
            };
            let word = if symmetric { "symmetric" } else { "asymmetric" };
            (value(doc), word.to_string())
        }
        (Command::Alphas { .. }, Some(i)) => {
            let s = hilbert_data(&i.points).socle_degree;
            #[derive(Serialize)]
            struct Doc {
                socle_degree: u32,
                degree: Option<u32>,
                outcome: &'static str,
                alpha: Option<Vec<String>>,
                failure_reason: Option<FailureDoc>,
                kernel: Vec<Vec<String>>,
            }
            let doc = if s == 0 {
                // one point: alpha = (1) by convention
                Doc {
                    socle_degree: 0,
                    degree: None,
                    outcome: "unique",
                    alpha: Some(vec!["1".into()]),
                    failure_reason: None,
                    kernel: vec![vec!["1".into()]],
                }
            } else {
                match alpha_kernel_at(&i.points, s - 1) {
                    AlphaOutcome::Unique(a) => Doc {
                        socle_degree: s,
                        degree: Some(s - 1),
                        outcome: "unique",
                        alpha: Some(qvec(a.entries())),
                        failure_reason: None,
                        kernel: vec![qvec(a.entries())],
                    },
                    AlphaOutcome::Failed { reason, kernel } => Doc {
                        socle_degree: s,
                        degree: Some(s - 1),
                        outcome: reason.code(),
                        alpha: None,
                        failure_reason: Some(FailureDoc::from(&reason)),
                        kernel: kernel.iter().map(|v| qvec(v)).collect(),
                    },
                }
            };
            let word = doc.outcome.to_string();
            (value(doc), word)
        }
        (Command::ApolarForm { .. }, Some(i)) => {
            let c = certificate(i)?;
            match (&c.alpha, &c.apolar_form) {
                (Some(alpha), Some(form)) => {
                    #[derive(Serialize)]
                    struct Doc {
                        verdict: &'static str,
                        z: Vec<String>,
                        alpha: Vec<String>,
                        form: PolyDoc,
                        apolar_hf: Vec<usize>,
                        dual_dim: usize,
                        r: usize,
                    }
                    let doc = Doc {
                        verdict: c.verdict.word(),
                        z: qvec(&c.z),
                        alpha: qvec(alpha.entries()),
                        form: PolyDoc::new(&form.form, style),
                        apolar_hf: c.apolar_hf.clone(),
                        dual_dim: c.dual_dim,
                        r: i.points.len(),
                    };
                    (value(doc), c.verdict.word().to_string())
                }
                _ => no_alpha(&c),
            }
        }
        (Command::Invsys { tmax, .. }, Some(i)) => {
            let c = certificate(i)?;
            let s = c.hilbert.socle_degree as usize;
            let tmax = tmax.unwrap_or(s + 1);
            if tmax == 0 {
                return Err(CliError::Usage("--tmax must be at least 1".into()));
            }
            match &c.alpha {
                Some(alpha) => {
                    let gens = inverse_system_generators(&i.points, alpha, &c.z, tmax)?;
                    #[derive(Serialize)]
                    struct Gen {
                        t: usize,
                        form: PolyDoc,
                    }
                    #[derive(Serialize)]
                    struct Doc {
                        socle_degree: usize,
                        tmax: usize,
                        z: Vec<String>,
                        alpha: Vec<String>,
                        ladder_holds: bool,
                        generators: Vec<Gen>,
                    }
                    let ladder = gens.ladder_violation()?.is_none();
                    let doc = Doc {
                        socle_degree: s,
                        tmax,
                        z: qvec(&c.z),
                        alpha: qvec(alpha.entries()),
                        ladder_holds: ladder,
                        generators: gens
                            .gens
                            .iter()
                            .enumerate()
                            .map(|(k, f)| Gen {
                                t: k + 1,
                                form: PolyDoc::new(f, style),
                            })
                            .collect(),
                    };
                    let word = if ladder {
                        "ladder_holds"
                    } else {
                        "ladder_fails"
                    };
                    (value(doc), word.to_string())
                }
                None => no_alpha(&c),
            }
        }
        (Command::VerifyGadm { tmax, .. }, Some(i)) => {
            let c = certificate(i)?;
            let s = c.hilbert.socle_degree as usize;
            if s == 0 {
                return Err(CliError::Usage(
                    "verify-gadm needs at least two points (socle degree 0 has nothing to compare)"
                        .into(),
                ));
            }
            let tmax = tmax.unwrap_or(s + 1);
            if tmax < s + 1 {
                return Err(CliError::Usage(format!(
                    "--tmax must be at least s + 1 = {}",
                    s + 1
                )));
            }
            match &c.alpha {
                Some(alpha) => {
                    let gens = inverse_system_generators(&i.points, alpha, &c.z, tmax)?;
                    let g = verify_g_admissible(&i.points, &gens)?;
                    #[derive(Serialize)]
                    struct Doc {
                        verdict: &'static str,
                        socle_degree: usize,
                        tmax: usize,
                        ladder_violation: Option<usize>,
                        step: StepDoc,
                        detail: String,
                    }
                    let word = if g.verdict {
                        "g_admissible"
                    } else {
                        "not_g_admissible"
                    };
                    let doc = Doc {
                        verdict: word,
                        socle_degree: s,
                        tmax,
                        ladder_violation: g.ladder_violation,
                        step: StepDoc::from(&g.step),
                        detail: g.detail,
                    };
                    (value(doc), word.to_string())
                }
                None => no_alpha(&c),
            }
        }
        (Command::ReduceCheck { form, .. }, Some(i)) => {
            let f = parse_form(&read_file(form)?)?;
            if f.nvars() != i.points.nvars() {
                return Err(CliError::Input(format!(
                    "form has {} variables, points have {} coordinates",
                    f.nvars(),
                    i.points.nvars()
                )));
            }
            let z = choose_regular_form(&i.points, i.z_hint.as_deref())?;
            let v = is_artinian_reduction_checked(&f, &i.points, &z)?;
            #[derive(Serialize)]
            struct Doc {
                liftable: bool,
                alpha: Option<Vec<String>>,
                obstruction: Option<ObstructionDoc>,
                points_gorenstein: Option<bool>,
                z: Vec<String>,
                note: Option<&'static str>,
            }
            let note = (v.liftable && v.points_gorenstein == Some(false)).then_some(
                "the points are not arithmetically Gorenstein, so the linear conditions hold \
                 without the form being an Artinian reduction of them",
            );
            let word = if v.liftable {
                "liftable"
            } else {
                "not_liftable"
            };
            let doc = Doc {
                liftable: v.liftable,
                alpha: v.alpha.as_ref().map(|a| qvec(a.entries())),
                obstruction: v.obstruction.as_ref().map(ObstructionDoc::from),
                points_gorenstein: v.points_gorenstein,
                z: qvec(&z),
                note,
            };
            (value(doc), word.to_string())
        }
        (
            Command::LocusEquations {
                unknowns, target_s, ..
            },
            Some(i),
        ) => {
            let problem = LocusProblem::new(i.points.clone(), *unknowns, *target_s)?;
            let eqs = minor_equations(&problem);
            #[derive(Serialize)]
            struct Doc {
                unknowns: usize,
                target_s: u32,
                target_r: usize,
                rows: usize,
                cols: usize,
                /// Variable `u{k(n+1)+c}` is coordinate `c` of unknown point `k`.
                variables: usize,
                total_minors: usize,
                zero_minors: usize,
                note: Option<String>,
                equations: Vec<PolyDoc>,
            }
            let doc = Doc {
                unknowns: *unknowns,
                target_s: *target_s,
                target_r: problem.target_r(),
                rows: eqs.rows,
                cols: eqs.cols,
                variables: problem.num_unknown_coords(),
                total_minors: eqs.total,
                zero_minors: eqs.zero,
                note: eqs.note.clone(),
                equations: eqs
                    .equations
                    .iter()
                    .map(|e| PolyDoc::new(e, style))
                    .collect(),
            };
            (value(doc), "ok".to_string())
        }
        (
            Command::Complete {
                unknowns,
                trials,
                seed,
                range,
                target_s,
                ..
            },
            Some(i),
        ) => {
            if *range < 1 {
                return Err(CliError::Usage("--range must be at least 1".into()));
            }
            let problem = LocusProblem::new(i.points.clone(), *unknowns, *target_s)?;
            let res = complete_to_gorenstein(&problem, *trials, *seed, *range)?;
            #[derive(Serialize)]
            struct Found {
                trial: usize,
                added: Vec<Vec<String>>,
                alpha: Option<Vec<String>>,
                h_vector: Vec<usize>,
            }
            #[derive(Serialize)]
            struct Rejections {
                invalid_points: usize,
                wrong_socle_degree: usize,
                not_gorenstein: usize,
            }
            #[derive(Serialize)]
            struct Doc {
                unknowns: usize,
                target_s: u32,
                trials: usize,
                seed: u64,
                range: i64,
                found: Vec<Found>,
                rejections: Rejections,
            }
            let fixed = i.points.len();
            let doc = Doc {
                unknowns: *unknowns,
                target_s: *target_s,
                trials: res.trials,
                seed: res.seed,
                range: *range,
                found: res
                    .found
                    .iter()
                    .map(|c| Found {
                        trial: c.trial,
                        added: c.points.points()[fixed..]
                            .iter()
                            .map(|p| qvec(p.coords()))
                            .collect(),
                        alpha: c.certificate.alpha.as_ref().map(|a| qvec(a.entries())),
                        h_vector: c.certificate.hilbert.h_vector.clone(),
                    })
                    .collect(),
                rejections: Rejections {
                    invalid_points: res.rejections.invalid_points,
                    wrong_socle_degree: res.rejections.wrong_socle_degree,
                    not_gorenstein: res.rejections.not_gorenstein,
                },
            };
            let word = if res.found.is_empty() {
                "none"
            } else {
                "found"
            };
            (value(doc), word.to_string())
        }
        (Command::Waring { s, n }, None) => {
            let w = waring_data(*s, *n).map_err(|e| CliError::Usage(e.to_string()))?;
            #[derive(Serialize)]
            struct Doc {
                s: u64,
                n: u64,
                g: String,
                rho: String,
                nonliftable: bool,
            }
            let word = if w.nonliftable {
                "nonliftable"
            } else {
                "undecided"
            };
            let doc = Doc {
                s: w.j,
                n: w.n,
                g: w.g.to_string(),
                rho: w.rho.to_string(),
                nonliftable: w.nonliftable,
            };
            (value(doc), word.to_string())
        }
        (Command::N0Table { smax }, None) => {
            if *smax < 3 {
                return Err(CliError::Usage("--smax must be at least 3".into()));
            }
            let s_values: Vec<u64> = (3..=*smax).collect();
            let rows = n0_table(&s_values)?;
            #[derive(Serialize)]
            struct Row {
                s: u64,
                n0: u64,
            }
            #[derive(Serialize)]
            struct Doc {
                rows: Vec<Row>,
            }
            let doc = Doc {
                rows: rows.iter().map(|r| Row { s: r.s, n0: r.n0 }).collect(),
            };
            (value(doc), "ok".to_string())
        }
        _ => unreachable!("points are read exactly for the commands that take them"),
    };
    Ok(Outcome {
        name,
        result,
        warnings,
        word,
    })
}

/// Runs a parsed command line and returns what goes to standard output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let style = Style { pretty: cli.pretty };
    let start = std::time::Instant::now();
    let outcome = execute(&cli.command, style)?;
    if cli.quiet {
        return Ok(outcome.word);
    }
    let doc = Envelope {
        command: cli.command.name(),
        name: outcome.name,
        result: outcome.result,
        warnings: outcome.warnings,
        timings: Timings {
            total_us: start.elapsed().as_micros() as u64,
        },
    };
    Ok(render(&doc, style))
}
