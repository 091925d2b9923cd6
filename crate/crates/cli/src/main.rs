//! `evenfarey` command-line front end. Every command prints JSON lines with
//! exact values rendered as strings.

mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use evenfarey::cf::{
    farey_branch, farey_natext_step, gauss_natext_step, gauss_step, rcf_expand, Termination,
    DEFAULT_MAX_DIGITS,
};
use evenfarey::cutting::{
    even_sequence_from_digits, even_sequence_geometric, series_sequence_from_digits,
    xi_eta_points, Convention, CuttingSequence, HalfPlanePoint,
};
use evenfarey::ecf::{
    ecf_expand, even_farey_branch, even_farey_natext_step, even_gauss_natext_step,
    even_gauss_step, ext_ecf_expand, Sign,
};
use evenfarey::mutants;
use evenfarey::section::{
    lehner_branch, lehner_dual_branch, lehner_dual_expand, lehner_dual_natext_step,
    lehner_natext_step, rho_e_step, rho_step, sigma_e_step, sigma_l_step, sigma_step,
    tilde_f_e_step, tilde_t_e_step, Domain, EndpointPair, StatePoint,
};
use evenfarey::verify::{run_suite, MapTable, Suite, VerifyConfig};
use evenfarey::{BoundaryPoint, Error};

#[derive(Parser)]
#[command(name = "evenfarey", version, about = "Exact continued-fraction dynamics and geodesic codings")]
struct Cli {
    /// Seed for sampled verification points.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples per check.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    /// Tolerance for floating-point checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Continued-fraction expansion of a value.
    Expand {
        #[arg(long, value_enum)]
        system: ExpandSystem,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DIGITS)]
        max_digits: usize,
    },
    /// Orbit of an interval map.
    Orbit {
        #[arg(long, value_enum)]
        map: IntervalMap,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 10)]
        steps: usize,
    },
    /// Orbit of a natural extension.
    Natext {
        #[arg(long, value_enum)]
        map: NatextMapArg,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Orientation tag for the signed maps.
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<i8>,
        #[arg(long, default_value_t = 10)]
        steps: usize,
    },
    /// Orbit of a cross-section map on endpoint pairs.
    Section {
        #[arg(long, value_enum)]
        map: SectionMap,
        #[arg(long, allow_hyphen_values = true)]
        forward: String,
        #[arg(long, allow_hyphen_values = true)]
        backward: String,
        #[arg(long, default_value_t = 10)]
        steps: usize,
    },
    /// Cutting sequences of a geodesic.
    Cutting {
        #[arg(long, allow_hyphen_values = true)]
        forward: String,
        #[arg(long, allow_hyphen_values = true)]
        backward: String,
        #[arg(long, default_value_t = 30)]
        window: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::EvenGauss)]
        convention: ConventionArg,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 30)]
        window: usize,
        /// Print every check, not only the failures.
        #[arg(long)]
        records: bool,
        #[arg(long, hide = true)]
        mutant: Option<String>,
    },
    /// Draw a tessellation, optionally with a geodesic, as SVG.
    Render {
        #[arg(long, value_enum)]
        tessellation: TessellationArg,
        #[arg(long, default_value_t = 8)]
        max_denominator: i64,
        /// Geodesic as `forward:backward`.
        #[arg(long, allow_hyphen_values = true)]
        geodesic: Option<String>,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = -4.0, allow_hyphen_values = true)]
        re_min: f64,
        #[arg(long, default_value_t = 4.0, allow_hyphen_values = true)]
        re_max: f64,
        #[arg(long, default_value_t = 3.0)]
        im_max: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandSystem {
    Rcf,
    Ecf,
    ExtEcf,
    LehnerDual,
}

#[derive(Clone, Copy, ValueEnum)]
enum IntervalMap {
    Gauss,
    Farey,
    EvenGauss,
    EvenFarey,
    Lehner,
    LehnerDual,
}

#[derive(Clone, Copy, ValueEnum)]
enum NatextMapArg {
    Gauss,
    Farey,
    EvenGauss,
    EvenFarey,
    Lehner,
    LehnerDual,
    TildeTE,
    TildeFE,
}

#[derive(Clone, Copy, ValueEnum)]
enum SectionMap {
    Rho,
    Sigma,
    RhoE,
    SigmaE,
    SigmaL,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Gauss,
    Farey,
    EvenGauss,
    EvenFarey,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Conjugacy,
    Box,
    Slowdown,
    Measure,
    Coding,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum TessellationArg {
    Farey,
    Even,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn emit(v: Value) {
    println!("{v}");
}

fn parse(s: &str) -> std::result::Result<BoundaryPoint, Failure> {
    Ok(s.parse::<BoundaryPoint>()?)
}

fn termination(t: Termination) -> Value {
    serde_json::to_value(t).unwrap_or(Value::Null)
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn expand(system: ExpandSystem, value: &str, max: usize) -> Outcome {
    let x = parse(value)?;
    let (name, digits, remainders, term, display, leading) = match system {
        ExpandSystem::Rcf => {
            let e = rcf_expand(&x, max)?;
            let l = e.leading.to_string();
            (
                "rcf",
                strings(&e.digits),
                strings(&e.remainders),
                e.termination,
                e.to_string(),
                Some(l),
            )
        }
        ExpandSystem::Ecf => {
            let e = ecf_expand(&x, max)?;
            let l = e.leading.as_ref().map(ToString::to_string);
            (
                "ecf",
                strings(&e.digits),
                strings(&e.remainders),
                e.termination,
                e.to_string(),
                l,
            )
        }
        ExpandSystem::ExtEcf => {
            let e = ext_ecf_expand(&x, max)?;
            (
                "ext-ecf",
                strings(&e.digits),
                Vec::new(),
                e.termination,
                e.to_string(),
                None,
            )
        }
        ExpandSystem::LehnerDual => {
            let e = lehner_dual_expand(&x, max)?;
            (
                "lehner-dual",
                strings(&e.digits),
                strings(&e.remainders),
                e.termination,
                e.to_string(),
                None,
            )
        }
    };
    for (i, d) in digits.iter().enumerate() {
        emit(json!({
            "index": i + 1,
            "digit": d,
            "remainder": remainders.get(i),
        }));
    }
    emit(json!({
        "system": name,
        "value": x.to_string(),
        "leading": leading,
        "digits": digits,
        "termination": termination(term),
        "expansion": display,
    }));
    Ok(())
}

fn cusp_event(step: usize, e: &Error) -> Value {
    json!({"event": "cusp", "step": step, "message": e.to_string()})
}

fn orbit(map: IntervalMap, x: &str, steps: usize) -> Outcome {
    let mut x = parse(x)?;
    for step in 1..=steps {
        let r: evenfarey::Result<(String, BoundaryPoint)> = match map {
            IntervalMap::Gauss => gauss_step(&x).map(|(k, y)| (k.map_or("none".into(), |k| k.to_string()), y)),
            IntervalMap::Farey => farey_branch(&x).map(|(b, l)| (b.to_string(), l.apply(&x))),
            IntervalMap::EvenGauss => {
                even_gauss_step(&x).map(|(d, y)| (d.map_or("none".into(), |d| d.to_string()), y))
            }
            IntervalMap::EvenFarey => even_farey_branch(&x).map(|(b, l)| (b.to_string(), l.apply(&x))),
            IntervalMap::Lehner => lehner_branch(&x).map(|(b, l)| (b.to_string(), l.apply(&x))),
            IntervalMap::LehnerDual => lehner_dual_branch(&x).map(|(b, l)| (b.to_string(), l.apply(&x))),
        };
        match r {
            Ok((branch, y)) => {
                emit(json!({"step": step, "branch": branch, "x": y.to_string()}));
                x = y;
            }
            Err(e @ Error::Cusp { .. }) => {
                emit(cusp_event(step, &e));
                return Ok(());
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn natext(map: NatextMapArg, x: &str, y: &str, sign: Option<i8>, steps: usize) -> Outcome {
    let (mut x, mut y) = (parse(x)?, parse(y)?);
    let mut s = match sign {
        Some(1) => Some(Sign::Plus),
        Some(-1) => Some(Sign::Minus),
        Some(v) => return Err(Failure::Usage(format!("sign must be 1 or -1, got {v}"))),
        None => None,
    };
    for step in 1..=steps {
        let r = match map {
            NatextMapArg::Gauss => gauss_natext_step(&x, &y).map(|p| (p, None)),
            NatextMapArg::Farey => farey_natext_step(&x, &y).map(|p| (p, None)),
            NatextMapArg::EvenGauss => even_gauss_natext_step(&x, &y).map(|p| (p, None)),
            NatextMapArg::EvenFarey => even_farey_natext_step(&x, &y).map(|p| (p, None)),
            NatextMapArg::Lehner => lehner_natext_step(&x, &y).map(|p| (p, None)),
            NatextMapArg::LehnerDual => lehner_dual_natext_step(&x, &y).map(|p| (p, None)),
            NatextMapArg::TildeTE | NatextMapArg::TildeFE => {
                let q = StatePoint::signed(x.clone(), y.clone(), s.unwrap_or(Sign::Plus));
                let f = if matches!(map, NatextMapArg::TildeTE) {
                    tilde_t_e_step
                } else {
                    tilde_f_e_step
                };
                f(&q).map(|q| {
                    let e = q.sign();
                    ((q.x, q.y), Some(e))
                })
            }
        };
        match r {
            Ok(((nx, ny), e)) => {
                x = nx;
                y = ny;
                s = e.or(s);
                let mut v = json!({"step": step, "x": x.to_string(), "y": y.to_string()});
                if let Some(e) = e {
                    v["sign"] = json!(e.value());
                }
                emit(v);
            }
            Err(e @ Error::Cusp { .. }) => {
                emit(cusp_event(step, &e));
                return Ok(());
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn section(map: SectionMap, forward: &str, backward: &str, steps: usize) -> Outcome {
    let (domain, f): (Domain, fn(&EndpointPair) -> evenfarey::Result<EndpointPair>) = match map {
        SectionMap::Rho => (Domain::S, rho_step),
        SectionMap::Sigma => (Domain::T, sigma_step),
        SectionMap::RhoE => (Domain::Se, rho_e_step),
        SectionMap::SigmaE => (Domain::Te, sigma_e_step),
        SectionMap::SigmaL => (Domain::SL, sigma_l_step),
    };
    let mut p = EndpointPair::new(parse(forward)?, parse(backward)?, domain)?;
    for step in 1..=steps {
        match f(&p) {
            Ok(q) => {
                let flipped = q.eps() != p.eps();
                emit(json!({
                    "step": step,
                    "forward": q.fwd.to_string(),
                    "backward": q.bwd.to_string(),
                    "sign": q.eps().value(),
                    "orientation_flipped": flipped,
                }));
                p = q;
            }
            Err(e @ Error::Cusp { .. }) => {
                emit(cusp_event(step, &e));
                return Ok(());
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn sequence_json(r: evenfarey::Result<CuttingSequence>) -> Value {
    match r {
        Ok(s) => json!({
            "sequence": s.to_string(),
            "xi_index": s.xi_index,
            "eta_index": s.eta_index,
        }),
        Err(e) => json!({"error": e.to_string()}),
    }
}

fn point_json(p: &HalfPlanePoint) -> Value {
    json!({"re": p.re.to_string(), "im_squared": p.im_sq.to_string()})
}

fn cutting(forward: &str, backward: &str, window: usize, conv: ConventionArg) -> Outcome {
    let (f, b) = (parse(forward)?, parse(backward)?);
    let eps = Sign::of(&f);
    let geometric = even_sequence_geometric(&f, &b, window);
    let digits = ecf_expand(&f, 10 * window + 100).and_then(|fe| {
        let be = ext_ecf_expand(&eps.flip().apply(&b), 10 * window + 100)?;
        even_sequence_from_digits(&fe, &be, window)
    });
    let series = rcf_expand(&f.abs(), 10 * window + 100).and_then(|fa| {
        let ba = rcf_expand(&b.abs(), 10 * window + 100)?;
        EndpointPair::new(f.clone(), b.clone(), Domain::S)?;
        series_sequence_from_digits(&fa, &ba, eps, window)
    });
    let conv = match conv {
        ConventionArg::Gauss => Convention::Gauss,
        ConventionArg::Farey => Convention::Farey,
        ConventionArg::EvenGauss => Convention::EvenGauss,
        ConventionArg::EvenFarey => Convention::EvenFarey,
    };
    let points = match xi_eta_points(&f, &b, conv) {
        Ok((xi, eta)) => json!({"xi": point_json(&xi), "eta": eta.as_ref().map(point_json)}),
        Err(e) => json!({"error": e.to_string()}),
    };
    emit(json!({
        "forward": f.to_string(),
        "backward": b.to_string(),
        "even_geometric": sequence_json(geometric),
        "even_digits": sequence_json(digits),
        "series": sequence_json(series),
        "points": points,
    }));
    Ok(())
}

fn verify(suite: SuiteArg, cli: &Cli, window: usize, records: bool, mutant: Option<&str>) -> Outcome {
    let table = match mutant {
        None => MapTable::default(),
        Some(name) => mutants::by_name(name)
            .ok_or_else(|| Failure::Usage(format!("unknown mutant {name}")))?
            .table(),
    };
    let cfg = VerifyConfig {
        samples: cli.samples,
        seed: cli.seed,
        tol: cli.tol,
        window,
    };
    let suites: Vec<Suite> = match suite {
        SuiteArg::Conjugacy => vec![Suite::Conjugacy],
        SuiteArg::Box => vec![Suite::Box],
        SuiteArg::Slowdown => vec![Suite::Slowdown],
        SuiteArg::Measure => vec![Suite::Measure],
        SuiteArg::Coding => vec![Suite::Coding],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let mut ok = true;
    for s in suites {
        let report = run_suite(s, &cfg, &table);
        for r in report.records.iter().filter(|r| records || !r.equal) {
            emit(serde_json::to_value(r).unwrap_or(Value::Null));
        }
        emit(report.summary());
        ok &= report.passed();
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: &Cli) -> Outcome {
    let Format::Json = cli.format;
    match &cli.command {
        Command::Expand {
            system,
            value,
            max_digits,
        } => expand(*system, value, *max_digits),
        Command::Orbit { map, x, steps } => orbit(*map, x, *steps),
        Command::Natext {
            map,
            x,
            y,
            sign,
            steps,
        } => natext(*map, x, y, *sign, *steps),
        Command::Section {
            map,
            forward,
            backward,
            steps,
        } => section(*map, forward, backward, *steps),
        Command::Cutting {
            forward,
            backward,
            window,
            convention,
        } => cutting(forward, backward, *window, *convention),
        Command::Verify {
            suite,
            window,
            records,
            mutant,
        } => verify(*suite, cli, *window, *records, mutant.as_deref()),
        Command::Render {
            tessellation,
            max_denominator,
            geodesic,
            output,
            re_min,
            re_max,
            im_max,
        } => {
            let t = match tessellation {
                TessellationArg::Farey => evenfarey::cutting::Tessellation::Farey,
                TessellationArg::Even => evenfarey::cutting::Tessellation::Even,
            };
            let geodesic = match geodesic {
                None => None,
                Some(g) => {
                    let (f, b) = g
                        .split_once(':')
                        .ok_or_else(|| Failure::Usage("geodesic must be forward:backward".into()))?;
                    Some((parse(f)?, parse(b)?))
                }
            };
            let view = svg::View {
                re_min: *re_min,
                re_max: *re_max,
                im_max: *im_max,
            };
            let out = svg::render(t, *max_denominator, geodesic.as_ref(), &view)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            std::fs::write(output, &out.document)
                .map_err(|e| Failure::Usage(format!("{}: {e}", output.display())))?;
            emit(json!({
                "output": output.display().to_string(),
                "edges": out.counts,
                "labels": out.labels,
            }));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            emit(json!({"error": msg}));
            ExitCode::from(2)
        }
    }
}
