//! Command-line interface.
//!
//! Exit codes: 0 success; 1 a verification suite found a violation or
//! discrepancy; 2 input or usage error; 3 resource budget exceeded.

use std::ffi::OsString;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use wtoll_core::convexity::{self, ConvexityKind};
use wtoll_core::generate::generate_named;
use wtoll_core::invariants::{self, GeometryError, GeometryMode, InvariantError};
use wtoll_core::oracle::OracleBudget;
use wtoll_core::recognition;
use wtoll_core::walks::WalkKind;
use wtoll_core::{Graph, VertexSet};

use crate::formats::{self, InputFormat};
use crate::render;
use crate::suites;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

/// Environment variable overriding the default oracle budget (`max_n`).
pub const BUDGET_ENV: &str = "WTOLL_MAX_N";

#[derive(Parser)]
#[command(
    name = "wtoll",
    about = "Weakly toll convexity toolkit: intervals, hulls, extreme vertices, \
             interval-graph recognition, invariants, and verification suites",
    version
)]
struct Cli {
    #[command(flatten)]
    input: InputArgs,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Graph source: a file path or '-' for standard input
    #[arg(long, global = true, default_value = "-")]
    input: String,

    /// Input format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::EdgeList)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    EdgeList,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Geodesic,
    Monophonic,
    Toll,
    WeaklyToll,
}

impl From<KindArg> for ConvexityKind {
    fn from(k: KindArg) -> ConvexityKind {
        match k {
            KindArg::Geodesic => ConvexityKind::Geodesic,
            KindArg::Monophonic => ConvexityKind::Monophonic,
            KindArg::Toll => ConvexityKind::Toll,
            KindArg::WeaklyToll => ConvexityKind::WeaklyToll,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Chordal,
    Interval,
    ProperInterval,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Structural,
    Bruteforce,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Interval of a vertex pair under the chosen convexity
    Interval {
        u: String,
        v: String,
        #[arg(long, value_enum, default_value_t = KindArg::WeaklyToll)]
        kind: KindArg,
        /// Also print a witness walk through this vertex (toll / weakly-toll)
        #[arg(long)]
        witness: Option<String>,
    },
    /// Convex hull of a comma-separated vertex set, with optional trace
    Hull {
        set: String,
        #[arg(long, value_enum, default_value_t = KindArg::WeaklyToll)]
        kind: KindArg,
        #[arg(long)]
        trace: bool,
    },
    /// Convexity test for a comma-separated vertex set
    Convex {
        set: String,
        #[arg(long, value_enum, default_value_t = KindArg::WeaklyToll)]
        kind: KindArg,
    },
    /// Extreme vertices of a convex set
    Extreme {
        set: String,
        #[arg(long, value_enum, default_value_t = KindArg::WeaklyToll)]
        kind: KindArg,
    },
    /// Weakly toll number
    Wtn {
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Weakly toll hull number
    Wth {
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Graph-class recognition with certificates
    Recognize {
        #[arg(long, value_enum, default_value_t = ClassArg::Interval)]
        class: ClassArg,
    },
    /// Convex-geometry verdict (structural, brute-force, or both)
    Geometry {
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Emit a named graph (path, cycle, complete, claw, bull, star122, bn,
    /// fig5_1, fig5_2) as an edge list
    Generate { name: String, params: Vec<usize> },
    /// Run a verification suite
    Verify {
        /// One of: oracle-equivalence, chain, geometry-dichotomy, trees,
        /// prop7, thm9, corollary10, paper-examples
        suite: String,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn resource(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_RESOURCE,
            message: message.into(),
        }
    }
}

pub fn run<I>(args: I) -> ExitCode
where
    I: IntoIterator,
    I::Item: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version as "errors" with exit code 0
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn budget_from(max_n: Option<usize>) -> OracleBudget {
    let mut budget = OracleBudget::default();
    if let Ok(v) = std::env::var(BUDGET_ENV) {
        if let Ok(n) = v.parse::<usize>() {
            budget.max_n = n;
        }
    }
    if let Some(n) = max_n {
        budget.max_n = n;
    }
    budget
}

fn read_graph(input: &InputArgs) -> Result<Graph, Failure> {
    let text = if input.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&input.input)
            .map_err(|e| Failure::usage(format!("reading {}: {e}", input.input)))?
    };
    let format = match input.format {
        FormatArg::EdgeList => InputFormat::EdgeList,
        FormatArg::Json => InputFormat::Json,
    };
    formats::parse_graph(&text, format).map_err(|e| Failure::usage(e.to_string()))
}

fn lookup(g: &Graph, label: &str) -> Result<usize, Failure> {
    g.vertex(label)
        .ok_or_else(|| Failure::usage(format!("unknown vertex '{label}'")))
}

fn parse_set(g: &Graph, spec: &str) -> Result<VertexSet, Failure> {
    let mut s = g.empty_set();
    for label in spec.split(',').filter(|t| !t.is_empty()) {
        s.insert(lookup(g, label.trim())?);
    }
    Ok(s)
}

fn set_text(g: &Graph, s: &VertexSet) -> String {
    format!("{{{}}}", g.labels_of(s).join(", "))
}

fn map_invariant_error(e: InvariantError) -> Failure {
    match e {
        InvariantError::Budget(o) => Failure::resource(o.to_string()),
        other => Failure::usage(other.to_string()),
    }
}

fn dispatch(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Interval { u, v, kind, witness } => {
            let g = read_graph(&cli.input)?;
            let (iu, iv) = (lookup(&g, u)?, lookup(&g, v)?);
            let ckind: ConvexityKind = (*kind).into();
            let pi = convexity::interval(&g, iu, iv, ckind);
            let witness_walk = match witness {
                None => None,
                Some(x) => {
                    let wk = match ckind {
                        ConvexityKind::Toll => WalkKind::Tolled,
                        ConvexityKind::WeaklyToll => WalkKind::WeaklyToll,
                        other => {
                            return Err(Failure::usage(format!(
                                "witness walks exist for toll and weakly-toll intervals, not {other}"
                            )));
                        }
                    };
                    Some((x.clone(), convexity::witness_walk(&g, iu, iv, lookup(&g, x)?, wk)))
                }
            };
            if cli.json {
                let mut obj = render::interval_json(&g, iu, iv, ckind.name(), &pi);
                if let Some((x, w)) = &witness_walk {
                    obj["witness"] = json!({
                        "vertex": x,
                        "walk": w.as_ref().map(|w| render::walk_json(&g, w)),
                    });
                }
                println!("{obj}");
            } else {
                let tag = match ckind {
                    ConvexityKind::Geodesic => "I",
                    ConvexityKind::Monophonic => "J",
                    ConvexityKind::Toll => "T",
                    ConvexityKind::WeaklyToll => "WT",
                };
                println!("{tag}({u}, {v}) = {}", set_text(&g, &pi.vertices));
                if !pi.connected {
                    println!("note: endpoints lie in different components");
                }
                if let Some((x, w)) = &witness_walk {
                    match w {
                        Some(w) => println!(
                            "witness through {x}: {}",
                            w.vertices.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ")
                        ),
                        None => println!("no witness walk through {x}"),
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Hull { set, kind, trace } => {
            let g = read_graph(&cli.input)?;
            let s = parse_set(&g, set)?;
            let tr = convexity::hull(&g, &s, (*kind).into());
            if cli.json {
                println!("{}", render::hull_json(&g, &tr, *trace));
            } else {
                println!("hull = {}", set_text(&g, tr.hull()));
                if *trace {
                    for (i, step) in tr.iterates.iter().enumerate() {
                        println!("  step {i}: {}", set_text(&g, step));
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Convex { set, kind } => {
            let g = read_graph(&cli.input)?;
            let s = parse_set(&g, set)?;
            let violation = convexity::convexity_violation(&g, &s, (*kind).into());
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "convex": violation.is_none(),
                        "violation": violation.map(|v| json!({
                            "u": g.label(v.u), "v": g.label(v.v), "escape": g.label(v.escape),
                        })),
                    })
                );
            } else {
                match violation {
                    None => println!("convex"),
                    Some(v) => println!(
                        "not convex: interval of ({}, {}) leaks {}",
                        g.label(v.u),
                        g.label(v.v),
                        g.label(v.escape)
                    ),
                }
            }
            Ok(EXIT_OK)
        }
        Command::Extreme { set, kind } => {
            let g = read_graph(&cli.input)?;
            let s = parse_set(&g, set)?;
            match convexity::extreme_vertices(&g, &s, (*kind).into()) {
                Ok(extreme) => {
                    if cli.json {
                        println!("{}", json!({ "extreme": render::labels(&g, &extreme) }));
                    } else {
                        println!("extreme = {}", set_text(&g, &extreme));
                    }
                    Ok(EXIT_OK)
                }
                Err(e) => Err(Failure::usage(e.to_string())),
            }
        }
        Command::Wtn { max_n } => {
            let g = read_graph(&cli.input)?;
            let v = invariants::wtn(&g, &budget_from(*max_n)).map_err(map_invariant_error)?;
            if cli.json {
                println!("{}", render::invariant_json(&g, "wtn", &v));
            } else {
                println!(
                    "wtn = {} (method {}, witness {})",
                    v.value,
                    v.method,
                    set_text(&g, &v.witness)
                );
            }
            Ok(EXIT_OK)
        }
        Command::Wth { max_n } => {
            let g = read_graph(&cli.input)?;
            let v = invariants::wth(&g, &budget_from(*max_n)).map_err(map_invariant_error)?;
            if cli.json {
                println!("{}", render::invariant_json(&g, "wth", &v));
            } else {
                println!(
                    "wth = {} (method {}, witness {})",
                    v.value,
                    v.method,
                    set_text(&g, &v.witness)
                );
            }
            Ok(EXIT_OK)
        }
        Command::Recognize { class } => {
            let g = read_graph(&cli.input)?;
            let (verdict, payload) = match class {
                ClassArg::Chordal => {
                    let c = recognition::check_chordal(&g);
                    (
                        matches!(c, recognition::Chordality::Chordal { .. }),
                        render::chordality_json(&g, &c),
                    )
                }
                ClassArg::Interval => {
                    let r = recognition::recognize_interval(&g);
                    (r.is_positive(), render::interval_recognition_json(&g, &r))
                }
                ClassArg::ProperInterval => {
                    let r = recognition::recognize_proper_interval(&g);
                    (r.is_positive(), render::proper_recognition_json(&g, &r))
                }
            };
            if cli.json {
                println!("{payload}");
            } else {
                let class_name = payload["class"].as_str().unwrap_or("?").to_string();
                println!("{}: {}", class_name, if verdict { "yes" } else { "no" });
                println!("certificate: {}", payload["certificate"]);
            }
            Ok(EXIT_OK)
        }
        Command::Geometry { mode, max_n } => {
            let g = read_graph(&cli.input)?;
            let m = match mode {
                ModeArg::Structural => GeometryMode::Structural,
                ModeArg::Bruteforce => GeometryMode::Bruteforce,
                ModeArg::Both => GeometryMode::Both,
            };
            let limit = max_n.unwrap_or(convexity::DEFAULT_ENUMERATION_BOUND);
            match invariants::convex_geometry(&g, m, limit) {
                Ok(e) => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({
                                "convex_geometry": e.is_geometry,
                                "structural": e.structural.as_ref()
                                    .map(|r| render::proper_recognition_json(&g, r)),
                                "counterexample": e.bruteforce.as_ref().and_then(|c| c.as_ref())
                                    .map(|ce| render::geometry_counterexample_json(&g, ce)),
                            })
                        );
                    } else {
                        println!("convex geometry: {}", if e.is_geometry { "yes" } else { "no" });
                        if let Some(Some(ce)) = &e.bruteforce {
                            println!(
                                "counterexample: hull of extreme {} of convex {} is {}",
                                set_text(&g, &ce.extreme),
                                set_text(&g, &ce.set),
                                set_text(&g, &ce.hull_of_extreme)
                            );
                        }
                    }
                    Ok(EXIT_OK)
                }
                Err(GeometryError::TooLarge(t)) => Err(Failure::resource(t.to_string())),
                Err(GeometryError::Divergence(e)) => {
                    eprintln!("error: structural and brute-force verdicts disagree");
                    if let Some(r) = &e.structural {
                        eprintln!("  structural: {}", r.is_positive());
                    }
                    Ok(EXIT_VIOLATION)
                }
            }
        }
        Command::Generate { name, params } => {
            let g = generate_named(name, params).map_err(|e| Failure::usage(e.to_string()))?;
            if cli.json {
                println!("{}", formats::graph_json(&g));
            } else {
                print!("{}", formats::to_edge_list(&g));
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, jobs, max_n } => {
            let budget = budget_from(*max_n);
            let report = suites::run_suite(suite, *jobs, &budget).ok_or_else(|| {
                Failure::usage(format!(
                    "unknown suite '{suite}'; expected one of: {}",
                    suites::SUITE_NAMES.join(", ")
                ))
            })?;
            if cli.json {
                for record in &report.records {
                    println!("{record}");
                }
                println!(
                    "{}",
                    json!({
                        "suite": report.name,
                        "instances": report.instances,
                        "checks": report.checks,
                        "violations": report.violations,
                        "discrepancies": report.discrepancies,
                        "notes": report.notes,
                        "passed": report.clean(),
                    })
                );
            } else {
                println!(
                    "suite {}: {} instances, {} checks, {} violations, {} discrepancies",
                    report.name,
                    report.instances,
                    report.checks,
                    report.violations.len(),
                    report.discrepancies.len()
                );
                for v in &report.violations {
                    println!("violation: {v}");
                }
                for d in &report.discrepancies {
                    println!("discrepancy: {d}");
                }
                for n in &report.notes {
                    println!("note: {n}");
                }
            }
            Ok(if report.clean() { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}
