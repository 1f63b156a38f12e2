//! Command-line front end for the `degree_lists` library.
//!
//! One binary, `deglist`, with subcommands for feasibility checks,
//! realization, exact counting, enumeration, transfer paths, lower bounds,
//! minconvex lists, and exhaustive extremal experiments.
//!
//! Exit codes: 0 on success, 1 when a checked or realized list is
//! infeasible, 2 on invalid input.

use std::ffi::OsString;
use std::fs;

use clap::{Parser, Subcommand, ValueEnum};
use degree_lists::{
    count_realizations, emit_list_json, emit_list_text, enumerate_realizations, is_feasible,
    lower_bound, minconvex_paired, muirhead_path, parse_list, realize, staircase_family, validate,
    verify_extremal_max, BoundRule, CountMethod, Error, IntList, ListInput, Pairing,
    RealizationKind, DEFAULT_GUARD,
};

#[derive(Parser)]
#[command(
    name = "deglist",
    version,
    about = "Degree-list feasibility, realization, counting, and extremal experiments",
    propagate_version = true
)]
struct Cli {
    /// Reserved for future randomized modes; validated and ignored.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Graph,
    Loopdigraph,
    Digraph,
}

impl From<KindArg> for RealizationKind {
    fn from(k: KindArg) -> RealizationKind {
        match k {
            KindArg::Graph => RealizationKind::Graph,
            KindArg::Loopdigraph => RealizationKind::LoopDigraph,
            KindArg::Digraph => RealizationKind::Digraph,
        }
    }
}

/// Adjective used in human-readable verdicts ("graphic", "not graphic", ...).
fn kind_adjective(kind: RealizationKind) -> &'static str {
    match kind {
        RealizationKind::Graph => "graphic",
        RealizationKind::LoopDigraph => "loop-digraphic",
        RealizationKind::Digraph => "digraphic",
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitArg {
    Json,
    Matrix,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a list is realizable for the chosen kind.
    Check(CheckArgs),
    /// Construct one realization (matrix output by default).
    Realize(RealizeArgs),
    /// Count realizations exactly (within the size guard).
    Count(CountArgs),
    /// Print every realization (within the size guard).
    Enumerate(EnumerateArgs),
    /// Print the canonical transfer path from one degree list to another.
    Path(PathArgs),
    /// Print the structural lower bound on the loop-digraph count.
    Bound(BoundArgs),
    /// Print the minconvex list for given length, total, and kind.
    Minconvex(MinconvexArgs),
    /// Run an exhaustive experiment and report it as TSV.
    Experiment(ExperimentArgs),
}

#[derive(clap::Args)]
struct CheckArgs {
    /// Input file, or "-" for stdin.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Also forbid zero degrees / (0,0) pairs.
    #[arg(long)]
    strict: bool,
    /// Output format (default: human-readable text).
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
}

#[derive(clap::Args)]
struct RealizeArgs {
    /// Input file, or "-" for stdin.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Output format (default: matrix text).
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
    /// Append one line per transfer with the chosen shift row.
    #[arg(long)]
    trace: bool,
    /// Append one line per transfer with every admissible shift row.
    #[arg(long)]
    enumerate_shifts: bool,
}

#[derive(clap::Args)]
struct CountArgs {
    /// Input file, or "-" for stdin.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Output format (default: a bare decimal integer).
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
    /// Size guard for enumeration-backed operations.
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    limit: usize,
}

#[derive(clap::Args)]
struct EnumerateArgs {
    /// Input file, or "-" for stdin.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Output format (default: matrices separated by blank lines).
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
    /// Emit at most this many realizations.
    #[arg(long)]
    max: Option<usize>,
    /// Size guard for enumeration-backed operations.
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    limit: usize,
}

#[derive(clap::Args)]
struct PathArgs {
    /// Target degree list (nonincreasing): inline "2,2,2,0" or a file.
    a: String,
    /// Starting degree list that majorizes the target: inline or a file.
    aprime: String,
    /// Output format (default: one transfer per line).
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
}

#[derive(clap::Args)]
struct BoundArgs {
    /// Input file, or "-" for stdin.
    #[arg(default_value = "-")]
    input: String,
    /// Output format (default: a bare decimal integer).
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
}

#[derive(clap::Args)]
struct MinconvexArgs {
    /// List length.
    #[arg(long)]
    n: usize,
    /// Total to distribute.
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// "identity", "opposed", or a 1-based permutation like "2,1,3"
    /// (default: opposed for digraphs, identity otherwise).
    #[arg(long)]
    pairing: Option<String>,
    /// Output format (default: plain-text pairs).
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    /// Minconvex lists maximize the realization count at fixed (n, m).
    MinconvexMax,
    /// The staircase family has exponentially many loop-digraph realizations.
    Staircase,
}

#[derive(clap::Args)]
struct ExperimentArgs {
    #[arg(long, value_enum)]
    theorem: TheoremArg,
    /// List length.
    #[arg(long)]
    n: usize,
    /// Total to distribute (minconvex-max only).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Output format (default: tsv).
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
    /// Size guard for enumeration-backed operations.
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    limit: usize,
    /// Worker threads for counting sweeps.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

/// Parse `argv`, run the selected subcommand, and return the process exit
/// code: 0 on success, 1 when a checked or realized list is infeasible, 2 on
/// invalid input.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    if let Some(seed) = cli.seed {
        eprintln!("warning: --seed {seed} is reserved and has no effect; no behavior is randomized");
    }
    let outcome = match &cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Realize(args) => cmd_realize(args),
        Command::Count(args) => cmd_count(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Path(args) => cmd_path(args),
        Command::Bound(args) => cmd_bound(args),
        Command::Minconvex(args) => cmd_minconvex(args),
        Command::Experiment(args) => cmd_experiment(args),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn load_input(path: &str) -> Result<ListInput, String> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| format!("reading stdin: {e}"))?
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?
    };
    parse_list(&text).map_err(|e| e.to_string())
}

/// A `path` argument: inline comma-separated degrees, or a file of degrees.
fn load_degree_list(arg: &str) -> Result<IntList, String> {
    let inline = !arg.is_empty()
        && arg
            .split(',')
            .all(|t| !t.is_empty() && t.chars().all(|c| c.is_ascii_digit()));
    if inline {
        let values = arg
            .split(',')
            .map(|t| t.parse::<usize>().map_err(|e| format!("{t}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        return IntList::new(values).map_err(|e| e.to_string());
    }
    match load_input(arg)? {
        ListInput::Degrees(d) => Ok(d),
        ListInput::Pairs(_) => Err(format!("{arg}: path expects degree lists, not pairs")),
    }
}

fn unsupported_emit(cmd: &str) -> String {
    format!("--emit value not supported by `{cmd}`")
}

fn join_rows_1based(rows: &[usize]) -> String {
    rows.iter()
        .map(|k| (k + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_check(args: &CheckArgs) -> Result<i32, String> {
    let input = load_input(&args.input)?;
    let kind: RealizationKind = args.kind.into();
    let report = validate(&input, kind, args.strict);
    let result = is_feasible(&input, kind);
    match args.emit {
        Some(EmitArg::Json) => {
            let doc = serde_json::json!({
                "kind": kind.name(),
                "validation": report,
                "check": result,
            });
            println!("{doc}");
        }
        Some(_) => return Err(unsupported_emit("check")),
        None => {
            for v in &report.violations {
                println!("violation: {v}");
            }
            if result.feasible {
                println!("{}", kind_adjective(kind));
            } else {
                println!("not {}", kind_adjective(kind));
                if let Some(reason) = &result.reason {
                    println!("reason: {reason}");
                }
            }
        }
    }
    if args.strict && !report.is_valid() {
        return Err("strict validation failed".into());
    }
    Ok(if result.feasible { 0 } else { 1 })
}

fn cmd_realize(args: &RealizeArgs) -> Result<i32, String> {
    let input = load_input(&args.input)?;
    let kind: RealizationKind = args.kind.into();
    let r = match realize(&input, kind) {
        Ok(r) => r,
        Err(Error::Infeasible) => {
            eprintln!("not realizable: the list is not {}", kind_adjective(kind));
            return Ok(1);
        }
        Err(e) => return Err(e.to_string()),
    };
    match args.emit {
        Some(EmitArg::Json) => {
            let steps: Vec<_> = r
                .steps
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "transfer": s.transfer.to_string(),
                        "row": s.row + 1,
                        "admissible": s.admissible.iter().map(|k| k + 1).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "kind": kind.name(),
                "matrix": r.matrix.to_text().lines().collect::<Vec<_>>(),
                "start": r.start.to_text().lines().collect::<Vec<_>>(),
                "steps": steps,
                "perm": r.perm.iter().map(|k| k + 1).collect::<Vec<_>>(),
            });
            println!("{doc}");
        }
        Some(EmitArg::Matrix) | None => {
            print!("{}", r.matrix.to_text());
            if args.trace || args.enumerate_shifts {
                println!();
                for s in &r.steps {
                    if args.enumerate_shifts {
                        println!(
                            "{} row {} (admissible {})",
                            s.transfer,
                            s.row + 1,
                            join_rows_1based(&s.admissible)
                        );
                    } else {
                        println!("{} row {}", s.transfer, s.row + 1);
                    }
                }
            }
        }
        Some(EmitArg::Tsv) => return Err(unsupported_emit("realize")),
    }
    Ok(0)
}

fn method_label(method: &CountMethod) -> String {
    match method {
        CountMethod::Exhaustive => "exhaustive".into(),
        CountMethod::BoundOnly(BoundRule::DisjointTransfers { path_length }) => {
            format!("bound-only: disjoint transfers, 2^{path_length}")
        }
        CountMethod::BoundOnly(BoundRule::PathSteps { path_length }) => {
            format!("bound-only: path steps, 1 + {path_length}")
        }
    }
}

fn cmd_count(args: &CountArgs) -> Result<i32, String> {
    let input = load_input(&args.input)?;
    let kind: RealizationKind = args.kind.into();
    let res = count_realizations(&input, kind, args.limit).map_err(|e| e.to_string())?;
    match args.emit {
        Some(EmitArg::Json) => {
            let doc = serde_json::json!({
                "kind": kind.name(),
                "exact": res.exact.as_ref().map(|v| v.to_string()),
                "lower_bound": res.lower_bound.to_string(),
                "method": method_label(&res.method),
            });
            println!("{doc}");
        }
        Some(_) => return Err(unsupported_emit("count")),
        None => match &res.exact {
            Some(v) => println!("{v}"),
            None => println!(">= {}", res.lower_bound),
        },
    }
    Ok(0)
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<i32, String> {
    let input = load_input(&args.input)?;
    let kind: RealizationKind = args.kind.into();
    let matrices =
        enumerate_realizations(&input, kind, args.max, args.limit).map_err(|e| e.to_string())?;
    match args.emit {
        Some(EmitArg::Json) => {
            let doc = serde_json::json!({
                "kind": kind.name(),
                "matrices": matrices
                    .iter()
                    .map(|m| m.to_text().lines().map(String::from).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            });
            println!("{doc}");
        }
        Some(_) => return Err(unsupported_emit("enumerate")),
        None => {
            for (idx, m) in matrices.iter().enumerate() {
                if idx > 0 {
                    println!();
                }
                print!("{}", m.to_text());
            }
        }
    }
    Ok(0)
}

fn cmd_path(args: &PathArgs) -> Result<i32, String> {
    let a = load_degree_list(&args.a)?;
    let aprime = load_degree_list(&args.aprime)?;
    let path = muirhead_path(&a, &aprime).map_err(|e| e.to_string())?;
    match args.emit {
        Some(EmitArg::Json) => {
            let doc = serde_json::json!({
                "start": path.start.values(),
                "steps": path.steps.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "intermediates": path
                    .intermediates
                    .iter()
                    .map(|l| l.values().to_vec())
                    .collect::<Vec<_>>(),
                "kappa": path.kappa(),
            });
            println!("{doc}");
        }
        Some(_) => return Err(unsupported_emit("path")),
        None => {
            for t in &path.steps {
                println!("{t}");
            }
        }
    }
    Ok(0)
}

fn cmd_bound(args: &BoundArgs) -> Result<i32, String> {
    let input = load_input(&args.input)?;
    let res = match lower_bound(&input.as_pairs()) {
        Ok(res) => res,
        Err(Error::Infeasible) => {
            eprintln!("no bound: the list is not loop-digraphic");
            return Ok(1);
        }
        Err(e) => return Err(e.to_string()),
    };
    match args.emit {
        Some(EmitArg::Json) => {
            let doc = serde_json::json!({
                "lower_bound": res.lower_bound.to_string(),
                "method": method_label(&res.method),
            });
            println!("{doc}");
        }
        Some(_) => return Err(unsupported_emit("bound")),
        None => println!("{}", res.lower_bound),
    }
    Ok(0)
}

fn parse_pairing(spec: Option<&str>, kind: RealizationKind) -> Result<Pairing, String> {
    match spec {
        None => Ok(match kind {
            RealizationKind::Digraph => Pairing::Opposed,
            _ => Pairing::Identity,
        }),
        Some("identity") => Ok(Pairing::Identity),
        Some("opposed") => Ok(Pairing::Opposed),
        Some(perm) => {
            let sigma = perm
                .split(',')
                .map(|t| match t.trim().parse::<usize>() {
                    Ok(0) | Err(_) => Err(format!(
                        "--pairing: expected \"identity\", \"opposed\", or 1-based indices, got {t}"
                    )),
                    Ok(v) => Ok(v - 1),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Pairing::Permutation(sigma))
        }
    }
}

fn cmd_minconvex(args: &MinconvexArgs) -> Result<i32, String> {
    let kind: RealizationKind = args.kind.into();
    let pairing = parse_pairing(args.pairing.as_deref(), kind)?;
    let pairs = minconvex_paired(args.n, args.m, kind, &pairing).map_err(|e| e.to_string())?;
    let out = ListInput::Pairs(pairs);
    match args.emit {
        Some(EmitArg::Json) => println!("{}", emit_list_json(&out)),
        Some(_) => return Err(unsupported_emit("minconvex")),
        None => print!("{}", emit_list_text(&out)),
    }
    Ok(0)
}

fn cmd_experiment(args: &ExperimentArgs) -> Result<i32, String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| e.to_string())?;
    match args.theorem {
        TheoremArg::MinconvexMax => {
            let m = args.m.ok_or("--m is required for minconvex-max")?;
            let kind: RealizationKind =
                args.kind.ok_or("--kind is required for minconvex-max")?.into();
            let report = pool
                .install(|| verify_extremal_max(args.n, m, kind, args.limit))
                .map_err(|e| e.to_string())?;
            match args.emit {
                Some(EmitArg::Json) => {
                    let doc = serde_json::json!({
                        "theorem": "minconvex-max",
                        "kind": kind.name(),
                        "n": report.n,
                        "m": report.m,
                        "holds": report.holds,
                        "max_count": report.max_count.to_string(),
                        "minconvex_list": report.minconvex_list.to_string(),
                        "minconvex_count": report.minconvex_count.to_string(),
                        "entries": report.entries.iter().map(|e| {
                            serde_json::json!({
                                "list": e.list.to_string(),
                                "count": e.count.to_string(),
                                "is_minconvex": e.is_minconvex,
                                "is_max": e.is_max,
                            })
                        }).collect::<Vec<_>>(),
                    });
                    println!("{doc}");
                }
                Some(EmitArg::Tsv) | None => {
                    println!(
                        "# theorem: minconvex-max\tkind: {}\tn: {}\tm: {}\tholds: {}",
                        kind.name(),
                        report.n,
                        report.m,
                        report.holds
                    );
                    println!("list\tcount\tis_minconvex\tis_max");
                    for e in &report.entries {
                        println!(
                            "{}\t{}\t{}\t{}",
                            e.list, e.count, e.is_minconvex, e.is_max
                        );
                    }
                }
                Some(EmitArg::Matrix) => return Err(unsupported_emit("experiment")),
            }
            Ok(0)
        }
        TheoremArg::Staircase => {
            let (threshold, target) = staircase_family(args.n).map_err(|e| e.to_string())?;
            let kind = RealizationKind::LoopDigraph;
            let count_of = |pairs: &degree_lists::PairedList| {
                count_realizations(&ListInput::Pairs(pairs.clone()), kind, args.limit)
                    .map_err(|e| e.to_string())
            };
            let (threshold_res, target_res) =
                pool.install(|| -> Result<_, String> {
                    Ok((count_of(&threshold)?, count_of(&target)?))
                })?;
            let target_bound = lower_bound(&target).map_err(|e| e.to_string())?;
            let one = num_bigint::BigUint::from(1usize);
            let floor = one.clone() << (args.n - 2);
            let holds = threshold_res.exact.as_ref() == Some(&one)
                && target_res
                    .exact
                    .as_ref()
                    .is_some_and(|exact| *exact >= floor && target_bound.lower_bound <= *exact);
            match args.emit {
                Some(EmitArg::Json) => {
                    let doc = serde_json::json!({
                        "theorem": "staircase",
                        "n": args.n,
                        "holds": holds,
                        "threshold": {
                            "list": threshold.to_string(),
                            "exact": threshold_res.exact.as_ref().map(|v| v.to_string()),
                        },
                        "target": {
                            "list": target.to_string(),
                            "exact": target_res.exact.as_ref().map(|v| v.to_string()),
                            "lower_bound": target_bound.lower_bound.to_string(),
                            "floor": floor.to_string(),
                        },
                    });
                    println!("{doc}");
                }
                Some(EmitArg::Tsv) | None => {
                    println!("# theorem: staircase\tn: {}\tholds: {}", args.n, holds);
                    println!("role\tlist\texact\tlower_bound\tfloor");
                    let fmt_exact = |v: &Option<num_bigint::BigUint>| {
                        v.as_ref().map_or("-".to_string(), |v| v.to_string())
                    };
                    println!(
                        "threshold\t{}\t{}\t-\t-",
                        threshold,
                        fmt_exact(&threshold_res.exact)
                    );
                    println!(
                        "target\t{}\t{}\t{}\t{}",
                        target,
                        fmt_exact(&target_res.exact),
                        target_bound.lower_bound,
                        floor
                    );
                }
                Some(EmitArg::Matrix) => return Err(unsupported_emit("experiment")),
            }
            Ok(0)
        }
    }
}
