//! Command-line harness: enumeration, construction, operator application,
//! and the named verification suites with JSON reports.

mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;

use specht_core::chart::InvariantChart;
use specht_core::decomp::{build_idempotent_set, graded_direct_sum_check};
use specht_core::dunkl::dunkl_apply;
use specht_core::error::Error;
use specht_core::group::WreathGroup;
use specht_core::parse::{parse_poly, parse_rational, parse_shape, parse_tableau};
use specht_core::roots::{type_b, CouplingMap};
use specht_core::specht::higher_specht;
use specht_core::tableaux::enumerate_standard_tableaux;

use suites::{run_suite, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "specht",
    about = "Exact verification harness for higher Specht polynomials, Dunkl-Opdam operators, and the decomposition of the polynomial ring",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite and emit a JSON report.
    Suite(SuiteArgs),
    /// Print a canonical object: specht | idempotent | delta | tableaux.
    Print(PrintArgs),
    /// Construct one higher Specht polynomial.
    Specht(SpechtArgs),
    /// Apply a Dunkl-Opdam operator to a polynomial.
    Dunkl(DunklArgs),
    /// Degree-graded decomposition report for the signed-permutation group.
    Decompose(DecomposeArgs),
}

#[derive(Args)]
struct SuiteArgs {
    /// root-axioms | specht-basis | coinvariant-hilbert | dunkl-commute |
    /// olshanetsky-L | chart-derivations | idempotents |
    /// graded-decomposition | orbit-membership
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 6)]
    degree: u32,
    /// Coupling on the sign-change reflections, as p/q.
    #[arg(long = "c-short", default_value = "1/2", allow_hyphen_values = true)]
    c_short: String,
    /// Coupling on the transposition-type reflections, as p/q.
    #[arg(long = "c-long", default_value = "1/3", allow_hyphen_values = true)]
    c_long: String,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct PrintArgs {
    /// specht | idempotent | delta | tableaux
    #[arg(long)]
    kind: String,
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long)]
    shape: Option<String>,
    /// Index of the primitive idempotent within the shape (kind=idempotent).
    #[arg(long, default_value_t = 0)]
    index: usize,
    #[arg(long = "S")]
    source: Option<String>,
    #[arg(long = "T")]
    filling: Option<String>,
}

#[derive(Args)]
struct SpechtArgs {
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long)]
    shape: String,
    #[arg(long = "S")]
    source: Option<String>,
    #[arg(long = "T")]
    filling: Option<String>,
}

#[derive(Args)]
struct DunklArgs {
    /// Root system family; only B is built.
    #[arg(long, default_value = "B")]
    group: String,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long = "c-short", default_value = "1/2", allow_hyphen_values = true)]
    c_short: String,
    #[arg(long = "c-long", default_value = "1/3", allow_hyphen_values = true)]
    c_long: String,
    /// Polynomial to apply the operator to, e.g. "x1^3".
    #[arg(long)]
    apply: String,
    /// Coordinate direction of the operator, 1-based.
    #[arg(long, default_value_t = 1)]
    dir: usize,
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 6)]
    degree: u32,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Suite(args) => suite_command(args),
        Command::Print(args) => print_command(args).map(|()| ExitCode::SUCCESS),
        Command::Specht(args) => specht_command(args).map(|()| ExitCode::SUCCESS),
        Command::Dunkl(args) => dunkl_command(args).map(|()| ExitCode::SUCCESS),
        Command::Decompose(args) => decompose_command(args).map(|()| ExitCode::SUCCESS),
    }
}

fn init_workers() {
    if let Ok(workers) = std::env::var("SPECHT_WORKERS") {
        if let Ok(count) = workers.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(count.max(1))
                .build_global();
        }
    }
}

fn suite_command(args: SuiteArgs) -> Result<ExitCode, Error> {
    init_workers();
    let cfg = SuiteConfig {
        suite: args.suite,
        r: args.r,
        n: args.n,
        degree: args.degree,
        c_short: parse_rational(&args.c_short)?,
        c_long: parse_rational(&args.c_long)?,
        seed: args.seed,
    };
    let report = run_suite(&cfg)?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    match &args.json {
        Some(path) => std::fs::write(path, &json)
            .map_err(|e| Error::InvalidParameter(format!("cannot write {path:?}: {e}")))?,
        None => println!("{json}"),
    }
    let failures = report.checks.iter().filter(|c| c.status == "fail").count();
    let inconclusive = report.inconclusive();
    eprintln!(
        "suite {}: {} checks, {failures} failed, {inconclusive} inconclusive",
        report.suite,
        report.checks.len()
    );
    Ok(if report.failed() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn source_and_filling(
    group: &WreathGroup,
    shape_text: &str,
    source: Option<&str>,
    filling: Option<&str>,
) -> Result<(specht_core::tableaux::RTableau, specht_core::tableaux::RTableau), Error> {
    let shape = parse_shape(shape_text)?;
    if shape.r() != group.r as usize || shape.n() != group.n {
        return Err(Error::InvalidParameter(format!(
            "shape {shape_text} does not match (r,n)=({},{})",
            group.r, group.n
        )));
    }
    let first = enumerate_standard_tableaux(&shape)
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidParameter("shape has no standard tableau".into()))?;
    let s = match source {
        Some(text) => parse_tableau(text)?,
        None => first.clone(),
    };
    let t = match filling {
        Some(text) => parse_tableau(text)?,
        None => s.clone(),
    };
    Ok((s, t))
}

fn specht_command(args: SpechtArgs) -> Result<(), Error> {
    let group = WreathGroup::new(args.r, args.n);
    let (s, t) = source_and_filling(
        &group,
        &args.shape,
        args.source.as_deref(),
        args.filling.as_deref(),
    )?;
    let f = higher_specht(&group, &s, &t)?;
    println!("{}", f.value);
    Ok(())
}

fn print_command(args: PrintArgs) -> Result<(), Error> {
    match args.kind.as_str() {
        "delta" => {
            let chart = InvariantChart::new(args.n)?;
            println!("{}", chart.delta);
        }
        "specht" => {
            let shape = args
                .shape
                .ok_or_else(|| Error::InvalidParameter("--shape required".into()))?;
            let group = WreathGroup::new(args.r, args.n);
            let (s, t) = source_and_filling(
                &group,
                &shape,
                args.source.as_deref(),
                args.filling.as_deref(),
            )?;
            println!("{}", higher_specht(&group, &s, &t)?.value);
        }
        "tableaux" => {
            let shape = parse_shape(
                &args
                    .shape
                    .ok_or_else(|| Error::InvalidParameter("--shape required".into()))?,
            )?;
            for t in enumerate_standard_tableaux(&shape) {
                println!("{}", t.canonical_string());
            }
        }
        "idempotent" => {
            let shape = parse_shape(
                &args
                    .shape
                    .ok_or_else(|| Error::InvalidParameter("--shape required".into()))?,
            )?;
            let group = WreathGroup::new(args.r, args.n);
            let set = build_idempotent_set(&group)?;
            let shape_index = set
                .shapes
                .iter()
                .position(|s| s == &shape)
                .ok_or_else(|| Error::InvalidParameter(format!("shape {shape} not found")))?;
            let e = set
                .primitive
                .iter()
                .find(|(si, ti, _)| *si == shape_index && *ti == args.index)
                .map(|(_, _, e)| e)
                .ok_or_else(|| {
                    Error::InvalidParameter(format!("no idempotent {} at {shape}", args.index))
                })?;
            println!("{e}");
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown kind {other:?}; valid kinds: specht, idempotent, delta, tableaux"
            )));
        }
    }
    Ok(())
}

fn dunkl_command(args: DunklArgs) -> Result<(), Error> {
    if args.group != "B" {
        return Err(Error::InvalidParameter(format!(
            "only the B family is built, got {:?}",
            args.group
        )));
    }
    let rs = type_b(args.n);
    let c = CouplingMap::new(parse_rational(&args.c_short)?, parse_rational(&args.c_long)?);
    if args.dir < 1 || args.dir > args.n {
        return Err(Error::IndexOutOfRange(args.dir, args.n));
    }
    let f = parse_poly(&args.apply, args.n, 2)?;
    let mut dir = vec![BigRational::from_integer(0.into()); args.n];
    dir[args.dir - 1] = BigRational::from_integer(1.into());
    println!("{}", dunkl_apply(&dir, &f, &rs, &c)?);
    Ok(())
}

fn decompose_command(args: DecomposeArgs) -> Result<(), Error> {
    init_workers();
    let group = WreathGroup::new(2, args.n);
    let set = build_idempotent_set(&group)?;
    let validation = set.validate()?;
    let projection = set.idempotent_on_specht()?;
    let graded = graded_direct_sum_check(&set, args.degree)?;

    #[derive(serde::Serialize)]
    struct ShapeOut {
        shape: String,
        dimension: usize,
        source: String,
        generators: Vec<String>,
    }
    #[derive(serde::Serialize)]
    struct DegreeOut {
        degree: u32,
        ranks: Vec<usize>,
        dimension: usize,
        pass: bool,
    }
    #[derive(serde::Serialize)]
    struct DecomposeOut {
        n: usize,
        degree_bound: u32,
        shapes: Vec<ShapeOut>,
        degrees: Vec<DegreeOut>,
        invariant_checks: Vec<crate::report::CheckOut>,
        all_pass: bool,
    }

    let shapes: Vec<ShapeOut> = set
        .reps
        .iter()
        .map(|rep| ShapeOut {
            shape: rep.shape.canonical_string(),
            dimension: rep.dim,
            source: rep.source.canonical_string(),
            generators: rep.basis.iter().map(|f| f.value.to_string()).collect(),
        })
        .collect();
    let degrees: Vec<DegreeOut> = graded
        .rows
        .iter()
        .map(|(d, ranks, dim)| DegreeOut {
            degree: *d,
            ranks: ranks.clone(),
            dimension: *dim,
            pass: ranks.iter().sum::<usize>() == *dim,
        })
        .collect();
    let mut invariant_checks = Vec::new();
    let mut all_pass = true;
    for record in validation
        .checks
        .iter()
        .chain(projection.checks.iter())
        .chain(graded.report.checks.iter())
    {
        let status = match record.status {
            specht_core::report::CheckStatus::Pass => "pass",
            specht_core::report::CheckStatus::Fail => {
                all_pass = false;
                "fail"
            }
            specht_core::report::CheckStatus::Inconclusive => "inconclusive",
        };
        invariant_checks.push(crate::report::CheckOut {
            name: record.name.clone(),
            status: status.into(),
            witness: record.witness.clone(),
            millis: 0,
        });
    }
    let out = DecomposeOut {
        n: args.n,
        degree_bound: args.degree,
        shapes,
        degrees,
        invariant_checks,
        all_pass,
    };
    let json = serde_json::to_string_pretty(&out).expect("report serializes");
    match &args.json {
        Some(path) => std::fs::write(path, &json)
            .map_err(|e| Error::InvalidParameter(format!("cannot write {path:?}: {e}")))?,
        None => println!("{json}"),
    }
    Ok(())
}
