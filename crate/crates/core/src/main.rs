use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qverify::catalog::{self, ParamSet, ParamValue, Status, VerificationReport, DEFAULT_ORDER};
use qverify::limits::{self, RationalCase};
use qverify::qobjects::{divisor_count, odd_divisor_count, shifted_lambert};
use qverify::report::{rational_report, run_sweep, SweepOptions};
use qverify::series::{int, sum_terms, QLaurentSeries, QMonomial, Rational, DEFAULT_GUARD};

const EXIT_FAIL: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qverify",
    version,
    about = "Exact checker for q-series identities over truncated Laurent series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// List the series identities and the rational checks.
    Catalog {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify one identity at one parameter point.
    Check(CheckArgs),
    /// Verify the whole default grid.
    Sweep {
        #[arg(long, default_value_t = 4)]
        max_n: i64,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: i64,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON document here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Selects among the fixed substitution-point lists.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Record per-row timings (the document is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Compare Lambert-series coefficients with divisor counts.
    Divisor {
        #[arg(long, default_value_t = 100)]
        max: i64,
    },
}

#[derive(clap::Args)]
struct CheckArgs {
    #[arg(long)]
    id: String,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    l: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<QMonomial>,
    #[arg(long, allow_hyphen_values = true)]
    v: Option<QMonomial>,
    /// A monomial for series identities, a rational for rational checks.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<QMonomial>,
    /// Comma-separated rationals for `zeng_key`.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    a: Vec<Rational>,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Catalog { format } => {
            cmd_catalog(format);
            ExitCode::SUCCESS
        }
        Command::Check(args) => cmd_check(&args),
        Command::Sweep {
            max_n,
            order,
            jobs,
            out,
            seed,
            timings,
        } => cmd_sweep(
            SweepOptions {
                max_n,
                order,
                jobs,
                seed,
                timings,
            },
            out,
        ),
        Command::Divisor { max } => cmd_divisor(max),
    }
}

fn cmd_catalog(format: Format) {
    match format {
        Format::Json => {
            let doc = json!({ "series": catalog::list_identities(), "rational": limits::rational_checks() });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("listing serializes")
            );
        }
        Format::Text => {
            for d in catalog::registry() {
                println!("{:<48} {}", d.signature(), d.name);
            }
            println!();
            println!("rational:");
            for r in limits::rational_checks() {
                println!(
                    "  {:<46} {}",
                    format!("{}({})", r.id, r.params.join(", ")),
                    r.statement
                );
            }
        }
    }
}

fn print_row(row: &VerificationReport, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(row).expect("row serializes")
        ),
        Format::Text => {
            let order = row.order.map(|o| format!(" order {o}")).unwrap_or_default();
            let ms = row
                .elapsed_ms
                .map(|t| format!(" ({t} ms)"))
                .unwrap_or_default();
            match row.status {
                Status::Pass => println!("PASS {} {}{order}{ms}", row.identity, row.params),
                Status::Skipped => println!(
                    "SKIPPED {} {}: {}",
                    row.identity,
                    row.params,
                    row.skip_reason.as_deref().unwrap_or("")
                ),
                Status::Fail => {
                    println!("FAIL {} {}{order}{ms}", row.identity, row.params);
                    if let Some(m) = &row.first_mismatch {
                        let at = m.exponent.map(|e| format!(" at q^{e}")).unwrap_or_default();
                        println!("  first mismatch{at}: lhs {} rhs {}", m.lhs, m.rhs);
                    }
                    if let Some(d) = &row.detail {
                        println!("  {d}");
                    }
                }
            }
        }
    }
}

fn exit_for(status: Status) -> ExitCode {
    match status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(EXIT_FAIL),
        Status::Skipped => ExitCode::from(EXIT_INVALID),
    }
}

fn invalid(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INVALID)
}

fn cmd_check(args: &CheckArgs) -> ExitCode {
    let row = if limits::rational_checks().iter().any(|r| r.id == args.id) {
        match rational_case(args) {
            Ok(case) => rational_report(&case),
            Err(msg) => return invalid(msg),
        }
    } else {
        let d = match catalog::lookup(&args.id) {
            Ok(d) => d,
            Err(e) => return invalid(e),
        };
        let p = match series_params(args) {
            Ok(p) => p.ordered_by(d.params),
            Err(msg) => return invalid(msg),
        };
        catalog::verify(&args.id, &p, args.order)
    };
    print_row(&row, args.format);
    exit_for(row.status)
}

fn series_params(args: &CheckArgs) -> Result<ParamSet, String> {
    let mut p = ParamSet::new();
    for (name, v) in [("n", args.n), ("m", args.m), ("l", args.l)] {
        if let Some(v) = v {
            p.set(name, ParamValue::Int(v));
        }
    }
    let x = match &args.x {
        Some(s) => Some(s.parse::<QMonomial>().map_err(|e| format!("--x: {e}"))?),
        None => None,
    };
    for (name, v) in [("z", &args.z), ("v", &args.v), ("x", &x), ("y", &args.y)] {
        if let Some(v) = v {
            p.set(name, ParamValue::Monomial(v.clone()));
        }
    }
    if !args.a.is_empty() {
        return Err("--a applies only to zeng_key".into());
    }
    Ok(p)
}

fn rational_case(args: &CheckArgs) -> Result<RationalCase, String> {
    let need =
        |v: Option<i64>, name: &str| v.ok_or_else(|| format!("{} requires --{name}", args.id));
    let x = || -> Result<Rational, String> {
        let s = args
            .x
            .as_deref()
            .ok_or_else(|| format!("{} requires --x", args.id))?;
        s.parse().map_err(|_| format!("--x: not a rational: {s}"))
    };
    Ok(match args.id.as_str() {
        "trigo" => RationalCase::Trigo {
            n: need(args.n, "n")?,
        },
        "dilcher_noq" => RationalCase::DilcherNoq {
            m: need(args.m, "m")?,
            n: need(args.n, "n")?,
        },
        "multi_noq_xm" => RationalCase::MultiNoqXm {
            m: need(args.m, "m")?,
            n: need(args.n, "n")?,
        },
        "multi_noq" => RationalCase::MultiNoq {
            m: need(args.m, "m")?,
            n: need(args.n, "n")?,
            x: x()?,
        },
        "dilch2_noq" => RationalCase::Dilch2Noq {
            m: need(args.m, "m")?,
            n: need(args.n, "n")?,
            x: x()?,
        },
        "zeng_key" => {
            if args.a.is_empty() {
                return Err("zeng_key requires --a".into());
            }
            RationalCase::ZengKey {
                a: args.a.clone(),
                m: need(args.m, "m")?,
            }
        }
        other => return Err(format!("unknown identity: {other}")),
    })
}

fn cmd_sweep(opts: SweepOptions, out: Option<PathBuf>) -> ExitCode {
    if opts.max_n < 1 {
        return invalid("--max-n must be at least 1");
    }
    let doc = match run_sweep(&opts) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    };
    let t = doc.header.totals;
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, doc.to_json()) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INTERNAL);
            }
            println!("pass {} fail {} skipped {}", t.pass, t.fail, t.skipped);
        }
        None => {
            print!("{}", doc.to_json());
            eprintln!("pass {} fail {} skipped {}", t.pass, t.fail, t.skipped);
        }
    }
    for row in doc.rows.iter().filter(|r| r.status == Status::Fail) {
        eprintln!("FAIL {} {}", row.identity, row.params);
    }
    if t.fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_divisor(max: i64) -> ExitCode {
    if max < 1 {
        return invalid("--max must be at least 1");
    }
    let lambert = shifted_lambert(&QMonomial::one(), 0, 1, None, None, max);
    let odd = sum_terms(1, max, DEFAULT_GUARD, |k| {
        Ok(Some(
            QLaurentSeries::one(max)
                .shift(k)
                .scale(&int(2))
                .div_binomial(&int(1), 2 * k)?,
        ))
    });
    let (lambert, odd) = match (lambert, odd) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    };
    for n in 1..=max {
        let d = divisor_count(n as u64);
        let od = odd_divisor_count(n as u64);
        let (Ok(cd), Ok(co)) = (lambert.coeff(n), odd.coeff(n)) else {
            eprintln!("error: coefficient of q^{n} outside the window");
            return ExitCode::from(EXIT_INTERNAL);
        };
        if cd != int(d as i64) || co != int(2 * od as i64) {
            println!(
                "MISMATCH n={n}: d={d} coefficient {cd}, 2*odd_d={} coefficient {co}",
                2 * od
            );
            return ExitCode::from(EXIT_FAIL);
        }
        println!("n={n} d={d} odd_d={od}");
    }
    println!("all {max} coefficients match");
    ExitCode::SUCCESS
}
