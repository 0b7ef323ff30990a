mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qpoly::exactpoly::UniPoly;
use qpoly::jpoly::build_jtable;
use qpoly::oracles::{dump_forests, forest_enumerator_poly, parking_enumerator_poly, Ranking, Variant, DEFAULT_CAP};
use qpoly::qcalc::qbinomial;
use qpoly::qstirling::StirlingTriangle;
use qpoly::report::{Report, Status};
use qpoly::verify::{run_suite, Suite, VerifyOptions};
use qpoly::Error;
use serde_json::json;

use render::{render_poly, render_triangle, Format, Triangle};

/// Exact q-polynomial tables, queries and identity checks.
#[derive(Parser, Debug)]
#[command(name = "qpoly", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Base seed for seeded rankings.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Refuse brute-force enumerations with more candidates than this.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Render powers as `q^2` (the default).
    #[arg(long, global = true, conflicts_with = "unicode")]
    ascii: bool,
    /// Render powers with superscripts, e.g. `q²`.
    #[arg(long, global = true)]
    unicode: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the triangle of J_n^(r) for 1 <= r <= n <= n-max.
    Jtable(JtableArgs),
    /// Run a verification suite; exit 1 on the first failed identity.
    Verify(VerifyArgs),
    /// Compute one exact object.
    Query(QueryArgs),
    /// Write a table to a file or stdout.
    Export(ExportArgs),
}

#[derive(Args, Debug)]
struct JtableArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n_max: u64,
    /// Print the reciprocal polynomials instead.
    #[arg(long)]
    reciprocal: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..))]
    n_max: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QueryKind {
    Jpoly,
    Qstirling2,
    Qstirling1,
    Qbinomial,
    Parking,
    ForestStat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Standard,
    Reciprocal,
}

#[derive(Args, Debug)]
struct QueryArgs {
    #[arg(value_enum)]
    kind: QueryKind,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long)]
    m: Option<u64>,
    /// Root labels for forest-stat, e.g. `1,2`; defaults to `1..=r`.
    #[arg(long, value_delimiter = ',')]
    roots: Option<Vec<usize>>,
    /// increasing, decreasing or seeded:<u64>; defaults to increasing.
    #[arg(long, value_parser = parse_ranking)]
    rho: Option<Ranking>,
    #[arg(long, value_enum, default_value_t = VariantArg::Standard)]
    variant: VariantArg,
    /// For jpoly: the reciprocal polynomial.
    #[arg(long)]
    reciprocal: bool,
    /// For forest-stat: stream each forest as a JSON line on stdout; the
    /// enumerator then goes to stderr.
    #[arg(long)]
    dump_forests: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    Jpoly,
    Reciprocal,
    Qstirling2,
    Qstirling1,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[arg(long, value_enum, default_value_t = TableKind::Jpoly)]
    table: TableKind,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n_max: u64,
    /// Destination file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_ranking(s: &str) -> Result<Ranking, String> {
    s.parse()
}

/// Failure with its exit code: 1 identity, 2 usage, 3 cap.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition(_) | Error::Parse(_) | Error::NotInvertible(_) => 2,
            Error::CapExceeded { .. } => 3,
            Error::InexactDivision(_) | Error::Invariant(_) | Error::Io(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        // a closed pipe downstream (e.g. `| head`) is not an error
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure {
                code: 0,
                message: String::new(),
            };
        }
        Failure {
            code: 1,
            message: format!("i/o error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| usage(format!("--{flag} is required for this query")))
}

fn nonneg(value: i64, flag: &str) -> Result<usize, Failure> {
    usize::try_from(value).map_err(|_| usage(format!("--{flag} must be non-negative")))
}

fn to_usize(v: u64) -> usize {
    v as usize
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if f.code == 0 => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("qpoly: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let unicode = cli.unicode && !cli.ascii;
    match &cli.command {
        Command::Jtable(a) => {
            let kind = if a.reciprocal {
                TableKind::Reciprocal
            } else {
                TableKind::Jpoly
            };
            let t = triangle(kind, to_usize(a.n_max))?;
            out.write_all(render_triangle(&t, cli.format, unicode).as_bytes())?;
        }
        Command::Export(a) => {
            let t = triangle(a.table, to_usize(a.n_max))?;
            let text = render_triangle(&t, cli.format, unicode);
            match &a.output {
                Some(path) => File::create(path)?.write_all(text.as_bytes())?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Verify(a) => verify(cli, a, out)?,
        Command::Query(a) => query(cli, a, unicode, out)?,
    }
    Ok(())
}

fn triangle(kind: TableKind, n_max: usize) -> Result<Triangle, Failure> {
    let (symbol, entries): (&'static str, Vec<(usize, usize, UniPoly)>) = match kind {
        TableKind::Jpoly | TableKind::Reciprocal => {
            let mut table = build_jtable(n_max)?;
            let symbol = if matches!(kind, TableKind::Reciprocal) {
                table = table.reciprocal_table();
                "Jbar"
            } else {
                "J"
            };
            (symbol, table.entries().map(|(n, r, p)| (n, r, p.clone())).collect())
        }
        TableKind::Qstirling2 => (
            "S",
            StirlingTriangle::second_kind(n_max)
                .entries()
                .map(|(n, k, p)| (n, k, p.clone()))
                .collect(),
        ),
        TableKind::Qstirling1 => (
            "s",
            StirlingTriangle::first_kind(n_max)
                .entries()
                .map(|(n, k, p)| (n, k, p.clone()))
                .collect(),
        ),
    };
    Ok(Triangle { symbol, n_max, entries })
}

fn verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let opts = VerifyOptions {
        n_max: to_usize(a.n_max),
        seed: cli.seed,
        cap: cli.cap,
    };
    let report = run_suite(a.suite, &opts)?;
    match cli.format {
        Format::Json => {
            let doc = json!({
                "suite": a.suite.name(),
                "n_max": opts.n_max,
                "seed": opts.seed,
                "cap": opts.cap,
                "passed": report.passed(),
                "records": report,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        _ => write_summary(&report, a.suite, &opts, out)?,
    }
    match report.first_failure() {
        None => Ok(()),
        Some(rec) => Err(Failure {
            code: 1,
            message: format!(
                "identity {} failed at n = {}{}: {}",
                rec.identity,
                rec.n,
                rec.r.map(|r| format!(", r = {r}")).unwrap_or_default(),
                rec.detail.as_deref().unwrap_or("")
            ),
        }),
    }
}

/// One line per identity with pass/skip/fail counts, in first-seen order.
fn write_summary(report: &Report, suite: Suite, opts: &VerifyOptions, out: &mut dyn Write) -> io::Result<()> {
    let mut rows: Vec<(&str, [usize; 3])> = Vec::new();
    for rec in &report.records {
        let slot = match rows.iter().position(|(id, _)| *id == rec.identity) {
            Some(i) => i,
            None => {
                rows.push((&rec.identity, [0; 3]));
                rows.len() - 1
            }
        };
        let col = match rec.status {
            Status::Pass => 0,
            Status::Skipped => 1,
            Status::Fail => 2,
        };
        rows[slot].1[col] += 1;
    }
    writeln!(
        out,
        "suite {} n_max={} seed={} cap={}",
        suite.name(),
        opts.n_max,
        opts.seed,
        opts.cap
    )?;
    for rec in report.records.iter().filter(|r| r.identity == "ranking_seeds") {
        writeln!(out, "rankings: {}", rec.detail.as_deref().unwrap_or(""))?;
    }
    for (id, [p, s, f]) in &rows {
        let verdict = if *f > 0 { "FAIL" } else { "ok" };
        writeln!(out, "{verdict:4} {id}: {p} passed, {s} skipped, {f} failed")?;
    }
    let total = report.records.len();
    let failed = report.records.iter().filter(|r| r.status == Status::Fail).count();
    writeln!(out, "{} checks, {} failed", total, failed)
}

fn query(cli: &Cli, a: &QueryArgs, unicode: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let poly = match a.kind {
        QueryKind::Jpoly => {
            let n = nonneg(required(a.n, "n")?, "n")?;
            let r = to_usize(required(a.r, "r")?);
            if n == 0 {
                return Err(usage("--n must be at least 1"));
            }
            let table = build_jtable(n)?;
            if a.reciprocal {
                qpoly::jpoly::reciprocal(n, r, &table)?
            } else {
                table.get(n, r).clone()
            }
        }
        QueryKind::Qstirling2 | QueryKind::Qstirling1 => {
            let n = nonneg(required(a.n, "n")?, "n")?;
            let k = nonneg(required(a.k, "k")?, "k")?;
            if k > n {
                UniPoly::zero()
            } else if matches!(a.kind, QueryKind::Qstirling2) {
                StirlingTriangle::second_kind(n).get(n, k).clone()
            } else {
                StirlingTriangle::first_kind(n).get(n, k).clone()
            }
        }
        QueryKind::Qbinomial => qbinomial(required(a.n, "n")?, required(a.k, "k")?),
        QueryKind::Parking => {
            let m = to_usize(required(a.m, "m")?);
            let r = to_usize(required(a.r, "r")?);
            parking_enumerator_poly(m, r, cli.cap)?
        }
        QueryKind::ForestStat => {
            let n = nonneg(required(a.n, "n")?, "n")?;
            let roots = match (&a.roots, a.r) {
                (Some(roots), _) => roots.clone(),
                (None, Some(r)) => (1..=to_usize(r)).collect(),
                (None, None) => return Err(usage("forest-stat needs --roots or --r")),
            };
            let rho = a.rho.unwrap_or(Ranking::Increasing);
            let variant = match a.variant {
                VariantArg::Standard => Variant::Standard,
                VariantArg::Reciprocal => Variant::Reciprocal,
            };
            if a.dump_forests {
                let poly = dump_forests(n, &roots, rho, variant, cli.cap, out)?;
                eprint!("{}", render_poly(&poly, cli.format, unicode));
                return Ok(());
            }
            forest_enumerator_poly(n, &roots, rho, variant, cli.cap)?
        }
    };
    out.write_all(render_poly(&poly, cli.format, unicode).as_bytes())?;
    Ok(())
}
