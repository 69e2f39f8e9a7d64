//! `curvecount`: counts of plane curves from the command line.

mod cache;
mod output;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use curvecount_core::{
    charnum, genus_smooth, nd_classical, CharNum, Degree, DegreeCoeff, Error, Excess, MemoTable,
    Pipelines, Source,
};
use num_bigint::BigInt;

use output::{write_records, Format, OutputRecord};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cache file {}: {reason}", path.display())]
    Cache { path: PathBuf, reason: String },
    #[error("invalid degree range `{0}`: expected `a..b` with 1 <= a <= b")]
    Range(String),
    #[error("methods disagree at d = {degree}: {details}")]
    Disagreement { degree: i64, details: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Disagreement { .. } | CliError::Core(Error::Disagreement { .. }) => 3,
            CliError::Core(Error::NonIntegral(_) | Error::NonExactDivision { .. }) => 3,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "curvecount", version, about = "Exact counts of plane curves")]
struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Memo cache for n_d values.
    #[arg(long, global = true, env = "CURVECOUNT_CACHE")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of rational degree-d curves through 3d - 1 general points.
    Nd {
        #[arg(long)]
        degree: i64,
        #[arg(long, value_enum, default_value_t = Method::Recursion)]
        method: Method,
    },
    /// A characteristic number, at one degree or as a polynomial in d.
    #[command(group(ArgGroup::new("deg").required(true).args(["degree", "symbolic"])))]
    Charnum {
        /// One of N1, N11, K1, K11, T1, N2, N21, K2, N3.
        name: String,
        #[arg(long)]
        degree: Option<i64>,
        #[arg(long)]
        symbolic: bool,
    },
    /// The table of characteristic numbers.
    Table {
        #[arg(value_enum)]
        which: TableKind,
        /// Inclusive range `a..b`; without it `general` prints polynomials.
        #[arg(long)]
        degree_range: Option<String>,
    },
    /// Genus of a smooth plane curve.
    Genus {
        #[arg(long)]
        degree: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursion,
    Unsym,
    Classical,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Quartics,
    General,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(records) => {
            let stdout = io::stdout();
            match write_records(&mut stdout.lock(), cli.format, &records) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<Vec<OutputRecord>, CliError> {
    match &cli.command {
        Command::Nd { degree, method } => cmd_nd(*degree, *method, cli.cache.as_deref()),
        Command::Charnum {
            name,
            degree,
            symbolic: _,
        } => cmd_charnum(name, *degree),
        Command::Table {
            which,
            degree_range,
        } => cmd_table(*which, degree_range.as_deref()),
        Command::Genus { degree } => {
            let start = Instant::now();
            let g = genus_smooth(*degree)?;
            let r = OutputRecord::new(
                "genus",
                &[("degree", degree.to_string())],
                g.to_string(),
                "adjunction",
            );
            Ok(vec![r.elapsed(start)])
        }
    }
}

fn cmd_nd(
    degree: i64,
    method: Method,
    cache: Option<&std::path::Path>,
) -> Result<Vec<OutputRecord>, CliError> {
    if degree < 1 {
        return Err(Error::InvalidDegree(degree).into());
    }
    let table = match cache {
        Some(path) => cache::load(path)?,
        None => MemoTable::new(),
    };
    let methods: Vec<Method> = match method {
        Method::All if degree <= 4 => vec![Method::Recursion, Method::Unsym, Method::Classical],
        Method::All => vec![Method::Recursion, Method::Unsym],
        m => vec![m],
    };
    let from_cache = table
        .get(degree as u32)
        .is_some_and(|(_, sources)| sources.contains(&Source::Cache));
    let mut records = Vec::new();
    let mut values: Vec<(&str, BigInt)> = Vec::new();
    for m in methods {
        let start = Instant::now();
        let (value, provenance) = match m {
            Method::Recursion => (
                table.nd(degree)?,
                if from_cache { "cache" } else { "recursion" },
            ),
            Method::Unsym => (table.nd_unsym(degree)?, "unsym"),
            Method::Classical => (nd_classical(degree)?, "classical"),
            Method::All => unreachable!("expanded above"),
        };
        let inputs = [
            ("degree", degree.to_string()),
            ("method", method_name(m).to_string()),
        ];
        records
            .push(OutputRecord::new("nd", &inputs, value.to_string(), provenance).elapsed(start));
        values.push((method_name(m), value));
    }
    if values.iter().any(|(_, v)| *v != values[0].1) {
        let details = values
            .iter()
            .map(|(m, v)| format!("{m} = {v}"))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(CliError::Disagreement { degree, details });
    }
    if let Some(path) = cache {
        cache::store(path, &table)?;
    }
    Ok(records)
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Recursion => "recursion",
        Method::Unsym => "unsym",
        Method::Classical => "classical",
        Method::All => "all",
    }
}

fn cmd_charnum(name: &str, degree: Option<i64>) -> Result<Vec<OutputRecord>, CliError> {
    let start = Instant::now();
    let name: CharNum = name.parse()?;
    let (d, shown) = match degree {
        Some(d) => (Degree::Numeric(d), d.to_string()),
        None => (Degree::Symbolic, "symbolic".to_string()),
    };
    let rec = charnum(name, d)?;
    let inputs = [("name", name.to_string()), ("degree", shown)];
    Ok(vec![OutputRecord::new(
        "charnum",
        &inputs,
        rec.value.to_string(),
        "pipeline",
    )
    .elapsed(start)])
}

fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Range(s.to_string());
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a < 1 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn row_records(
    which: &str,
    degree: &str,
    p: &Pipelines,
    keep: impl Fn(CharNum) -> bool,
) -> Vec<OutputRecord> {
    CharNum::ALL
        .into_iter()
        .filter(|n| keep(*n))
        .map(|name| {
            let inputs = [
                ("which", which.to_string()),
                ("degree", degree.to_string()),
                ("name", name.to_string()),
                ("min_degree", name.min_degree().to_string()),
            ];
            OutputRecord::new("table", &inputs, p.value(name).to_string(), "pipeline")
        })
        .collect()
}

fn cmd_table(which: TableKind, range: Option<&str>) -> Result<Vec<OutputRecord>, CliError> {
    let start = Instant::now();
    let mut records = Vec::new();
    match which {
        TableKind::Quartics => {
            if let Some(r) = range {
                return Err(CliError::Range(format!("{r} (quartics is fixed at d = 4)")));
            }
            let p = Pipelines::new(DegreeCoeff::constant(4))?;
            records.extend(row_records("quartics", "4", &p, |_| true));
            records.extend(audit_records(&p)?);
        }
        TableKind::General => match range {
            None => {
                let p = Pipelines::new(DegreeCoeff::var())?;
                records.extend(row_records("general", "symbolic", &p, |_| true));
            }
            Some(r) => {
                let (a, b) = parse_range(r)?;
                for d in a..=b {
                    let p = Pipelines::new(DegreeCoeff::constant(d))?;
                    records.extend(row_records("general", &d.to_string(), &p, |n| {
                        d >= n.min_degree()
                    }));
                }
            }
        },
    }
    let elapsed = start.elapsed().as_millis() as u64;
    for r in &mut records {
        r.elapsed_ms = elapsed;
    }
    Ok(records)
}

/// Intermediate counts of the quartic pipelines.
fn audit_records(p: &Pipelines) -> Result<Vec<OutputRecord>, CliError> {
    let mut out = Vec::new();
    let record = |quantity: String, value: &DegreeCoeff, provenance: &str| {
        let inputs = [
            ("which", "quartics".to_string()),
            ("degree", "4".to_string()),
            ("quantity", quantity),
        ];
        OutputRecord::new("table", &inputs, value.to_string(), provenance)
    };
    for e in Excess::ALL {
        out.push(record(
            format!("N({e})"),
            &p.excess_step(e).result()?,
            "audit:excess",
        ));
    }
    for name in [CharNum::N2, CharNum::N21, CharNum::K2, CharNum::N3] {
        let step = p.step(name).expect("multi-point counts have ledgers");
        out.push(record(
            format!("boundary({name})"),
            &step.boundary_total(),
            "audit:boundary",
        ));
        out.push(record(
            format!("euler({name})"),
            &step.euler_term,
            "audit:euler",
        ));
        out.push(record(
            format!("ordered({name})"),
            &step.ordered(),
            "audit:ordered",
        ));
    }
    Ok(out)
}
