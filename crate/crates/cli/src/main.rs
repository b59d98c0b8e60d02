use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nefmirror::catalog::{run_catalog, Catalog, CATALOG_ENV};
use nefmirror::invariants::verify_mirror_duality;
use nefmirror::io::{self, NefPartitionDoc};
use nefmirror::nefpart::{dualize, NefPartition};
use nefmirror::periods::{gkz_data, golden, serialize_operators, taut_system, Side, TautSystem};
use nefmirror::Error;

#[derive(Parser)]
#[command(
    name = "nefmirror",
    version,
    about = "Dual nef-partitions, double-cover invariants and period systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Primal,
    Dual,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Primal => Side::Primal,
            SideArg::Dual => Side::Dual,
        }
    }
}

/// A nef-partition file, or the name of a catalog entry.
#[derive(clap::Args)]
struct Source {
    #[arg(value_name = "INPUT", conflicts_with = "input")]
    positional: Option<String>,
    #[arg(long)]
    input: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Dual nef-partition with the fan of ∇.
    Dualize(Source),
    /// Euler characteristics and Hodge numbers of the double covers.
    Invariants(Source),
    /// GKZ matrix A and exponent β.
    Gkz {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = SideArg::Primal)]
        side: SideArg,
        /// Compare against the stored reference matrix.
        #[arg(long)]
        check: bool,
    },
    /// Tautological system for line bundles on projective space.
    Tautgen {
        /// Comma-separated bundle degrees.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        #[arg(long)]
        dim: usize,
        /// Compare against the stored reference operators.
        #[arg(long)]
        check: bool,
    },
    /// Run every catalog entry and golden check.
    Catalog {
        /// Catalog file; overrides the environment variable.
        #[arg(long, env = CATALOG_ENV)]
        catalog: Option<PathBuf>,
    },
}

/// Process exit codes.
#[derive(Debug)]
enum Failure {
    Internal(String),
    Input(String),
    Smoothness(String),
    Golden(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Input(_) => 2,
            Failure::Smoothness(_) => 3,
            Failure::Golden(_) => 4,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Internal(_) => "internal",
            Failure::Input(_) => "input",
            Failure::Smoothness(_) => "smoothness",
            Failure::Golden(_) => "golden_mismatch",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Internal(m)
            | Failure::Input(m)
            | Failure::Smoothness(m)
            | Failure::Golden(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let msg = e.to_string();
        match e {
            Error::NotSmooth(_) => Failure::Smoothness(msg),
            Error::Consistency(_) => Failure::Internal(msg),
            _ => Failure::Input(msg),
        }
    }
}

type Outcome = Result<String, Failure>;

fn load(source: &Source) -> Result<NefPartition, Failure> {
    let arg = source
        .positional
        .as_ref()
        .or(source.input.as_ref())
        .ok_or_else(|| Failure::Input("no input given".into()))?;
    let path = PathBuf::from(arg);
    if path.exists() {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        return Ok(io::nef_partition_from_json(&text)?);
    }
    let cat = Catalog::load()?;
    let doc: &NefPartitionDoc = cat
        .get(arg)
        .and_then(|e| e.nef_partition_doc())
        .ok_or_else(|| {
            Failure::Input(format!(
                "`{arg}` is neither a file nor a nef-partition catalog entry"
            ))
        })?;
    Ok(doc.build()?)
}

fn cmd_dualize(source: &Source, format: Format) -> Outcome {
    let np = load(source)?;
    let dual = dualize(&np)?;
    let doc = io::dual_to_json(&np, &dual)?;
    if format == Format::Json {
        return Ok(io::pretty(&doc));
    }
    let fmt_points = |v: &Value| -> String {
        v.as_array()
            .map(|a| {
                a.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .unwrap_or_default()
    };
    let mut s = String::from("# Dual nef-partition\n\n");
    let _ = writeln!(s, "∇ vertices: {}\n", fmt_points(&doc["delta_vertices"]));
    let _ = writeln!(
        s,
        "Rays of the fan of ∇: {}\n",
        fmt_points(&doc["fan"]["rays"])
    );
    for (k, part) in doc["parts"].as_array().into_iter().flatten().enumerate() {
        let _ = writeln!(
            s,
            "- part {k}: rays {part}, ∇_{k} vertices {}",
            fmt_points(&doc["nabla_parts"][k]["vertices"])
        );
    }
    Ok(s)
}

fn cmd_invariants(source: &Source, format: Format) -> Outcome {
    let np = load(source)?;
    let rep = verify_mirror_duality(&np)?;
    Ok(match format {
        Format::Json => io::pretty(&io::report_to_json(&rep)),
        Format::Md => io::report_markdown(&rep),
    })
}

fn cmd_gkz(source: &Source, side: Side, check: bool, format: Format) -> Outcome {
    let np = load(source)?;
    let data = gkz_data(&np, side)?;
    if check {
        let reference = match side {
            Side::Dual => golden::to_rows(&golden::SIX_LINES_DUAL_A),
            Side::Primal => golden::to_rows(&golden::LINE_CONIC_PRIMAL_A),
        };
        if !data.matches_up_to_group_permutation(&reference) {
            let (r, c) = data.shape();
            return Err(Failure::Golden(format!(
                "{r}×{c} matrix differs from the {}×{} reference",
                reference.len(),
                reference[0].len()
            )));
        }
    }
    Ok(match format {
        Format::Json => io::pretty(&io::gkz_to_json(&data)),
        Format::Md => format!("```\n{}```\n", data.render()),
    })
}

fn taut_json(sys: &TautSystem) -> Value {
    let strings = |ops: &[nefmirror::periods::DiffOperator]| {
        ops.iter().map(|o| o.to_string()).collect::<Vec<_>>()
    };
    json!({
        "variables": sys.vars.iter().map(|v| json!({"label": v.label, "bundle": v.bundle, "monomial": v.monomial})).collect::<Vec<_>>(),
        "euler": strings(&sys.euler),
        "symmetry": strings(&sys.symmetry),
        "boxes": strings(&sys.boxes),
    })
}

fn cmd_tautgen(degrees: &[u32], dim: usize, check: bool, format: Format) -> Outcome {
    let sys = taut_system(degrees, dim)?;
    if check {
        let missing = golden::missing_from(&sys)?;
        if !missing.is_empty() {
            return Err(Failure::Golden(format!(
                "{} reference operators missing, first: {}",
                missing.len(),
                missing[0]
            )));
        }
    }
    Ok(match format {
        Format::Json => io::pretty(&taut_json(&sys)),
        Format::Md => format!(
            "## Euler\n\n```\n{}```\n\n## Symmetry\n\n```\n{}```\n\n## Box\n\n```\n{}```\n",
            serialize_operators(&sys.euler),
            serialize_operators(&sys.symmetry),
            serialize_operators(&sys.boxes)
        ),
    })
}

fn cmd_catalog(path: Option<&PathBuf>) -> Outcome {
    let cat = match path {
        Some(p) => Catalog::from_path(p)?,
        None => Catalog::builtin(),
    };
    let summary = run_catalog(&cat);
    for w in &summary.warnings {
        eprintln!("warning: {w}");
    }
    let text = summary.render();
    if summary.passed() {
        Ok(text)
    } else {
        print!("{text}");
        let failed: Vec<&str> = summary
            .outcomes
            .iter()
            .filter(|o| !o.passed())
            .map(|o| o.name.as_str())
            .collect();
        Err(Failure::Golden(format!(
            "failing entries: {}",
            failed.join(", ")
        )))
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Dualize(s) => cmd_dualize(s, cli.format),
        Command::Invariants(s) => cmd_invariants(s, cli.format),
        Command::Gkz {
            source,
            side,
            check,
        } => cmd_gkz(source, (*side).into(), *check, cli.format),
        Command::Tautgen {
            degrees,
            dim,
            check,
        } => cmd_tautgen(degrees, *dim, *check, cli.format),
        Command::Catalog { catalog } => cmd_catalog(catalog.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(&cli).and_then(|text| match &cli.output {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", json!({ "error": f.kind(), "message": f.message() }));
            ExitCode::from(f.code())
        }
    }
}
