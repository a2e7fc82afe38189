use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use interbody::arrangement::{central_arrangement, cocircuit_of, enumerate_chambers};
use interbody::convexity::{convexity_report, Verdict};
use interbody::io::{parse_vector, read_polytope};
use interbody::probe::seed_from_env;
use interbody::radial::{chamber_radial_piece, radial_value};
use interbody::rational::{fmt_decimal, fmt_rat};
use interbody::translation::affine_arrangement;
use interbody::{export, sweep, Error, Polytope, Result};

#[derive(Parser)]
#[command(name = "interbody", version, about = "Exact intersection bodies of convex polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convexity verdict for I(P + t) as JSON. Exit code 0 convex, 1 non-convex, 3 inconclusive.
    Report {
        polytope: PathBuf,
        /// Translation vector, e.g. "1/2,-1".
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// Exact radial function value in one direction.
    Radial {
        polytope: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Chambers of the central arrangement with their boundary pieces.
    Chambers { polytope: PathBuf },
    /// Hyperplanes of the central arrangement, or of L(P) with --affine.
    Arrangement {
        polytope: PathBuf,
        #[arg(long)]
        affine: bool,
    },
    /// Region, verdict and chamber count over a grid of planar translations.
    Sweep {
        polytope: PathBuf,
        /// "xmin:xmax:steps,ymin:ymax:steps"
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
    },
    /// Sampled boundary of IP: CSV polyline (d = 2) or OFF mesh (d = 3).
    Boundary {
        polytope: PathBuf,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write coordinates as exact "p/q" strings.
        #[arg(long)]
        exact: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Off,
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")));
}

fn report(p: &Polytope, t: Option<&str>) -> Result<ExitCode> {
    let p = match t {
        Some(t) => p.translate(&parse_vector(t)?)?,
        None => p.clone(),
    };
    let report = convexity_report(&p, seed_from_env())?;
    print_json(&report.to_json());
    Ok(ExitCode::from(match report.verdict {
        Verdict::Convex => 0,
        Verdict::NonConvex(_) => 1,
        Verdict::Inconclusive => 3,
    }))
}

fn radial(p: &Polytope, x: &str) -> Result<()> {
    let x = parse_vector(x)?;
    let value = radial_value(p, &x)?;
    let cocircuit = cocircuit_of(p, &x).ok().map(|s| s.to_string());
    print_json(&json!({
        "x": x,
        "value": fmt_rat(&value),
        "decimal": fmt_decimal(&value),
        "cocircuit": cocircuit,
    }));
    Ok(())
}

fn chambers(p: &Polytope) -> Result<()> {
    let mut out = Vec::new();
    for c in enumerate_chambers(p)? {
        let piece = match chamber_radial_piece(p, &c) {
            Ok(piece) => json!({
                "numerator": piece.p.to_string(),
                "denominator": piece.q.to_string(),
                "boundary": piece.boundary.to_string(),
                "degree": piece.degree(),
            }),
            Err(Error::EmptySection) => Value::Null,
            Err(e) => return Err(e),
        };
        out.push(json!({
            "cocircuit": c.cocircuit,
            "witness": c.witness,
            "crossed_edges": c.crossed_edges,
            "piece": piece,
        }));
    }
    print_json(&Value::Array(out));
    Ok(())
}

fn arrangement(p: &Polytope, affine: bool) -> Result<()> {
    let v = if affine {
        json!(affine_arrangement(p))
    } else {
        json!(central_arrangement(p))
    };
    print_json(&v);
    Ok(())
}

fn boundary(p: &Polytope, samples: usize, format: Option<Format>, exact: bool) -> Result<()> {
    let format = format.unwrap_or(if p.dim() == 3 { Format::Off } else { Format::Csv });
    let text = match (format, p.dim()) {
        (Format::Csv, 2) => export::to_csv(&export::boundary_2d(p, samples)?, exact),
        (Format::Off, 3) => export::to_off(&export::boundary_3d(p, samples)?, exact),
        (_, d) => return Err(Error::UnsupportedDimension(d)),
    };
    emit(&text);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Report { polytope, t } => report(&read_polytope(polytope)?, t.as_deref()),
        Command::Radial { polytope, x } => radial(&read_polytope(polytope)?, &x).map(|_| ExitCode::SUCCESS),
        Command::Chambers { polytope } => chambers(&read_polytope(polytope)?).map(|_| ExitCode::SUCCESS),
        Command::Arrangement { polytope, affine } => {
            arrangement(&read_polytope(polytope)?, affine).map(|_| ExitCode::SUCCESS)
        }
        Command::Sweep { polytope, grid } => {
            let (xs, ys) = sweep::parse_grid(&grid)?;
            let rows = sweep::sweep(&read_polytope(polytope)?, &xs, &ys)?;
            emit(&sweep::to_csv(&rows));
            Ok(ExitCode::SUCCESS)
        }
        Command::Boundary {
            polytope,
            samples,
            format,
            exact,
        } => boundary(&read_polytope(polytope)?, samples, format, exact).map(|_| ExitCode::SUCCESS),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
