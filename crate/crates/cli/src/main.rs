//! `flatbialg`: flat Lie algebras, their 1-cocycles and Lie bialgebra
//! structures, with exact rational arithmetic.
//!
//! Exit status is 0 when the report passes, 1 for a mathematical failure or
//! anomaly, and 2 for unusable input.

mod commands;
mod files;
mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use flatbialg::{Algebra, MultivectorQ};

use commands::Mode;
use files::{invalid, read_algebra, read_bivector, read_cochain, InputError, InputResult};
use report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "flatbialg", version, about = "Lie bialgebra structures on flat Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format; json is the stable one.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimensions, degeneracy, and the flatness self-checks.
    Info {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
    },
    /// Invariant multivectors.
    Invariants {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        degree: u8,
        /// Defaults to `both` in degree 2 and `nullspace` in degree 3.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Dimension of the 1-cocycle space, from two assembly paths.
    Cocycles {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
        /// Write a cocycle basis as a JSON array of cochain files.
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Dimension of the coboundary space, from two paths.
    Coboundaries {
        #[arg(short = 'a', long = "algebra")]
        algebra: PathBuf,
        /// Write a coboundary basis as a JSON array of cochain files.
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Split a cocycle as ad r0 + R.
    Decompose {
        #[arg(short = 'a', long = "algebra")]
        algebra: Option<PathBuf>,
        #[arg(short = 'x', long = "cochain")]
        cochain: PathBuf,
    },
    /// Decide whether a cocycle makes the algebra a Lie bialgebra.
    CheckBialgebra {
        #[arg(short = 'a', long = "algebra")]
        algebra: Option<PathBuf>,
        #[arg(short = 'x', long = "cochain")]
        cochain: PathBuf,
    },
    /// Schouten bracket of one bivector with itself, or of two bivectors.
    Schouten {
        #[arg(short = 'a', long = "algebra")]
        algebra: Option<PathBuf>,
        #[arg(short = 'r', long = "bivector", required = true)]
        bivectors: Vec<PathBuf>,
    },
    /// Classify a bivector by its Schouten square.
    Cybe {
        #[arg(short = 'a', long = "algebra")]
        algebra: Option<PathBuf>,
        #[arg(short = 'r', long = "bivector")]
        bivector: PathBuf,
    },
    /// Run the built-in verification suite.
    VerifyPaper {
        /// dim3, dim4, lemma, theorem, schouten-table, jacobiator-forms or all.
        #[arg(long = "case", default_value = "all")]
        case: String,
    },
}

fn optional_algebra(path: &Option<PathBuf>) -> InputResult<Option<Algebra>> {
    path.as_deref().map(read_algebra).transpose()
}

fn bivectors(algebra: Option<Algebra>, paths: &[PathBuf]) -> InputResult<(Algebra, Vec<MultivectorQ>)> {
    let mut g = algebra;
    let mut out = Vec::with_capacity(paths.len());
    for p in paths {
        let (h, r) = read_bivector(p, g.as_ref())?;
        if g.as_ref().is_some_and(|g| *g != h) {
            return Err(invalid(
                p.display().to_string(),
                "bivector files describe different algebras",
            ));
        }
        g = Some(h);
        out.push(r);
    }
    Ok((g.expect("at least one bivector"), out))
}

fn run(command: &Command) -> InputResult<Report> {
    match command {
        Command::Info { algebra } => Ok(commands::info(&read_algebra(algebra)?)),
        Command::Invariants {
            algebra,
            degree,
            mode,
        } => commands::invariants_cmd(&read_algebra(algebra)?, *degree as usize, *mode),
        Command::Cocycles { algebra, basis } => {
            commands::cocycles(&read_algebra(algebra)?, basis.as_deref())
        }
        Command::Coboundaries { algebra, basis } => {
            commands::coboundaries(&read_algebra(algebra)?, basis.as_deref())
        }
        Command::Decompose { algebra, cochain } => {
            let (g, xi) = read_cochain(cochain, optional_algebra(algebra)?.as_ref())?;
            Ok(commands::decompose(&g, &xi))
        }
        Command::CheckBialgebra { algebra, cochain } => {
            let (g, xi) = read_cochain(cochain, optional_algebra(algebra)?.as_ref())?;
            Ok(commands::check_bialgebra(&g, &xi))
        }
        Command::Schouten { algebra, bivectors: paths } => {
            let (g, rs) = bivectors(optional_algebra(algebra)?, paths)?;
            commands::schouten_cmd(&g, &rs)
        }
        Command::Cybe { algebra, bivector } => {
            let (g, rs) = bivectors(optional_algebra(algebra)?, std::slice::from_ref(bivector))?;
            Ok(commands::cybe(&g, &rs[0]))
        }
        Command::VerifyPaper { case } => commands::verify_paper(case),
    }
}

fn emit(text: &str, output: Option<&Path>) -> InputResult<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| InputError::Io {
            path: path.to_owned(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| InputError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.command).and_then(|report| {
        let text = match cli.format {
            Format::Json => report.to_json(),
            Format::Text => report.to_text(),
        };
        emit(&text, cli.output.as_deref())?;
        Ok(report.exit_code())
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
