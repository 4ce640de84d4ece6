//! Command-line front end. Exit status: 0 success, 1 validation failure,
//! 2 parse failure, 3 domain error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::decision::decide;
use crate::error::{Error, Result};
use crate::problem::{PairedFile, ProblemFile};
use crate::report::ReportFile;

#[derive(Debug, Parser)]
#[command(name = "ifp", version, about = "Intuitionistic fuzzy parameterized soft sets and decisions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Aggregate a problem file and pick the opportune alternative
    Decide {
        /// Problem file (JSON)
        input: PathBuf,
        /// Aligned table or JSON report
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Decimal places in display columns
        #[arg(long, default_value_t = 3)]
        precision: u32,
        /// Allow non-empty approximations for parameters outside X
        #[arg(long)]
        relaxed: bool,
        /// Write the report here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply a set operation to one or two problem files
    Op {
        name: OpName,
        /// One problem file for complement, two for the rest
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Allow non-empty approximations for parameters outside X
        #[arg(long)]
        relaxed: bool,
        /// Write the result here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List every invariant violation in a problem file
    Validate {
        /// Problem file (JSON)
        input: PathBuf,
        /// Allow non-empty approximations for parameters outside X
        #[arg(long)]
        relaxed: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpName {
    Union,
    Intersection,
    Complement,
    Subset,
    Equal,
    AndProduct,
    OrProduct,
}

impl OpName {
    fn arity(self) -> usize {
        match self {
            OpName::Complement => 1,
            _ => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            OpName::Union => "union",
            OpName::Intersection => "intersection",
            OpName::Complement => "complement",
            OpName::Subset => "subset",
            OpName::Equal => "equal",
            OpName::AndProduct => "and-product",
            OpName::OrProduct => "or-product",
        }
    }
}

/// Runs a parsed command and returns the process exit status.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Decide {
            input,
            format,
            precision,
            relaxed,
            output,
        } => cmd_decide(&input, format, precision, relaxed)
            .and_then(|text| emit(&text, output.as_deref(), stdout)),
        Command::Op {
            name,
            inputs,
            relaxed,
            output,
        } => cmd_op(name, &inputs, relaxed).and_then(|text| emit(&text, output.as_deref(), stdout)),
        Command::Validate { input, relaxed } => {
            return match cmd_validate(&input, relaxed) {
                Ok(diags) if diags.is_empty() => {
                    let _ = writeln!(stdout, "ok");
                    0
                }
                Ok(diags) => {
                    for d in &diags {
                        let _ = writeln!(stdout, "{d}");
                    }
                    1
                }
                Err(e) => fail(&e, stderr),
            };
        }
    };
    match result {
        Ok(()) => 0,
        Err(e) => fail(&e, stderr),
    }
}

fn fail(e: &Error, stderr: &mut dyn Write) -> i32 {
    let _ = writeln!(stderr, "error: {e}");
    e.class().exit_code()
}

fn emit(text: &str, output: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    let io = |path: &Path| {
        let path = path.display().to_string();
        move |source| Error::Io { path, source }
    };
    match output {
        Some(path) => std::fs::write(path, text).map_err(io(path)),
        None => stdout.write_all(text.as_bytes()).map_err(io(Path::new("<stdout>"))),
    }
}

pub fn cmd_decide(input: &Path, format: Format, precision: u32, relaxed: bool) -> Result<String> {
    let set = ProblemFile::read(input)?.to_omega(relaxed)?;
    let report = ReportFile::new(&decide(&set)?, precision);
    Ok(match format {
        Format::Table => report.to_table(),
        Format::Machine => report.to_json(),
    })
}

pub fn cmd_op(op: OpName, inputs: &[PathBuf], relaxed: bool) -> Result<String> {
    if inputs.len() != op.arity() {
        return Err(Error::Arity {
            op: op.name().to_string(),
            expected: op.arity(),
            got: inputs.len(),
        });
    }
    let files = inputs
        .iter()
        .map(ProblemFile::read)
        .collect::<Result<Vec<_>>>()?;

    if matches!(op, OpName::AndProduct | OpName::OrProduct) {
        let a = files[0].to_soft_set()?;
        let b = files[1].to_soft_set()?;
        let product = if op == OpName::AndProduct {
            a.and_product(&b)?
        } else {
            a.or_product(&b)?
        };
        return Ok(PairedFile::from_paired(&product).to_json());
    }

    let sets = files
        .iter()
        .map(|f| f.to_omega(relaxed))
        .collect::<Result<Vec<_>>>()?;
    let result = match op {
        OpName::Union => sets[0].union(&sets[1])?,
        OpName::Intersection => sets[0].intersection(&sets[1])?,
        OpName::Complement => sets[0].complement(),
        OpName::Subset => return Ok(format!("{}\n", sets[0].is_subset(&sets[1])?)),
        OpName::Equal => return Ok(format!("{}\n", sets[0].approx_eq(&sets[1])?)),
        OpName::AndProduct | OpName::OrProduct => unreachable!(),
    };
    Ok(ProblemFile::from_omega(&result).to_json())
}

/// Diagnostics for a file; only a parse failure is an `Err`.
pub fn cmd_validate(input: &Path, relaxed: bool) -> Result<Vec<Error>> {
    Ok(ProblemFile::read(input)?.diagnostics(relaxed))
}
