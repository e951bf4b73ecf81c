use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use finlift::characterize::SubjectKind;
use finlift::notation::{
    encode_result_line, execute, parse, print_result, validate, Environment, NotationError, Program, Query,
    QueryResult,
};
use finlift::{Property, Side, DEFAULT_SIZE_CAP};

use crate::verify::verify_paper;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "finlift", version, about = "Lifting properties of maps between finite spaces")]
pub struct Cli {
    /// Size bound for universes, enumeration and verify-paper (hard cap 5)
    #[arg(long, global = true, default_value_t = 3)]
    pub max_size: usize,

    /// Emit JSON records instead of text
    #[arg(long, global = true)]
    pub machine: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every query in a .lift file
    Run {
        #[arg(long = "input")]
        input: Option<PathBuf>,
        path: Option<PathBuf>,
    },
    /// Decide LEFT |> RIGHT
    Lift {
        left: String,
        right: String,
        /// File whose declarations are in scope
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Decide a property through its lifting characterization
    Check {
        property: String,
        name: String,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Orthogonal class of the given maps over the universe of size --max-size
    Orthogonal {
        side: String,
        maps: Vec<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Count labeled preorders of each size up to --max-size
    Enumerate,
    /// List the monotone maps SOURCE -> TARGET
    Hom {
        source: String,
        target: String,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check every lifting characterization against its direct definition
    VerifyPaper,
}

fn load(path: &Path, err: &mut dyn Write) -> Result<Program, i32> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return Err(EXIT_INPUT);
        }
    };
    parse(&text).map_err(|e| report_notation(path, &e, err))
}

fn report_notation(path: &Path, e: &NotationError, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: {}: {e}", path.display());
    EXIT_INPUT
}

fn environment(input: Option<&Path>, err: &mut dyn Write) -> Result<Environment, i32> {
    match input {
        None => Ok(Environment::builtins()),
        Some(path) => {
            let program = load(path, err)?;
            validate(&program).map_err(|e| report_notation(path, &e, err))
        }
    }
}

fn emit(results: &[QueryResult], machine: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut status = EXIT_OK;
    for r in results {
        let text = if machine {
            format!("{}\n", encode_result_line(r))
        } else {
            print_result(r)
        };
        let _ = out.write_all(text.as_bytes());
        for v in r.outcome.violations() {
            let _ = writeln!(err, "internal invariant violated: {v}");
            status = EXIT_INVARIANT;
        }
    }
    status
}

fn run_queries(queries: &[Query], env: &Environment, machine: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut results = Vec::with_capacity(queries.len());
    for q in queries {
        match execute(q, env) {
            Ok(r) => results.push(r),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INPUT;
            }
        }
    }
    emit(&results, machine, out, err)
}

fn need_map(env: &Environment, name: &str, err: &mut dyn Write) -> Result<(), i32> {
    if env.maps.contains_key(name) {
        Ok(())
    } else {
        let _ = writeln!(err, "error: unknown map `{name}`");
        Err(EXIT_INPUT)
    }
}

fn need_space(env: &Environment, name: &str, err: &mut dyn Write) -> Result<(), i32> {
    if env.spaces.contains_key(name) {
        Ok(())
    } else {
        let _ = writeln!(err, "error: unknown space `{name}`");
        Err(EXIT_INPUT)
    }
}

/// Runs a parsed command line, writing results to `out` and diagnostics to
/// `err`. Returns the process exit status.
pub fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match try_dispatch(cli, out, err) {
        Ok(status) | Err(status) => status,
    }
}

fn try_dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, i32> {
    if cli.max_size > DEFAULT_SIZE_CAP {
        let _ = writeln!(err, "error: --max-size {} exceeds the hard cap {DEFAULT_SIZE_CAP}", cli.max_size);
        return Err(EXIT_INPUT);
    }
    let size = cli.max_size;
    let machine = cli.machine;
    match &cli.command {
        Command::Run { input, path } => {
            let path = match (input, path) {
                (Some(p), None) | (None, Some(p)) => p,
                _ => {
                    let _ = writeln!(err, "error: `run` takes exactly one input file (positional or --input)");
                    return Err(EXIT_INPUT);
                }
            };
            Ok(run_file(path, machine, out, err))
        }
        Command::Lift { left, right, input } => {
            let env = environment(input.as_deref(), err)?;
            need_map(&env, left, err)?;
            need_map(&env, right, err)?;
            let q = Query::Lift {
                left: left.clone(),
                right: right.clone(),
            };
            Ok(run_queries(&[q], &env, machine, out, err))
        }
        Command::Check { property, name, input } => {
            let env = environment(input.as_deref(), err)?;
            let property: Property = property.parse().map_err(|e| {
                let _ = writeln!(err, "error: {e}");
                EXIT_INPUT
            })?;
            match property.subject() {
                SubjectKind::Space => need_space(&env, name, err)?,
                SubjectKind::Map => need_map(&env, name, err)?,
            }
            let q = Query::Check {
                property,
                subject: name.clone(),
            };
            Ok(run_queries(&[q], &env, machine, out, err))
        }
        Command::Orthogonal { side, maps, input } => {
            let env = environment(input.as_deref(), err)?;
            let side: Side = side.parse().map_err(|e| {
                let _ = writeln!(err, "error: {e}");
                EXIT_INPUT
            })?;
            for m in maps {
                need_map(&env, m, err)?;
            }
            let q = Query::Orthogonal {
                side,
                tests: maps.clone(),
                size,
            };
            Ok(run_queries(&[q], &env, machine, out, err))
        }
        Command::Enumerate => Ok(run_queries(
            &[Query::Enumerate { size }],
            &Environment::builtins(),
            machine,
            out,
            err,
        )),
        Command::Hom { source, target, input } => {
            let env = environment(input.as_deref(), err)?;
            need_space(&env, source, err)?;
            need_space(&env, target, err)?;
            let q = Query::Hom {
                source: source.clone(),
                target: target.clone(),
            };
            Ok(run_queries(&[q], &env, machine, out, err))
        }
        Command::VerifyPaper => {
            let report = verify_paper(size).map_err(|_| {
                let _ = writeln!(err, "error: verify-paper needs 1 <= --max-size <= 4, got {size}");
                EXIT_INPUT
            })?;
            let text = if machine {
                format!("{}\n", serde_json::to_string(&report.to_json()).expect("json"))
            } else {
                report.to_table()
            };
            let _ = out.write_all(text.as_bytes());
            Ok(if report.passed() { EXIT_OK } else { EXIT_INVARIANT })
        }
    }
}

/// Parses, validates and runs a `.lift` file.
pub fn run_file(path: &Path, machine: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let program = match load(path, err) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let env = match validate(&program) {
        Ok(env) => env,
        Err(e) => return report_notation(path, &e, err),
    };
    run_queries(&program.queries, &env, machine, out, err)
}
