// Copyright 2026 The tabcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Command-line driver: `stats`, `mine`, `compress` and `verify`.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch,
//! 3 resource bound exceeded.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::graph::build_graph_db;
use crate::io::{parse_instance, serialize_instance, serialize_report};
use crate::mining::{mine, MinedPattern, PatternKind};
use crate::model::{ConstraintId, ConstraintNetwork};
use crate::pipeline::{compress, CompressionConfig, GainMode, Passes};
use crate::table::build_constraint_db;
use crate::verify::{check_preservation, SolveOptions, Verdict, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "tabcomp",
    version,
    about = "Compress table-constraint networks with itemset mining"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the size and shape of an instance.
    Stats { input: PathBuf },
    /// Mine patterns from the constraint graph or from one table.
    Mine {
        /// `graph`, or `constraint:<id>` for one table's microstructure.
        #[arg(long, default_value = "graph")]
        db: String,
        #[arg(long, default_value_t = 2)]
        min_support: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Closed)]
        mode: ModeArg,
        input: PathBuf,
    },
    /// Compress an instance and write the result.
    Compress {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 2)]
        min_support: usize,
        #[arg(long, value_enum, default_value_t = PatternArg::Closed)]
        patterns: PatternArg,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "graph,table")]
        passes: Vec<PassArg>,
        #[arg(long, value_enum, default_value_t = GainArg::Exact)]
        gain: GainArg,
        #[arg(long, default_value_t = 100)]
        max_iters: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check that a compressed instance has the same solutions on the original variables.
    Verify {
        original: PathBuf,
        compressed: PathBuf,
        /// Compare at most this many solutions of each instance.
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Closed,
    Maximal,
    Frequent,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PatternArg {
    Closed,
    Maximal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PassArg {
    Graph,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GainArg {
    Exact,
    Prefilter,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

fn load(path: &Path, err: &mut dyn Write) -> Result<ConstraintNetwork, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let loaded = parse_instance(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    if loaded.duplicate_tuples > 0 {
        let _ = writeln!(
            err,
            "warning: {}: merged {} duplicate tuple(s)",
            path.display(),
            loaded.duplicate_tuples
        );
    }
    Ok(loaded.network)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn print_patterns<I: Display>(out: &mut dyn Write, patterns: &[MinedPattern<I>]) {
    for p in patterns {
        let items: Vec<String> = p.items.iter().map(ToString::to_string).collect();
        let cover: Vec<&str> = p.cover.iter().map(|t| t.as_str()).collect();
        let _ = writeln!(
            out,
            "{{{}}} support={} cover={{{}}}",
            items.join(" "),
            p.support,
            cover.join(" ")
        );
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Stats { input } => {
            let p = load(&input, err)?;
            let _ = writeln!(out, "size: {}", p.size());
            let _ = writeln!(out, "variables: {}", p.num_variables());
            let _ = writeln!(out, "constraints: {}", p.constraints().len());
            let _ = writeln!(out, "max_domain: {}", p.max_domain_size());
            for c in p.constraints() {
                let _ = writeln!(out, "{} arity={} tuples={}", c.id(), c.arity(), c.tuple_count());
            }
            Ok(())
        }
        Command::Mine {
            db,
            min_support,
            mode,
            input,
        } => {
            let p = load(&input, err)?;
            let kind = match mode {
                ModeArg::Closed => PatternKind::Closed,
                ModeArg::Maximal => PatternKind::Maximal,
                ModeArg::Frequent => PatternKind::Frequent,
            };
            if db == "graph" {
                let patterns = mine(&build_graph_db(&p), min_support, kind).map_err(Failure::usage)?;
                print_patterns(out, &patterns);
            } else if let Some(id) = db.strip_prefix("constraint:") {
                let c = p
                    .constraint(&ConstraintId::from(id))
                    .ok_or_else(|| Failure::usage(format!("unknown constraint {id}")))?;
                let patterns = mine(&build_constraint_db(c), min_support, kind).map_err(Failure::usage)?;
                print_patterns(out, &patterns);
            } else {
                return Err(Failure::usage(format!(
                    "--db must be `graph` or `constraint:<id>`, got {db:?}"
                )));
            }
            Ok(())
        }
        Command::Compress {
            input,
            output,
            min_support,
            patterns,
            passes,
            gain,
            max_iters,
            report,
        } => {
            let p = load(&input, err)?;
            let passes = match (passes.contains(&PassArg::Graph), passes.contains(&PassArg::Table)) {
                (true, true) => Passes::GraphAndTable,
                (true, false) => Passes::GraphOnly,
                (false, true) => Passes::TableOnly,
                (false, false) => return Err(Failure::usage("--passes must name at least one pass")),
            };
            let config = CompressionConfig {
                min_support,
                pattern_kind: match patterns {
                    PatternArg::Closed => PatternKind::Closed,
                    PatternArg::Maximal => PatternKind::Maximal,
                },
                max_iterations: max_iters,
                gain_mode: match gain {
                    GainArg::Exact => GainMode::ExactTrial,
                    GainArg::Prefilter => GainMode::Prefilter,
                },
                passes,
            };
            let (q, summary) = compress(&p, &config).map_err(Failure::usage)?;
            write_file(&output, &serialize_instance(&q))?;
            if let Some(path) = report {
                write_file(&path, &serialize_report(&summary))?;
            }
            let _ = writeln!(
                out,
                "size {} -> {} ({} rewrite(s))",
                summary.input_size,
                summary.output_size,
                summary.records.len()
            );
            if summary.unsat_detected {
                let _ = writeln!(out, "unsatisfiable: a rewrite found no common sub-tuple");
            }
            Ok(())
        }
        Command::Verify {
            original,
            compressed,
            limit,
        } => {
            let p = load(&original, err)?;
            let q = load(&compressed, err)?;
            let vars: BTreeSet<_> = p.variables().cloned().collect();
            let options = SolveOptions {
                limit,
                ..SolveOptions::default()
            };
            match check_preservation(&p, &q, &vars, &options) {
                Ok(result) => {
                    let _ = writeln!(
                        out,
                        "{} ({} vs {} solutions)",
                        result.verdict, result.original_solutions, result.compressed_solutions
                    );
                    if result.verdict == Verdict::Equivalent {
                        Ok(())
                    } else {
                        Err(Failure {
                            code: EXIT_MISMATCH,
                            message: format!("verification failed: {}", result.verdict),
                        })
                    }
                }
                Err(e @ VerifyError::SearchSpaceTooLarge { .. }) => Err(Failure {
                    code: EXIT_RESOURCE,
                    message: e.to_string(),
                }),
                Err(e @ VerifyError::MissingVariables(_)) => Err(Failure {
                    code: EXIT_MISMATCH,
                    message: e.to_string(),
                }),
            }
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
