//! Command-line front end. Exit codes: 0 success, 2 falsification,
//! 3 budget or deadline exceeded, 4 input error.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use slicerank_core::fixtures::{build_fn, fn_variable_names};
use slicerank_core::ideal::{intersect_family_graded, quadratic_generator_count, LinearIdealFamily};
use slicerank_core::slicerank::{bound_profile, l_space_with, slice_rank_with, SearchStats};
use slicerank_core::{Error, Fp, FieldSpec};

use crate::parse::{format_polynomial, format_polynomial_file, parse_family_file, parse_polynomial_file, ParseError, VariableOrder};
use crate::report::{bound_json, certificate_json, emit_report, lf_report_json, stats_json, subspace_json, ReportFormat, RunReport, Timing};
use crate::search::SearchConfig;
use crate::suites::{run_suite, SuiteContext};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INPUT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "slicerank", version, about = "Slice rank, L_f and linear-ideal computations over exact fields")]
pub struct Cli {
    /// gf2, gf3, gfp:<p> or rat
    #[arg(long, global = true, default_value = "gf2")]
    pub field: FieldSpec,
    /// Worker threads (1 = serial; default: all cores)
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Cap on Grassmannian visits summed over all rank passes
    #[arg(long, global = true)]
    pub max_visits: Option<u64>,
    #[arg(long, global = true)]
    pub max_seconds: Option<f64>,
    /// Append-only record of finished shards; rerun with the same file to resume
    #[arg(long, global = true)]
    pub checkpoint: Option<PathBuf>,
    #[arg(long, global = true, env = "SLICERANK_SEED")]
    pub seed: Option<u64>,
    /// Single-line JSON instead of indented
    #[arg(long, global = true)]
    pub compact: bool,
    /// Write the report here instead of stdout
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Slice rank of a cubic with a witness subspace and decomposition
    Rank { file: PathBuf },
    /// All minimal slicing subspaces of a cubic and their sum L_f
    Lspace { file: PathBuf },
    /// Degree-2 part and quadratic generator count of an intersection of linear ideals
    Gens2 { file: PathBuf },
    /// Dimension of the degree-d part of an intersection of linear ideals
    Dim {
        file: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// Built-in polynomial families
    Family {
        #[command(subcommand)]
        kind: FamilyKind,
    },
    /// Run a verification suite
    Verify { suite: String },
    /// Exact bound values attached to rank r
    Bounds { r: usize },
}

#[derive(Debug, Subcommand)]
pub enum FamilyKind {
    /// f_n = sum over i<j of x_i x_j y_ij
    Fn {
        n: usize,
        /// Also write f_n as a polynomial file
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

/// Result of one invocation: exit code plus the text for stdout and stderr.
#[derive(Debug, Default)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::DeadlineReached { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Produced {
    report: RunReport,
    falsified: bool,
    budget_note: Option<String>,
}

fn read(path: &Path) -> Result<(String, Vec<u8>), Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Failure::Input(format!("{}: not UTF-8", path.display())))?;
    Ok((text, bytes))
}

fn prime_field(spec: FieldSpec) -> Result<Fp, Failure> {
    match spec {
        FieldSpec::Prime(p) => Ok(Fp::new(p)?),
        FieldSpec::Rational => Err(Failure::Input(
            "Grassmannian search needs a finite prime field (--field gf2|gf3|gfp:<p>)".into(),
        )),
    }
}

fn search_config(cli: &Cli) -> SearchConfig {
    SearchConfig {
        workers: cli.workers,
        max_visits: cli.max_visits,
        max_seconds: cli.max_seconds,
        checkpoint: cli.checkpoint.clone(),
    }
}

fn with_stats(mut report: RunReport, stats: &SearchStats, start: Instant) -> RunReport {
    report.search_stats = Some(stats_json(stats));
    report.timing = Timing {
        wall_seconds: start.elapsed().as_secs_f64(),
    };
    report
}

fn execute(cli: &Cli, echo: Vec<String>) -> Result<Produced, Failure> {
    let start = Instant::now();
    let spec = cli.field;
    let plain = |report: RunReport| Produced {
        report,
        falsified: false,
        budget_note: None,
    };
    match &cli.command {
        Command::Rank { file } => {
            let field = prime_field(spec)?;
            let (text, bytes) = read(file)?;
            let parsed = parse_polynomial_file(&field, &text)?;
            let config = search_config(cli);
            let cert = slice_rank_with(&parsed.polynomial, &config.budget(), &config.executor()?)?;
            let report = RunReport::new(echo, Some(spec), &bytes, certificate_json(&cert, &parsed.vars));
            Ok(plain(with_stats(report, &cert.stats, start)))
        }
        Command::Lspace { file } => {
            let field = prime_field(spec)?;
            let (text, bytes) = read(file)?;
            let parsed = parse_polynomial_file(&field, &text)?;
            let config = search_config(cli);
            let lf = l_space_with(&parsed.polynomial, &config.budget(), &config.executor()?)?;
            let report = RunReport::new(echo, Some(spec), &bytes, lf_report_json(&lf, &parsed.vars));
            Ok(Produced {
                report: with_stats(report, &lf.stats, start),
                falsified: !lf.satisfies_bound(),
                budget_note: None,
            })
        }
        Command::Gens2 { file } => {
            let (text, bytes) = read(file)?;
            let (payload, falsified) = with_field!(spec, field => {
                let parsed = parse_family_file(field, &text)?;
                let fam = LinearIdealFamily::new(field, parsed.vars.len(), parsed.members)?;
                let r = fam.r();
                let gens = quadratic_generator_count(&fam)?;
                let payload = json!({
                    "num_vars": fam.num_vars(),
                    "members": fam.members().iter().map(|m| subspace_json(m, &parsed.vars)).collect::<Vec<_>>(),
                    "r": r,
                    "common_intersection": subspace_json(&fam.common_intersection(), &parsed.vars),
                    "dim_i2": intersect_family_graded(&fam, 2)?.dim(),
                    "quadratic_generators": gens,
                    "r_squared": r * r,
                    "within_bound": gens <= r * r,
                });
                (payload, gens > r * r)
            });
            Ok(Produced {
                report: RunReport::new(echo, Some(spec), &bytes, payload),
                falsified,
                budget_note: None,
            })
        }
        Command::Dim { file, degree } => {
            let (text, bytes) = read(file)?;
            let payload = with_field!(spec, field => {
                let parsed = parse_family_file(field, &text)?;
                let fam = LinearIdealFamily::new(field, parsed.vars.len(), parsed.members)?;
                json!({
                    "num_vars": fam.num_vars(),
                    "members": fam.members().len(),
                    "degree": degree,
                    "dim": intersect_family_graded(&fam, *degree)?.dim(),
                })
            });
            Ok(plain(RunReport::new(echo, Some(spec), &bytes, payload)))
        }
        Command::Family {
            kind: FamilyKind::Fn { n, write },
        } => {
            let names = fn_variable_names(*n);
            let vars = VariableOrder::new(names.clone())?;
            let (payload, file_text) = with_field!(spec, field => {
                let f = build_fn(field, *n)?;
                let payload = json!({
                    "family": "fn",
                    "n": n,
                    "num_vars": f.num_vars(),
                    "variables": names,
                    "terms": f.num_terms(),
                    "polynomial": format_polynomial(&f, &vars),
                });
                (payload, format_polynomial_file(&f, &vars))
            });
            if let Some(path) = write {
                std::fs::write(path, file_text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            Ok(plain(RunReport::new(echo.clone(), Some(spec), echo.join("\0").as_bytes(), payload)))
        }
        Command::Verify { suite } => {
            let config = search_config(cli);
            let ctx = SuiteContext {
                executor: config.executor()?,
                budget: config.budget(),
            };
            let seed = cli.seed.unwrap_or(0);
            let verdict = run_suite(suite, seed, &ctx).map_err(|e| Failure::Input(e.to_string()))?;
            let budget_note = (!verdict.skipped.is_empty()).then(|| format!("{} case(s) skipped", verdict.skipped.len()));
            let mut report = RunReport::new(
                echo.clone(),
                None,
                echo.join("\0").as_bytes(),
                serde_json::to_value(&verdict).expect("verdicts serialize"),
            );
            report.seed = Some(seed);
            report.timing = Timing {
                wall_seconds: verdict.wall_seconds,
            };
            Ok(Produced {
                report,
                falsified: !verdict.all_passed(),
                budget_note,
            })
        }
        Command::Bounds { r } => {
            let payload: Value = bound_json(&bound_profile(*r));
            Ok(plain(RunReport::new(echo.clone(), None, echo.join("\0").as_bytes(), payload)))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Invocation {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Invocation {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let echo: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let format = if cli.compact {
        ReportFormat::Compact
    } else {
        ReportFormat::Pretty
    };
    match execute(&cli, echo) {
        Ok(produced) => {
            let mut text = emit_report(&produced.report, format);
            text.push('\n');
            let code = if produced.falsified {
                EXIT_FALSIFIED
            } else if produced.budget_note.is_some() {
                EXIT_BUDGET
            } else {
                EXIT_OK
            };
            let mut stderr = produced.budget_note.unwrap_or_default();
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &text) {
                    return Invocation {
                        code: EXIT_INPUT,
                        stdout: String::new(),
                        stderr: format!("{}: {e}\n", path.display()),
                    };
                }
                text.clear();
            }
            if !stderr.is_empty() {
                stderr.push('\n');
            }
            Invocation {
                code,
                stdout: text,
                stderr,
            }
        }
        Err(Failure::Input(msg)) => Invocation {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Budget(msg)) => Invocation {
            code: EXIT_BUDGET,
            stdout: String::new(),
            stderr: format!("budget: {msg}\n"),
        },
    }
}
