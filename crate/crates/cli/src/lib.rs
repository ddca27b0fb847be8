//! Argument parsing and output formatting for the `kerovkit` binary.
//!
//! [`run`] takes the full argument vector and returns the exit code together
//! with everything that should go to stdout and stderr, so the whole command
//! surface is testable in-process.

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use kerovkit_core::acceptance;
use kerovkit_core::characters::{coloring_count, mn_character, normalized_character, stanley_feray_character};
use kerovkit_core::cumulants::FreeCumulants;
use kerovkit_core::factorization::{enumerate_factorizations, is_minimal_factorization};
use kerovkit_core::geometry::{profile, SMoments};
use kerovkit_core::kerov::{kerov_polynomial_with, KerovConfig, DEFAULT_KEROV_CAP};
use kerovkit_core::partition::parse_partition;
use kerovkit_core::permutation::{parse_cycles, parse_permutation, Permutation};
use kerovkit_core::shuffle::{mixing_profile, random_transposition_measure};
use kerovkit_core::{characters, Error, YoungDiagram};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "KEROVKIT_THREADS";

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "kerovkit", version, about = "Exact characters of symmetric groups, free cumulants and Kerov polynomials")]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest permutation degree for factorization enumeration
    #[arg(long, default_value_t = kerovkit_core::factorization::DEFAULT_ENUMERATION_CAP, global = true)]
    pub max_k: usize,
    /// Largest symmetric group degree for exact convolution powers
    #[arg(long, default_value_t = kerovkit_core::shuffle::DEFAULT_DEGREE_CAP, global = true)]
    pub max_n: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreducible character χ^λ on a conjugacy class (Murnaghan–Nakayama)
    Char {
        #[arg(long)]
        lambda: String,
        /// Cycle type, e.g. "2,1"
        #[arg(long, conflicts_with = "pi", required_unless_present = "pi")]
        ct: Option<String>,
        /// A permutation of the class, padded with fixed points up to |λ|
        #[arg(long)]
        pi: Option<String>,
    },
    /// Normalized character Σ_π^λ by both algorithms
    Nchar {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        pi: String,
    },
    /// Dimension of the irreducible representation
    Dim {
        #[arg(long)]
        lambda: String,
    },
    /// Coloring count N^λ(σ₁, σ₂)
    Colorings {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        sigma1: String,
        #[arg(long)]
        sigma2: String,
    },
    /// Moments S_2..S_max and the profile
    Smoments {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Free cumulants R_2..R_max by both routes
    Cumulants {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Kerov polynomial K_k
    Kerov {
        #[arg(long)]
        k: usize,
        /// Largest k accepted
        #[arg(long, default_value_t = DEFAULT_KEROV_CAP)]
        cap: usize,
    },
    /// Distance to uniform of a central random walk, step by step
    Shuffle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = MeasureKind::Transpositions)]
        measure: MeasureKind,
    },
    /// Factorizations of the long cycle (1,...,k)
    Factorizations {
        #[arg(long)]
        k: usize,
        /// Keep only minimal factorizations
        #[arg(long)]
        minimal: bool,
        /// List the pairs instead of just counting them
        #[arg(long)]
        list: bool,
    },
    /// Run the acceptance suite
    Selftest,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MeasureKind {
    Transpositions,
}

/// The JSON document written for `--format json`.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub timing: Timing,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// What a subcommand produced, before formatting.
struct Outcome {
    inputs: Map<String, Value>,
    result: Value,
    text: String,
    csv: String,
    /// Non-zero when the command ran but a self-check failed.
    exit: i32,
}

impl Outcome {
    fn new(inputs: Map<String, Value>, result: Value, text: String, csv: String) -> Self {
        Outcome {
            inputs,
            result,
            text,
            csv,
            exit: EXIT_OK,
        }
    }
}

pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => EXIT_USAGE,
        e if e.is_internal() => EXIT_INTERNAL,
        _ => EXIT_DOMAIN,
    }
}

fn inputs(pairs: &[(&str, String)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
        .collect()
}

fn csv_pairs(rows: &[(String, String)]) -> String {
    let mut out = String::from("key,value\n");
    for (k, v) in rows {
        out.push_str(&format!("{k},{v}\n"));
    }
    out
}

fn lambda_arg(text: &str) -> Result<YoungDiagram, Error> {
    parse_partition(text)
}

fn run_command(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Char { lambda, ct, pi } => {
            let l = lambda_arg(lambda)?;
            let (class, shown) = match (ct, pi) {
                (Some(ct), _) => (parse_partition(ct)?, ct.clone()),
                (None, Some(pi)) => {
                    let p = parse_cycles_or_line(pi, l.size())?;
                    (p.cycle_type().pad_with_ones(l.size())?, pi.clone())
                }
                (None, None) => unreachable!("clap requires one of --ct/--pi"),
            };
            let value = mn_character(&l, &class)?;
            let key = if ct.is_some() { "ct" } else { "pi" };
            Ok(Outcome::new(
                inputs(&[("lambda", l.to_string()), (key, shown)]),
                json!({ "character": value.to_string(), "cycle_type": class.to_string() }),
                value.to_string(),
                csv_pairs(&[("character".into(), value.to_string())]),
            ))
        }
        Command::Nchar { lambda, pi } => {
            let l = lambda_arg(lambda)?;
            let p = parse_permutation(pi)?;
            let mn = normalized_character(&l, &p);
            let sf = stanley_feray_character(&l, &p, cli.max_k)?;
            let agree = mn == sf;
            let mut out = Outcome::new(
                inputs(&[("lambda", l.to_string()), ("pi", p.to_string())]),
                json!({
                    "murnaghan_nakayama": mn.to_string(),
                    "stanley_feray": sf.to_string(),
                    "agree": agree,
                }),
                if agree {
                    format!("{mn} (both methods agree)")
                } else {
                    format!("MISMATCH: Murnaghan-Nakayama {mn}, Stanley-Feray {sf}")
                },
                csv_pairs(&[
                    ("murnaghan_nakayama".into(), mn.to_string()),
                    ("stanley_feray".into(), sf.to_string()),
                    ("agree".into(), agree.to_string()),
                ]),
            );
            if !agree {
                out.exit = EXIT_INTERNAL;
            }
            Ok(out)
        }
        Command::Dim { lambda } => {
            let l = lambda_arg(lambda)?;
            let dim = characters::dimension(&l);
            Ok(Outcome::new(
                inputs(&[("lambda", l.to_string())]),
                json!({ "dimension": dim.to_string() }),
                dim.to_string(),
                csv_pairs(&[("dimension".into(), dim.to_string())]),
            ))
        }
        Command::Colorings { lambda, sigma1, sigma2 } => {
            let l = lambda_arg(lambda)?;
            let s1 = parse_permutation(sigma1)?;
            let s2 = parse_permutation(sigma2)?;
            let count = coloring_count(&l, &s1, &s2)?;
            Ok(Outcome::new(
                inputs(&[
                    ("lambda", l.to_string()),
                    ("sigma1", s1.to_string()),
                    ("sigma2", s2.to_string()),
                ]),
                json!({ "colorings": count.to_string() }),
                count.to_string(),
                csv_pairs(&[("colorings".into(), count.to_string())]),
            ))
        }
        Command::Smoments { lambda, max } => {
            let l = lambda_arg(lambda)?;
            let moments = SMoments::compute(&l, *max)?;
            let rows: Vec<(String, String)> = moments
                .values()
                .iter()
                .map(|(i, v)| (format!("S{i}"), v.to_string()))
                .collect();
            let result = json!({
                "moments": rows.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect::<Map<_, _>>(),
                "profile": profile(&l).to_json(),
            });
            Ok(Outcome::new(
                inputs(&[("lambda", l.to_string()), ("max", max.to_string())]),
                result,
                rows.iter().map(|(k, v)| format!("{k} = {v}")).collect::<Vec<_>>().join("\n"),
                csv_pairs(&rows),
            ))
        }
        Command::Cumulants { lambda, max } => {
            let l = lambda_arg(lambda)?;
            let by_characters = FreeCumulants::compute(&l, *max)?;
            let by_moments = FreeCumulants::from_moments(&SMoments::compute(&l, *max)?, *max)?;
            let agree = by_characters == by_moments;
            let rows: Vec<(String, String)> = by_characters
                .values()
                .iter()
                .map(|(k, v)| (format!("R{k}"), v.to_string()))
                .collect();
            let mut text: Vec<String> = rows.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            text.push(if agree {
                "(characters and moments agree)".into()
            } else {
                "MISMATCH between characters and moments".into()
            });
            let mut csv_rows = rows.clone();
            csv_rows.push(("agree".into(), agree.to_string()));
            let mut out = Outcome::new(
                inputs(&[("lambda", l.to_string()), ("max", max.to_string())]),
                json!({
                    "cumulants": rows.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect::<Map<_, _>>(),
                    "from_moments": by_moments.values().iter().map(|(k, v)| (format!("R{k}"), Value::String(v.to_string()))).collect::<Map<_, _>>(),
                    "agree": agree,
                }),
                text.join("\n"),
                csv_pairs(&csv_rows),
            );
            if !agree {
                out.exit = EXIT_INTERNAL;
            }
            Ok(out)
        }
        Command::Kerov { k, cap } => {
            let mut config = KerovConfig::default_for(*k);
            config.cap = *cap;
            let poly = kerov_polynomial_with(*k, &config)?;
            let csv = {
                let mut s = String::from("monomial,coeff\n");
                for (m, c) in poly.terms() {
                    s.push_str(&format!("{m},{c}\n"));
                }
                s
            };
            Ok(Outcome::new(
                inputs(&[("k", k.to_string())]),
                json!({ "polynomial": poly.to_string(), "terms": poly.to_json() }),
                poly.to_string(),
                csv,
            ))
        }
        Command::Shuffle { n, steps, measure } => {
            let mu = match measure {
                MeasureKind::Transpositions => random_transposition_measure(*n)?,
            };
            let rows = mixing_profile(&mu, *steps, cli.max_n)?;
            let mut text = String::from("k\tTV\tDS bound (4 TV^2 <= B)\n");
            let mut csv = String::from("k,tv,ds_bound\n");
            let mut json_rows = Vec::new();
            for r in &rows {
                text.push_str(&format!("{}\t{}\t{}\n", r.step, r.tv, r.bound));
                csv.push_str(&format!("{},{},{}\n", r.step, r.tv, r.bound));
                json_rows.push(json!({ "k": r.step, "tv": r.tv.to_string(), "ds_bound": r.bound.to_string() }));
            }
            Ok(Outcome::new(
                inputs(&[
                    ("n", n.to_string()),
                    ("steps", steps.to_string()),
                    ("measure", "transpositions".into()),
                ]),
                Value::Array(json_rows),
                text.trim_end().to_string(),
                csv,
            ))
        }
        Command::Factorizations { k, minimal, list } => {
            let pi = Permutation::long_cycle(*k);
            let pairs: Vec<_> = enumerate_factorizations(&pi, cli.max_k)?
                .into_iter()
                .filter(|p| !*minimal || is_minimal_factorization(p, *k))
                .collect();
            let listed: Vec<(String, String)> = pairs
                .iter()
                .map(|p| (p.sigma1.to_string(), p.sigma2.to_string()))
                .collect();
            let mut result = json!({ "count": pairs.len() });
            let mut text = format!("{}", pairs.len());
            let mut csv = format!("key,value\ncount,{}\n", pairs.len());
            if *list {
                result["pairs"] = Value::Array(
                    listed
                        .iter()
                        .map(|(a, b)| json!({ "sigma1": a, "sigma2": b }))
                        .collect(),
                );
                for (a, b) in &listed {
                    text.push_str(&format!("\n{a} * {b}"));
                }
                csv = String::from("sigma1,sigma2\n");
                for (a, b) in &listed {
                    csv.push_str(&format!("\"{a}\",\"{b}\"\n"));
                }
            }
            Ok(Outcome::new(
                inputs(&[
                    ("k", k.to_string()),
                    ("minimal", minimal.to_string()),
                ]),
                result,
                text,
                csv,
            ))
        }
        Command::Selftest => {
            let reports = acceptance::run_all();
            let passed = reports.iter().all(|r| r.passed);
            let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            let mut csv = String::from("id,name,passed\n");
            for r in &reports {
                csv.push_str(&format!("{},{},{}\n", r.id, r.name, r.passed));
            }
            let mut out = Outcome::new(
                Map::new(),
                Value::Array(
                    reports
                        .iter()
                        .map(|r| json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }))
                        .collect(),
                ),
                text,
                csv,
            );
            if !passed {
                out.exit = EXIT_INTERNAL;
            }
            Ok(out)
        }
    }
}

/// Cycle notation padded to `degree`, or one-line notation.
fn parse_cycles_or_line(text: &str, degree: usize) -> Result<Permutation, Error> {
    if text.trim_start().starts_with('(') {
        parse_cycles(text, Some(degree))
    } else {
        parse_permutation(text)
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Char { .. } => "char",
        Command::Nchar { .. } => "nchar",
        Command::Dim { .. } => "dim",
        Command::Colorings { .. } => "colorings",
        Command::Smoments { .. } => "smoments",
        Command::Cumulants { .. } => "cumulants",
        Command::Kerov { .. } => "kerov",
        Command::Shuffle { .. } => "shuffle",
        Command::Factorizations { .. } => "factorizations",
        Command::Selftest => "selftest",
    }
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                RunOutput { code, stdout: rendered, stderr: String::new() }
            } else {
                RunOutput { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let start = Instant::now();
    match run_command(&cli) {
        Ok(outcome) => {
            let stdout = match cli.format {
                Format::Text => format!("{}\n", outcome.text),
                Format::Csv => outcome.csv,
                Format::Json => {
                    let record = OutputRecord {
                        command: command_name(&cli.command).to_string(),
                        inputs: outcome.inputs,
                        result: outcome.result,
                        timing: Timing {
                            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
                        },
                    };
                    format!("{}\n", serde_json::to_string_pretty(&record).expect("serializable"))
                }
            };
            RunOutput {
                code: outcome.exit,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => RunOutput {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Applies `KEROVKIT_THREADS` to the global rayon pool, if set.
pub fn configure_threads() -> Result<(), String> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| format!("{THREADS_ENV} must be a positive integer, got {v:?}"))?;
            if n == 0 {
                return Err(format!("{THREADS_ENV} must be positive"));
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| e.to_string())
        }
        Err(_) => Ok(()),
    }
}
