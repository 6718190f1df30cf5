//! Argument parsing and the verbs of the `bcl` binary.

use std::io::Write;
use std::path::PathBuf;

use bcl_core::algebra::{blowup_unmixed_conditions, Field};
use bcl_core::decompose::{
    is_vertex_decomposable, layered_schedule, replay_schedule, verify_certificate, Family,
    ReplayError, SheddingSchedule, VdOutcome,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::check::{check, Budgets, Property};
use crate::error::CliError;
use crate::io::{graph_to_dot, CertificateFile, CertificateJson, ConditionJson, Object};
use crate::report::{reproduce, Status};
use crate::spec::parse_object;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "bcl",
    version,
    about = "Vertex decomposability and friends for Boolean graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub budgets: BudgetArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Memo entries the decomposability search may create.
    #[arg(long, global = true, default_value_t = Budgets::default().memo_cap)]
    pub memo_cap: usize,
    /// Faces the homology and matroid scans may enumerate.
    #[arg(long, global = true, default_value_t = Budgets::default().face_cap)]
    pub face_cap: usize,
    /// Largest facet count for the brute-force shellability search.
    #[arg(long, global = true, default_value_t = Budgets::default().facet_cap)]
    pub facet_cap: usize,
    /// Coefficient field for homology.
    #[arg(long, global = true, value_enum, default_value_t = FieldArg::Gf2)]
    pub field: FieldArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    Gf2,
    Rational,
}

impl BudgetArgs {
    pub fn budgets(&self) -> Budgets {
        Budgets {
            memo_cap: self.memo_cap,
            face_cap: self.face_cap,
            facet_cap: self.facet_cap,
            field: match self.field {
                FieldArg::Gf2 => Field::Gf2,
                FieldArg::Rational => Field::Rational,
            },
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a graph or complex as JSON.
    Gen {
        /// Object spec such as `bool:4` or `dual:ind-complex:bool:4`.
        spec: String,
        /// Print a graph as DOT instead.
        #[arg(long)]
        dot: bool,
        /// Print the linear conditions for blow-ups of the graph to be unmixed.
        #[arg(long, conflicts_with = "dot")]
        conditions: bool,
    },
    /// Evaluate properties: vd, shellable, unmixed, chordal, matroid, cm, obstruction.
    Check {
        /// Object spec; a graph stands for its independence complex.
        spec: String,
        /// Properties to evaluate, each reported once.
        #[arg(required = true)]
        properties: Vec<Property>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Write a vertex decomposability certificate.
    Certify {
        /// Object spec.
        spec: String,
        /// `layered` (or `paper`) for the layered order of `bool:n` or
        /// `bool-complement:n`, a JSON list of labels, or a file holding one.
        #[arg(long)]
        schedule: Option<String>,
        /// Write the certificate here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replay a certificate file against a freshly built object.
    Verify {
        /// Object spec to rebuild.
        spec: String,
        /// Certificate JSON written by `certify`.
        certificate: PathBuf,
    },
    /// Print the Alexander dual; a graph stands for its independence complex.
    Dual {
        /// Object spec.
        spec: String,
    },
    /// Recompute every claim in the regression table.
    Reproduce {
        /// Skip rows about graphs with a larger n.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Print the table as JSON.
        #[arg(long)]
        json: bool,
    },
}

/// Parses `args`, runs the verb and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let budgets = cli.budgets.budgets();
    match &cli.command {
        Command::Gen {
            spec,
            dot,
            conditions,
        } => {
            let obj = parse_object(spec)?;
            let text = match (&obj, dot, conditions) {
                (Object::Graph(g), true, _) => graph_to_dot(g),
                (Object::Graph(g), _, true) => {
                    let conds: Vec<ConditionJson> = blowup_unmixed_conditions(g)
                        .iter()
                        .map(|c| ConditionJson::new(c, g))
                        .collect();
                    pretty(&conds)
                }
                (Object::Complex(_), true, _) | (Object::Complex(_), _, true) => {
                    return Err(CliError::Usage(
                        "`--dot` and `--conditions` apply to graphs only".into(),
                    ))
                }
                _ => pretty(&obj.to_json()),
            };
            write_out(out, &text)?;
            Ok(EXIT_PASS)
        }
        Command::Check {
            spec,
            properties,
            json,
        } => {
            let obj = parse_object(spec)?;
            let report = check(spec, &obj, properties, &budgets)?;
            let text = if *json {
                pretty(&report)
            } else {
                report.render()
            };
            write_out(out, &text)?;
            Ok(report.exit_code())
        }
        Command::Certify {
            spec,
            schedule,
            output,
        } => certify(spec, schedule.as_deref(), output.as_ref(), &budgets, out),
        Command::Verify { spec, certificate } => {
            let text = read_file(certificate)?;
            let file: CertificateFile = serde_json::from_str(&text)?;
            let c = parse_object(spec)?.complex();
            let checked = match file.certificate.to_certificate(c.labels()) {
                Ok(cert) => verify_certificate(&c, &cert).map_err(|e| e.to_string()),
                Err(e) => Err(e.to_string()),
            };
            match checked {
                Ok(()) => {
                    write_out(out, &format!("accepted: certificate holds for {spec}\n"))?;
                    Ok(EXIT_PASS)
                }
                Err(e) => {
                    write_out(out, &format!("{e}\n"))?;
                    Ok(EXIT_FAIL)
                }
            }
        }
        Command::Dual { spec } => {
            let dual = parse_object(spec)?.complex().alexander_dual()?;
            write_out(out, &pretty(&Object::Complex(dual).to_json()))?;
            Ok(EXIT_PASS)
        }
        Command::Reproduce { max_n, json } => {
            let rows = reproduce(*max_n, &budgets);
            let text = if *json {
                pretty(&rows)
            } else {
                let mut s = String::new();
                for r in &rows {
                    let status = match r.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Undecided => "UNDECIDED",
                    };
                    s.push_str(&format!(
                        "{:<28} {:<9} {:>10.1} ms  {}  {}\n",
                        r.key, status, r.millis, r.claim, r.detail
                    ));
                }
                s
            };
            write_out(out, &text)?;
            let statuses: Vec<Status> = rows.iter().map(|r| r.status).collect();
            Ok(if statuses.contains(&Status::Fail) {
                EXIT_FAIL
            } else if statuses.contains(&Status::Undecided) {
                EXIT_UNDECIDED
            } else {
                EXIT_PASS
            })
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// The family and `n` of a `bool:n` or `bool-complement:n` spec.
fn layered_family(spec: &str) -> Result<(Family, usize), CliError> {
    let usage = || {
        CliError::Usage(format!(
            "`--schedule layered` needs `bool:n` or `bool-complement:n`, got `{spec}`"
        ))
    };
    let (head, n) = spec.split_once(':').ok_or_else(usage)?;
    let family = match head {
        "bool" => Family::Boolean,
        "bool-complement" => Family::Complement,
        _ => return Err(usage()),
    };
    Ok((family, n.parse().map_err(|_| usage())?))
}

fn certify(
    spec: &str,
    schedule: Option<&str>,
    output: Option<&PathBuf>,
    budgets: &Budgets,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let obj = parse_object(spec)?;
    let config = budgets.search_config();
    let labels = obj.complex().labels().to_vec();
    let (cert, schedule_name) = match schedule {
        None => match is_vertex_decomposable(&obj.complex(), &config) {
            VdOutcome::Decomposable(cert) => (cert, None),
            VdOutcome::NotDecomposable(_) => {
                write_out(out, &format!("{spec} is not vertex decomposable\n"))?;
                return Ok(EXIT_FAIL);
            }
            VdOutcome::Undecided { memo_entries } => {
                write_out(
                    out,
                    &format!("undecided:budget (memo cap reached at {memo_entries} entries)\n"),
                )?;
                return Ok(EXIT_UNDECIDED);
            }
        },
        Some(s) => {
            let Object::Graph(g) = &obj else {
                return Err(CliError::Usage("schedules apply to graphs only".into()));
            };
            let sched = if s == "layered" || s == "paper" {
                let (family, n) = layered_family(spec)?;
                layered_schedule(n, family)?
            } else {
                let text = if s.trim_start().starts_with('[') {
                    s.to_string()
                } else {
                    read_file(&PathBuf::from(s))?
                };
                SheddingSchedule::user(serde_json::from_str(&text)?)
            };
            match replay_schedule(g, &sched, &config) {
                Ok(cert) => (cert, Some(s.to_string())),
                Err(ReplayError::Undecided { memo_entries }) => {
                    write_out(
                        out,
                        &format!("undecided:budget (memo cap reached at {memo_entries} entries)\n"),
                    )?;
                    return Ok(EXIT_UNDECIDED);
                }
                Err(e) => {
                    write_out(out, &format!("schedule rejected: {e}\n"))?;
                    return Ok(EXIT_FAIL);
                }
            }
        }
    };
    let file = CertificateFile {
        object: spec.to_string(),
        schedule: schedule_name,
        certificate: CertificateJson::from_certificate(&cert, &labels),
    };
    let text = pretty(&file);
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            write_out(
                out,
                &format!(
                    "certificate with {} nodes written to {}\n",
                    cert.node_count(),
                    path.display()
                ),
            )?;
        }
        None => write_out(out, &text)?,
    }
    Ok(EXIT_PASS)
}
