//! Command-line front end. Every computation prints exact values; nothing is timestamped.
//!
//! Exit status: `0` success, `1` a check failed, `2` usage or domain error, `3` resource limit.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classfun::{table_csv, table_json, ClassFunction};
use crate::dlcox::{rw_full, rw_semisimple, CoxeterChar};
use crate::ffield::MultChar;
use crate::glnq::GroupContext;
use crate::hcseries::{sigma_family, SimpleSupport};
use crate::jlmod::{self, TorusClassFunction};
use crate::nilstrata::{jordan_partition, NilpotentOp};
use crate::oracle::{character_table, enumerate_group_and_classes};
use crate::partitions::kostka_matrix;
use crate::verify::{run_suite, Suite, SuiteParams};
use crate::Error;

pub const THREADS_ENV: &str = "GLNCHAR_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "glnchar", version, about = "Exact character computations for GL_n(F_q)")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conjugacy classes with sizes and centralizer orders.
    Classes { n: u32, q: u64 },
    /// Oracle character table.
    Table { n: u32, q: u64 },
    /// R_w(χ_e) on semisimple classes and on all classes.
    Dlchar { n: u32, q: u64, e: i64 },
    /// Harish-Chandra decomposition matrix over the support of a cuspidal of GL_m.
    Series { n: u32, q: u64, m: u32, e_m: i64 },
    /// jl_p of χ_e, or of every character when e is omitted.
    Jlp { n: u32, q: u64, e: Option<i64> },
    /// Mod-ℓ congruence of χ_e1 and χ_e2.
    Jlell { n: u32, q: u64, l: u64, e1: i64, e2: i64 },
    /// Comparison check for every exponent.
    Compare { n: u32, q: u64 },
    /// Kostka matrix and its inverse.
    Kostka { r: u32 },
    /// Serre weights of GL_n(F_{p^f0}).
    Serre { n: u32, p: u32, f0: u32 },
    /// Jordan type of a nilpotent matrix given as a JSON array (or {"p":..,"matrix":..}).
    Jordan { matrix: PathBuf },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        ell: Option<u64>,
    },
}

enum Failure {
    Check,
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Sets the global thread pool from [`THREADS_ENV`] if present.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses `args` and runs the command.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    configure_threads();
    run(&cli)
}

pub fn run(cli: &Cli) -> ExitCode {
    let mut out = String::new();
    let result = dispatch(cli, &mut out);
    if !out.is_empty() {
        let written = match &cli.output {
            Some(path) => std::fs::write(path, &out),
            None => std::io::stdout().write_all(out.as_bytes()),
        };
        if let Err(e) = written {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Domain(_) => 2,
                Error::Config(_) => 3,
                Error::Inconsistent(_) => 1,
            })
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn functions_out(format: Format, fs: &[(&str, &ClassFunction)]) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => pretty(&table_json(fs)?),
        Format::Csv | Format::Text => table_csv(fs)?,
    })
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Classes { n, q } => {
            let ctx = GroupContext::get(*n, *q)?;
            match fmt {
                Format::Json => {
                    let v: Vec<Value> = (0..ctx.num_classes()).map(|i| ctx.class_json(i)).collect();
                    out.push_str(&pretty(&Value::Array(v)));
                }
                Format::Csv => {
                    out.push_str("index,class,size,centralizer\n");
                    for (i, c) in ctx.classes().iter().enumerate() {
                        out.push_str(&format!(
                            "{i},\"{c}\",{},{}\n",
                            ctx.class_size(i),
                            ctx.centralizer(i)
                        ));
                    }
                }
                Format::Text => {
                    for (i, c) in ctx.classes().iter().enumerate() {
                        out.push_str(&format!(
                            "{i:>4}  {c}  size {}  centralizer {}\n",
                            ctx.class_size(i),
                            ctx.centralizer(i)
                        ));
                    }
                }
            }
        }
        Command::Table { n, q } => {
            let ctx = GroupContext::get(*n, *q)?;
            let g = enumerate_group_and_classes(&ctx)?;
            let t = character_table(&g)?;
            out.push_str(&match fmt {
                Format::Json => pretty(&t.to_json()),
                _ => t.to_csv(),
            });
        }
        Command::Dlchar { n, q, e } => {
            let spec = CoxeterChar::from_exponent(*n, *q, *e)?;
            let ctx = spec.ctx().clone();
            let full = rw_full(&spec)?;
            let mut ss = ClassFunction::zero(ctx.clone(), crate::Support::All);
            for i in ctx.semisimple_indices() {
                ss.set(i, rw_semisimple(&spec, &ctx.classes()[i])?);
            }
            match fmt {
                Format::Json => {
                    let v = json!({
                        "n": n, "q": q, "e": spec.chi().e,
                        "classes": (0..ctx.num_classes()).map(|i| ctx.class_json(i)).collect::<Vec<_>>(),
                        "semisimple": ctx.semisimple_indices().into_iter().map(|i| json!({"class": i, "value": ss.value(i)})).collect::<Vec<_>>(),
                        "full": full.dense_values(),
                    });
                    out.push_str(&pretty(&v));
                }
                _ => {
                    out.push_str("class,semisimple,full\n");
                    for (i, c) in ctx.classes().iter().enumerate() {
                        let s = if c.is_semisimple() {
                            format!("\"{}\"", ss.value(i))
                        } else {
                            String::new()
                        };
                        out.push_str(&format!("\"{c}\",{s},\"{}\"\n", full.value(i)));
                    }
                }
            }
        }
        Command::Series { n, q, m, e_m } => {
            let ctx = GroupContext::get(*n, *q)?;
            let fam = sigma_family(&SimpleSupport::new(ctx, *m, *e_m)?)?;
            match fmt {
                Format::Json => {
                    let parts: Vec<String> = fam.partitions().iter().map(|p| p.to_string()).collect();
                    let plus: Vec<Value> = fam
                        .sigma_plus
                        .iter()
                        .map(|s| {
                            json!(s
                                .coefficients()
                                .iter()
                                .map(|(i, c)| (format!("X{}", i + 1), *c))
                                .collect::<std::collections::BTreeMap<_, _>>())
                        })
                        .collect();
                    let v = json!({
                        "partitions": parts,
                        "sigma": fam.sigma_rows.iter().map(|i| format!("X{}", i + 1)).collect::<Vec<_>>(),
                        "sigma_degrees": fam.sigma_rows.iter().map(|&i| fam.table.degrees()[i]).collect::<Vec<_>>(),
                        "decomposition": fam.decomposition_matrix(),
                        "sigma_plus": plus,
                    });
                    out.push_str(&pretty(&v));
                }
                _ => out.push_str(&fam.decomposition_csv()),
            }
        }
        Command::Jlp { n, q, e } => {
            let ctx = GroupContext::get(*n, *q)?;
            let exps: Vec<i64> = match e {
                Some(e) => vec![*e],
                None => (0..(q.pow(*n) - 1) as i64).collect(),
            };
            let fs = exps
                .iter()
                .map(|&e| {
                    let chi = MultChar::new(*q, *n, e)?;
                    Ok((format!("e={}", chi.e), jlmod::jl_p(&ctx, &TorusClassFunction::from_char(&chi))?))
                })
                .collect::<crate::Result<Vec<_>>>()?;
            let refs: Vec<(&str, &ClassFunction)> = fs.iter().map(|(s, f)| (s.as_str(), f)).collect();
            out.push_str(&functions_out(fmt, &refs)?);
        }
        Command::Jlell { n, q, l, e1, e2 } => {
            let v = jlmod::jl_ell_check(*n, *q, *l, *e1, *e2)?;
            let pass = v.consistent();
            match fmt {
                Format::Json => out.push_str(&pretty(&json!({
                    "inputs": {"n": n, "q": q, "l": l, "e1": e1, "e2": e2},
                    "expected": {"congruent_outputs_if_congruent_inputs": true},
                    "got": v,
                    "pass": pass,
                }))),
                _ => out.push_str(&format!(
                    "congruent_inputs,congruent_outputs\n{},{}\n",
                    v.congruent_inputs, v.congruent_outputs
                )),
            }
            if !pass {
                return Err(Failure::Check);
            }
        }
        Command::Compare { n, q } => {
            let vs = jlmod::comparison_suite(*n, *q)?;
            let pass = vs.iter().all(|v| v.pass);
            match fmt {
                Format::Json => out.push_str(&pretty(&serde_json::to_value(&vs).unwrap())),
                _ => {
                    out.push_str("e,pass\n");
                    for v in &vs {
                        out.push_str(&format!("{},{}\n", v.inputs["e"], v.pass));
                    }
                }
            }
            if !pass {
                return Err(Failure::Check);
            }
        }
        Command::Kostka { r } => {
            let k = kostka_matrix(*r)?;
            match fmt {
                Format::Json => out.push_str(&pretty(&json!({
                    "partitions": k.partitions.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "K": k.k,
                    "K_inv": k.k_inv,
                }))),
                _ => out.push_str(&k.to_csv()),
            }
        }
        Command::Serre { n, p, f0 } => {
            let w = jlmod::serre_weights(*n, *p, *f0)?;
            match fmt {
                Format::Json => out.push_str(&pretty(&json!({
                    "weights": w.weights.iter().map(|x| &x.a).collect::<Vec<_>>(),
                    "count": w.weights.len(),
                    "semisimple_classes": w.semisimple_classes,
                    "pass": w.count_matches(),
                }))),
                _ => {
                    for x in &w.weights {
                        out.push_str(&format!("{x}\n"));
                    }
                    out.push_str(&format!(
                        "# {} weights, {} semisimple classes\n",
                        w.weights.len(),
                        w.semisimple_classes
                    ));
                }
            }
            if !w.count_matches() {
                return Err(Failure::Check);
            }
        }
        Command::Jordan { matrix } => {
            let text = std::fs::read_to_string(matrix).map_err(Failure::Io)?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| Error::Domain(format!("{}: {e}", matrix.display())))?;
            let op = NilpotentOp::from_json(&v)?;
            let lambda = jordan_partition(&op);
            match fmt {
                Format::Json => out.push_str(&pretty(&json!({
                    "partition": lambda.parts(),
                    "kernel_dims": op.kernel_dims(),
                }))),
                _ => out.push_str(&format!("{lambda}\n")),
            }
        }
        Command::Verify { suite, n, q, m, ell } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let params = SuiteParams {
                n: *n,
                q: *q,
                m: *m,
                ell: *ell,
            };
            let mut pass = true;
            let mut reports = Vec::new();
            for s in suites {
                let r = run_suite(s, &params)?;
                pass &= r.pass();
                reports.push(r);
            }
            match fmt {
                Format::Json => out.push_str(&pretty(&serde_json::to_value(&reports).unwrap())),
                Format::Csv => {
                    out.push_str("suite,check,pass,detail\n");
                    for r in &reports {
                        for c in &r.checks {
                            out.push_str(&format!(
                                "{},\"{}\",{},\"{}\"\n",
                                r.suite,
                                c.name.replace('"', "\"\""),
                                c.pass,
                                c.detail.replace('"', "\"\"")
                            ));
                        }
                    }
                }
                Format::Text => {
                    for r in &reports {
                        out.push_str(&r.summary_line());
                        out.push('\n');
                        for f in r.failures() {
                            out.push_str(&format!("  failed: {} {}\n", f.name, f.detail));
                        }
                    }
                }
            }
            if !pass {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}
