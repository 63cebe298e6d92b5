//! Command-line front end. [`run`] returns the process exit code:
//! 0 on success, 1 when a verification check fails, 2 on usage or input errors.

pub mod suite;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::combinatorics::{
    enumerate_color_tableaux, enumerate_semistandard, enumerate_standard_tableaux, Bicomposition, NumericTableau,
    Partition,
};
use crate::error::{Error, Result};
use crate::exact_linalg::{hom_dim_oracle, FieldSpec, IntMatrix};
use crate::hom_builder::{stacked_rank, HomContext, HomMatrix};
use crate::symgroup::Permutation;
use suite::{count_table, full_suite, properties_suite, SuiteConfig};

/// Enumeration commands refuse larger `n`.
pub const ENUM_MAX_N: usize = 12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "signed-hom", version, about = "Homomorphisms from Specht modules to signed permutation modules")]
struct Cli {
    /// Compact JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Indented JSON output.
    #[arg(long, global = true, conflicts_with = "json")]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Instance {
    /// Partition, e.g. 3,2,1.
    #[arg(long)]
    shape: Partition,
    /// Bicomposition "alpha|beta", e.g. "2|2,1" or "|3,2,2".
    #[arg(long = "type")]
    kind: Bicomposition,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count and list tableaux of a given type.
    Enum {
        #[command(flatten)]
        inst: Instance,
        /// List every tableau of the type, not only the semistandard ones.
        #[arg(long)]
        all: bool,
    },
    /// Matrices of the homomorphisms for chosen representatives.
    Theta {
        #[command(flatten)]
        inst: Instance,
        /// Index into the transversal, image list [2,1,3] or cycles (1 2)(3 4). Repeatable.
        #[arg(long, required_unless_present = "all_sstd")]
        rep: Vec<String>,
        /// Every semistandard representative.
        #[arg(long, conflicts_with = "rep")]
        all_sstd: bool,
        /// q for the rationals or a prime p; entries are reduced mod p.
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        /// Print the rank of the stacked matrices instead.
        #[arg(long)]
        rank: bool,
        /// Initial tableau, rows separated by '/', e.g. 1,7/2/3/4/5/6.
        #[arg(long)]
        t0: Option<String>,
    },
    /// Dimension of the full Hom space by solving the equivariance system.
    HomDim {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "paper")]
        suite: SuiteName,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Include wall times in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Semistandard counts for every shape and type up to a size.
    Counts {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SuiteName {
    Paper,
    Properties,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Pretty,
}

fn emit<T: Serialize>(out: &mut dyn Write, format: Format, value: &T) -> std::io::Result<()> {
    match format {
        Format::Pretty => writeln!(out, "{}", serde_json::to_string_pretty(value).expect("serializable")),
        _ => writeln!(out, "{}", serde_json::to_string(value).expect("serializable")),
    }
}

fn check_size(shape: &Partition, kind: &Bicomposition) -> Result<()> {
    if shape.n() != kind.n() {
        return Err(Error::SizeMismatch {
            shape: shape.n(),
            kind: kind.n(),
        });
    }
    Ok(())
}

fn guard_enum(n: usize) -> Result<()> {
    if n > ENUM_MAX_N {
        return Err(Error::SizeBound {
            what: "n",
            value: n,
            bound: ENUM_MAX_N,
        });
    }
    Ok(())
}

fn reduce(m: &HomMatrix, field: FieldSpec) -> HomMatrix {
    match field {
        FieldSpec::Rationals => m.clone(),
        FieldSpec::Prime(p) => HomMatrix {
            entries: m.entries.reduce_mod(p),
            ..m.clone()
        },
    }
}

fn print_matrix(out: &mut dyn Write, m: &IntMatrix) -> std::io::Result<()> {
    let rows = m.to_strings();
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    for r in rows {
        let cells: Vec<String> = r.iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(out, "  {}", cells.join(" "))?;
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let format = if cli.pretty {
        Format::Pretty
    } else if cli.json {
        Format::Json
    } else {
        Format::Text
    };
    match dispatch(cli.command, format, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, format: Format, out: &mut dyn Write) -> Result<i32> {
    // a closed stdout (e.g. piping into head) is not an error of the computation
    let io = |_: std::io::Result<()>| -> Result<()> { Ok(()) };
    match command {
        Command::Enum { inst, all } => {
            check_size(&inst.shape, &inst.kind)?;
            guard_enum(inst.shape.n())?;
            let standard = enumerate_standard_tableaux(&inst.shape).len();
            let sstd = enumerate_semistandard(&inst.shape, &inst.kind)?;
            let listing = if all {
                enumerate_color_tableaux(&inst.shape, &inst.kind)?
            } else {
                sstd.clone()
            };
            let total = crate::combinatorics::young_index(&inst.kind);
            if format == Format::Text {
                io(writeln!(out, "shape {} type {}", inst.shape, inst.kind))?;
                io(writeln!(out, "standard tableaux: {standard}"))?;
                io(writeln!(out, "tableaux of type: {total}"))?;
                io(writeln!(out, "semistandard: {}", sstd.len()))?;
                for t in &listing {
                    io(writeln!(out, "  {t}"))?;
                }
            } else {
                let strings: Vec<String> = listing.iter().map(ToString::to_string).collect();
                let v = json!({
                    "shape": inst.shape,
                    "type": inst.kind,
                    "standard": standard,
                    "tableaux": total.to_string(),
                    "semistandard": sstd.len(),
                    "listing": if all { "all" } else { "semistandard" },
                    "items": strings,
                });
                io(emit(out, format, &v))?;
            }
            Ok(EXIT_OK)
        }
        Command::Theta {
            inst,
            rep,
            all_sstd,
            field,
            rank,
            t0,
        } => {
            check_size(&inst.shape, &inst.kind)?;
            let ctx = match t0 {
                Some(s) => HomContext::with_t0(&inst.shape, &inst.kind, NumericTableau::parse(&s)?)?,
                None => HomContext::new(&inst.shape, &inst.kind)?,
            };
            let reps: Vec<Permutation> = if all_sstd {
                ctx.gamma_sstd()
            } else {
                rep.iter().map(|r| ctx.resolve_rep(r)).collect::<Result<_>>()?
            };
            let thetas: Vec<HomMatrix> = reps.iter().map(|d| ctx.theta_matrix(d)).collect::<Result<_>>()?;
            if rank {
                let r = stacked_rank(&thetas, field);
                if format == Format::Text {
                    io(writeln!(out, "{r}"))?;
                } else {
                    let v = json!({ "field": field.to_string(), "count": thetas.len(), "rank": r });
                    io(emit(out, format, &v))?;
                }
                return Ok(EXIT_OK);
            }
            let reduced: Vec<HomMatrix> = thetas.iter().map(|m| reduce(m, field)).collect();
            match format {
                Format::Text => {
                    for m in &reduced {
                        io(writeln!(out, "rep {} ({} x {}) over {}", m.rep, m.rows(), m.cols(), field))?;
                        io(print_matrix(out, &m.entries))?;
                    }
                }
                _ if all_sstd || reduced.len() != 1 => io(emit(out, format, &reduced))?,
                _ => io(emit(out, format, &reduced[0]))?,
            }
            Ok(EXIT_OK)
        }
        Command::HomDim { inst, field } => {
            check_size(&inst.shape, &inst.kind)?;
            let h = hom_dim_oracle(&inst.shape, &inst.kind, field)?;
            if format == Format::Text {
                io(writeln!(out, "{h}"))?;
            } else {
                let v = json!({ "shape": inst.shape, "type": inst.kind, "field": field.to_string(), "hom_dim": h });
                io(emit(out, format, &v))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_n,
            seed,
            timings,
        } => {
            let mut report = match suite {
                SuiteName::Paper => full_suite(seed),
                SuiteName::Properties => {
                    guard_enum(max_n)?;
                    properties_suite(SuiteConfig { max_n, seed })
                }
            };
            if !timings {
                report.strip_timings();
            }
            if format == Format::Text {
                for e in &report.entries {
                    let status = if e.pass { "PASS" } else { "FAIL" };
                    let time = e.elapsed_ms.map(|t| format!(" ({t} ms)")).unwrap_or_default();
                    io(writeln!(
                        out,
                        "[{status}] {}: {} | expected {} | computed {}{time}",
                        e.name, e.instance, e.expected, e.computed
                    ))?;
                }
            } else {
                io(emit(out, format, &report))?;
            }
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Counts { max_n, csv } => {
            guard_enum(max_n)?;
            let table = count_table(max_n);
            if csv {
                io(writeln!(out, "n,shape,type,semistandard,standard,index"))?;
                for (l, k, s, f, idx) in &table {
                    io(writeln!(out, "{},\"{l}\",\"{k}\",{s},{f},{idx}", l.n()))?;
                }
            } else if format == Format::Text {
                for (l, k, s, f, idx) in &table {
                    io(writeln!(out, "{l:<12} {k:<14} sstd {s:<4} std {f:<4} index {idx}"))?;
                }
            } else {
                let rows: Vec<_> = table
                    .iter()
                    .map(|(l, k, s, f, idx)| {
                        json!({ "shape": l, "type": k, "semistandard": s, "standard": f, "index": idx.to_string() })
                    })
                    .collect();
                io(emit(out, format, &rows))?;
            }
            Ok(EXIT_OK)
        }
    }
}
