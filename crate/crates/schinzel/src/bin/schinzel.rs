use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use schinzel::dossier::dihedral_dossier;
use schinzel::json::{AutomorphismJson, CompBranchJson, GroupJson, NielsenReportJson, TupleJson, VerdictJson};
use schinzel::search::{search_schinzel, verify_normal_infinity_conjecture, SearchConfig, DEFAULT_MAX_DEGREE};
use schinzel::{cache_dir_from_env, order_bound_from_env, CliError, CliResult};
use schinzel_core::nielsen::{enumerate_nielsen, Equivalence, NielsenClassSpec, SlotOrder};
use schinzel_core::schinzel::{charschinzel_check, is_newly_reducible, PairSetup};
use schinzel_core::wreath::solve_comp_branch;
use schinzel_core::{ClassTable, Perm};

/// Branch-cycle computations for variables-separated pairs (f, ζ_v f).
#[derive(Parser)]
#[command(name = "schinzel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EqArg {
    Abs,
    Inner,
}

#[derive(Subcommand)]
enum Command {
    /// Dossier for the Chebyshev tuple of even degree n.
    Dihedral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate a Nielsen class.
    Nielsen {
        /// Group JSON: {degree, generators}.
        #[arg(long)]
        group: PathBuf,
        /// Comma-separated class labels (`2.2@(1 4)(2 3)`) or elements in
        /// cycle notation.
        #[arg(long)]
        classes: String,
        #[arg(long, value_enum, default_value = "abs")]
        equivalence: EqArg,
        /// Match classes slot by slot instead of as a multiset.
        #[arg(long)]
        slotwise: bool,
    },
    /// Galois-closure conditions and reducibility verdicts for (t, γ).
    Schinzel {
        /// Tuple JSON; its entries generate G.
        #[arg(long)]
        tuple: PathBuf,
        /// Automorphism JSON: {generators, images}.
        #[arg(long)]
        gamma: PathBuf,
        #[arg(long)]
        v: usize,
    },
    /// Branch cycles of z² composed with T_n.
    Compbranch {
        #[arg(long)]
        n: usize,
    },
    /// Candidate search up to a maximal degree.
    Search {
        #[command(flatten)]
        opts: SearchOpts,
    },
    /// Evidence for the normal-⟨σ_∞⟩ conjecture.
    Conjecture {
        #[command(flatten)]
        opts: SearchOpts,
    },
}

#[derive(clap::Args)]
struct SearchOpts {
    #[arg(long = "max-n", default_value_t = DEFAULT_MAX_DEGREE)]
    max_n: usize,
    #[arg(long)]
    v: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Overrides SCHINZEL_ORDER_BOUND.
    #[arg(long = "order-bound")]
    order_bound: Option<usize>,
    /// Also write the report here.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long = "no-cache")]
    no_cache: bool,
    /// Include wall-clock timings (output then varies between runs).
    #[arg(long)]
    timings: bool,
}

impl SearchOpts {
    fn config(&self) -> CliResult<SearchConfig> {
        Ok(SearchConfig {
            max_degree: self.max_n,
            v: self.v,
            order_bound: match self.order_bound {
                Some(b) => b,
                None => order_bound_from_env()?,
            },
            jobs: self.jobs,
            report_path: self.report.clone(),
            cache_dir: (!self.no_cache).then(cache_dir_from_env),
            timings: self.timings,
        })
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_slice(&bytes)?)
}

fn print_json<T: Serialize>(value: &T) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    let text = serde_json::to_string_pretty(value)?;
    match writeln!(out, "{text}") {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn resolve_class(table: &ClassTable, label: &str) -> CliResult<usize> {
    if let Some(k) = table.find_label(label) {
        return Ok(k);
    }
    let p = Perm::parse(label, table.group().degree())?;
    table
        .class_of(&p)
        .ok_or_else(|| CliError::Usage(format!("{label} is not in the group")))
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Dihedral { n, json } => {
            let d = dihedral_dossier(n)?;
            if json {
                print_json(&d)
            } else {
                print!("{}", d.summary());
                Ok(())
            }
        }
        Command::Nielsen {
            group,
            classes,
            equivalence,
            slotwise,
        } => {
            let g = read_json::<GroupJson>(&group)?.to_group(order_bound_from_env()?)?;
            let table = ClassTable::new(&g);
            let wanted = classes
                .split(',')
                .map(|l| resolve_class(&table, l.trim()))
                .collect::<CliResult<Vec<_>>>()?;
            let eq = match equivalence {
                EqArg::Abs => Equivalence::Absolute,
                EqArg::Inner => Equivalence::Inner,
            };
            let mut spec = NielsenClassSpec::new(table.clone(), wanted.clone(), eq)?;
            if slotwise {
                spec = spec.with_slot_order(SlotOrder::Slotwise);
            }
            let e = enumerate_nielsen(&spec)?;
            print_json(&NielsenReportJson::new(&g, &table, &wanted, eq, &e))
        }
        Command::Schinzel { tuple, gamma, v } => {
            let t = read_json::<TupleJson>(&tuple)?.to_tuple()?;
            let g = t.generated_group(order_bound_from_env()?)?;
            let gamma = read_json::<AutomorphismJson>(&gamma)?.to_automorphism(&g)?;
            let report = charschinzel_check(&g, &t, &gamma, v)?;
            let nr = is_newly_reducible(&PairSetup::natural(&g, &gamma)?)?;
            print_json(&VerdictJson::new(&nr, Some(&report)))
        }
        Command::Compbranch { n } => {
            if n < 4 || n % 2 != 0 {
                return Err(CliError::Usage(format!("n = {n} must be even and at least 4")));
            }
            let s = solve_comp_branch(n)?;
            print_json(&CompBranchJson::from(&s))?;
            if !s.roundtrip {
                return Err(CliError::Invariant("fiber restriction does not round-trip".into()));
            }
            Ok(())
        }
        Command::Search { opts } => print_json(&search_schinzel(&opts.config()?)?),
        Command::Conjecture { opts } => print_json(&verify_normal_infinity_conjecture(&opts.config()?)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("schinzel: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
