//! The `satelim` command line.
//!
//! Exit codes: 0 on success, 1 for parse and usage errors, 2 when a
//! computation fails (arithmetic, exponent overflow, budget), 3 when the two
//! elimination routes disagree.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{self, BenchConfig, Outcome, RandomParams};
use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::groebner::{module_equal, module_groebner_basis, module_syzygies, Budget};
use crate::idealops::{
    eliminate, homogenize_module, module_quotient, module_saturate, EliminationOptions, EliminationOutcome, Method,
};
use crate::io::{parse_polynomial, ProblemFile};
use crate::orders::{ModuleOrder, MonomialOrder};

#[derive(Parser, Debug)]
#[command(name = "satelim", version, about = "Gröbner bases, saturation and elimination over QQ and Fp")]
struct Cli {
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Abort a Gröbner basis computation after this many S-pairs
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_pairs: u64,
    /// Abort when a basis element exceeds this total degree
    #[arg(long, global = true, default_value_t = 4096)]
    max_degree: u32,
    /// Wall-clock limit in seconds (per method call for `bench`)
    #[arg(long, global = true)]
    time_limit: Option<f64>,
}

impl BudgetArgs {
    fn time_limit(&self) -> Result<Option<Duration>> {
        self.time_limit
            .map(|s| Duration::try_from_secs_f64(s).map_err(|_| Error::usage(format!("invalid time limit {s}"))))
            .transpose()
    }

    fn budget(&self) -> Result<Budget> {
        let b = Budget {
            max_pairs: self.max_pairs,
            max_degree: self.max_degree,
            deadline: None,
        };
        Ok(match self.time_limit()? {
            Some(d) => b.with_time_limit(d),
            None => b,
        })
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the reduced Gröbner basis of the generators
    Gb {
        /// Monomial order; defaults to the file's order
        #[arg(long)]
        order: Option<String>,
        file: PathBuf,
    },
    /// Print generators of the syzygy module of the generator list
    Syz { file: PathBuf },
    /// Print the reduced Gröbner basis of I : f
    Quotient {
        #[arg(long)]
        by: String,
        file: PathBuf,
    },
    /// Print the reduced Gröbner basis of I : f^∞
    Saturate {
        #[arg(long)]
        by: String,
        file: PathBuf,
    },
    /// Homogenize with a new variable and print the reduced Gröbner basis of
    /// the homogenization
    Homogenize {
        /// Name of the homogenizing variable
        #[arg(long, default_value = "x0")]
        var: String,
        /// Order of the extended ring; defaults to degrevlex
        #[arg(long)]
        order: Option<String>,
        file: PathBuf,
    },
    /// Eliminate the file's `elim` variables
    Eliminate {
        #[arg(long, value_enum, default_value_t = MethodArg::Saturation)]
        method: MethodArg,
        /// Order of the saturation route; defaults to degrevlex
        #[arg(long)]
        order: Option<String>,
        file: PathBuf,
    },
    /// Time both elimination routes and write CSV rows
    Bench {
        /// Directory of *.ideal problem files
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Add the curves b_i - t^i, i = 1..m, for m = 1..N
        #[arg(long, default_value_t = 0)]
        curves: usize,
        /// Add this many random instances
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coefficient field of the random instances (`QQ` or a prime)
        #[arg(long, default_value = "QQ")]
        random_field: String,
        #[arg(long, value_delimiter = ',', default_values = ["saturation", "block"])]
        methods: Vec<String>,
        /// Order of the saturation route
        #[arg(long, default_value = "degrevlex")]
        order: String,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Saturation,
    Block,
    Both,
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. Results go to `stdout`, diagnostics to `stderr`.
pub fn run_command<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "satelim: {e}");
            e.exit_code()
        }
    }
}

fn lines<T: Display>(out: &mut dyn Write, items: &[T]) -> Result<()> {
    for item in items {
        writeln!(out, "{item}")?;
    }
    Ok(())
}

/// Prints vectors of rank 1 as plain polynomials.
fn print_module(out: &mut dyn Write, gens: &[crate::polyring::VectorPoly], as_ideal: bool) -> Result<()> {
    for g in gens {
        if as_ideal {
            writeln!(out, "{}", g.comps()[0])?;
        } else {
            writeln!(out, "{g}")?;
        }
    }
    Ok(())
}

fn parse_order(text: &Option<String>) -> Result<Option<MonomialOrder>> {
    text.as_deref()
        .map(|s| {
            s.parse::<MonomialOrder>().map_err(|e| match e {
                Error::Parse { message, .. } => Error::usage(format!("--order: {message}")),
                other => other,
            })
        })
        .transpose()
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let budget = cli.budget.budget()?;
    match &cli.command {
        Command::Gb { order, file } => {
            let p = ProblemFile::read(file)?;
            let order = parse_order(order)?.unwrap_or_else(|| p.ring.order().clone());
            order.validate(p.ring.nvars())?;
            let gb = module_groebner_basis(&p.module()?, &ModuleOrder::top(order), &budget)?;
            print_module(out, gb.gens(), !p.is_module())?;
        }
        Command::Syz { file } => {
            let p = ProblemFile::read(file)?;
            let syz = module_syzygies(&p.gens, &budget)?;
            let m = module_groebner_basis(&syz.to_module()?, &ModuleOrder::top(p.ring.order().clone()), &budget)?;
            lines(out, m.gens())?;
        }
        Command::Quotient { by, file } => {
            let p = ProblemFile::read(file)?;
            let f = parse_polynomial(by, &p.ring).map_err(by_error)?;
            let q = module_quotient(&p.module()?, &f, &budget)?;
            print_module(out, q.gens(), !p.is_module())?;
        }
        Command::Saturate { by, file } => {
            let p = ProblemFile::read(file)?;
            let f = parse_polynomial(by, &p.ring).map_err(by_error)?;
            let s = module_saturate(&p.module()?, &f, &budget)?;
            print_module(out, s.basis.gens(), !p.is_module())?;
            writeln!(err, "saturation steps: {}", s.steps)?;
        }
        Command::Homogenize { var, order, file } => {
            let p = ProblemFile::read(file)?;
            let order = parse_order(order)?.unwrap_or_default();
            let h = homogenize_module(&p.module()?, var, &order, &budget)?;
            print_module(out, h.ih.gens(), !p.is_module())?;
            writeln!(err, "saturation steps: {}", h.saturation_steps)?;
        }
        Command::Eliminate { method, order, file } => {
            let p = ProblemFile::read(file)?;
            let problem = p.problem()?;
            let options = EliminationOptions {
                order: parse_order(order)?.unwrap_or_default(),
                homog_var: None,
                budget,
            };
            let as_ideal = !p.is_module();
            let show = |out: &mut dyn Write, o: &EliminationOutcome| print_module(out, o.basis.gens(), as_ideal);
            match method {
                MethodArg::Saturation => show(out, &eliminate(&problem, Method::Saturation, &options)?)?,
                MethodArg::Block => show(out, &eliminate(&problem, Method::Block, &options)?)?,
                MethodArg::Both => {
                    let sat = eliminate(&problem, Method::Saturation, &options)?;
                    let block = eliminate(&problem, Method::Block, &options)?;
                    let same = module_equal(
                        &sat.basis,
                        &block.basis,
                        &ModuleOrder::top(MonomialOrder::DegRevLex),
                        &options.budget,
                    )?;
                    show(out, &sat)?;
                    if same {
                        writeln!(out, "AGREE")?;
                    } else {
                        writeln!(out, "DISAGREE")?;
                        writeln!(err, "block route gave:")?;
                        show(err, &block)?;
                        return Ok(3);
                    }
                }
            }
        }
        Command::Bench {
            corpus,
            curves,
            random,
            seed,
            random_field,
            methods,
            order,
            repeats,
            out: path,
        } => {
            let mut instances = Vec::new();
            if let Some(dir) = corpus {
                instances.extend(bench::load_corpus(dir)?);
            }
            for m in 1..=*curves {
                instances.push(bench::curve_instance(m)?);
            }
            if *random > 0 {
                let field = match random_field.as_str() {
                    "QQ" => FieldSpec::Rationals,
                    p => FieldSpec::prime(p.parse().map_err(|_| Error::usage(format!("invalid field `{p}`")))?)?,
                };
                let params = RandomParams {
                    field,
                    ..Default::default()
                };
                instances.extend(bench::random_instances(&params, *random, *seed)?);
            }
            let config = BenchConfig {
                methods: methods.iter().map(|m| m.parse()).collect::<Result<_>>()?,
                order: parse_order(&Some(order.clone()))?.unwrap_or_default(),
                max_pairs: cli.budget.max_pairs,
                max_degree: cli.budget.max_degree,
                time_limit: cli.budget.time_limit()?,
                repeats: *repeats,
            };
            let rows = bench::run(&instances, &config)?;
            match path {
                Some(p) => {
                    let f = std::fs::File::create(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                    bench::write_csv(&rows, f)?;
                }
                None => bench::write_csv(&rows, &mut *out)?,
            }
            if rows.iter().any(|r| r.outcome == Outcome::Disagree) {
                writeln!(err, "satelim: the elimination routes disagree on at least one instance")?;
                return Ok(3);
            }
        }
    }
    Ok(0)
}

fn by_error(e: Error) -> Error {
    match e {
        Error::Parse { column, message, .. } => Error::usage(format!("--by, column {column}: {message}")),
        other => other,
    }
}
