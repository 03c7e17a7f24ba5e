//! Command-line front end: evaluate connective expressions, classify
//! negations, extract natural negations, materialize ordinal sums, verify
//! theorems on families, and run the acceptance battery.
//!
//! Exit status: 0 = all checks passed, 1 = a verification failed (witnesses
//! in the output), 2 = configuration error (parse errors, kind mismatches,
//! unsatisfied theorem preconditions).

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use ordsum::analysis::{classify_negation, AnalysisBudget, ClassReport};
use ordsum::config::{expr_from_str, family_from_str};
use ordsum::natural_negation::{
    natural_negation_implication, natural_negation_tconorm, natural_negation_tnorm,
    SupInfOracleConfig,
};
use ordsum::ordinal_sum::{
    left_ordinal_sum_implication, ordinal_sum_implication_rescher, ordinal_sum_negation,
    ordinal_sum_tconorm, ordinal_sum_tnorm, SummandFamily, SumVariant,
};
use ordsum::suite::{csv_num, run_suite, SuiteConfig};
use ordsum::verification::{falsify, verify, TheoremId, Verdict};
use ordsum::{unit_grid, ConnectiveExpr, ConnectiveKind, Error as OrdsumError};
use serde_json::json;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ordsum",
    version,
    about = "Ordinal sums of fuzzy connectives: evaluation, classification, natural negations and theorem verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Expression or family input: a JSON config file or an inline string.
#[derive(Args, Clone)]
struct InputArgs {
    /// JSON config file
    config: Option<PathBuf>,
    /// inline JSON config
    #[arg(long, conflicts_with = "config")]
    expr: Option<String>,
}

impl InputArgs {
    fn read(&self) -> anyhow::Result<String> {
        match (&self.config, &self.expr) {
            (Some(path), None) => fs::read_to_string(path)
                .with_context(|| format!("cannot read config file {}", path.display())),
            (None, Some(inline)) => Ok(inline.clone()),
            _ => Err(anyhow!("provide a config file path or --expr")),
        }
    }
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// grid resolution for sampling and verification
    #[arg(long, default_value_t = 1001)]
    grid: usize,
    /// grid equality tolerance
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// sup/inf oracle tolerance
    #[arg(long = "nat-tol", default_value_t = 1e-8)]
    nat_tol: f64,
    /// sup/inf oracle bisection step cap
    #[arg(long = "nat-steps", default_value_t = 60)]
    nat_steps: u32,
    /// write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression at a point: --at X for unary, --at X,Y for binary
    Eval {
        #[command(flatten)]
        input: InputArgs,
        /// argument value(s), comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        at: Vec<f64>,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Classify a negation (strict/strong/crisp/frontier/...)
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Natural negation of a t-norm, t-conorm or implication, as a sampled table
    Natural {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Ordinal sum of a family config, as a sampled table
    Sum {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Check one theorem on one family
    Verify {
        /// theorem id (e.g. negation_axioms, strong_sufficient, commuting_diagram)
        #[arg(long)]
        theorem: String,
        /// run the falsification direction instead
        #[arg(long)]
        falsify: bool,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Sample any expression on the grid as CSV
    Table {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run the full randomized acceptance battery and emit its CSV
    Suite {
        /// master seed for the battery
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

/// Validated run parameters shared by every command.
struct RunConfig {
    budget: AnalysisBudget,
    oracle: SupInfOracleConfig,
    out: Option<PathBuf>,
}

impl RunConfig {
    fn from_opts(opts: &CommonOpts) -> Result<Self, OrdsumError> {
        Ok(RunConfig {
            budget: AnalysisBudget::new(opts.grid, 4096, opts.tol)?,
            oracle: SupInfOracleConfig::new(opts.nat_tol, opts.nat_steps, 0.0)?,
            out: opts.out.clone(),
        })
    }

    fn emit(&self, content: &str) -> anyhow::Result<()> {
        match &self.out {
            Some(path) => fs::write(path, content)
                .with_context(|| format!("cannot write {}", path.display())),
            None => {
                print!("{content}");
                Ok(())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Eval { input, at, opts } => {
            let cfg = RunConfig::from_opts(&opts)?;
            let expr = parse_expr(&input, &cfg)?;
            let value = match (expr.arity(), at.as_slice()) {
                (1, [x]) => expr.eval1(*x)?,
                (2, [x, y]) => expr.eval2(*x, *y)?,
                (arity, args) => {
                    return Err(anyhow!(
                        "expression takes {arity} argument(s), --at supplied {}",
                        args.len()
                    ))
                }
            };
            cfg.emit(&format!("{value}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { input, opts } => {
            let cfg = RunConfig::from_opts(&opts)?;
            let expr = parse_expr(&input, &cfg)?;
            let report = classify_negation(&expr, &cfg.budget)?;
            println!("{report}");
            if cfg.out.is_some() {
                cfg.emit(&(class_report_json(&report).to_string() + "\n"))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Natural { input, opts } => {
            let cfg = RunConfig::from_opts(&opts)?;
            let expr = parse_expr(&input, &cfg)?;
            let negation = match expr.kind() {
                ConnectiveKind::TNorm => natural_negation_tnorm(&expr, cfg.oracle)?,
                ConnectiveKind::TConorm => natural_negation_tconorm(&expr, cfg.oracle)?,
                ConnectiveKind::Implication => natural_negation_implication(&expr)?,
                ConnectiveKind::Negation => {
                    return Err(anyhow!(
                        "natural negations are extracted from t-norms, t-conorms or implications"
                    ))
                }
            };
            cfg.emit(&unary_table(&negation, cfg.budget.grid_points)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sum { input, opts } => {
            let cfg = RunConfig::from_opts(&opts)?;
            let family = parse_family(&input, &cfg)?;
            let expr = build_sum(family)?;
            cfg.emit(&table_for(&expr, cfg.budget.grid_points)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            falsify: falsification,
            input,
            opts,
        } => {
            let cfg = RunConfig::from_opts(&opts)?;
            let theorem = TheoremId::parse(&theorem)?;
            let family = parse_family(&input, &cfg)?;
            let report = if falsification {
                falsify(theorem, &family, &cfg.budget, &cfg.oracle)?
            } else {
                verify(theorem, &family, &cfg.budget, &cfg.oracle)?
            };
            let text = format!("{report}");
            println!("{text}");
            if cfg.out.is_some() {
                cfg.emit(&text)?;
            }
            Ok(match report.verdict {
                Verdict::Pass => ExitCode::SUCCESS,
                Verdict::Fail => ExitCode::from(1),
                Verdict::HypothesesNotMet => ExitCode::from(2),
            })
        }
        Command::Table { input, opts } => {
            let cfg = RunConfig::from_opts(&opts)?;
            let expr = parse_expr(&input, &cfg)?;
            cfg.emit(&table_for(&expr, cfg.budget.grid_points)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Suite { seed, opts } => {
            let cfg = RunConfig::from_opts(&opts)?;
            let suite_cfg = SuiteConfig {
                seed,
                budget: cfg.budget,
                oracle: cfg.oracle,
            };
            let report = run_suite(&suite_cfg)?;
            cfg.emit(&report.to_csv())?;
            if cfg.out.is_some() {
                print!("{}", report.summary());
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn parse_expr(input: &InputArgs, cfg: &RunConfig) -> anyhow::Result<ConnectiveExpr> {
    let text = input.read()?;
    Ok(expr_from_str(&text, &cfg.budget, &cfg.oracle)?)
}

fn parse_family(input: &InputArgs, cfg: &RunConfig) -> anyhow::Result<SummandFamily> {
    let text = input.read()?;
    Ok(family_from_str(&text, &cfg.budget, &cfg.oracle)?)
}

fn build_sum(family: SummandFamily) -> Result<ConnectiveExpr, OrdsumError> {
    match family.variant() {
        SumVariant::Negation => ordinal_sum_negation(family),
        SumVariant::TNorm => ordinal_sum_tnorm(family),
        SumVariant::TConorm => ordinal_sum_tconorm(family),
        SumVariant::ImplicationRescher => ordinal_sum_implication_rescher(family),
        SumVariant::ImplicationLeft => left_ordinal_sum_implication(family),
    }
}

fn table_for(expr: &ConnectiveExpr, grid: usize) -> anyhow::Result<String> {
    match expr.arity() {
        1 => unary_table(expr, grid),
        _ => binary_table(expr, grid),
    }
}

fn unary_table(expr: &ConnectiveExpr, grid: usize) -> anyhow::Result<String> {
    let mut out = String::from("x,value\n");
    for x in unit_grid(grid) {
        let v = expr.eval1(x)?;
        let _ = writeln!(out, "{},{}", csv_num(x), csv_num(v));
    }
    Ok(out)
}

fn binary_table(expr: &ConnectiveExpr, grid: usize) -> anyhow::Result<String> {
    let mut out = String::from("x,y,value\n");
    for x in unit_grid(grid) {
        for y in unit_grid(grid) {
            let v = expr.eval2(x, y)?;
            let _ = writeln!(out, "{},{},{}", csv_num(x), csv_num(y), csv_num(v));
        }
    }
    Ok(out)
}

fn class_report_json(report: &ClassReport) -> serde_json::Value {
    let flags: serde_json::Map<String, serde_json::Value> = report
        .flags
        .iter()
        .map(|(class, verdict)| (class.name().to_string(), json!(verdict.name())))
        .collect();
    let witnesses: Vec<serde_json::Value> = report
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "class": w.class.name(),
                "points": w.points,
                "values": w.values,
            })
        })
        .collect();
    json!({
        "grid_size": report.grid_size,
        "flags": flags,
        "witnesses": witnesses,
    })
}
