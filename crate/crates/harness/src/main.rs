use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ssw_core::fv::{Limiter, Order, PathMode, SolverKind, SpeedMode};
use ssw_harness::{all_cases, convergence_csv, find_case, run_convergence, run_exact, run_fv, verify_case, CaseSpec, RunConfig};

#[derive(Parser)]
#[command(name = "ssw", version, about = "Exact and finite volume solutions of shear shallow water Riemann problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample the exact solution of a case.
    Exact {
        #[arg(long)]
        case: String,
        /// Output time; the case default when omitted.
        #[arg(long)]
        time: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        g: Option<f64>,
    },
    /// Run a finite volume scheme on a case.
    Solve {
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 200)]
        cells: usize,
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// L1 errors against the exact solution for several grid sizes.
    Convergence {
        #[arg(long)]
        case: String,
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        cells: Vec<usize>,
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check jump conditions and invariants of every exact case solution.
    Verify,
    /// List the available cases.
    ListCases,
}

#[derive(Args)]
struct SchemeArgs {
    #[arg(long, value_enum, default_value_t = OrderArg::Two)]
    order: OrderArg,
    #[arg(long, value_enum, default_value_t = SolverArg::Hllc5)]
    solver: SolverArg,
    #[arg(long, default_value_t = 0.45)]
    cfl: f64,
    #[arg(long, value_enum, default_value_t = SpeedArg::Approx)]
    speeds: SpeedArg,
    #[arg(long, value_enum, default_value_t = PathArg::PerWave)]
    path: PathArg,
    #[arg(long, value_enum, default_value_t = LimiterArg::Minmod)]
    limiter: LimiterArg,
    /// Final time; the case default when omitted.
    #[arg(long)]
    time: Option<f64>,
    #[arg(long)]
    g: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    Hll,
    Hllc3,
    Hllc5,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpeedArg {
    Approx,
    Exact,
    OneSided,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    PerWave,
    Linear,
}

#[derive(Clone, Copy, ValueEnum)]
enum LimiterArg {
    Minmod,
    VanLeer,
    Mc,
    None,
}

impl SchemeArgs {
    fn config(&self, cells: usize) -> RunConfig {
        RunConfig {
            cells,
            order: match self.order {
                OrderArg::One => Order::First,
                OrderArg::Two => Order::Second,
            },
            solver: match self.solver {
                SolverArg::Hll => SolverKind::Hll,
                SolverArg::Hllc3 => SolverKind::Hllc3,
                SolverArg::Hllc5 => SolverKind::Hllc5,
            },
            cfl: self.cfl,
            speeds: match self.speeds {
                SpeedArg::Approx => SpeedMode::Approximate,
                SpeedArg::Exact => SpeedMode::ExactFromRiemann,
                SpeedArg::OneSided => SpeedMode::OneSided,
            },
            path: match self.path {
                PathArg::PerWave => PathMode::PerWave,
                PathArg::Linear => PathMode::Linear,
            },
            limiter: match self.limiter {
                LimiterArg::Minmod => Limiter::Minmod,
                LimiterArg::VanLeer => Limiter::VanLeer,
                LimiterArg::Mc => Limiter::Mc,
                LimiterArg::None => Limiter::None,
            },
            time: self.time,
        }
    }
}

fn case(name: &str, g: Option<f64>) -> anyhow::Result<CaseSpec> {
    let c = find_case(name).ok_or_else(|| anyhow!("unknown case '{name}'; see `ssw list-cases`"))?;
    Ok(match g {
        Some(g) => c.with_g(g),
        None => c,
    })
}

fn emit(text: &str, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout().lock().write_all(text.as_bytes()).context("writing to standard output"),
    }
}

fn main() -> anyhow::Result<ExitCode> {
    match Cli::parse().command {
        Command::Exact { case: name, time, samples, out, g } => {
            let c = case(&name, g)?;
            let profile = run_exact(&c, samples, time.unwrap_or(c.t_final))?;
            emit(&profile.to_csv(), out.as_ref())?;
        }
        Command::Solve { case: name, cells, scheme, out } => {
            let c = case(&name, scheme.g)?;
            let profile = run_fv(&c, &scheme.config(cells))?;
            emit(&profile.to_csv(), out.as_ref())?;
        }
        Command::Convergence { case: name, cells, scheme, out } => {
            let c = case(&name, scheme.g)?;
            let rows = run_convergence(&c, &scheme.config(RunConfig::MIN_CELLS), &cells)?;
            emit(&convergence_csv(&rows), out.as_ref())?;
        }
        Command::Verify => {
            let mut ok = true;
            for c in all_cases() {
                let r = verify_case(&c)?;
                let v = r.verification;
                let status = if r.passed() { "PASS" } else { "FAIL" };
                println!(
                    "{status} {:<18} jump {:.2e} energy {:.2e} fan {:.2e} lax {} ordered {}",
                    r.name, v.jump, v.energy, v.fan_invariants, v.lax, v.ordered
                );
                ok &= r.passed();
            }
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Command::ListCases => {
            for c in all_cases() {
                println!("{:<18} t = {:<5} {}", c.name, c.t_final, c.description);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
