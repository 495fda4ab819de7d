//! Command line front end: interface Riemann solutions, single-scheme
//! runs, proposed-vs-averaged comparisons, the regularization oracle and
//! the named figure presets.
//!
//! Exit codes: 0 success, 2 invalid arguments, 3 stability/CFL refusal,
//! 4 i/o failure.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use transport1d_core::characteristics::DEFAULT_TRACE_TOL;
use transport1d_core::harness::figures::run_figure;
use transport1d_core::harness::report::{
    save_comparison_csv, save_field_csv, save_sweep_csv, write_sweep_csv,
};
use transport1d_core::harness::{
    compare_schemes, default_plateau_window, extract_plateau, origin_adjacent_lambda,
    run_simulation, ExperimentConfig, InitialConditionKind, RunLength, TwoStateSpeed,
    DEFAULT_CFL, DEFAULT_NX, DEFAULT_T_FINAL, DEFAULT_X_MAX, DEFAULT_X_MIN,
};
use transport1d_core::viscous::DEFAULT_EPS_VISC;
use transport1d_core::{
    compute_lambda, epsilon_sweep, evaluate_regularized_solution, interface_solution,
    Grid1D, InterfaceSolution, RegularizationParams, RiemannData, SchemeKind, TraceMethod,
    TransportError,
};

#[derive(Parser)]
#[command(
    name = "transport1d",
    version,
    about = "1D linear transport with a discontinuous wave speed: \
             sign-aware interface Riemann solver, Godunov schemes and a \
             regularized characteristics oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one interface Riemann problem and print the solution
    Riemann(RiemannArgs),
    /// Run a single scheme and optionally write the final field as CSV
    Simulate(SimulateArgs),
    /// Run both Godunov variants on the same data and compare
    Compare(CompareArgs),
    /// Evaluate the regularized exact solution, or sweep it over ε
    Oracle(OracleArgs),
    /// Generate the data files of a named figure preset
    Figure(FigureArgs),
}

#[derive(Args)]
struct InterfaceData {
    /// Wave speed left of the origin
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    a_left: f64,
    /// Wave speed right of the origin
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    a_right: f64,
    /// State left of the origin
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    phi_left: f64,
    /// State right of the origin
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi_right: f64,
}

impl InterfaceData {
    fn riemann_data(&self) -> Result<RiemannData, TransportError> {
        RiemannData::new(self.a_left, self.a_right, self.phi_left, self.phi_right)
    }
}

#[derive(Args)]
struct RiemannArgs {
    #[command(flatten)]
    data: InterfaceData,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeChoice {
    Proposed,
    Averaged,
    Viscous,
}

impl From<SchemeChoice> for SchemeKind {
    fn from(choice: SchemeChoice) -> Self {
        match choice {
            SchemeChoice::Proposed => SchemeKind::ProposedGodunov,
            SchemeChoice::Averaged => SchemeKind::AveragedGodunov,
            SchemeChoice::Viscous => SchemeKind::ViscousCentered,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IcChoice {
    /// Two constant states with a jump at the origin
    Riemann,
    /// Continuous sinusoid
    Sin,
    /// Sinusoid shifted apart across the origin
    SinJump,
    /// Discontinuous piecewise polynomial
    PolyJump,
}

#[derive(Args)]
struct GridRunArgs {
    /// Number of grid cells
    #[arg(long, default_value_t = DEFAULT_NX)]
    nx: usize,
    /// CFL number in (0, 1]
    #[arg(long, default_value_t = DEFAULT_CFL)]
    cfl: f64,
    /// Final time
    #[arg(long, default_value_t = DEFAULT_T_FINAL)]
    t_final: f64,
    /// Run a fixed number of steps instead of to --t-final
    #[arg(long)]
    steps: Option<usize>,
    /// Initial condition
    #[arg(long, value_enum, default_value_t = IcChoice::Riemann)]
    ic: IcChoice,
    /// Offset added/subtracted across the origin for --ic sin-jump
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    jump: f64,
}

impl GridRunArgs {
    fn config(
        &self,
        data: &InterfaceData,
        scheme: SchemeKind,
    ) -> Result<ExperimentConfig, TransportError> {
        let ic = match self.ic {
            IcChoice::Riemann => InitialConditionKind::RiemannJump {
                phi_left: data.phi_left,
                phi_right: data.phi_right,
            },
            IcChoice::Sin => InitialConditionKind::sinusoid_default(),
            IcChoice::SinJump => InitialConditionKind::SinusoidJump {
                amplitude: 1.0,
                wavenumber: 2.0,
                jump: self.jump,
            },
            IcChoice::PolyJump => InitialConditionKind::polynomial_jump_default(),
        };
        Ok(ExperimentConfig {
            grid: Grid1D::new(DEFAULT_X_MIN, DEFAULT_X_MAX, self.nx)?,
            speeds: TwoStateSpeed {
                a_left: data.a_left,
                a_right: data.a_right,
            },
            ic,
            scheme,
            run_length: match self.steps {
                Some(n) => RunLength::Steps(n),
                None => RunLength::FinalTime(self.t_final),
            },
            cfl: self.cfl,
            eps_visc: DEFAULT_EPS_VISC,
        })
    }
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    data: InterfaceData,
    #[command(flatten)]
    run: GridRunArgs,
    /// Scheme to run
    #[arg(long, value_enum, default_value_t = SchemeChoice::Proposed)]
    scheme: SchemeChoice,
    /// Output CSV path
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    data: InterfaceData,
    #[command(flatten)]
    run: GridRunArgs,
    /// Output CSV path
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    data: InterfaceData,
    /// Regularization half-width for a single evaluation
    #[arg(long)]
    epsilon: Option<f64>,
    /// Comma-separated descending ε list for a sweep
    #[arg(long, value_delimiter = ',')]
    epsilons: Option<Vec<f64>>,
    /// Probe position
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    probe: f64,
    /// Evaluation time
    #[arg(long, default_value_t = 0.1)]
    t_final: f64,
    /// Output CSV path (sweep only; defaults to stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FigureArgs {
    /// Preset id (1-5, 10-17)
    id: String,
    /// Output directory
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

fn speed_case_label(data: &RiemannData) -> &'static str {
    use transport1d_core::SpeedCase::*;
    match transport1d_core::classify(data.a_left, data.a_right, 0.0) {
        Ok(BothPositive) => "both speeds positive",
        Ok(BothNegative) => "both speeds negative",
        Ok(LeftNegRightPos) => "opening fan (a_left < 0 < a_right)",
        Ok(LeftPosRightNeg) => "converging speeds (blocked)",
        Ok(Degenerate) => "degenerate (zero speed on a side)",
        Err(_) => "invalid",
    }
}

fn cmd_riemann(args: &RiemannArgs) -> Result<(), TransportError> {
    let data = args.data.riemann_data()?;
    let solution = interface_solution(&data, 0.0)?;
    println!("case: {}", speed_case_label(&data));
    match solution {
        InterfaceSolution::LeftState(v) => {
            println!("solution: left state transported across the interface");
            println!("phi_interface = {v}");
        }
        InterfaceSolution::RightState(v) => {
            println!("solution: right state transported across the interface");
            println!("phi_interface = {v}");
        }
        InterfaceSolution::Intermediate(lambda) => {
            println!("solution: intermediate constant state");
            println!("lambda = {lambda}");
        }
        InterfaceSolution::Blocked(left, right) => {
            println!("solution: blocked, both states stay in place");
            println!("phi_left = {left}");
            println!("phi_right = {right}");
        }
    }
    Ok(())
}

fn cmd_simulate(args: &SimulateArgs) -> Result<(), TransportError> {
    let config = args.run.config(&args.data, args.scheme.into())?;
    let outcome = run_simulation(&config)?;
    let m = &outcome.meta;
    println!("scheme = {}", m.scheme.name());
    println!("nx = {}, h = {}, dt = {}, n_steps = {}", m.nx, m.h, m.dt, m.n_steps);
    println!("t_final = {}", m.t_final);
    if let Some(lambda) = origin_adjacent_lambda(&config)? {
        println!("lambda_exact = {lambda}");
        let window = default_plateau_window(&config.speeds, m.t_final);
        match extract_plateau(&outcome.state, window) {
            Ok(Some(p)) => println!("plateau = {p}"),
            Ok(None) => println!("plateau = absent"),
            Err(_) => {}
        }
    }
    if let Some(path) = &args.out {
        save_field_csv(&outcome.state, path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_compare(args: &CompareArgs) -> Result<(), TransportError> {
    let config = args
        .run
        .config(&args.data, SchemeKind::ProposedGodunov)?;
    let report = compare_schemes(&config)?;
    let m = &report.meta;
    println!("nx = {}, h = {}, dt = {}, n_steps = {}", m.nx, m.h, m.dt, m.n_steps);
    println!("t_final = {}", m.t_final);
    match report.lambda_exact {
        Some(l) => println!("lambda_exact = {l}"),
        None => println!("lambda_exact = absent"),
    }
    match report.plateau_proposed {
        Some(p) => println!("plateau_proposed = {p}"),
        None => println!("plateau_proposed = absent"),
    }
    match report.plateau_averaged {
        Some(p) => println!("plateau_averaged = {p}"),
        None => println!("plateau_averaged = absent"),
    }
    println!("max_abs_diff = {}", report.max_abs_diff);
    if let Some(path) = &args.out {
        save_comparison_csv(&report, path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_oracle(args: &OracleArgs) -> Result<(), TransportError> {
    let data = args.data.riemann_data()?;
    if let Some(epsilons) = &args.epsilons {
        let sweep = epsilon_sweep(args.probe, args.t_final, &data, epsilons)?;
        match &args.out {
            Some(path) => {
                save_sweep_csv(&sweep, path)?;
                println!("wrote {}", path.display());
            }
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                write_sweep_csv(&sweep, &mut lock)?;
                lock.flush()?;
            }
        }
        return Ok(());
    }
    let epsilon = args.epsilon.ok_or_else(|| {
        TransportError::InvalidInput("oracle needs --epsilon or --epsilons".into())
    })?;
    let params = RegularizationParams::new(epsilon, data)?;
    let value = evaluate_regularized_solution(
        args.probe,
        args.t_final,
        &params,
        TraceMethod::Numeric {
            tol: DEFAULT_TRACE_TOL,
        },
    )?;
    println!("phi_eps = {value}");
    if let Ok(lambda) = compute_lambda(&data) {
        if data.a_left < 0.0 && data.a_right > 0.0 {
            println!("lambda = {lambda}");
            println!("abs_err_vs_lambda = {}", (value - lambda).abs());
        }
    }
    Ok(())
}

fn cmd_figure(args: &FigureArgs) -> Result<(), TransportError> {
    let paths = run_figure(&args.id, &args.out)?;
    for p in paths {
        println!("wrote {}", p.display());
    }
    Ok(())
}

fn exit_code(err: &TransportError) -> u8 {
    match err {
        TransportError::Stability { .. } | TransportError::StepUnderflow { .. } => 3,
        TransportError::Io(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Riemann(args) => cmd_riemann(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Figure(args) => cmd_figure(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
