//! Command-line front end: single negativity queries, figure-style
//! parameter sweeps, the self-verification suite and Bogoliubov
//! coefficient tables.
//!
//! Exit codes: 0 success, 1 verification failure, 2 flag parse error,
//! 3 domain error, 4 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use rindler::entanglement::{negativity_of, Detector, ObserverPair};
use rindler::states::StateKind;
use rindler::unruh::{r_of_acceleration, UnruhParams};

use rindler_cli::names::{parse_detector, parse_pair, parse_state};
use rindler_cli::output::sig12;
use rindler_cli::{coeffs, config, sweep, verify, CliError};

#[derive(Parser)]
#[command(
    name = "rindler",
    version,
    about = "Entanglement of a Dirac field mode seen by a uniformly accelerated observer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one negativity value
    Negativity(NegativityArgs),
    /// Sweep the acceleration parameter and write a CSV file
    Sweep(SweepArgs),
    /// Run the built-in identity suite
    Verify(VerifyArgs),
    /// Print a Bogoliubov coefficient table
    Coeffs(CoeffsArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("accel").required(true).args(["r", "a"])))]
struct NegativityArgs {
    /// Entangled state: psi-plus, psi-minus or psi1
    #[arg(long, value_parser = parse_state)]
    state: StateKind,
    /// |q_R| in [0, 1]
    #[arg(long)]
    qr: f64,
    /// Phase of q_L in radians
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    q_phase: f64,
    /// Acceleration parameter r in [0, π/4]
    #[arg(long, conflicts_with = "omega", allow_negative_numbers = true)]
    r: Option<f64>,
    /// Proper acceleration (used with --omega; r = arctan e^(−πΩ/a))
    #[arg(long, requires = "omega", allow_negative_numbers = true)]
    a: Option<f64>,
    /// Mode frequency Ω (used with --a)
    #[arg(long, requires = "a", allow_negative_numbers = true)]
    omega: Option<f64>,
    /// Observer pair: alice-rob or alice-antirob
    #[arg(long, value_parser = parse_pair)]
    pair: ObserverPair,
    /// Detector filter: full, particle or antiparticle
    #[arg(long, default_value = "full", value_parser = parse_detector)]
    detector: Detector,
}

#[derive(Args)]
struct SweepArgs {
    /// Entangled state: psi-plus, psi-minus or psi1
    #[arg(long, value_parser = parse_state)]
    state: Option<StateKind>,
    /// |q_R| values (repeat the flag or separate with commas)
    #[arg(long, value_delimiter = ',')]
    qr: Vec<f64>,
    /// Phase of q_L in radians
    #[arg(long, allow_negative_numbers = true)]
    q_phase: Option<f64>,
    /// Number of r grid points over [0, π/4]
    #[arg(long)]
    points: Option<usize>,
    /// Observer pairs to include (default: both)
    #[arg(long, value_delimiter = ',', value_parser = parse_pair)]
    pair: Vec<ObserverPair>,
    /// Detector filters to include (default: full)
    #[arg(long, value_delimiter = ',', value_parser = parse_detector)]
    detector: Vec<Detector>,
    /// Output CSV path
    #[arg(long)]
    output: Option<PathBuf>,
    /// Plain-text `key = value` configuration file; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Maximum accepted deviation per check
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
}

#[derive(Args)]
struct CoeffsArgs {
    /// Rindler mode energy E_Ω
    #[arg(long, allow_negative_numbers = true)]
    e_rindler: f64,
    /// Minkowski mode energy E_ω (must be positive)
    #[arg(long)]
    e_minkowski: f64,
    /// Rapidity parameter θ
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    theta: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with code 2 on parse errors
    let outcome = match cli.command {
        Command::Negativity(args) => run_negativity(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Verify(args) => return run_verify(args),
        Command::Coeffs(args) => coeffs::run(
            &mut std::io::stdout(),
            args.e_rindler,
            args.e_minkowski,
            args.theta,
        ),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn check_range(flag: &str, value: f64, lo: f64, hi: f64) -> Result<(), CliError> {
    if !(lo..=hi).contains(&value) {
        return Err(CliError::Domain(format!(
            "{flag} = {value} is outside [{lo}, {hi}]"
        )));
    }
    Ok(())
}

fn run_negativity(args: NegativityArgs) -> Result<(), CliError> {
    check_range("--qr", args.qr, 0.0, 1.0)?;
    let r = match (args.r, args.a, args.omega) {
        (Some(r), None, None) => {
            check_range("--r", r, 0.0, std::f64::consts::FRAC_PI_4)?;
            r
        }
        (None, Some(a), Some(omega)) => {
            if a <= 0.0 {
                return Err(CliError::Domain(format!("--a must be positive, got {a}")));
            }
            if omega <= 0.0 {
                return Err(CliError::Domain(format!(
                    "--omega must be positive, got {omega}"
                )));
            }
            let r = r_of_acceleration(omega, a).map_err(|e| CliError::Domain(e.to_string()))?;
            println!("r_omega = {}", sig12(r));
            r
        }
        _ => unreachable!("clap enforces the r|(a, omega) group"),
    };
    let params = UnruhParams::from_modulus(r, args.qr, args.q_phase)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    let n = negativity_of(args.state, &params, args.pair, args.detector);
    println!("{}", sig12(n));
    Ok(())
}

fn run_sweep(args: SweepArgs) -> Result<(), CliError> {
    let file = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            config::parse(&text)?
        }
        None => config::FileConfig::default(),
    };
    let domain = |e: String| CliError::Domain(e);
    let defaults = sweep::SweepConfig::default();

    let state = match (args.state, file.state) {
        (Some(s), _) => Some(s),
        (None, Some(name)) => Some(parse_state(&name).map_err(domain)?),
        (None, None) => None,
    };
    let q_r_values = if !args.qr.is_empty() {
        args.qr
    } else {
        file.qr.unwrap_or_default()
    };
    let pairs = if !args.pair.is_empty() {
        args.pair
    } else if let Some(names) = file.pairs {
        names
            .iter()
            .map(|n| parse_pair(n))
            .collect::<Result<_, _>>()
            .map_err(domain)?
    } else {
        defaults.pairs
    };
    let detectors = if !args.detector.is_empty() {
        args.detector
    } else if let Some(names) = file.detectors {
        names
            .iter()
            .map(|n| parse_detector(n))
            .collect::<Result<_, _>>()
            .map_err(domain)?
    } else {
        defaults.detectors
    };
    let cfg = sweep::SweepConfig {
        state,
        q_r_values,
        q_phase: args.q_phase.or(file.q_phase).unwrap_or(0.0),
        points: args.points.or(file.points).unwrap_or(defaults.points),
        pairs,
        detectors,
        output: args.output.or(file.output.map(PathBuf::from)),
    };
    sweep::run(&cfg)
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let results = verify::run_all();
    let stdout = std::io::stdout();
    match verify::report(&mut stdout.lock(), &results, args.tolerance) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(4)
        }
    }
}
