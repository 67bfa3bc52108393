use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mrspec::cli::{
    self, CompareArgs, Coupling, Figure, Format, RunConfig, SampleGrid, SpectrumArgs, Strength, TableKind,
    TableSpec, UnitsChoice, WavefunctionArgs,
};
use mrspec::{Error, MoleculeRegistry, QuantumState, Result, UnitSystem};

/// Bound states of the Manning-Rosen potential.
#[derive(Parser)]
#[command(name = "mrspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form energies for given states, or all bound states up to --l-max.
    Spectrum {
        #[command(flatten)]
        phys: Physics,
        #[arg(long = "state", value_name = "LABEL")]
        states: Vec<QuantumState>,
        #[arg(long, default_value_t = 3)]
        l_max: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Reproduce one of the published energy tables.
    Table {
        which: TableKind,
        /// Restrict a molecular table to one molecule.
        #[arg(long)]
        molecule: Option<String>,
        /// Override the α columns.
        #[arg(long = "alpha")]
        alphas: Vec<f64>,
        /// With --state: evaluate every state at these 1/b values.
        #[arg(long = "inv-b")]
        inv_b: Vec<f64>,
        #[arg(long = "state", value_name = "LABEL")]
        states: Vec<QuantumState>,
        #[command(flatten)]
        units: Units,
        /// Add oracle columns for the greene-aldrich and exact schemes.
        #[arg(long)]
        with_oracle: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Curves behind the potential and centrifugal-approximation plots.
    FigureData {
        which: Figure,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Closed form against the finite-difference oracle.
    Compare {
        #[command(flatten)]
        phys: Physics,
        #[arg(long = "state", value_name = "LABEL")]
        states: Vec<QuantumState>,
        /// Pass threshold for the greene-aldrich rows, in energy units.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Exit with status 3 when any row fails.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Sample a normalized radial wavefunction.
    Wavefunction {
        #[command(flatten)]
        phys: Physics,
        #[arg(long, value_name = "LABEL")]
        state: QuantumState,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Physics {
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long = "inv-b")]
    inv_b: f64,
    /// Coupling A: a number or `2b`.
    #[arg(long = "A", value_name = "A", conflicts_with = "z")]
    strength: Option<Strength>,
    /// Hulthén-style charge Z, with A·ħ²/(2μb²) = Ze²/b.
    #[arg(long = "Z", id = "z", value_name = "Z")]
    charge: Option<f64>,
    /// Molecule whose reduced mass sets the units.
    #[arg(long)]
    molecule: Option<String>,
    #[command(flatten)]
    units: Units,
}

#[derive(Clone, Copy, ValueEnum)]
enum UnitsKind {
    Atomic,
    Molecular,
    Custom,
}

#[derive(Args)]
struct Units {
    /// Defaults to molecular when --molecule is given, atomic otherwise.
    #[arg(long)]
    units: Option<UnitsKind>,
    #[arg(long)]
    hbar: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    r_min: Option<f64>,
    #[arg(long)]
    r_max: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
}

#[derive(Args)]
struct Output {
    #[arg(long, default_value = "csv")]
    format: Format,
    #[arg(long, default_value_t = cli::DEFAULT_PRECISION)]
    precision: usize,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

impl Units {
    fn choice(&self, molecule: Option<&str>) -> Result<UnitsChoice> {
        match (self.units, molecule) {
            (Some(UnitsKind::Custom), _) => match (self.hbar, self.mu) {
                (Some(hbar), Some(mu)) => Ok(UnitsChoice::Custom { hbar, mu }),
                _ => Err(Error::Domain("--units custom needs --hbar and --mu".into())),
            },
            (Some(UnitsKind::Molecular), None) => Err(Error::Domain("--units molecular needs --molecule".into())),
            (Some(UnitsKind::Molecular) | None, Some(m)) => Ok(UnitsChoice::Molecular(m.to_owned())),
            (Some(UnitsKind::Atomic) | None, _) => Ok(UnitsChoice::Atomic),
        }
    }
}

impl Physics {
    fn resolve(&self, registry: &MoleculeRegistry) -> Result<(mrspec::PotentialParams, UnitSystem)> {
        let units = self.units.choice(self.molecule.as_deref())?.resolve(registry)?;
        let coupling = match self.charge {
            Some(z) => Coupling::Charge(z),
            None => Coupling::Strength(self.strength.unwrap_or_default()),
        };
        let params = cli::potential_from(self.alpha, self.inv_b, coupling, &units)?;
        Ok((params, units))
    }
}

impl GridArgs {
    fn sample_grid(&self, default: impl FnOnce() -> Result<SampleGrid>) -> Result<Option<SampleGrid>> {
        if self.r_min.is_none() && self.r_max.is_none() && self.points.is_none() {
            return Ok(None);
        }
        let d = default()?;
        SampleGrid::new(
            self.r_min.unwrap_or(d.r_min()),
            self.r_max.unwrap_or(d.r_max()),
            self.points.unwrap_or(d.points()),
        )
        .map(Some)
    }
}

impl Output {
    fn config(self) -> RunConfig {
        RunConfig {
            output: self.output,
            format: self.format,
            precision: self.precision,
            ..RunConfig::default()
        }
    }
}

fn run(command: Command) -> Result<i32> {
    let registry = MoleculeRegistry::from_env()?;
    let (table, cfg, code) = match command {
        Command::Spectrum { phys, states, l_max, out } => {
            let (params, units) = phys.resolve(&registry)?;
            let args = SpectrumArgs { params, units, states, l_max };
            (cli::cmd_spectrum(&args)?, out.config(), cli::EXIT_OK)
        }
        Command::Table {
            which,
            molecule,
            alphas,
            inv_b,
            states,
            units,
            with_oracle,
            out,
        } => {
            let mut spec = TableSpec::published(which);
            if !states.is_empty() {
                let inv_b = if inv_b.is_empty() { vec![0.025, 0.050, 0.075, 0.100] } else { inv_b };
                spec = TableSpec::grid(which, &states, &inv_b, &spec.alphas);
            } else if !inv_b.is_empty() {
                spec.rows.retain(|(_, x)| inv_b.contains(x));
            }
            if !alphas.is_empty() {
                spec.alphas = alphas;
            }
            let cfg = RunConfig {
                units: units.choice(None)?,
                molecule,
                ..out.config()
            };
            (cli::cmd_table(&spec, &cfg, &registry, with_oracle)?, cfg, cli::EXIT_OK)
        }
        Command::FigureData { which, grid, out } => {
            let grid = grid.sample_grid(|| Ok(which.default_grid()))?;
            (cli::cmd_figure_data(which, grid)?, out.config(), cli::EXIT_OK)
        }
        Command::Compare {
            phys,
            states,
            tol,
            strict,
            out,
        } => {
            let (params, units) = phys.resolve(&registry)?;
            let args = CompareArgs {
                params,
                units,
                states,
                tolerance: tol,
            };
            let outcome = cli::cmd_compare(&args)?;
            if !outcome.passed() {
                eprintln!("compare: {} row(s) failed", outcome.failures);
            }
            let code = if strict && !outcome.passed() { cli::EXIT_STRICT } else { cli::EXIT_OK };
            (outcome.table, out.config(), code)
        }
        Command::Wavefunction { phys, state, grid, out } => {
            let (params, units) = phys.resolve(&registry)?;
            let wf = mrspec::RadialWavefunction::new(&params, &units, state)?;
            let grid = grid.sample_grid(|| SampleGrid::new(0.0, wf.extent(), 400))?;
            let args = WavefunctionArgs {
                params,
                units,
                state,
                grid,
            };
            (cli::cmd_wavefunction(&args)?, out.config(), cli::EXIT_OK)
        }
    };
    cfg.validate()?;
    cfg.emit(&table, io::stdout().lock())?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { cli::EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
