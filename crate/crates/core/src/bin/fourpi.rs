//! Command-line front end: parameter scans over the interferometer
//! observables with CSV (and optional SVG) output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fourpi::plot::render_chart;
use fourpi::{run_scan, to_csv, Error, ScanConfig, ScanKind};

#[derive(Parser)]
#[command(
    name = "fourpi",
    about = "Neutron interferometry scans: plate diffraction, spin rotation, 4*pi fringes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the spin rotation angle and report all four beam intensities
    ScanAlpha(ScanArgs),
    /// Sweep the field strength; reports the rotation angle and beams 2/3
    ScanField(ScanArgs),
    /// Sweep the plate thickness in units of the Pendelloesung length
    ScanThickness(ScanArgs),
    /// Sweep the detuning and report the single-plate rocking curve
    ScanDetuning(ScanArgs),
    /// Compare square-region closed forms against the transfer-matrix solver
    Oracle(ScanArgs),
}

#[derive(Args)]
struct ScanArgs {
    /// Flat key = value config file; flags override its entries
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also render an SVG chart of the table
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Number of grid points (>= 2)
    #[arg(long)]
    points: Option<usize>,
    /// Start of the swept range
    #[arg(long)]
    from: Option<f64>,
    /// End of the swept range
    #[arg(long)]
    to: Option<f64>,
    /// Reduced plate thickness pi*d/Delta
    #[arg(long)]
    tau: Option<f64>,
    /// Detuning from the Bragg condition
    #[arg(long)]
    y: Option<f64>,
    /// Field pulsation (field strength for a unit moment)
    #[arg(long)]
    omega: Option<f64>,
    /// Flat-top half width of the field region
    #[arg(long)]
    a: Option<f64>,
    /// Ramp length of the field region (0 = square)
    #[arg(long)]
    l: Option<f64>,
    /// Kinetic energy of the incident neutron
    #[arg(long)]
    energy: Option<f64>,
    /// Neutron mass
    #[arg(long)]
    mass: Option<f64>,
    /// Phase model: weak, exact, or semiclassical
    #[arg(long)]
    mode: Option<String>,
    /// Probability of the spin-up component of the incident spinor
    #[arg(long = "spin-up-prob")]
    spin_up_prob: Option<f64>,
}

impl ScanArgs {
    /// Defaults, then config file, then flags.
    fn into_config(self, kind: ScanKind) -> Result<ScanConfig, Error> {
        let mut cfg = ScanConfig::defaults(kind);
        if let Some(path) = &self.config {
            cfg.apply_file(path)?;
        }
        let overrides: [(&str, Option<String>); 11] = [
            ("points", self.points.map(|v| v.to_string())),
            ("from", self.from.map(|v| v.to_string())),
            ("to", self.to.map(|v| v.to_string())),
            ("tau", self.tau.map(|v| v.to_string())),
            ("y", self.y.map(|v| v.to_string())),
            ("omega", self.omega.map(|v| v.to_string())),
            ("a", self.a.map(|v| v.to_string())),
            ("l", self.l.map(|v| v.to_string())),
            ("energy", self.energy.map(|v| v.to_string())),
            ("mass", self.mass.map(|v| v.to_string())),
            ("spin_up_prob", self.spin_up_prob.map(|v| v.to_string())),
        ];
        for (key, value) in overrides {
            if let Some(v) = value {
                cfg.set(key, &v)?;
            }
        }
        if let Some(mode) = &self.mode {
            cfg.set("mode", mode)?;
        }
        if let Some(out) = self.out {
            cfg.out = Some(out);
        }
        if let Some(svg) = self.svg {
            cfg.svg = Some(svg);
        }
        Ok(cfg)
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let (kind, args, title) = match cli.command {
        Command::ScanAlpha(a) => (ScanKind::Alpha, a, "rotation angle scan"),
        Command::ScanField(a) => (ScanKind::Field, a, "field strength scan"),
        Command::ScanThickness(a) => (ScanKind::Thickness, a, "plate thickness scan"),
        Command::ScanDetuning(a) => (ScanKind::Detuning, a, "detuning scan"),
        Command::Oracle(a) => (ScanKind::Oracle, a, "closed form vs transfer matrix"),
    };
    let cfg = args.into_config(kind)?;
    let table = run_scan(&cfg)?;
    let csv = to_csv(&table);
    match &cfg.out {
        Some(path) => std::fs::write(path, &csv)?,
        None => print!("{csv}"),
    }
    if let Some(path) = &cfg.svg {
        std::fs::write(path, render_chart(title, &table))?;
    }
    if let Some(summary) = &table.summary {
        eprintln!("{summary}");
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Config(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}
