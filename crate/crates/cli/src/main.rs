use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use chiral_core::catalog::{build, NamedSolid, SolidOptions};
use chiral_core::coxeter::{self, DiagramId};
use chiral_core::export::{self, RoundedMesh, DEFAULT_PRECISION};
use chiral_core::{verify, Error, Handedness};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Chiral polyhedra from quaternionic Coxeter groups.
#[derive(Parser)]
#[command(name = "chiral", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a solid and write its mesh.
    Generate {
        #[command(flatten)]
        solid: SolidArgs,
        #[arg(long, value_enum, default_value_t = Format::Off)]
        format: Format,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Report counts, edge lengths, transitivity and chirality as JSON.
    Analyze {
        #[command(flatten)]
        solid: SolidArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List a reflection group, its proper subgroup and generator relations.
    Group {
        #[arg(value_parser = parse_diagram)]
        diagram: DiagramId,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every closed-form identity and print a pass/fail ledger.
    Verify {
        /// Emit the ledger as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SolidArgs {
    /// Solid name, e.g. snub-cube or pentagonal-hexacontahedron.
    #[arg(value_parser = parse_solid)]
    solid: NamedSolid,
    /// Mirror image to build (snub solids and their duals only).
    #[arg(long, value_enum)]
    handedness: Option<Hand>,
    /// Pyritohedron family parameter a, 1 < a ≤ 2.
    #[arg(long, allow_negative_numbers = true)]
    param: Option<f64>,
    /// Diagram of a fundamental orbit.
    #[arg(long, value_parser = parse_diagram)]
    diagram: Option<DiagramId>,
    /// Weight index (1, 2 or 3) of a fundamental orbit.
    #[arg(long)]
    weight: Option<usize>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Decimal digits, 1 to 15. Defaults to $CHIRAL_PRECISION or 12.
    #[arg(long)]
    precision: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Hand {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Off,
    Obj,
    Json,
}

fn parse_solid(s: &str) -> Result<NamedSolid, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_diagram(s: &str) -> Result<DiagramId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl SolidArgs {
    fn options(&self) -> SolidOptions {
        SolidOptions {
            handedness: self.handedness.map(|h| match h {
                Hand::Left => Handedness::Left,
                Hand::Right => Handedness::Right,
            }),
            param: self.param,
            diagram: self.diagram,
            weight: self.weight,
        }
    }
}

enum Failure {
    Usage(String),
    Construction(String),
    Io(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Construction(e.to_string()),
        }
    }
}

fn precision(flag: Option<usize>) -> Result<usize, Failure> {
    let p = match flag {
        Some(p) => p,
        None => match std::env::var("CHIRAL_PRECISION") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("CHIRAL_PRECISION={v} is not an integer")))?,
            Err(_) => DEFAULT_PRECISION,
        },
    };
    Ok(export::check_precision(p)?)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate {
            solid,
            format,
            output,
        } => {
            let opts = solid.options();
            opts.check(solid.solid)?;
            let p = precision(output.precision)?;
            let built = build(solid.solid, &opts)?;
            let text = match format {
                Format::Off => RoundedMesh::new(&built.polyhedron, p).to_off(),
                Format::Obj => RoundedMesh::new(&built.polyhedron, p).to_obj(&built.spec.name),
                Format::Json => export::solid_json(&built, p),
            };
            emit(&text, output.out.as_ref())
        }
        Command::Analyze { solid, output } => {
            let opts = solid.options();
            opts.check(solid.solid)?;
            let p = precision(output.precision)?;
            let built = build(solid.solid, &opts)?;
            emit(&export::analyze_json(&built, p), output.out.as_ref())
        }
        Command::Group { diagram, out } => {
            let sys = coxeter::system(diagram);
            let text = export::group_json(
                diagram,
                coxeter::full(diagram),
                coxeter::proper(diagram),
                &sys.verify_relations(),
            );
            emit(&text, out.as_ref())
        }
        Command::Verify { json } => {
            let entries = verify::run();
            let text = if json {
                serde_json::to_string_pretty(&entries).expect("ledger serializes") + "\n"
            } else {
                verify::render(&entries)
            };
            emit(&text, None)?;
            if verify::all_gating_pass(&entries) {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Construction(m)) => {
            eprintln!("construction failed: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Verify) => ExitCode::from(1),
    }
}
