use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orbifan::cli::{
    cmd_closure_fan, cmd_colors, cmd_intersect, cmd_orbit, cmd_poset, cmd_star, cmd_validate,
    Format,
};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Machine,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Human => Format::Human,
            FormatArg::Machine => Format::Machine,
        }
    }
}

/// Exact Luna-Vust combinatorics of spherical varieties: validate data,
/// localize at orbits, compute orbit-closure fans and color intersections.
#[derive(Parser)]
#[command(name = "orbifan", version)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the datum and the fan of a document
    Validate {
        file: PathBuf,
        /// Also decide whether the fan covers the valuation cone
        #[arg(long)]
        check_complete: bool,
        /// Run the orbit-level consistency checks over every fan member
        #[arg(long)]
        cross_validate: bool,
    },
    /// List the full set of colors with types, rho and varsigma
    Colors { file: PathBuf },
    /// Spherical datum of the orbit of a colored cone
    Orbit {
        file: PathBuf,
        /// Index into the listed maximal cones, or "gens=(..),(..);colors=a,b"
        selector: String,
        #[arg(long)]
        cross_validate: bool,
    },
    /// Fan members having the selected colored cone as a colored face
    Star { file: PathBuf, selector: String },
    /// Colored fan of the closure of the selected orbit
    ClosureFan { file: PathBuf, selector: String },
    /// Intersection of a color closure with the selected orbit
    Intersect {
        file: PathBuf,
        selector: String,
        color: String,
    },
    /// Hasse diagram of the orbit poset of the fan
    Poset { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: Format = cli.format.into();
    let result = match &cli.command {
        Command::Validate { file, check_complete, cross_validate } => {
            cmd_validate(file, format, *check_complete, *cross_validate)
        }
        Command::Colors { file } => cmd_colors(file, format),
        Command::Orbit { file, selector, cross_validate } => {
            cmd_orbit(file, selector, format, *cross_validate)
        }
        Command::Star { file, selector } => cmd_star(file, selector, format),
        Command::ClosureFan { file, selector } => cmd_closure_fan(file, selector, format),
        Command::Intersect { file, selector, color } => {
            cmd_intersect(file, selector, color, format)
        }
        Command::Poset { file } => cmd_poset(file, format),
    };
    match result {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.message.trim_end());
            ExitCode::from(e.exit_code as u8)
        }
    }
}
