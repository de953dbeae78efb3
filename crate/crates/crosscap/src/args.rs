//! Command-line arguments.
//!
//! `-h` is the germ, so the automatic help flag is replaced by `--help`.

use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use crosscap_core::equivalence::DEFAULT_MAX_DEGREE;
use crosscap_core::DeterminacyMode;

#[derive(Debug, Clone, Parser)]
#[command(name = "crosscap", version, about = "Classify map-germs on minimal cross caps up to V-contact equivalence")]
#[command(disable_help_flag = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, action = ArgAction::Help, help = "Print help")]
    pub help: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Stabilization of the tangent space with 1-jet-identity flows.
    K1,
    /// Stabilization of the extended tangent space.
    Ke,
}

impl From<Mode> for DeterminacyMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::K1 => DeterminacyMode::ViaK1,
            Mode::Ke => DeterminacyMode::ViaKe,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Format {
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Shorthand for `--output json`.
    #[arg(long)]
    pub json: bool,
}

impl Format {
    pub fn json(&self) -> bool {
        self.json || self.output == Output::Json
    }
}

/// Where the germ lives and which vector fields act on it.
#[derive(Debug, Clone, Args)]
pub struct Space {
    /// Multiplicity of the cross cap.
    #[arg(short = 'k')]
    pub k: Option<usize>,
    /// Use generic variables x1..xn instead of the cross cap coordinates.
    #[arg(long, value_name = "N")]
    pub vars: Option<usize>,
    /// File of vector fields, one per line, components separated by `;`.
    #[arg(long, value_name = "FILE")]
    pub fields: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GermArgs {
    #[command(flatten)]
    pub space: Space,
    /// The germ, components separated by commas.
    #[arg(short = 'h', long = "germ", allow_hyphen_values = true)]
    pub germ: String,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// List the generators of Θ_V and check that each lifts.
    Vfields {
        #[arg(short = 'k')]
        k: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Codimension and normal space of a germ.
    Codim {
        #[command(flatten)]
        germ: GermArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
        #[command(flatten)]
        format: Format,
    },
    /// Least certified determinacy degree.
    Determinacy {
        #[command(flatten)]
        germ: GermArgs,
        #[arg(long, value_enum, default_value_t = Mode::Ke)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
        #[command(flatten)]
        format: Format,
    },
    /// Degree-d complete transversal of a (d-1)-jet.
    Transversal {
        #[command(flatten)]
        germ: GermArgs,
        #[arg(short = 'd')]
        d: u32,
        #[command(flatten)]
        format: Format,
    },
    /// Sharp pullback of the cross cap by the germ.
    Pullback {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'h', long = "germ", allow_hyphen_values = true)]
        germ: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
        #[command(flatten)]
        format: Format,
    },
    /// Verify the codimension-two normal forms (all of k = 2..6 if no k).
    Classify {
        #[arg(short = 'k')]
        k: Option<usize>,
        #[command(flatten)]
        format: Format,
    },
    /// The germ whose tangent module needs all three families.
    Counterexample {
        #[command(flatten)]
        format: Format,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Vfields { .. } => "vfields",
            Command::Codim { .. } => "codim",
            Command::Determinacy { .. } => "determinacy",
            Command::Transversal { .. } => "transversal",
            Command::Pullback { .. } => "pullback",
            Command::Classify { .. } => "classify",
            Command::Counterexample { .. } => "counterexample",
        }
    }

    pub fn format(&self) -> &Format {
        match self {
            Command::Vfields { format, .. }
            | Command::Codim { format, .. }
            | Command::Determinacy { format, .. }
            | Command::Transversal { format, .. }
            | Command::Pullback { format, .. }
            | Command::Classify { format, .. }
            | Command::Counterexample { format } => format,
        }
    }
}
