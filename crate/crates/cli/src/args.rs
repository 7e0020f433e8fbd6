use std::path::PathBuf;

use anchored_core::Space;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "anchored", version, about = "Cubical models of anchored configuration spaces on the 4-cycle")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the cells of Ω_n or CΩ_n.
    Cells {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value = "comega")]
        space: Space,
    },
    /// Faces of one cell.
    Boundary {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "comega")]
        space: Space,
        #[arg(long, allow_hyphen_values = true)]
        cell: String,
    },
    /// Critical cells of the gradient field.
    Critical {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value = "comega")]
        space: Space,
    },
    /// Matching validity, acyclicity and vanishing Morse differential.
    MorseCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "comega")]
        space: Space,
    },
    /// Betti numbers over Z_2.
    Betti {
        #[command(flatten)]
        common: Common,
        /// Also compute ranks of the coboundary matrices and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Cup product of critical cells of CΩ_n.
    Cup {
        #[command(flatten)]
        common: Common,
        /// Repeat for each factor.
        #[arg(long = "cell", required = true, allow_hyphen_values = true)]
        cells: Vec<String>,
        /// Cross-check through the full cochain product.
        #[arg(long)]
        oracle: bool,
    },
    /// Multiplication table on the critical basis.
    Ring {
        #[command(flatten)]
        common: Common,
    },
    /// Write a critical cell as a product of critical 1-cells.
    Factorize {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        cell: String,
    },
    /// Bounds on TC(CΩ_n).
    Tc {
        #[command(flatten)]
        common: Common,
    },
    /// Bounds on TC_s(CΩ_n).
    Tcs {
        #[command(flatten)]
        common: Common,
        /// Number of motion-planning stages (s ≥ 2).
        #[arg(long)]
        s: usize,
        /// Use only the cover sets with this block size.
        #[arg(long)]
        j: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Number of particles.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Refuse larger n.
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Cells { common, .. }
            | Command::Boundary { common, .. }
            | Command::Critical { common, .. }
            | Command::MorseCheck { common, .. }
            | Command::Betti { common, .. }
            | Command::Cup { common, .. }
            | Command::Ring { common }
            | Command::Factorize { common, .. }
            | Command::Tc { common }
            | Command::Tcs { common, .. } => common,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Cells { .. } => "cells",
            Command::Boundary { .. } => "boundary",
            Command::Critical { .. } => "critical",
            Command::MorseCheck { .. } => "morse-check",
            Command::Betti { .. } => "betti",
            Command::Cup { .. } => "cup",
            Command::Ring { .. } => "ring",
            Command::Factorize { .. } => "factorize",
            Command::Tc { .. } => "tc",
            Command::Tcs { .. } => "tcs",
        }
    }
}
