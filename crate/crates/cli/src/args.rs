use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "cominuscule", version, about = "Twisted differential forms on cominuscule Grassmannians")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for batch work; 1 runs sequentially.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The catalog of cominuscule Grassmannians.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Root system data.
    Rootsys {
        #[command(subcommand)]
        action: RootsysCmd,
    },
    /// Closed forms for l(p) against exhaustive partition search.
    Partitions {
        #[command(subcommand)]
        action: PartitionsCmd,
    },
    /// Exterior powers of the cotangent bundle.
    Omega {
        #[command(subcommand)]
        action: OmegaCmd,
    },
    /// Least twist l with H^0(Omega^p(l)) != 0.
    MinTwist {
        #[arg(long)]
        space: String,
        /// All p when omitted.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        force_plethysm: bool,
    },
    /// Recompute a tabulated exceptional decomposition and diff it.
    TableAudit {
        #[arg(long, value_enum)]
        which: Exceptional,
        #[arg(long)]
        max_p: Option<usize>,
    },
    /// Sections of Omega^p(2) and Omega^p(3) across the catalog.
    Nonvanishing {
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
    },
    /// Families of foliations of minimal degree.
    Foliation {
        #[command(subcommand)]
        action: FoliationCmd,
    },
    /// Run every consistency check.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    List {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    Show {
        #[arg(long)]
        space: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum RootsysCmd {
    Dump {
        /// A Lie type such as A5, C3, E6.
        #[arg(long = "type")]
        lie_type: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum FormulaFamilyArg {
    A,
    C,
    D,
}

#[derive(Debug, Subcommand)]
pub enum PartitionsCmd {
    Verify {
        #[arg(long, value_enum)]
        family: FormulaFamilyArg,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum OmegaCmd {
    Decompose {
        #[arg(long)]
        space: String,
        #[arg(long)]
        p: usize,
        /// Use the weight engine regardless of the family.
        #[arg(long)]
        force_plethysm: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum Exceptional {
    E6,
    E7,
}

#[derive(Debug, Subcommand)]
pub enum FoliationCmd {
    Rect {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    Sympl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
    },
    Ortho {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
    },
    Cayley,
    Scan {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
}

/// Ambient Lie type letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[value(rename_all = "verbatim")]
pub enum FamilyLetter {
    A,
    B,
    C,
    D,
    E,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..))]
    pub max_rank: u64,
    /// Restrict to these ambient types (comma separated).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub families: Vec<FamilyLetter>,
    /// Cap on p for the exceptional table audits.
    #[arg(long)]
    pub max_p: Option<usize>,
}
