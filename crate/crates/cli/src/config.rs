use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_MAX_HDEG: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

/// Which part of a module to resolve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ModulePart {
    /// `M`.
    #[default]
    Whole,
    /// `JM`.
    Radical,
    /// `M/JM`.
    Top,
}

#[derive(Debug, Parser)]
#[command(name = "pkoszul", version, about = "Koszul, d-Koszul and piecewise-Koszul checks for graded quiver algebras")]
pub struct Cli {
    /// Print the input grammar and the JSON output schemas, then exit.
    #[arg(long)]
    pub schema: bool,

    /// Largest homological degree N to resolve.
    #[arg(long, global = true, value_name = "N")]
    pub max_hdeg: Option<usize>,

    /// Internal degree bound D; defaults to δ(N)+1 once (p,d) is known, else 2N.
    #[arg(long, global = true, value_name = "D")]
    pub max_ideg: Option<usize>,

    /// Field characteristic, overriding the input's `field` line.
    #[arg(long = "char", global = true, value_name = "P")]
    pub characteristic: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Period p of the degree function, overriding the computed one.
    #[arg(long, global = true, requires = "d")]
    pub p: Option<usize>,

    /// Jump degree d of the degree function, overriding the computed one.
    #[arg(long, global = true, requires = "p")]
    pub d: Option<usize>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Clone, Debug, Args)]
pub struct Input {
    /// Input file, or `-` for standard input.
    pub input: PathBuf,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Minimal graded resolution of A_0 and its Betti table.
    Resolve(Input),
    /// Koszul / d-Koszul / PK(p,d) verdict from the Betti table.
    Classify(Input),
    /// Bigraded dimensions of Ext(A_0, A_0).
    Ext(Input),
    /// Yoneda products Ext^i x Ext^j -> Ext^(i+j).
    Yoneda {
        i: usize,
        j: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Ext-degrees in which E(A) needs new algebra generators.
    Generation(Input),
    /// Piecewise-Koszul check for a module.
    ModuleClassify {
        /// A declared module, `trivial` (A_0), `algebra` (A) or `syzygy:N` (Ω^N(A_0)).
        #[arg(long, default_value = "trivial")]
        module: String,
        #[arg(long, value_enum, default_value_t = ModulePart::Whole)]
        part: ModulePart,
        #[command(flatten)]
        input: Input,
    },
    /// The subalgebra E_k = ⊕ Ext^(pkn), exported and re-resolved.
    Ek {
        k: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Arities q for which m_q can be nonzero.
    Arities {
        q_max: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Conditions of a reduced (2,l)-structure on E(A).
    Reduced2l {
        l: usize,
        #[command(flatten)]
        input: Input,
    },
}

impl Command {
    pub fn input(&self) -> &Input {
        match self {
            Command::Resolve(i) | Command::Classify(i) | Command::Ext(i) | Command::Generation(i) => i,
            Command::Yoneda { input, .. }
            | Command::ModuleClassify { input, .. }
            | Command::Ek { input, .. }
            | Command::Arities { input, .. }
            | Command::Reduced2l { input, .. } => input,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Resolve(_) => "resolve",
            Command::Classify(_) => "classify",
            Command::Ext(_) => "ext",
            Command::Yoneda { .. } => "yoneda",
            Command::Generation(_) => "generation",
            Command::ModuleClassify { .. } => "module-classify",
            Command::Ek { .. } => "ek",
            Command::Arities { .. } => "arities",
            Command::Reduced2l { .. } => "reduced2l",
        }
    }
}

/// Everything `run` needs besides the document.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub max_hdeg: Option<usize>,
    pub max_ideg: Option<usize>,
    pub characteristic: Option<u32>,
    pub format: Format,
    pub pd: Option<(usize, usize)>,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Option<Self> {
        Some(Self {
            command: cli.command.clone()?,
            max_hdeg: cli.max_hdeg,
            max_ideg: cli.max_ideg,
            characteristic: cli.characteristic,
            format: cli.format,
            pd: cli.p.zip(cli.d),
        })
    }

    pub fn new(command: Command) -> Self {
        Self { command, max_hdeg: None, max_ideg: None, characteristic: None, format: Format::Json, pd: None }
    }
}
