use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::Layer;

#[derive(Debug, Parser)]
#[command(
    name = "selfdual",
    version,
    about = "Tensor product decompositions for types A, B, C and the selfdual folding correspondences",
    after_help = "Weights use bracket notation in fundamental-weight coordinates, e.g. [8,7,0,7,8].\n\
                  Exit codes: 0 ok, 1 other, 2 parse, 3 not selfdual, 4 overflow, 5 resource limit or truncated scan."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub verb: Verb,
}

/// Options shared by every verb. Each may also come from `SELFDUAL_<NAME>`
/// or the config file.
#[derive(Debug, Clone, Default, Args)]
pub struct GlobalArgs {
    /// Root system type: A, B or C
    #[arg(long, global = true, value_name = "A|B|C")]
    pub family: Option<String>,
    #[arg(long, global = true, value_name = "N")]
    pub rank: Option<String>,
    /// Folding pair: even (SL_2n, Spin_2n+1) or odd (SL_2n+1, Sp_2n)
    #[arg(long, global = true, value_name = "even|odd")]
    pub pair: Option<String>,
    /// Rank of the folded side
    #[arg(long, global = true, value_name = "N")]
    pub n: Option<String>,
    /// Largest folded-side coordinate visited by scans
    #[arg(long, global = true, value_name = "X")]
    pub height: Option<String>,
    /// Triple filter, e.g. "last_zero(1) & !first_zero(3)"
    #[arg(long, global = true, value_name = "EXPR")]
    pub filter: Option<String>,
    #[arg(long, global = true, value_name = "paper|long|json")]
    pub format: Option<String>,
    /// Worker threads; 0 uses every core
    #[arg(long, global = true, value_name = "N")]
    pub workers: Option<String>,
    /// Persistent decomposition cache (versioned JSON)
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<String>,
    /// In-memory LRU capacity, in entries
    #[arg(long, global = true, value_name = "N")]
    pub cache_capacity: Option<String>,
    /// Ceiling on triples visited by a scan
    #[arg(long, global = true, value_name = "N")]
    pub limit: Option<String>,
    /// Table preset: a3b2, a5b3 or a4c2
    #[arg(long, global = true, value_name = "NAME")]
    pub preset: Option<String>,
    /// Omit timing and cache statistics so output is byte-reproducible
    #[arg(long, global = true)]
    pub stable: bool,
    /// Flat TOML file of default option values
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

impl GlobalArgs {
    pub fn layer(&self) -> Layer {
        Layer {
            family: self.family.clone(),
            rank: self.rank.clone(),
            pair: self.pair.clone(),
            n: self.n.clone(),
            height: self.height.clone(),
            filter: self.filter.clone(),
            format: self.format.clone(),
            workers: self.workers.clone(),
            cache: self.cache.clone(),
            cache_capacity: self.cache_capacity.clone(),
            limit: self.limit.clone(),
            stable: self.stable.then(|| "true".to_string()),
            preset: self.preset.clone(),
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Verb {
    /// Decompose LAMBDA x MU (needs --family)
    Decompose { lambda: String, mu: String },
    /// Folded-side weight to its selfdual SL-side image (needs --pair)
    Fold { weight: String },
    /// Selfdual SL-side weight to the folded side (needs --pair)
    Unfold { weight: String },
    /// m_sl, m_fold and m_tilde for a folded-side triple (needs --pair)
    Triple { p1: String, p2: String, p3: String },
    /// One pair-table cell for selfdual SL-side weights V, W (needs --pair)
    Cell {
        v: String,
        w: String,
        /// Read V and W as folded-side weights
        #[arg(long)]
        folded: bool,
    },
    /// Pair table from --preset or from --rows/--cols folded-side headers
    Table {
        #[arg(long, value_name = "WEIGHTS")]
        rows: Option<String>,
        #[arg(long, value_name = "WEIGHTS")]
        cols: Option<String>,
    },
    /// Enumerate folded-side triples up to --height and list missing ones
    Scan,
    /// Check a conjecture (c1, c3) or the odd-pair parity law (parity)
    Verify { claim: String },
    /// Counts for headers [m,0,0] x [k,0,0] on the even n=3 pair
    Special {
        m: u32,
        #[arg(value_name = "N")]
        k: u32,
    },
    /// [k,0..0] x [l,0..0] on B_n versus C_n (needs --n)
    Question1 { k: u32, l: u32 },
    /// [k,0..0,k] x [l,0..0,l] on A_2n-1 versus A_2n (needs --n)
    Question2 { k: u32, l: u32 },
    /// Twisted character of the middle exterior power (needs --n)
    Twisted,
}

impl Verb {
    pub fn name(&self) -> &'static str {
        match self {
            Verb::Decompose { .. } => "decompose",
            Verb::Fold { .. } => "fold",
            Verb::Unfold { .. } => "unfold",
            Verb::Triple { .. } => "triple",
            Verb::Cell { .. } => "cell",
            Verb::Table { .. } => "table",
            Verb::Scan => "scan",
            Verb::Verify { .. } => "verify",
            Verb::Special { .. } => "special",
            Verb::Question1 { .. } => "question1",
            Verb::Question2 { .. } => "question2",
            Verb::Twisted => "twisted",
        }
    }
}
