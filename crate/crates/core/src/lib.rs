//! Exact tensor product decompositions for the simple Lie algebras of types
//! A, B and C, and the folding correspondences between selfdual
//! representations of `SL_2n` / `SL_2n+1` and those of `Spin_2n+1` / `Sp_2n`.
//!
//! Weights are always written in fundamental-weight coordinates, the same
//! bracket notation LiE uses: `[a_1, ..., a_r]`.

pub mod analysis;
pub mod characters;
pub mod engine;
pub mod error;
pub mod exec;
pub mod folding;
pub mod rootdata;
pub mod tensor;

pub use characters::{full_weight_system, weyl_dimension, weyl_orbit, Multiplicity, WeightTable};
pub use engine::{CacheStats, Engine};
pub use error::{Error, Result};
pub use exec::ExecMode;
pub use folding::{CentralCharacter, Pair, PairKind};
pub use rootdata::{Coord, DominantWeight, Family, Letter, RootDatum, Weight};
pub use tensor::Decomposition;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
