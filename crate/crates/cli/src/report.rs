use serde::{Deserialize, Serialize};

use selfdual_core::analysis::{
    EvenMultiplicityReport, Filter, PairTable, PairTableCell, Question1Report, Question2Report, ScanReport,
    SpecialCaseReport, TablePreset, TripleReport,
};
use selfdual_core::folding::TwistedCharacterReport;
use selfdual_core::{CacheStats, CentralCharacter, DominantWeight, Family, Multiplicity, Pair};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub metadata: Metadata,
    pub body: Body,
}

/// Every key is always present; absent values serialize as `null`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool: String,
    pub engine_version: String,
    pub verb: String,
    /// Command line that regenerates this report.
    pub invocation: String,
    pub family: Option<Family>,
    pub pair: Option<Pair>,
    pub filter: Option<Filter>,
    pub height: Option<u32>,
    pub limit: Option<u64>,
    pub preset: Option<TablePreset>,
    /// `null` under `--stable`.
    pub cache: Option<CacheStats>,
    /// `null` under `--stable`.
    pub elapsed_us: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub weight: DominantWeight,
    pub multiplicity: Multiplicity,
    pub dimension: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeBody {
    pub family: Family,
    pub lambda: DominantWeight,
    pub mu: DominantWeight,
    pub dimension: u128,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldBody {
    pub pair: Pair,
    pub folded: DominantWeight,
    pub sl: DominantWeight,
    pub central_char_sl: CentralCharacter,
    pub central_char_folded: CentralCharacter,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Body {
    Decompose(DecomposeBody),
    Fold(FoldBody),
    Unfold(FoldBody),
    Triple(TripleReport),
    Cell(PairTableCell),
    Table(PairTable),
    Scan(ScanReport),
    Verify(ScanReport),
    Parity(EvenMultiplicityReport),
    Special(SpecialCaseReport),
    Question1(Question1Report),
    Question2(Question2Report),
    Twisted(TwistedCharacterReport),
}

impl Body {
    /// Set for scans stopped by the triple ceiling.
    pub fn truncated(&self) -> bool {
        match self {
            Body::Scan(r) | Body::Verify(r) => r.truncated,
            Body::Parity(r) => r.truncated,
            _ => false,
        }
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }
}
