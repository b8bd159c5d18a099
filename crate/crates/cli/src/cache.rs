//! On-disk decomposition store. Anything unreadable is ignored and
//! recomputed; entries are re-verified on import.

use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};

use selfdual_core::engine::DecompositionKey;
use selfdual_core::{Decomposition, DominantWeight, Engine, Multiplicity};

pub const FORMAT: &str = "selfdual-decomposition-cache";
pub const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    entries: Vec<Entry>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: DecompositionKey,
    terms: Vec<(DominantWeight, Multiplicity)>,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct LoadSummary {
    pub imported: usize,
    pub rejected: usize,
}

/// A missing file loads nothing. `Err` carries a warning for the caller.
pub fn load(engine: &Engine, path: &Path) -> Result<LoadSummary, String> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(LoadSummary::default()),
        Err(e) => return Err(format!("cannot read cache {}: {e}", path.display())),
    };
    let file: CacheFile =
        serde_json::from_str(&text).map_err(|e| format!("ignoring unreadable cache {}: {e}", path.display()))?;
    if file.format != FORMAT || file.version != VERSION {
        return Err(format!(
            "ignoring cache {}: format {:?} version {} (expected {FORMAT:?} version {VERSION})",
            path.display(),
            file.format,
            file.version
        ));
    }
    let mut summary = LoadSummary::default();
    for Entry { key, terms } in file.entries {
        let ok = engine
            .datum(key.family)
            .and_then(|datum| engine.import_decomposition(key, Decomposition::from_terms(&datum, terms)));
        match ok {
            Ok(()) => summary.imported += 1,
            Err(_) => summary.rejected += 1,
        }
    }
    Ok(summary)
}

/// Writes through a sibling temporary file so readers never see a partial store.
pub fn save(engine: &Engine, path: &Path) -> io::Result<()> {
    let entries = engine
        .export_decompositions()
        .into_iter()
        .map(|(key, d)| Entry {
            key,
            terms: d.terms().to_vec(),
        })
        .collect();
    let file = CacheFile {
        format: FORMAT.into(),
        version: VERSION,
        entries,
    };
    let text = serde_json::to_string(&file).map_err(io::Error::other)?;
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, path)
}
