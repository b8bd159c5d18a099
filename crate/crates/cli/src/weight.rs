//! Bracket notation: `[a_1, ..., a_r]`.

use selfdual_core::{Coord, DominantWeight};

use crate::error::{CliError, CliResult};

/// Parses one bracketed weight. `rank`, when known, must match its length.
pub fn parse_weight(text: &str, rank: Option<usize>) -> CliResult<DominantWeight> {
    let bad = |why: &str| CliError::Parse(format!("bad weight {text:?}: {why}"));
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| bad("expected [a1,...,ar]"))?;
    if inner.trim().is_empty() {
        return Err(bad("no coordinates"));
    }
    let mut coords = Vec::new();
    for (i, part) in inner.split(',').enumerate() {
        let part = part.trim();
        let value: i64 = part.parse().map_err(|_| bad(&format!("{part:?} is not an integer")))?;
        if value < 0 {
            return Err(bad(&format!("negative coordinate {value} at position {}", i + 1)));
        }
        coords.push(Coord::try_from(value).map_err(|_| bad(&format!("coordinate {value} too large")))?);
    }
    if let Some(r) = rank {
        if coords.len() != r {
            return Err(bad(&format!("expected {r} coordinates, found {}", coords.len())));
        }
    }
    DominantWeight::new(coords).map_err(CliError::from)
}

/// A sequence of bracketed weights, optionally separated by whitespace,
/// commas or semicolons: `"[0,1] [2,0]"`.
pub fn parse_weight_list(text: &str, rank: Option<usize>) -> CliResult<Vec<DominantWeight>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let start = rest
            .find('[')
            .ok_or_else(|| CliError::Parse(format!("bad weight list {text:?}")))?;
        if !rest[..start].chars().all(|c| c.is_whitespace() || c == ',' || c == ';') {
            return Err(CliError::Parse(format!("bad weight list {text:?}")));
        }
        let end = rest[start..]
            .find(']')
            .map(|e| start + e)
            .ok_or_else(|| CliError::Parse(format!("unclosed bracket in {text:?}")))?;
        out.push(parse_weight(&rest[start..=end], rank)?);
        rest = rest[end + 1..].trim_start_matches(|c: char| c.is_whitespace() || c == ',' || c == ';');
    }
    if out.is_empty() {
        return Err(CliError::Parse("empty weight list".into()));
    }
    Ok(out)
}
