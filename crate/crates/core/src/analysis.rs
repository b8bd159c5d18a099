//! Triple multiplicities, pair-table cells, missing-triple scans and the
//! comparison questions between the two folded families.
//!
//! A triple `(p_1, p_2, p_3)` of folded-side weights has three multiplicities
//! of the trivial representation:
//!
//! * `m_sl` on the SL side, for the folded images `V_i`,
//! * `m_fold` on the folded group,
//! * `m_tilde` for the extension by the diagram involution,
//!
//! tied together by `2 m_tilde = m_fold + m_sl`. Every report checks that
//! identity together with `m_fold <= m_sl` and the parity constraint.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::characters::Multiplicity;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::folding::{central_char_sp, CentralCharacter, Pair, PairKind};
use crate::rootdata::{Coord, DominantWeight, Family};
use crate::tensor::{dual_weight, Decomposition};

pub const DEFAULT_SCAN_LIMIT: u64 = 10_000_000;

pub type Triple = [DominantWeight; 3];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub pair: Pair,
    pub folded_triple: Triple,
    pub sl_triple: Triple,
    pub m_sl: Multiplicity,
    pub m_fold: Multiplicity,
    pub m_tilde: Multiplicity,
    pub is_missing: bool,
}

/// Returns `m_tilde`.
fn check_counts(pair: Pair, t: &Triple, m_sl: Multiplicity, m_fold: Multiplicity) -> Result<Multiplicity> {
    if m_fold > m_sl || !(m_sl - m_fold).is_multiple_of(2) {
        return Err(Error::InvariantViolation(format!(
            "{pair}: triple {} has m_sl = {m_sl}, m_fold = {m_fold}",
            fmt_triple(t)
        )));
    }
    Ok(m_fold + (m_sl - m_fold) / 2)
}

impl TripleReport {
    fn from_counts(
        pair: Pair,
        folded_triple: Triple,
        sl_triple: Triple,
        m_sl: Multiplicity,
        m_fold: Multiplicity,
    ) -> Result<Self> {
        let m_tilde = check_counts(pair, &folded_triple, m_sl, m_fold)?;
        Ok(TripleReport {
            pair,
            folded_triple,
            sl_triple,
            m_sl,
            m_fold,
            m_tilde,
            is_missing: m_sl > 0 && m_fold == 0,
        })
    }
}

pub fn fmt_triple(t: &Triple) -> String {
    format!("({}, {}, {})", t[0], t[1], t[2])
}

fn fold_triple(pair: &Pair, t: &Triple) -> Result<Triple> {
    Ok([pair.fold(&t[0])?, pair.fold(&t[1])?, pair.fold(&t[2])?])
}

pub fn triple_report(engine: &Engine, pair: Pair, triple: &Triple) -> Result<TripleReport> {
    let sl = engine.datum(pair.sl_family())?;
    let folded = engine.datum(pair.folded_family())?;
    for w in triple {
        folded.check_weight(w.coords())?;
    }
    let sl_triple = fold_triple(&pair, triple)?;
    let m_sl = engine.multiplicity_of_trivial(&sl, &sl_triple)?;
    let m_fold = engine.multiplicity_of_trivial(&folded, triple)?;
    TripleReport::from_counts(pair, triple.clone(), sl_triple, m_sl, m_fold)
}

/// One cell `n1 n4 / n2 n3` of a pair table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairTableCell {
    pub pair: Pair,
    pub v: DominantWeight,
    pub w: DominantWeight,
    pub v_folded: DominantWeight,
    pub w_folded: DominantWeight,
    /// Distinct constituents of `V x W`.
    pub n1: usize,
    /// Distinct selfdual constituents of `V x W`; for the ODD pair only those
    /// `[c_1, ...]` with `c_1 = a_1 + b_1 (mod 2)`.
    pub n2: usize,
    /// Distinct constituents of the folded product.
    pub n3: usize,
    /// Constituents counted by `n2` whose folded image is absent from the
    /// folded product.
    pub n4: usize,
    pub missing: Vec<DominantWeight>,
    pub parity_filter: bool,
}

impl PairTableCell {
    pub fn numbers(&self) -> (usize, usize, usize, usize) {
        (self.n1, self.n2, self.n3, self.n4)
    }
}

/// `v`, `w` are selfdual SL-side weights.
pub fn pair_table_cell(engine: &Engine, pair: Pair, v: &DominantWeight, w: &DominantWeight) -> Result<PairTableCell> {
    let v_folded = pair.unfold(v)?;
    let w_folded = pair.unfold(w)?;
    let sl = engine.datum(pair.sl_family())?;
    let folded = engine.datum(pair.folded_family())?;
    let d_sl = engine.decompose(&sl, v, w)?;
    let d_fold = engine.decompose(&folded, &v_folded, &w_folded)?;

    let parity_filter = pair.kind() == PairKind::Odd;
    let parity = (v.coords()[0] + w.coords()[0]).rem_euclid(2);
    let mut n2 = 0;
    let mut missing = Vec::new();
    for c in d_sl.weights() {
        let Ok(c_folded) = pair.unfold(c) else { continue };
        if parity_filter && c.coords()[0].rem_euclid(2) != parity {
            continue;
        }
        n2 += 1;
        if !d_fold.contains(&c_folded) {
            missing.push(c.clone());
        }
    }
    Ok(PairTableCell {
        pair,
        v: v.clone(),
        w: w.clone(),
        v_folded,
        w_folded,
        n1: d_sl.len(),
        n2,
        n3: d_fold.len(),
        n4: missing.len(),
        missing,
        parity_filter,
    })
}

/// Same as [`pair_table_cell`] with folded-side headers.
pub fn pair_table_cell_folded(
    engine: &Engine,
    pair: Pair,
    a: &DominantWeight,
    b: &DominantWeight,
) -> Result<PairTableCell> {
    pair_table_cell(engine, pair, &pair.fold(a)?, &pair.fold(b)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairTable {
    pub pair: Pair,
    pub rows: Vec<DominantWeight>,
    pub cols: Vec<DominantWeight>,
    /// Row-major.
    pub cells: Vec<Vec<PairTableCell>>,
}

/// Headers are folded-side weights. Cells are computed in parallel; the
/// engine's cache is shared across the whole table.
pub fn build_table(engine: &Engine, pair: Pair, rows: &[DominantWeight], cols: &[DominantWeight]) -> Result<PairTable> {
    let folded = engine.datum(pair.folded_family())?;
    for h in rows.iter().chain(cols) {
        folded.check_weight(h.coords())?;
    }
    let jobs: Vec<(usize, usize)> = (0..rows.len())
        .flat_map(|i| (0..cols.len()).map(move |j| (i, j)))
        .collect();
    let flat = engine.mode().try_map(&jobs, |&(i, j)| {
        pair_table_cell_folded(engine, pair, &rows[i], &cols[j])
    })?;
    let mut it = flat.into_iter();
    let cells = (0..rows.len())
        .map(|_| it.by_ref().take(cols.len()).collect())
        .collect();
    Ok(PairTable {
        pair,
        rows: rows.to_vec(),
        cols: cols.to_vec(),
        cells,
    })
}

/// Header sets of the three sample tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TablePreset {
    A3B2,
    A5B3,
    A4C2,
}

impl TablePreset {
    pub const ALL: [TablePreset; 3] = [TablePreset::A3B2, TablePreset::A5B3, TablePreset::A4C2];

    pub fn pair(self) -> Pair {
        match self {
            TablePreset::A3B2 => Pair::even(2),
            TablePreset::A5B3 => Pair::even(3),
            TablePreset::A4C2 => Pair::odd(2),
        }
        .expect("n >= 2")
    }

    pub fn rows(self) -> Vec<DominantWeight> {
        headers(match self {
            TablePreset::A3B2 => &[
                &[0, 1],
                &[0, 8],
                &[1, 2],
                &[1, 6],
                &[2, 0],
                &[2, 4],
                &[2, 5],
                &[3, 0],
                &[3, 3],
                &[7, 0],
            ],
            TablePreset::A5B3 => &[
                &[0, 0, 8],
                &[0, 6, 2],
                &[1, 5, 5],
                &[2, 4, 1],
                &[2, 5, 8],
                &[2, 6, 0],
                &[3, 0, 2],
                &[4, 3, 1],
                &[4, 4, 0],
                &[9, 3, 0],
                &[9, 8, 7],
            ],
            TablePreset::A4C2 => &[
                &[0, 1],
                &[0, 5],
                &[0, 7],
                &[0, 9],
                &[2, 0],
                &[2, 4],
                &[2, 5],
                &[3, 0],
                &[8, 5],
                &[9, 7],
            ],
        })
    }

    pub fn cols(self) -> Vec<DominantWeight> {
        headers(match self {
            TablePreset::A3B2 => &[&[1, 0], &[1, 1], &[2, 2], &[2, 8], &[5, 0], &[5, 9], &[8, 0]],
            TablePreset::A5B3 => &[
                &[0, 0, 4],
                &[1, 0, 0],
                &[2, 2, 2],
                &[5, 1, 0],
                &[5, 9, 9],
                &[8, 5, 0],
                &[8, 7, 0],
            ],
            TablePreset::A4C2 => &[&[0, 1], &[0, 4], &[0, 7], &[5, 0], &[5, 9], &[6, 2], &[8, 0], &[8, 9]],
        })
    }
}

impl FromStr for TablePreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().replace(['-', '_'], "").as_str() {
            "A3B2" => Ok(TablePreset::A3B2),
            "A5B3" => Ok(TablePreset::A5B3),
            "A4C2" => Ok(TablePreset::A4C2),
            other => Err(Error::InvalidArgument(format!(
                "unknown table preset {other:?} (expected a3b2, a5b3 or a4c2)"
            ))),
        }
    }
}

impl fmt::Display for TablePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TablePreset::A3B2 => "a3b2",
            TablePreset::A5B3 => "a5b3",
            TablePreset::A4C2 => "a4c2",
        })
    }
}

fn headers(raw: &[&[Coord]]) -> Vec<DominantWeight> {
    raw.iter()
        .map(|c| DominantWeight::from_vec_unchecked(c.to_vec()))
        .collect()
}

/// Predicate on a folded-side triple: a conjunction of possibly negated
/// `last_zero(i)` / `first_zero(i)` atoms, `i` in 1..=3.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filter {
    clauses: Vec<(bool, Atom)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Atom {
    LastZero(usize),
    FirstZero(usize),
}

impl Filter {
    pub fn none() -> Self {
        Filter::default()
    }

    pub fn is_trivial(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn matches(&self, t: &Triple) -> bool {
        self.clauses.iter().all(|&(negated, atom)| {
            let hit = match atom {
                Atom::LastZero(i) => t[i - 1].coords().last() == Some(&0),
                Atom::FirstZero(i) => t[i - 1].coords().first() == Some(&0),
            };
            hit != negated
        })
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.eq_ignore_ascii_case("none") {
            return Ok(Filter::none());
        }
        let bad = |part: &str| Error::InvalidArgument(format!("bad filter clause {part:?}"));
        let mut clauses = Vec::new();
        for part in s.split('&').flat_map(|p| p.split(" and ")) {
            let mut part = part.trim();
            let negated = part.starts_with('!');
            if negated {
                part = part[1..].trim_start();
            }
            let (name, rest) = part.split_once('(').ok_or_else(|| bad(part))?;
            let arg = rest.strip_suffix(')').ok_or_else(|| bad(part))?;
            let i: usize = arg.trim().parse().map_err(|_| bad(part))?;
            if !(1..=3).contains(&i) {
                return Err(Error::InvalidArgument(format!(
                    "filter index must be 1, 2 or 3, got {i}"
                )));
            }
            let atom = match name.trim() {
                "last_zero" => Atom::LastZero(i),
                "first_zero" => Atom::FirstZero(i),
                _ => return Err(bad(part)),
            };
            clauses.push((negated, atom));
        }
        Ok(Filter { clauses })
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return f.write_str("none");
        }
        for (k, (negated, atom)) in self.clauses.iter().enumerate() {
            if k > 0 {
                f.write_str(" & ")?;
            }
            if *negated {
                f.write_str("!")?;
            }
            match atom {
                Atom::LastZero(i) => write!(f, "last_zero({i})")?,
                Atom::FirstZero(i) => write!(f, "first_zero({i})")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Filter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Filter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Conjecture {
    /// EVEN pair: at least two of `a_n, b_n, c_n` nonzero.
    C1,
    /// ODD pair: at least two of `a_1, b_1, c_1` nonzero and the product has
    /// trivial central character.
    C3,
}

impl Conjecture {
    pub fn for_pair(kind: PairKind) -> Self {
        match kind {
            PairKind::Even => Conjecture::C1,
            PairKind::Odd => Conjecture::C3,
        }
    }

    pub fn pair_kind(self) -> PairKind {
        match self {
            Conjecture::C1 => PairKind::Even,
            Conjecture::C3 => PairKind::Odd,
        }
    }

    pub fn hypothesis(self, t: &Triple) -> bool {
        match self {
            Conjecture::C1 => t.iter().filter(|w| w.coords().last() != Some(&0)).count() >= 2,
            Conjecture::C3 => {
                t.iter().filter(|w| w.coords().first() != Some(&0)).count() >= 2
                    && product_central_char_sp(t).is_trivial()
            }
        }
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "C1" | "1" => Ok(Conjecture::C1),
            "C3" | "3" => Ok(Conjecture::C3),
            other => Err(Error::InvalidArgument(format!(
                "unknown conjecture {other:?} (expected C1 or C3)"
            ))),
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conjecture::C1 => "C1",
            Conjecture::C3 => "C3",
        })
    }
}

fn product_central_char_sp(t: &Triple) -> CentralCharacter {
    central_char_sp(&t[0]) * central_char_sp(&t[1]) * central_char_sp(&t[2])
}

/// `missing / total`; `0/0` when no triple has an invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Density {
    pub missing: u64,
    pub total: u64,
}

impl Density {
    pub fn value(self) -> Option<f64> {
        (self.total > 0).then(|| self.missing as f64 / self.total as f64)
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(x) => write!(f, "{}/{} ({x:.6})", self.missing, self.total),
            None => write!(f, "0/0 (undefined)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub pair: Pair,
    pub height: u32,
    pub filter: Filter,
    pub conjecture: Conjecture,
    /// Triples visited before filtering.
    pub enumerated: u64,
    pub matching_filter: u64,
    pub total_invariant_triples: u64,
    pub missing_triples: u64,
    pub missing: Vec<Triple>,
    /// Missing triples satisfying the conjecture's hypothesis.
    pub counterexamples: Vec<Triple>,
    pub density: Density,
    /// Set when the triple ceiling stopped the scan early.
    pub truncated: bool,
}

/// Per-triple data handed to scan reducers.
struct ScanItem {
    triple: Triple,
    m_sl: Multiplicity,
    m_fold: Multiplicity,
}

struct ScanShape {
    per_side: u64,
    count: u64,
    truncated: bool,
}

fn scan_shape(n: usize, height: u32, limit: u64) -> ScanShape {
    let base = u64::from(height) + 1;
    let per_side = u32::try_from(n).ok().and_then(|e| base.checked_pow(e));
    let full = per_side.and_then(|p| p.checked_pow(3));
    match (per_side, full) {
        (Some(p), Some(f)) if f <= limit => ScanShape {
            per_side: p,
            count: f,
            truncated: false,
        },
        (Some(p), _) => ScanShape {
            per_side: p,
            count: limit,
            truncated: true,
        },
        (None, _) => ScanShape {
            per_side: u64::MAX,
            count: limit,
            truncated: true,
        },
    }
}

/// The `index`-th weight of rank `n` with coordinates `<= height`, in
/// lexicographic order.
fn weight_at(mut index: u64, n: usize, height: u32) -> DominantWeight {
    let base = u64::from(height) + 1;
    let mut c = vec![0; n];
    for slot in c.iter_mut().rev() {
        *slot = (index % base) as Coord;
        index /= base;
    }
    DominantWeight::from_vec_unchecked(c)
}

/// Enumerates triples lexicographically in groups sharing `(p_1, p_2)`, so a
/// single pair of decompositions serves every `p_3`. `keep` selects which
/// triples need multiplicities; `reduce` folds each group.
fn scan_groups<T, K, R>(
    engine: &Engine,
    pair: Pair,
    height: u32,
    limit: u64,
    keep: K,
    reduce: R,
) -> Result<(Vec<T>, ScanShape)>
where
    T: Send,
    K: Fn(&Triple) -> bool + Sync + Send,
    R: Fn(Vec<ScanItem>) -> Result<T> + Sync + Send,
{
    let n = pair.n();
    let shape = scan_shape(n, height, limit);
    if shape.per_side == u64::MAX {
        return Err(Error::ResourceLimit {
            needed: u128::MAX,
            limit,
        });
    }
    let sl = engine.datum(pair.sl_family())?;
    let folded = engine.datum(pair.folded_family())?;
    let groups: Vec<u64> = (0..shape.count.div_ceil(shape.per_side)).collect();
    let out = engine.mode().try_map(&groups, |&g| {
        let p1 = weight_at(g / shape.per_side, n, height);
        let p2 = weight_at(g % shape.per_side, n, height);
        let len = shape.per_side.min(shape.count - g * shape.per_side);
        let kept: Vec<Triple> = (0..len)
            .map(|k| [p1.clone(), p2.clone(), weight_at(k, n, height)])
            .filter(|t| keep(t))
            .collect();
        if kept.is_empty() {
            return reduce(Vec::new());
        }
        let v1 = pair.fold(&p1)?;
        let v2 = pair.fold(&p2)?;
        let d_sl = engine.decompose(&sl, &v1, &v2)?;
        let d_fold = engine.decompose(&folded, &p1, &p2)?;
        let items = kept
            .into_iter()
            .map(|t| {
                let v3 = pair.fold(&t[2])?;
                Ok(ScanItem {
                    m_sl: d_sl.get(&dual_weight(&sl, &v3)),
                    m_fold: d_fold.get(&dual_weight(&folded, &t[2])),
                    triple: t,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        reduce(items)
    })?;
    Ok((out, shape))
}

#[derive(Default)]
struct ScanTally {
    matching: u64,
    invariant: u64,
    missing: Vec<Triple>,
    counterexamples: Vec<Triple>,
}

fn scan_with(
    engine: &Engine,
    pair: Pair,
    height: u32,
    filter: &Filter,
    conjecture: Conjecture,
    limit: u64,
) -> Result<ScanReport> {
    let (tallies, shape) = scan_groups(
        engine,
        pair,
        height,
        limit,
        |t| filter.matches(t),
        |items| {
            let mut tally = ScanTally {
                matching: items.len() as u64,
                ..Default::default()
            };
            for it in items {
                check_counts(pair, &it.triple, it.m_sl, it.m_fold)?;
                if it.m_sl > 0 {
                    tally.invariant += 1;
                }
                if it.m_sl > 0 && it.m_fold == 0 {
                    if conjecture.hypothesis(&it.triple) {
                        tally.counterexamples.push(it.triple.clone());
                    }
                    tally.missing.push(it.triple);
                }
            }
            Ok(tally)
        },
    )?;
    let mut total = ScanTally::default();
    for t in tallies {
        total.matching += t.matching;
        total.invariant += t.invariant;
        total.missing.extend(t.missing);
        total.counterexamples.extend(t.counterexamples);
    }
    let missing_triples = total.missing.len() as u64;
    Ok(ScanReport {
        pair,
        height,
        filter: filter.clone(),
        conjecture,
        enumerated: shape.count,
        matching_filter: total.matching,
        total_invariant_triples: total.invariant,
        missing_triples,
        missing: total.missing,
        counterexamples: total.counterexamples,
        density: Density {
            missing: missing_triples,
            total: total.invariant,
        },
        truncated: shape.truncated,
    })
}

/// All folded-side triples with coordinates `<= height` that satisfy
/// `filter`, in lexicographic order, stopping after `limit` triples.
/// Counterexamples are checked against the pair's own conjecture.
pub fn scan_missing(engine: &Engine, pair: Pair, height: u32, filter: &Filter, limit: u64) -> Result<ScanReport> {
    scan_with(engine, pair, height, filter, Conjecture::for_pair(pair.kind()), limit)
}

pub fn verify_conjecture(
    engine: &Engine,
    pair: Pair,
    conjecture: Conjecture,
    height: u32,
    limit: u64,
) -> Result<ScanReport> {
    if conjecture.pair_kind() != pair.kind() {
        return Err(Error::InvalidArgument(format!(
            "conjecture {conjecture} concerns the {} pair, not the {} pair",
            conjecture.pair_kind(),
            pair.kind()
        )));
    }
    scan_with(engine, pair, height, &Filter::none(), conjecture, limit)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityViolation {
    pub folded_triple: Triple,
    pub m_sl: Multiplicity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenMultiplicityReport {
    pub n: usize,
    pub height: u32,
    /// Triples with nontrivial product central character.
    pub checked: u64,
    pub violations: Vec<ParityViolation>,
    pub truncated: bool,
}

/// ODD pair: whenever `p_1 x p_2 x p_3` has nontrivial central character,
/// `m_sl` must be even.
pub fn even_multiplicity_check(engine: &Engine, n: usize, height: u32, limit: u64) -> Result<EvenMultiplicityReport> {
    let pair = Pair::odd(n)?;
    let (parts, shape) = scan_groups(
        engine,
        pair,
        height,
        limit,
        |t| !product_central_char_sp(t).is_trivial(),
        |items| {
            let checked = items.len() as u64;
            let bad: Vec<ParityViolation> = items
                .into_iter()
                .filter(|it| it.m_sl % 2 == 1)
                .map(|it| ParityViolation {
                    folded_triple: it.triple,
                    m_sl: it.m_sl,
                })
                .collect();
            Ok((checked, bad))
        },
    )?;
    let mut checked = 0;
    let mut violations = Vec::new();
    for (c, v) in parts {
        checked += c;
        violations.extend(v);
    }
    Ok(EvenMultiplicityReport {
        n,
        height,
        checked,
        violations,
        truncated: shape.truncated,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub claimed: String,
    pub computed: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialCaseReport {
    pub m: u32,
    pub n: u32,
    pub distinct_total: usize,
    pub selfdual_total: usize,
    pub missing_total: usize,
    /// `p` with `[p,0,0,0,p]` in `[m,0,0,0,m] x [n,0,0,0,n]`.
    pub p_range_sl: Vec<u32>,
    /// `p` with `[p,0,0]` in `[m,0,0] x [n,0,0]` for `Spin_7`.
    pub p_range_spin: Vec<u32>,
    pub claims: Vec<Claim>,
}

fn fmt_list(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// `SL_6` headers `[m,0,0,0,m]` and `[n,0,0,0,n]`: actual counts next to the
/// closed forms observed for them. Nothing here is asserted.
pub fn special_case_counts(engine: &Engine, m: u32, n: u32) -> Result<SpecialCaseReport> {
    let pair = Pair::even(3)?;
    let coord = |x: u32| Coord::try_from(x).map_err(|_| Error::Overflow("special case header"));
    let header = |x: u32| -> Result<DominantWeight> { DominantWeight::new(vec![coord(x)?, 0, 0]) };
    let cell = pair_table_cell_folded(engine, pair, &header(m)?, &header(n)?)?;
    let sl = engine.datum(pair.sl_family())?;
    let spin = engine.datum(pair.folded_family())?;
    let d_sl = engine.decompose(&sl, &cell.v, &cell.w)?;
    let d_spin = engine.decompose(&spin, &cell.v_folded, &cell.w_folded)?;
    let top = m.checked_add(n).ok_or(Error::Overflow("special case header"))?;
    let mut p_range_sl = Vec::new();
    let mut p_range_spin = Vec::new();
    for p in 0..=top + 1 {
        let w = header(p)?;
        if d_sl.contains(&pair.fold(&w)?) {
            p_range_sl.push(p);
        }
        if d_spin.contains(&w) {
            p_range_spin.push(p);
        }
    }

    let (mi, ni) = (u64::from(m), u64::from(n));
    let mut claims = Vec::new();
    let mut count_claim = |name: &str, claimed: u64, computed: usize, holds: bool| {
        claims.push(Claim {
            name: name.into(),
            claimed: claimed.to_string(),
            computed: computed.to_string(),
            holds,
        });
    };
    if ni <= 2 * mi {
        let bound = (mi + 1).pow(3);
        count_claim("distinct at most (m+1)^3", bound, cell.n1, cell.n1 as u64 <= bound);
    }
    if m == n {
        let f = mi * (2 * mi * mi + 1) / 3;
        count_claim("distinct equals m(2m^2+1)/3", f, cell.n1, cell.n1 as u64 == f);
    }
    if n <= m {
        let s = (ni + 1).pow(2);
        count_claim("selfdual equals (n+1)^2", s, cell.n2, cell.n2 as u64 == s);
        let t = ni * (ni + 1) / 2;
        count_claim("missing equals n(n+1)/2", t, cell.n4, cell.n4 as u64 == t);
    }
    let low = i64::from(m) - i64::from(n);
    let expect_sl: Vec<u32> = (0..=top + 1).filter(|&p| i64::from(p) >= low && p <= top).collect();
    let expect_spin: Vec<u32> = expect_sl.iter().copied().filter(|p| (p + top) % 2 == 0).collect();
    claims.push(Claim {
        name: "V_p in V_m x V_n iff m-n <= p <= m+n".into(),
        claimed: fmt_list(&expect_sl),
        computed: fmt_list(&p_range_sl),
        holds: expect_sl == p_range_sl,
    });
    claims.push(Claim {
        name: "W_p in W_m x W_n iff m-n <= p <= m+n and p = m+n mod 2".into(),
        claimed: fmt_list(&expect_spin),
        computed: fmt_list(&p_range_spin),
        holds: expect_spin == p_range_spin,
    });

    Ok(SpecialCaseReport {
        m,
        n,
        distinct_total: cell.n1,
        selfdual_total: cell.n2,
        missing_total: cell.n4,
        p_range_sl,
        p_range_spin,
        claims,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Question1Report {
    pub n: usize,
    pub k: u32,
    pub l: u32,
    pub bn_terms: Vec<(DominantWeight, Multiplicity)>,
    pub cn_terms: Vec<(DominantWeight, Multiplicity)>,
    pub multiplicity_free_b: bool,
    pub multiplicity_free_c: bool,
    /// `n > 2`: the two products have the same constituents.
    pub constituents_match: Option<bool>,
    /// `n = 2`: `W_[a1,a2]` occurs iff `V_[a1,2a2]` occurs.
    pub doubling_match: Option<bool>,
    /// `n = 2`: `V_[a1,a2]` occurs iff `W_[a1,2a2]` occurs.
    pub reverse_doubling_match: Option<bool>,
    pub b_second_coords_even: Option<bool>,
    pub c_second_coords_even: Option<bool>,
}

fn first_fundamental_multiple(rank: usize, k: u32) -> Result<DominantWeight> {
    let mut c = vec![0; rank];
    c[0] = Coord::try_from(k).map_err(|_| Error::Overflow("header coordinate"))?;
    DominantWeight::new(c)
}

fn term_set(d: &Decomposition) -> Vec<&DominantWeight> {
    let mut v: Vec<_> = d.weights().collect();
    v.sort();
    v
}

/// Compares `[k,0..0] x [l,0..0]` for `B_n` and `C_n`.
pub fn question1_compare(engine: &Engine, n: usize, k: u32, l: u32) -> Result<Question1Report> {
    let b = engine.datum(Family::b(n)?)?;
    let c = engine.datum(Family::c(n)?)?;
    let (vk, vl) = (first_fundamental_multiple(n, k)?, first_fundamental_multiple(n, l)?);
    let db = engine.decompose(&b, &vk, &vl)?;
    let dc = engine.decompose(&c, &vk, &vl)?;

    let doubled = |d: &Decomposition| -> Vec<DominantWeight> {
        let mut v: Vec<DominantWeight> = d
            .weights()
            .map(|w| DominantWeight::from_vec_unchecked(vec![w.coords()[0], 2 * w.coords()[1]]))
            .collect();
        v.sort();
        v
    };
    let second_even = |d: &Decomposition| d.weights().all(|w| w.coords()[1] % 2 == 0);
    let sorted_owned = |d: &Decomposition| -> Vec<DominantWeight> { term_set(d).into_iter().cloned().collect() };

    let (constituents_match, doubling_match, reverse_doubling_match, b_even, c_even) = if n == 2 {
        (
            None,
            Some(doubled(&dc) == sorted_owned(&db)),
            Some(doubled(&db) == sorted_owned(&dc)),
            Some(second_even(&db)),
            Some(second_even(&dc)),
        )
    } else {
        (Some(term_set(&db) == term_set(&dc)), None, None, None, None)
    };
    Ok(Question1Report {
        n,
        k,
        l,
        bn_terms: db.terms().to_vec(),
        cn_terms: dc.terms().to_vec(),
        multiplicity_free_b: db.is_multiplicity_free(),
        multiplicity_free_c: dc.is_multiplicity_free(),
        constituents_match,
        doubling_match,
        reverse_doubling_match,
        b_second_coords_even: b_even,
        c_second_coords_even: c_even,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Question2Report {
    pub n: usize,
    pub k: u32,
    pub l: u32,
    /// Selfdual constituents of odd multiplicity in `A_{2n-1}`.
    pub odd_terms_even_sl: Vec<(DominantWeight, Multiplicity)>,
    /// Selfdual constituents of odd multiplicity in `A_{2n}`.
    pub odd_terms_odd_sl: Vec<(DominantWeight, Multiplicity)>,
    pub bijection_holds: bool,
    pub multiplicities_preserved: bool,
    /// `n > 2`: every matched constituent has `a_i = 0` for `i > 2`.
    pub higher_coords_zero: Option<bool>,
}

/// Compares `[k,0..0,k] x [l,0..0,l]` for `A_{2n-1}` and `A_{2n}` on selfdual
/// constituents of odd multiplicity.
pub fn question2_compare(engine: &Engine, n: usize, k: u32, l: u32) -> Result<Question2Report> {
    let even = Pair::even(n)?;
    let odd = Pair::odd(n)?;
    let hk = first_fundamental_multiple(n, k)?;
    let hl = first_fundamental_multiple(n, l)?;
    let a_even = engine.datum(even.sl_family())?;
    let a_odd = engine.datum(odd.sl_family())?;
    let d_even = engine.decompose(&a_even, &even.fold(&hk)?, &even.fold(&hl)?)?;
    let d_odd = engine.decompose(&a_odd, &odd.fold(&hk)?, &odd.fold(&hl)?)?;

    let odd_selfdual = |pair: &Pair, d: &Decomposition| -> Vec<(DominantWeight, Multiplicity)> {
        d.iter()
            .filter(|&(w, m)| m % 2 == 1 && pair.unfold(w).is_ok())
            .map(|(w, m)| (w.clone(), m))
            .collect()
    };
    let left = odd_selfdual(&even, &d_even);
    let right = odd_selfdual(&odd, &d_odd);

    // Both sides keyed by the folded coordinates of the even-rank side.
    let key_left: FxHashMap<DominantWeight, Multiplicity> = left
        .iter()
        .map(|(w, m)| (even.unfold(w).expect("selfdual"), *m))
        .collect();
    let key_right: FxHashMap<DominantWeight, Multiplicity> = right
        .iter()
        .map(|(w, m)| {
            let mut a = odd.unfold(w).expect("selfdual").into_inner();
            if n == 2 {
                a[1] *= 2;
            }
            (DominantWeight::from_vec_unchecked(a), *m)
        })
        .collect();
    let bijection_holds = key_left.len() == key_right.len() && key_left.keys().all(|w| key_right.contains_key(w));
    let multiplicities_preserved = bijection_holds && key_left == key_right;
    let higher_coords_zero = (n > 2).then(|| {
        key_left
            .keys()
            .chain(key_right.keys())
            .all(|w| w.coords()[2..].iter().all(|&c| c == 0))
    });
    Ok(Question2Report {
        n,
        k,
        l,
        odd_terms_even_sl: left,
        odd_terms_odd_sl: right,
        bijection_holds,
        multiplicities_preserved,
        higher_coords_zero,
    })
}
