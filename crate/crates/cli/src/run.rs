use std::time::Instant;

use selfdual_core::analysis::{
    build_table, even_multiplicity_check, pair_table_cell, pair_table_cell_folded, question1_compare,
    question2_compare, scan_missing, special_case_counts, triple_report, verify_conjecture, Conjecture,
};
use selfdual_core::folding::twisted_spin_character;
use selfdual_core::{weyl_dimension, DominantWeight, Engine, Family, Pair, PairKind};

use crate::args::Verb;
use crate::config::Settings;
use crate::error::{CliError, CliResult};
use crate::report::{Body, DecomposeBody, FoldBody, Metadata, Report, Term};
use crate::weight::{parse_weight, parse_weight_list};

/// Which side of the pair a weight argument lives on.
#[derive(Clone, Copy)]
enum Side {
    Sl,
    Folded,
}

fn require<T>(value: Option<T>, flag: &str, verb: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::Parse(format!("{verb} needs --{flag}")))
}

/// Folded rank implied by a weight's length.
fn implied_n(kind: PairKind, side: Side, len: usize) -> CliResult<usize> {
    let n = match (side, kind) {
        (Side::Folded, _) => Some(len),
        (Side::Sl, PairKind::Even) => (len % 2 == 1).then(|| len.div_ceil(2)),
        (Side::Sl, PairKind::Odd) => len.is_multiple_of(2).then_some(len / 2),
    };
    n.filter(|&n| n >= 2)
        .ok_or_else(|| CliError::Parse(format!("a weight with {len} coordinates does not fit the {kind} pair")))
}

fn pair_for(settings: &Settings, verb: &str, side: Side, texts: &[&str]) -> CliResult<(Pair, Vec<DominantWeight>)> {
    let kind = require(settings.pair, "pair", verb)?;
    let first = parse_weight(texts[0], None)?;
    let n = implied_n(kind, side, first.rank())?;
    if let Some(given) = settings.n {
        if given != n {
            return Err(CliError::Parse(format!("--n {given} disagrees with weight {first}")));
        }
    }
    let pair = Pair::new(kind, n)?;
    let rank = match side {
        Side::Folded => n,
        Side::Sl => pair.sl_family().rank(),
    };
    let weights = texts
        .iter()
        .map(|t| parse_weight(t, Some(rank)))
        .collect::<CliResult<_>>()?;
    Ok((pair, weights))
}

fn pair_from_flags(settings: &Settings, verb: &str) -> CliResult<Pair> {
    let kind = require(settings.pair, "pair", verb)?;
    Ok(Pair::new(kind, require(settings.n, "n", verb)?)?)
}

fn fold_body(pair: Pair, folded: DominantWeight, sl: DominantWeight) -> CliResult<FoldBody> {
    Ok(FoldBody {
        central_char_sl: pair.central_char_sl(&sl)?,
        central_char_folded: pair.central_char_folded(&folded)?,
        pair,
        folded,
        sl,
    })
}

/// Everything a report header records about the inputs.
#[derive(Default)]
struct Context {
    inputs: Vec<String>,
    family: Option<Family>,
    pair: Option<Pair>,
    height: Option<u32>,
    limit: Option<u64>,
    filter: bool,
    table_preset: bool,
}

fn execute(verb: &Verb, settings: &Settings, engine: &Engine) -> CliResult<(Body, Context)> {
    let name = verb.name();
    let mut cx = Context::default();
    let body = match verb {
        Verb::Decompose { lambda, mu } => {
            let letter = require(settings.family, "family", name)?;
            let a = parse_weight(lambda, settings.rank)?;
            let family = Family::new(letter, a.rank())?;
            let b = parse_weight(mu, Some(family.rank()))?;
            let datum = engine.datum(family)?;
            let d = engine.decompose(&datum, &a, &b)?;
            let terms = d
                .iter()
                .map(|(w, m)| {
                    Ok(Term {
                        weight: w.clone(),
                        multiplicity: m,
                        dimension: weyl_dimension(&datum, w)?,
                    })
                })
                .collect::<selfdual_core::Result<Vec<_>>>()?;
            let dimension = weyl_dimension(&datum, &a)?
                .checked_mul(weyl_dimension(&datum, &b)?)
                .ok_or(selfdual_core::Error::Overflow("dimension"))?;
            cx.family = Some(family);
            cx.inputs = vec![a.to_string(), b.to_string()];
            Body::Decompose(DecomposeBody {
                family,
                lambda: a,
                mu: b,
                dimension,
                terms,
            })
        }
        Verb::Fold { weight } => {
            let (pair, w) = pair_for(settings, name, Side::Folded, &[weight])?;
            let sl = pair.fold(&w[0])?;
            cx.pair = Some(pair);
            cx.inputs = vec![w[0].to_string()];
            Body::Fold(fold_body(pair, w[0].clone(), sl)?)
        }
        Verb::Unfold { weight } => {
            let (pair, w) = pair_for(settings, name, Side::Sl, &[weight])?;
            let folded = pair.unfold(&w[0])?;
            cx.pair = Some(pair);
            cx.inputs = vec![w[0].to_string()];
            Body::Unfold(fold_body(pair, folded, w[0].clone())?)
        }
        Verb::Triple { p1, p2, p3 } => {
            let (pair, w) = pair_for(settings, name, Side::Folded, &[p1, p2, p3])?;
            let t = [w[0].clone(), w[1].clone(), w[2].clone()];
            cx.pair = Some(pair);
            cx.inputs = w.iter().map(ToString::to_string).collect();
            Body::Triple(triple_report(engine, pair, &t)?)
        }
        Verb::Cell { v, w, folded } => {
            let side = if *folded { Side::Folded } else { Side::Sl };
            let (pair, ws) = pair_for(settings, name, side, &[v, w])?;
            let cell = if *folded {
                pair_table_cell_folded(engine, pair, &ws[0], &ws[1])?
            } else {
                pair_table_cell(engine, pair, &ws[0], &ws[1])?
            };
            cx.pair = Some(pair);
            cx.inputs = vec![cell.v.to_string(), cell.w.to_string()];
            Body::Cell(cell)
        }
        Verb::Table { rows, cols } => {
            let (pair, rows, cols) = match (settings.preset, rows, cols) {
                (Some(p), None, None) => {
                    let pair = p.pair();
                    if settings.pair.is_some_and(|k| k != pair.kind()) || settings.n.is_some_and(|n| n != pair.n()) {
                        return Err(CliError::Parse(format!("--preset {p} is the {pair} table")));
                    }
                    cx.table_preset = true;
                    (pair, p.rows(), p.cols())
                }
                (None, Some(r), Some(c)) => {
                    let pair = pair_from_flags(settings, name)?;
                    (
                        pair,
                        parse_weight_list(r, Some(pair.n()))?,
                        parse_weight_list(c, Some(pair.n()))?,
                    )
                }
                _ => {
                    return Err(CliError::Parse(
                        "table needs either --preset or both --rows and --cols".into(),
                    ))
                }
            };
            cx.pair = Some(pair);
            Body::Table(build_table(engine, pair, &rows, &cols)?)
        }
        Verb::Scan => {
            let pair = pair_from_flags(settings, name)?;
            cx.pair = Some(pair);
            cx.height = Some(settings.height);
            cx.limit = Some(settings.limit);
            cx.filter = true;
            Body::Scan(scan_missing(
                engine,
                pair,
                settings.height,
                &settings.filter,
                settings.limit,
            )?)
        }
        Verb::Verify { claim } => {
            cx.height = Some(settings.height);
            cx.limit = Some(settings.limit);
            cx.inputs = vec![claim.to_ascii_lowercase()];
            if claim.eq_ignore_ascii_case("parity") {
                if settings.pair == Some(PairKind::Even) {
                    return Err(CliError::Parse("the parity law concerns the odd pair".into()));
                }
                let n = require(settings.n, "n", name)?;
                cx.pair = Some(Pair::odd(n)?);
                Body::Parity(even_multiplicity_check(engine, n, settings.height, settings.limit)?)
            } else {
                let conj: Conjecture = claim
                    .parse()
                    .map_err(|_| CliError::Parse(format!("unknown claim {claim:?} (c1, c3 or parity)")))?;
                let kind = settings.pair.unwrap_or(conj.pair_kind());
                let pair = Pair::new(kind, require(settings.n, "n", name)?)?;
                cx.pair = Some(pair);
                Body::Verify(verify_conjecture(engine, pair, conj, settings.height, settings.limit)?)
            }
        }
        Verb::Special { m, k } => {
            cx.pair = Some(Pair::even(3)?);
            cx.inputs = vec![m.to_string(), k.to_string()];
            Body::Special(special_case_counts(engine, *m, *k)?)
        }
        Verb::Question1 { k, l } => {
            cx.inputs = vec![k.to_string(), l.to_string()];
            Body::Question1(question1_compare(engine, require(settings.n, "n", name)?, *k, *l)?)
        }
        Verb::Question2 { k, l } => {
            cx.inputs = vec![k.to_string(), l.to_string()];
            Body::Question2(question2_compare(engine, require(settings.n, "n", name)?, *k, *l)?)
        }
        Verb::Twisted => Body::Twisted(twisted_spin_character(require(settings.n, "n", name)?)?),
    };
    Ok((body, cx))
}

fn quote(s: &str) -> String {
    if s.chars().all(|c| c.is_ascii_alphanumeric() || "[],_-.".contains(c)) {
        s.to_string()
    } else {
        format!("'{s}'")
    }
}

fn invocation(verb: &Verb, settings: &Settings, cx: &Context) -> String {
    let mut parts = vec!["selfdual".to_string(), verb.name().to_string()];
    parts.extend(cx.inputs.iter().map(|s| quote(s)));
    if let Some(f) = cx.family {
        parts.push(format!("--family {}", f.letter()));
    }
    if let Some(p) = cx.pair {
        if cx.table_preset {
            parts.push(format!("--preset {}", settings.preset.expect("preset table")));
        } else if !matches!(verb, Verb::Special { .. }) {
            parts.push(format!("--pair {} --n {}", p.kind(), p.n()));
        }
    }
    match verb {
        Verb::Question1 { .. } | Verb::Question2 { .. } | Verb::Twisted => {
            parts.push(format!("--n {}", settings.n.unwrap_or_default()))
        }
        Verb::Cell { folded: true, .. } => parts.push("--folded".into()),
        Verb::Table {
            rows: Some(r),
            cols: Some(c),
        } => {
            parts.push(format!("--rows {} --cols {}", quote(r), quote(c)));
        }
        _ => {}
    }
    if let Some(h) = cx.height {
        parts.push(format!("--height {h}"));
    }
    if cx.filter {
        parts.push(format!("--filter {}", quote(&settings.filter.to_string())));
    }
    if let Some(l) = cx.limit {
        parts.push(format!("--limit {l}"));
    }
    parts.join(" ")
}

/// Runs one verb against `engine` and wraps the result with its metadata.
pub fn run(verb: &Verb, settings: &Settings, engine: &Engine) -> CliResult<Report> {
    let start = Instant::now();
    let (body, cx) = execute(verb, settings, engine)?;
    let elapsed = start.elapsed();
    let metadata = Metadata {
        tool: "selfdual".into(),
        engine_version: selfdual_core::VERSION.into(),
        verb: verb.name().into(),
        invocation: invocation(verb, settings, &cx),
        family: cx.family,
        pair: cx.pair,
        filter: cx.filter.then(|| settings.filter.clone()),
        height: cx.height,
        limit: cx.limit,
        preset: settings.preset.filter(|_| cx.table_preset),
        cache: (!settings.stable).then(|| engine.stats()),
        elapsed_us: (!settings.stable).then(|| u64::try_from(elapsed.as_micros()).unwrap_or(u64::MAX)),
    };
    Ok(Report { metadata, body })
}
