//! Text and CSV layouts. JSON comes straight from [`Report::to_json`].

use std::fmt::Write as _;

use selfdual_core::analysis::{fmt_triple, PairTable, PairTableCell, ScanReport, Triple};
use selfdual_core::{DominantWeight, Multiplicity};

use crate::config::Format;
use crate::report::{Body, Report};

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Paper => paper(&report.body),
        Format::Long => long(&report.body),
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn opt(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn sum_line(terms: &[(DominantWeight, Multiplicity)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|(w, m)| if *m == 1 { w.to_string() } else { format!("{m}{w}") })
        .collect();
    parts.join(" + ")
}

fn cell_header(c: &PairTableCell) -> String {
    format!("{}  V={} W={}  ({} x {})", c.pair, c.v, c.w, c.v_folded, c.w_folded)
}

fn scan_text(out: &mut String, r: &ScanReport) {
    let _ = writeln!(
        out,
        "{}  height {}  filter {}  conjecture {}",
        r.pair, r.height, r.filter, r.conjecture
    );
    let _ = writeln!(out, "enumerated:        {}", r.enumerated);
    let _ = writeln!(out, "matching filter:   {}", r.matching_filter);
    let _ = writeln!(out, "with invariant:    {}", r.total_invariant_triples);
    let _ = writeln!(out, "missing:           {}", r.missing_triples);
    let _ = writeln!(out, "density:           {}", r.density);
    let _ = writeln!(out, "counterexamples:   {}", r.counterexamples.len());
    if r.truncated {
        let _ = writeln!(out, "TRUNCATED: stopped at the triple limit");
    }
    for t in &r.missing {
        let mark = if r.counterexamples.contains(t) {
            "  <- counterexample"
        } else {
            ""
        };
        let _ = writeln!(out, "  {}{mark}", fmt_triple(t));
    }
}

fn paper(body: &Body) -> String {
    let mut out = String::new();
    match body {
        Body::Decompose(d) => {
            let _ = writeln!(out, "{}: {} x {} = {}", d.family, d.lambda, d.mu, {
                let t: Vec<_> = d.terms.iter().map(|t| (t.weight.clone(), t.multiplicity)).collect();
                sum_line(&t)
            });
            let _ = writeln!(out, "dimension {}", d.dimension);
            for t in &d.terms {
                let _ = writeln!(
                    out,
                    "  {}  multiplicity {}  dimension {}",
                    t.weight, t.multiplicity, t.dimension
                );
            }
        }
        Body::Fold(f) | Body::Unfold(f) => {
            let _ = writeln!(out, "{}: {} <-> {}", f.pair, f.folded, f.sl);
            let _ = writeln!(
                out,
                "central character: SL {}, folded {}",
                f.central_char_sl, f.central_char_folded
            );
        }
        Body::Triple(t) => {
            let _ = writeln!(
                out,
                "{}: {} -> {}",
                t.pair,
                fmt_triple(&t.folded_triple),
                fmt_triple(&t.sl_triple)
            );
            let _ = writeln!(
                out,
                "m_sl {}  m_fold {}  m_tilde {}{}",
                t.m_sl,
                t.m_fold,
                t.m_tilde,
                if t.is_missing { "  MISSING" } else { "" }
            );
        }
        Body::Cell(c) => {
            let _ = writeln!(out, "{}", cell_header(c));
            let _ = writeln!(out, "  {} {}", c.n1, c.n4);
            let _ = writeln!(out, "  {} {}", c.n2, c.n3);
            let missing = if c.missing.is_empty() {
                "none".to_string()
            } else {
                join(&c.missing, " ")
            };
            let _ = writeln!(out, "missing: {missing}");
        }
        Body::Table(t) => return paper_table(t),
        Body::Scan(r) | Body::Verify(r) => scan_text(&mut out, r),
        Body::Parity(r) => {
            let _ = writeln!(out, "odd n={}  height {}", r.n, r.height);
            let _ = writeln!(out, "checked:     {}", r.checked);
            let _ = writeln!(out, "violations:  {}", r.violations.len());
            if r.truncated {
                let _ = writeln!(out, "TRUNCATED: stopped at the triple limit");
            }
            for v in &r.violations {
                let _ = writeln!(out, "  {}  m_sl {}", fmt_triple(&v.folded_triple), v.m_sl);
            }
        }
        Body::Special(s) => {
            let _ = writeln!(out, "[{m},0,0] x [{n},0,0]  (even n=3)", m = s.m, n = s.n);
            let _ = writeln!(out, "distinct:  {}", s.distinct_total);
            let _ = writeln!(out, "selfdual:  {}", s.selfdual_total);
            let _ = writeln!(out, "missing:   {}", s.missing_total);
            let _ = writeln!(out, "p (SL):    {}", join(&s.p_range_sl, " "));
            let _ = writeln!(out, "p (Spin):  {}", join(&s.p_range_spin, " "));
            for c in &s.claims {
                let verdict = if c.holds { "holds" } else { "FAILS" };
                let _ = writeln!(
                    out,
                    "  {verdict}: {}  claimed {}  computed {}",
                    c.name, c.claimed, c.computed
                );
            }
        }
        Body::Question1(q) => {
            let _ = writeln!(out, "n={}  k={}  l={}", q.n, q.k, q.l);
            let _ = writeln!(out, "B: {}", sum_line(&q.bn_terms));
            let _ = writeln!(out, "C: {}", sum_line(&q.cn_terms));
            let _ = writeln!(
                out,
                "multiplicity free: B {}  C {}",
                q.multiplicity_free_b, q.multiplicity_free_c
            );
            let _ = writeln!(out, "same constituents:           {}", opt(q.constituents_match));
            let _ = writeln!(out, "C [a1,a2] <-> B [a1,2a2]:    {}", opt(q.doubling_match));
            let _ = writeln!(out, "B [a1,a2] <-> C [a1,2a2]:    {}", opt(q.reverse_doubling_match));
            let _ = writeln!(out, "B second coordinates even:   {}", opt(q.b_second_coords_even));
            let _ = writeln!(out, "C second coordinates even:   {}", opt(q.c_second_coords_even));
        }
        Body::Question2(q) => {
            let _ = writeln!(out, "n={}  k={}  l={}", q.n, q.k, q.l);
            let _ = writeln!(out, "A{} odd selfdual: {}", 2 * q.n - 1, sum_line(&q.odd_terms_even_sl));
            let _ = writeln!(out, "A{} odd selfdual: {}", 2 * q.n, sum_line(&q.odd_terms_odd_sl));
            let _ = writeln!(out, "bijection:                {}", q.bijection_holds);
            let _ = writeln!(out, "multiplicities preserved: {}", q.multiplicities_preserved);
            let _ = writeln!(out, "higher coordinates zero:  {}", opt(q.higher_coords_zero));
        }
        Body::Twisted(t) => {
            let _ = writeln!(out, "n={}  fixed characters {}", t.n, t.fixed_count);
            let _ = writeln!(out, "matches spin weights: {}", t.matches_spin_weights);
            for (i, w) in t.fixed_characters.iter().zip(&t.folded_weights) {
                let _ = writeln!(out, "  {{{}}} -> {w}", join(i, ","));
            }
        }
    }
    out
}

fn csv_string(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv is utf-8")
}

/// Two lines per header row: `n1 n4` above `n2 n3` in every column.
fn paper_table(t: &PairTable) -> String {
    let mut rows = vec![std::iter::once(t.pair.to_string())
        .chain(t.cols.iter().map(ToString::to_string))
        .collect()];
    for (header, cells) in t.rows.iter().zip(&t.cells) {
        let top = cells.iter().map(|c| format!("{} {}", c.n1, c.n4));
        rows.push(std::iter::once(header.to_string()).chain(top).collect());
        let bottom = cells.iter().map(|c| format!("{} {}", c.n2, c.n3));
        rows.push(std::iter::once(String::new()).chain(bottom).collect());
    }
    csv_string(rows)
}

fn cell_record(c: &PairTableCell) -> Vec<String> {
    vec![
        c.pair.kind().to_string(),
        c.pair.n().to_string(),
        c.v_folded.to_string(),
        c.w_folded.to_string(),
        c.v.to_string(),
        c.w.to_string(),
        c.n1.to_string(),
        c.n2.to_string(),
        c.n3.to_string(),
        c.n4.to_string(),
        join(&c.missing, " "),
    ]
}

fn header(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

const CELL_COLUMNS: [&str; 11] = ["pair", "n", "a", "b", "v", "w", "n1", "n2", "n3", "n4", "missing"];

fn triple_record(t: &Triple) -> Vec<String> {
    t.iter().map(ToString::to_string).collect()
}

fn long(body: &Body) -> String {
    let rows: Vec<Vec<String>> = match body {
        Body::Decompose(d) => std::iter::once(header(&["weight", "multiplicity", "dimension"]))
            .chain(d.terms.iter().map(|t| {
                vec![
                    t.weight.to_string(),
                    t.multiplicity.to_string(),
                    t.dimension.to_string(),
                ]
            }))
            .collect(),
        Body::Fold(f) | Body::Unfold(f) => vec![
            header(&["pair", "n", "folded", "sl", "central_char_sl", "central_char_folded"]),
            vec![
                f.pair.kind().to_string(),
                f.pair.n().to_string(),
                f.folded.to_string(),
                f.sl.to_string(),
                f.central_char_sl.to_string(),
                f.central_char_folded.to_string(),
            ],
        ],
        Body::Triple(t) => vec![
            header(&[
                "pair", "n", "p1", "p2", "p3", "v1", "v2", "v3", "m_sl", "m_fold", "m_tilde", "missing",
            ]),
            [t.pair.kind().to_string(), t.pair.n().to_string()]
                .into_iter()
                .chain(triple_record(&t.folded_triple))
                .chain(triple_record(&t.sl_triple))
                .chain([
                    t.m_sl.to_string(),
                    t.m_fold.to_string(),
                    t.m_tilde.to_string(),
                    t.is_missing.to_string(),
                ])
                .collect(),
        ],
        Body::Cell(c) => vec![header(&CELL_COLUMNS), cell_record(c)],
        Body::Table(t) => std::iter::once(header(&CELL_COLUMNS))
            .chain(t.cells.iter().flatten().map(cell_record))
            .collect(),
        Body::Scan(r) | Body::Verify(r) => std::iter::once(header(&["p1", "p2", "p3", "counterexample"]))
            .chain(r.missing.iter().map(|t| {
                let mut rec = triple_record(t);
                rec.push(r.counterexamples.contains(t).to_string());
                rec
            }))
            .collect(),
        Body::Parity(r) => std::iter::once(header(&["p1", "p2", "p3", "m_sl"]))
            .chain(r.violations.iter().map(|v| {
                let mut rec = triple_record(&v.folded_triple);
                rec.push(v.m_sl.to_string());
                rec
            }))
            .collect(),
        Body::Special(s) => std::iter::once(header(&["m", "n", "claim", "claimed", "computed", "holds"]))
            .chain(s.claims.iter().map(|c| {
                vec![
                    s.m.to_string(),
                    s.n.to_string(),
                    c.name.clone(),
                    c.claimed.clone(),
                    c.computed.clone(),
                    c.holds.to_string(),
                ]
            }))
            .collect(),
        Body::Question1(q) => side_terms(&[("B", &q.bn_terms), ("C", &q.cn_terms)]),
        Body::Question2(q) => side_terms(&[("even", &q.odd_terms_even_sl), ("odd", &q.odd_terms_odd_sl)]),
        Body::Twisted(t) => std::iter::once(header(&["fixed_set", "folded_weight"]))
            .chain(
                t.fixed_characters
                    .iter()
                    .zip(&t.folded_weights)
                    .map(|(i, w)| vec![join(i, " "), w.to_string()]),
            )
            .collect(),
    };
    csv_string(rows)
}

fn side_terms(sides: &[(&str, &Vec<(DominantWeight, Multiplicity)>)]) -> Vec<Vec<String>> {
    let mut rows = vec![header(&["side", "weight", "multiplicity"])];
    for (name, terms) in sides {
        rows.extend(
            terms
                .iter()
                .map(|(w, m)| vec![name.to_string(), w.to_string(), m.to_string()]),
        );
    }
    rows
}
