//! Library results against the Kostant / Weyl-group reference in `common`.

mod common;

use common::{box_weights, letter_of, to_vec, Oracle};
use selfdual_core::analysis::{triple_report, PairTableCell};
use selfdual_core::tensor::{dual_weight, tensor_decompose};
use selfdual_core::{
    full_weight_system, weyl_dimension, DominantWeight, Engine, Family, Letter, Pair, PairKind, RootDatum,
};

fn families(max_rank: usize) -> Vec<Family> {
    let mut v = Vec::new();
    for rank in 1..=max_rank {
        v.push(Family::a(rank).unwrap());
        if rank >= 2 {
            v.push(Family::b(rank).unwrap());
            v.push(Family::c(rank).unwrap());
        }
    }
    v
}

#[test]
fn root_systems_agree() {
    for family in families(5) {
        let datum = RootDatum::new(family).unwrap();
        let oracle = Oracle::new(letter_of(family), family.rank());
        let cartan: Vec<Vec<i64>> = datum
            .cartan()
            .iter()
            .map(|r| r.iter().map(|&c| i64::from(c)).collect())
            .collect();
        assert_eq!(cartan, oracle.cartan, "{family}");
        let mut mine: Vec<Vec<i64>> = datum
            .positive_root_coords()
            .iter()
            .map(|r| r.iter().map(|&c| i64::from(c)).collect())
            .collect();
        let mut theirs = oracle.positive.clone();
        mine.sort();
        theirs.sort();
        assert_eq!(mine, theirs, "{family}");
    }
}

#[test]
fn weight_multiplicities_match_kostant() {
    for family in families(3) {
        let datum = RootDatum::new(family).unwrap();
        let oracle = Oracle::new(letter_of(family), family.rank());
        for hw in box_weights(family.rank(), 2) {
            let table = full_weight_system(&datum, &hw).unwrap();
            let theirs = oracle.character(&to_vec(&hw));
            assert_eq!(table.len(), theirs.len(), "{family} {hw}");
            for (w, m) in &theirs {
                let w = selfdual_core::Weight::new(w.iter().map(|&c| c as i32).collect());
                assert_eq!(table.get(&w), *m, "{family} {hw} at {w}");
            }
            let dim = weyl_dimension(&datum, &hw).unwrap();
            assert_eq!(dim, u128::from(theirs.values().sum::<u64>()), "{family} {hw}");
        }
    }
}

#[test]
fn decompositions_match_reference() {
    for family in families(3) {
        let datum = RootDatum::new(family).unwrap();
        let oracle = Oracle::new(letter_of(family), family.rank());
        let max = if family.rank() <= 2 { 2 } else { 1 };
        let ws = box_weights(family.rank(), max);
        for a in &ws {
            for b in &ws {
                let d = tensor_decompose(&datum, a, b).unwrap();
                let theirs = oracle.decompose(&to_vec(a), &to_vec(b));
                let mine: Vec<(Vec<i64>, u64)> = d.iter().map(|(w, m)| (to_vec(w), m)).collect();
                let mut mine = mine;
                mine.sort();
                let theirs: Vec<(Vec<i64>, u64)> = theirs.into_iter().collect();
                assert_eq!(mine, theirs, "{family} {a} x {b}");
            }
        }
    }
}

/// `m(V_1, V_2, V_3)` straight from the reference decomposition.
fn reference_trivial(oracle: &Oracle, datum: &RootDatum, t: &[DominantWeight; 3]) -> u64 {
    let d = oracle.decompose(&to_vec(&t[0]), &to_vec(&t[1]));
    d.get(&to_vec(&dual_weight(datum, &t[2]))).copied().unwrap_or(0)
}

#[test]
fn triple_multiplicities_match_reference() {
    let engine = Engine::new();
    for pair in [Pair::even(2).unwrap(), Pair::odd(2).unwrap()] {
        let sl = RootDatum::new(pair.sl_family()).unwrap();
        let folded = RootDatum::new(pair.folded_family()).unwrap();
        let o_sl = Oracle::new('A', sl.rank());
        let o_fold = Oracle::new(letter_of(folded.family()), folded.rank());
        let ws = box_weights(2, 1);
        for a in &ws {
            for b in &ws {
                for c in &ws {
                    let t = [a.clone(), b.clone(), c.clone()];
                    let r = triple_report(&engine, pair, &t).unwrap();
                    assert_eq!(r.m_sl, reference_trivial(&o_sl, &sl, &r.sl_triple), "{pair} {t:?}");
                    assert_eq!(r.m_fold, reference_trivial(&o_fold, &folded, &t), "{pair} {t:?}");
                }
            }
        }
    }
}

/// The `(1,0)^3` triple of the EVEN n=2 pair is missing: two invariants on
/// the SL side, none on `Spin_5`.
#[test]
fn vector_cube_is_missing() {
    let engine = Engine::new();
    let v = DominantWeight::new(vec![1, 0]).unwrap();
    let t = [v.clone(), v.clone(), v];
    let r = triple_report(&engine, Pair::even(2).unwrap(), &t).unwrap();
    let sl = RootDatum::new(Family::new(Letter::A, 3).unwrap()).unwrap();
    let b2 = RootDatum::new(Family::new(Letter::B, 2).unwrap()).unwrap();
    assert_eq!(r.m_sl, reference_trivial(&Oracle::new('A', 3), &sl, &r.sl_triple));
    assert_eq!(r.m_fold, reference_trivial(&Oracle::new('B', 2), &b2, &t));
    assert_eq!((r.m_sl, r.m_fold, r.m_tilde, r.is_missing), (2, 0, 1, true));
}

fn reference_cell(
    sl: &Oracle,
    fo: &Oracle,
    pair: Pair,
    a: &DominantWeight,
    b: &DominantWeight,
) -> (usize, usize, usize, usize) {
    let (v, w) = (pair.fold(a).unwrap(), pair.fold(b).unwrap());
    let d_sl = sl.decompose(&to_vec(&v), &to_vec(&w));
    let d_fo = fo.decompose(&to_vec(a), &to_vec(b));
    let parity = (a.coords()[0] + b.coords()[0]) % 2;
    let mut n2 = 0;
    let mut n4 = 0;
    for c in d_sl.keys() {
        let selfdual = c.iter().eq(c.iter().rev());
        if !selfdual || (pair.kind() == PairKind::Odd && (c[0] % 2) as i32 != parity) {
            continue;
        }
        n2 += 1;
        if !d_fo.contains_key(&c[..pair.n()]) {
            n4 += 1;
        }
    }
    (d_sl.len(), n2, d_fo.len(), n4)
}

#[test]
fn small_cells_match_reference() {
    let engine = Engine::new();
    for pair in [Pair::even(2).unwrap(), Pair::odd(2).unwrap()] {
        let sl = Oracle::new('A', pair.sl_family().rank());
        let fo = Oracle::new(letter_of(pair.folded_family()), pair.n());
        for a in box_weights(2, 2) {
            for b in box_weights(2, 1) {
                let cell: PairTableCell =
                    selfdual_core::analysis::pair_table_cell_folded(&engine, pair, &a, &b).unwrap();
                assert_eq!(
                    cell.numbers(),
                    reference_cell(&sl, &fo, pair, &a, &b),
                    "{pair} {a} x {b}"
                );
            }
        }
    }
}
