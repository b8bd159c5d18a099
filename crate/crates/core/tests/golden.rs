//! Recorded values that downstream tooling relies on.

use selfdual_core::analysis::{
    even_multiplicity_check, question1_compare, question2_compare, scan_missing, special_case_counts,
    verify_conjecture, Conjecture, Filter,
};
use selfdual_core::{DominantWeight, Engine, Pair};

fn w(c: &[i32]) -> DominantWeight {
    DominantWeight::new(c.to_vec()).unwrap()
}

#[test]
fn even_scan_with_vanishing_last_coordinates() {
    let engine = Engine::new();
    let filter: Filter = "last_zero(1) & last_zero(2)".parse().unwrap();
    let expected = [(1, 64, 16, 5, 1), (2, 729, 81, 21, 5), (3, 4096, 256, 52, 16)];
    for (h, enumerated, matching, invariant, missing) in expected {
        let r = scan_missing(&engine, Pair::even(2).unwrap(), h, &filter, u64::MAX).unwrap();
        assert_eq!(
            (
                r.enumerated,
                r.matching_filter,
                r.total_invariant_triples,
                r.missing_triples
            ),
            (enumerated, matching, invariant, missing),
            "height {h}"
        );
        assert!(r.counterexamples.is_empty());
        assert!(!r.truncated);
    }
}

#[test]
fn conjecture_scans_at_height_two() {
    let engine = Engine::new();
    let c1 = verify_conjecture(&engine, Pair::even(2).unwrap(), Conjecture::C1, 2, u64::MAX).unwrap();
    assert_eq!((c1.total_invariant_triples, c1.missing_triples), (231, 7));
    assert!(c1.counterexamples.is_empty());
    let c3 = verify_conjecture(&engine, Pair::odd(2).unwrap(), Conjecture::C3, 2, u64::MAX).unwrap();
    assert_eq!((c3.total_invariant_triples, c3.missing_triples), (387, 163));
    assert!(c3.counterexamples.is_empty());
    assert!(verify_conjecture(&engine, Pair::odd(2).unwrap(), Conjecture::C1, 2, u64::MAX).is_err());
}

#[test]
fn truncated_scan_is_flagged() {
    let r = scan_missing(&Engine::new(), Pair::even(2).unwrap(), 2, &Filter::none(), 100).unwrap();
    assert!(r.truncated);
    assert_eq!(r.enumerated, 100);
}

#[test]
fn odd_multiplicities_are_even() {
    let engine = Engine::new();
    let r = even_multiplicity_check(&engine, 2, 2, u64::MAX).unwrap();
    assert_eq!((r.checked, r.violations.len()), (351, 0));
    let r = even_multiplicity_check(&engine, 3, 1, u64::MAX).unwrap();
    assert_eq!((r.checked, r.violations.len()), (256, 0));
}

#[test]
fn special_case_cells() {
    let engine = Engine::new();
    for (m, distinct) in [(1, 6), (2, 19), (3, 44)] {
        let r = special_case_counts(&engine, m, m).unwrap();
        assert_eq!(r.distinct_total, distinct, "m = {m}");
        assert_eq!(r.selfdual_total as u32, (m + 1).pow(2));
        assert_eq!(r.missing_total as u32, m * (m + 1) / 2);
    }
    let r = special_case_counts(&engine, 4, 2).unwrap();
    assert_eq!(r.p_range_sl, vec![2, 3, 4, 5, 6]);
    assert_eq!(r.p_range_spin, vec![2, 4, 6]);
    assert!(r
        .claims
        .iter()
        .filter(|c| c.name.starts_with('V') || c.name.starts_with('W'))
        .all(|c| c.holds));
}

#[test]
fn question1_rank_two_doubles_second_coordinate() {
    let engine = Engine::new();
    let r = question1_compare(&engine, 2, 2, 2).unwrap();
    assert_eq!(r.doubling_match, Some(true));
    assert_eq!(r.reverse_doubling_match, Some(false));
    assert_eq!(r.b_second_coords_even, Some(true));
    assert_eq!(r.c_second_coords_even, Some(false));
    let c_terms: Vec<&DominantWeight> = r.cn_terms.iter().map(|(w, _)| w).collect();
    assert!(c_terms.contains(&&w(&[2, 1])) && c_terms.contains(&&w(&[0, 1])));
    for n in [3, 4] {
        let r = question1_compare(&engine, n, 2, 1).unwrap();
        assert_eq!(r.constituents_match, Some(true), "n = {n}");
        assert!(r.multiplicity_free_b && r.multiplicity_free_c);
    }
}

#[test]
fn question2_bijection() {
    let engine = Engine::new();
    for n in [2, 3] {
        for (k, l) in [(0, 0), (1, 1), (2, 1), (2, 2), (3, 2)] {
            let r = question2_compare(&engine, n, k, l).unwrap();
            assert!(
                r.bijection_holds && r.multiplicities_preserved,
                "n = {n} k = {k} l = {l}"
            );
        }
    }
}
