//! Tensor product decomposition.
//!
//! [`tensor_decompose`] is the Brauer–Klimyk method: for every weight `nu` of
//! the smaller factor, `lambda + nu + rho` is reflected into the dominant
//! chamber and contributes `sign * mult(nu)` to the resulting highest weight.
//! [`tensor_decompose_oracle`] multiplies the two characters and peels off
//! irreducible characters from the top; it shares no code with the first
//! path beyond Freudenthal.

use std::borrow::Borrow;
use std::cmp::Ordering;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::characters::{
    dominant_weight_multiplicities, dominant_weights_below, full_weight_system, weyl_dimension, Multiplicity,
    WeightTable,
};
use crate::error::{Error, Result};
use crate::rootdata::{Coord, DominantWeight, Letter, RootDatum, Weight};

/// A finite multiset of irreducibles, ordered by decreasing height and then
/// decreasing coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    level_coeffs: Vec<i64>,
    terms: Vec<(DominantWeight, Multiplicity)>,
}

impl Decomposition {
    pub fn from_terms(datum: &RootDatum, terms: impl IntoIterator<Item = (DominantWeight, Multiplicity)>) -> Self {
        let level_coeffs = datum.level_coeffs().to_vec();
        let mut merged: FxHashMap<DominantWeight, Multiplicity> = FxHashMap::default();
        for (w, m) in terms {
            if m > 0 {
                *merged.entry(w).or_insert(0) += m;
            }
        }
        let mut terms: Vec<_> = merged.into_iter().collect();
        terms.sort_by(|(a, _), (b, _)| term_order(&level_coeffs, a, b));
        Decomposition { level_coeffs, terms }
    }

    pub fn terms(&self) -> &[(DominantWeight, Multiplicity)] {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DominantWeight, Multiplicity)> {
        self.terms.iter().map(|(w, m)| (w, *m))
    }

    pub fn weights(&self) -> impl Iterator<Item = &DominantWeight> {
        self.terms.iter().map(|(w, _)| w)
    }

    /// Number of distinct constituents.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, w: &DominantWeight) -> Multiplicity {
        self.terms
            .binary_search_by(|(t, _)| term_order(&self.level_coeffs, t, w))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn contains(&self, w: &DominantWeight) -> bool {
        self.get(w) > 0
    }

    pub fn total_multiplicity(&self) -> u128 {
        self.terms.iter().map(|(_, m)| u128::from(*m)).sum()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.iter().all(|(_, m)| *m == 1)
    }
}

fn level_of(level_coeffs: &[i64], w: &DominantWeight) -> i64 {
    w.coords()
        .iter()
        .zip(level_coeffs)
        .map(|(&c, &h)| i64::from(c) * h)
        .sum()
}

/// Decreasing level, then decreasing coordinates.
fn term_order(level_coeffs: &[i64], a: &DominantWeight, b: &DominantWeight) -> Ordering {
    level_of(level_coeffs, b)
        .cmp(&level_of(level_coeffs, a))
        .then_with(|| b.coords().cmp(a.coords()))
}

/// Highest weight of the dual representation.
pub fn dual_weight(datum: &RootDatum, lambda: &DominantWeight) -> DominantWeight {
    match datum.family().letter() {
        Letter::A => {
            let mut c = lambda.coords().to_vec();
            c.reverse();
            DominantWeight::from_vec_unchecked(c)
        }
        Letter::B | Letter::C => lambda.clone(),
    }
}

pub fn is_selfdual(datum: &RootDatum, lambda: &DominantWeight) -> bool {
    dual_weight(datum, lambda) == *lambda
}

/// Class of a weight in the weight lattice modulo the root lattice, returned
/// as `(class, modulus)`.
pub fn center_class(datum: &RootDatum, w: &[Coord]) -> (i64, i64) {
    let r = datum.rank();
    match datum.family().letter() {
        Letter::A => {
            let m = r as i64 + 1;
            let s: i64 = w.iter().enumerate().map(|(i, &c)| (i as i64 + 1) * i64::from(c)).sum();
            (s.rem_euclid(m), m)
        }
        Letter::B => (i64::from(w[r - 1]).rem_euclid(2), 2),
        Letter::C => {
            let s: i64 = w.iter().step_by(2).map(|&c| i64::from(c)).sum();
            (s.rem_euclid(2), 2)
        }
    }
}

/// Picks the factor whose weights Klimyk iterates over: the one with smaller
/// dimension, ties broken towards the second argument.
pub(crate) fn order_factors<'a>(
    datum: &RootDatum,
    lambda: &'a DominantWeight,
    mu: &'a DominantWeight,
) -> Result<(&'a DominantWeight, &'a DominantWeight)> {
    let dl = weyl_dimension(datum, lambda)?;
    let dm = weyl_dimension(datum, mu)?;
    if dl < dm || (dl == dm && lambda > mu) {
        Ok((mu, lambda))
    } else {
        Ok((lambda, mu))
    }
}

/// Brauer–Klimyk step against a precomputed weight table of the small factor.
pub fn klimyk(datum: &RootDatum, big: &DominantWeight, small: &WeightTable) -> Result<Decomposition> {
    datum.check_weight(big.coords())?;
    let shift: Vec<Coord> = big.coords().iter().map(|c| c + 1).collect();
    let mut acc: FxHashMap<Vec<Coord>, i64> = FxHashMap::default();
    let mut buf = vec![0; datum.rank()];
    for (nu, &m) in small.entries() {
        for (b, (s, n)) in buf.iter_mut().zip(shift.iter().zip(nu.coords())) {
            *b = s + n;
        }
        if let Some(sign) = datum.dominate_shifted_in_place(&mut buf) {
            let m = i64::try_from(m).map_err(|_| Error::Overflow("klimyk"))?;
            let slot = match acc.get_mut(buf.as_slice()) {
                Some(slot) => slot,
                None => acc.entry(buf.clone()).or_insert(0),
            };
            *slot = slot.checked_add(i64::from(sign) * m).ok_or(Error::Overflow("klimyk"))?;
        }
    }
    let mut terms = Vec::with_capacity(acc.len());
    for (w, c) in acc {
        if c < 0 {
            return Err(Error::InvariantViolation(format!(
                "negative net multiplicity {c} at {} in Klimyk sum",
                Weight::new(w)
            )));
        }
        if c > 0 {
            terms.push((DominantWeight::from_vec_unchecked(w), c as Multiplicity));
        }
    }
    Ok(Decomposition::from_terms(datum, terms))
}

/// Checks dimension multiplicativity and conservation of the central class.
pub fn verify_decomposition(
    datum: &RootDatum,
    lambda: &DominantWeight,
    mu: &DominantWeight,
    d: &Decomposition,
) -> Result<()> {
    let expected = weyl_dimension(datum, lambda)?
        .checked_mul(weyl_dimension(datum, mu)?)
        .ok_or(Error::Overflow("dimension check"))?;
    let mut total: u128 = 0;
    for (w, m) in d.iter() {
        let t = weyl_dimension(datum, w)?
            .checked_mul(u128::from(m))
            .ok_or(Error::Overflow("dimension check"))?;
        total = total.checked_add(t).ok_or(Error::Overflow("dimension check"))?;
    }
    if total != expected {
        return Err(Error::InvariantViolation(format!(
            "dimension of {lambda} x {mu} is {expected}, decomposition sums to {total}"
        )));
    }
    let (cl, modulus) = center_class(datum, lambda.coords());
    let (cm, _) = center_class(datum, mu.coords());
    let want = (cl + cm) % modulus;
    if let Some((w, _)) = d.iter().find(|(w, _)| center_class(datum, w.coords()).0 != want) {
        return Err(Error::InvariantViolation(format!(
            "constituent {w} of {lambda} x {mu} breaks central character conservation"
        )));
    }
    Ok(())
}

pub fn tensor_decompose(datum: &RootDatum, lambda: &DominantWeight, mu: &DominantWeight) -> Result<Decomposition> {
    datum.check_weight(lambda.coords())?;
    datum.check_weight(mu.coords())?;
    let (big, small) = order_factors(datum, lambda, mu)?;
    let table = full_weight_system(datum, small)?;
    let d = klimyk(datum, big, &table)?;
    verify_decomposition(datum, lambda, mu, &d)?;
    Ok(d)
}

/// Character multiplication followed by peeling. Intended for small inputs.
pub fn tensor_decompose_oracle(
    datum: &RootDatum,
    lambda: &DominantWeight,
    mu: &DominantWeight,
) -> Result<Decomposition> {
    datum.check_weight(lambda.coords())?;
    datum.check_weight(mu.coords())?;
    let tl = full_weight_system(datum, lambda)?;
    let tm = full_weight_system(datum, mu)?;
    let (outer, inner) = if tl.len() <= tm.len() { (&tl, &tm) } else { (&tm, &tl) };

    let top = DominantWeight::from_vec_unchecked(lambda.coords().iter().zip(mu.coords()).map(|(a, b)| a + b).collect());
    let mut candidates: Vec<DominantWeight> = dominant_weights_below(datum, &top)
        .into_iter()
        .map(|(w, _)| w)
        .collect();
    let level_coeffs = datum.level_coeffs().to_vec();
    candidates.sort_by(|a, b| term_order(&level_coeffs, a, b));

    // coefficient of each dominant weight in ch(lambda) * ch(mu)
    let mut remaining: FxHashMap<DominantWeight, i128> = FxHashMap::default();
    for nu in &candidates {
        let mut c: i128 = 0;
        for (a, &ma) in outer.entries() {
            let diff = Weight::new(nu.coords().iter().zip(a.coords()).map(|(x, y)| x - y).collect());
            let mb = inner.get(&diff);
            if mb > 0 {
                c = c
                    .checked_add(i128::from(ma) * i128::from(mb))
                    .ok_or(Error::Overflow("oracle convolution"))?;
            }
        }
        if c != 0 {
            remaining.insert(nu.clone(), c);
        }
    }

    let mut terms = Vec::new();
    for nu in &candidates {
        let c = remaining.get(nu).copied().unwrap_or(0);
        if c < 0 {
            return Err(Error::InvariantViolation(format!("oracle peeled below zero at {nu}")));
        }
        if c == 0 {
            continue;
        }
        for (kappa, m) in dominant_weight_multiplicities(datum, nu)? {
            let slot = remaining.entry(kappa).or_insert(0);
            *slot -= c * i128::from(m);
        }
        let c = Multiplicity::try_from(c).map_err(|_| Error::Overflow("oracle"))?;
        terms.push((nu.clone(), c));
    }
    Ok(Decomposition::from_terms(datum, terms))
}

/// Multiplicity of the trivial representation in `l_1 x ... x l_k`, computed
/// as the multiplicity of `dual(l_k)` in `l_1 x ... x l_{k-1}`.
pub fn multiplicity_of_trivial(datum: &RootDatum, list: &[DominantWeight]) -> Result<Multiplicity> {
    multiplicity_of_trivial_with(datum, list, |a, b| tensor_decompose(datum, a, b))
}

pub(crate) fn multiplicity_of_trivial_with<F, D>(
    datum: &RootDatum,
    list: &[DominantWeight],
    mut decompose: F,
) -> Result<Multiplicity>
where
    F: FnMut(&DominantWeight, &DominantWeight) -> Result<D>,
    D: Borrow<Decomposition>,
{
    if list.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "multiplicity of the trivial needs at least two factors, got {}",
            list.len()
        )));
    }
    for w in list {
        datum.check_weight(w.coords())?;
    }
    let (last, init) = list.split_last().expect("len >= 2");
    let target = dual_weight(datum, last);
    if init.len() == 1 {
        return Ok(Multiplicity::from(init[0] == target));
    }
    // running multiset of highest weights of l_1 x ... x l_j
    let mut current: Vec<(DominantWeight, Multiplicity)> = vec![(init[0].clone(), 1)];
    for (j, next) in init.iter().enumerate().skip(1) {
        let final_step = j + 1 == init.len();
        let mut acc: FxHashMap<DominantWeight, Multiplicity> = FxHashMap::default();
        for (w, c) in &current {
            let d = decompose(w, next)?;
            let d: &Decomposition = d.borrow();
            if final_step {
                let m = d.get(&target);
                if m > 0 {
                    let t = m.checked_mul(*c).ok_or(Error::Overflow("multiplicity_of_trivial"))?;
                    let slot = acc.entry(target.clone()).or_insert(0);
                    *slot = slot.checked_add(t).ok_or(Error::Overflow("multiplicity_of_trivial"))?;
                }
            } else {
                for (v, m) in d.iter() {
                    let t = m.checked_mul(*c).ok_or(Error::Overflow("multiplicity_of_trivial"))?;
                    let slot = acc.entry(v.clone()).or_insert(0);
                    *slot = slot.checked_add(t).ok_or(Error::Overflow("multiplicity_of_trivial"))?;
                }
            }
        }
        current = acc.into_iter().collect();
    }
    Ok(current
        .into_iter()
        .find(|(w, _)| *w == target)
        .map(|(_, m)| m)
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Family;

    fn datum(letter: Letter, r: usize) -> RootDatum {
        RootDatum::new(Family::new(letter, r).unwrap()).unwrap()
    }

    fn dw(c: &[Coord]) -> DominantWeight {
        DominantWeight::new(c.to_vec()).unwrap()
    }

    fn terms(d: &Decomposition) -> Vec<(Vec<Coord>, Multiplicity)> {
        d.iter().map(|(w, m)| (w.coords().to_vec(), m)).collect()
    }

    #[test]
    fn spinor_squares() {
        let a3 = datum(Letter::A, 3);
        let d = tensor_decompose(&a3, &dw(&[0, 1, 0]), &dw(&[0, 1, 0])).unwrap();
        assert_eq!(
            terms(&d),
            vec![(vec![0, 2, 0], 1), (vec![1, 0, 1], 1), (vec![0, 0, 0], 1)]
        );

        let b2 = datum(Letter::B, 2);
        let d = tensor_decompose(&b2, &dw(&[0, 1]), &dw(&[0, 1])).unwrap();
        assert_eq!(terms(&d), vec![(vec![0, 2], 1), (vec![1, 0], 1), (vec![0, 0], 1)]);
        let b3 = datum(Letter::B, 3);
        let d = tensor_decompose(&b3, &dw(&[0, 0, 1]), &dw(&[0, 0, 1])).unwrap();
        assert_eq!(d.len(), 4);
        for w in [[1, 0, 0], [0, 1, 0], [0, 0, 2], [0, 0, 0]] {
            assert_eq!(d.get(&dw(&w)), 1);
        }
    }

    #[test]
    fn trivial_factor() {
        for d in [datum(Letter::A, 4), datum(Letter::C, 3)] {
            let mu = dw(&vec![2; d.rank()]);
            let out = tensor_decompose(&d, &DominantWeight::zero(d.rank()), &mu).unwrap();
            assert_eq!(terms(&out), vec![(mu.coords().to_vec(), 1)]);
        }
    }

    #[test]
    fn oracle_small_cases() {
        let a1 = datum(Letter::A, 1);
        let d = tensor_decompose_oracle(&a1, &dw(&[1]), &dw(&[1])).unwrap();
        assert_eq!(terms(&d), vec![(vec![2], 1), (vec![0], 1)]);

        let a2 = datum(Letter::A, 2);
        let d = tensor_decompose_oracle(&a2, &dw(&[1, 0]), &dw(&[0, 1])).unwrap();
        assert_eq!(terms(&d), vec![(vec![1, 1], 1), (vec![0, 0], 1)]);

        let a3 = datum(Letter::A, 3);
        let d = tensor_decompose_oracle(&a3, &dw(&[1, 0, 1]), &dw(&[1, 0, 1])).unwrap();
        assert_eq!(d.get(&dw(&[0, 0, 0])), 1);
        assert_eq!(d.get(&dw(&[1, 0, 1])), 2);
        assert_eq!(d, tensor_decompose(&a3, &dw(&[1, 0, 1]), &dw(&[1, 0, 1])).unwrap());
    }

    #[test]
    fn duals() {
        let a3 = datum(Letter::A, 3);
        assert_eq!(dual_weight(&a3, &dw(&[1, 2, 0])), dw(&[0, 2, 1]));
        assert_eq!(dual_weight(&a3, &dw(&[1, 0, 1])), dw(&[1, 0, 1]));
        let b2 = datum(Letter::B, 2);
        assert_eq!(dual_weight(&b2, &dw(&[3, 1])), dw(&[3, 1]));
    }

    #[test]
    fn trivial_multiplicities() {
        let a3 = datum(Letter::A, 3);
        assert_eq!(
            multiplicity_of_trivial(&a3, &[dw(&[1, 0, 0]), dw(&[0, 0, 1])]).unwrap(),
            1
        );
        assert_eq!(
            multiplicity_of_trivial(&a3, &[dw(&[1, 0, 0]), dw(&[1, 0, 0])]).unwrap(),
            0
        );
        let wedge = dw(&[0, 1, 0]);
        assert_eq!(
            multiplicity_of_trivial(&a3, &[wedge.clone(), wedge.clone(), wedge.clone()]).unwrap(),
            0
        );
        // four copies of the 6-dim rep: invariants of SO(6) in V^4 = 3
        assert_eq!(multiplicity_of_trivial(&a3, &vec![wedge; 4]).unwrap(), 3);
        let b2 = datum(Letter::B, 2);
        assert_eq!(
            multiplicity_of_trivial(&b2, &[dw(&[0, 1]), dw(&[0, 1]), dw(&[1, 0])]).unwrap(),
            1
        );
        assert!(multiplicity_of_trivial(&b2, &[dw(&[0, 1])]).is_err());
    }

    #[test]
    fn lookup_by_sort_key() {
        let a3 = datum(Letter::A, 3);
        let d = tensor_decompose(&a3, &dw(&[2, 1, 0]), &dw(&[1, 1, 3])).unwrap();
        for (w, m) in d.iter() {
            assert_eq!(d.get(w), m);
        }
        assert_eq!(d.get(&dw(&[9, 9, 9])), 0);
    }

    #[test]
    fn center_classes() {
        let a3 = datum(Letter::A, 3);
        assert_eq!(center_class(&a3, &[0, 1, 0]), (2, 4));
        let c3 = datum(Letter::C, 3);
        assert_eq!(center_class(&c3, &[1, 5, 1]), (0, 2));
        let b3 = datum(Letter::B, 3);
        assert_eq!(center_class(&b3, &[0, 0, 3]), (1, 2));
    }
}
