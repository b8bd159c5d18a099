//! Dimensions, weight multiplicities (Freudenthal) and Weyl orbits.

use std::collections::VecDeque;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, Result};
use crate::rootdata::{Coord, DominantWeight, RootDatum, Weight};

pub type Multiplicity = u64;

/// Weight multiplicities of one irreducible representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    highest: DominantWeight,
    /// Dominant weights with multiplicities, highest first.
    dominant: Vec<(DominantWeight, Multiplicity)>,
    entries: FxHashMap<Weight, Multiplicity>,
}

impl WeightTable {
    pub fn highest(&self) -> &DominantWeight {
        &self.highest
    }

    pub fn dominant(&self) -> &[(DominantWeight, Multiplicity)] {
        &self.dominant
    }

    pub fn entries(&self) -> &FxHashMap<Weight, Multiplicity> {
        &self.entries
    }

    pub fn get(&self, w: &Weight) -> Multiplicity {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all multiplicities, i.e. the dimension.
    pub fn total(&self) -> u128 {
        self.entries.values().map(|&m| u128::from(m)).sum()
    }
}

/// `prod_{alpha > 0} (hw + rho, alpha) / (rho, alpha)`.
pub fn weyl_dimension(datum: &RootDatum, hw: &DominantWeight) -> Result<u128> {
    datum.check_weight(hw.coords())?;
    let shifted: Vec<Coord> = hw.coords().iter().map(|c| c + 1).collect();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for beta in datum.positive_root_coords() {
        let top = datum.twice_pair_root(&shifted, beta) as u128;
        let bottom = datum.twice_pair_root(datum.rho().coords(), beta) as u128;
        num = num.checked_mul(top).ok_or(Error::Overflow("weyl_dimension"))?;
        den = den.checked_mul(bottom).ok_or(Error::Overflow("weyl_dimension"))?;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    if den != 1 {
        return Err(Error::InvariantViolation(format!("non-integral dimension for {hw}")));
    }
    Ok(num)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Dominant weights `mu <= hw` together with `hw - mu` in simple-root
/// coordinates, sorted by increasing depth then decreasing coordinates.
pub(crate) fn dominant_weights_below(datum: &RootDatum, hw: &DominantWeight) -> Vec<(DominantWeight, Vec<Coord>)> {
    // Every dominant mu < hw is reachable from hw through dominant weights by
    // subtracting single positive roots.
    let r = datum.rank();
    let mut found: FxHashMap<Vec<Coord>, Vec<Coord>> = FxHashMap::default();
    found.insert(hw.coords().to_vec(), vec![0; r]);
    let mut queue = VecDeque::from([hw.coords().to_vec()]);
    while let Some(mu) = queue.pop_front() {
        let depth = found[&mu].clone();
        for (root, coords) in datum.positive_roots().iter().zip(datum.positive_root_coords()) {
            let next: Vec<Coord> = mu.iter().zip(root.coords()).map(|(a, b)| a - b).collect();
            if next.iter().any(|&c| c < 0) || found.contains_key(&next) {
                continue;
            }
            let d: Vec<Coord> = depth.iter().zip(coords).map(|(a, b)| a + b).collect();
            found.insert(next.clone(), d);
            queue.push_back(next);
        }
    }
    let mut out: Vec<(DominantWeight, Vec<Coord>)> = found
        .into_iter()
        .map(|(w, d)| (DominantWeight::from_vec_unchecked(w), d))
        .collect();
    out.sort_by(|(wa, da), (wb, db)| {
        let ha: Coord = da.iter().sum();
        let hb: Coord = db.iter().sum();
        ha.cmp(&hb).then_with(|| wb.cmp(wa))
    });
    out
}

/// Freudenthal's recursion restricted to dominant weights.
pub fn dominant_weight_multiplicities(
    datum: &RootDatum,
    hw: &DominantWeight,
) -> Result<Vec<(DominantWeight, Multiplicity)>> {
    datum.check_weight(hw.coords())?;
    let levels = dominant_weights_below(datum, hw);
    let two_rho_plus_hw: Vec<Coord> = hw.coords().iter().map(|c| c + 2).collect();
    let mut mult: FxHashMap<Vec<Coord>, Multiplicity> = FxHashMap::default();
    let mut out = Vec::with_capacity(levels.len());
    let mut buf = vec![0; datum.rank()];

    for (mu, depth) in levels {
        if depth.iter().all(|&c| c == 0) {
            mult.insert(mu.coords().to_vec(), 1);
            out.push((mu, 1));
            continue;
        }
        // 2 (hw - mu, hw + mu + 2 rho)
        let sum: Vec<Coord> = two_rho_plus_hw.iter().zip(mu.coords()).map(|(a, b)| a + b).collect();
        let denom = i128::from(datum.twice_pair_root(&sum, &depth));

        let mut num: i128 = 0;
        for (root, coords) in datum.positive_roots().iter().zip(datum.positive_root_coords()) {
            let mut nu: Vec<Coord> = mu.coords().to_vec();
            loop {
                for (c, a) in nu.iter_mut().zip(root.coords()) {
                    *c += a;
                }
                buf.copy_from_slice(&nu);
                datum.dominate_in_place(&mut buf);
                let Some(&m) = mult.get(&buf) else { break };
                let pair = i128::from(datum.twice_pair_root(&nu, coords));
                num = pair
                    .checked_mul(i128::from(m))
                    .and_then(|t| num.checked_add(t))
                    .ok_or(Error::Overflow("freudenthal"))?;
            }
        }
        let twice = num.checked_mul(2).ok_or(Error::Overflow("freudenthal"))?;
        if denom <= 0 || twice % denom != 0 {
            return Err(Error::InvariantViolation(format!(
                "freudenthal division {twice}/{denom} at {mu} in {hw}"
            )));
        }
        let m = Multiplicity::try_from(twice / denom).map_err(|_| Error::Overflow("freudenthal"))?;
        if m == 0 {
            return Err(Error::InvariantViolation(format!("zero multiplicity at {mu} in {hw}")));
        }
        mult.insert(mu.coords().to_vec(), m);
        out.push((mu, m));
    }
    Ok(out)
}

/// The Weyl orbit of a dominant weight, sorted.
pub fn weyl_orbit(datum: &RootDatum, dw: &DominantWeight) -> Result<Vec<Weight>> {
    datum.check_weight(dw.coords())?;
    let mut orbit = orbit_coords(datum, dw.coords());
    orbit.sort();
    Ok(orbit.into_iter().map(Weight::new).collect())
}

fn orbit_coords(datum: &RootDatum, start: &[Coord]) -> Vec<Vec<Coord>> {
    let mut seen: FxHashSet<Vec<Coord>> = FxHashSet::default();
    seen.insert(start.to_vec());
    let mut out = vec![start.to_vec()];
    let mut idx = 0;
    while idx < out.len() {
        let w = out[idx].clone();
        idx += 1;
        for i in 0..w.len() {
            // Reflecting only along positive coordinates still reaches the
            // whole orbit, starting from the dominant element.
            if w[i] > 0 {
                let mut n = w.clone();
                datum.reflect_in_place(i, &mut n);
                if seen.insert(n.clone()) {
                    out.push(n);
                }
            }
        }
    }
    out
}

pub fn full_weight_system(datum: &RootDatum, hw: &DominantWeight) -> Result<WeightTable> {
    let dominant = dominant_weight_multiplicities(datum, hw)?;
    let mut entries = FxHashMap::default();
    for (mu, m) in &dominant {
        for w in orbit_coords(datum, mu.coords()) {
            entries.insert(Weight::new(w), *m);
        }
    }
    Ok(WeightTable {
        highest: hw.clone(),
        dominant,
        entries,
    })
}
