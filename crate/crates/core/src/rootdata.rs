//! Root data for the classical families A, B and C (Bourbaki numbering).
//!
//! All weights are stored in the fundamental-weight basis. The Cartan matrix
//! follows `C[i][j] = <alpha_j, alpha_i^vee>`, so the simple root `alpha_i`
//! in fundamental coordinates is column `i` of `C`. The invariant form is
//! normalized so that long roots have squared length 2.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coord = i32;
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Letter::A => "A",
            Letter::B => "B",
            Letter::C => "C",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Letter::A),
            "B" | "b" => Ok(Letter::B),
            "C" | "c" => Ok(Letter::C),
            other => Err(Error::InvalidArgument(format!("unknown family letter {other:?}"))),
        }
    }
}

/// A simple root system type: letter plus rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Family {
    letter: Letter,
    rank: usize,
}

impl Family {
    pub fn new(letter: Letter, rank: usize) -> Result<Self> {
        let min = match letter {
            Letter::A => 1,
            Letter::B | Letter::C => 2,
        };
        if rank < min {
            return Err(Error::InvalidRank { letter, rank });
        }
        Ok(Family { letter, rank })
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Letter::A, rank)
    }

    pub fn b(rank: usize) -> Result<Self> {
        Self::new(Letter::B, rank)
    }

    pub fn c(rank: usize) -> Result<Self> {
        Self::new(Letter::C, rank)
    }

    pub fn letter(&self) -> Letter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_root_count(&self) -> usize {
        let r = self.rank;
        match self.letter {
            Letter::A => r * (r + 1) / 2,
            Letter::B | Letter::C => r * r,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

fn write_bracket(f: &mut fmt::Formatter<'_>, coords: &[Coord]) -> fmt::Result {
    f.write_str("[")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str("]")
}

/// An arbitrary lattice point in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<Coord>);

impl Weight {
    pub fn new(coords: Vec<Coord>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[Coord] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracket(f, &self.0)
    }
}

/// A highest weight: every fundamental coordinate is non-negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Coord>", into = "Vec<Coord>")]
pub struct DominantWeight(Vec<Coord>);

impl DominantWeight {
    pub fn new(coords: Vec<Coord>) -> Result<Self> {
        if let Some((position, &value)) = coords.iter().enumerate().find(|(_, &c)| c < 0) {
            return Err(Error::NegativeCoordinate {
                position,
                value: value.into(),
            });
        }
        Ok(DominantWeight(coords))
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight(vec![0; rank])
    }

    /// The `i`-th fundamental weight (0-based) of the given rank.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        DominantWeight(c)
    }

    pub fn coords(&self) -> &[Coord] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Maximum coordinate.
    pub fn height(&self) -> Coord {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn to_weight(&self) -> Weight {
        Weight(self.0.clone())
    }

    pub fn into_inner(self) -> Vec<Coord> {
        self.0
    }

    pub(crate) fn from_vec_unchecked(coords: Vec<Coord>) -> Self {
        debug_assert!(coords.iter().all(|&c| c >= 0));
        DominantWeight(coords)
    }
}

impl TryFrom<Vec<Coord>> for DominantWeight {
    type Error = Error;

    fn try_from(v: Vec<Coord>) -> Result<Self> {
        DominantWeight::new(v)
    }
}

impl TryFrom<Weight> for DominantWeight {
    type Error = Error;

    fn try_from(w: Weight) -> Result<Self> {
        DominantWeight::new(w.0)
    }
}

impl From<DominantWeight> for Vec<Coord> {
    fn from(d: DominantWeight) -> Self {
        d.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracket(f, &self.0)
    }
}

/// Sign of a Weyl group element, `(-1)^length`.
pub type Sign = i32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    family: Family,
    cartan: Vec<Vec<Coord>>,
    /// Simple roots in fundamental coordinates (columns of the Cartan matrix).
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    /// Positive roots in simple-root coordinates, parallel to `positive_roots`.
    positive_root_coords: Vec<Vec<Coord>>,
    rho: Weight,
    form_diag: Vec<Rational>,
    /// `2 d_i`, always 1 or 2.
    twice_diag: Vec<i64>,
    gram: Vec<Vec<Rational>>,
    cartan_inverse: Vec<Vec<Rational>>,
    level_coeffs: Vec<i64>,
}

impl RootDatum {
    pub fn new(family: Family) -> Result<Self> {
        let family = Family::new(family.letter, family.rank)?;
        let r = family.rank;
        let mut cartan = vec![vec![0; r]; r];
        for i in 0..r {
            cartan[i][i] = 2;
            if i + 1 < r {
                cartan[i][i + 1] = -1;
                cartan[i + 1][i] = -1;
            }
        }
        let half = Rational::new(1, 2);
        let form_diag: Vec<Rational> = match family.letter {
            Letter::A => vec![Rational::one(); r],
            Letter::B => {
                cartan[r - 1][r - 2] = -2;
                (0..r)
                    .map(|i| if i + 1 == r { half } else { Rational::one() })
                    .collect()
            }
            Letter::C => {
                cartan[r - 2][r - 1] = -2;
                (0..r)
                    .map(|i| if i + 1 == r { Rational::one() } else { half })
                    .collect()
            }
        };
        let twice_diag = form_diag.iter().map(|d| (d * 2).to_integer()).collect();

        let simple_roots = (0..r).map(|i| Weight((0..r).map(|j| cartan[j][i]).collect())).collect();

        let positive_root_coords = positive_roots_in_simple_coords(&cartan);
        let positive_roots = positive_root_coords
            .iter()
            .map(|b| Weight((0..r).map(|j| (0..r).map(|k| b[k] * cartan[j][k]).sum()).collect()))
            .collect();

        let cartan_inverse = invert(&cartan);
        let gram = (0..r)
            .map(|i| (0..r).map(|j| form_diag[i] * cartan_inverse[i][j]).collect())
            .collect();

        // ht(varpi_i) = sum_j Cinv[j][i], scaled to integers.
        let heights: Vec<Rational> = (0..r)
            .map(|i| (0..r).fold(Rational::zero(), |acc, j| acc + cartan_inverse[j][i]))
            .collect();
        let scale = heights.iter().fold(1i64, |acc, h| lcm(acc, *h.denom()));
        let level_coeffs = heights.iter().map(|h| (h * scale).to_integer()).collect();

        Ok(RootDatum {
            family,
            cartan,
            simple_roots,
            positive_roots,
            positive_root_coords,
            rho: Weight(vec![1; r]),
            form_diag,
            twice_diag,
            gram,
            cartan_inverse,
            level_coeffs,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.family.rank
    }

    pub fn cartan(&self) -> &[Vec<Coord>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn positive_root_coords(&self) -> &[Vec<Coord>] {
        &self.positive_root_coords
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn form_diag(&self) -> &[Rational] {
        &self.form_diag
    }

    /// Gram matrix of the invariant form on fundamental weights.
    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn cartan_inverse(&self) -> &[Vec<Rational>] {
        &self.cartan_inverse
    }

    pub fn check_weight(&self, w: &[Coord]) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: w.len(),
            });
        }
        Ok(())
    }

    pub fn dominant(&self, coords: Vec<Coord>) -> Result<DominantWeight> {
        self.check_weight(&coords)?;
        DominantWeight::new(coords)
    }

    /// `s_i(w) = w - w_i alpha_i`, with `i` 0-based.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Result<Weight> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        self.check_weight(&w.0)?;
        let mut out = w.0.clone();
        self.reflect_in_place(i, &mut out);
        Ok(Weight(out))
    }

    #[inline]
    pub(crate) fn reflect_in_place(&self, i: usize, w: &mut [Coord]) {
        let wi = w[i];
        if wi != 0 {
            for (j, c) in w.iter_mut().enumerate() {
                *c -= wi * self.cartan[j][i];
            }
        }
    }

    /// Moves `w` into the dominant chamber in place and returns the parity of
    /// the reflections used.
    pub(crate) fn dominate_in_place(&self, w: &mut [Coord]) -> Sign {
        let mut sign = 1;
        while let Some(i) = w.iter().position(|&c| c < 0) {
            self.reflect_in_place(i, w);
            sign = -sign;
        }
        sign
    }

    /// Interprets `w` as `mu + rho`. Returns `None` when `w` is fixed by a
    /// reflection; otherwise the dominant translate minus `rho` and the sign of
    /// the Weyl element that produced it.
    pub(crate) fn dominate_shifted_in_place(&self, w: &mut [Coord]) -> Option<Sign> {
        let mut sign = 1;
        loop {
            let mut negative = None;
            for (i, &c) in w.iter().enumerate() {
                if c == 0 {
                    return None;
                }
                if c < 0 && negative.is_none() {
                    negative = Some(i);
                }
            }
            match negative {
                Some(i) => {
                    self.reflect_in_place(i, w);
                    sign = -sign;
                }
                None => break,
            }
        }
        for c in w.iter_mut() {
            *c -= 1;
        }
        Some(sign)
    }

    pub fn make_dominant(&self, w: &Weight) -> DominantWeight {
        let mut c = w.0.clone();
        self.dominate_in_place(&mut c);
        DominantWeight(c)
    }

    pub fn make_dominant_shifted(&self, w: &Weight) -> Option<(DominantWeight, Sign)> {
        let mut c = w.0.clone();
        let sign = self.dominate_shifted_in_place(&mut c)?;
        Some((DominantWeight(c), sign))
    }

    pub fn inner_product(&self, v: &Weight, w: &Weight) -> Rational {
        let r = self.rank();
        let mut acc = Rational::zero();
        for i in 0..r {
            if v.0[i] == 0 {
                continue;
            }
            for j in 0..r {
                if w.0[j] != 0 {
                    acc += self.gram[i][j] * i64::from(v.0[i]) * i64::from(w.0[j]);
                }
            }
        }
        acc
    }

    /// `2 (w, beta)` for `beta` given in simple-root coordinates. Always an integer.
    #[inline]
    pub(crate) fn twice_pair_root(&self, w: &[Coord], beta: &[Coord]) -> i64 {
        let mut acc = 0i64;
        for k in 0..w.len() {
            acc += i64::from(beta[k]) * self.twice_diag[k] * i64::from(w[k]);
        }
        acc
    }

    /// Height scaled to an integer; strictly decreasing along `w - alpha_i`.
    pub fn level(&self, w: &[Coord]) -> i64 {
        w.iter().zip(&self.level_coeffs).map(|(&c, &h)| i64::from(c) * h).sum()
    }

    pub(crate) fn level_coeffs(&self) -> &[i64] {
        &self.level_coeffs
    }
}

fn positive_roots_in_simple_coords(cartan: &[Vec<Coord>]) -> Vec<Vec<Coord>> {
    let r = cartan.len();
    let mut roots: Vec<Vec<Coord>> = (0..r)
        .map(|i| {
            let mut e = vec![0; r];
            e[i] = 1;
            e
        })
        .collect();
    let mut seen: FxHashSet<Vec<Coord>> = roots.iter().cloned().collect();
    let mut idx = 0;
    while idx < roots.len() {
        let beta = roots[idx].clone();
        idx += 1;
        for i in 0..r {
            let is_simple_i = beta.iter().enumerate().all(|(k, &c)| c == if k == i { 1 } else { 0 });
            if is_simple_i {
                continue;
            }
            // <beta, alpha_i^vee>
            let pairing: Coord = (0..r).map(|k| beta[k] * cartan[i][k]).sum();
            let mut p = 0;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if seen.contains(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            if p - pairing > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if seen.insert(up.clone()) {
                    roots.push(up);
                }
            }
        }
    }
    roots.sort_by_key(|b| (b.iter().sum::<Coord>(), std::cmp::Reverse(b.clone())));
    roots
}

fn invert(m: &[Vec<Coord>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let f = a[row][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[row][j] -= f * ac;
                    inv[row][j] -= f * ic;
                }
            }
        }
    }
    inv
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}
