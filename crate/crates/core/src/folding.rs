//! The two diagram-automorphism correspondences
//!
//! * EVEN: selfdual `SL_2n` (`A_{2n-1}`) <-> `Spin_2n+1` (`B_n`),
//!   `[a_1..a_n] <-> [a_1..a_{n-1}, a_n, a_{n-1}..a_1]`
//! * ODD: selfdual `SL_2n+1` (`A_{2n}`) <-> `Sp_2n` (`C_n`),
//!   `[a_1..a_n] <-> [a_1..a_n, a_n..a_1]`
//!
//! A fundamental weight of the folded group is the sum of the fundamental
//! weights in the corresponding orbit of the diagram involution, which is
//! what makes these plain coordinate maps.

use std::fmt;
use std::ops::Mul;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::characters::full_weight_system;
use crate::error::{Error, Result};
use crate::rootdata::{Coord, DominantWeight, Family, RootDatum, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    /// `(SL_2n, Spin_2n+1)`
    Even,
    /// `(SL_2n+1, Sp_2n)`
    Odd,
}

impl std::str::FromStr for PairKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "even" => Ok(PairKind::Even),
            "odd" => Ok(PairKind::Odd),
            other => Err(Error::InvalidArgument(format!("unknown pair kind {other:?}"))),
        }
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::Even => "even",
            PairKind::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pair {
    kind: PairKind,
    n: usize,
}

impl Pair {
    pub fn new(kind: PairKind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("{kind} pair needs n >= 2, got {n}")));
        }
        Ok(Pair { kind, n })
    }

    pub fn even(n: usize) -> Result<Self> {
        Self::new(PairKind::Even, n)
    }

    pub fn odd(n: usize) -> Result<Self> {
        Self::new(PairKind::Odd, n)
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sl_family(&self) -> Family {
        let rank = match self.kind {
            PairKind::Even => 2 * self.n - 1,
            PairKind::Odd => 2 * self.n,
        };
        Family::a(rank).expect("rank >= 3")
    }

    pub fn folded_family(&self) -> Family {
        match self.kind {
            PairKind::Even => Family::b(self.n),
            PairKind::Odd => Family::c(self.n),
        }
        .expect("n >= 2")
    }

    pub fn fold(&self, a: &DominantWeight) -> Result<DominantWeight> {
        check_len(a.coords(), self.n)?;
        Ok(match self.kind {
            PairKind::Even => fold_even(a),
            PairKind::Odd => fold_odd(a),
        })
    }

    pub fn unfold(&self, v: &DominantWeight) -> Result<DominantWeight> {
        check_len(v.coords(), self.sl_family().rank())?;
        match self.kind {
            PairKind::Even => unfold_even(v),
            PairKind::Odd => unfold_odd(v),
        }
    }

    pub fn central_char_sl(&self, v: &DominantWeight) -> Result<CentralCharacter> {
        check_len(v.coords(), self.sl_family().rank())?;
        match self.kind {
            PairKind::Even => central_char_sl_even(v),
            PairKind::Odd => central_char_sl_odd(v),
        }
    }

    pub fn central_char_folded(&self, a: &DominantWeight) -> Result<CentralCharacter> {
        check_len(a.coords(), self.n)?;
        Ok(match self.kind {
            PairKind::Even => central_char_spin(a),
            PairKind::Odd => central_char_sp(a),
        })
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} ({}-{})",
            self.kind,
            self.n,
            self.sl_family(),
            self.folded_family()
        )
    }
}

fn check_len(c: &[Coord], expected: usize) -> Result<()> {
    if c.len() != expected {
        return Err(Error::RankMismatch {
            expected,
            found: c.len(),
        });
    }
    Ok(())
}

fn not_selfdual(v: &DominantWeight, context: &str) -> Error {
    Error::NotSelfdual {
        weight: v.to_string(),
        context: context.to_string(),
    }
}

/// `[a_1..a_n] -> [a_1..a_{n-1}, a_n, a_{n-1}..a_1]`
pub fn fold_even(a: &DominantWeight) -> DominantWeight {
    let c = a.coords();
    let mut out = c.to_vec();
    out.extend(c[..c.len() - 1].iter().rev());
    DominantWeight::from_vec_unchecked(out)
}

pub fn unfold_even(v: &DominantWeight) -> Result<DominantWeight> {
    let c = v.coords();
    if c.len().is_multiple_of(2) {
        return Err(not_selfdual(v, "SL_2n (rank must be odd)"));
    }
    if !c.iter().eq(c.iter().rev()) {
        return Err(not_selfdual(v, "SL_2n"));
    }
    Ok(DominantWeight::from_vec_unchecked(c[..c.len().div_ceil(2)].to_vec()))
}

/// `[a_1..a_n] -> [a_1..a_n, a_n..a_1]`
pub fn fold_odd(a: &DominantWeight) -> DominantWeight {
    let c = a.coords();
    let mut out = c.to_vec();
    out.extend(c.iter().rev());
    DominantWeight::from_vec_unchecked(out)
}

pub fn unfold_odd(v: &DominantWeight) -> Result<DominantWeight> {
    let c = v.coords();
    if c.len() % 2 == 1 {
        return Err(not_selfdual(v, "SL_2n+1 (rank must be even)"));
    }
    if !c.iter().eq(c.iter().rev()) {
        return Err(not_selfdual(v, "SL_2n+1"));
    }
    Ok(DominantWeight::from_vec_unchecked(c[..c.len() / 2].to_vec()))
}

/// An element of `Z/2`: 0 trivial, 1 nontrivial. Multiplication of
/// characters is addition mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CentralCharacter(u8);

impl CentralCharacter {
    pub const TRIVIAL: CentralCharacter = CentralCharacter(0);
    pub const NONTRIVIAL: CentralCharacter = CentralCharacter(1);

    pub fn from_parity(x: i64) -> Self {
        CentralCharacter(x.rem_euclid(2) as u8)
    }

    pub fn is_trivial(self) -> bool {
        self.0 == 0
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl Mul for CentralCharacter {
    type Output = CentralCharacter;

    fn mul(self, rhs: Self) -> Self {
        CentralCharacter((self.0 + rhs.0) % 2)
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_trivial() { "trivial" } else { "nontrivial" })
    }
}

/// Selfdual `[.., a_n, ..]` of `SL_2n`: trivial iff the middle coordinate is even.
pub fn central_char_sl_even(v: &DominantWeight) -> Result<CentralCharacter> {
    let a = unfold_even(v)?;
    Ok(CentralCharacter::from_parity(a.coords()[a.rank() - 1].into()))
}

/// `Spin_2n+1`: trivial iff `a_n` is even.
pub fn central_char_spin(a: &DominantWeight) -> CentralCharacter {
    CentralCharacter::from_parity(a.coords()[a.rank() - 1].into())
}

/// `Sp_2n`: trivial iff `a_1 + a_3 + a_5 + ...` is even.
pub fn central_char_sp(a: &DominantWeight) -> CentralCharacter {
    CentralCharacter::from_parity(a.coords().iter().step_by(2).map(|&c| i64::from(c)).sum())
}

/// Selfdual representations of `SL_2n+1` always have trivial central character.
pub fn central_char_sl_odd(v: &DominantWeight) -> Result<CentralCharacter> {
    unfold_odd(v)?;
    Ok(CentralCharacter::TRIVIAL)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedCharacterReport {
    pub n: usize,
    /// Number of torus eigencharacters of `Lambda^n(C^2n)` preserved by the
    /// twisting map; each contributes +1 to the twisted trace.
    pub fixed_count: u64,
    /// Each fixed eigencharacter is `chi_I * eta_{E-I}`; listed by `I` (1-based).
    pub fixed_characters: Vec<Vec<usize>>,
    /// Images in the folded torus, fundamental coordinates of `B_n`.
    pub folded_weights: Vec<Weight>,
    pub matches_spin_weights: bool,
}

/// Twisted trace on `Lambda^n(C^2n)` for the involution
/// `g -> J g^{-t} J^{-1}`, compared with the spin representation of
/// `Spin_2n+1`.
pub fn twisted_spin_character(n: usize) -> Result<TwistedCharacterReport> {
    if n == 0 || n > 15 {
        return Err(Error::InvalidArgument(format!(
            "twisted character supports 1 <= n <= 15, got {n}"
        )));
    }
    let dim = 2 * n;
    let mut fixed_characters = Vec::new();
    let mut folded_weights = Vec::new();
    for mask in 0u32..(1 << dim) {
        if mask.count_ones() as usize != n {
            continue;
        }
        // torus character of e_S as an exponent vector on the diagonal of SL_2n
        let x: Vec<i64> = (0..dim).map(|i| i64::from((mask >> i) & 1)).collect();
        // psi sends the chi-eigenspace to the (chi^{-1})^{w_0}-eigenspace
        let y: Vec<i64> = (0..dim).map(|i| -x[dim - 1 - i]).collect();
        // characters of the SL torus are exponent vectors modulo (1, ..., 1)
        let shift = y[0] - x[0];
        if !(0..dim).all(|i| y[i] - x[i] == shift) {
            continue;
        }
        let subset: Vec<usize> = (0..n).filter(|&i| x[i] == 1).map(|i| i + 1).collect();
        fixed_characters.push(subset);
        // restriction to the sigma-coinvariant torus: twice the orthogonal
        // coordinates, u_i = x_i - x_{2n+1-i} in {+1, -1}
        let u: Vec<i64> = (0..n).map(|i| x[i] - x[dim - 1 - i]).collect();
        let mut a: Vec<Coord> = (0..n - 1).map(|i| ((u[i] - u[i + 1]) / 2) as Coord).collect();
        a.push(u[n - 1] as Coord);
        folded_weights.push(Weight::new(a));
    }

    // Spin_3 = SL_2, so n = 1 compares against the defining rep of A_1.
    let (family, spin) = if n == 1 {
        (Family::a(1)?, DominantWeight::fundamental(1, 0))
    } else {
        (Family::b(n)?, DominantWeight::fundamental(n, n - 1))
    };
    let datum = RootDatum::new(family)?;
    let table = full_weight_system(&datum, &spin)?;
    let mut image: FxHashMap<Weight, u64> = FxHashMap::default();
    for w in &folded_weights {
        *image.entry(w.clone()).or_insert(0) += 1;
    }
    let matches_spin_weights = image.len() == table.len() && image.iter().all(|(w, &m)| table.get(w) == m);

    Ok(TwistedCharacterReport {
        n,
        fixed_count: fixed_characters.len() as u64,
        fixed_characters,
        folded_weights,
        matches_spin_weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::center_class;

    fn dw(c: &[Coord]) -> DominantWeight {
        DominantWeight::new(c.to_vec()).unwrap()
    }

    #[test]
    fn folding_examples() {
        assert_eq!(fold_even(&dw(&[0, 1])), dw(&[0, 1, 0]));
        assert_eq!(fold_even(&dw(&[1, 0, 0])), dw(&[1, 0, 0, 0, 1]));
        assert_eq!(fold_even(&dw(&[0, 0, 0])), dw(&[0, 0, 0, 0, 0]));
        assert_eq!(unfold_even(&dw(&[1, 2, 1])).unwrap(), dw(&[1, 2]));
        assert!(matches!(unfold_even(&dw(&[1, 0, 0])), Err(Error::NotSelfdual { .. })));
        assert_eq!(unfold_even(&dw(&[8, 0, 8])).unwrap(), dw(&[8, 0]));

        assert_eq!(fold_odd(&dw(&[0, 1])), dw(&[0, 1, 1, 0]));
        assert_eq!(fold_odd(&dw(&[5, 9])), dw(&[5, 9, 9, 5]));
        assert_eq!(fold_odd(&dw(&[0, 0])), dw(&[0, 0, 0, 0]));
        assert_eq!(unfold_odd(&dw(&[0, 1, 1, 0])).unwrap(), dw(&[0, 1]));
        assert_eq!(unfold_odd(&dw(&[2, 4, 4, 2])).unwrap(), dw(&[2, 4]));
        assert!(unfold_odd(&dw(&[1, 2, 3, 2, 1])).is_err());
        let pair = Pair::odd(2).unwrap();
        assert_eq!(
            pair.unfold(&dw(&[1, 2, 3, 2, 1])),
            Err(Error::RankMismatch { expected: 4, found: 5 })
        );
        assert!(matches!(
            pair.unfold(&dw(&[1, 2, 3, 1])),
            Err(Error::NotSelfdual { .. })
        ));
        assert_eq!(
            Pair::even(3).unwrap().fold(&dw(&[8, 7, 0])).unwrap(),
            dw(&[8, 7, 0, 7, 8])
        );
    }

    #[test]
    fn pair_validation() {
        assert!(Pair::even(1).is_err());
        let p = Pair::even(3).unwrap();
        assert_eq!(p.sl_family(), Family::a(5).unwrap());
        assert_eq!(p.folded_family(), Family::b(3).unwrap());
        let q = Pair::odd(2).unwrap();
        assert_eq!(q.sl_family(), Family::a(4).unwrap());
        assert_eq!(q.folded_family(), Family::c(2).unwrap());
    }

    #[test]
    fn fold_unfold_bijection() {
        for n in 2..=3usize {
            let mut count = 0;
            for code in 0..4usize.pow(n as u32) {
                let a = dw(&(0..n).map(|i| ((code >> (2 * i)) & 3) as Coord).collect::<Vec<_>>());
                for kind in [PairKind::Even, PairKind::Odd] {
                    let p = Pair::new(kind, n).unwrap();
                    let v = p.fold(&a).unwrap();
                    assert_eq!(p.unfold(&v).unwrap(), a);
                    assert_eq!(v.height(), a.height());
                }
                count += 1;
            }
            // every palindrome with coordinates <= 3 is hit exactly once
            let sl_rank = 2 * n - 1;
            let palindromes = (0..4usize.pow(sl_rank as u32))
                .filter(|code| {
                    let c: Vec<usize> = (0..sl_rank).map(|i| (code >> (2 * i)) & 3).collect();
                    c.iter().eq(c.iter().rev())
                })
                .count();
            assert_eq!(palindromes, count);
        }
    }

    #[test]
    fn central_characters() {
        assert_eq!(
            central_char_sl_even(&dw(&[0, 1, 0])).unwrap(),
            CentralCharacter::NONTRIVIAL
        );
        assert_eq!(
            central_char_sl_even(&dw(&[1, 0, 1])).unwrap(),
            CentralCharacter::TRIVIAL
        );
        assert_eq!(
            central_char_sl_even(&dw(&[0, 0, 0])).unwrap(),
            CentralCharacter::TRIVIAL
        );
        assert!(central_char_sl_even(&dw(&[0, 1, 1])).is_err());
        assert_eq!(central_char_spin(&dw(&[0, 1])), CentralCharacter::NONTRIVIAL);
        assert_eq!(central_char_spin(&dw(&[2, 2])), CentralCharacter::TRIVIAL);
        assert_eq!(central_char_sp(&dw(&[1, 0])), CentralCharacter::NONTRIVIAL);
        assert_eq!(central_char_sp(&dw(&[2, 7])), CentralCharacter::TRIVIAL);
        assert_eq!(central_char_sp(&dw(&[0, 0])), CentralCharacter::TRIVIAL);
        assert_eq!(
            central_char_sl_odd(&dw(&[0, 1, 1, 0])).unwrap(),
            CentralCharacter::TRIVIAL
        );
        assert_eq!(
            central_char_sl_odd(&dw(&[5, 9, 9, 5])).unwrap(),
            CentralCharacter::TRIVIAL
        );
        assert_eq!(
            CentralCharacter::NONTRIVIAL * CentralCharacter::NONTRIVIAL,
            CentralCharacter::TRIVIAL
        );
    }

    /// The parity formulas agree with the class of the weight modulo the root
    /// lattice, and the EVEN correspondence preserves the central character.
    #[test]
    fn central_characters_match_lattice_classes() {
        for n in 2..=3usize {
            let even = Pair::even(n).unwrap();
            let odd = Pair::odd(n).unwrap();
            let a_even = RootDatum::new(even.sl_family()).unwrap();
            let a_odd = RootDatum::new(odd.sl_family()).unwrap();
            let b = RootDatum::new(even.folded_family()).unwrap();
            let c = RootDatum::new(odd.folded_family()).unwrap();
            for code in 0..4usize.pow(n as u32) {
                let a = dw(&(0..n).map(|i| ((code >> (2 * i)) & 3) as Coord).collect::<Vec<_>>());
                let v = even.fold(&a).unwrap();
                let chi = central_char_sl_even(&v).unwrap();
                assert_eq!(chi, central_char_spin(&a));
                let (class, m) = center_class(&a_even, v.coords());
                assert!(class == 0 || 2 * class == m, "order <= 2");
                assert_eq!(chi.is_trivial(), class == 0);
                assert_eq!(central_char_spin(&a).is_trivial(), center_class(&b, a.coords()).0 == 0);

                let w = odd.fold(&a).unwrap();
                assert_eq!(center_class(&a_odd, w.coords()).0, 0);
                assert_eq!(central_char_sp(&a).is_trivial(), center_class(&c, a.coords()).0 == 0);
            }
        }
    }

    #[test]
    fn twisted_character_counts() {
        for n in 1..=6 {
            let r = twisted_spin_character(n).unwrap();
            assert_eq!(r.fixed_count, 1 << n, "n={n}");
            assert_eq!(r.fixed_characters.len(), 1 << n);
            if n <= 5 {
                assert!(r.matches_spin_weights, "n={n}");
            }
        }
        let r = twisted_spin_character(2).unwrap();
        let mut subsets = r.fixed_characters.clone();
        subsets.sort();
        assert_eq!(subsets, vec![vec![], vec![1], vec![1, 2], vec![2]]);
        assert!(twisted_spin_character(0).is_err());
    }
}
