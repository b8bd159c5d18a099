//! Independent reference implementation for tests: root systems from their
//! orthonormal models, weight multiplicities from Kostant's formula summed over
//! the whole Weyl group, and tensor products by peeling the product character.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, VecDeque};

pub type Vector = Vec<i64>;

pub struct Oracle {
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates.
    pub positive: Vec<Vector>,
    /// Each element as the sequence of simple reflections applied, first to last.
    pub weyl: Vec<(Vec<usize>, i64)>,
    partition_memo: std::cell::RefCell<HashMap<(usize, Vector), u64>>,
    character_memo: std::cell::RefCell<HashMap<Vector, BTreeMap<Vector, u64>>>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Oracle {
    /// `letter` in {'A','B','C'}.
    pub fn new(letter: char, rank: usize) -> Self {
        let dim = if letter == 'A' { rank + 1 } else { rank };
        let unit = |i: usize| {
            let mut v = vec![0; dim];
            v[i] = 1;
            v
        };
        let diff = |i: usize, j: usize| -> Vector { unit(i).iter().zip(unit(j)).map(|(a, b)| a - b).collect() };
        let sum = |i: usize, j: usize| -> Vector { unit(i).iter().zip(unit(j)).map(|(a, b)| a + b).collect() };
        let mut simple: Vec<Vector> = (0..rank.min(dim - 1)).map(|i| diff(i, i + 1)).collect();
        let mut roots: Vec<Vector> = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                roots.push(diff(i, j));
            }
        }
        match letter {
            'A' => {}
            'B' => {
                simple.push(unit(rank - 1));
                for i in 0..dim {
                    roots.push(unit(i));
                    for j in i + 1..dim {
                        roots.push(sum(i, j));
                    }
                }
            }
            'C' => {
                simple.push(unit(rank - 1).iter().map(|x| 2 * x).collect());
                for i in 0..dim {
                    roots.push(unit(i).iter().map(|x| 2 * x).collect());
                    for j in i + 1..dim {
                        roots.push(sum(i, j));
                    }
                }
            }
            _ => panic!("unsupported letter {letter}"),
        }
        assert_eq!(simple.len(), rank);
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| 2 * dot(&simple[j], &simple[i]) / dot(&simple[i], &simple[i]))
                    .collect()
            })
            .collect();
        // simple-root coordinates by back substitution along the chain
        let c_last = if letter == 'C' { 2 } else { 1 };
        let positive: Vec<Vector> = roots
            .iter()
            .map(|v| {
                let mut x = vec![0; rank];
                let mut acc = 0;
                for k in 0..rank {
                    if letter != 'A' && k == rank - 1 {
                        x[k] = (v[k] + acc) / c_last;
                    } else {
                        acc += v[k];
                        x[k] = acc;
                    }
                }
                x
            })
            .collect();
        let mut o = Oracle {
            rank,
            cartan,
            positive,
            weyl: Vec::new(),
            partition_memo: Default::default(),
            character_memo: Default::default(),
        };
        for r in &o.positive {
            let f = o.root_to_fund(r);
            assert!(r.iter().all(|&c| c >= 0) && f.iter().any(|&c| c != 0), "bad root {r:?}");
        }
        o.weyl = o.weyl_group();
        o
    }

    pub fn root_to_fund(&self, x: &[i64]) -> Vector {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * x[j]).sum())
            .collect()
    }

    /// Simple-root coordinates of a weight in the root lattice.
    pub fn fund_to_root(&self, f: &[i64]) -> Option<Vector> {
        let n = self.rank;
        let mut m: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                let mut row: Vec<f64> = self.cartan[i].iter().map(|&c| c as f64).collect();
                row.push(f[i] as f64);
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n)
                .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
                .unwrap();
            m.swap(col, p);
            let pivot = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col {
                    let k = row[col] / pivot[col];
                    for (x, p) in row.iter_mut().zip(&pivot).skip(col) {
                        *x -= k * p;
                    }
                }
            }
        }
        let x: Vector = (0..n).map(|i| (m[i][n] / m[i][i]).round() as i64).collect();
        (self.root_to_fund(&x) == f).then_some(x)
    }

    pub fn reflect(&self, i: usize, w: &mut [i64]) {
        let c = w[i];
        for (k, slot) in w.iter_mut().enumerate() {
            *slot -= c * self.cartan[k][i];
        }
    }

    pub fn act(&self, word: &[usize], w: &[i64]) -> Vector {
        let mut v = w.to_vec();
        for &i in word {
            self.reflect(i, &mut v);
        }
        v
    }

    fn weyl_group(&self) -> Vec<(Vec<usize>, i64)> {
        let rho = vec![1; self.rank];
        let mut seen: HashMap<Vector, ()> = HashMap::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(rho.clone(), ());
        queue.push_back((rho, Vec::new()));
        while let Some((v, word)) = queue.pop_front() {
            let sign = if word.len() % 2 == 0 { 1 } else { -1 };
            out.push((word.clone(), sign));
            for i in 0..self.rank {
                let mut u = v.clone();
                self.reflect(i, &mut u);
                if seen.insert(u.clone(), ()).is_none() {
                    let mut w = word.clone();
                    w.push(i);
                    queue.push_back((u, w));
                }
            }
        }
        out
    }

    pub fn partition(&self, gamma: &[i64]) -> u64 {
        self.partition_from(0, gamma.to_vec())
    }

    fn partition_from(&self, k: usize, gamma: Vector) -> u64 {
        if gamma.iter().any(|&c| c < 0) {
            return 0;
        }
        if k == self.positive.len() {
            return u64::from(gamma.iter().all(|&c| c == 0));
        }
        if let Some(&v) = self.partition_memo.borrow().get(&(k, gamma.clone())) {
            return v;
        }
        let beta = self.positive[k].clone();
        let mut total = 0;
        let mut g = gamma.clone();
        while g.iter().all(|&c| c >= 0) {
            total += self.partition_from(k + 1, g.clone());
            for (x, b) in g.iter_mut().zip(&beta) {
                *x -= b;
            }
        }
        self.partition_memo.borrow_mut().insert((k, gamma), total);
        total
    }

    /// Root coordinates of `w(lambda + rho) - (lambda + rho)` for every `w`.
    fn shifts(&self, lambda: &[i64]) -> Vec<(Vector, i64)> {
        let lr: Vector = lambda.iter().map(|c| c + 1).collect();
        self.weyl
            .iter()
            .map(|(word, sign)| {
                let w = self.act(word, &lr);
                let d: Vector = w.iter().zip(&lr).map(|(a, b)| a - b).collect();
                (
                    self.fund_to_root(&d).expect("rho-shifted orbit stays in the coset"),
                    *sign,
                )
            })
            .collect()
    }

    /// Kostant's formula at `lambda - x`, `x` in simple-root coordinates.
    fn multiplicity_at(&self, shifts: &[(Vector, i64)], x: &[i64]) -> u64 {
        let mut acc: i64 = 0;
        for (y, sign) in shifts {
            let g: Vector = y.iter().zip(x).map(|(a, b)| a + b).collect();
            acc += sign * self.partition(&g) as i64;
        }
        assert!(acc >= 0, "negative Kostant sum");
        acc as u64
    }

    pub fn multiplicity(&self, lambda: &[i64], mu: &[i64]) -> u64 {
        let d: Vector = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        match self.fund_to_root(&d) {
            Some(x) if x.iter().all(|&c| c >= 0) => self.multiplicity_at(&self.shifts(lambda), &x),
            _ => 0,
        }
    }

    /// Every weight of the irreducible module with highest weight `lambda`.
    pub fn character(&self, lambda: &[i64]) -> BTreeMap<Vector, u64> {
        if let Some(c) = self.character_memo.borrow().get(lambda) {
            return c.clone();
        }
        let c = self.character_uncached(lambda);
        self.character_memo.borrow_mut().insert(lambda.to_vec(), c.clone());
        c
    }

    fn character_uncached(&self, lambda: &[i64]) -> BTreeMap<Vector, u64> {
        let shifts = self.shifts(lambda);
        let mut bound = vec![0; self.rank];
        for (word, _) in &self.weyl {
            let w = self.act(word, lambda);
            let d: Vector = lambda.iter().zip(&w).map(|(a, b)| a - b).collect();
            let x = self.fund_to_root(&d).expect("orbit stays in the coset");
            for (b, v) in bound.iter_mut().zip(x) {
                *b = (*b).max(v);
            }
        }
        let mut out = BTreeMap::new();
        let mut x = vec![0; self.rank];
        loop {
            let m = self.multiplicity_at(&shifts, &x);
            if m > 0 {
                let mu: Vector = lambda.iter().zip(self.root_to_fund(&x)).map(|(a, b)| a - b).collect();
                out.insert(mu, m);
            }
            let mut k = 0;
            loop {
                if k == self.rank {
                    return out;
                }
                x[k] += 1;
                if x[k] <= bound[k] {
                    break;
                }
                x[k] = 0;
                k += 1;
            }
        }
    }

    pub fn dimension(&self, lambda: &[i64]) -> u64 {
        self.character(lambda).values().sum()
    }

    /// Heights of the fundamental weights, scaled to integers.
    fn fundamental_heights(&self) -> Vector {
        let scale = 2 * (self.rank as i64 + 1);
        (0..self.rank)
            .map(|e| {
                let mut f = vec![0; self.rank];
                f[e] = scale;
                self.fund_to_root(&f)
                    .expect("scaled fundamental weight is in the root lattice")
                    .iter()
                    .sum()
            })
            .collect()
    }

    /// `lambda x mu` as highest weights with multiplicities.
    pub fn decompose(&self, lambda: &[i64], mu: &[i64]) -> BTreeMap<Vector, u64> {
        let a = self.character(lambda);
        let b = self.character(mu);
        let mut rest: HashMap<Vector, i64> = HashMap::new();
        for (x, mx) in &a {
            for (y, my) in &b {
                let s: Vector = x.iter().zip(y).map(|(p, q)| p + q).collect();
                *rest.entry(s).or_insert(0) += (mx * my) as i64;
            }
        }
        let heights = self.fundamental_heights();
        let mut out = BTreeMap::new();
        loop {
            rest.retain(|_, v| *v != 0);
            let Some(top) = rest
                .iter()
                .filter(|(w, _)| w.iter().all(|&c| c >= 0))
                .max_by_key(|(w, _)| (dot(w, &heights), (*w).clone()))
                .map(|(w, &c)| (w.clone(), c))
            else {
                assert!(rest.is_empty(), "leftover non-dominant weights");
                return out;
            };
            let (nu, c) = top;
            assert!(c > 0, "peeled below zero at {nu:?}");
            out.insert(nu.clone(), c as u64);
            for (w, m) in self.character(&nu) {
                *rest.entry(w).or_insert(0) -= c * m as i64;
            }
        }
    }
}

pub fn letter_of(f: selfdual_core::Family) -> char {
    match f.letter() {
        selfdual_core::Letter::A => 'A',
        selfdual_core::Letter::B => 'B',
        selfdual_core::Letter::C => 'C',
    }
}

pub fn to_vec(w: &selfdual_core::DominantWeight) -> Vector {
    w.coords().iter().map(|&c| i64::from(c)).collect()
}

/// All coordinate vectors of length `rank` with entries `<= max`.
pub fn box_weights(rank: usize, max: i32) -> Vec<selfdual_core::DominantWeight> {
    let base = (max + 1) as usize;
    (0..base.pow(rank as u32))
        .map(|mut i| {
            let mut c = vec![0; rank];
            for slot in c.iter_mut().rev() {
                *slot = (i % base) as i32;
                i /= base;
            }
            selfdual_core::DominantWeight::new(c).unwrap()
        })
        .collect()
}
