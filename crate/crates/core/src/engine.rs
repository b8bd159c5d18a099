//! Shared, thread-safe caches for root data, weight tables and
//! decompositions.
//!
//! Entries are inserted only after they are fully built, so concurrent
//! readers never see partial tables. Two workers racing on the same key both
//! compute the (identical) value; the second insert is a no-op in effect.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use lru::LruCache;
use parking_lot::Mutex;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::characters::{full_weight_system, Multiplicity, WeightTable};
use crate::error::Result;
use crate::exec::ExecMode;
use crate::rootdata::{DominantWeight, Family, RootDatum};
use crate::tensor::{self, Decomposition};

pub const DEFAULT_CACHE_CAPACITY: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DecompositionKey {
    pub family: Family,
    pub lambda: DominantWeight,
    pub mu: DominantWeight,
}

impl DecompositionKey {
    /// Tensor products commute, so keys are stored with `lambda <= mu`.
    pub fn new(family: Family, a: &DominantWeight, b: &DominantWeight) -> Self {
        let (lambda, mu) = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        DecompositionKey { family, lambda, mu }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheStats {
    pub table_hits: u64,
    pub table_misses: u64,
    pub decomposition_hits: u64,
    pub decomposition_misses: u64,
}

pub struct Engine {
    mode: ExecMode,
    data: Mutex<FxHashMap<Family, Arc<RootDatum>>>,
    tables: Mutex<LruCache<(Family, DominantWeight), Arc<WeightTable>>>,
    decompositions: Mutex<LruCache<DecompositionKey, Arc<Decomposition>>>,
    table_hits: AtomicU64,
    table_misses: AtomicU64,
    decomposition_hits: AtomicU64,
    decomposition_misses: AtomicU64,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new()
    }
}

impl std::fmt::Debug for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Engine")
            .field("mode", &self.mode)
            .field("stats", &self.stats())
            .finish()
    }
}

impl Engine {
    pub fn new() -> Self {
        Engine::with_capacity(DEFAULT_CACHE_CAPACITY)
    }

    /// `capacity` bounds both the weight-table and the decomposition cache.
    pub fn with_capacity(capacity: usize) -> Self {
        let cap = NonZeroUsize::new(capacity.max(1)).expect("nonzero");
        Engine {
            mode: ExecMode::default(),
            data: Mutex::new(FxHashMap::default()),
            tables: Mutex::new(LruCache::new(cap)),
            decompositions: Mutex::new(LruCache::new(cap)),
            table_hits: AtomicU64::new(0),
            table_misses: AtomicU64::new(0),
            decomposition_hits: AtomicU64::new(0),
            decomposition_misses: AtomicU64::new(0),
        }
    }

    pub fn with_mode(mut self, mode: ExecMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn mode(&self) -> ExecMode {
        self.mode.effective()
    }

    pub fn datum(&self, family: Family) -> Result<Arc<RootDatum>> {
        if let Some(d) = self.data.lock().get(&family) {
            return Ok(Arc::clone(d));
        }
        let d = Arc::new(RootDatum::new(family)?);
        Ok(Arc::clone(self.data.lock().entry(family).or_insert(d)))
    }

    pub fn weights(&self, datum: &RootDatum, hw: &DominantWeight) -> Result<Arc<WeightTable>> {
        let key = (datum.family(), hw.clone());
        if let Some(t) = self.tables.lock().get(&key) {
            self.table_hits.fetch_add(1, Ordering::Relaxed);
            return Ok(Arc::clone(t));
        }
        self.table_misses.fetch_add(1, Ordering::Relaxed);
        let t = Arc::new(full_weight_system(datum, hw)?);
        self.tables.lock().put(key, Arc::clone(&t));
        Ok(t)
    }

    /// Cached Brauer–Klimyk decomposition, verified on first computation.
    pub fn decompose(
        &self,
        datum: &RootDatum,
        lambda: &DominantWeight,
        mu: &DominantWeight,
    ) -> Result<Arc<Decomposition>> {
        datum.check_weight(lambda.coords())?;
        datum.check_weight(mu.coords())?;
        let key = DecompositionKey::new(datum.family(), lambda, mu);
        if let Some(d) = self.decompositions.lock().get(&key) {
            self.decomposition_hits.fetch_add(1, Ordering::Relaxed);
            return Ok(Arc::clone(d));
        }
        self.decomposition_misses.fetch_add(1, Ordering::Relaxed);
        let (big, small) = tensor::order_factors(datum, lambda, mu)?;
        let table = self.weights(datum, small)?;
        let d = tensor::klimyk(datum, big, &table)?;
        tensor::verify_decomposition(datum, lambda, mu, &d)?;
        let d = Arc::new(d);
        self.decompositions.lock().put(key, Arc::clone(&d));
        Ok(d)
    }

    pub fn multiplicity_of_trivial(&self, datum: &RootDatum, list: &[DominantWeight]) -> Result<Multiplicity> {
        tensor::multiplicity_of_trivial_with(datum, list, |a, b| self.decompose(datum, a, b))
    }

    /// Seeds the decomposition cache, e.g. from a persisted store. The entry
    /// is checked for dimension and central-character consistency first.
    pub fn import_decomposition(&self, key: DecompositionKey, d: Decomposition) -> Result<()> {
        let datum = self.datum(key.family)?;
        datum.check_weight(key.lambda.coords())?;
        datum.check_weight(key.mu.coords())?;
        tensor::verify_decomposition(&datum, &key.lambda, &key.mu, &d)?;
        self.decompositions.lock().put(key, Arc::new(d));
        Ok(())
    }

    /// Snapshot of the decomposition cache, sorted by key.
    pub fn export_decompositions(&self) -> Vec<(DecompositionKey, Arc<Decomposition>)> {
        let mut v: Vec<_> = self
            .decompositions
            .lock()
            .iter()
            .map(|(k, d)| (k.clone(), Arc::clone(d)))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            table_hits: self.table_hits.load(Ordering::Relaxed),
            table_misses: self.table_misses.load(Ordering::Relaxed),
            decomposition_hits: self.decomposition_hits.load(Ordering::Relaxed),
            decomposition_misses: self.decomposition_misses.load(Ordering::Relaxed),
        }
    }
}
