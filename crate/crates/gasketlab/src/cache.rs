//! Memoizing wrapper around [`OracleContext`].

use std::collections::BTreeSet;
use std::num::NonZeroUsize;
use std::sync::Mutex;

use gasket_core::{OracleContext, Result, VertexLabel};
use lru::LruCache;

/// Neighbor queries with an optional LRU layer. Queries are pure, so the
/// cache only trades memory for repeated work.
pub struct CachedOracle {
    ctx: OracleContext,
    cache: Option<Mutex<LruCache<VertexLabel, BTreeSet<VertexLabel>>>>,
}

impl CachedOracle {
    /// `capacity == 0` disables caching.
    pub fn new(ctx: OracleContext, capacity: usize) -> Self {
        CachedOracle {
            ctx,
            cache: NonZeroUsize::new(capacity).map(|c| Mutex::new(LruCache::new(c))),
        }
    }

    pub fn context(&self) -> &OracleContext {
        &self.ctx
    }

    pub fn neighbors(&self, v: &VertexLabel) -> Result<BTreeSet<VertexLabel>> {
        let Some(cache) = &self.cache else {
            return self.ctx.neighbors(v);
        };
        if let Some(hit) = cache.lock().unwrap().get(v) {
            return Ok(hit.clone());
        }
        let found = self.ctx.neighbors(v)?;
        cache.lock().unwrap().put(v.clone(), found.clone());
        Ok(found)
    }

    pub fn cached(&self) -> usize {
        self.cache.as_ref().map_or(0, |c| c.lock().unwrap().len())
    }
}
