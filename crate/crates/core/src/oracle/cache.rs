use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::{matrix_of, OracleError, PauliOperatorRep};
use crate::question::QuestionIndex;

/// Systems above this size are rebuilt on demand rather than cached, since
/// a full cache would hold `4^n` dense `2^n x 2^n` matrices.
pub const CACHE_MAX_GBITS: usize = 5;

/// Memo of Pauli-string matrices. Reads proceed concurrently; insertion takes
/// the write lock.
#[derive(Debug, Default)]
pub struct PauliCache {
    entries: RwLock<HashMap<QuestionIndex, Arc<PauliOperatorRep>>>,
}

impl PauliCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by the oracle functions.
    pub fn global() -> &'static PauliCache {
        static GLOBAL: OnceLock<PauliCache> = OnceLock::new();
        GLOBAL.get_or_init(PauliCache::new)
    }

    pub fn get(&self, q: &QuestionIndex) -> Result<Arc<PauliOperatorRep>, OracleError> {
        if q.n() > CACHE_MAX_GBITS {
            return Ok(Arc::new(matrix_of(q)?));
        }
        if let Some(hit) = self.entries.read().expect("cache poisoned").get(q) {
            return Ok(Arc::clone(hit));
        }
        let built = Arc::new(matrix_of(q)?);
        let mut entries = self.entries.write().expect("cache poisoned");
        Ok(Arc::clone(entries.entry(q.clone()).or_insert(built)))
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn cached_matrix_of(q: &QuestionIndex) -> Result<Arc<PauliOperatorRep>, OracleError> {
    PauliCache::global().get(q)
}
