//! Optional constants cache: a versioned JSON file keyed by
//! (class tag, digits). Values round-trip bit-exactly via significand and
//! binary exponent; stale or corrupt entries are silently recomputed.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use dashu_int::IBig;
use periodlab_core::real::{ErrorBound, Float, Real};
use serde::{Deserialize, Serialize};

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Default)]
struct CacheFile {
    version: u32,
    entries: BTreeMap<String, CacheEntry>,
}

#[derive(Serialize, Deserialize, Clone)]
struct CacheEntry {
    significand: String,
    exponent: isize,
    error_exp: Option<i64>,
    precision_bits: usize,
}

pub struct Cache {
    path: PathBuf,
    file: CacheFile,
    pub hits: usize,
    pub misses: usize,
    dirty: bool,
}

impl Cache {
    /// Load from disk; any parse failure or version mismatch yields an
    /// empty cache (entries will be recomputed and rewritten).
    pub fn load(path: impl Into<PathBuf>) -> Self {
        let path = path.into();
        let file = std::fs::read_to_string(&path)
            .ok()
            .and_then(|s| serde_json::from_str::<CacheFile>(&s).ok())
            .filter(|f| f.version == CACHE_VERSION)
            .unwrap_or_default();
        Cache { path, file, hits: 0, misses: 0, dirty: false }
    }

    pub fn get(&mut self, key: &str) -> Option<Real> {
        let entry = self.file.entries.get(key)?.clone();
        let sig = IBig::from_str(&entry.significand).ok()?;
        let value = Float::from_parts(sig, entry.exponent);
        self.hits += 1;
        let error = match entry.error_exp {
            None => ErrorBound::Exact,
            Some(e) => ErrorBound::Abs(e),
        };
        Some(Real::with_error(value, error, entry.precision_bits))
    }

    pub fn put(&mut self, key: &str, value: &Real) {
        let repr = value.value().repr();
        self.file.entries.insert(
            key.to_string(),
            CacheEntry {
                significand: repr.significand().to_string(),
                exponent: repr.exponent(),
                error_exp: value.error_exp(),
                precision_bits: value.precision_bits(),
            },
        );
        self.misses += 1;
        self.dirty = true;
    }

    /// Best-effort write-back.
    pub fn save(&mut self) {
        if !self.dirty {
            return;
        }
        self.file.version = CACHE_VERSION;
        if let Ok(s) = serde_json::to_string_pretty(&self.file) {
            let _ = std::fs::write(&self.path, s);
        }
        self.dirty = false;
    }
}
