//! Optional process-wide memo caches for expensive constants, keyed by
//! precision. Thread-safe; can be disabled globally.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;

use crate::real::Float;

static ENABLED: AtomicBool = AtomicBool::new(true);

/// Disable or re-enable all memo caches (they are consulted per lookup).
pub fn set_enabled(enabled: bool) {
    ENABLED.store(enabled, Ordering::SeqCst);
}

pub fn enabled() -> bool {
    ENABLED.load(Ordering::SeqCst)
}

/// Cache storing, per key, the highest-precision value computed so far.
/// A lookup at `wp` bits succeeds when a value of >= `wp` bits is stored.
pub(crate) struct PrecisionCache<K> {
    map: Mutex<HashMap<K, (usize, Float)>>,
}

impl<K: Eq + Hash + Clone> PrecisionCache<K> {
    pub(crate) fn new() -> Self {
        PrecisionCache { map: Mutex::new(HashMap::new()) }
    }

    pub(crate) fn get_or_compute(&self, key: K, wp: usize, f: impl FnOnce() -> Float) -> Float {
        if !enabled() {
            return f();
        }
        if let Some((bits, v)) = self.map.lock().unwrap().get(&key)
            && *bits >= wp {
                return v.clone().with_precision(wp).value();
            }
        let v = f();
        let mut guard = self.map.lock().unwrap();
        let entry = guard.entry(key).or_insert_with(|| (wp, v.clone()));
        if entry.0 < wp {
            *entry = (wp, v.clone());
        }
        v
    }
}
