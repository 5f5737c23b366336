//! On-disk cache for enumerations: one JSON file per key holding the payload
//! and its sha256 digest. A file whose digest does not match is rebuilt.

use std::fs;
use std::path::{Path, PathBuf};

use log::warn;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    /// Hex sha256 of `payload`.
    pub digest: String,
    /// The serialized result, kept as a string so the digest covers exact bytes.
    pub payload: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub rebuilds: u64,
}

#[derive(Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    stats: CacheStats,
}

pub fn digest(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}

/// Directory from the flag, else `HYPERDEG_CACHE`, else `~/.cache/hyperdeg`.
pub fn default_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.to_path_buf());
    }
    if let Some(p) = std::env::var_os("HYPERDEG_CACHE").filter(|p| !p.is_empty()) {
        return Some(PathBuf::from(p));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("hyperdeg"))
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Cache {
        Cache { dir, stats: CacheStats::default() }
    }

    pub fn disabled() -> Cache {
        Cache::new(None)
    }

    pub fn stats(&self) -> CacheStats {
        self.stats
    }

    pub fn path_for(&self, key: &str) -> Option<PathBuf> {
        let name: String = key.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect();
        self.dir.as_ref().map(|d| d.join(format!("{name}.json")))
    }

    /// Returns the cached value for `key`, or builds, stores and returns it.
    pub fn get_or_build<T, F>(&mut self, key: &str, build: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        let Some(path) = self.path_for(key) else {
            self.stats.misses += 1;
            return build();
        };
        match self.load(&path, key) {
            Some(Ok(value)) => {
                self.stats.hits += 1;
                return Ok(value);
            }
            Some(Err(why)) => {
                warn!("cache entry {} is unusable ({why}); rebuilding", path.display());
                self.stats.rebuilds += 1;
            }
            None => self.stats.misses += 1,
        }
        let value = build()?;
        if let Err(e) = store(&path, key, &value) {
            warn!("could not write cache entry {}: {e}", path.display());
        }
        Ok(value)
    }

    /// `None` when there is no entry, `Some(Err)` when it exists but is bad.
    fn load<T: DeserializeOwned>(&self, path: &Path, key: &str) -> Option<std::result::Result<T, String>> {
        let text = fs::read_to_string(path).ok()?;
        Some((|| {
            let entry: CacheEntry = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            if entry.key != key {
                return Err(format!("key {:?} does not match", entry.key));
            }
            if digest(&entry.payload) != entry.digest {
                return Err("digest mismatch".into());
            }
            serde_json::from_str(&entry.payload).map_err(|e| e.to_string())
        })())
    }
}

fn store<T: Serialize>(path: &Path, key: &str, value: &T) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let payload = serde_json::to_string(value)?;
    let entry = CacheEntry { key: key.to_string(), digest: digest(&payload), payload };
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_string(&entry)?)?;
    fs::rename(&tmp, path)?;
    Ok(())
}
