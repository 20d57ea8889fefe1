//! Versioned line-delimited JSON cache of computed payloads.

use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

const FORMAT: &str = "sl21-ledger-1";

/// Hash of the crate version and cache format; entries written under another hash are dropped.
pub fn version_hash() -> String {
    let mut h = Sha256::new();
    h.update(FORMAT.as_bytes());
    h.update(env!("CARGO_PKG_VERSION").as_bytes());
    h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CacheKey {
    pub m: usize,
    pub n: usize,
    pub kind: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: String,
    pub key: CacheKey,
    pub payload: serde_json::Value,
}

pub struct Cache {
    file: PathBuf,
    entries: Vec<CacheEntry>,
}

impl Cache {
    /// Opens the cache in `dir`, discarding the file if it holds entries from another version.
    pub fn open(dir: &Path) -> std::io::Result<Cache> {
        fs::create_dir_all(dir)?;
        let file = dir.join("ledger.jsonl");
        let version = version_hash();
        let mut entries = Vec::new();
        let mut stale = false;
        if let Ok(f) = fs::File::open(&file) {
            for line in BufReader::new(f).lines() {
                match serde_json::from_str::<CacheEntry>(&line?) {
                    Ok(e) if e.version == version => entries.push(e),
                    _ => stale = true,
                }
            }
        }
        if stale {
            let mut f = fs::File::create(&file)?;
            for e in &entries {
                writeln!(f, "{}", serde_json::to_string(e)?)?;
            }
        }
        Ok(Cache { file, entries })
    }

    pub fn get(&self, key: &CacheKey) -> Option<&serde_json::Value> {
        self.entries.iter().find(|e| &e.key == key).map(|e| &e.payload)
    }

    pub fn put(&mut self, key: CacheKey, payload: serde_json::Value) -> std::io::Result<()> {
        let entry = CacheEntry { version: version_hash(), key, payload };
        let mut f = OpenOptions::new().create(true).append(true).open(&self.file)?;
        writeln!(f, "{}", serde_json::to_string(&entry)?)?;
        self.entries.push(entry);
        Ok(())
    }
}
