//! On-disk cache for canonical bases. One file per key; the payload is the
//! exact JSON text printed by `canon`, guarded by a SHA-256 checksum.

use std::fs;
use std::path::{Path, PathBuf};

use fockbasis::fock::canonical::ELIMINATION_POLICY;
use fockbasis::Charge;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub charge: Charge,
    pub rank: usize,
    pub version: String,
    pub policy: u32,
}

impl CacheKey {
    pub fn new(charge: &Charge, rank: usize) -> Self {
        CacheKey {
            charge: charge.clone(),
            rank,
            version: fockbasis::VERSION.to_string(),
            policy: ELIMINATION_POLICY,
        }
    }

    fn file_name(&self) -> String {
        let text = serde_json::to_string(self).expect("keys serialize");
        format!("{}.json", &digest(&text)[..32])
    }
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    key: CacheKey,
    checksum: String,
    payload: String,
}

fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn path_for(dir: &Path, key: &CacheKey) -> PathBuf {
    dir.join(key.file_name())
}

/// The cached payload, or `None` when absent, stale or corrupt.
pub fn load(dir: &Path, key: &CacheKey) -> Option<String> {
    let text = fs::read_to_string(path_for(dir, key)).ok()?;
    let entry: CacheEntry = serde_json::from_str(&text).ok()?;
    (entry.key == *key && entry.checksum == digest(&entry.payload)).then_some(entry.payload)
}

pub fn store(dir: &Path, key: &CacheKey, payload: &str) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let entry = CacheEntry {
        key: key.clone(),
        checksum: digest(payload),
        payload: payload.to_string(),
    };
    let path = path_for(dir, key);
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_string(&entry).expect("entries serialize"))?;
    fs::rename(tmp, path)
}
