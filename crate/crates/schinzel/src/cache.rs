//! Content-addressed verdict cache: one JSON file per key, named by the
//! SHA-256 of the canonical key document.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::CliResult;

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

pub fn cache_key<K: Serialize>(key: &K) -> CliResult<String> {
    let doc = serde_json::to_vec(key)?;
    Ok(hex::encode(Sha256::digest(&doc)))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> CliResult<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(&key[..2]).join(format!("{key}.json"))
    }

    /// Unreadable or corrupt entries count as misses.
    pub fn get<V: DeserializeOwned>(&self, key: &str) -> Option<V> {
        let bytes = fs::read(self.path(key)).ok()?;
        serde_json::from_slice(&bytes).ok()
    }

    /// Writes through a temporary file and a rename so concurrent readers
    /// never see partial entries.
    pub fn put<V: Serialize>(&self, key: &str, value: &V) -> CliResult<()> {
        let path = self.path(key);
        let parent = path.parent().expect("nested path");
        fs::create_dir_all(parent)?;
        let tmp = parent.join(format!(
            ".{key}.{}.{:?}.tmp",
            std::process::id(),
            std::thread::current().id()
        ));
        fs::write(&tmp, serde_json::to_vec(value)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}
