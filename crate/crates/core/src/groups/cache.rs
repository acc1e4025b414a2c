//! On-disk cache of computed [`IrrepData`], keyed by a hash of the Cayley table.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{FiniteGroup, IrrepData};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "DEFKT_CACHE";

#[derive(Debug, Clone)]
pub struct IrrepCache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    schema: u32,
    key: String,
    irreps: IrrepData,
}

impl IrrepCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        IrrepCache { dir: dir.into() }
    }

    /// The cache named by `DEFKT_CACHE`, if set and nonempty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(IrrepCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Hex SHA-256 of the table's order and entries.
    pub fn key(g: &FiniteGroup) -> String {
        let mut h = Sha256::new();
        h.update((g.order() as u64).to_le_bytes());
        for &x in g.raw_table() {
            h.update(x.to_le_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, g: &FiniteGroup) -> Option<IrrepData> {
        let key = Self::key(g);
        let text = fs::read_to_string(self.path_for(&key)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        (entry.schema == 1 && entry.key == key && entry.irreps.validate(g.order()))
            .then_some(entry.irreps)
    }

    /// Stores `data`, writing to a temporary file and renaming it into place.
    pub fn put(&self, g: &FiniteGroup, data: &IrrepData) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let key = Self::key(g);
        let entry = Entry {
            schema: 1,
            key: key.clone(),
            irreps: data.clone(),
        };
        let tmp = self
            .dir
            .join(format!(".{key}.{}.tmp", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string_pretty(&entry)?.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, self.path_for(&key))
    }
}
