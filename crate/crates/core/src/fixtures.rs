//! A directory of input files listed in `manifest.toml`, each pinned by its
//! SHA-256.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub file: String,
    pub source: String,
    pub sha256: String,
}

#[derive(Debug, Deserialize)]
struct Manifest {
    #[serde(default)]
    fixture: Vec<Entry>,
}

#[derive(Clone, Debug)]
pub struct FixtureStore {
    dir: PathBuf,
    entries: Vec<Entry>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl FixtureStore {
    /// Reads `dir/manifest.toml`. A directory without a manifest is an empty
    /// store.
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        let path = dir.join("manifest.toml");
        let entries = match std::fs::read_to_string(&path) {
            Ok(text) => {
                let m: Manifest = toml::from_str(&text).map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", path.display()) })?;
                m.fixture
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Vec::new(),
            Err(e) => return Err(e.into()),
        };
        Ok(FixtureStore { dir, entries })
    }

    pub fn empty() -> Self {
        FixtureStore { dir: PathBuf::new(), entries: Vec::new() }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Contents of fixture `name` after its checksum is confirmed.
    pub fn load(&self, name: &str) -> Result<String> {
        let e = self.entry(name).ok_or_else(|| Error::FixtureMissing(format!("{name} is not in the manifest")))?;
        let path = self.dir.join(&e.file);
        let bytes = std::fs::read(&path).map_err(|err| match err.kind() {
            std::io::ErrorKind::NotFound => Error::FixtureMissing(format!("{} does not exist", path.display())),
            _ => err.into(),
        })?;
        let got = sha256_hex(&bytes);
        if got != e.sha256 {
            return Err(Error::Verification(format!("{}: checksum {got} does not match the manifest", e.file)));
        }
        String::from_utf8(bytes).map_err(|_| Error::Parse { line: 0, msg: format!("{} is not UTF-8", e.file) })
    }

    /// Checks every listed file; returns the names that fail.
    pub fn audit(&self) -> Vec<(String, Error)> {
        self.entries.iter().filter_map(|e| self.load(&e.name).err().map(|err| (e.name.clone(), err))).collect()
    }
}
