//! Output directories whose files are listed with SHA-256 checksums.
//!
//! The manifest uses the `sha256sum` text format, so `sha256sum -c
//! MANIFEST.sha256` checks a run directory as well as [`verify_manifest`].

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use sha2::{Digest, Sha256};

pub const MANIFEST: &str = "MANIFEST.sha256";

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Collects artifacts written into one directory.
#[derive(Debug)]
pub struct Artifacts {
    dir: PathBuf,
    entries: Vec<(String, String)>,
}

impl Artifacts {
    pub fn create(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        Ok(Self { dir: dir.to_path_buf(), entries: Vec::new() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn write(&mut self, name: &str, bytes: &[u8]) -> Result<PathBuf> {
        if name == MANIFEST || self.entries.iter().any(|(n, _)| n == name) {
            bail!("artifact {name} written twice");
        }
        let path = self.dir.join(name);
        fs::write(&path, bytes).with_context(|| format!("writing {}", path.display()))?;
        self.entries.push((name.to_string(), sha256_hex(bytes)));
        Ok(path)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    /// Writes the manifest and returns its path.
    pub fn finish(self) -> Result<PathBuf> {
        let text: String = self.entries.iter().map(|(name, hash)| format!("{hash}  {name}\n")).collect();
        let path = self.dir.join(MANIFEST);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        Ok(path)
    }
}

/// Checks every entry of the manifest in `dir`; returns the problems found.
pub fn verify_manifest(dir: &Path) -> Result<Vec<String>> {
    let path = dir.join(MANIFEST);
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    let mut problems = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let Some((hash, name)) = line.split_once("  ") else {
            problems.push(format!("line {}: malformed", k + 1));
            continue;
        };
        match fs::read(dir.join(name)) {
            Ok(bytes) if sha256_hex(&bytes) == hash => {}
            Ok(_) => problems.push(format!("{name}: checksum mismatch")),
            Err(e) => problems.push(format!("{name}: {e}")),
        }
    }
    Ok(problems)
}
