//! On-disk character table cache: `<dir>/<name>-<order>.ct.json`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use charlab_core::chartab::{self, CharacterTable};
use charlab_core::classdata::conjugacy_classes;
use charlab_core::workbench::TableSource;
use charlab_core::{Error, PermGroup, Result};
use sha2::{Digest, Sha256};

/// Computes tables with a fixed seed, reading and writing a cache
/// directory when one is configured.
pub struct DiskCache {
    dir: Option<PathBuf>,
    seed: u64,
}

impl DiskCache {
    pub fn new(dir: Option<PathBuf>, seed: u64) -> std::io::Result<DiskCache> {
        if let Some(d) = &dir {
            fs::create_dir_all(d)?;
        }
        Ok(DiskCache { dir, seed })
    }

    pub fn path_for(&self, name: &str, order: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(file_name(name, order)))
    }

    /// Atomically write `t` into the cache; a no-op without a cache directory.
    pub fn store(&self, t: &CharacterTable) -> Result<Option<PathBuf>> {
        let Some(path) = self.path_for(t.name(), &t.order().to_string()) else {
            return Ok(None);
        };
        write_atomic(&path, t.to_json().as_bytes())
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
        Ok(Some(path))
    }

    fn load(&self, path: &Path, group: &PermGroup, budget: u64) -> Option<CharacterTable> {
        let text = fs::read_to_string(path).ok()?;
        let mut t = chartab::read_table(&text).ok()?;
        if !t.is_full() {
            return None;
        }
        let cd = conjugacy_classes(group, budget).ok()?;
        t.attach_classes(cd).ok()?;
        Some(t)
    }
}

impl TableSource for DiskCache {
    fn table(&self, key: &str, group: &PermGroup, budget: u64) -> Result<CharacterTable> {
        let path = self.path_for(key, &group.order().to_string());
        if let Some(t) = path.as_deref().and_then(|p| self.load(p, group, budget)) {
            if t.name() == key {
                return Ok(t);
            }
        }
        let t = chartab::character_table_seeded(group, key, budget, self.seed)?;
        self.store(&t)?;
        Ok(t)
    }
}

/// File name for a table; names that need sanitizing get a hash suffix so
/// distinct names never share a file.
pub fn file_name(name: &str, order: &str) -> String {
    let clean: String =
        name.chars().map(|c| if c.is_ascii_alphanumeric() || "._()-,".contains(c) { c } else { '_' }).collect();
    if clean == name {
        format!("{clean}-{order}.ct.json")
    } else {
        let digest = Sha256::digest(name.as_bytes());
        let tag: String = digest.iter().take(4).map(|b| format!("{b:02x}")).collect();
        format!("{clean}~{tag}-{order}.ct.json")
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use charlab_core::GroupSpec;

    #[test]
    fn file_names_are_safe_and_distinct() {
        assert_eq!(file_name("A5", "60"), "A5-60.ct.json");
        assert_eq!(file_name("GL(2,3).NP2", "48"), "GL(2,3).NP2-48.ct.json");
        let a = file_name("perm:(1 2 3)", "3");
        let b = file_name("perm:(1_2_3)", "3");
        assert_ne!(a, b);
        assert!(!a.contains(' ') && !a.contains(':'));
    }

    #[test]
    fn cached_table_matches_cold_table() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(Some(dir.path().to_path_buf()), 1).unwrap();
        let g = GroupSpec::parse("S(4)").unwrap().build().unwrap();
        let cold = cache.table("S4", &g, 1000).unwrap();
        assert!(dir.path().join("S4-24.ct.json").exists());
        let warm = cache.table("S4", &g, 1000).unwrap();
        assert_eq!(cold.to_json(), warm.to_json());
        assert!(warm.has_group_data());
    }

    #[test]
    fn corrupt_cache_entries_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("C3-3.ct.json"), "{ not json").unwrap();
        let cache = DiskCache::new(Some(dir.path().to_path_buf()), 1).unwrap();
        let g = GroupSpec::parse("C(3)").unwrap().build().unwrap();
        assert_eq!(cache.table("C3", &g, 1000).unwrap().num_chars(), 3);
        let text = fs::read_to_string(dir.path().join("C3-3.ct.json")).unwrap();
        assert!(chartab::read_table(&text).is_ok());
    }
}
