//! On-disk cache of restriction columns.
//!
//! One file per (root system, fixed point). The first line is a header with
//! the format version and the keys; each following line is
//! `<v-word>\t<polynomial JSON>`, and the last line is `sha256\t<hex>` over
//! everything before it. Files that fail any check are ignored and rewritten.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use schubert_core::gkm::RestrictionStore;
use schubert_core::poly::Polynomial;
use schubert_core::rootsys::{RootSystem, WeylGroup};
use sha2::{Digest, Sha256};

const FORMAT: &str = "schubert-restrictions v2";

pub struct DiskStore {
    dir: PathBuf,
    type_key: String,
}

impl DiskStore {
    pub fn new(root: impl Into<PathBuf>, rs: &RootSystem) -> std::io::Result<Self> {
        let type_key = type_key(rs);
        let dir = root.into().join(&type_key);
        fs::create_dir_all(&dir)?;
        Ok(DiskStore { dir, type_key })
    }

    fn path(&self, group: &WeylGroup, w: usize) -> PathBuf {
        let word = group.element(w).word();
        let name = if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join("-")
        };
        self.dir.join(format!("{name}.col"))
    }

    fn header(&self, group: &WeylGroup, w: usize) -> String {
        format!(
            "{FORMAT}\t{}\t{}\t{}",
            self.type_key,
            group.element(w).word_string(),
            group.len()
        )
    }
}

/// Directory name for a root system: its label, or a digest of its Cartan
/// matrix.
pub fn type_key(rs: &RootSystem) -> String {
    match rs.type_label() {
        Some(l) => l.to_string(),
        None => {
            let digest = Sha256::digest(serde_json::to_vec(rs.cartan()).unwrap());
            format!("cartan-{}", &hex::encode(digest)[..16])
        }
    }
}

impl RestrictionStore for DiskStore {
    fn load(&self, group: &WeylGroup, w: usize) -> Option<Vec<Polynomial>> {
        let text = fs::read_to_string(self.path(group, w)).ok()?;
        let body_end = text.trim_end_matches('\n').rfind('\n')? + 1;
        let (body, trailer) = text.split_at(body_end);
        if trailer.trim_end_matches('\n') != format!("sha256\t{}", hex::encode(Sha256::digest(body))) {
            return None;
        }
        let mut lines = body.lines();
        if lines.next()? != self.header(group, w) {
            return None;
        }
        let rank = group.root_system().rank();
        let mut column = Vec::with_capacity(group.len());
        for (v, line) in lines.enumerate() {
            let (key, json) = line.split_once('\t')?;
            if v >= group.len() || key != group.element(v).word_string() {
                return None;
            }
            let value: serde_json::Value = serde_json::from_str(json).ok()?;
            column.push(Polynomial::from_json(rank, &value).ok()?);
        }
        (column.len() == group.len()).then_some(column)
    }

    fn store(&self, group: &WeylGroup, w: usize, column: &[Polynomial]) {
        let mut body = self.header(group, w);
        body.push('\n');
        for (v, p) in column.iter().enumerate() {
            body.push_str(&group.element(v).word_string());
            body.push('\t');
            body.push_str(&p.to_json().to_string());
            body.push('\n');
        }
        let digest = hex::encode(Sha256::digest(&body));
        body.push_str(&format!("sha256\t{digest}\n"));
        // Write-then-rename so concurrent readers never see a partial file;
        // a failed write only costs a recomputation later.
        let path = self.path(group, w);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let written = fs::File::create(&tmp).and_then(|mut f| f.write_all(body.as_bytes()));
        if written.is_ok() {
            let _ = fs::rename(&tmp, &path);
        } else {
            let _ = fs::remove_file(&tmp);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn a2() -> Arc<WeylGroup> {
        let rs = Arc::new(RootSystem::from_label("A2").unwrap());
        Arc::new(rs.weyl_enumerate().unwrap())
    }

    fn column(g: &WeylGroup) -> Vec<Polynomial> {
        (0..g.len()).map(|i| Polynomial::linear(&[i as i64, 1])).collect()
    }

    #[test]
    fn round_trip_and_miss() {
        let dir = tempfile::tempdir().unwrap();
        let g = a2();
        let store = DiskStore::new(dir.path(), g.root_system()).unwrap();
        assert!(store.load(&g, 3).is_none());
        store.store(&g, 3, &column(&g));
        assert_eq!(store.load(&g, 3).unwrap(), column(&g));
        assert!(store.load(&g, 4).is_none());
    }

    #[test]
    fn rejects_tampering_and_truncation() {
        let dir = tempfile::tempdir().unwrap();
        let g = a2();
        let store = DiskStore::new(dir.path(), g.root_system()).unwrap();
        store.store(&g, 5, &column(&g));
        let path = store.path(&g, 5);
        let text = fs::read_to_string(&path).unwrap();

        fs::write(&path, text.replacen("[[0,1],1,1]", "[[0,1],2,1]", 1)).unwrap();
        assert!(store.load(&g, 5).is_none());

        let cut: String = text.lines().take(3).map(|l| format!("{l}\n")).collect();
        fs::write(&path, cut).unwrap();
        assert!(store.load(&g, 5).is_none());

        fs::write(&path, text.replace(FORMAT, "schubert-restrictions v0")).unwrap();
        assert!(store.load(&g, 5).is_none());

        fs::write(&path, "").unwrap();
        assert!(store.load(&g, 5).is_none());
    }

    #[test]
    fn cartan_systems_get_digest_keys() {
        let rs = RootSystem::from_cartan(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let key = type_key(&rs);
        assert!(key.starts_with("cartan-"));
        assert_eq!(key.len(), "cartan-".len() + 16);
        assert_eq!(type_key(&RootSystem::from_label("B2").unwrap()), "B2");
    }
}
