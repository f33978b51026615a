//! A per-process memo of chord diagram spaces and an on-disk store of model
//! summaries.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use diagrams::ChordDiagram;
use serde_json::Value;

use crate::clc::{clc0, Clc0};
use crate::jac::jac_space;
use crate::model::HomSpaceModel;
use crate::HomError;

type JacMemo = Mutex<HashMap<(usize, usize, usize), Arc<HomSpaceModel<ChordDiagram>>>>;

fn jac_memo() -> &'static JacMemo {
    static MEMO: OnceLock<JacMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `jac_space(d,m,n)`, built once per process.
pub fn jac_space_cached(d: usize, m: usize, n: usize) -> Result<Arc<HomSpaceModel<ChordDiagram>>, HomError> {
    if let Some(x) = jac_memo().lock().expect("memo lock").get(&(d, m, n)) {
        return Ok(x.clone());
    }
    let built = Arc::new(jac_space(d, m, n)?);
    Ok(jac_memo().lock().expect("memo lock").entry((d, m, n)).or_insert(built).clone())
}

type ClcMemo = Mutex<HashMap<(usize, usize), Arc<Clc0>>>;

fn clc_memo() -> &'static ClcMemo {
    static MEMO: OnceLock<ClcMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `clc0(n,d)`, built once per process.
pub fn clc0_cached(n: usize, d: usize) -> Result<Arc<Clc0>, HomError> {
    if let Some(x) = clc_memo().lock().expect("memo lock").get(&(n, d)) {
        return Ok(x.clone());
    }
    let built = Arc::new(clc0(n, d)?);
    Ok(clc_memo().lock().expect("memo lock").entry((n, d)).or_insert(built).clone())
}

/// A directory of JSON model summaries, one file per label. Writes go
/// through a temporary file and an atomic rename.
#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl AsRef<Path>) -> Result<Self, HomError> {
        fs::create_dir_all(dir.as_ref()).map_err(|e| HomError::Cache(e.to_string()))?;
        Ok(DiskCache { dir: dir.as_ref().to_path_buf() })
    }

    pub fn path_for(&self, label: &str) -> PathBuf {
        let name: String = label.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
        self.dir.join(format!("{name}.json"))
    }

    pub fn load(&self, label: &str) -> Result<Option<Value>, HomError> {
        let p = self.path_for(label);
        if !p.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&p).map_err(|e| HomError::Cache(e.to_string()))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| HomError::Cache(format!("{}: {e}", p.display())))?;
        if v.get("label").and_then(Value::as_str) != Some(label) {
            return Err(HomError::Cache(format!("{} holds a different model", p.display())));
        }
        Ok(Some(v))
    }

    pub fn store(&self, label: &str, v: &Value) -> Result<(), HomError> {
        let err = |e: std::io::Error| HomError::Cache(e.to_string());
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(err)?;
        tmp.write_all(serde_json::to_string_pretty(v).expect("serializable").as_bytes()).map_err(err)?;
        tmp.persist(self.path_for(label)).map_err(|e| HomError::Cache(e.to_string()))?;
        Ok(())
    }
}

/// Returns the stored summary for `label`, building and storing it if absent.
pub fn cached_summary(
    cache: Option<&DiskCache>,
    label: &str,
    build: impl FnOnce() -> Result<Value, HomError>,
) -> Result<Value, HomError> {
    if let Some(c) = cache {
        if let Some(v) = c.load(label)? {
            return Ok(v);
        }
    }
    let v = build()?;
    if let Some(c) = cache {
        c.store(label, &v)?;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summaries_round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path()).unwrap();
        let m = jac_space_cached(1, 0, 2).unwrap();
        let label = m.label().to_string();
        let first = cached_summary(Some(&cache), &label, || Ok(m.summary(|d| d.to_json()))).unwrap();
        assert_eq!(first["dim"], 3);
        let again = cached_summary(Some(&cache), &label, || panic!("must be read from disk")).unwrap();
        assert_eq!(first, again);
        assert!(Arc::ptr_eq(&m, &jac_space_cached(1, 0, 2).unwrap()));
    }
}
