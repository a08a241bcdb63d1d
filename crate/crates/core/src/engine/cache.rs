//! Persistent memo table `(g, μ) -> h_{g,μ}`.
//!
//! On disk the cache is one JSON object per line,
//! `{"g":1,"mu":[2,1],"num":"40","den":"1"}`, sorted by `(r, g, μ)` with `μ`
//! in reverse-lexicographic order so that saves are byte-for-byte reproducible.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_traits::Signed;
use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::error::{HurwitzError, Result};
use crate::partition::{ramification_unchecked, Partition};
use crate::BigRat;

pub type CacheKey = (u32, Partition);

#[derive(Debug, Default)]
pub struct HurwitzCache {
    entries: RwLock<BTreeMap<CacheKey, BigRat>>,
    dirty: AtomicBool,
    path: Option<PathBuf>,
    missing_on_load: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct Record {
    g: u32,
    mu: Vec<u32>,
    num: String,
    den: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheStats {
    pub entries: usize,
    pub max_r: Option<i64>,
    pub max_g: Option<u32>,
}

impl HurwitzCache {
    pub fn new() -> Self {
        HurwitzCache::default()
    }

    /// An empty cache that will save to `path`.
    pub fn with_path(path: impl Into<PathBuf>) -> Self {
        HurwitzCache {
            path: Some(path.into()),
            ..Default::default()
        }
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    /// True when the backing file did not exist at load time.
    pub fn missing_on_load(&self) -> bool {
        self.missing_on_load
    }

    pub fn is_dirty(&self) -> bool {
        self.dirty.load(Ordering::Acquire)
    }

    pub fn len(&self) -> usize {
        self.entries.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.read().is_empty()
    }

    pub fn get(&self, g: u32, mu: &Partition) -> Option<BigRat> {
        self.entries.read().get(&(g, mu.clone())).cloned()
    }

    /// Inserts a value. Re-inserting the same value is a no-op; a different
    /// value for an existing key is a conflict.
    pub fn insert(&self, g: u32, mu: Partition, value: BigRat) -> Result<()> {
        let mut map = self.entries.write();
        match map.get(&(g, mu.clone())) {
            Some(old) if *old == value => Ok(()),
            Some(old) => Err(HurwitzError::CacheConflict {
                g,
                mu,
                existing: old.to_string(),
                incoming: value.to_string(),
            }),
            None => {
                map.insert((g, mu), value);
                self.dirty.store(true, Ordering::Release);
                Ok(())
            }
        }
    }

    /// Copies every entry of `other` into `self`, failing on the first disagreement.
    pub fn merge(&self, other: &HurwitzCache) -> Result<()> {
        for ((g, mu), v) in other.snapshot() {
            self.insert(g, mu, v)?;
        }
        Ok(())
    }

    pub fn clear(&self) {
        let mut map = self.entries.write();
        if !map.is_empty() {
            map.clear();
            self.dirty.store(true, Ordering::Release);
        }
    }

    /// All entries in file order.
    pub fn snapshot(&self) -> Vec<(CacheKey, BigRat)> {
        let mut v: Vec<(CacheKey, BigRat)> = self
            .entries
            .read()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        v.sort_by(|((g1, m1), _), ((g2, m2), _)| {
            let r1 = ramification_unchecked(*g1, m1.len(), m1.size());
            let r2 = ramification_unchecked(*g2, m2.len(), m2.size());
            r1.cmp(&r2).then(g1.cmp(g2)).then(m1.cmp_rev_lex(m2))
        });
        v
    }

    pub fn stats(&self) -> CacheStats {
        let map = self.entries.read();
        CacheStats {
            entries: map.len(),
            max_r: map
                .keys()
                .map(|(g, mu)| ramification_unchecked(*g, mu.len(), mu.size()))
                .max(),
            max_g: map.keys().map(|(g, _)| *g).max(),
        }
    }

    /// Reads a cache file. A missing file yields an empty cache with
    /// [`missing_on_load`](Self::missing_on_load) set.
    pub fn load(path: impl AsRef<Path>) -> Result<HurwitzCache> {
        let path = path.as_ref();
        let mut cache = HurwitzCache::with_path(path);
        let file = match fs::File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                cache.missing_on_load = true;
                return Ok(cache);
            }
            Err(source) => {
                return Err(HurwitzError::Io {
                    path: path.into(),
                    source,
                })
            }
        };
        for (idx, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|source| HurwitzError::Io {
                path: path.into(),
                source,
            })?;
            if line.trim().is_empty() {
                continue;
            }
            let malformed = |reason: String| HurwitzError::MalformedCache {
                path: path.into(),
                line: idx + 1,
                reason,
            };
            let rec: Record = serde_json::from_str(&line).map_err(|e| malformed(e.to_string()))?;
            let mu = Partition::new(rec.mu).map_err(|e| malformed(e.to_string()))?;
            if mu.is_empty() {
                return Err(malformed("empty profile".into()));
            }
            let num: BigInt = rec
                .num
                .parse()
                .map_err(|_| malformed(format!("bad numerator {:?}", rec.num)))?;
            let den: BigInt = rec
                .den
                .parse()
                .map_err(|_| malformed(format!("bad denominator {:?}", rec.den)))?;
            if !den.is_positive() {
                return Err(malformed(format!("denominator {den} is not positive")));
            }
            cache.insert(rec.g, mu, BigRat::new(num, den))?;
        }
        cache.dirty.store(false, Ordering::Release);
        Ok(cache)
    }

    /// Writes every entry to `path`, replacing the file atomically.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let io = |source| HurwitzError::Io {
            path: path.into(),
            source,
        };
        if let Some(dir) = path.parent() {
            if !dir.as_os_str().is_empty() {
                fs::create_dir_all(dir).map_err(io)?;
            }
        }
        let tmp = path.with_extension("tmp");
        {
            let mut out = std::io::BufWriter::new(fs::File::create(&tmp).map_err(io)?);
            for ((g, mu), v) in self.snapshot() {
                let rec = Record {
                    g,
                    mu: mu.into_parts(),
                    num: v.numer().to_string(),
                    den: v.denom().to_string(),
                };
                let line = serde_json::to_string(&rec).expect("record serializes");
                writeln!(out, "{line}").map_err(io)?;
            }
            out.flush().map_err(io)?;
        }
        fs::rename(&tmp, path).map_err(io)?;
        self.dirty.store(false, Ordering::Release);
        Ok(())
    }

    /// Saves to the backing path if there are unsaved changes.
    pub fn flush(&self) -> Result<()> {
        match &self.path {
            Some(p) if self.is_dirty() => self.save(p),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn save_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let cache = HurwitzCache::new();
        cache.insert(0, p(&[1]), q(1, 1)).unwrap();
        cache.save(&path).unwrap();
        let back = HurwitzCache::load(&path).unwrap();
        assert_eq!(back.snapshot(), cache.snapshot());
        assert!(!back.is_dirty());
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text, "{\"g\":0,\"mu\":[1],\"num\":\"1\",\"den\":\"1\"}\n");
    }

    #[test]
    fn file_order_is_by_r_then_g_then_rev_lex() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let cache = HurwitzCache::new();
        cache.insert(1, p(&[1]), q(0, 1)).unwrap();
        cache.insert(0, p(&[1, 1]), q(1, 2)).unwrap();
        cache.insert(0, p(&[3]), q(1, 1)).unwrap();
        cache.insert(0, p(&[1]), q(1, 1)).unwrap();
        cache.insert(0, p(&[2]), q(1, 2)).unwrap();
        cache.save(&path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let mus: Vec<&str> = text.lines().collect();
        assert_eq!(
            mus,
            vec![
                r#"{"g":0,"mu":[1],"num":"1","den":"1"}"#,
                r#"{"g":0,"mu":[2],"num":"1","den":"2"}"#,
                r#"{"g":0,"mu":[3],"num":"1","den":"1"}"#,
                r#"{"g":0,"mu":[1,1],"num":"1","den":"2"}"#,
                r#"{"g":1,"mu":[1],"num":"0","den":"1"}"#,
            ]
        );
    }

    #[test]
    fn missing_file_is_empty() {
        let dir = tempfile::tempdir().unwrap();
        let cache = HurwitzCache::load(dir.path().join("nope.jsonl")).unwrap();
        assert!(cache.is_empty());
        assert!(cache.missing_on_load());
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.jsonl");
        fs::write(
            &path,
            "{\"g\":0,\"mu\":[1],\"num\":\"1\",\"den\":\"1\"}\n{\"g\":0,\"mu\":[1,2],\"num\":\"1\",\"den\":\"1\"}\n",
        )
        .unwrap();
        match HurwitzCache::load(&path) {
            Err(HurwitzError::MalformedCache { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        fs::write(&path, "{\"g\":0,\"mu\":[1],\"num\":\"1\",\"den\":\"0\"}\n").unwrap();
        assert!(matches!(
            HurwitzCache::load(&path),
            Err(HurwitzError::MalformedCache { line: 1, .. })
        ));
        fs::write(&path, "not json\n").unwrap();
        assert!(HurwitzCache::load(&path).is_err());
    }

    #[test]
    fn conflicts_are_errors() {
        let a = HurwitzCache::new();
        let b = HurwitzCache::new();
        a.insert(0, p(&[3]), q(1, 1)).unwrap();
        a.insert(0, p(&[3]), q(1, 1)).unwrap();
        b.insert(0, p(&[3]), q(2, 1)).unwrap();
        assert!(matches!(
            a.merge(&b),
            Err(HurwitzError::CacheConflict { .. })
        ));
        let c = HurwitzCache::new();
        c.insert(0, p(&[2]), q(1, 2)).unwrap();
        a.merge(&c).unwrap();
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn stats_and_clear() {
        let c = HurwitzCache::new();
        assert_eq!(c.stats().entries, 0);
        c.insert(1, p(&[3]), q(9, 1)).unwrap();
        let s = c.stats();
        assert_eq!((s.entries, s.max_r, s.max_g), (1, Some(4), Some(1)));
        c.clear();
        assert!(c.is_empty());
    }
}
