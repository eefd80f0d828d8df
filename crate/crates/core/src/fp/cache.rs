use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use super::{fmzv_eval, t_poly_from_strict, FpPoly, FpScalar, PrimeCtx};
use crate::error::{Error, Result};
use crate::index::Index;

pub const CACHE_FILE: &str = "fmzv-cache.jsonl";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub p: u64,
    pub index: Vec<u32>,
    pub tcoeffs: Vec<u64>,
}

/// What [`EvalCache::open`] found on disk.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoadStats {
    pub loaded: usize,
    /// One-based line numbers of skipped lines.
    pub malformed: Vec<usize>,
}

type Key = (u64, Index);

/// Memo of `zeta_p^t(k)` keyed by `(p, k)`, optionally backed by a JSONL file.
#[derive(Debug, Default)]
pub struct EvalCache {
    polys: RwLock<HashMap<Key, Vec<u64>>>,
    strict: RwLock<HashMap<Key, FpScalar>>,
    fresh: RwLock<Vec<Key>>,
    path: Option<PathBuf>,
}

fn parse_record(line: &str) -> Option<CacheRecord> {
    let rec: CacheRecord = serde_json::from_str(line).ok()?;
    let valid = super::is_odd_prime(rec.p)
        && !rec.index.contains(&0)
        && rec.tcoeffs.len() <= rec.index.len().max(1)
        && rec.tcoeffs.last() != Some(&0)
        && rec.tcoeffs.iter().all(|&c| c < rec.p);
    valid.then_some(rec)
}

impl EvalCache {
    /// In-memory only.
    pub fn new() -> Self {
        Self::default()
    }

    /// Loads `dir/fmzv-cache.jsonl` (if present) and remembers the file for
    /// [`EvalCache::persist`]. Malformed lines are skipped and reported.
    pub fn open(dir: &Path) -> Result<(Self, LoadStats)> {
        fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        let path = dir.join(CACHE_FILE);
        let mut polys = HashMap::new();
        let mut stats = LoadStats::default();
        if path.exists() {
            let file = File::open(&path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
            for (i, line) in BufReader::new(file).lines().enumerate() {
                let line = line.map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
                if line.trim().is_empty() {
                    continue;
                }
                match parse_record(&line) {
                    Some(rec) => {
                        polys.insert((rec.p, Index::of(&rec.index)), rec.tcoeffs);
                        stats.loaded += 1;
                    }
                    None => stats.malformed.push(i + 1),
                }
            }
        }
        let cache = Self {
            polys: RwLock::new(polys),
            path: Some(path),
            ..Self::default()
        };
        Ok((cache, stats))
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.polys.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, p: u64, k: &Index) -> Option<FpPoly> {
        let key = (p, k.clone());
        self.polys
            .read()
            .expect("cache lock")
            .get(&key)
            .map(|c| FpPoly::from_coeffs(p, c.clone()))
    }

    pub fn strict(&self, ctx: &PrimeCtx, k: &Index) -> FpScalar {
        let key = (ctx.p(), k.clone());
        if let Some(&v) = self.strict.read().expect("cache lock").get(&key) {
            return v;
        }
        let v = fmzv_eval(ctx, k, false);
        self.strict.write().expect("cache lock").insert(key, v);
        v
    }

    pub fn t_eval(&self, ctx: &PrimeCtx, k: &Index) -> Result<FpPoly> {
        if let Some(q) = self.get(ctx.p(), k) {
            return Ok(q);
        }
        let q = t_poly_from_strict(ctx, k, |c| self.strict(ctx, c))?;
        let key = (ctx.p(), k.clone());
        let mut polys = self.polys.write().expect("cache lock");
        if !polys.contains_key(&key) {
            polys.insert(key.clone(), q.coeffs().to_vec());
            self.fresh.write().expect("cache lock").push(key);
        }
        Ok(q)
    }

    /// Appends entries computed since opening, sorted by `(p, index)`.
    /// Returns the number of records written; a no-op without a backing file.
    pub fn persist(&self) -> Result<usize> {
        let Some(path) = &self.path else {
            return Ok(0);
        };
        let mut fresh = std::mem::take(&mut *self.fresh.write().expect("cache lock"));
        if fresh.is_empty() {
            return Ok(0);
        }
        fresh.sort();
        let polys = self.polys.read().expect("cache lock");
        let err = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        let mut file = OpenOptions::new().create(true).append(true).open(path).map_err(err)?;
        let mut buf = String::new();
        for key in &fresh {
            let rec = CacheRecord {
                p: key.0,
                index: key.1.parts().to_vec(),
                tcoeffs: polys[key].clone(),
            };
            buf.push_str(&serde_json::to_string(&rec).expect("record serializes"));
            buf.push('\n');
        }
        file.write_all(buf.as_bytes()).map_err(err)?;
        Ok(fresh.len())
    }
}
