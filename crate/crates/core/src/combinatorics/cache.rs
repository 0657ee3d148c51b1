//! On-disk cache of swap tables as
//! `{"d": int, "convention": "down-up-v1", "s": ["decimal", ...]}`.
//!
//! The convention tag is part of both the file name and the payload, so a
//! convention change can never serve a stale table.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{swap_table_capped, SwapTable, CONVENTION};
use crate::error::{Error, Result};
use crate::Integer;

#[derive(Serialize, Deserialize)]
struct CachedTable {
    d: usize,
    convention: String,
    #[serde(with = "super::swap::decimal_vec")]
    s: Vec<Integer>,
}

pub fn swap_table_cache_path(dir: &Path, d: usize) -> PathBuf {
    dir.join(format!("swap-{CONVENTION}-d{d}.json"))
}

impl SwapTable {
    pub fn to_cache_json(&self) -> String {
        let cached = CachedTable { d: self.d, convention: CONVENTION.to_string(), s: self.s.clone() };
        serde_json::to_string(&cached).expect("swap table serializes")
    }

    pub fn from_cache_json(text: &str) -> Result<Self> {
        let cached: CachedTable = serde_json::from_str(text).map_err(|e| Error::Cache(e.to_string()))?;
        if cached.convention != CONVENTION {
            return Err(Error::Cache(format!("convention {:?}, expected {CONVENTION:?}", cached.convention)));
        }
        Ok(SwapTable { d: cached.d, s: cached.s })
    }
}

/// Load the table for `d` from `dir`, computing and storing it on a miss.
/// A file that fails to parse or names the wrong dimension is recomputed
/// and overwritten.
pub fn cached_swap_table(dir: &Path, d: usize, cap: usize) -> Result<SwapTable> {
    let path = swap_table_cache_path(dir, d);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(t) = SwapTable::from_cache_json(&text) {
            if t.d == d {
                return Ok(t);
            }
        }
    }
    let table = swap_table_capped(d, cap)?;
    fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
    fs::write(&path, table.to_cache_json()).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    Ok(table)
}
