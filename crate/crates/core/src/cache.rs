//! Structure-constant cache for parallel-strand reductions, with an optional
//! JSON-lines file form.
//!
//! The file starts with a header line carrying a fingerprint of the boundary
//! conventions; a file whose fingerprint differs is ignored as a whole.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use dashmap::DashMap;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::diagram::{fmt_signs, parse_diagram, BoundaryCoefficients, Sign, SkeinElement};
use crate::error::{Error, Result};
use crate::expr::parse_element;

pub const FORMAT: &str = "skeinlab-cache";
pub const VERSION: u32 = 1;

type Key = (Vec<Sign>, Vec<Sign>);

static PARALLEL: Lazy<DashMap<Key, SkeinElement>> = Lazy::new(DashMap::new);

pub(crate) fn lookup_parallel(mu: &[Sign], nu: &[Sign]) -> Option<SkeinElement> {
    PARALLEL.get(&(mu.to_vec(), nu.to_vec())).map(|r| r.value().clone())
}

pub(crate) fn store_parallel(mu: &[Sign], nu: &[Sign], value: &SkeinElement) {
    PARALLEL.insert((mu.to_vec(), nu.to_vec()), value.clone());
}

/// Number of cached parallel reductions held in memory.
pub fn memory_entries() -> usize {
    PARALLEL.len()
}

/// Drops every in-memory entry.
pub fn clear_memory() {
    PARALLEL.clear();
}

/// Convention fingerprint written into cache headers.
pub fn fingerprint() -> String {
    let bc = BoundaryCoefficients::standard();
    let mut parts = Vec::new();
    for u in Sign::BOTH {
        for l in Sign::BOTH {
            parts.push(format!("C{}{}={}", u.as_char(), l.as_char(), bc.c(u, l)));
            parts.push(format!("Cbar{}{}={}", u.as_char(), l.as_char(), bc.cbar(u, l)));
        }
    }
    let (es, ea) = bc.east_exchange();
    let (ws, wa) = bc.west_exchange();
    parts.push(format!("east=({es}|{ea})"));
    parts.push(format!("west=({ws}|{wa})"));
    parts.push("cross=(q|q^-1)".into());
    parts.join(";")
}

#[derive(Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    fingerprint: String,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    value: String,
}

fn key_string(mu: &[Sign], nu: &[Sign]) -> String {
    format!("tangle({}){{}} west={} east={}", mu.len(), fmt_signs(mu), fmt_signs(nu))
}

/// Outcome of loading a cache file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadOutcome {
    Missing,
    Loaded(usize),
    /// The file was written under different conventions and was ignored.
    Stale,
}

/// Merges a cache file into memory.
pub fn load(path: &Path) -> Result<LoadOutcome> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(LoadOutcome::Missing),
        Err(e) => return Err(e.into()),
    };
    let mut lines = BufReader::new(file).lines();
    let header: Header = match lines.next() {
        Some(line) => serde_json::from_str(&line?).map_err(|e| Error::Io(format!("bad cache header: {e}")))?,
        None => return Ok(LoadOutcome::Missing),
    };
    if header.format != FORMAT || header.version != VERSION || header.fingerprint != fingerprint() {
        return Ok(LoadOutcome::Stale);
    }
    let mut n = 0;
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let entry: Entry = serde_json::from_str(&line).map_err(|e| Error::Io(format!("bad cache entry: {e}")))?;
        let d = parse_diagram(&entry.key)?;
        if !d.word().slices().is_empty() {
            return Err(Error::Io(format!("cache key `{}` is not parallel", entry.key)));
        }
        let value: SkeinElement = parse_element(&entry.value)?;
        store_parallel(d.west_states(), d.east_states(), &value);
        n += 1;
    }
    Ok(LoadOutcome::Loaded(n))
}

/// Writes every in-memory entry, sorted by key, replacing the file.
pub fn save(path: &Path) -> Result<usize> {
    let mut entries: Vec<(String, String)> = PARALLEL
        .iter()
        .map(|r| (key_string(&r.key().0, &r.key().1), r.value().to_string()))
        .collect();
    entries.sort();
    let mut w = BufWriter::new(File::create(path)?);
    let header = Header {
        format: FORMAT.into(),
        version: VERSION,
        fingerprint: fingerprint(),
    };
    writeln!(w, "{}", serde_json::to_string(&header).expect("header serializes"))?;
    for (key, value) in &entries {
        let line = serde_json::to_string(&Entry {
            key: key.clone(),
            value: value.clone(),
        })
        .expect("entry serializes");
        writeln!(w, "{line}")?;
    }
    w.flush()?;
    Ok(entries.len())
}
