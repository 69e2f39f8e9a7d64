//! Persisted `n_d` values: a JSON object mapping decimal degrees to decimal counts.

use std::collections::BTreeMap;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};

use curvecount_core::MemoTable;
use num_bigint::BigInt;

use crate::CliError;

fn corrupt(path: &Path, reason: impl Into<String>) -> CliError {
    CliError::Cache {
        path: path.to_path_buf(),
        reason: reason.into(),
    }
}

/// Reads the cache; a missing file is an empty table.
pub fn load(path: &Path) -> Result<MemoTable, CliError> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == ErrorKind::NotFound => return Ok(MemoTable::new()),
        Err(e) => return Err(corrupt(path, e.to_string())),
    };
    let raw: BTreeMap<String, String> =
        serde_json::from_str(&text).map_err(|e| corrupt(path, e.to_string()))?;
    let mut values = Vec::with_capacity(raw.len());
    for (d, n) in raw {
        let degree: u32 = d
            .parse()
            .ok()
            .filter(|d| *d >= 1)
            .ok_or_else(|| corrupt(path, format!("bad degree key `{d}`")))?;
        let count: BigInt = n
            .parse()
            .ok()
            .filter(|n: &BigInt| n.sign() != num_bigint::Sign::Minus)
            .ok_or_else(|| corrupt(path, format!("bad value `{n}` for degree {d}")))?;
        values.push((degree, count));
    }
    MemoTable::from_cache(values).map_err(|e| corrupt(path, e.to_string()))
}

/// Replaces the cache file atomically with the table's current values.
pub fn store(path: &Path, table: &MemoTable) -> Result<(), CliError> {
    let map: BTreeMap<String, String> = table
        .values()
        .into_iter()
        .map(|(d, n)| (d.to_string(), n.to_string()))
        .collect();
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let io = |e: std::io::Error| corrupt(path, e.to_string());
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(io)?;
    serde_json::to_writer_pretty(&mut tmp, &map).map_err(|e| corrupt(path, e.to_string()))?;
    tmp.write_all(b"\n").map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_cold_start() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("memo.json");
        let t = load(&path).unwrap();
        t.nd(6).unwrap();
        store(&path, &t).unwrap();
        let back = load(&path).unwrap();
        assert_eq!(back.values(), t.values());
    }

    #[test]
    fn corrupted_file_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("memo.json");
        for bad in [
            "not json",
            r#"{"x": "1"}"#,
            r#"{"2": "1.5"}"#,
            r#"{"0": "1"}"#,
            r#"{"1": "2"}"#,
        ] {
            std::fs::write(&path, bad).unwrap();
            assert!(matches!(load(&path), Err(CliError::Cache { .. })), "{bad}");
        }
    }
}
