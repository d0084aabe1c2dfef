//! Append-only JSON-lines store of evaluation records.
//!
//! One record per line. Appends are fsynced; reads parse the whole file and
//! fail fast on any unparseable line. Single writer, any number of readers;
//! no cross-process locking is provided.

use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::Path;

use thiserror::Error;

use super::EvaluationRecord;

#[derive(Debug, Error)]
pub enum HistoryError {
    #[error("history store: {0}")]
    Io(#[from] std::io::Error),
    #[error("history store line {line}: {message}")]
    CorruptStore { line: usize, message: String },
}

/// Append one record to the store, creating the file if needed.
pub fn append_history(store_path: &Path, record: &EvaluationRecord) -> Result<(), HistoryError> {
    let mut line = serde_json::to_string(record).expect("evaluation records always serialize");
    line.push('\n');
    let mut file: File = OpenOptions::new()
        .create(true)
        .append(true)
        .open(store_path)?;
    file.write_all(line.as_bytes())?;
    file.sync_all()?;
    Ok(())
}

/// Every record in the store, in file order.
///
/// A missing file is an empty history. Any line that does not parse as a
/// record fails the whole read with its line number.
pub fn read_all(store_path: &Path) -> Result<Vec<EvaluationRecord>, HistoryError> {
    if !store_path.exists() {
        return Ok(Vec::new());
    }
    let contents = std::fs::read_to_string(store_path)?;
    let mut records = Vec::new();
    for (idx, line) in contents.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(line).map_err(|e| HistoryError::CorruptStore {
            line: idx + 1,
            message: e.to_string(),
        })?;
        records.push(record);
    }
    Ok(records)
}

/// One student's records, sorted by timestamp (stable for ties).
pub fn history(store_path: &Path, student_id: &str) -> Result<Vec<EvaluationRecord>, HistoryError> {
    let mut records: Vec<EvaluationRecord> = read_all(store_path)?
        .into_iter()
        .filter(|r| r.student_id == student_id)
        .collect();
    records.sort_by_key(|r| r.timestamp);
    Ok(records)
}
