//! File formats read and written by the CLI.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use metaqa_core::{Diagnostic, TaggedSentence, TeachRequest, TrainingPair};
use serde_json::Value;

/// Writes `bytes` to `path` via a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create a temporary file in {}", dir.display()))?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

/// Reads a JSON array of `{decl, interrogatives}` training records.
pub fn read_pairs(path: &Path) -> Result<Vec<TrainingPair>> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let values: Vec<Value> = serde_json::from_str(&text)
        .with_context(|| format!("{} is not a JSON array", path.display()))?;
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| serde_json::from_value(v).with_context(|| format!("record {i} of {}", path.display())))
        .collect()
}

/// A line of a JSON-lines sentence file.
pub enum InputLine {
    Sentence(TaggedSentence),
    Invalid(Diagnostic),
}

/// Reads tagged sentences, one JSON object per non-blank line. Bad lines
/// become diagnostics.
pub fn read_sentences(path: &Path) -> Result<Vec<InputLine>> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(n, l)| match TaggedSentence::from_json(l) {
            Ok(ts) => InputLine::Sentence(ts),
            Err(e) => InputLine::Invalid(Diagnostic::error(
                Some(format!("line {}", n + 1)),
                format!("unreadable sentence: {e}"),
            )),
        })
        .collect())
}

pub fn read_queue(path: &Path) -> Result<Vec<TeachRequest>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let text = fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        match serde_json::from_str(line) {
            Ok(r) => out.push(r),
            Err(e) => bail!("{} line {}: {e}", path.display(), n + 1),
        }
    }
    Ok(out)
}

pub fn queue_lines(requests: &[TeachRequest]) -> String {
    requests
        .iter()
        .map(|r| serde_json::to_string(r).expect("teach requests serialize") + "\n")
        .collect()
}

/// Adds requests to a queue file, skipping ids already queued.
pub fn append_queue(path: &Path, requests: &[TeachRequest]) -> Result<usize> {
    let mut queue = read_queue(path)?;
    let before = queue.len();
    for r in requests {
        if !queue.iter().any(|q| q.id == r.id) {
            queue.push(r.clone());
        }
    }
    write_atomic(path, queue_lines(&queue).as_bytes())?;
    Ok(queue.len() - before)
}
