use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One transversal solve, one line of the record log.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub problem: String,
    pub k: usize,
    pub n: usize,
    pub instance_index: usize,
    pub derived_seed: u64,
    pub osculation_type: Vec<usize>,
    pub points: Vec<String>,
    pub num_real: usize,
    pub num_complex: usize,
    pub transversal: bool,
    pub elapsed_ms: u64,
    pub chart: String,
}

impl InstanceRecord {
    /// `num_real <= num_complex`, with equal parity when transversal.
    pub fn is_consistent(&self) -> bool {
        self.num_real <= self.num_complex && (!self.transversal || (self.num_complex - self.num_real).is_multiple_of(2))
    }
}

/// A sample that did not produce a record, kept for auditing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscardRecord {
    pub problem: String,
    pub osculation_type: Vec<usize>,
    pub instance_index: usize,
    pub attempt: usize,
    pub derived_seed: u64,
    pub points: Vec<String>,
    /// `non-transversal`, `resource`, `degenerate` or `sampling`, then details.
    pub reason: String,
}

/// The sidecar log of discarded samples next to `log`.
pub fn discarded_log_path(log: &Path) -> PathBuf {
    let mut name = log.file_name().map(|s| s.to_os_string()).unwrap_or_default();
    name.push(".discarded");
    log.with_file_name(name)
}

/// Parses a line-delimited log. A torn final line (no newline, or not
/// parseable) from an interrupted run is cut off the file; corruption
/// anywhere else is an error.
fn read_lines<T: DeserializeOwned>(path: &Path, repair: bool) -> Result<Vec<T>> {
    if !path.exists() {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut good_bytes = 0u64;
    let mut reader = BufReader::new(File::open(path)?);
    let mut line = String::new();
    let mut lineno = 0;
    loop {
        line.clear();
        let read = reader.read_line(&mut line)?;
        if read == 0 {
            break;
        }
        lineno += 1;
        let complete = line.ends_with('\n');
        match serde_json::from_str::<T>(line.trim_end()) {
            Ok(v) if complete => {
                out.push(v);
                good_bytes += read as u64;
            }
            parsed => {
                let at_end = reader.fill_buf()?.is_empty();
                if !at_end {
                    let why = parsed.err().map_or_else(|| "missing newline".to_string(), |e| e.to_string());
                    return Err(Error::Parse(format!("{}:{lineno}: {why}", path.display())));
                }
                if repair {
                    OpenOptions::new().write(true).open(path)?.set_len(good_bytes)?;
                }
                break;
            }
        }
    }
    Ok(out)
}

/// All complete records of a log.
pub fn read_log(path: &Path) -> Result<Vec<InstanceRecord>> {
    read_lines(path, false)
}

pub fn read_discarded(path: &Path) -> Result<Vec<DiscardRecord>> {
    read_lines(path, false)
}

pub(crate) fn read_log_repairing(path: &Path) -> Result<Vec<InstanceRecord>> {
    read_lines(path, true)
}

pub(crate) fn read_discarded_repairing(path: &Path) -> Result<Vec<DiscardRecord>> {
    read_lines(path, true)
}

/// Rewrites a log with exactly these entries.
pub(crate) fn rewrite<T: Serialize>(path: &Path, items: &[T]) -> Result<()> {
    let tmp = path.with_extension("rewrite.tmp");
    {
        let mut f = File::create(&tmp)?;
        for it in items {
            writeln!(f, "{}", serde_json::to_string(it)?)?;
        }
        f.sync_all()?;
    }
    fs::rename(tmp, path)?;
    Ok(())
}

pub(crate) fn append<T: Serialize>(path: &Path, items: &[T]) -> Result<()> {
    if items.is_empty() {
        return Ok(());
    }
    let mut buf = String::new();
    for it in items {
        buf.push_str(&serde_json::to_string(it)?);
        buf.push('\n');
    }
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    f.write_all(buf.as_bytes())?;
    f.flush()?;
    Ok(())
}
