//! Append-only JSONL certificate store.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use flagcert::certify::Certificate;
use flagcert::ParabolicShape;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "flagcert-certificates";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub schema: String,
    pub version: u32,
    pub library: String,
    pub shape: String,
    /// Symbolic top-row values, one per block.
    pub blocks: Vec<String>,
}

impl Header {
    pub fn new(shape: &ParabolicShape) -> Self {
        Header {
            schema: SCHEMA.into(),
            version: SCHEMA_VERSION,
            library: flagcert::VERSION.into(),
            shape: shape.to_string(),
            blocks: (1..=shape.k() + 1).map(|l| format!("a{l}")).collect(),
        }
    }
}

/// Append certificates, writing the header first if the file is new or empty.
pub fn append(path: &Path, shape: &ParabolicShape, certs: &[Certificate]) -> Result<()> {
    let fresh = std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    if !fresh {
        read_header(path)?;
    }
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening {}", path.display()))?;
    if fresh {
        writeln!(file, "{}", serde_json::to_string(&Header::new(shape))?)?;
    }
    for c in certs {
        writeln!(file, "{}", serde_json::to_string(c)?)?;
    }
    Ok(())
}

pub fn read_header(path: &Path) -> Result<Header> {
    let file = std::fs::File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let mut first = String::new();
    BufReader::new(file).read_line(&mut first)?;
    let header: Header = serde_json::from_str(first.trim()).context("store header")?;
    if header.schema != SCHEMA || header.version != SCHEMA_VERSION {
        bail!("{} is not a version {SCHEMA_VERSION} certificate store", path.display());
    }
    Ok(header)
}

pub fn read(path: &Path) -> Result<(Header, Vec<Certificate>)> {
    let header = read_header(path)?;
    let file = std::fs::File::open(path)?;
    let mut certs = Vec::new();
    for (k, line) in BufReader::new(file).lines().enumerate().skip(1) {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        certs.push(serde_json::from_str(&line).with_context(|| format!("line {}", k + 1))?);
    }
    Ok((header, certs))
}
