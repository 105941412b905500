//! File formats and deterministic number formatting.
//!
//! Covariance matrices travel as JSON documents
//! `{"convention": "vacuum_half", "matrix": [[..4 floats..]; 4]}` in
//! quadrature order `(q1, p1, q2, p2)`; homodyne samples as CSV with header
//! `q1,p1,q2,p2`, one shot per row. All emitted floats carry exactly nine
//! significant digits so identical inputs produce byte-identical outputs.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use snwitness_core::covariance::CovarianceMatrix;
use std::io::Write;
use std::path::Path;

/// The only supported unit convention: vacuum variance 1/2.
pub const CONVENTION: &str = "vacuum_half";

/// On-disk covariance matrix document.
#[derive(Debug, Serialize, Deserialize)]
pub struct CmDocument {
    pub convention: String,
    pub matrix: [[f64; 4]; 4],
}

impl CmDocument {
    pub fn new(cm: &CovarianceMatrix) -> Self {
        CmDocument {
            convention: CONVENTION.to_string(),
            matrix: *cm.matrix(),
        }
    }
}

/// Read and validate a covariance matrix from a JSON document.
pub fn read_cm(path: &Path) -> Result<CovarianceMatrix> {
    let raw =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let doc: CmDocument = serde_json::from_str(&raw)
        .with_context(|| format!("malformed CM JSON {}", path.display()))?;
    if doc.convention != CONVENTION {
        bail!(
            "unsupported convention {:?}; this tool works in {CONVENTION} units",
            doc.convention
        );
    }
    CovarianceMatrix::new(doc.matrix).map_err(|e| anyhow::anyhow!("invalid covariance matrix: {e}"))
}

/// Read homodyne samples: header `q1,p1,q2,p2`, decimal points, one
/// four-tuple per row.
pub fn read_samples(path: &Path) -> Result<Vec<[f64; 4]>> {
    let raw =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut lines = raw.lines();
    let header = lines.next().context("empty samples file")?;
    let cols: Vec<&str> = header.split(',').map(str::trim).collect();
    if cols != ["q1", "p1", "q2", "p2"] {
        bail!("expected header q1,p1,q2,p2, got {header:?}");
    }
    let mut records = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            bail!(
                "line {}: expected 4 fields, got {}",
                lineno + 2,
                fields.len()
            );
        }
        let mut rec = [0.0; 4];
        for (k, f) in fields.iter().enumerate() {
            rec[k] = f
                .parse::<f64>()
                .with_context(|| format!("line {}: bad number {f:?}", lineno + 2))?;
        }
        records.push(rec);
    }
    Ok(records)
}

/// SHA-256 of a file, hex encoded.
pub fn file_sha256(path: &Path) -> Result<String> {
    use sha2::{Digest, Sha256};
    let bytes = std::fs::read(path)?;
    let digest = Sha256::digest(&bytes);
    let mut hex = String::with_capacity(64);
    for b in digest {
        use std::fmt::Write as _;
        let _ = write!(hex, "{b:02x}");
    }
    Ok(hex)
}

/// Format with exactly nine significant digits: fixed notation for
/// moderate exponents, scientific otherwise. Deterministic by
/// construction; shortest-round-trip formatting is not used.
pub fn fmt_g9(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000".to_string();
    }
    let sci = format!("{x:.8e}");
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-4..13).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

/// `serde_json` formatter that routes all floats through [`fmt_g9`].
pub struct G9Formatter;

impl serde_json::ser::Formatter for G9Formatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        writer.write_all(fmt_g9(value).as_bytes())
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        writer.write_all(fmt_g9(value as f64).as_bytes())
    }
}

/// Serialize to pretty-ish JSON with nine-significant-digit floats and a
/// trailing newline.
pub fn to_json_g9<T: Serialize>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, G9Formatter);
    value.serialize(&mut ser)?;
    let mut s = String::from_utf8(out)?;
    s.push('\n');
    Ok(s)
}
