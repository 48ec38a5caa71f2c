//! The per-run CSV schema shared by `solve` and `report`.

use serde::{Deserialize, Serialize};

pub const CSV_COLUMNS: [&str; 15] = [
    "instance",
    "n",
    "m",
    "dim",
    "model",
    "separation",
    "objective",
    "bound",
    "status",
    "seconds",
    "nodes",
    "cuts_asym",
    "cuts_conn",
    "cuts_cpc",
    "cuts_star",
];

/// One row per (instance, variant) pair.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RunRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    /// Number of coparallel classes, i.e. the polytope dimension.
    pub dim: usize,
    pub model: String,
    pub separation: String,
    pub objective: i64,
    pub bound: f64,
    pub status: String,
    pub seconds: f64,
    pub nodes: usize,
    pub cuts_asym: usize,
    pub cuts_conn: usize,
    pub cuts_cpc: usize,
    pub cuts_star: usize,
}

impl RunRecord {
    pub fn finished(&self) -> bool {
        self.status == "optimal"
    }

    pub fn variant(&self) -> String {
        format!("{}/{}", self.model, self.separation)
    }

    pub fn is_complete_graph(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }
}

pub fn write_records(path: &std::path::Path, records: &[RunRecord]) -> anyhow::Result<()> {
    let mut writer = csv::Writer::from_path(path)?;
    for record in records {
        writer.serialize(record)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_records(path: &std::path::Path) -> anyhow::Result<Vec<RunRecord>> {
    let mut reader = csv::Reader::from_path(path)?;
    let headers = reader.headers()?.clone();
    let expected: Vec<&str> = CSV_COLUMNS.to_vec();
    let got: Vec<&str> = headers.iter().collect();
    anyhow::ensure!(
        got == expected,
        "inconsistent CSV header: expected {expected:?}, got {got:?}"
    );
    let mut out = Vec::new();
    for row in reader.deserialize() {
        out.push(row?);
    }
    Ok(out)
}

/// Parse records from CSV text (used by the fuzz target and tests).
pub fn parse_records(text: &str) -> anyhow::Result<Vec<RunRecord>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for row in reader.deserialize() {
        out.push(row?);
    }
    Ok(out)
}

pub fn records_to_string(records: &[RunRecord]) -> anyhow::Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.serialize(record)?;
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}
