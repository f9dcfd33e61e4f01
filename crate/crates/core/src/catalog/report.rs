use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::record::Catalog;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::search::{is_multifold, MultifoldReport, SearchOptions, Verdict};
use crate::structure::is_supersolvable;

/// A witness reduced to its shape, how it was obtained and a digest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDigest {
    pub shape: String,
    pub method: String,
    pub digest: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationEntry {
    pub id: String,
    pub order: usize,
    pub supersolvable: bool,
    /// `multifold`, `not-multifold` or `undecided`.
    pub multifold: String,
    /// For `not-multifold` this shape was exhausted by complete search; for
    /// `undecided` the budget ran out on it.
    pub failing_shape: Option<String>,
    pub witnesses: Vec<WitnessDigest>,
    pub nodes: u64,
    pub millis: u64,
}

impl ClassificationEntry {
    pub fn new(id: &str, g: &GroupTable, r: &MultifoldReport) -> Self {
        let multifold = match r.verdict {
            Verdict::Multifold => "multifold",
            Verdict::NotMultifold => "not-multifold",
            Verdict::Undecided => "undecided",
        };
        ClassificationEntry {
            id: id.to_string(),
            order: g.order(),
            supersolvable: is_supersolvable(g),
            multifold: multifold.into(),
            failing_shape: r.failing_shape.as_ref().map(|s| s.to_string()),
            witnesses: r
                .witnesses
                .iter()
                .map(|w| WitnessDigest {
                    shape: w.shape.to_string(),
                    method: serde_json::to_value(w.method)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_string))
                        .unwrap_or_default(),
                    digest: w.factorization.digest(),
                })
                .collect(),
            nodes: r.stats.nodes,
            millis: r.stats.millis,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub entries: Vec<ClassificationEntry>,
}

impl ClassificationReport {
    /// Sorts by order, then id.
    pub fn new(mut entries: Vec<ClassificationEntry>) -> Self {
        entries.sort_by(|a, b| (a.order, &a.id).cmp(&(b.order, &b.id)));
        ClassificationReport { entries }
    }

    pub fn non_multifold(&self) -> Vec<&str> {
        self.entries.iter().filter(|e| e.multifold == "not-multifold").map(|e| e.id.as_str()).collect()
    }
}

/// Classifies every record of order at most `max_order` on a pool of `jobs`
/// threads; each group is searched with `opts`.
pub fn classify_catalog(
    catalog: &Catalog,
    max_order: usize,
    opts: &SearchOptions,
    jobs: usize,
) -> Result<ClassificationReport> {
    let ids: Vec<&str> =
        catalog.records.iter().filter(|r| r.expected_order <= max_order).map(|r| r.id.as_str()).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Catalog(e.to_string()))?;
    let entries = pool.install(|| {
        ids.par_iter()
            .map(|id| classify_group(id, &catalog.build(id)?, opts))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(ClassificationReport::new(entries))
}

/// Classifies one group.
pub fn classify_group(id: &str, g: &GroupTable, opts: &SearchOptions) -> Result<ClassificationEntry> {
    let r = is_multifold(g, opts)?;
    Ok(ClassificationEntry::new(id, g, &r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            other => Err(Error::Parse { line: 1, column: 1, message: format!("unknown format `{other}`") }),
        }
    }
}

/// The columns written to CSV.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub id: String,
    pub order: usize,
    pub supersolvable: bool,
    pub multifold: String,
    pub failing_shape: Option<String>,
    pub nodes: u64,
    pub millis: u64,
}

impl From<&ClassificationEntry> for CsvRow {
    fn from(e: &ClassificationEntry) -> Self {
        CsvRow {
            id: e.id.clone(),
            order: e.order,
            supersolvable: e.supersolvable,
            multifold: e.multifold.clone(),
            failing_shape: e.failing_shape.clone(),
            nodes: e.nodes,
            millis: e.millis,
        }
    }
}

/// Deterministic bytes; entries are written in (order, id) order.
pub fn emit_report(report: &ClassificationReport, format: ReportFormat) -> Vec<u8> {
    let sorted = ClassificationReport::new(report.entries.clone());
    match format {
        ReportFormat::Json => {
            let mut v = serde_json::to_vec_pretty(&sorted).expect("serializable");
            v.push(b'\n');
            v
        }
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
            w.write_record(["id", "order", "supersolvable", "multifold", "failing_shape", "nodes", "millis"])
                .expect("in-memory write");
            for e in &sorted.entries {
                w.serialize(CsvRow::from(e)).expect("in-memory write");
            }
            w.into_inner().expect("in-memory write")
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for e in &sorted.entries {
                let fail = e.failing_shape.as_deref().unwrap_or("-");
                s.push_str(&format!(
                    "{:<14} {:>4}  {:<14} supersolvable={:<5} failing={fail} nodes={}\n",
                    e.id, e.order, e.multifold, e.supersolvable, e.nodes
                ));
            }
            s.into_bytes()
        }
    }
}

/// Reads back the CSV produced by [`emit_report`].
pub fn parse_csv_report(bytes: &[u8]) -> Result<Vec<CsvRow>> {
    let mut r = csv::ReaderBuilder::new().has_headers(false).from_reader(bytes);
    let mut rows = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| Error::Parse { line: i + 1, column: 1, message: e.to_string() })?;
        if i == 0 {
            continue;
        }
        let row: CsvRow =
            rec.deserialize(None).map_err(|e| Error::Parse { line: i + 1, column: 1, message: e.to_string() })?;
        rows.push(row);
    }
    Ok(rows)
}
