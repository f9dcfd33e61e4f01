//! Catalog files (JSON lines), the bundled registry, and classification
//! reports.

mod record;
mod report;

use std::sync::OnceLock;

pub use record::{
    check_tags, element, BuiltGroup, Catalog, CatalogRecord, Construction, GroupRef, MatrixGenerator, PermGenerator,
    TagCheck,
};
pub use report::{
    classify_catalog, classify_group, emit_report, parse_csv_report, ClassificationEntry, ClassificationReport, CsvRow, ReportFormat,
    WitnessDigest,
};

use crate::error::{Error, Result};
use crate::group::{cyclic, GroupTable};

const REGISTRY: &str = include_str!("registry.jsonl");

/// The bundled registry.
pub fn registry() -> &'static Catalog {
    static CELL: OnceLock<Catalog> = OnceLock::new();
    CELL.get_or_init(|| Catalog::parse(REGISTRY).expect("bundled registry parses"))
}

/// A registry group by id (case-insensitive fallback), or `C<n>` for any
/// cyclic group.
pub fn named_group(name: &str) -> Result<GroupTable> {
    if registry().get(name).is_some() {
        return registry().build(name);
    }
    if let Some(n) = name.strip_prefix('C').and_then(|d| d.parse::<usize>().ok()) {
        return cyclic(n);
    }
    Err(Error::UnknownName(name.to_string()))
}

pub fn load_catalog(path: impl AsRef<std::path::Path>) -> Result<Catalog> {
    Catalog::load(path)
}
