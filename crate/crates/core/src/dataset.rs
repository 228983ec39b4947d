//! The bundled example tables and their line-delimited JSON format.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

/// One published example row: a twist word on a genus-`genus` surface whose
/// stretch factor has the stated algebraic degree. The minimal polynomial
/// and the three-decimal stretch value are only published for the first two
/// tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub table: u32,
    pub genus: u32,
    pub degree: usize,
    pub word: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minpoly: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
}

impl TableRow {
    pub fn minpoly_parsed(&self) -> Result<Option<IntPoly>> {
        match &self.minpoly {
            None => Ok(None),
            Some(s) => Ok(Some(IntPoly::parse_csv(s)?)),
        }
    }
}

/// Parses line-delimited JSON rows.
pub fn parse_jsonl(text: &str) -> Result<Vec<TableRow>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: TableRow = serde_json::from_str(line)
            .map_err(|e| Error::InputError(format!("row {}: {e}", idx + 1)))?;
        out.push(row);
    }
    if out.is_empty() {
        return Err(Error::InputError("empty dataset".into()));
    }
    Ok(out)
}

pub fn to_jsonl(rows: &[TableRow]) -> String {
    rows.iter()
        .map(|r| serde_json::to_string(r).expect("row serializes"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// The tables shipped with the crate.
pub fn bundled_tables() -> Vec<TableRow> {
    parse_jsonl(include_str!("../data/tables.jsonl")).expect("bundled dataset parses")
}
