//! JSON group files.
//!
//! Two shapes are accepted:
//!
//! ```text
//! {"name": "Z2", "order": 2, "table": [[0, 1], [1, 0]]}
//! {"name": "S3", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}
//! ```
//!
//! Table entries and permutation images are 0-based indices.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDocument {
    Table {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        order: usize,
        table: Vec<Vec<usize>>,
    },
    Permutations {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl GroupDocument {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupDocument::Table {
            name: g.name().map(str::to_owned),
            order: g.order(),
            table: g.table_rows(),
        }
    }

    pub fn into_group(self, limits: &Limits) -> Result<FiniteGroup> {
        match self {
            GroupDocument::Table { name, order, table } => {
                if order != table.len() {
                    return Err(Error::OrderMismatch {
                        declared: order,
                        rows: table.len(),
                    });
                }
                FiniteGroup::from_table(name, &table, limits)
            }
            GroupDocument::Permutations {
                name,
                degree,
                generators,
            } => FiniteGroup::from_permutations(name, degree, &generators, limits).map(|(g, _)| g),
        }
    }
}

/// Parses and validates a group document.
pub fn load_group(document: &str, limits: &Limits) -> Result<FiniteGroup> {
    let value: serde_json::Value = serde_json::from_str(document)?;
    let doc: GroupDocument =
        serde_json::from_value(value).map_err(|_| Error::UnrecognizedDocument)?;
    doc.into_group(limits)
}

pub fn load_group_file(path: impl AsRef<Path>, limits: &Limits) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    load_group(&text, limits)
}

/// Serializes a group as a table document.
pub fn group_to_json(g: &FiniteGroup) -> String {
    serde_json::to_string(&GroupDocument::from_group(g)).expect("group documents always serialize")
}
