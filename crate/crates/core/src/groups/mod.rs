//! Finite groups as explicit multiplication tables.

mod abelian;
mod group;
mod presets;
mod series;
mod subgroup;

pub use abelian::AbQuot;
pub use group::{Elem, FiniteGroup};
pub use presets::{alternating, build_preset, cyclic, dihedral, heisenberg, quaternion8, symmetric, DEFAULT_MAX_ORDER};
pub use series::{GroupSeries, SeriesKind};
pub use subgroup::Subgroup;

use serde::Deserialize;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("identity law fails for element {a} (element 0 must be the identity)")]
    Identity { a: usize },
    #[error("associativity fails for the triple ({a}, {b}, {c})")]
    Associativity { a: usize, b: usize, c: usize },
    #[error("element {a} has no inverse")]
    Inverse { a: usize },
    #[error("group {name} exceeds the order bound {max}")]
    BoundExceeded { name: String, max: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("section is not abelian")]
    NotAbelianSection,
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error("cannot read group file: {0}")]
    Io(String),
}

/// On-disk group definition: `order`, optional `labels`, and the table rows.
#[derive(Debug, Deserialize)]
pub struct TableFile {
    pub order: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub name: Option<String>,
}

impl FiniteGroup {
    pub fn from_table_file(t: TableFile, max_order: usize) -> Result<Self, GroupError> {
        if t.order > max_order {
            return Err(GroupError::BoundExceeded { name: t.name.unwrap_or_else(|| "table".into()), max: max_order });
        }
        if t.table.len() != t.order {
            return Err(GroupError::InvalidTable(format!("order {} but {} rows", t.order, t.table.len())));
        }
        FiniteGroup::from_table(t.name.unwrap_or_else(|| "table".into()), t.table, t.labels)
    }

    pub fn from_json_str(s: &str, max_order: usize) -> Result<Self, GroupError> {
        let t: TableFile = serde_json::from_str(s).map_err(|e| GroupError::InvalidTable(e.to_string()))?;
        Self::from_table_file(t, max_order)
    }

    pub fn load_table(path: &Path, max_order: usize) -> Result<Self, GroupError> {
        let s = std::fs::read_to_string(path).map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&s, max_order)
    }
}

#[cfg(test)]
mod tests;
