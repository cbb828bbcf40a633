//! Determination tables: for each transitive subgroup of `S_3`, `S_4`, `S_5`
//! the set of cycle types it contains.
//!
//! The tables ship as versioned JSON embedded in the binary and are what the
//! determination pipeline consumes. [`engine_table`] recomputes the same rows
//! from the permutation-group engine so the two can be compared.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::factor_type::FactorType;
use crate::perm_groups::{cycle_type_set, transitive_subgroups, GroupError, NamedGroup, PermGroup};

pub const TABLE_FORMAT_VERSION: u32 = 1;

const EMBEDDED: &str = include_str!("../data/tables.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSet {
    pub version: u32,
    pub tables: Vec<DeterminationTable>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminationTable {
    pub degree: usize,
    pub groups: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub name: String,
    pub order: usize,
    pub types: BTreeSet<FactorType>,
}

impl TableRow {
    /// Whether every observed type occurs in this group.
    pub fn admits(&self, observed: &BTreeSet<FactorType>) -> bool {
        observed.is_subset(&self.types)
    }

    /// Whether the group lies in `A_n`, read off its cycle types.
    pub fn is_even(&self) -> bool {
        self.types.iter().all(FactorType::is_even_permutation)
    }
}

impl DeterminationTable {
    pub fn row(&self, name: &str) -> Option<&TableRow> {
        self.groups.iter().find(|r| r.name == name)
    }
}

/// The embedded tables; panics if the embedded data is malformed, which the
/// test suite rules out.
pub fn embedded_tables() -> &'static TableSet {
    static TABLES: OnceLock<TableSet> = OnceLock::new();
    TABLES.get_or_init(|| {
        let set: TableSet = serde_json::from_str(EMBEDDED).expect("embedded tables parse");
        assert_eq!(set.version, TABLE_FORMAT_VERSION, "embedded table version");
        set
    })
}

pub fn table(degree: usize) -> Option<&'static DeterminationTable> {
    embedded_tables().tables.iter().find(|t| t.degree == degree)
}

fn engine_groups(degree: usize) -> Result<&'static [NamedGroup], GroupError> {
    static GROUPS: OnceLock<Vec<Vec<NamedGroup>>> = OnceLock::new();
    if !(3..=5).contains(&degree) {
        return Err(GroupError::UnsupportedDegree(degree));
    }
    let all = GROUPS.get_or_init(|| {
        (3..=5)
            .map(|n| transitive_subgroups(n).expect("degree in range"))
            .collect()
    });
    Ok(&all[degree - 3])
}

/// A transitive group from the engine's classification, by name.
pub fn transitive_group(degree: usize, name: &str) -> Option<&'static PermGroup> {
    engine_groups(degree)
        .ok()?
        .iter()
        .find(|g| g.name == name)
        .map(|g| &g.group)
}

/// Table rows recomputed from the group engine, ordered by group order.
pub fn engine_table(degree: usize) -> Result<DeterminationTable, GroupError> {
    let groups = engine_groups(degree)?
        .iter()
        .map(|g| {
            Ok(TableRow {
                name: g.name.to_string(),
                order: g.group.order(),
                types: cycle_type_set(&g.group)?,
            })
        })
        .collect::<Result<_, GroupError>>()?;
    Ok(DeterminationTable { degree, groups })
}
