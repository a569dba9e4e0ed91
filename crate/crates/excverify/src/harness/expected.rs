use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::Provenance;

/// Expected values shipped with the crate (`data/expected.json`).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExpectedData {
    pub schema_version: u32,
    pub table1: Vec<Table1Row>,
    pub table2: Vec<Table2Row>,
    pub lemmas: Vec<LemmaRow>,
    pub bases: Vec<BasisRow>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table1Row {
    pub row: String,
    pub algebra: String,
    pub sigma: String,
    pub tau: String,
    pub k: String,
    pub dim: usize,
    pub center: usize,
    pub derived: usize,
    pub types: Vec<String>,
    pub type_dims: Vec<usize>,
    pub provenance: Provenance,
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table2Row {
    pub row: String,
    pub algebra: String,
    pub map: String,
    pub k: String,
    pub dim: usize,
    pub provenance: Provenance,
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LemmaRow {
    pub id: String,
    pub algebra: String,
    pub maps: Vec<String>,
    pub dim: usize,
    pub provenance: Provenance,
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisRow {
    pub algebra: String,
    pub dim: usize,
    pub provenance: Provenance,
    pub note: String,
}

pub fn expected_data() -> &'static ExpectedData {
    static DATA: OnceLock<ExpectedData> = OnceLock::new();
    DATA.get_or_init(|| serde_json::from_str(include_str!("../../data/expected.json")).expect("bundled expected.json parses"))
}
