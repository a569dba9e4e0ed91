use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cayley;
use crate::e8::BracketRows;
use crate::exactfield::{SVec, SemilinearOp};
use crate::liealg::{AlgebraId, BasisData, StructureTable};

pub const CACHE_SCHEMA_VERSION: u32 = 1;

/// Bracket-row resolution used for every cached e8 table.
pub const BRACKET_ROWS: BracketRows = BracketRows::Standard;

/// sha256 over the octonion table and the e8 bracket-row resolution.
pub fn convention_fingerprint() -> String {
    let mut h = Sha256::new();
    h.update(format!("cache-schema={CACHE_SCHEMA_VERSION}\n"));
    h.update(cayley::table_fingerprint_text());
    h.update(format!("\nbracket-rows={}\n", BRACKET_ROWS.name()));
    format!("{:x}", h.finalize())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisCache {
    pub schema_version: u32,
    pub convention_fingerprint: String,
    pub algebra_id: AlgebraId,
    pub vectors: Vec<SVec>,
    pub bracket_table: StructureTable,
    pub conj: SemilinearOp,
    /// flattened basis matrices for g2, f4, e6; empty otherwise
    pub matrices: Vec<SVec>,
}

impl BasisCache {
    pub fn from_data(d: &BasisData) -> Self {
        BasisCache {
            schema_version: CACHE_SCHEMA_VERSION,
            convention_fingerprint: convention_fingerprint(),
            algebra_id: d.id,
            vectors: d.vectors.clone(),
            bracket_table: d.table.clone(),
            conj: d.conj.clone(),
            matrices: d.matrices.clone(),
        }
    }

    pub fn into_data(self) -> BasisData {
        BasisData { id: self.algebra_id, table: self.bracket_table, conj: self.conj, vectors: self.vectors, matrices: self.matrices }
    }
}

pub fn cache_path(dir: &Path, id: AlgebraId) -> PathBuf {
    dir.join(format!("{}.basis.json", id.name()))
}

/// Load a cached basis. Missing files, parse errors and stale fingerprints all
/// yield None; the latter two are logged.
pub fn load(dir: &Path, id: AlgebraId) -> Option<BasisData> {
    let path = cache_path(dir, id);
    let text = fs::read_to_string(&path).ok()?;
    let cache: BasisCache = match serde_json::from_str(&text) {
        Ok(c) => c,
        Err(e) => {
            log::warn!("ignoring unreadable cache {}: {e}", path.display());
            return None;
        }
    };
    if cache.schema_version != CACHE_SCHEMA_VERSION || cache.convention_fingerprint != convention_fingerprint() {
        log::warn!("ignoring stale cache {} (fingerprint mismatch)", path.display());
        return None;
    }
    if cache.algebra_id != id || cache.vectors.len() != id.dim() || cache.bracket_table.dim() != id.dim() {
        log::warn!("ignoring inconsistent cache {}", path.display());
        return None;
    }
    Some(cache.into_data())
}

/// Write through a temporary file so concurrent readers never see a partial cache.
pub fn store(dir: &Path, data: &BasisData) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, data.id);
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let text = serde_json::to_string(&BasisCache::from_data(data)).map_err(std::io::Error::other)?;
    fs::write(&tmp, text)?;
    fs::rename(&tmp, &path)
}
