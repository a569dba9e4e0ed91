use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use serde::Serialize;

use crate::e8::E8Space;
use crate::liealg::{
    build_e7, build_e8, build_matrix_algebra, AlgebraId, BasisData, E7Coords, LieBasis, MatrixRep, Representation,
};

use super::cache::{self, BRACKET_ROWS};

pub const DEFAULT_SEED: u64 = 0x005e_ede8;
pub const DEFAULT_SAMPLE: usize = 500;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    /// pair count for sampled automorphism checks
    pub sample: usize,
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: DEFAULT_SEED, sample: DEFAULT_SAMPLE, jobs: 1, cache_dir: None }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BasisSource {
    pub source: &'static str,
    pub millis: u64,
}

type Slot<T> = OnceLock<Result<T, String>>;

/// Lazily computed (or cache-loaded) bases shared by all checks of a run.
pub struct Context {
    pub config: RunConfig,
    bases: [Slot<Arc<LieBasis>>; 5],
    sources: Mutex<BTreeMap<AlgebraId, BasisSource>>,
    memo: Mutex<HashMap<String, Arc<Slot<serde_json::Value>>>>,
}

fn slot_index(id: AlgebraId) -> usize {
    AlgebraId::ALL.iter().position(|a| *a == id).expect("listed algebra")
}

impl Context {
    pub fn new(config: RunConfig) -> Self {
        Context {
            config,
            bases: Default::default(),
            sources: Mutex::new(BTreeMap::new()),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn basis(&self, id: AlgebraId) -> Result<Arc<LieBasis>, String> {
        self.bases[slot_index(id)].get_or_init(|| self.load_or_build(id)).clone()
    }

    pub fn e8_space(&self) -> Result<Arc<E8Space>, String> {
        match &self.basis(AlgebraId::E8)?.rep {
            Representation::E8(sp) => Ok(sp.clone()),
            _ => Err("e8 basis without e8 space".into()),
        }
    }

    pub fn sources(&self) -> BTreeMap<AlgebraId, BasisSource> {
        self.sources.lock().expect("sources lock").clone()
    }

    /// Compute a JSON value once per key; later calls reuse it.
    pub fn memo(&self, key: &str, f: impl FnOnce() -> Result<serde_json::Value, String>) -> Result<serde_json::Value, String> {
        let slot = self.memo.lock().expect("memo lock").entry(key.to_string()).or_default().clone();
        slot.get_or_init(f).clone()
    }

    fn load_or_build(&self, id: AlgebraId) -> Result<Arc<LieBasis>, String> {
        let t = Instant::now();
        let cached = self.config.cache_dir.as_deref().and_then(|d| cache::load(d, id));
        let (basis, source) = match cached {
            Some(data) => match self.from_data(data) {
                Ok(b) => (b, "cache"),
                Err(e) => {
                    log::warn!("cache for {id} unusable ({e}); recomputing");
                    (self.build(id)?, "computed")
                }
            },
            None => (self.build(id)?, "computed"),
        };
        if source == "computed" {
            if let Some(dir) = &self.config.cache_dir {
                if let Err(e) = cache::store(dir, &basis.to_data()) {
                    log::warn!("could not write cache for {id}: {e}");
                }
            }
        }
        let millis = t.elapsed().as_millis() as u64;
        log::info!("{id}: basis {source} in {millis} ms");
        self.sources.lock().expect("sources lock").insert(id, BasisSource { source, millis });
        Ok(Arc::new(basis))
    }

    fn e6_rep(&self) -> Result<Arc<MatrixRep>, String> {
        match &self.basis(AlgebraId::E6)?.rep {
            Representation::Matrix(m) => Ok(m.clone()),
            _ => Err("e6 basis without matrices".into()),
        }
    }

    fn e7_parts(&self) -> Result<(Arc<E7Coords>, Arc<LieBasis>), String> {
        let b = self.basis(AlgebraId::E7)?;
        match &b.rep {
            Representation::E7(c) => Ok((c.clone(), b.clone())),
            _ => Err("e7 basis without coordinates".into()),
        }
    }

    fn build(&self, id: AlgebraId) -> Result<LieBasis, String> {
        let err = |e: crate::liealg::LieError| e.to_string();
        match id {
            AlgebraId::G2 | AlgebraId::F4 => build_matrix_algebra(id).map_err(err),
            AlgebraId::E6 => build_matrix_algebra(id).map_err(err),
            AlgebraId::E7 => build_e7(Arc::new(E7Coords::new(self.e6_rep()?))).map_err(err),
            AlgebraId::E8 => {
                let (coords, e7) = self.e7_parts()?;
                let space = E8Space::new(coords, e7.table.clone()).map_err(err)?;
                build_e8(Arc::new(space), BRACKET_ROWS).map_err(err)
            }
        }
    }

    fn from_data(&self, d: BasisData) -> Result<LieBasis, String> {
        let err = |e: crate::liealg::LieError| e.to_string();
        let rep = match d.id {
            AlgebraId::G2 | AlgebraId::F4 | AlgebraId::E6 => {
                let n = if d.id == AlgebraId::G2 { 8 } else { crate::jordan::DIM };
                Representation::Matrix(Arc::new(MatrixRep::from_flat(n, &d.matrices).map_err(err)?))
            }
            AlgebraId::E7 => Representation::E7(Arc::new(E7Coords::new(self.e6_rep()?))),
            AlgebraId::E8 => {
                let (coords, e7) = self.e7_parts()?;
                Representation::E8(Arc::new(E8Space::new(coords, e7.table.clone()).map_err(err)?))
            }
        };
        LieBasis::with_vectors(d.id, rep, d.table, d.conj, d.vectors).map_err(err)
    }
}
