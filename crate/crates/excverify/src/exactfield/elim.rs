//! Exact elimination: incremental reduced row echelon form, rank, null space,
//! span membership and inverses.

use super::cyc::CycNum;
use super::sparse::{Accum, ExactMatrix, SVec};
use super::FieldError;

/// Reduced row echelon form built one row at a time.
///
/// Every stored row has a unit pivot and vanishes in all other pivot columns, so
/// reducing a vector needs a single pass over its pivot-column entries. Each row
/// optionally carries the combination of inserted vectors that produced it.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SVec>,
    combos: Option<Vec<SVec>>,
    pivot_cols: Vec<usize>,
    row_of_col: Vec<Option<usize>>,
    inserted: usize,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), combos: None, pivot_cols: Vec::new(), row_of_col: vec![None; ncols], inserted: 0 }
    }

    /// Track, for every row, the combination of inserted vectors it equals.
    pub fn with_combinations(ncols: usize) -> Self {
        let mut e = Self::new(ncols);
        e.combos = Some(Vec::new());
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Pivot-column coefficients of v, i.e. the multipliers of each stored row.
    fn multipliers(&self, v: &SVec) -> Vec<(usize, CycNum)> {
        v.entries()
            .iter()
            .filter_map(|(c, x)| self.row_of_col[*c].map(|r| (r, x.clone())))
            .collect()
    }

    /// v minus its projection onto the stored rows.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mult = self.multipliers(v);
        if mult.is_empty() {
            return v.clone();
        }
        let mut acc = Accum::new(self.ncols);
        acc.add_scaled(&CycNum::one(), v);
        for (r, m) in &mult {
            acc.add_scaled(&m.neg(), &self.rows[*r]);
        }
        acc.take()
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert v; returns true when v was independent of the stored rows.
    pub fn insert(&mut self, v: &SVec) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let mult = self.multipliers(v);
        let mut acc = Accum::new(self.ncols);
        acc.add_scaled(&CycNum::one(), v);
        for (r, m) in &mult {
            acc.add_scaled(&m.neg(), &self.rows[*r]);
        }
        let red = acc.take();
        if red.is_zero() {
            return false;
        }
        let mut combo = None;
        if let Some(combos) = &self.combos {
            let n = self.inserted.max(1);
            let mut cacc = Accum::new(n);
            cacc.add_entry(idx, &CycNum::one());
            for (r, m) in &mult {
                cacc.add_scaled(&m.neg(), &combos[*r]);
            }
            combo = Some(cacc.take());
        }
        // cheapest pivot: small coefficient, ties to the lowest column
        let (pc, pv) = red
            .entries()
            .iter()
            .min_by_key(|(c, x)| (x.weight(), *c))
            .map(|(c, x)| (*c, x.clone()))
            .expect("nonzero row");
        let inv = pv.inv().expect("nonzero pivot");
        let row = red.scale(&inv);
        let combo = combo.map(|c| c.scale(&inv));
        // clear the new pivot column from existing rows
        for r in 0..self.rows.len() {
            if let Some(f) = self.rows[r].get_ref(pc).cloned() {
                let nf = f.neg();
                self.rows[r] = self.rows[r].axpy(&nf, &row);
                if let (Some(combos), Some(c)) = (&mut self.combos, &combo) {
                    combos[r] = combos[r].axpy(&nf, c);
                }
            }
        }
        self.row_of_col[pc] = Some(self.rows.len());
        self.pivot_cols.push(pc);
        self.rows.push(row);
        if let (Some(combos), Some(c)) = (&mut self.combos, combo) {
            combos.push(c);
        }
        true
    }

    /// Basis of the solution space of {x : row·x = 0 for every stored row}.
    pub fn kernel(&self) -> Vec<SVec> {
        let mut free: Vec<usize> = (0..self.ncols).filter(|c| self.row_of_col[*c].is_none()).collect();
        free.sort_unstable();
        let mut free_pos = vec![usize::MAX; self.ncols];
        for (k, &f) in free.iter().enumerate() {
            free_pos[f] = k;
        }
        let mut parts: Vec<Vec<(usize, CycNum)>> = free.iter().map(|&f| vec![(f, CycNum::one())]).collect();
        for (r, row) in self.rows.iter().enumerate() {
            let p = self.pivot_cols[r];
            for (c, v) in row.entries() {
                if *c != p {
                    parts[free_pos[*c]].push((p, v.neg()));
                }
            }
        }
        parts.into_iter().map(SVec::from_pairs).collect()
    }

    /// Coefficients of v in terms of the inserted vectors, when v is in their span.
    /// Requires combination tracking.
    pub fn solve(&self, v: &SVec) -> Option<SVec> {
        let combos = self.combos.as_ref().expect("echelon built without combinations");
        let mult = self.multipliers(v);
        let mut acc = Accum::new(self.ncols);
        acc.add_scaled(&CycNum::one(), v);
        for (r, m) in &mult {
            acc.add_scaled(&m.neg(), &self.rows[*r]);
        }
        if !acc.take().is_zero() {
            return None;
        }
        let mut cacc = Accum::new(self.inserted.max(1));
        for (r, m) in &mult {
            cacc.add_scaled(m, &combos[*r]);
        }
        Some(cacc.take())
    }
}

pub fn rank(m: &ExactMatrix) -> usize {
    let mut e = Echelon::new(m.ncols());
    for row in m.rows_iter() {
        e.insert(row);
    }
    e.rank()
}

pub fn rank_of_vectors(ncols: usize, vs: &[SVec]) -> usize {
    let mut e = Echelon::new(ncols);
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

/// Null space basis of M, certified by checking M·x = 0 for every vector.
pub fn nullspace(m: &ExactMatrix) -> Result<Vec<SVec>, FieldError> {
    let mut e = Echelon::new(m.ncols());
    for row in m.rows_iter() {
        e.insert(row);
    }
    let ker = e.kernel();
    for v in &ker {
        if !m.mul_vec(v).is_zero() {
            return Err(FieldError::Certification("null space vector with nonzero residual".into()));
        }
    }
    Ok(ker)
}

/// Null space of the system whose rows are given directly.
pub fn nullspace_rows(ncols: usize, rows: &[SVec]) -> Result<Vec<SVec>, FieldError> {
    nullspace(&ExactMatrix::from_rows(ncols, rows.to_vec()))
}

/// Solver for repeated coordinate queries against a fixed basis.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    ech: Echelon,
    len: usize,
}

impl SpanSolver {
    /// Basis vectors must be linearly independent.
    pub fn new(ncols: usize, basis: &[SVec]) -> Result<Self, FieldError> {
        let mut ech = Echelon::with_combinations(ncols);
        for (k, b) in basis.iter().enumerate() {
            if !ech.insert(b) {
                return Err(FieldError::DependentBasis(k));
            }
        }
        Ok(SpanSolver { ech, len: basis.len() })
    }

    pub fn dim(&self) -> usize {
        self.len
    }

    /// Exact coefficients, or None when v lies outside the span.
    pub fn express(&self, v: &SVec) -> Option<SVec> {
        self.ech.solve(v)
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.ech.contains(v)
    }
}

/// One-shot span membership: coefficients of v over `basis`.
pub fn express_in_span(v: &SVec, basis: &[SVec], ncols: usize) -> Result<Option<SVec>, FieldError> {
    Ok(SpanSolver::new(ncols, basis)?.express(v))
}

/// Inverse of a square matrix by Gauss–Jordan on [M | I].
pub fn inverse(m: &ExactMatrix) -> Result<ExactMatrix, FieldError> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(FieldError::Shape("inverse of non-square matrix".into()));
    }
    // rows of M^T are columns of M; solving M^T-combinations gives the inverse transpose
    let cols = m.transpose();
    let mut e = Echelon::with_combinations(n);
    for row in cols.rows_iter() {
        if !e.insert(row) {
            return Err(FieldError::Singular);
        }
    }
    // e_i = Σ_k c_ik (row k of M^T)  ⇒  C·M^T = I  ⇒  M^{-1} = C^T
    let mut c_rows = Vec::with_capacity(n);
    for i in 0..n {
        let c = e.solve(&SVec::unit(i)).ok_or(FieldError::Singular)?;
        c_rows.push(c);
    }
    Ok(ExactMatrix::from_rows(n, c_rows).transpose())
}
