//! Sparse vectors and matrices over Q(ζ24).

use serde::{Deserialize, Serialize};

use super::cyc::CycNum;
use super::FieldError;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SVec {
    entries: Vec<(usize, CycNum)>,
}

impl SVec {
    pub fn new() -> Self {
        SVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SVec { entries: vec![(i, CycNum::one())] }
    }

    pub fn single(i: usize, v: CycNum) -> Self {
        if v.is_zero() {
            SVec::new()
        } else {
            SVec { entries: vec![(i, v)] }
        }
    }

    /// Build from unordered pairs; duplicates are summed.
    pub fn from_pairs(mut pairs: Vec<(usize, CycNum)>) -> Self {
        pairs.sort_by_key(|p| p.0);
        let mut out: Vec<(usize, CycNum)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match out.last_mut() {
                Some((j, w)) if *j == i => *w = w.add(&v),
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SVec { entries: out }
    }

    pub fn from_dense(v: &[CycNum]) -> Self {
        SVec {
            entries: v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<CycNum> {
        let mut out = vec![CycNum::zero(); n];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, CycNum)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, CycNum)> {
        self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> CycNum {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => CycNum::zero(),
        }
    }

    pub fn get_ref(&self, i: usize) -> Option<&CycNum> {
        self.entries.binary_search_by_key(&i, |e| e.0).ok().map(|p| &self.entries[p].1)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn scale(&self, s: &CycNum) -> SVec {
        if s.is_zero() {
            return SVec::new();
        }
        if s.is_one() {
            return self.clone();
        }
        SVec { entries: self.entries.iter().map(|(i, v)| (*i, v.mul(s))).collect() }
    }

    pub fn neg(&self) -> SVec {
        SVec { entries: self.entries.iter().map(|(i, v)| (*i, v.neg())).collect() }
    }

    pub fn conj(&self) -> SVec {
        SVec { entries: self.entries.iter().map(|(i, v)| (*i, v.conj())).collect() }
    }

    /// self + s·other
    pub fn axpy(&self, s: &CycNum, other: &SVec) -> SVec {
        if s.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while a < x.len() || b < y.len() {
            if b >= y.len() || (a < x.len() && x[a].0 < y[b].0) {
                out.push(x[a].clone());
                a += 1;
            } else if a >= x.len() || y[b].0 < x[a].0 {
                out.push((y[b].0, y[b].1.mul(s)));
                b += 1;
            } else {
                let v = x[a].1.add(&y[b].1.mul(s));
                if !v.is_zero() {
                    out.push((x[a].0, v));
                }
                a += 1;
                b += 1;
            }
        }
        SVec { entries: out }
    }

    pub fn add(&self, other: &SVec) -> SVec {
        self.axpy(&CycNum::one(), other)
    }

    pub fn sub(&self, other: &SVec) -> SVec {
        self.axpy(&CycNum::from_i64(-1), other)
    }

    pub fn dot(&self, other: &SVec) -> CycNum {
        let (x, y) = (&self.entries, &other.entries);
        let (mut a, mut b) = (0, 0);
        let mut acc = CycNum::zero();
        while a < x.len() && b < y.len() {
            match x[a].0.cmp(&y[b].0) {
                std::cmp::Ordering::Less => a += 1,
                std::cmp::Ordering::Greater => b += 1,
                std::cmp::Ordering::Equal => {
                    acc = acc.add(&x[a].1.mul(&y[b].1));
                    a += 1;
                    b += 1;
                }
            }
        }
        acc
    }

    /// Relabel indices by an offset.
    pub fn shifted(&self, offset: usize) -> SVec {
        SVec { entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect() }
    }

    /// Entries with index in [lo, hi), relabelled to start at 0.
    pub fn slice(&self, lo: usize, hi: usize) -> SVec {
        SVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, v)| (i - lo, v.clone()))
                .collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.is_real())
    }
}

/// Accumulates a linear combination of sparse vectors in a dense buffer.
pub struct Accum {
    buf: Vec<CycNum>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Accum {
    pub fn new(n: usize) -> Self {
        Accum { buf: vec![CycNum::zero(); n], touched: Vec::new(), mark: vec![false; n] }
    }

    pub fn add_entry(&mut self, i: usize, v: &CycNum) {
        if v.is_zero() {
            return;
        }
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
            self.buf[i] = v.clone();
        } else {
            self.buf[i] = self.buf[i].add(v);
        }
    }

    pub fn add_scaled(&mut self, s: &CycNum, v: &SVec) {
        if s.is_zero() {
            return;
        }
        if s.is_one() {
            for (i, x) in v.entries() {
                self.add_entry(*i, x);
            }
        } else {
            for (i, x) in v.entries() {
                self.add_entry(*i, &x.mul(s));
            }
        }
    }

    pub fn take(&mut self) -> SVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.mark[i] = false;
            let v = std::mem::take(&mut self.buf[i]);
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        SVec { entries: out }
    }
}

/// Sparse matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SVec>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![SVec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, CycNum::one())
    }

    pub fn scalar(n: usize, s: CycNum) -> Self {
        ExactMatrix { rows: n, cols: n, data: (0..n).map(|i| SVec::single(i, s.clone())).collect() }
    }

    pub fn from_rows(cols: usize, rows: Vec<SVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.max_index().is_none_or(|m| m < cols)));
        ExactMatrix { rows: rows.len(), cols, data: rows }
    }

    /// Build from columns (each a sparse vector of length `rows`).
    pub fn from_cols(rows: usize, cols: &[SVec]) -> Self {
        let mut buckets: Vec<Vec<(usize, CycNum)>> = vec![Vec::new(); rows];
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.entries() {
                buckets[*i].push((j, v.clone()));
            }
        }
        ExactMatrix {
            rows,
            cols: cols.len(),
            data: buckets.into_iter().map(SVec::from_pairs).collect(),
        }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<(usize, usize, CycNum)>) -> Result<Self, FieldError> {
        let mut buckets: Vec<Vec<(usize, CycNum)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(FieldError::Shape(format!("entry ({r},{c}) outside {rows}x{cols}")));
            }
            buckets[r].push((c, v));
        }
        Ok(ExactMatrix { rows, cols, data: buckets.into_iter().map(SVec::from_pairs).collect() })
    }

    pub fn from_dense(rows: &[Vec<CycNum>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        ExactMatrix { rows: rows.len(), cols, data: rows.iter().map(|r| SVec::from_dense(r)).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SVec {
        &self.data[i]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &SVec> {
        self.data.iter()
    }

    pub fn get(&self, r: usize, c: usize) -> CycNum {
        self.data[r].get(c)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.nnz()).sum()
    }

    pub fn entries(&self) -> Vec<(usize, usize, CycNum)> {
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.entries() {
                out.push((r, *c, v.clone()));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut buckets: Vec<Vec<(usize, CycNum)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.entries() {
                buckets[*c].push((r, v.clone()));
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            data: buckets.into_iter().map(|b| SVec { entries: b }).collect(),
        }
    }

    pub fn col(&self, j: usize) -> SVec {
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            if let Some(v) = row.get_ref(j) {
                out.push((r, v.clone()));
            }
        }
        SVec { entries: out }
    }

    pub fn cols_vec(&self) -> Vec<SVec> {
        self.transpose().data
    }

    pub fn conj(&self) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| r.conj()).collect() }
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| r.scale(s)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&CycNum::from_i64(-1))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut acc = Accum::new(other.cols);
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, v) in row.entries() {
                    acc.add_scaled(v, &other.data[*k]);
                }
                acc.take()
            })
            .collect();
        ExactMatrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn mul_vec(&self, v: &SVec) -> SVec {
        let entries: Vec<(usize, CycNum)> = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(i, row)| {
                let d = row.dot(v);
                (!d.is_zero()).then_some((i, d))
            })
            .collect();
        SVec { entries }
    }

    /// Commutator self·other − other·self.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Row-major flattening to a vector of length rows·cols.
    pub fn flatten(&self) -> SVec {
        let mut out = Vec::with_capacity(self.nnz());
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.entries() {
                out.push((r * self.cols + c, v.clone()));
            }
        }
        SVec { entries: out }
    }

    pub fn unflatten(rows: usize, cols: usize, v: &SVec) -> Self {
        let mut data = vec![Vec::new(); rows];
        for (i, x) in v.entries() {
            data[i / cols].push((i % cols, x.clone()));
        }
        ExactMatrix { rows, cols, data: data.into_iter().map(|e| SVec { entries: e }).collect() }
    }

    /// Stack rows of several matrices with equal column counts.
    pub fn vstack(parts: &[&ExactMatrix]) -> Self {
        let cols = parts.first().map_or(0, |p| p.cols);
        let mut data = Vec::new();
        for p in parts {
            assert_eq!(p.cols, cols, "column mismatch in vstack");
            data.extend(p.data.iter().cloned());
        }
        ExactMatrix { rows: data.len(), cols, data }
    }

    pub fn trace(&self) -> CycNum {
        let mut acc = CycNum::zero();
        for i in 0..self.rows.min(self.cols) {
            if let Some(v) = self.data[i].get_ref(i) {
                acc = acc.add(v);
            }
        }
        acc
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|r| r.is_real())
    }
}

/// Wire format of a matrix: {rows, cols, entries: [[r, c, cyc], ...]}.
#[derive(Serialize, Deserialize)]
pub struct MatrixWire {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, CycNum)>,
}

impl Serialize for ExactMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixWire { rows: self.rows, cols: self.cols, entries: self.entries() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = MatrixWire::deserialize(d)?;
        ExactMatrix::from_entries(w.rows, w.cols, w.entries).map_err(serde::de::Error::custom)
    }
}

impl Serialize for SVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SVec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let e: Vec<(usize, CycNum)> = Vec::deserialize(d)?;
        Ok(SVec::from_pairs(e))
    }
}
