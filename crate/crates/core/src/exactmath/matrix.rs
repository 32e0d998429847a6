use std::collections::BTreeMap;

use super::{Field, Scalar};
use crate::error::Result;

/// Sparse vector: column index -> nonzero entry.
pub type SparseVec<T> = BTreeMap<usize, T>;

fn add_scaled<T: Scalar>(acc: &mut SparseVec<T>, v: &SparseVec<T>, c: &T) {
    for (k, x) in v {
        let prod = c.clone() * x.clone();
        match acc.remove(k) {
            Some(old) => {
                let s = old + prod;
                if !s.is_zero() {
                    acc.insert(*k, s);
                }
            }
            None => {
                if !prod.is_zero() {
                    acc.insert(*k, prod);
                }
            }
        }
    }
}

/// Exact matrix stored as sparse rows. Entries are any [`Scalar`]; rank and
/// span computations need a [`Field`].
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec<T>>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            rows: vec![SparseVec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(nrows, ncols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged matrix");
            for (j, x) in row.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.rows[i].get(&j).cloned().unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, x: T) {
        assert!(i < self.nrows && j < self.ncols);
        if x.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, x);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: T) {
        let cur = self.get(i, j);
        self.set(i, j, cur + x);
    }

    pub fn row(&self, i: usize) -> &SparseVec<T> {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec<T>] {
        &self.rows
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for (i, j, x) in self.entries() {
            t.set(j, i, x.clone());
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in product");
        let mut out = Self::zeros(self.nrows, other.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = SparseVec::new();
            for (k, a) in row {
                add_scaled(&mut acc, &other.rows[*k], a);
            }
            out.rows[i] = acc;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut out = self.clone();
        for (i, r) in other.rows.iter().enumerate() {
            add_scaled(&mut out.rows[i], r, &T::one());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zeros(self.nrows, self.ncols);
        if c.is_zero() {
            return out;
        }
        for (i, j, x) in self.entries() {
            out.set(i, j, c.clone() * x.clone());
        }
        out
    }

    /// `self ⊗ other` with row index `i * other.nrows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.nrows * other.nrows, self.ncols * other.ncols);
        for (i, j, a) in self.entries() {
            for (k, l, b) in other.entries() {
                out.set(i * other.nrows + k, j * other.ncols + l, a.clone() * b.clone());
            }
        }
        out
    }

    /// Entrywise image under `f`, e.g. specialization `q -> q0`.
    pub fn try_map<U: Scalar>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        let mut out = Matrix::zeros(self.nrows, self.ncols);
        for (i, j, x) in self.entries() {
            out.set(i, j, f(x)?);
        }
        Ok(out)
    }

    /// Row-major flattening into one vector of length `nrows * ncols`.
    pub fn flatten(&self) -> SparseVec<T> {
        self.entries()
            .map(|(i, j, x)| (i * self.ncols + j, x.clone()))
            .collect()
    }

    /// Column `j` as a sparse vector.
    pub fn column(&self, j: usize) -> SparseVec<T> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.get(&j).map(|x| (i, x.clone())))
            .collect()
    }

    /// First entry (row-major) where the matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        let d = self.sub(other);
        let first = d.entries().next().map(|(i, j, _)| (i, j));
        first
    }
}

impl<T: Field> Matrix<T> {
    pub fn rank(&self) -> usize {
        matrix_rank(self)
    }
}

/// Exact rank by Gaussian elimination on the rows.
pub fn matrix_rank<T: Field>(m: &Matrix<T>) -> usize {
    let mut basis = SpanBasis::new();
    for r in &m.rows {
        basis.insert(r.clone());
    }
    basis.rank()
}

/// Row-echelon basis of a growing subspace. Rows are normalized so their
/// pivot entry is one; pivots are the smallest column index of each row.
#[derive(Clone, Debug, Default)]
pub struct SpanBasis<T> {
    rows: BTreeMap<usize, SparseVec<T>>,
}

impl<T: Field> SpanBasis<T> {
    pub fn new() -> Self {
        Self {
            rows: BTreeMap::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = SparseVec<T>>>(it: I) -> Self {
        let mut b = Self::new();
        for v in it {
            b.insert(v);
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after eliminating every known pivot.
    pub fn reduce(&self, mut v: SparseVec<T>) -> SparseVec<T> {
        let mut floor = 0;
        loop {
            let Some((&p, c)) = v.range(floor..).next() else {
                return v;
            };
            match self.rows.get(&p) {
                Some(row) => {
                    let c = -c.clone();
                    add_scaled(&mut v, row, &c);
                }
                None => floor = p + 1,
            }
        }
    }

    /// Adds `v`; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: SparseVec<T>) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.try_inv().expect("nonzero pivot");
        let r: SparseVec<T> = r
            .into_iter()
            .map(|(k, x)| (k, x * inv.clone()))
            .collect();
        self.rows.insert(p, r);
        true
    }

    pub fn contains(&self, v: &SparseVec<T>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// `true` iff every basis vector of `other` lies in `self`.
    pub fn contains_span(&self, other: &Self) -> bool {
        other.rows.values().all(|v| self.contains(v))
    }

    pub fn same_span(&self, other: &Self) -> bool {
        self.rank() == other.rank() && self.contains_span(other)
    }

    pub fn vectors(&self) -> impl Iterator<Item = &SparseVec<T>> + '_ {
        self.rows.values()
    }
}
