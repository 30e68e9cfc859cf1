//! Subspaces in canonical reduced row-echelon form, subspace lattice
//! operations, and explicit quotient maps.
//!
//! A subspace always stores the unique RREF basis of its row span, so two
//! subspaces are equal as sets exactly when they are equal as values. That
//! makes flag deduplication and radical cross-checks plain `==` comparisons.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Matrix, RowReducer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<K: Field> {
    field: K,
    ambient: usize,
    /// Basis rows in canonical RREF; no zero rows.
    basis: Vec<Vec<K::Elem>>,
    pivots: Vec<usize>,
}

impl<K: Field> Subspace<K> {
    pub fn zero(field: K, ambient: usize) -> Self {
        Subspace { field, ambient, basis: vec![], pivots: vec![] }
    }

    pub fn full(field: K, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace { field, ambient, basis: rows, pivots: (0..ambient).collect() }
    }

    /// Canonicalize a spanning set.
    pub fn from_rows(field: K, ambient: usize, rows: Vec<Vec<K::Elem>>) -> Self {
        let mut red = RowReducer::new(field.clone(), ambient);
        for r in rows {
            assert_eq!(r.len(), ambient, "spanning vector has wrong length");
            red.insert(r);
        }
        Subspace { field, ambient, basis: red.rows().to_vec(), pivots: red.pivots().to_vec() }
    }

    pub fn span_of(vectors: &[Vec<K::Elem>], field: K, ambient: usize) -> Self {
        Self::from_rows(field, ambient, vectors.to_vec())
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<K::Elem>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix<K> {
        let mut m = Matrix::zero(self.field.clone(), self.dim(), self.ambient);
        for (i, row) in self.basis.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivots
    }

    fn reducer(&self) -> RowReducer<K> {
        let mut red = RowReducer::new(self.field.clone(), self.ambient);
        for r in &self.basis {
            red.insert(r.clone());
        }
        red
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reducer().contains(v)
    }

    /// Coefficients of `v` on the canonical basis, if `v` is a member.
    pub fn coords(&self, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        self.reducer().coords(v)
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Self::from_rows(self.field.clone(), self.ambient, rows))
    }

    pub fn add_vector(&self, v: &[K::Elem]) -> Self {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Self::from_rows(self.field.clone(), self.ambient, rows)
    }

    /// Intersection by the Zassenhaus block trick: row-reduce
    /// [A | A; B | 0] and read the intersection from rows whose left half
    /// vanished.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = &self.field;
        let n = self.ambient;
        let mut red = RowReducer::new(f.clone(), 2 * n);
        for row in &self.basis {
            let mut wide = row.clone();
            wide.extend(row.iter().cloned());
            red.insert(wide);
        }
        for row in &other.basis {
            let mut wide = row.clone();
            wide.extend(vec![f.zero(); n]);
            red.insert(wide);
        }
        let inter_rows: Vec<Vec<K::Elem>> = red
            .rows()
            .iter()
            .filter(|r| r[..n].iter().all(|a| f.is_zero(a)))
            .map(|r| r[n..].to_vec())
            .collect();
        Ok(Self::from_rows(f.clone(), n, inter_rows))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }
}

/// Explicit complement presentation of V/W: a projection of V onto the
/// complement coordinates along W and a lift back. The complement is spanned
/// by the standard coordinates that are not pivot columns of W's basis, so
/// the construction is deterministic.
#[derive(Debug, Clone)]
pub struct QuotientMap<K: Field> {
    field: K,
    ambient: usize,
    w: Subspace<K>,
    complement_cols: Vec<usize>,
}

impl<K: Field> QuotientMap<K> {
    pub fn new(ambient: usize, w: Subspace<K>) -> Result<Self> {
        if w.ambient_dim() != ambient {
            return Err(Error::AmbientMismatch);
        }
        let complement_cols =
            (0..ambient).filter(|c| !w.pivot_cols().contains(c)).collect();
        Ok(QuotientMap { field: w.field().clone(), ambient, w, complement_cols })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.complement_cols.len()
    }

    pub fn subspace(&self) -> &Subspace<K> {
        &self.w
    }

    pub fn complement_cols(&self) -> &[usize] {
        &self.complement_cols
    }

    /// Coordinates of v + W on the complement basis.
    pub fn project(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(v.len(), self.ambient);
        let f = &self.field;
        let mut r = v.to_vec();
        for (row, &p) in self.w.basis().iter().zip(self.w.pivot_cols()) {
            let c = r[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for j in 0..self.ambient {
                r[j] = f.sub(&r[j], &f.mul(&c, &row[j]));
            }
        }
        self.complement_cols.iter().map(|&c| r[c].clone()).collect()
    }

    /// Canonical representative in V of a complement coordinate vector.
    pub fn lift(&self, c: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(c.len(), self.dim());
        let f = &self.field;
        let mut v = vec![f.zero(); self.ambient];
        for (coord, &col) in c.iter().zip(&self.complement_cols) {
            v[col] = coord.clone();
        }
        v
    }

    /// The induced map project . T . lift on V/W. Only well defined when T
    /// preserves W; callers are expected to have checked invariance.
    pub fn induce(&self, t: &Matrix<K>) -> Matrix<K> {
        assert_eq!(t.rows(), self.ambient);
        assert_eq!(t.cols(), self.ambient);
        let f = &self.field;
        let m = self.dim();
        let mut out = Matrix::zero(f.clone(), m, m);
        for (j, &col) in self.complement_cols.iter().enumerate() {
            let mut e = vec![f.zero(); self.ambient];
            e[col] = f.one();
            let image = self.project(&t.mul_vec(&e));
            for (i, v) in image.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        out
    }
}
