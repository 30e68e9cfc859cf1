//! Dense exact matrices: reduced row-echelon form, kernels, inverses,
//! conjugation, and minimal polynomials via Krylov chains.
//!
//! Target dimensions are small (n <= 30, with algebra closures living in
//! dimension up to n^2), so everything is dense and row-major.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    entries: Vec<K::Elem>, // row-major
}

impl<K: Field> Matrix<K> {
    pub fn new(field: K, rows: usize, cols: usize, entries: Vec<K::Elem>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { field, rows, cols, entries }
    }

    pub fn from_rows(field: K, rows: Vec<Vec<K::Elem>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        let entries = rows.into_iter().flatten().collect();
        Matrix { field, rows: nrows, cols: ncols, entries }
    }

    pub fn from_ints(field: K, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&n| field.from_int(n)).collect())
            .collect();
        Self::from_rows(field, data)
    }

    pub fn zero(field: K, rows: usize, cols: usize) -> Self {
        let entries = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, entries }
    }

    pub fn identity(field: K, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    /// Matrix unit E_{i,j} (zero-indexed).
    pub fn unit(field: K, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        let one = m.field.one();
        m.set(i, j, one);
        m
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &K::Elem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K::Elem) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K::Elem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<K::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col_vec(&self, c: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Row-major flattening; the coordinate vector of the matrix in the
    /// standard basis of matrix space.
    pub fn vectorize(&self) -> Vec<K::Elem> {
        self.entries.clone()
    }

    pub fn from_vectorized(field: K, rows: usize, cols: usize, v: Vec<K::Elem>) -> Self {
        Self::new(field, rows, cols, v)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.field, other.field);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&self.field.from_int(-1)))
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let entries = self.entries.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        assert_eq!(self.field, other.field);
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let t = f.add(out.get(r, c), &f.mul(a, other.get(k, c)));
                    out.set(r, c, t);
                }
            }
        }
        out
    }

    /// m * v for a column vector v.
    pub fn mul_vec(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for c in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.get(r, c), &v[c]));
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.field.clone(), self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|a| self.field.is_zero(a))
    }

    pub fn trace(&self) -> K::Elem {
        assert!(self.is_square());
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..self.rows {
            acc = f.add(&acc, self.get(i, i));
        }
        acc
    }

    pub fn diagonal(&self) -> Vec<K::Elem> {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i).clone()).collect()
    }

    /// True iff every entry strictly below the diagonal is zero
    /// (and, with `strict`, the diagonal is zero too).
    pub fn is_upper_triangular(&self, strict: bool) -> bool {
        for r in 0..self.rows {
            let until = if strict { r + 1 } else { r };
            for c in 0..until.min(self.cols) {
                if !self.field.is_zero(self.get(r, c)) {
                    return false;
                }
            }
        }
        true
    }

    /// Unique reduced row-echelon form: (reduced, rank, pivot columns).
    pub fn rref(&self) -> (Self, usize, Vec<usize>) {
        let mut red = RowReducer::new(self.field.clone(), self.cols);
        for r in 0..self.rows {
            red.insert(self.row(r).to_vec());
        }
        let rank = red.rows.len();
        let pivots = red.pivots.clone();
        let mut rows = red.rows;
        rows.resize(self.rows, vec![self.field.zero(); self.cols]);
        (Self::from_rows(self.field.clone(), rows), rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Right kernel {v : m v = 0} with canonical basis.
    pub fn kernel(&self) -> Subspace<K> {
        let f = &self.field;
        let (red, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = vec![];
        for &j in &free {
            let mut v = vec![f.zero(); self.cols];
            v[j] = f.one();
            for (i, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = f.neg(red.get(i, j));
            }
            basis.push(v);
        }
        Subspace::from_rows(f.clone(), self.cols, basis)
    }

    /// Exact determinant by fraction-producing Gaussian elimination.
    pub fn det(&self) -> Result<K::Elem> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !f.is_zero(m.get(r, col))) else {
                return Ok(f.zero());
            };
            if piv != col {
                for c in 0..n {
                    let a = m.get(piv, c).clone();
                    let b = m.get(col, c).clone();
                    m.set(piv, c, b);
                    m.set(col, c, a);
                }
                det = f.neg(&det);
            }
            let pivot = m.get(col, col).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot)?;
            for r in col + 1..n {
                let factor = f.mul(m.get(r, col), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for c in col..n {
                    let t = f.sub(m.get(r, c), &f.mul(&factor, m.get(col, c)));
                    m.set(r, c, t);
                }
            }
        }
        Ok(det)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let f = &self.field;
        let n = self.rows;
        let mut red = RowReducer::new(f.clone(), 2 * n);
        for r in 0..n {
            let mut row = self.row(r).to_vec();
            row.extend(vec![f.zero(); n]);
            row[n + r] = f.one();
            red.insert(row);
        }
        if red.pivots.iter().take_while(|&&p| p < n).count() < n {
            return Err(Error::Singular);
        }
        let rows = red.rows.iter().map(|r| r[n..].to_vec()).collect();
        Ok(Self::from_rows(f.clone(), rows))
    }

    /// p^{-1} t p.
    pub fn conjugate_by(t: &Self, p: &Self) -> Result<Self> {
        if !t.is_square() || !p.is_square() || t.rows != p.rows {
            return Err(Error::SizeMismatch);
        }
        let pinv = p.inverse()?;
        Ok(pinv.mul(t).mul(p))
    }

    /// Monic minimal polynomial by Krylov iteration on each standard basis
    /// vector, combined by lcm.
    pub fn min_poly(&self) -> Result<Poly<K>> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let f = &self.field;
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(f.clone()));
        }
        let mut acc = Poly::one(f.clone());
        for i in 0..n {
            let mut chain: Vec<Vec<K::Elem>> = vec![];
            let mut red = RowReducer::new(f.clone(), n);
            let mut v = vec![f.zero(); n];
            v[i] = f.one();
            loop {
                if !red.insert(v.clone()) {
                    // v is a combination of the chain; that combination is
                    // the local minimal polynomial of e_i
                    let cols = Matrix::from_rows(f.clone(), chain.clone()).transpose();
                    let coeffs = cols
                        .solve(&v)
                        .expect("dependent Krylov vector must be solvable");
                    let mut poly = vec![];
                    for c in coeffs {
                        poly.push(f.neg(&c));
                    }
                    poly.push(f.one());
                    acc = acc.lcm(&Poly::new(f.clone(), poly));
                    break;
                }
                chain.push(v.clone());
                v = self.mul_vec(&v);
            }
            if acc.degree() == Some(n) {
                break; // cannot exceed n
            }
        }
        Ok(acc)
    }

    /// Evaluate a polynomial at this (square) matrix.
    pub fn eval_poly(&self, p: &Poly<K>) -> Self {
        assert!(self.is_square());
        let f = &self.field;
        let mut acc = Self::zero(f.clone(), self.rows, self.cols);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..self.rows {
                let t = f.add(acc.get(i, i), c);
                acc.set(i, i, t);
            }
        }
        acc
    }

    /// Solve self * x = b; None when inconsistent. Free variables are set to
    /// zero, so the solution is deterministic.
    pub fn solve(&self, b: &[K::Elem]) -> Option<Vec<K::Elem>> {
        assert_eq!(self.rows, b.len());
        let f = &self.field;
        let mut red = RowReducer::new(f.clone(), self.cols + 1);
        for r in 0..self.rows {
            let mut row = self.row(r).to_vec();
            row.push(b[r].clone());
            red.insert(row);
        }
        if red.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &p) in red.pivots.iter().enumerate() {
            x[p] = red.rows[i][self.cols].clone();
        }
        Some(x)
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let cells: Vec<String> =
                    self.row(r).iter().map(|e| self.field.format(e)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        rows.join("\n")
    }
}

/// Incremental Gauss-Jordan accumulator. Rows are kept in reduced
/// row-echelon form, sorted by pivot column, pivots normalized to 1.
#[derive(Debug, Clone)]
pub struct RowReducer<K: Field> {
    field: K,
    cols: usize,
    pub(crate) rows: Vec<Vec<K::Elem>>,
    pub(crate) pivots: Vec<usize>,
}

impl<K: Field> RowReducer<K> {
    pub fn new(field: K, cols: usize) -> Self {
        RowReducer { field, cols, rows: vec![], pivots: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<K::Elem>] {
        &self.rows
    }

    /// Eliminate the pivot coordinates of `v` against the accumulated rows.
    pub fn reduce(&self, v: &mut [K::Elem]) {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for j in 0..self.cols {
                v[j] = f.sub(&v[j], &f.mul(&c, &row[j]));
            }
        }
    }

    /// Returns the coefficients of `v` on the accumulated rows if `v` lies in
    /// their span.
    pub fn coords(&self, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        let f = &self.field;
        let mut w = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !f.is_zero(&c) {
                for j in 0..self.cols {
                    w[j] = f.sub(&w[j], &f.mul(&c, &row[j]));
                }
            }
            coeffs.push(c);
        }
        if w.iter().all(|a| f.is_zero(a)) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        self.coords(v).is_some()
    }

    /// Insert a vector; true iff it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<K::Elem>) -> bool {
        assert_eq!(v.len(), self.cols);
        let f = self.field.clone();
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|a| !f.is_zero(a)) else {
            return false;
        };
        let inv = f.inv(&v[pivot]).expect("pivot is nonzero");
        for a in v.iter_mut() {
            *a = f.mul(a, &inv);
        }
        // clear the new pivot column from the existing rows
        for row in self.rows.iter_mut() {
            let c = row[pivot].clone();
            if f.is_zero(&c) {
                continue;
            }
            for j in 0..self.cols {
                row[j] = f.sub(&row[j], &f.mul(&c, &v[j]));
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }
}

/// Repeated-query solver for "express v on this list of independent
/// vectors". Tracks the row transform alongside the RREF, so each query is
/// a single reduction pass.
#[derive(Debug, Clone)]
pub struct SpanSolver<K: Field> {
    field: K,
    red: RowReducer<K>,
    cols: usize,
    count: usize,
}

impl<K: Field> SpanSolver<K> {
    /// `vectors` must be linearly independent.
    pub fn new(field: K, cols: usize, vectors: &[Vec<K::Elem>]) -> Self {
        let count = vectors.len();
        let mut red = RowReducer::new(field.clone(), cols + count);
        for (i, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), cols);
            let mut row = v.clone();
            row.extend(vec![field.zero(); count]);
            row[cols + i] = field.one();
            let grew = red.insert(row);
            assert!(grew, "SpanSolver vectors must be independent");
            assert!(
                *red.pivots().iter().max().unwrap() < cols,
                "SpanSolver vectors must be independent"
            );
        }
        SpanSolver { field, red, cols, count }
    }

    /// Coordinates of `v` on the original vectors, or None if outside the
    /// span.
    pub fn coords(&self, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        let mut row = v.to_vec();
        row.extend(vec![f.zero(); self.count]);
        self.red.reduce(&mut row);
        if row[..self.cols].iter().any(|a| !f.is_zero(a)) {
            return None;
        }
        Some(row[self.cols..].iter().map(|a| f.neg(a)).collect())
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        self.coords(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    type QMat = Matrix<Rationals>;

    #[test]
    fn rref_examples() {
        let m = QMat::from_ints(Rationals, &[&[2, 4], &[1, 2]]);
        let (red, rank, pivots) = m.rref();
        assert_eq!(red, QMat::from_ints(Rationals, &[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
        assert_eq!(pivots, vec![0]);

        let id = QMat::identity(Rationals, 3);
        let (red, rank, _) = id.rref();
        assert_eq!(red, id);
        assert_eq!(rank, 3);

        let f2 = PrimeField::new(2).unwrap();
        let m = Matrix::from_ints(f2, &[&[1, 1], &[1, 2]]);
        let (red, rank, _) = m.rref();
        assert_eq!(red, Matrix::identity(f2, 2));
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_is_idempotent_and_rank_permutation_invariant() {
        let m = QMat::from_ints(Rationals, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let (red, rank, _) = m.rref();
        let (red2, rank2, _) = red.rref();
        assert_eq!(red, red2);
        assert_eq!(rank, rank2);
        let swapped = QMat::from_ints(Rationals, &[&[7, 8, 9], &[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(swapped.rref().0, red);
    }

    #[test]
    fn kernel_examples() {
        let z = QMat::zero(Rationals, 2, 2);
        assert_eq!(z.kernel().dim(), 2);

        let id = QMat::identity(Rationals, 2);
        assert_eq!(id.kernel().dim(), 0);

        let e12 = QMat::unit(Rationals, 2, 0, 1);
        let k = e12.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[Rationals.one(), Rationals.zero()]));
    }

    #[test]
    fn rank_nullity() {
        let m = QMat::from_ints(Rationals, &[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.kernel().dim() + m.rank(), m.cols());
    }

    #[test]
    fn inverse_and_det() {
        let m = QMat::from_ints(Rationals, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMat::identity(Rationals, 2));
        assert_eq!(m.det().unwrap(), Rationals.one());

        let sing = QMat::from_ints(Rationals, &[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inverse().unwrap_err(), Error::Singular);
        assert!(Rationals.is_zero(&sing.det().unwrap()));
    }

    #[test]
    fn min_poly_examples() {
        let id = QMat::identity(Rationals, 3);
        assert_eq!(id.min_poly().unwrap(), Poly::from_ints(Rationals, &[-1, 1]));

        let e12 = QMat::unit(Rationals, 2, 0, 1);
        assert_eq!(e12.min_poly().unwrap(), Poly::from_ints(Rationals, &[0, 0, 1]));

        let rot = QMat::from_ints(Rationals, &[&[0, -1], &[1, 0]]);
        assert_eq!(rot.min_poly().unwrap(), Poly::from_ints(Rationals, &[1, 0, 1]));
    }

    #[test]
    fn min_poly_annihilates() {
        let m = QMat::from_ints(Rationals, &[&[1, 2, 0], &[0, 1, 0], &[3, 0, 2]]);
        let p = m.min_poly().unwrap();
        assert!(m.eval_poly(&p).is_zero());
    }

    #[test]
    fn min_poly_annihilates_random_instances() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(31);
        let f5 = PrimeField::new(5).unwrap();
        for case in 0..60 {
            let n = rng.gen_range(1..=5usize);
            if case % 2 == 0 {
                let mut m = QMat::zero(Rationals, n, n);
                for r in 0..n {
                    for c in 0..n {
                        m.set(r, c, Rationals.from_int(rng.gen_range(-3..=3)));
                    }
                }
                let p = m.min_poly().unwrap();
                assert!(p.is_monic());
                assert!(m.eval_poly(&p).is_zero());
            } else {
                let mut m = Matrix::zero(f5, n, n);
                for r in 0..n {
                    for c in 0..n {
                        m.set(r, c, rng.gen_range(0..5u64));
                    }
                }
                let p = m.min_poly().unwrap();
                assert!(p.is_monic());
                assert!(m.eval_poly(&p).is_zero());
            }
        }
    }

    #[test]
    fn conjugation_examples() {
        let t = QMat::from_ints(Rationals, &[&[1, 2], &[3, 4]]);
        let id = QMat::identity(Rationals, 2);
        assert_eq!(Matrix::conjugate_by(&t, &id).unwrap(), t);

        // swap of e1,e2 sends E12 to E21
        let swap = QMat::from_ints(Rationals, &[&[0, 1], &[1, 0]]);
        let e12 = QMat::unit(Rationals, 2, 0, 1);
        assert_eq!(
            Matrix::conjugate_by(&e12, &swap).unwrap(),
            QMat::unit(Rationals, 2, 1, 0)
        );

        // conjugation preserves the minimal polynomial
        let p = QMat::from_ints(Rationals, &[&[1, 1], &[2, 1]]);
        let conj = Matrix::conjugate_by(&t, &p).unwrap();
        assert_eq!(conj.min_poly().unwrap(), t.min_poly().unwrap());

        let sing = QMat::from_ints(Rationals, &[&[1, 1], &[1, 1]]);
        assert_eq!(Matrix::conjugate_by(&t, &sing).unwrap_err(), Error::Singular);
    }

    #[test]
    fn solve_consistency() {
        let m = QMat::from_ints(Rationals, &[&[1, 2], &[3, 4]]);
        let b = vec![Rationals.from_int(5), Rationals.from_int(11)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);

        let sing = QMat::from_ints(Rationals, &[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&[Rationals.from_int(0), Rationals.from_int(1)]).is_none());
    }

    #[test]
    fn span_solver_coords() {
        let f = Rationals;
        let v1: Vec<_> = [1, 2, 0].iter().map(|&n| f.from_int(n)).collect();
        let v2: Vec<_> = [0, 1, 1].iter().map(|&n| f.from_int(n)).collect();
        let solver = SpanSolver::new(f, 3, &[v1.clone(), v2.clone()]);
        // 2 v1 - 3 v2
        let target: Vec<_> = [2, 1, -3].iter().map(|&n| f.from_int(n)).collect();
        assert_eq!(
            solver.coords(&target).unwrap(),
            vec![f.from_int(2), f.from_int(-3)]
        );
        let outside: Vec<_> = [0, 0, 1].iter().map(|&n| f.from_int(n)).collect();
        assert!(solver.coords(&outside).is_none());
    }
}
