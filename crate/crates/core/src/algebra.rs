//! Matrix algebras: closure of a generating set under products, the Jacobson
//! radical via the trace bilinear form, quotient structure constants, and the
//! decision whether the semisimple quotient splits as k^m.
//!
//! The trace-form route to the radical is only valid in characteristic 0 or
//! p > n; inputs violating the guard are rejected outright rather than
//! risking a wrong radical.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Matrix, RowReducer, SpanSolver};
use crate::poly::{FieldRoots, Poly};
use crate::subspace::{QuotientMap, Subspace};

/// Linear basis of a multiplication-closed subspace of M_n(k).
///
/// Basis elements are the first-seen independent products from the closure
/// run, in deterministic order, so repeated runs yield identical bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraBasis<K: Field> {
    field: K,
    n: usize,
    elements: Vec<Matrix<K>>,
    unital: bool,
}

impl<K: Field> AlgebraBasis<K> {
    pub fn field(&self) -> &K {
        &self.field
    }

    /// Ambient matrix size n (the algebra lives inside M_n).
    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix<K>] {
        &self.elements
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    /// Coordinate solver onto the stored basis; build once per batch of
    /// queries.
    pub fn solver(&self) -> SpanSolver<K> {
        SpanSolver::new(
            self.field.clone(),
            self.n * self.n,
            &self.elements.iter().map(Matrix::vectorize).collect::<Vec<_>>(),
        )
    }

    /// Coordinates of a matrix on the algebra basis, if it is a member.
    pub fn coords(&self, m: &Matrix<K>) -> Option<Vec<K::Elem>> {
        self.solver().coords(&m.vectorize())
    }

    /// Matrix represented by a coordinate vector on the basis.
    pub fn from_coords(&self, coords: &[K::Elem]) -> Matrix<K> {
        assert_eq!(coords.len(), self.dim());
        let f = &self.field;
        let mut acc = Matrix::zero(f.clone(), self.n, self.n);
        for (c, b) in coords.iter().zip(&self.elements) {
            acc = acc.add(&b.scale(c));
        }
        acc
    }

    /// Exact check of the closure invariants: every pairwise product lies in
    /// the span, and the identity does when the algebra is unital.
    pub fn validate(&self) -> bool {
        let solver = self.solver();
        if self.unital
            && !solver.contains(&Matrix::identity(self.field.clone(), self.n).vectorize())
        {
            return false;
        }
        for a in &self.elements {
            for b in &self.elements {
                if !solver.contains(&a.mul(b).vectorize()) {
                    return false;
                }
            }
        }
        true
    }
}

/// Smallest (unital) subalgebra of M_n containing the generators.
///
/// Seeds the basis with the generators (then the identity, when unital),
/// and closes under pairwise products with a worklist; terminates because
/// the dimension is bounded by n^2.
pub fn close_algebra<K: Field>(generators: &[Matrix<K>], unital: bool) -> Result<AlgebraBasis<K>> {
    // the ambient size cannot be inferred from nothing; use
    // `close_algebra_sized` for the empty unital case
    let Some(first) = generators.first() else {
        return Err(Error::EmptyGenerators);
    };
    if !first.is_square() {
        return Err(Error::SizeMismatch);
    }
    let (field, n) = (first.field().clone(), first.rows());
    for g in generators {
        if g.rows() != n || g.cols() != n {
            return Err(Error::SizeMismatch);
        }
        if g.field() != &field {
            return Err(Error::FieldMismatch);
        }
    }
    close_algebra_sized(field, n, generators, unital)
}

/// Closure with an explicit ambient size, usable for an empty unital
/// generator set (which yields span{I}).
pub fn close_algebra_sized<K: Field>(
    field: K,
    n: usize,
    generators: &[Matrix<K>],
    unital: bool,
) -> Result<AlgebraBasis<K>> {
    if generators.is_empty() && !unital {
        return Err(Error::EmptyGenerators);
    }
    let mut red = RowReducer::new(field.clone(), n * n);
    let mut basis: Vec<Matrix<K>> = vec![];
    let try_add = |red: &mut RowReducer<K>, basis: &mut Vec<Matrix<K>>, m: Matrix<K>| {
        if red.insert(m.vectorize()) {
            basis.push(m);
        }
    };
    for g in generators {
        try_add(&mut red, &mut basis, g.clone());
    }
    if unital {
        try_add(&mut red, &mut basis, Matrix::identity(field.clone(), n));
    }
    // worklist closure over pairwise products, first-seen order
    let mut next = 0;
    while next < basis.len() {
        let k = next;
        next += 1;
        for i in 0..=k {
            let left = basis[i].mul(&basis[k]);
            try_add(&mut red, &mut basis, left);
            if i != k {
                let right = basis[k].mul(&basis[i]);
                try_add(&mut red, &mut basis, right);
            }
        }
    }
    Ok(AlgebraBasis { field, n, elements: basis, unital })
}

/// Radical of the algebra by the trace-form criterion: the kernel of the
/// Gram matrix G[i][j] = trace(b_i b_j), expressed in algebra coordinates.
pub fn radical<K: Field>(a: &AlgebraBasis<K>) -> Result<Subspace<K>> {
    let p = a.field().characteristic();
    if p != 0 && p <= a.matrix_size() as u64 {
        return Err(Error::CharacteristicTooSmall { p, n: a.matrix_size() });
    }
    let f = a.field().clone();
    let d = a.dim();
    let mut gram = Matrix::zero(f.clone(), d, d);
    for i in 0..d {
        for j in 0..=i {
            let t = a.elements()[i].mul(&a.elements()[j]).trace();
            gram.set(i, j, t.clone());
            gram.set(j, i, t); // trace(xy) = trace(yx)
        }
    }
    Ok(gram.kernel())
}

/// Multiplication table of an algebra on an explicit basis: b_i b_j =
/// sum_l table[i][j][l] b_l, with the identity's coordinates singled out
/// when the algebra is unital.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants<K: Field> {
    field: K,
    dim: usize,
    table: Vec<Vec<Vec<K::Elem>>>,
    identity: Option<Vec<K::Elem>>,
}

impl<K: Field> StructureConstants<K> {
    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product_coords(&self, i: usize, j: usize) -> &[K::Elem] {
        &self.table[i][j]
    }

    pub fn identity_coords(&self) -> Option<&[K::Elem]> {
        self.identity.as_deref()
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.table[i][j] != self.table[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix of left multiplication by b_i in the regular representation.
    pub fn left_multiplication(&self, i: usize) -> Matrix<K> {
        let f = &self.field;
        let mut m = Matrix::zero(f.clone(), self.dim, self.dim);
        for j in 0..self.dim {
            for l in 0..self.dim {
                m.set(l, j, self.table[i][j][l].clone());
            }
        }
        m
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_multiplication_by(&self, coords: &[K::Elem]) -> Matrix<K> {
        assert_eq!(coords.len(), self.dim);
        let f = &self.field;
        let mut acc = Matrix::zero(f.clone(), self.dim, self.dim);
        for (i, c) in coords.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            acc = acc.add(&self.left_multiplication(i).scale(c));
        }
        acc
    }

    /// Monic minimal polynomial of left multiplication by the element.
    pub fn element_min_poly(&self, coords: &[K::Elem]) -> Poly<K> {
        self.left_multiplication_by(coords)
            .min_poly()
            .expect("regular representation matrices are square")
    }

    /// Exact associativity spot-check over all basis triples.
    pub fn check_associativity(&self) -> bool {
        let f = &self.field;
        for i in 0..self.dim {
            for j in 0..self.dim {
                for l in 0..self.dim {
                    // (b_i b_j) b_l vs b_i (b_j b_l)
                    let mut lhs = vec![f.zero(); self.dim];
                    for (s, c) in self.table[i][j].iter().enumerate() {
                        for (t, d) in self.table[s][l].iter().enumerate() {
                            lhs[t] = f.add(&lhs[t], &f.mul(c, d));
                        }
                    }
                    let mut rhs = vec![f.zero(); self.dim];
                    for (s, c) in self.table[j][l].iter().enumerate() {
                        for (t, d) in self.table[i][s].iter().enumerate() {
                            rhs[t] = f.add(&rhs[t], &f.mul(c, d));
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Structure constants of the full algebra on its own basis.
pub fn structure_constants<K: Field>(a: &AlgebraBasis<K>) -> StructureConstants<K> {
    let f = a.field().clone();
    let d = a.dim();
    let solver = a.solver();
    let mut table = vec![vec![vec![]; d]; d];
    for i in 0..d {
        for j in 0..d {
            let prod = a.elements()[i].mul(&a.elements()[j]);
            table[i][j] = solver
                .coords(&prod.vectorize())
                .expect("closed algebra contains its products");
        }
    }
    let identity = solver.coords(&Matrix::identity(f.clone(), a.matrix_size()).vectorize());
    StructureConstants { field: f, dim: d, table, identity }
}

/// Structure constants of A / rad on the complement coordinates, after
/// checking that `rad` really is a two-sided ideal of A.
pub fn quotient_structure<K: Field>(
    a: &AlgebraBasis<K>,
    rad: &Subspace<K>,
) -> Result<StructureConstants<K>> {
    let f = a.field().clone();
    let d = a.dim();
    if rad.ambient_dim() != d {
        return Err(Error::AmbientMismatch);
    }
    let solver = a.solver();
    // ideal check: r b and b r stay inside rad for basis vectors r of rad
    for rcoords in rad.basis() {
        let r = a.from_coords(rcoords);
        for b in a.elements() {
            for prod in [r.mul(b), b.mul(&r)] {
                let coords = solver.coords(&prod.vectorize()).ok_or(Error::NotAnIdeal)?;
                if !rad.contains(&coords) {
                    return Err(Error::NotAnIdeal);
                }
            }
        }
    }
    let qmap = QuotientMap::new(d, rad.clone())?;
    let m = qmap.dim();
    // quotient basis: classes of the algebra basis elements at the
    // complement coordinates
    let classes: Vec<usize> = qmap.complement_cols().to_vec();
    let mut table = vec![vec![vec![]; m]; m];
    for (i, &ci) in classes.iter().enumerate() {
        for (j, &cj) in classes.iter().enumerate() {
            let prod = a.elements()[ci].mul(&a.elements()[cj]);
            let coords = solver
                .coords(&prod.vectorize())
                .expect("closed algebra contains its products");
            table[i][j] = qmap.project(&coords);
        }
    }
    let identity = solver
        .coords(&Matrix::identity(f.clone(), a.matrix_size()).vectorize())
        .map(|c| qmap.project(&c))
        .filter(|c| !c.iter().all(|x| f.is_zero(x)));
    Ok(StructureConstants { field: f, dim: m, table, identity })
}

/// Decision for "the quotient is a product of m copies of the base field":
/// true iff the table is commutative and the minimal polynomial of every
/// basis element splits into distinct linear factors over k. On a spanning
/// set of a commutative semisimple algebra that forces every simple factor
/// to be k itself, so m is then the full quotient dimension.
pub fn split_as_km<K: Field + FieldRoots>(q: &StructureConstants<K>) -> Result<(bool, usize)> {
    if !q.is_commutative() {
        return Ok((false, q.dim()));
    }
    let f = q.field();
    for i in 0..q.dim() {
        let mut coords = vec![f.zero(); q.dim()];
        coords[i] = f.one();
        let mp = q.element_min_poly(&coords);
        if !mp.splits_into_distinct_linear_factors()? {
            return Ok((false, q.dim()));
        }
    }
    Ok((true, q.dim()))
}

/// Radical analysis of a closed algebra: radical, quotient table, and the
/// k^m split decision in one report.
#[derive(Debug, Clone)]
pub struct RadicalReport<K: Field> {
    pub algebra_dim: usize,
    pub radical: Subspace<K>,
    pub radical_matrices: Vec<Matrix<K>>,
    pub quotient: StructureConstants<K>,
    pub quotient_commutative: bool,
    pub split_as_km: bool,
    /// Dimension of the semisimple quotient; equals algebra_dim - radical dim.
    pub m: usize,
}

pub fn analyze<K: Field + FieldRoots>(a: &AlgebraBasis<K>) -> Result<RadicalReport<K>> {
    let rad = radical(a)?;
    let quotient = quotient_structure(a, &rad)?;
    let commutative = quotient.is_commutative();
    let (split, m) = split_as_km(&quotient)?;
    let radical_matrices = rad.basis().iter().map(|c| a.from_coords(c)).collect();
    Ok(RadicalReport {
        algebra_dim: a.dim(),
        radical: rad,
        radical_matrices,
        quotient,
        quotient_commutative: commutative,
        split_as_km: split,
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    type QMat = Matrix<Rationals>;

    #[test]
    fn closure_examples() {
        // {E11} unital in M_2: dim 2
        let e11 = QMat::unit(Rationals, 2, 0, 0);
        let a = close_algebra(&[e11.clone()], true).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.validate());
        assert!(a.coords(&QMat::identity(Rationals, 2)).is_some());
        assert!(a.coords(&e11).is_some());

        // {E12} nonunital: dim 1
        let e12 = QMat::unit(Rationals, 2, 0, 1);
        let a = close_algebra(&[e12.clone()], false).unwrap();
        assert_eq!(a.dim(), 1);

        // {E12, E21} unital: all of M_2
        let e21 = QMat::unit(Rationals, 2, 1, 0);
        let a = close_algebra(&[e12, e21], true).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.validate());
    }

    #[test]
    fn closure_error_cases() {
        assert_eq!(
            close_algebra::<Rationals>(&[], false).unwrap_err(),
            Error::EmptyGenerators
        );
        let a = QMat::identity(Rationals, 2);
        let b = QMat::identity(Rationals, 3);
        assert_eq!(close_algebra(&[a, b], true).unwrap_err(), Error::SizeMismatch);
    }

    #[test]
    fn closure_is_idempotent() {
        let e12 = QMat::unit(Rationals, 2, 0, 1);
        let e21 = QMat::unit(Rationals, 2, 1, 0);
        let a = close_algebra(&[e12, e21], true).unwrap();
        let b = close_algebra(a.elements(), true).unwrap();
        assert_eq!(a.dim(), b.dim());
        for el in b.elements() {
            assert!(a.coords(el).is_some());
        }
    }

    #[test]
    fn radical_examples() {
        // full M_2 is simple
        let e12 = QMat::unit(Rationals, 2, 0, 1);
        let e21 = QMat::unit(Rationals, 2, 1, 0);
        let full = close_algebra(&[e12.clone(), e21], true).unwrap();
        assert!(radical(&full).unwrap().is_zero());

        // upper-triangular 2x2 algebra: radical is span{E12}
        let e11 = QMat::unit(Rationals, 2, 0, 0);
        let e22 = QMat::unit(Rationals, 2, 1, 1);
        let upper = close_algebra(&[e11, e22, e12.clone()], true).unwrap();
        assert_eq!(upper.dim(), 3);
        let rad = radical(&upper).unwrap();
        assert_eq!(rad.dim(), 1);
        let rad_mat = upper.from_coords(&rad.basis()[0]);
        // the radical is spanned by E12 up to scale
        assert_eq!(rad_mat.rref().0, e12.rref().0);

        // span{I, E12}: radical is span{E12}
        let a = close_algebra(&[e12.clone()], true).unwrap();
        assert_eq!(a.dim(), 2);
        let rad = radical(&a).unwrap();
        assert_eq!(rad.dim(), 1);
        assert_eq!(a.from_coords(&rad.basis()[0]).rref().0, e12.rref().0);
    }

    #[test]
    fn radical_characteristic_guard() {
        let f2 = PrimeField::new(2).unwrap();
        let gens = vec![Matrix::unit(f2, 3, 0, 1)];
        let a = close_algebra(&gens, true).unwrap();
        assert_eq!(
            radical(&a).unwrap_err(),
            Error::CharacteristicTooSmall { p: 2, n: 3 }
        );
    }

    #[test]
    fn quotient_structure_examples() {
        // zero radical: table of the algebra itself
        let e12 = QMat::unit(Rationals, 2, 0, 1);
        let e21 = QMat::unit(Rationals, 2, 1, 0);
        let full = close_algebra(&[e12.clone(), e21], true).unwrap();
        let rad = radical(&full).unwrap();
        let q = quotient_structure(&full, &rad).unwrap();
        assert_eq!(q.dim(), 4);
        assert!(q.check_associativity());
        assert!(!q.is_commutative());

        // upper-triangular mod radical: k x k
        let e11 = QMat::unit(Rationals, 2, 0, 0);
        let e22 = QMat::unit(Rationals, 2, 1, 1);
        let upper = close_algebra(&[e11, e22, e12.clone()], true).unwrap();
        let rad = radical(&upper).unwrap();
        let q = quotient_structure(&upper, &rad).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_commutative());
        assert!(q.check_associativity());
        let (split, m) = split_as_km(&q).unwrap();
        assert!(split);
        assert_eq!(m, 2);

        // span{I, E12} mod radical: k
        let a = close_algebra(&[e12], true).unwrap();
        let rad = radical(&a).unwrap();
        let q = quotient_structure(&a, &rad).unwrap();
        assert_eq!(q.dim(), 1);
        let (split, m) = split_as_km(&q).unwrap();
        assert!(split);
        assert_eq!(m, 1);
    }

    #[test]
    fn not_an_ideal_is_rejected() {
        let e12 = QMat::unit(Rationals, 2, 0, 1);
        let e21 = QMat::unit(Rationals, 2, 1, 0);
        let full = close_algebra(&[e12, e21], true).unwrap();
        // span of the first basis element alone is not an ideal of M_2
        let f = Rationals;
        let mut v = vec![f.zero(); full.dim()];
        v[0] = f.one();
        let not_ideal = Subspace::from_rows(Rationals, full.dim(), vec![v]);
        assert_eq!(
            quotient_structure(&full, &not_ideal).unwrap_err(),
            Error::NotAnIdeal
        );
    }

    #[test]
    fn rotation_split_depends_on_field() {
        // over Q the quotient is Q[x]/(x^2+1): commutative but not split
        let rot = QMat::from_ints(Rationals, &[&[0, -1], &[1, 0]]);
        let a = close_algebra(&[rot], true).unwrap();
        let report = analyze(&a).unwrap();
        assert_eq!(report.algebra_dim, 2);
        assert!(report.radical.is_zero());
        assert!(report.quotient_commutative);
        assert!(!report.split_as_km);

        // over F_5, x^2+1 = (x-2)(x-3): split with m = 2
        let f5 = PrimeField::new(5).unwrap();
        let rot5 = Matrix::from_ints(f5, &[&[0, -1], &[1, 0]]);
        let a5 = close_algebra(&[rot5], true).unwrap();
        let report5 = analyze(&a5).unwrap();
        assert!(report5.split_as_km);
        assert_eq!(report5.m, 2);
    }

    #[test]
    fn element_min_poly_examples() {
        // identity element: x - 1
        let e12 = QMat::unit(Rationals, 2, 0, 1);
        let a = close_algebra(&[e12], true).unwrap();
        let q = structure_constants(&a);
        let id = q.identity_coords().unwrap().to_vec();
        assert_eq!(q.element_min_poly(&id), Poly::from_ints(Rationals, &[-1, 1]));

        // nontrivial idempotent class in k x k: x^2 - x
        let e11 = QMat::unit(Rationals, 2, 0, 0);
        let e22 = QMat::unit(Rationals, 2, 1, 1);
        let diag = close_algebra(&[e11, e22], true).unwrap();
        let q = structure_constants(&diag);
        let f = Rationals;
        let mut idem = vec![f.zero(); q.dim()];
        idem[0] = f.one();
        assert_eq!(q.element_min_poly(&idem), Poly::from_ints(Rationals, &[0, -1, 1]));

        // class of the rotation generator: x^2 + 1 via the companion matrix
        let rot = QMat::from_ints(Rationals, &[&[0, -1], &[1, 0]]);
        let a = close_algebra(&[rot.clone()], true).unwrap();
        let q = structure_constants(&a);
        let coords = a.coords(&rot).unwrap();
        assert_eq!(q.element_min_poly(&coords), Poly::from_ints(Rationals, &[1, 0, 1]));
    }

    #[test]
    fn radical_is_a_nilpotent_ideal() {
        // upper-triangular 3x3 algebra
        let mut gens = vec![];
        for i in 0..3 {
            for j in i..3 {
                gens.push(QMat::unit(Rationals, 3, i, j));
            }
        }
        let a = close_algebra(&gens, true).unwrap();
        assert_eq!(a.dim(), 6);
        let rad = radical(&a).unwrap();
        assert_eq!(rad.dim(), 3);
        for rcoords in rad.basis() {
            let r = a.from_coords(rcoords);
            // nilpotent with index at most n
            assert!(r.pow(3).is_zero());
            // two-sided ideal membership
            for b in a.elements() {
                for prod in [r.mul(b), b.mul(&r)] {
                    let c = a.coords(&prod).unwrap();
                    assert!(rad.contains(&c));
                }
            }
        }
    }

    #[test]
    fn quotient_has_zero_radical() {
        // apply the trace-form criterion to the quotient's regular
        // representation: the Gram kernel must vanish
        let e12 = QMat::unit(Rationals, 2, 0, 1);
        let a = close_algebra(&[e12], true).unwrap();
        let rad = radical(&a).unwrap();
        let q = quotient_structure(&a, &rad).unwrap();
        let f = Rationals;
        let d = q.dim();
        let mut gram = Matrix::zero(f, d, d);
        for i in 0..d {
            for j in 0..d {
                let t = q.left_multiplication(i).mul(&q.left_multiplication(j)).trace();
                gram.set(i, j, t);
            }
        }
        assert_eq!(gram.kernel().dim(), 0);
    }

    #[test]
    fn split_is_conjugation_invariant() {
        let rot = QMat::from_ints(Rationals, &[&[0, -1], &[1, 0]]);
        let p = QMat::from_ints(Rationals, &[&[1, 1], &[0, 1]]);
        let conj = Matrix::conjugate_by(&rot, &p).unwrap();
        let r1 = analyze(&close_algebra(&[rot], true).unwrap()).unwrap();
        let r2 = analyze(&close_algebra(&[conj], true).unwrap()).unwrap();
        assert_eq!(r1.split_as_km, r2.split_as_km);
        assert_eq!(r1.m, r2.m);
    }
}
