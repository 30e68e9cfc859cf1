//! The decision engines: constructive simultaneous triangularization by
//! recursive common-eigenvector search, strict triangularization by
//! common-kernel chains, the structural route through the algebra radical,
//! and independent certificate verification.
//!
//! Both routes decide the same question for the generated algebra; the
//! constructive one also produces the change-of-basis flag, while the
//! structural one explains failure (quotient not commutative, or minimal
//! polynomials not split over the base field).

use crate::algebra::{self, AlgebraBasis, RadicalReport};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::poly::{FieldRoots, DEFAULT_ROOT_CAP};
use crate::subspace::{QuotientMap, Subspace};

/// Resource caps for the enumerative parts of the search. Exceeding a cap is
/// an explicit error, never a silent wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Kernel-intersection evaluations during eigen-tuple enumeration.
    pub eigen_tuples: u64,
    /// Work bound for in-field root searches.
    pub root_candidates: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { eigen_tuples: 100_000, root_candidates: DEFAULT_ROOT_CAP }
    }
}

/// Ordered basis realizing a maximal chain of invariant subspaces.
/// `matrix` has the basis vectors as columns, in flag order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag<K: Field> {
    n: usize,
    ordered_basis: Vec<Vec<K::Elem>>,
    matrix: Matrix<K>,
}

impl<K: Field> Flag<K> {
    pub fn new(field: K, ordered_basis: Vec<Vec<K::Elem>>) -> Self {
        let n = ordered_basis.len();
        let mut matrix = Matrix::zero(field, n, n);
        for (j, v) in ordered_basis.iter().enumerate() {
            assert_eq!(v.len(), n, "flag vectors must have length n");
            for (i, x) in v.iter().enumerate() {
                matrix.set(i, j, x.clone());
            }
        }
        Flag { n, ordered_basis, matrix }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ordered_basis(&self) -> &[Vec<K::Elem>] {
        &self.ordered_basis
    }

    /// Change-of-basis matrix P with the flag vectors as columns.
    pub fn matrix(&self) -> &Matrix<K> {
        &self.matrix
    }
}

/// A successful triangularization: the flag, the conjugated generators
/// P^{-1} T P, and the diagonal map (the per-generator diagonal entries,
/// which realize the homomorphism onto k^n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangularization<K: Field> {
    pub flag: Flag<K>,
    pub conjugated: Vec<Matrix<K>>,
    pub strict: bool,
    pub diagonal_map: Vec<Vec<K::Elem>>,
}

/// Why a search stopped: no eigen-tuple had a joint eigenvector, or the
/// generators had trivial common kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionKind {
    NoCommonEigenvector,
    TrivialCommonKernel,
}

/// Replayable failure witness: the partial flag built so far and the induced
/// generators on the quotient at which the search got stuck.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<K: Field> {
    pub stage: usize,
    pub kind: ObstructionKind,
    pub flag_prefix: Vec<Vec<K::Elem>>,
    pub induced: Vec<Matrix<K>>,
}

/// Outcome of a triangularization run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<K: Field> {
    Triangularizable(Triangularization<K>),
    StrictlyTriangularizable(Triangularization<K>),
    Not(Witness<K>),
}

impl<K: Field> Verdict<K> {
    pub fn is_yes(&self) -> bool {
        !matches!(self, Verdict::Not(_))
    }

    pub fn triangularization(&self) -> Option<&Triangularization<K>> {
        match self {
            Verdict::Triangularizable(t) | Verdict::StrictlyTriangularizable(t) => Some(t),
            Verdict::Not(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness<K>> {
        match self {
            Verdict::Not(w) => Some(w),
            _ => None,
        }
    }
}

fn validate_generators<K: Field>(
    field: &K,
    n: usize,
    generators: &[Matrix<K>],
) -> Result<()> {
    for g in generators {
        if g.rows() != n || g.cols() != n {
            return Err(Error::SizeMismatch);
        }
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
    }
    Ok(())
}

/// A nonzero vector v with T_i v = lambda_i v for every generator, together
/// with the eigenvalue tuple, or None when no such vector exists.
///
/// The search enumerates tuples of in-field eigenvalues in lexicographic
/// order (each coordinate ascending in the field's total order) and
/// intersects the eigenkernels incrementally, so the returned vector is the
/// first one in a fixed deterministic order. A line invariant under all
/// generators is invariant under the whole generated algebra, so this finds
/// exactly the 1-dimensional invariant subspaces.
pub fn common_eigenvector<K: Field + FieldRoots>(
    generators: &[Matrix<K>],
) -> Result<Option<(Vec<K::Elem>, Vec<K::Elem>)>> {
    let Some(first) = generators.first() else {
        return Err(Error::EmptyGenerators);
    };
    common_eigenvector_sized(first.field().clone(), first.rows(), generators, &Caps::default())
}

/// As [`common_eigenvector`], with explicit ambient size (so the empty
/// generator list works: any line is invariant, e_1 is returned) and caps.
pub fn common_eigenvector_sized<K: Field + FieldRoots>(
    field: K,
    n: usize,
    generators: &[Matrix<K>],
    caps: &Caps,
) -> Result<Option<(Vec<K::Elem>, Vec<K::Elem>)>> {
    validate_generators(&field, n, generators)?;
    if n == 0 {
        return Ok(None);
    }
    if generators.is_empty() {
        let mut e1 = vec![field.zero(); n];
        e1[0] = field.one();
        return Ok(Some((e1, vec![])));
    }
    // per-generator eigenkernels, eigenvalues ascending
    let mut kernels: Vec<Vec<(K::Elem, Subspace<K>)>> = vec![];
    for t in generators {
        let mp = t.min_poly()?;
        let roots = mp.roots_in_field_capped(caps.root_candidates)?;
        if roots.is_empty() {
            return Ok(None);
        }
        let mut this = vec![];
        for (lambda, _) in roots {
            let shifted = t.sub(&Matrix::identity(field.clone(), n).scale(&lambda));
            let ker = shifted.kernel();
            debug_assert!(ker.dim() > 0, "in-field eigenvalue must have eigenvectors");
            this.push((lambda, ker));
        }
        kernels.push(this);
    }
    let mut work = 0u64;
    let full = Subspace::full(field.clone(), n);
    let mut tuple: Vec<K::Elem> = vec![];
    let found = search(&kernels, 0, &full, &mut tuple, &mut work, caps)?;
    Ok(found.map(|(space, tuple)| {
        let v = space.basis()[0].clone();
        (v, tuple)
    }))
}

fn search<K: Field>(
    kernels: &[Vec<(K::Elem, Subspace<K>)>],
    depth: usize,
    current: &Subspace<K>,
    tuple: &mut Vec<K::Elem>,
    work: &mut u64,
    caps: &Caps,
) -> Result<Option<(Subspace<K>, Vec<K::Elem>)>> {
    if depth == kernels.len() {
        return Ok(Some((current.clone(), tuple.clone())));
    }
    for (lambda, ker) in &kernels[depth] {
        *work += 1;
        if *work > caps.eigen_tuples {
            return Err(Error::ResourceExceeded {
                what: "enumerating eigenvalue tuples",
                cap: caps.eigen_tuples,
            });
        }
        let next = current.intersect(ker)?;
        if next.is_zero() {
            continue;
        }
        tuple.push(lambda.clone());
        if let Some(hit) = search(kernels, depth + 1, &next, tuple, work, caps)? {
            return Ok(Some(hit));
        }
        tuple.pop();
    }
    Ok(None)
}

/// Simultaneous triangularization by recursive common-eigenvector search on
/// quotients. Succeeds iff a full flag is built; otherwise the failing stage
/// is returned as a replayable witness. A triangularizable set stays
/// triangularizable on quotients by invariant subspaces, so emptiness at any
/// stage certifies non-triangularizability.
///
/// ```
/// use flagstone::{QMatrix, Rationals};
/// use flagstone::tri::{self, Verdict};
///
/// let a = QMatrix::from_ints(Rationals, &[&[1, 2], &[0, 3]]);
/// let b = QMatrix::from_ints(Rationals, &[&[4, 5], &[0, 6]]);
/// let gens = vec![a, b];
/// match tri::triangularize(&gens).unwrap() {
///     Verdict::Triangularizable(t) => assert!(tri::verify(&t, &gens)),
///     Verdict::StrictlyTriangularizable(_) | Verdict::Not(_) => unreachable!(),
/// }
/// ```
pub fn triangularize<K: Field + FieldRoots>(generators: &[Matrix<K>]) -> Result<Verdict<K>> {
    let Some(first) = generators.first() else {
        return Err(Error::EmptyGenerators);
    };
    triangularize_sized(first.field().clone(), first.rows(), generators, &Caps::default())
}

pub fn triangularize_sized<K: Field + FieldRoots>(
    field: K,
    n: usize,
    generators: &[Matrix<K>],
    caps: &Caps,
) -> Result<Verdict<K>> {
    validate_generators(&field, n, generators)?;
    let mut flag: Vec<Vec<K::Elem>> = vec![];
    let mut w = Subspace::zero(field.clone(), n);
    while flag.len() < n {
        let qmap = QuotientMap::new(n, w.clone())?;
        let induced: Vec<Matrix<K>> = generators.iter().map(|t| qmap.induce(t)).collect();
        match common_eigenvector_sized(field.clone(), qmap.dim(), &induced, caps)? {
            None => {
                return Ok(Verdict::Not(Witness {
                    stage: flag.len(),
                    kind: ObstructionKind::NoCommonEigenvector,
                    flag_prefix: flag,
                    induced,
                }))
            }
            Some((vbar, _)) => {
                let v = qmap.lift(&vbar);
                w = w.add_vector(&v);
                flag.push(v);
                debug_assert_eq!(w.dim(), flag.len());
            }
        }
    }
    let tri = assemble(field, flag, generators, false);
    Ok(Verdict::Triangularizable(tri))
}

/// Strict triangularization: absorb the whole common kernel of the induced
/// generators each round, or fail with a witness. At finite dimension
/// success is equivalent to nilpotency of the generated nonunital algebra.
pub fn strict_triangularize<K: Field + FieldRoots>(
    generators: &[Matrix<K>],
) -> Result<Verdict<K>> {
    let Some(first) = generators.first() else {
        return Err(Error::EmptyGenerators);
    };
    strict_triangularize_sized(first.field().clone(), first.rows(), generators, &Caps::default())
}

pub fn strict_triangularize_sized<K: Field + FieldRoots>(
    field: K,
    n: usize,
    generators: &[Matrix<K>],
    _caps: &Caps,
) -> Result<Verdict<K>> {
    validate_generators(&field, n, generators)?;
    let mut flag: Vec<Vec<K::Elem>> = vec![];
    let mut w = Subspace::zero(field.clone(), n);
    while flag.len() < n {
        let qmap = QuotientMap::new(n, w.clone())?;
        let induced: Vec<Matrix<K>> = generators.iter().map(|t| qmap.induce(t)).collect();
        // common kernel of the induced generators; empty list means the
        // whole quotient (the empty set is vacuously strict)
        let mut common = Subspace::full(field.clone(), qmap.dim());
        for t in &induced {
            common = common.intersect(&t.kernel())?;
            if common.is_zero() {
                break;
            }
        }
        if common.is_zero() {
            return Ok(Verdict::Not(Witness {
                stage: flag.len(),
                kind: ObstructionKind::TrivialCommonKernel,
                flag_prefix: flag,
                induced,
            }));
        }
        for vbar in common.basis() {
            let v = qmap.lift(vbar);
            w = w.add_vector(&v);
            flag.push(v);
        }
        debug_assert_eq!(w.dim(), flag.len());
    }
    let tri = assemble(field, flag, generators, true);
    Ok(Verdict::StrictlyTriangularizable(tri))
}

fn assemble<K: Field>(
    field: K,
    flag_vectors: Vec<Vec<K::Elem>>,
    generators: &[Matrix<K>],
    strict: bool,
) -> Triangularization<K> {
    let flag = Flag::new(field, flag_vectors);
    let p = flag.matrix();
    let pinv = p.inverse().expect("flag vectors are independent");
    let conjugated: Vec<Matrix<K>> =
        generators.iter().map(|t| pinv.mul(t).mul(p)).collect();
    for c in &conjugated {
        assert!(
            c.is_upper_triangular(strict),
            "constructed flag must triangularize the generators"
        );
    }
    let diagonal_map = conjugated.iter().map(Matrix::diagonal).collect();
    Triangularization { flag, conjugated, strict, diagonal_map }
}

/// Independent certificate check: everything is recomputed from the flag and
/// the original generators, then compared entry-by-entry against the claims.
pub fn verify<K: Field>(t: &Triangularization<K>, generators: &[Matrix<K>]) -> bool {
    let n = t.flag.dim();
    let p = t.flag.matrix();
    // flag consistency: columns of P are the ordered basis
    if t.flag.ordered_basis().len() != n || p.rows() != n {
        return false;
    }
    for (j, v) in t.flag.ordered_basis().iter().enumerate() {
        if v.len() != n || p.col_vec(j) != *v {
            return false;
        }
    }
    if generators.len() != t.conjugated.len() || t.diagonal_map.len() != generators.len() {
        return false;
    }
    if generators.iter().any(|g| g.rows() != n || g.cols() != n) {
        return false;
    }
    let Ok(pinv) = p.inverse() else {
        return false;
    };
    let field = p.field().clone();
    // conjugates, pattern, and diagonal map, from scratch
    for ((g, claimed), diag) in generators.iter().zip(&t.conjugated).zip(&t.diagonal_map) {
        let fresh = pinv.mul(g).mul(p);
        if fresh != *claimed {
            return false;
        }
        if !fresh.is_upper_triangular(t.strict) {
            return false;
        }
        if *diag != fresh.diagonal() {
            return false;
        }
    }
    // flag invariance, directly on the original generators
    let mut stage = Subspace::zero(field, n);
    for v in t.flag.ordered_basis() {
        stage = stage.add_vector(v);
        for g in generators {
            if !stage.contains(&g.mul_vec(v)) {
                return false;
            }
        }
    }
    true
}

/// Re-run the enumeration recorded in a failure witness against the original
/// generators: rebuilds the quotient at the recorded stage, compares the
/// induced generators, and confirms emptiness.
pub fn replay_witness<K: Field + FieldRoots>(
    field: K,
    n: usize,
    generators: &[Matrix<K>],
    witness: &Witness<K>,
    caps: &Caps,
) -> Result<bool> {
    validate_generators(&field, n, generators)?;
    if witness.flag_prefix.len() != witness.stage || witness.stage >= n {
        return Ok(false);
    }
    // the recorded partial flag must itself be an invariant chain
    let mut stage = Subspace::zero(field.clone(), n);
    for v in &witness.flag_prefix {
        if v.len() != n {
            return Ok(false);
        }
        let next = stage.add_vector(v);
        if next.dim() != stage.dim() + 1 {
            return Ok(false);
        }
        stage = next;
    }
    for v in &witness.flag_prefix {
        for g in generators {
            if !stage.contains(&g.mul_vec(v)) {
                return Ok(false);
            }
        }
    }
    let qmap = QuotientMap::new(n, stage)?;
    let induced: Vec<Matrix<K>> = generators.iter().map(|t| qmap.induce(t)).collect();
    if induced != witness.induced {
        return Ok(false);
    }
    match witness.kind {
        ObstructionKind::NoCommonEigenvector => {
            let hit = common_eigenvector_sized(field, qmap.dim(), &induced, caps)?;
            Ok(hit.is_none())
        }
        ObstructionKind::TrivialCommonKernel => {
            let mut common = Subspace::full(field, qmap.dim());
            for t in &induced {
                common = common.intersect(&t.kernel())?;
            }
            Ok(common.is_zero() && !induced.is_empty())
        }
    }
}

/// Structural report for the McCoy-style decision.
#[derive(Debug, Clone)]
pub struct McCoyReport<K: Field> {
    pub algebra: AlgebraBasis<K>,
    pub radical: RadicalReport<K>,
    /// Structural verdict: triangularizable iff the quotient splits as k^m.
    pub triangularizable: bool,
}

/// Structural decision: close the unital algebra, compute the radical and
/// quotient, and decide whether the quotient splits as k^m. Requires the
/// characteristic guard of the trace-form radical.
pub fn check_mccoy<K: Field + FieldRoots>(generators: &[Matrix<K>]) -> Result<McCoyReport<K>> {
    let Some(first) = generators.first() else {
        return Err(Error::EmptyGenerators);
    };
    check_mccoy_sized(first.field().clone(), first.rows(), generators)
}

pub fn check_mccoy_sized<K: Field + FieldRoots>(
    field: K,
    n: usize,
    generators: &[Matrix<K>],
) -> Result<McCoyReport<K>> {
    validate_generators(&field, n, generators)?;
    let algebra = algebra::close_algebra_sized(field, n, generators, true)?;
    let radical = algebra::analyze(&algebra)?;
    let triangularizable = radical.split_as_km;
    if triangularizable {
        assert!(radical.m <= n, "split quotient dimension exceeds matrix size");
    }
    Ok(McCoyReport { algebra, radical, triangularizable })
}

/// The strictly-triangular part of a triangular algebra: the subspace (in
/// algebra coordinates) of elements whose conjugates have zero diagonal.
/// For a triangular algebra this is exactly the set of its topologically
/// nilpotent elements, and it is a two-sided ideal.
pub fn strict_part<K: Field>(
    t: &Triangularization<K>,
    algebra: &AlgebraBasis<K>,
) -> Result<Subspace<K>> {
    let n = t.flag.dim();
    if algebra.matrix_size() != n {
        return Err(Error::SizeMismatch);
    }
    let p = t.flag.matrix();
    let pinv = p.inverse().map_err(|_| Error::NotTriangularForFlag)?;
    let field = algebra.field().clone();
    let d = algebra.dim();
    // constraint matrix: row j reads off diagonal entry j of the conjugate
    let mut constraints = Matrix::zero(field.clone(), n, d);
    for (i, b) in algebra.elements().iter().enumerate() {
        let c = pinv.mul(b).mul(p);
        if !c.is_upper_triangular(false) {
            return Err(Error::NotTriangularForFlag);
        }
        for j in 0..n {
            constraints.set(j, i, c.get(j, j).clone());
        }
    }
    Ok(constraints.kernel())
}
