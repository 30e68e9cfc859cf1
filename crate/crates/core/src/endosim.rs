//! Desk-scale sandbox for endomorphisms of a countable-dimensional space
//! whose basis is well-ordered as the naturals followed by a finite tail.
//!
//! Operators are finitely supported plus an optional scalar multiple of the
//! identity, which is enough to express every counterexample this crate
//! reproduces. Topological nilpotence is only ever probed up to an explicit
//! bound: a survivor is a bounded witness, never an unbounded claim.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Field;

/// Index into the well-ordered basis: Nat(1) < Nat(2) < ... < Top(0) <
/// Top(1) < ... The derived ordering on the enum is exactly this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrdIndex {
    Nat(u64),
    Top(usize),
}

impl OrdIndex {
    pub fn nat(i: u64) -> Self {
        assert!(i >= 1, "Nat indices start at 1");
        OrdIndex::Nat(i)
    }

    pub fn top(t: usize) -> Self {
        OrdIndex::Top(t)
    }
}

impl fmt::Display for OrdIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrdIndex::Nat(i) => write!(f, "n:{i}"),
            OrdIndex::Top(t) => write!(f, "inf:{t}"),
        }
    }
}

impl FromStr for OrdIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid index {s:?}"));
        if let Some(i) = s.strip_prefix("n:") {
            let i: u64 = i.parse().map_err(|_| bad())?;
            if i == 0 {
                return Err(bad());
            }
            Ok(OrdIndex::Nat(i))
        } else if let Some(t) = s.strip_prefix("inf:") {
            Ok(OrdIndex::Top(t.parse().map_err(|_| bad())?))
        } else {
            Err(bad())
        }
    }
}

/// Finitely-supported vector; no explicit zero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinVec<K: Field> {
    field: K,
    entries: BTreeMap<OrdIndex, K::Elem>,
}

impl<K: Field> FinVec<K> {
    pub fn zero(field: K) -> Self {
        FinVec { field, entries: BTreeMap::new() }
    }

    /// The basis vector e_i.
    pub fn unit(field: K, i: OrdIndex) -> Self {
        let mut v = Self::zero(field);
        let one = v.field.one();
        v.set(i, one);
        v
    }

    pub fn from_entries(field: K, entries: Vec<(OrdIndex, K::Elem)>) -> Self {
        let mut v = Self::zero(field);
        for (i, x) in entries {
            let cur = v.get(i);
            let sum = v.field.add(&cur, &x);
            v.set(i, sum);
        }
        v
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn set(&mut self, i: OrdIndex, x: K::Elem) {
        if self.field.is_zero(&x) {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, x);
        }
    }

    pub fn get(&self, i: OrdIndex) -> K::Elem {
        self.entries.get(&i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&OrdIndex, &K::Elem)> {
        self.entries.iter()
    }

    /// Largest Nat index in the support, if any.
    pub fn max_nat_support(&self) -> Option<u64> {
        self.entries
            .keys()
            .filter_map(|i| match i {
                OrdIndex::Nat(n) => Some(*n),
                OrdIndex::Top(_) => None,
            })
            .max()
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let mut out = Self::zero(self.field.clone());
        for (i, x) in &self.entries {
            out.set(*i, self.field.mul(x, c));
        }
        out
    }
}

/// Finitely-supported endomorphism plus an optional scalar multiple of the
/// identity, so elements of the form a.1 + sum a_i E_i are first-class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSuppOp<K: Field> {
    field: K,
    id_scalar: K::Elem,
    entries: BTreeMap<(OrdIndex, OrdIndex), K::Elem>,
}

impl<K: Field> FinSuppOp<K> {
    pub fn zero(field: K) -> Self {
        let id = field.zero();
        FinSuppOp { field, id_scalar: id, entries: BTreeMap::new() }
    }

    pub fn identity_multiple(field: K, a: K::Elem) -> Self {
        FinSuppOp { field, id_scalar: a, entries: BTreeMap::new() }
    }

    /// The matrix unit E_{r,c}: sends e_c to e_r, kills everything else.
    pub fn unit(field: K, r: OrdIndex, c: OrdIndex) -> Self {
        let mut op = Self::zero(field);
        let one = op.field.one();
        op.set_entry(r, c, one);
        op
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn id_scalar(&self) -> &K::Elem {
        &self.id_scalar
    }

    pub fn set_id_scalar(&mut self, a: K::Elem) {
        self.id_scalar = a;
    }

    pub fn set_entry(&mut self, r: OrdIndex, c: OrdIndex, x: K::Elem) {
        if self.field.is_zero(&x) {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), x);
        }
    }

    pub fn entry(&self, r: OrdIndex, c: OrdIndex) -> K::Elem {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(OrdIndex, OrdIndex), &K::Elem)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.id_scalar) && self.entries.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = self.clone();
        out.id_scalar = f.add(&self.id_scalar, &other.id_scalar);
        for ((r, c), x) in &other.entries {
            let cur = out.entry(*r, *c);
            out.set_entry(*r, *c, f.add(&cur, x));
        }
        out
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f.clone());
        out.id_scalar = f.mul(&self.id_scalar, c);
        for ((r, s), x) in &self.entries {
            out.set_entry(*r, *s, f.mul(x, c));
        }
        out
    }

    /// Exact matrix-vector action, including the identity part.
    pub fn apply(&self, v: &FinVec<K>) -> FinVec<K> {
        let f = &self.field;
        let mut out = FinVec::zero(f.clone());
        if !f.is_zero(&self.id_scalar) {
            for (i, x) in v.support() {
                out.set(*i, f.mul(&self.id_scalar, x));
            }
        }
        for ((r, c), a) in &self.entries {
            let x = v.get(*c);
            if f.is_zero(&x) {
                continue;
            }
            let cur = out.get(*r);
            out.set(*r, f.add(&cur, &f.mul(a, &x)));
        }
        out
    }

    /// Exact composition self . other (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f.clone());
        out.id_scalar = f.mul(&self.id_scalar, &other.id_scalar);
        // a.1 * B and b.1 * A
        for ((r, c), x) in &other.entries {
            let cur = out.entry(*r, *c);
            out.set_entry(*r, *c, f.add(&cur, &f.mul(&self.id_scalar, x)));
        }
        for ((r, c), x) in &self.entries {
            let cur = out.entry(*r, *c);
            out.set_entry(*r, *c, f.add(&cur, &f.mul(&other.id_scalar, x)));
        }
        // A * B
        for ((ra, ca), x) in &self.entries {
            for ((rb, cb), y) in &other.entries {
                if ca != rb {
                    continue;
                }
                let cur = out.entry(*ra, *cb);
                out.set_entry(*ra, *cb, f.add(&cur, &f.mul(x, y)));
            }
        }
        out
    }

    /// Triangular for the index order: every explicit entry (r, c) has
    /// r <= c. The identity part is always triangular.
    pub fn is_triangular(&self) -> bool {
        self.entries.keys().all(|(r, c)| r <= c)
    }

    /// Strictly triangular: every entry strictly above the diagonal and no
    /// identity part.
    pub fn is_strictly_triangular(&self) -> bool {
        self.field.is_zero(&self.id_scalar) && self.entries.keys().all(|(r, c)| r < c)
    }

    /// Diagonal entries at the given window indices; requires triangularity.
    pub fn diag_map(&self, window: &[OrdIndex]) -> Result<Vec<K::Elem>> {
        if !self.is_triangular() {
            return Err(Error::NotTriangular);
        }
        let f = &self.field;
        Ok(window
            .iter()
            .map(|&i| f.add(&self.id_scalar, &self.entry(i, i)))
            .collect())
    }
}

/// Outcome of a bounded nilpotence probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome<K: Field> {
    /// All window vectors became zero by step n (n <= bound).
    Killed(u64),
    /// Some window vector was still nonzero after `bound` steps; its value
    /// at that step is the witness. Not a disproof, only a bounded witness.
    Survived { witness: FinVec<K> },
}

/// Iterate v_k = seq(k)(v_{k-1}) for each window vector, k = 1..=bound.
/// Killed(n) reports the first step by which the whole window was dead.
pub fn bounded_nilpotence_probe<K: Field>(
    mut seq: impl FnMut(u64) -> FinSuppOp<K>,
    window: &[FinVec<K>],
    bound: u64,
) -> ProbeOutcome<K> {
    assert!(bound >= 1, "probe bound must be at least 1");
    let mut state: Vec<FinVec<K>> = window.to_vec();
    let mut died_at: Vec<Option<u64>> = state
        .iter()
        .map(|v| if v.is_zero() { Some(0) } else { None })
        .collect();
    for k in 1..=bound {
        if died_at.iter().all(Option::is_some) {
            break;
        }
        let op = seq(k);
        for (v, d) in state.iter_mut().zip(died_at.iter_mut()) {
            if d.is_some() {
                continue;
            }
            *v = op.apply(v);
            if v.is_zero() {
                *d = Some(k);
            }
        }
    }
    if let Some(pos) = died_at.iter().position(Option::is_none) {
        return ProbeOutcome::Survived { witness: state[pos].clone() };
    }
    ProbeOutcome::Killed(died_at.iter().map(|d| d.unwrap()).max().unwrap_or(0))
}

/// First step at which the orbit of `v` under `seq` dies, up to `bound`.
pub fn kill_step<K: Field>(
    mut seq: impl FnMut(u64) -> FinSuppOp<K>,
    v: &FinVec<K>,
    bound: u64,
) -> Option<u64> {
    if v.is_zero() {
        return Some(0);
    }
    let mut cur = v.clone();
    for k in 1..=bound {
        cur = seq(k).apply(&cur);
        if cur.is_zero() {
            return Some(k);
        }
    }
    None
}

/// Outcome of a one-dimensional invariance probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvarianceOutcome<K: Field> {
    Invariant,
    /// The first generator whose image of v leaves span{v}.
    Escapes { op: FinSuppOp<K>, image: FinVec<K> },
}

/// Check whether each generator maps v into span{v}.
pub fn one_dim_invariant_probe<K: Field>(
    generators: &[FinSuppOp<K>],
    v: &FinVec<K>,
) -> Result<InvarianceOutcome<K>> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let f = v.field().clone();
    for g in generators {
        let w = g.apply(v);
        if w.is_zero() {
            continue;
        }
        // w must be a scalar multiple of v: read the ratio off the first
        // support index of w and compare exactly
        let (&i, wi) = w.support().next().expect("nonzero vector has support");
        let vi = v.get(i);
        let proportional = if f.is_zero(&vi) {
            false
        } else {
            let c = f.div(wi, &vi).expect("nonzero divisor");
            w == v.scale(&c)
        };
        if !proportional {
            return Ok(InvarianceOutcome::Escapes { op: g.clone(), image: w });
        }
    }
    Ok(InvarianceOutcome::Invariant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    type QOp = FinSuppOp<Rationals>;
    type QVec = FinVec<Rationals>;

    fn nat(i: u64) -> OrdIndex {
        OrdIndex::nat(i)
    }

    #[test]
    fn ord_index_is_the_right_well_order() {
        assert!(nat(1) < nat(2));
        assert!(nat(1_000_000) < OrdIndex::top(0));
        assert!(OrdIndex::top(0) < OrdIndex::top(1));
    }

    #[test]
    fn ord_index_round_trip() {
        for s in ["n:1", "n:42", "inf:0", "inf:3"] {
            let i: OrdIndex = s.parse().unwrap();
            assert_eq!(i.to_string(), s);
        }
        assert!("n:0".parse::<OrdIndex>().is_err());
        assert!("x:1".parse::<OrdIndex>().is_err());
    }

    #[test]
    fn apply_examples() {
        // E21 e1 = e2
        let e21 = QOp::unit(Rationals, nat(2), nat(1));
        let e1 = QVec::unit(Rationals, nat(1));
        assert_eq!(e21.apply(&e1), QVec::unit(Rationals, nat(2)));

        // identity multiple acts as identity
        let one = QOp::identity_multiple(Rationals, Rationals.one());
        let v = QVec::from_entries(
            Rationals,
            vec![(nat(1), Rationals.from_int(2)), (nat(5), Rationals.from_int(-3))],
        );
        assert_eq!(one.apply(&v), v);

        // truncated shift sends e3 to e2
        let shift = shift_truncated(5);
        let e3 = QVec::unit(Rationals, nat(3));
        assert_eq!(shift.apply(&e3), QVec::unit(Rationals, nat(2)));
    }

    /// sum of E_{i-1,i} for 2 <= i <= m: the shift T(v_i) = v_{i-1}
    /// restricted to the first m coordinates.
    fn shift_truncated(m: u64) -> QOp {
        let mut op = QOp::zero(Rationals);
        for i in 2..=m {
            op.set_entry(nat(i - 1), nat(i), Rationals.one());
        }
        op
    }

    #[test]
    fn compose_chain_collapses_to_corner_unit() {
        // E_{n,n-1} ... E_{3,2} E_{2,1} = E_{n,1}
        let n = 6;
        let mut acc = QOp::unit(Rationals, nat(2), nat(1));
        for i in 3..=n {
            acc = QOp::unit(Rationals, nat(i), nat(i - 1)).compose(&acc);
        }
        assert_eq!(acc, QOp::unit(Rationals, nat(n), nat(1)));
    }

    #[test]
    fn compose_with_zero_and_orthogonal_idempotents() {
        let e21 = QOp::unit(Rationals, nat(2), nat(1));
        let zero = QOp::zero(Rationals);
        assert_eq!(e21.compose(&zero), zero);
        assert_eq!(zero.compose(&e21), zero);

        // the idempotents with entries (i,i) and (i,inf)
        let e = |i: u64| {
            let mut op = QOp::zero(Rationals);
            op.set_entry(nat(i), nat(i), Rationals.one());
            op.set_entry(nat(i), OrdIndex::top(0), Rationals.one());
            op
        };
        for i in 1..=4u64 {
            for j in 1..=4u64 {
                let prod = e(i).compose(&e(j));
                if i == j {
                    assert_eq!(prod, e(i));
                } else {
                    assert!(prod.is_zero());
                }
            }
        }
    }

    #[test]
    fn triangularity_examples() {
        let e12 = QOp::unit(Rationals, nat(1), nat(2));
        assert!(e12.is_triangular());
        assert!(e12.is_strictly_triangular());

        // idempotent with entries (i,i) and (i,inf): triangular, not strict
        let mut e2 = QOp::zero(Rationals);
        e2.set_entry(nat(2), nat(2), Rationals.one());
        e2.set_entry(nat(2), OrdIndex::top(0), Rationals.one());
        assert!(e2.is_triangular());
        assert!(!e2.is_strictly_triangular());

        let e21 = QOp::unit(Rationals, nat(2), nat(1));
        assert!(!e21.is_triangular());
    }

    #[test]
    fn strict_triangular_closed_under_composition() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..100 {
            let a = random_strict(&mut rng);
            let b = random_strict(&mut rng);
            assert!(a.is_strictly_triangular());
            assert!(b.is_strictly_triangular());
            assert!(a.compose(&b).is_strictly_triangular());
        }
    }

    fn random_strict(rng: &mut StdRng) -> QOp {
        let mut op = QOp::zero(Rationals);
        for _ in 0..rng.gen_range(0..5) {
            let r = rng.gen_range(1..6u64);
            let c = rng.gen_range(r + 1..8u64);
            op.set_entry(nat(r), nat(c), Rationals.from_int(rng.gen_range(-3..=3)));
        }
        op
    }

    #[test]
    fn compose_is_associative_on_random_triples() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..100 {
            let a = random_op(&mut rng);
            let b = random_op(&mut rng);
            let c = random_op(&mut rng);
            assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }
    }

    fn random_op(rng: &mut StdRng) -> QOp {
        let mut op = QOp::zero(Rationals);
        if rng.gen_bool(0.3) {
            op.set_id_scalar(Rationals.from_int(rng.gen_range(-2..=2)));
        }
        for _ in 0..rng.gen_range(0..5) {
            let r = rng.gen_range(1..6u64);
            let c = rng.gen_range(1..6u64);
            op.set_entry(nat(r), nat(c), Rationals.from_int(rng.gen_range(-3..=3)));
        }
        op
    }

    #[test]
    fn lowering_chain_survives_probe() {
        // seq(k) = E_{k+1,k} applied to e1 marches out forever
        let outcome = bounded_nilpotence_probe(
            |k| QOp::unit(Rationals, nat(k + 1), nat(k)),
            &[QVec::unit(Rationals, nat(1))],
            50,
        );
        match outcome {
            ProbeOutcome::Survived { witness } => {
                assert_eq!(witness, QVec::unit(Rationals, nat(51)));
            }
            other => panic!("expected survival, got {other:?}"),
        }
    }

    #[test]
    fn golden_survivor_for_every_bound_up_to_1000() {
        for bound in 1..=1000u64 {
            let outcome = bounded_nilpotence_probe(
                |k| QOp::unit(Rationals, nat(k + 1), nat(k)),
                &[QVec::unit(Rationals, nat(1))],
                bound,
            );
            assert_eq!(
                outcome,
                ProbeOutcome::Survived { witness: QVec::unit(Rationals, nat(bound + 1)) },
                "bound {bound}"
            );
        }
    }

    #[test]
    fn shift_kills_windows_in_exact_steps() {
        let m = 10u64;
        let shift = shift_truncated(m);
        for i in 1..=m {
            let v = QVec::unit(Rationals, nat(i));
            assert_eq!(kill_step(|_| shift.clone(), &v, 50), Some(i));
        }
        let window: Vec<QVec> =
            (1..=m).map(|i| QVec::unit(Rationals, nat(i))).collect();
        assert_eq!(
            bounded_nilpotence_probe(|_| shift.clone(), &window, 50),
            ProbeOutcome::Killed(m)
        );
    }

    #[test]
    fn zero_op_kills_immediately() {
        let window = vec![QVec::unit(Rationals, nat(3))];
        assert_eq!(
            bounded_nilpotence_probe(|_| QOp::zero(Rationals), &window, 10),
            ProbeOutcome::Killed(1)
        );
    }

    #[test]
    fn invariance_probe_examples() {
        // diagonal family leaves every basis line invariant
        let mut diag = QOp::zero(Rationals);
        diag.set_entry(nat(1), nat(1), Rationals.from_int(2));
        diag.set_entry(nat(2), nat(2), Rationals.from_int(3));
        let v = QVec::unit(Rationals, nat(2));
        assert_eq!(
            one_dim_invariant_probe(&[diag], &v).unwrap(),
            InvarianceOutcome::Invariant
        );

        // strictly-lower family always escapes at the top of the support
        let v = QVec::from_entries(
            Rationals,
            vec![(nat(1), Rationals.from_int(1)), (nat(3), Rationals.from_int(2))],
        );
        let top = v.max_nat_support().unwrap();
        let escape_op = QOp::unit(Rationals, nat(top + 1), nat(top));
        match one_dim_invariant_probe(&[escape_op.clone()], &v).unwrap() {
            InvarianceOutcome::Escapes { op, image } => {
                assert_eq!(op, escape_op);
                let mut expected = QVec::zero(Rationals);
                expected.set(nat(top + 1), Rationals.from_int(2));
                assert_eq!(image, expected);
            }
            other => panic!("expected escape, got {other:?}"),
        }

        // empty generator list: trivially invariant
        assert_eq!(
            one_dim_invariant_probe(&[], &v).unwrap(),
            InvarianceOutcome::Invariant
        );

        // zero vector is rejected
        assert_eq!(
            one_dim_invariant_probe(&[], &QVec::zero(Rationals)).unwrap_err(),
            Error::ZeroVector
        );
    }

    #[test]
    fn diag_map_examples() {
        // a.1 + sum a_i E_i over window {1..n, inf}: (a_1+a, ..., a_n+a, a)
        let a = Rationals.from_int(5);
        let coeffs: Vec<i64> = vec![2, -1, 7];
        let mut op = QOp::identity_multiple(Rationals, a.clone());
        for (idx, &c) in coeffs.iter().enumerate() {
            let i = nat(idx as u64 + 1);
            op.set_entry(i, i, Rationals.from_int(c));
            op.set_entry(i, OrdIndex::top(0), Rationals.from_int(c));
        }
        let window: Vec<OrdIndex> =
            (1..=3).map(nat).chain([OrdIndex::top(0)]).collect();
        let diag = op.diag_map(&window).unwrap();
        let expected: Vec<_> = coeffs
            .iter()
            .map(|&c| Rationals.add(&Rationals.from_int(c), &a))
            .chain([a.clone()])
            .collect();
        assert_eq!(diag, expected);

        // identity op: all ones
        let one = QOp::identity_multiple(Rationals, Rationals.one());
        assert_eq!(
            one.diag_map(&window).unwrap(),
            vec![Rationals.one(); 4]
        );

        // non-triangular input is an error
        let e21 = QOp::unit(Rationals, nat(2), nat(1));
        assert_eq!(e21.diag_map(&window).unwrap_err(), Error::NotTriangular);
    }

    #[test]
    fn diag_map_is_multiplicative_on_triangular_pairs() {
        let mut rng = StdRng::seed_from_u64(17);
        let window: Vec<OrdIndex> = (1..=6).map(nat).chain([OrdIndex::top(0)]).collect();
        for _ in 0..100 {
            let a = random_triangular(&mut rng);
            let b = random_triangular(&mut rng);
            let lhs = a.compose(&b).diag_map(&window).unwrap();
            let rhs: Vec<_> = a
                .diag_map(&window)
                .unwrap()
                .iter()
                .zip(b.diag_map(&window).unwrap())
                .map(|(x, y)| Rationals.mul(x, &y))
                .collect();
            assert_eq!(lhs, rhs);

            // additivity too
            let sum_diag = a.add(&b).diag_map(&window).unwrap();
            let expect: Vec<_> = a
                .diag_map(&window)
                .unwrap()
                .iter()
                .zip(b.diag_map(&window).unwrap())
                .map(|(x, y)| Rationals.add(x, &y))
                .collect();
            assert_eq!(sum_diag, expect);
        }
    }

    fn random_triangular(rng: &mut StdRng) -> QOp {
        let mut op = QOp::zero(Rationals);
        if rng.gen_bool(0.5) {
            op.set_id_scalar(Rationals.from_int(rng.gen_range(-2..=2)));
        }
        for _ in 0..rng.gen_range(0..6) {
            let r = rng.gen_range(1..6u64);
            let c = rng.gen_range(r..7u64);
            op.set_entry(nat(r), nat(c), Rationals.from_int(rng.gen_range(-3..=3)));
        }
        if rng.gen_bool(0.4) {
            let r = rng.gen_range(1..6u64);
            op.set_entry(nat(r), OrdIndex::top(0), Rationals.from_int(rng.gen_range(-3..=3)));
        }
        op
    }
}
