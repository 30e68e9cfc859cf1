//! Univariate polynomials over an exact field, with exhaustive in-field root
//! finding.
//!
//! Root finding is deliberately blind to roots outside the base field: over Q
//! it runs the rational-root theorem on the primitive integer form, over F_p
//! it evaluates at every residue. That is all the triangularization engines
//! ever need, since only eigenvalues in the base field matter.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};

/// Work cap on root-candidate enumeration; exceeding it yields
/// [`Error::ResourceExceeded`] rather than a silent miss.
pub const DEFAULT_ROOT_CAP: u64 = 1_000_000;

/// Dense univariate polynomial, coefficients lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero
/// (represented by an empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<K: Field> {
    field: K,
    coeffs: Vec<K::Elem>,
}

impl<K: Field> Poly<K> {
    pub fn new(field: K, mut coeffs: Vec<K::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: K) -> Self {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: K) -> Self {
        let one = field.one();
        Poly { field, coeffs: vec![one] }
    }

    /// x - a
    pub fn linear(field: K, a: &K::Elem) -> Self {
        let coeffs = vec![field.neg(a), field.one()];
        Poly { field, coeffs }
    }

    pub fn from_ints(field: K, ints: &[i64]) -> Self {
        let coeffs = ints.iter().map(|&n| field.from_int(n)).collect();
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn coeffs(&self) -> &[K::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn eval(&self, x: &K::Elem) -> K::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            let b = other.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            coeffs.push(f.add(&a, &b));
        }
        Poly::new(f.clone(), coeffs)
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let f = &self.field;
        let coeffs = self.coeffs.iter().map(|a| f.mul(a, c)).collect();
        Poly::new(f.clone(), coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f.clone());
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f.clone(), coeffs)
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dlead = f.inv(divisor.leading().unwrap())?;
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Ok((Poly::zero(f.clone()), self.clone()));
        }
        let qlen = rem.len() - ddeg;
        let mut quo = vec![f.zero(); qlen];
        for k in (0..qlen).rev() {
            let c = f.mul(&rem[k + ddeg], &dlead);
            if f.is_zero(&c) {
                continue;
            }
            quo[k] = c.clone();
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(&rem[k + i], &f.mul(&c, d));
            }
        }
        Ok((Poly::new(f.clone(), quo), Poly::new(f.clone(), rem)))
    }

    /// Scale so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&self.field.inv(l).expect("nonzero leading coefficient")),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let g = self.gcd(other);
        let (q, r) = self.div_rem(&g).expect("gcd divides");
        debug_assert!(r.is_zero());
        q.mul(other).monic()
    }

    /// Multiplicity of `a` as a root, via repeated division by (x - a).
    pub fn root_multiplicity(&self, a: &K::Elem) -> usize {
        let lin = Poly::linear(self.field.clone(), a);
        let mut m = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(&lin).expect("linear divisor");
            if !r.is_zero() {
                return m;
            }
            m += 1;
            cur = q;
            if cur.is_zero() {
                return m;
            }
        }
    }

    /// True iff f is a product of `deg f` distinct monic linear factors over
    /// the base field.
    pub fn splits_into_distinct_linear_factors(&self) -> Result<bool>
    where
        K: FieldRoots,
    {
        let deg = self.degree().ok_or(Error::ZeroPolynomial)?;
        let roots = self.roots_in_field()?;
        Ok(roots.len() == deg && roots.iter().all(|(_, m)| *m == 1))
    }

    /// All roots lying in the base field, with multiplicities, sorted by the
    /// field's total order.
    pub fn roots_in_field(&self) -> Result<Vec<(K::Elem, usize)>>
    where
        K: FieldRoots,
    {
        self.roots_in_field_capped(DEFAULT_ROOT_CAP)
    }

    pub fn roots_in_field_capped(&self, cap: u64) -> Result<Vec<(K::Elem, usize)>>
    where
        K: FieldRoots,
    {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots = K::roots(self, cap)?;
        roots.sort_by(|a, b| self.field.cmp_elems(&a.0, &b.0));
        Ok(roots)
    }
}

/// Per-field root-finding strategy.
pub trait FieldRoots: Field + Sized {
    fn roots(f: &Poly<Self>, cap: u64) -> Result<Vec<(Self::Elem, usize)>>;
}

impl FieldRoots for PrimeField {
    /// Exhaustive evaluation over all p residues.
    fn roots(f: &Poly<Self>, cap: u64) -> Result<Vec<(u64, usize)>> {
        let field = f.field().clone();
        if field.modulus() > cap {
            return Err(Error::ResourceExceeded { what: "enumerating F_p residues", cap });
        }
        let mut out = vec![];
        for a in field.elems() {
            if field.is_zero(&f.eval(&a)) {
                out.push((a, f.root_multiplicity(&a)));
            }
        }
        Ok(out)
    }
}

impl FieldRoots for Rationals {
    /// Rational-root theorem on the primitive integer form.
    fn roots(f: &Poly<Self>, cap: u64) -> Result<Vec<(BigRational, usize)>> {
        // roots at zero come out of the trailing coefficients directly
        let zero_mult = f.coeffs().iter().take_while(|c| c.is_zero()).count();
        let mut out = vec![];
        if zero_mult > 0 {
            out.push((BigRational::zero(), zero_mult));
        }
        let reduced = Poly::new(Rationals, f.coeffs()[zero_mult..].to_vec());
        if reduced.degree() == Some(0) || reduced.is_zero() {
            return Ok(out);
        }

        // clear denominators to a primitive integer polynomial
        let mut denom_lcm = BigInt::one();
        for c in reduced.coeffs() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = reduced
            .coeffs()
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let a0 = ints.first().unwrap().abs();
        let an = ints.last().unwrap().abs();

        let mut budget = cap;
        let ps = divisors(&a0, &mut budget)?;
        let qs = divisors(&an, &mut budget)?;
        let pairs = ps.len() as u64 * qs.len() as u64;
        if pairs > budget {
            return Err(Error::ResourceExceeded { what: "enumerating p/q root candidates", cap });
        }

        for p in &ps {
            for q in &qs {
                if !p.gcd(q).is_one() {
                    continue; // only reduced fractions, so no duplicates
                }
                for sign in [1i64, -1] {
                    let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                    if reduced.eval(&cand).is_zero() {
                        out.push((cand.clone(), reduced.root_multiplicity(&cand)));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Positive divisors of |n| by trial division, charged against `budget`.
fn divisors(n: &BigInt, budget: &mut u64) -> Result<Vec<BigInt>> {
    let cap = *budget;
    let exceeded = || Error::ResourceExceeded { what: "enumerating divisors", cap };
    assert!(!n.is_zero(), "callers strip zero roots first");
    let mut small = vec![];
    let mut large = vec![];
    let mut d = BigInt::one();
    loop {
        let dd = &d * &d;
        if dd > *n {
            break;
        }
        if *budget == 0 {
            return Err(exceeded());
        }
        *budget -= 1;
        if (n % &d).is_zero() {
            small.push(d.clone());
            if dd != *n {
                large.push(n / &d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}
