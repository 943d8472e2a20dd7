//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! The ring has five fixed auxiliary variables `m, u, s, q, z`. The series
//! expansion variable (`r` or `p`) is deliberately *not* part of the ring;
//! it lives in [`crate::polyring::RSeries`] as the coefficient index.
//!
//! Canonical form: no zero coefficients, terms keyed by exponent tuple.
//! Printing order is graded lexicographic on `(e_m, e_u, e_s, e_q, e_z)`,
//! ascending (total degree first, then the tuple).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Number of ring variables.
pub const NUM_VARS: usize = 5;

/// A ring variable, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    M = 0,
    U = 1,
    S = 2,
    Q = 3,
    Z = 4,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [Var::M, Var::U, Var::S, Var::Q, Var::Z];

    pub fn symbol(self) -> char {
        match self {
            Var::M => 'm',
            Var::U => 'u',
            Var::S => 's',
            Var::Q => 'q',
            Var::Z => 'z',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.symbol() == c)
    }
}

/// Exponent tuple of a single term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Exponents(pub [u32; NUM_VARS]);

impl Exponents {
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn combine(&self, other: &Exponents) -> Exponents {
        let mut out = [0u32; NUM_VARS];
        for (slot, (a, b)) in out.iter_mut().zip(self.0.iter().zip(&other.0)) {
            *slot = a.checked_add(*b).expect("exponent overflow");
        }
        Exponents(out)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial in `m, u, s, q, z` with `BigInt`
/// coefficients. Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::default(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        Self::monomial_in(v, e, BigInt::one())
    }

    /// `c * v^e`.
    pub fn monomial_in<T: Into<BigInt>>(v: Var, e: u32, c: T) -> Self {
        let mut exps = Exponents::default();
        exps.0[v as usize] = e;
        Self::monomial(exps, c)
    }

    pub fn monomial<T: Into<BigInt>>(exps: Exponents, c: T) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Exponents::default())
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(Exponents::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of the given exponent tuple (zero if absent).
    pub fn coeff(&self, exps: &Exponents) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in canonical (graded lex ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    fn insert_add(terms: &mut BTreeMap<Exponents, BigInt>, exps: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v * c))
                .collect(),
        }
    }

    /// Multiply by a single variable power (cheap exponent shift).
    pub fn mul_var_pow(&self, v: Var, e: u32) -> MultiPoly {
        if e == 0 {
            return self.clone();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(exps, c)| {
                    let mut out = *exps;
                    out.0[v as usize] = out.0[v as usize]
                        .checked_add(e)
                        .expect("exponent overflow");
                    (out, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division by `v^e`; fails if any term has a smaller exponent.
    pub fn div_var_pow(&self, v: Var, e: u32) -> Result<MultiPoly> {
        if e == 0 {
            return Ok(self.clone());
        }
        let mut terms = BTreeMap::new();
        for (exps, c) in &self.terms {
            let have = exps.0[v as usize];
            if have < e {
                return Err(Error::DivisionUnderflow {
                    var: v.symbol(),
                    pow: e,
                    found: have,
                });
            }
            let mut out = *exps;
            out.0[v as usize] = have - e;
            terms.insert(out, c.clone());
        }
        Ok(MultiPoly { terms })
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Simultaneous substitution. Bound variables are replaced by the given
    /// polynomials (constants included); unbound variables stay symbolic.
    pub fn eval(&self, bindings: &BTreeMap<Var, MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (exps, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            for v in Var::ALL {
                let e = exps.0[v as usize];
                if e == 0 {
                    continue;
                }
                match bindings.get(&v) {
                    Some(value) => term = &term * &value.pow(e),
                    None => term = term.mul_var_pow(v, e),
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Substitute integers for some variables.
    pub fn eval_ints(&self, bindings: &[(Var, i64)]) -> MultiPoly {
        let map = bindings
            .iter()
            .map(|&(v, c)| (v, MultiPoly::constant(c)))
            .collect();
        self.eval(&map)
    }

    /// The constant term, requiring the polynomial to be constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Exponents::default()) {
                return Some(c.clone());
            }
        }
        None
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            MultiPoly::insert_add(&mut terms, *e, c.clone());
        }
        MultiPoly { terms }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            MultiPoly::insert_add(&mut terms, *e, -c.clone());
        }
        MultiPoly { terms }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                MultiPoly::insert_add(&mut terms, ea.combine(eb), ca * cb);
            }
        }
        MultiPoly { terms }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MultiPoly {
    /// Canonical string form: terms joined by ` + ` (` - ` for negative
    /// coefficients), unit exponents and unit coefficients elided, e.g.
    /// `1 + m*u*s` or `-m*u*s^3 + m^2*u*s^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || exps.total_degree() == 0 {
                factors.push(abs.to_string());
            }
            for v in Var::ALL {
                let e = exps.0[v as usize];
                match e {
                    0 => {}
                    1 => factors.push(v.symbol().to_string()),
                    _ => factors.push(format!("{}^{}", v.symbol(), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// `m - 1`, written `m'` in weight formulas.
pub fn m_prime() -> MultiPoly {
    &MultiPoly::var(Var::M) - &MultiPoly::one()
}

/// `u - 1`, written `u'` in weight formulas.
pub fn u_prime() -> MultiPoly {
    &MultiPoly::var(Var::U) - &MultiPoly::one()
}

/// `m*u - m + 1`, the coefficient `m(u-1)+1 = m'u' + u' + 1` shared by all
/// recurrence families.
pub fn f3() -> MultiPoly {
    let mu = &MultiPoly::var(Var::M) * &MultiPoly::var(Var::U);
    &(&mu - &MultiPoly::var(Var::M)) + &MultiPoly::one()
}

/// `(m'+1)(u'+1) = m*u`.
pub fn f4() -> MultiPoly {
    &MultiPoly::var(Var::M) * &MultiPoly::var(Var::U)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> MultiPoly {
        MultiPoly::var(Var::M)
    }
    fn s() -> MultiPoly {
        MultiPoly::var(Var::S)
    }

    #[test]
    fn additive_identity() {
        assert_eq!(&m() + &MultiPoly::zero(), m());
    }

    #[test]
    fn difference_of_squares() {
        let a = &m() - &MultiPoly::one();
        let b = &m() + &MultiPoly::one();
        let expect = &m().pow(2) - &MultiPoly::one();
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn binomial_square() {
        let a = &MultiPoly::one() + &s();
        let got = &a * &a;
        let expect = &(&MultiPoly::one() + &MultiPoly::monomial_in(Var::S, 1, 2)) + &s().pow(2);
        assert_eq!(got, expect);
        assert_eq!(got.to_string(), "1 + 2*s + s^2");
    }

    #[test]
    fn eval_direct_substitution() {
        // m(m-1) at m=2 -> 2
        let p = &m() * &m_prime();
        assert_eq!(p.eval_ints(&[(Var::M, 2)]), MultiPoly::constant(2));
        // 1+s+s^2 at s=1 -> 3
        let p = &(&MultiPoly::one() + &s()) + &s().pow(2);
        assert_eq!(p.eval_ints(&[(Var::S, 1)]), MultiPoly::constant(3));
    }

    #[test]
    fn eval_f3_expanded() {
        // m'u' + u' + 1 expanded, then {m:2, u:1} -> 1
        assert_eq!(
            f3().eval_ints(&[(Var::M, 2), (Var::U, 1)]),
            MultiPoly::constant(1)
        );
        // cross-check against the f, g definitions: f3 = m(u-1)+1
        let direct = &(&m() * &(&MultiPoly::var(Var::U) - &MultiPoly::one())) + &MultiPoly::one();
        assert_eq!(f3(), direct);
    }

    #[test]
    fn eval_polynomial_binding() {
        // substitute m -> m+1 into m^2: (m+1)^2
        let mut b = BTreeMap::new();
        b.insert(Var::M, &m() + &MultiPoly::one());
        let got = m().pow(2).eval(&b);
        let expect = &(&m().pow(2) + &MultiPoly::monomial_in(Var::M, 1, 2)) + &MultiPoly::one();
        assert_eq!(got, expect);
    }

    #[test]
    fn display_canonical() {
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(MultiPoly::constant(-5).to_string(), "-5");
        let musq = MultiPoly::monomial(Exponents([1, 1, 1, 0, 0]), 1);
        assert_eq!((&MultiPoly::one() + &musq).to_string(), "1 + m*u*s");
        // m(m-1)us^3 = -m*u*s^3 + m^2*u*s^3, graded order puts degree 5 first
        let p = &(&m() * &m_prime()) * &MultiPoly::monomial(Exponents([0, 1, 3, 0, 0]), 1);
        assert_eq!(p.to_string(), "-m*u*s^3 + m^2*u*s^3");
    }

    #[test]
    fn div_var_pow_exact_and_failing() {
        let p = MultiPoly::monomial(Exponents([0, 0, 3, 0, 0]), 7);
        assert_eq!(
            p.div_var_pow(Var::S, 2).unwrap(),
            MultiPoly::monomial_in(Var::S, 1, 7)
        );
        assert!(MultiPoly::one().div_var_pow(Var::S, 1).is_err());
    }
}
