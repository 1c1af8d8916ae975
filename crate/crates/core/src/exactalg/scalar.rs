use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::monomial::{Monomial, Var};
use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Element of `Q[x, q, u, z, a, a_0, a_1, ...]`, kept as a list of terms sorted by
/// strictly decreasing monomial with no zero coefficients. Equal values therefore
/// have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: Vec<(Monomial, Rational)>,
}

static ZERO: Scalar = Scalar { terms: Vec::new() };

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Shared zero, handy for out-of-range coefficient reads.
    pub fn zero_ref() -> &'static Scalar {
        &ZERO
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_term(Monomial::one(), c)
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: Var) -> Self {
        Self::from_term(Monomial::var(v, 1), Rational::one())
    }

    /// The partial numerator `a_i`.
    pub fn a(i: usize) -> Self {
        Self::var(Var::a(i))
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn u() -> Self {
        Self::var(Var::U)
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    /// Builds a value from unsorted, possibly repeated terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self {
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn from_sorted(terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing graded-lexicographic order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| i64::try_from(n).ok())
    }

    /// The single term, if there is exactly one.
    pub fn as_term(&self) -> Option<(&Monomial, &Rational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.factors().map(|(v, _)| v))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_sorted(self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect())
    }

    /// Multiply by a single term; the order is preserved because graded lex is a
    /// monomial order.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_sorted(
            self.terms
                .iter()
                .map(|(n, d)| (n.mul(m), d * c))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        if let Some((m, c)) = self.as_term() {
            return Self::from_term(m.pow(n), num_traits::pow(c.clone(), n as usize));
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn merge(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], negate_b: bool) -> Self {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_b {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate_b { -c } else { c.clone() })),
        );
        Self::from_sorted(out)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((m, c)) = self.as_term() {
            return other.mul_term(m, c);
        }
        if let Some((m, c)) = other.as_term() {
            return self.mul_term(m, c);
        }
        let mut acc: FxHashMap<Monomial, Rational> =
            FxHashMap::with_capacity_and_hasher(self.terms.len() * 2, Default::default());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Self::from_sorted(terms)
    }

    /// Exact quotient in the polynomial ring. Constants divide in the coefficient
    /// field, so `6 / 4 = 3/2`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let inexact = || Error::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        if let Some((dm, dc)) = divisor.as_term() {
            let inv = dc.recip();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let qm = dm.div_into(m).ok_or_else(inexact)?;
                terms.push((qm, c * &inv));
            }
            return Ok(Self::from_sorted(terms));
        }
        let (lead_m, lead_c) = &divisor.terms[0];
        let lead_inv = lead_c.recip();
        let rest = &divisor.terms[1..];
        let mut remainder: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = remainder.pop_last() {
            let qm = lead_m.div_into(&m).ok_or_else(inexact)?;
            let qc = c * &lead_inv;
            for (dm, dc) in rest {
                let pm = qm.mul(dm);
                let pc = &qc * dc;
                match remainder.entry(pm) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= pc;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-pc);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(Self::from_sorted(quotient))
    }

    /// Replace every occurrence of `v` by `value`.
    pub fn subs(&self, v: Var, value: &Scalar) -> Self {
        if !self.terms.iter().any(|(m, _)| m.exponent(v) != 0) {
            return self.clone();
        }
        let mut powers: Vec<Scalar> = vec![Scalar::one()];
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out += &powers[e as usize].mul_term(&rest, c);
        }
        out
    }

    /// Coefficients of `self` viewed as a polynomial in `v`, lowest power first.
    pub fn coefficients_in(&self, v: Var) -> Vec<Scalar> {
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            let e = e as usize;
            if buckets.len() <= e {
                buckets.resize_with(e + 1, Vec::new);
            }
            buckets[e].push((rest, c.clone()));
        }
        buckets.into_iter().map(Scalar::from_terms).collect()
    }

    /// Sign of the leading coefficient (0 for zero).
    pub fn leading_sign(&self) -> i32 {
        match self.terms.first() {
            None => 0,
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write_rational(f, &abs)?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write_rational(f, &abs)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Self::from_bigint(n)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::merge(&self.terms, &rhs.terms, true)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.product(rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::from_sorted(self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { (&self).$method(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar { (&self).$method(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { self.$method(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::one(), |acc, x| &acc * &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> Scalar {
        Scalar::a(i)
    }

    #[test]
    fn free_sum() {
        assert_eq!((a(0) + a(1)).to_string(), "a0 + a1");
    }

    #[test]
    fn difference_of_squares() {
        let p = (a(0) + a(1)) * (a(0) - a(1));
        assert_eq!(p, a(0).pow(2) - a(1).pow(2));
        assert_eq!(p.to_string(), "a0^2 - a1^2");
    }

    #[test]
    fn zero_absorbs() {
        let p = a(3) * a(4) + Scalar::from_int(7);
        assert!((Scalar::zero() * p).is_zero());
    }

    #[test]
    fn factor_cancellation() {
        let dividend = a(0).pow(2) * a(1) + a(0) * a(1).pow(2);
        let q = dividend.exact_div(&(a(0) * a(1))).unwrap();
        assert_eq!(q, a(0) + a(1));
    }

    #[test]
    fn inexact_division_reported() {
        let err = (a(0) + a(1)).exact_div(&a(0)).unwrap_err();
        assert!(matches!(err, Error::InexactDivision { .. }));
        let err = (a(0).pow(2) + a(1)).exact_div(&(a(0) + a(1))).unwrap_err();
        assert!(matches!(err, Error::InexactDivision { .. }));
    }

    #[test]
    fn rational_quotient() {
        let q = Scalar::from_int(6).exact_div(&Scalar::from_int(4)).unwrap();
        assert_eq!(q, Scalar::from_ratio(3, 2));
        assert_eq!(q.to_string(), "3/2");
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(a(0).exact_div(&Scalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn multi_term_division() {
        let d = a(0) + a(1) * a(2) - Scalar::from_int(3);
        let q = a(2).pow(3) - Scalar::from_ratio(1, 2) * a(0) + a(4);
        let p = &d * &q;
        assert_eq!(p.exact_div(&d).unwrap(), q);
        assert_eq!(p.exact_div(&q).unwrap(), d);
    }

    #[test]
    fn substitution_and_collection() {
        let p = Scalar::x().pow(2) * a(0) + Scalar::x() - a(1);
        let coeffs = p.coefficients_in(Var::X);
        assert_eq!(coeffs, vec![-a(1), Scalar::one(), a(0)]);
        let v = p.subs(Var::X, &Scalar::from_int(2));
        assert_eq!(v, Scalar::from_int(4) * a(0) + Scalar::from_int(2) - a(1));
    }

    #[test]
    fn display_signs_and_fractions() {
        let p = Scalar::from_ratio(-3, 2) * a(0).pow(2) * a(1) + Scalar::from_int(-1);
        assert_eq!(p.to_string(), "-3/2*a0^2*a1 - 1");
        assert_eq!(Scalar::zero().to_string(), "0");
    }
}
