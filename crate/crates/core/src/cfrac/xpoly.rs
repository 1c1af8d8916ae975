use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactalg::{Scalar, Var};

/// Polynomial in `x` with [`Scalar`] coefficients, lowest power first. The leading
/// coefficient is never zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<Scalar>,
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: Scalar) -> Self {
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::from_coeffs(values.iter().map(|&v| Scalar::from_int(v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero above the degree).
    pub fn coeff(&self, k: usize) -> &Scalar {
        self.coeffs.get(k).unwrap_or(Scalar::zero_ref())
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|v| v * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * at) + c)
    }

    /// `x^d * p(1/x)`; requires `d >= deg p`.
    pub fn reversed(&self, d: usize) -> Result<Self> {
        if let Some(deg) = self.degree() {
            if deg > d {
                return Err(Error::ParamOutOfRange(format!(
                    "cannot reverse a degree-{deg} polynomial at degree {d}"
                )));
            }
        }
        Ok(Self::from_coeffs(
            (0..=d).map(|k| self.coeff(d - k).clone()).collect(),
        ))
    }

    /// Divide every coefficient exactly by `c`.
    pub fn exact_div_scalar(&self, c: &Scalar) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|v| v.exact_div(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    /// `c` with `self = c * other`, if such a scalar exists.
    pub fn scalar_ratio(&self, other: &Self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.degree() != other.degree() {
            return None;
        }
        let c = self.leading_coeff()?.exact_div(other.leading_coeff()?).ok()?;
        (other.scale(&c) == *self).then_some(c)
    }

    /// The same polynomial as a [`Scalar`] in the indeterminate `x`.
    pub fn to_scalar(&self) -> Scalar {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * &Scalar::x().pow(k as u32))
            .sum()
    }

    /// Collects a [`Scalar`] by powers of `x`.
    pub fn from_scalar(s: &Scalar) -> Self {
        Self::from_coeffs(s.coefficients_in(Var::X))
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scalar())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

impl FromStr for XPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::from_scalar(&s.parse()?))
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        XPoly::from_coeffs(coeffs)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}
