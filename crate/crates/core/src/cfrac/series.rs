use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::Scalar;

/// Formal power series in `x` truncated after `x^order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Scalar>,
}

impl PowerSeries {
    /// `coeffs` holds `f_0..f_N`; an empty list is treated as the zero series of
    /// order 0.
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Scalar::zero());
        }
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Scalar) -> Self {
        Self::new((0..=order).map(f).collect())
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| Scalar::from_int(v)).collect())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { Scalar::one() } else { Scalar::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// `f_n`, reading negative indices as zero.
    ///
    /// # Panics
    /// If `n` exceeds the truncation order.
    pub fn coeff(&self, n: i64) -> &Scalar {
        if n < 0 {
            return Scalar::zero_ref();
        }
        self.coeffs.get(n as usize).unwrap_or_else(|| {
            panic!("coefficient {n} requested from a series of order {}", self.order())
        })
    }

    pub fn require_order(&self, needed: i64) -> Result<()> {
        if needed > self.order() as i64 {
            return Err(Error::InsufficientOrder {
                needed: needed as usize,
                available: self.order(),
            });
        }
        Ok(())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.map(|v| v * c)
    }

    /// Multiply by `x^k`, keeping the same order.
    pub fn shift_up(&self, k: usize) -> Self {
        Self::from_fn(self.order(), |n| {
            if n >= k {
                self.coeffs[n - k].clone()
            } else {
                Scalar::zero()
            }
        })
    }

    /// Drop the first `k` coefficients (divide by `x^k`), lowering the order.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |i| &self.coeffs[i] + &other.coeffs[i])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |i| &self.coeffs[i] - &other.coeffs[i])
    }

    /// Truncated product, of order `min(self.order, other.order)`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| {
            (0..=k)
                .filter(|&j| !self.coeffs[j].is_zero() && !other.coeffs[k - j].is_zero())
                .map(|j| &self.coeffs[j] * &other.coeffs[k - j])
                .sum()
        })
    }

    /// `1/s` for a series with constant term exactly 1; the result satisfies
    /// `sum_{j<=n} s_{n-j} t_j = [n = 0]`.
    pub fn reciprocal(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm(self.coeffs[0].to_string()));
        }
        let mut t: Vec<Scalar> = Vec::with_capacity(self.coeffs.len());
        t.push(Scalar::one());
        for n in 1..self.coeffs.len() {
            let acc: Scalar = (1..=n)
                .filter(|&j| !self.coeffs[j].is_zero() && !t[n - j].is_zero())
                .map(|j| &self.coeffs[j] * &t[n - j])
                .sum();
            t.push(-acc);
        }
        Ok(Self::new(t))
    }

    /// `1/(1 - g)` where `g` has zero constant term.
    pub fn geometric(g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::NonUnitConstantTerm(
                (&Scalar::one() - &g.coeffs[0]).to_string(),
            ));
        }
        PowerSeries::one(g.order()).sub(g).reciprocal()
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|c| c.to_string())).finish()
    }
}

/// Alias of [`PowerSeries::reciprocal`].
pub fn series_reciprocal(s: &PowerSeries) -> Result<PowerSeries> {
    s.reciprocal()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reciprocal_of_geometric() {
        let s = PowerSeries::from_ints(&[1, 1, 1, 1, 1]);
        assert_eq!(s.reciprocal().unwrap(), PowerSeries::from_ints(&[1, -1, 0, 0, 0]));
    }

    #[test]
    fn catalan_reciprocal() {
        // c(x)(1 - x c(x)) = 1, so 1/c = 1 - x c: t_n = -C_{n-1}.
        let c = PowerSeries::from_ints(&[1, 1, 2, 5, 14, 42, 132]);
        let t = c.reciprocal().unwrap();
        assert_eq!(t, PowerSeries::from_ints(&[1, -1, -1, -2, -5, -14, -42]));
        assert_eq!(c.mul(&t), PowerSeries::one(6));
    }

    #[test]
    fn non_unit_rejected() {
        let s = PowerSeries::from_ints(&[2, 1]);
        assert!(matches!(s.reciprocal(), Err(Error::NonUnitConstantTerm(_))));
    }

    #[test]
    fn negative_index_reads_zero() {
        let s = PowerSeries::from_ints(&[1, 2]);
        assert!(s.coeff(-3).is_zero());
        assert_eq!(s.coeff(1), &Scalar::from_int(2));
        assert!(s.require_order(2).is_err());
    }
}
