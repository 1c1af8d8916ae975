use crate::error::{Error, Result};
use crate::exactalg::Scalar;

use super::bseq::BSeq;
use super::powers::{Numerators, PowerSeq};
use super::series::PowerSeries;

/// The C-fraction `1/(1 - a_0 x^{m_0}/(1 - a_1 x^{m_1}/(1 - ...)))`.
#[derive(Clone, Debug)]
pub struct CFrac {
    powers: PowerSeq,
    numerators: Numerators,
    /// Index of the first numerator; nonzero for tails.
    offset: usize,
}

impl CFrac {
    pub fn new(powers: PowerSeq, numerators: Numerators) -> Self {
        Self {
            powers,
            numerators,
            offset: 0,
        }
    }

    /// Powers `m_n = b_{n+1} - b_{n-1}` taken from `b`.
    pub fn from_bseq(b: &BSeq, numerators: Numerators) -> Self {
        Self::new(b.powers(), numerators)
    }

    pub fn powers(&self) -> &PowerSeq {
        &self.powers
    }

    pub fn power(&self, n: usize) -> Option<u32> {
        self.powers.get(n)
    }

    pub fn numerator(&self, n: usize) -> Option<Scalar> {
        self.numerators.get(n + self.offset)
    }

    /// The tail `f^{(k)} = 1/(1 - a_k x^{m_k}/(1 - ...))`.
    pub fn tail(&self, k: usize) -> Self {
        Self {
            powers: self.powers.skip(k),
            numerators: self.numerators.clone(),
            offset: self.offset + k,
        }
    }

    /// Smallest `d` with `m_0 + ... + m_{d-1} > order`: levels at or below `d` cannot
    /// touch coefficients up to `x^order`.
    pub fn depth_for(&self, order: usize) -> Result<usize> {
        let mut total = 0usize;
        let mut d = 0usize;
        while total <= order {
            let Some(m) = self.powers.get(d) else {
                return Err(Error::InsufficientDepth {
                    needed: d + 1,
                    available: d,
                });
            };
            total += m as usize;
            d += 1;
        }
        Ok(d)
    }

    /// Coefficients `f_0..f_order`, evaluated bottom-up over the tails
    /// `f^{(k)} = 1/(1 - a_k x^{m_k} f^{(k+1)})`. Level `k` only matters up to
    /// `x^{order - m_0 - ... - m_{k-1}}`, so each tail is truncated there.
    pub fn expand(&self, order: usize) -> Result<PowerSeries> {
        let depth = self.depth_for(order)?;
        let mut numerators = Vec::with_capacity(depth);
        let mut budgets = Vec::with_capacity(depth);
        let mut budget = order as i64;
        for k in 0..depth {
            numerators.push(self.numerator(k).ok_or(Error::InsufficientDepth {
                needed: depth,
                available: k,
            })?);
            budgets.push(budget as usize);
            budget -= self.powers.get(k).expect("depth checked") as i64;
        }
        let mut f = PowerSeries::one(0);
        for k in (0..depth).rev() {
            let m = self.powers.get(k).expect("depth checked") as usize;
            let g = PowerSeries::from_fn(budgets[k], |i| {
                if i >= m {
                    &f.coeffs()[i - m] * &numerators[k]
                } else {
                    Scalar::zero()
                }
            });
            f = PowerSeries::geometric(&g)?;
        }
        Ok(f)
    }

    /// Expansions of `f^{(0)}, ..., f^{(levels-1)}`, each to `order`.
    pub fn expand_tails(&self, levels: usize, order: usize) -> Result<Vec<PowerSeries>> {
        (0..levels).map(|k| self.tail(k).expand(order)).collect()
    }
}

/// Alias of [`CFrac::expand`].
pub fn cfrac_expand(cf: &CFrac, order: usize) -> Result<PowerSeries> {
    cf.expand(order)
}

/// Expands the J-fraction
/// `1/(1 - d_0 x - l_1 x^2/(1 - d_1 x - l_2 x^2/(1 - ...)))`
/// with `diag = (d_0, d_1, ...)` and `sub = (l_1, l_2, ...)`.
pub fn jfraction_expand(diag: &[Scalar], sub: &[Scalar], order: usize) -> Result<PowerSeries> {
    // Level j first influences f at x^{2j}.
    let levels = order / 2 + 1;
    if diag.len() < levels {
        return Err(Error::InsufficientDepth {
            needed: levels,
            available: diag.len(),
        });
    }
    if sub.len() + 1 < levels {
        return Err(Error::InsufficientDepth {
            needed: levels - 1,
            available: sub.len(),
        });
    }
    let mut f = PowerSeries::new(vec![Scalar::zero(); order + 1]);
    for j in (0..levels).rev() {
        let mut g = f.shift_up(2);
        if j + 1 < levels {
            g = g.scale(&sub[j]);
        }
        let mut coeffs = g.into_coeffs();
        if order >= 1 {
            coeffs[1] += &diag[j];
        }
        f = PowerSeries::geometric(&PowerSeries::new(coeffs))?;
    }
    Ok(f)
}
