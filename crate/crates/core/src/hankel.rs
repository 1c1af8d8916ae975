//! Hankel determinants and transforms of power series, and checks of the
//! determinant reductions relating a series to its reciprocal or to its tail.

use rayon::prelude::*;

use crate::cfrac::PowerSeries;
use crate::error::{Error, Result};
use crate::exactalg::{Scalar, SquareMatrix};

/// The Hankel matrix `(f_{i+j+offset})_{i,j=0}^{size}`. Coefficients with negative
/// index read as zero; a negative `size` denotes the empty matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HankelSpec {
    pub offset: i64,
    pub size: i64,
}

impl HankelSpec {
    pub fn new(offset: i64, size: i64) -> Self {
        Self { offset, size }
    }

    /// Matrix order `size + 1` (zero for the empty matrix).
    pub fn order(&self) -> usize {
        (self.size + 1).max(0) as usize
    }

    /// Largest coefficient index the matrix touches.
    pub fn max_index(&self) -> i64 {
        2 * self.size + self.offset
    }

    pub fn matrix(&self, s: &PowerSeries) -> Result<SquareMatrix> {
        if self.order() > 0 {
            s.require_order(self.max_index())?;
        }
        Ok(SquareMatrix::from_fn(self.order(), |i, j| {
            s.coeff(i as i64 + j as i64 + self.offset).clone()
        }))
    }
}

pub fn hankel_det(s: &PowerSeries, spec: HankelSpec) -> Result<Scalar> {
    Ok(spec.matrix(s)?.det())
}

/// `det(f_{i+j+offset})_{i,j=0}^n`, the most common call shape.
pub fn hdet(s: &PowerSeries, offset: i64, n: i64) -> Result<Scalar> {
    hankel_det(s, HankelSpec::new(offset, n))
}

/// `d(0), ..., d(up_to)` at the given offset, each computed on its own.
pub fn hankel_transform(s: &PowerSeries, offset: i64, up_to: usize) -> Result<Vec<Scalar>> {
    s.require_order(2 * up_to as i64 + offset)?;
    (0..=up_to as i64)
        .into_par_iter()
        .map(|n| hdet(s, offset, n))
        .collect()
}

/// Both sides of an identity together with the outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub holds: bool,
}

impl ReductionReport {
    fn new(lhs: Scalar, rhs: Scalar) -> Self {
        let holds = lhs == rhs;
        Self { lhs, rhs, holds }
    }
}

/// Determinant reductions. `s` denotes the input series with `t = 1/s`; the
/// tail forms write `s = 1/(1 - a x^p g)` and recover `g` from `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// `det(s_{i+j})_0^n = (-1)^n det(t_{i+j+2})_0^{n-1}`, `n >= 1`.
    Reciprocal,
    /// `det(s_{i+j-m})_0^{n+m} = (-1)^{n + C(m+1,2)} det(t_{i+j+m+2})_0^{n-1}`;
    /// for `n < 0` the left side with order `n + m + 1` vanishes.
    ReciprocalShifted { m: i64 },
    /// `det(s_{i+j+1})_0^n = (-1)^{n+1} det(t_{i+j+1})_0^n`.
    ReciprocalOdd,
    /// `s = 1/(1 - a x^2 c)`: `det(s_{i+j})_0^n = a^n det(c_{i+j})_0^{n-1}`.
    QuadraticTail { a: Scalar },
    /// `s = 1/(1 - a x c)`: `det(s_{i+j})_0^n = a^n det(c_{i+j+1})_0^{n-1}`.
    LinearTail { a: Scalar },
    /// `s = 1/(1 - a x c)`: `det(s_{i+j+1})_0^n = a^{n+1} det(c_{i+j})_0^n`.
    LinearTailShifted { a: Scalar },
    /// `s = 1/(1 - a x^p g)`: `det(s_{i+j-m})_0^n = 0` for `n < m`.
    TailVanishing { m: i64, p: usize, a: Scalar },
    /// `s = 1/(1 - a x^p g)`: `det(s_{i+j-m})_0^m = (-1)^{C(m+1,2)}`.
    TailUnit { m: i64, p: usize, a: Scalar },
    /// `s = 1/(1 - a x^p g)`:
    /// `det(s_{i+j-m})_0^{n+m} = (-1)^{C(m+1,2)} a^n det(g_{i+j+m-p+2})_0^{n-1}`.
    TailReduction { m: i64, p: usize, a: Scalar },
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn sign(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

/// `g` with `s = 1/(1 - a x^p g)`, i.e. `g_n = -t_{n+p}/a` where `t = 1/s`.
pub fn recover_tail(s: &PowerSeries, p: usize, a: &Scalar) -> Result<PowerSeries> {
    if p == 0 {
        return Err(Error::NotOfForm {
            p: 0,
            msg: "the power of x must be positive".into(),
        });
    }
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let t = s.reciprocal()?;
    s.require_order(p as i64)?;
    if let Some(k) = (1..p).find(|&k| !t.coeffs()[k].is_zero()) {
        return Err(Error::NotOfForm {
            p: p as u32,
            msg: format!("coefficient {k} of the reciprocal is nonzero"),
        });
    }
    let coeffs = t.coeffs()[p..]
        .iter()
        .map(|c| (-c).exact_div(a))
        .collect::<Result<Vec<_>>>()?;
    Ok(PowerSeries::new(coeffs))
}

/// Evaluates both sides of `identity` at size `n` and compares them.
pub fn verify_reduction(s: &PowerSeries, identity: &Reduction, n: i64) -> Result<ReductionReport> {
    let one = Scalar::one();
    if !s.coeffs()[0].is_one() {
        return Err(Error::NonUnitConstantTerm(s.coeffs()[0].to_string()));
    }
    let report = match identity {
        Reduction::Reciprocal => {
            if n < 1 {
                return Err(Error::ParamOutOfRange(format!("size {n} must be at least 1")));
            }
            let t = s.reciprocal()?;
            ReductionReport::new(hdet(s, 0, n)?, sign(n) * hdet(&t, 2, n - 1)?)
        }
        Reduction::ReciprocalShifted { m } => {
            let m = *m;
            if m < -1 {
                return Err(Error::ParamOutOfRange(format!("shift {m} below -1")));
            }
            let t = s.reciprocal()?;
            let lhs = hdet(s, -m, n + m)?;
            if n < 0 {
                // Matrix of order n + m + 1 < m + 1.
                ReductionReport::new(lhs, Scalar::zero())
            } else {
                let rhs = sign(n + binom2(m + 1)) * hdet(&t, m + 2, n - 1)?;
                ReductionReport::new(lhs, rhs)
            }
        }
        Reduction::ReciprocalOdd => {
            let t = s.reciprocal()?;
            ReductionReport::new(hdet(s, 1, n)?, sign(n + 1) * hdet(&t, 1, n)?)
        }
        Reduction::QuadraticTail { a } => {
            let c = recover_tail(s, 2, a)?;
            ReductionReport::new(hdet(s, 0, n)?, a.pow(n as u32) * hdet(&c, 0, n - 1)?)
        }
        Reduction::LinearTail { a } => {
            let c = recover_tail(s, 1, a)?;
            ReductionReport::new(hdet(s, 0, n)?, a.pow(n as u32) * hdet(&c, 1, n - 1)?)
        }
        Reduction::LinearTailShifted { a } => {
            let c = recover_tail(s, 1, a)?;
            ReductionReport::new(hdet(s, 1, n)?, a.pow(n as u32 + 1) * hdet(&c, 0, n)?)
        }
        Reduction::TailVanishing { m, p, a } => {
            check_tail_params(*m, *p)?;
            recover_tail(s, *p, a)?;
            if n >= *m {
                return Err(Error::ParamOutOfRange(format!("size {n} must be below {m}")));
            }
            ReductionReport::new(hdet(s, -m, n)?, Scalar::zero())
        }
        Reduction::TailUnit { m, p, a } => {
            check_tail_params(*m, *p)?;
            recover_tail(s, *p, a)?;
            ReductionReport::new(hdet(s, -m, *m)?, sign(binom2(m + 1)) * one)
        }
        Reduction::TailReduction { m, p, a } => {
            check_tail_params(*m, *p)?;
            if n < 1 {
                return Err(Error::ParamOutOfRange(format!("size {n} must be at least 1")));
            }
            let g = recover_tail(s, *p, a)?;
            let rhs = sign(binom2(m + 1))
                * a.pow(n as u32)
                * hdet(&g, m - *p as i64 + 2, n - 1)?;
            ReductionReport::new(hdet(s, -m, n + m)?, rhs)
        }
    };
    Ok(report)
}

fn check_tail_params(m: i64, p: usize) -> Result<()> {
    if m < -1 || p == 0 {
        return Err(Error::ParamOutOfRange(format!(
            "need m >= -1 and p >= 1, got m = {m}, p = {p}"
        )));
    }
    Ok(())
}

/// The five determinants of `d_2(n) d(n) = d_2(n-1) d(n+1) + d_1(n)^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensationReport {
    pub d: Scalar,
    pub d_next: Scalar,
    pub d1: Scalar,
    pub d2: Scalar,
    pub d2_prev: Scalar,
    pub holds: bool,
}

pub fn condensation_check(s: &PowerSeries, n: usize) -> Result<CondensationReport> {
    let n = n as i64;
    s.require_order(2 * n + 2)?;
    let d = hdet(s, 0, n)?;
    let d_next = hdet(s, 0, n + 1)?;
    let d1 = hdet(s, 1, n)?;
    let d2 = hdet(s, 2, n)?;
    let d2_prev = hdet(s, 2, n - 1)?;
    let holds = &d2 * &d == &d2_prev * &d_next + d1.pow(2);
    Ok(CondensationReport {
        d,
        d_next,
        d1,
        d2,
        d2_prev,
        holds,
    })
}
