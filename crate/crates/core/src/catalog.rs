//! Builtin series, Gaussian binomials, and recovery of the numerators of an
//! all-ones-powers C-fraction from its Hankel determinants.

use num_bigint::BigInt;
use num_integer::binomial;

use crate::cfrac::PowerSeries;
use crate::error::{Error, Result};
use crate::exactalg::{Scalar, Var};
use crate::hankel::hdet;

/// The builtin series families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// `f_n = C_n`.
    Catalan,
    /// `f_n = C_{n+1}`.
    CatalanShifted,
    /// `f_{mn} = a^n C_n`, other coefficients zero.
    CatalanStretched { m: u32, a: Scalar },
    /// Motzkin numbers `M_n`.
    Motzkin,
    /// `M_n(u) = sum_k C_k C(n, 2k) u^{n-2k}`.
    MotzkinU { u: Scalar },
    /// `f_n = q^{C(n+1, 2)}`.
    Eisenstein { q: Scalar },
}

impl Builtin {
    pub const NAMES: [&'static str; 6] = [
        "catalan",
        "catalan-shifted",
        "catalan-stretched",
        "motzkin",
        "motzkin-u",
        "eisenstein",
    ];

    /// Parses a builtin name. Missing parameters default to `m = 1` and to the
    /// indeterminates `a`, `u` and `q`.
    pub fn from_name(name: &str, m: Option<u32>, param: Option<Scalar>) -> Result<Self> {
        let or_var = |v: Var| param.clone().unwrap_or_else(|| Scalar::var(v));
        Ok(match name {
            "catalan" => Self::Catalan,
            "catalan-shifted" => Self::CatalanShifted,
            "catalan-stretched" => {
                let m = m.unwrap_or(1);
                if m == 0 {
                    return Err(Error::ParamOutOfRange("m must be at least 1".into()));
                }
                Self::CatalanStretched {
                    m,
                    a: or_var(Var::PARAM),
                }
            }
            "motzkin" => Self::Motzkin,
            "motzkin-u" => Self::MotzkinU { u: or_var(Var::U) },
            "eisenstein" => Self::Eisenstein { q: or_var(Var::Q) },
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }

    pub fn series(&self, order: usize) -> PowerSeries {
        builtin_series(self, order)
    }
}

fn catalan_number(n: usize) -> BigInt {
    binomial(BigInt::from(2 * n), BigInt::from(n)) / BigInt::from(n + 1)
}

fn motzkin_term(n: usize, k: usize) -> BigInt {
    catalan_number(k) * binomial(BigInt::from(n), BigInt::from(2 * k))
}

pub fn builtin_series(b: &Builtin, order: usize) -> PowerSeries {
    match b {
        Builtin::Catalan => PowerSeries::from_fn(order, |n| Scalar::from_bigint(catalan_number(n))),
        Builtin::CatalanShifted => {
            PowerSeries::from_fn(order, |n| Scalar::from_bigint(catalan_number(n + 1)))
        }
        Builtin::CatalanStretched { m, a } => {
            let m = *m as usize;
            PowerSeries::from_fn(order, |n| {
                if n % m == 0 {
                    let k = n / m;
                    a.pow(k as u32).scale(&catalan_number(k).into())
                } else {
                    Scalar::zero()
                }
            })
        }
        Builtin::Motzkin => PowerSeries::from_fn(order, |n| {
            Scalar::from_bigint((0..=n / 2).map(|k| motzkin_term(n, k)).sum())
        }),
        Builtin::MotzkinU { u } => PowerSeries::from_fn(order, |n| {
            (0..=n / 2)
                .map(|k| u.pow((n - 2 * k) as u32).scale(&motzkin_term(n, k).into()))
                .sum()
        }),
        Builtin::Eisenstein { q } => {
            PowerSeries::from_fn(order, |n| q.pow((n * (n + 1) / 2) as u32))
        }
    }
}

/// Gaussian binomial `[n, k]` in `q`, by `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn qbinomial(n: usize, k: usize) -> Result<Scalar> {
    if k > n {
        return Err(Error::IndexOutOfRange {
            index: k as i64,
            msg: format!("q-binomial [{n}, {k}] needs k <= n"),
        });
    }
    let q = Scalar::q();
    let mut row = vec![Scalar::one()];
    for i in 1..=n {
        let mut next = vec![Scalar::one(); i + 1];
        for j in 1..i {
            next[j] = &row[j - 1] + &(q.pow(j as u32) * &row[j]);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// Numerators `a_0, ..., a_{2K+1}` of `1/(1 - a_0 x/(1 - a_1 x/(1 - ...)))` from
/// `d_1(n)/d(n) = a_0 a_2 ... a_{2n}` and `d(n)/d_1(n-1) = a_1 a_3 ... a_{2n-1}`.
///
/// Determinants are examined in the order `d(0), d_1(0), d(1), d_1(1), ...`; the
/// first zero is reported as [`Error::ZeroDeterminant`] together with the
/// numerators recovered before it.
pub fn reconstruct_cfrac(s: &PowerSeries, k: usize) -> Result<Vec<Scalar>> {
    if !s.coeffs()[0].is_one() {
        return Err(Error::NonUnitConstantTerm(s.coeffs()[0].to_string()));
    }
    s.require_order(2 * k as i64 + 2)?;
    let mut partial = Vec::with_capacity(2 * k + 2);
    // Running products a_0 a_2 ... a_{2n} and a_1 a_3 ... a_{2n-1}.
    let mut even = Scalar::one();
    let mut odd = Scalar::one();
    let mut d1_prev = Scalar::one();
    for n in 0..=k as i64 {
        let d = hdet(s, 0, n)?;
        if d.is_zero() {
            return Err(zero(n, 0, partial));
        }
        if n > 0 {
            let odd_n = d.exact_div(&d1_prev)?;
            partial.push(odd_n.exact_div(&odd)?);
            odd = odd_n;
        }
        let d1 = hdet(s, 1, n)?;
        if d1.is_zero() {
            return Err(zero(n, 1, partial));
        }
        let even_n = d1.exact_div(&d)?;
        partial.push(even_n.exact_div(&even)?);
        even = even_n;
        d1_prev = d1;
    }
    let n = k as i64 + 1;
    let d = hdet(s, 0, n)?;
    if d.is_zero() {
        return Err(zero(n, 0, partial));
    }
    let odd_n = d.exact_div(&d1_prev)?;
    partial.push(odd_n.exact_div(&odd)?);
    Ok(partial)
}

fn zero(n: i64, offset: i64, partial: Vec<Scalar>) -> Error {
    Error::ZeroDeterminant {
        n: n as usize,
        offset,
        partial,
    }
}
