//! Generalized orthogonal polynomials `r_k` of a C-fraction, the moment
//! functional `x^n -> f_n`, and the determinantal polynomials `p_n`.

use rayon::prelude::*;

use crate::cfrac::{convergent_table, BSeq, Numerators, PowerSeries, XPoly};
use crate::closedform::series_for_transform;
use crate::error::{Error, Result};
use crate::exactalg::{Scalar, SquareMatrix, Var};
use crate::hankel::hdet;

fn numerator(numerators: &Numerators, j: usize) -> Result<Scalar> {
    numerators.get(j).ok_or(Error::InsufficientDepth {
        needed: j + 1,
        available: j,
    })
}

/// `r_0, ..., r_k` from `r_j = x^{b_{j-1} - b_{j-2}} r_{j-1} - a_{j-2} r_{j-2}`,
/// `r_0 = 1`, `r_1 = x`.
pub fn r_table(b: &BSeq, numerators: &Numerators, k: usize) -> Result<Vec<XPoly>> {
    if k > b.last_index() + 1 {
        return Err(Error::IndexOutOfRange {
            index: k as i64,
            msg: format!("r_k needs b_(k-1); the sequence ends at b_{}", b.last_index()),
        });
    }
    let mut table = vec![XPoly::one(), XPoly::x()];
    for j in 2..=k {
        let ji = j as isize;
        let shift = (b.get(ji - 1) - b.get(ji - 2)) as usize;
        let next = &table[j - 1].shift(shift) - &table[j - 2].scale(&numerator(numerators, j - 2)?);
        table.push(next);
    }
    table.truncate(k + 1);
    Ok(table)
}

pub fn r_poly(b: &BSeq, numerators: &Numerators, k: usize) -> Result<XPoly> {
    Ok(r_table(b, numerators, k)?.pop().expect("table holds k + 1 entries"))
}

/// `Fib_n` from `Fib_n = x Fib_{n-1} - Fib_{n-2}`, `Fib_0 = 0`, `Fib_1 = 1`.
pub fn fibonacci_poly(n: usize) -> XPoly {
    // Start from Fib_{-1} = -1 and Fib_0 = 0.
    let (mut prev, mut cur) = (XPoly::from_ints(&[-1]), XPoly::zero());
    for _ in 0..n {
        let next = &cur.shift(1) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Fib_n = sum_k C(n-1-k, k) (-1)^k x^{n-1-2k}`.
pub fn fibonacci_poly_sum(n: usize) -> XPoly {
    if n == 0 {
        return XPoly::zero();
    }
    let mut coeffs = vec![Scalar::zero(); n];
    for k in 0..=(n - 1) / 2 {
        let c = num_integer::binomial(num_bigint::BigInt::from(n - 1 - k), k.into());
        let c = Scalar::from_bigint(if k % 2 == 0 { c } else { -c });
        coeffs[n - 1 - 2 * k] = c;
    }
    XPoly::from_coeffs(coeffs)
}

/// The linear functional `x^n -> f_n` on polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentFunctional {
    moments: PowerSeries,
}

impl MomentFunctional {
    pub fn new(moments: PowerSeries) -> Self {
        Self { moments }
    }

    pub fn moments(&self) -> &PowerSeries {
        &self.moments
    }

    /// `Lambda(p(x) x^shift) = sum_j p_j f_{j+shift}`.
    pub fn apply(&self, p: &XPoly, shift: usize) -> Result<Scalar> {
        if let Some(deg) = p.degree() {
            self.moments.require_order((deg + shift) as i64)?;
        }
        Ok(p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| c * self.moments.coeff((j + shift) as i64))
            .sum())
    }
}

/// Alias of [`MomentFunctional::apply`].
pub fn lambda_apply(l: &MomentFunctional, p: &XPoly, shift: usize) -> Result<Scalar> {
    l.apply(p, shift)
}

/// `p_n`: the Hankel matrix `(f_{i+j})` with `n + 1` rows and `n` columns,
/// bordered by the column `(1, x, ..., x^n)`. Expanding along that column gives
/// `p_n = sum_i (-1)^{n+i} x^i M_i` where `M_i` drops row `i`.
pub fn p_poly(s: &PowerSeries, n: usize) -> Result<XPoly> {
    if n == 0 {
        return Ok(XPoly::one());
    }
    s.require_order(2 * n as i64 - 1)?;
    let coeffs = (0..=n)
        .into_par_iter()
        .map(|i| {
            let rows: Vec<usize> = (0..=n).filter(|&r| r != i).collect();
            let minor = SquareMatrix::from_fn(n, |r, c| s.coeff((rows[r] + c) as i64).clone()).det();
            if (n + i) % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
        .collect();
    Ok(XPoly::from_coeffs(coeffs))
}

/// `p_n = det(f_{i+j} x - f_{i+j+1})_{i,j=0}^{n-1}`, with `x` carried as an
/// indeterminate through the elimination.
pub fn p_poly_shifted_form(s: &PowerSeries, n: usize) -> Result<XPoly> {
    if n == 0 {
        return Ok(XPoly::one());
    }
    s.require_order(2 * n as i64 - 1)?;
    let x = Scalar::var(Var::X);
    let m = SquareMatrix::from_fn(n, |i, j| {
        let k = (i + j) as i64;
        s.coeff(k) * &x - s.coeff(k + 1)
    });
    Ok(XPoly::from_scalar(&m.det()))
}

/// How `p_m` relates to the polynomials `r_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `p_m = d(m-1) r_k`, where `m - 1` is a value of the sequence and
    /// `b_{k-1}` its last occurrence.
    Unit { k: usize, scale: Scalar },
    /// `p_m = 0`.
    Zero,
    /// `p_m = sign * factor * p_{base}`, where `base - 1` is the previous value
    /// of the sequence and `factor = (a_0 ... a_{k-1})^{m - base}`.
    Boundary { base: usize, sign: i8, factor: Scalar },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub m: usize,
    pub relation: Relation,
    pub p: XPoly,
    pub holds: bool,
}

/// Classifies `p_0, ..., p_max_m` against the `r_k` of `b` and checks each
/// classification by direct computation. Needs `max_m <= b_K + 1`.
pub fn classify_p_polys(b: &BSeq, numerators: &Numerators, max_m: usize) -> Result<Vec<RelationReport>> {
    if max_m as i64 > b.largest() + 1 {
        return Err(Error::InsufficientLength {
            needed: max_m as i64 - 1,
            largest: b.largest(),
        });
    }
    let s = series_for_transform(b, numerators, max_m)?;
    let r = r_table(b, numerators, b.last_index() + 1)?;
    let p: Vec<XPoly> = (0..=max_m)
        .into_par_iter()
        .map(|m| p_poly(&s, m))
        .collect::<Result<_>>()?;
    let distinct = b.distinct();
    let k_of = |v: i64| (b.last_position(v).expect("value occurs") + 1) as usize;
    let mut out = Vec::with_capacity(max_m + 1);
    for m in 0..=max_m {
        let mi = m as i64;
        let report = if distinct.contains(&(mi - 1)) {
            let k = k_of(mi - 1);
            let scale = hdet(&s, 0, mi - 1)?;
            let holds = p[m] == r[k].scale(&scale);
            RelationReport {
                m,
                relation: Relation::Unit { k, scale },
                p: p[m].clone(),
                holds,
            }
        } else {
            // Previous value v < m - 1 and next value w >= m.
            let v = *distinct.iter().rev().find(|&&v| v < mi - 1).expect("-1 is present");
            let w = *distinct.iter().find(|&&w| w >= mi).expect("m <= b_K + 1");
            if mi < w {
                RelationReport {
                    m,
                    relation: Relation::Zero,
                    p: p[m].clone(),
                    holds: p[m].is_zero(),
                }
            } else {
                let k = k_of(v);
                let base = (v + 1) as usize;
                let product: Scalar = (0..k)
                    .map(|j| numerator(numerators, j))
                    .product::<Result<Scalar>>()?;
                let factor = product.pow((w - v - 1) as u32);
                let target = p[base].scale(&factor);
                let (sign, holds) = if p[m] == target {
                    (1, true)
                } else if p[m] == -&target {
                    (-1, true)
                } else {
                    (0, false)
                };
                RelationReport {
                    m,
                    relation: Relation::Boundary { base, sign, factor },
                    p: p[m].clone(),
                    holds,
                }
            }
        };
        out.push(report);
    }
    Ok(out)
}

/// Orthogonality of one `r_k`: `Lambda(r_k x^n) = 0` for `n < b_k` and
/// `Lambda(r_k x^{b_k}) = a_0 ... a_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub k: usize,
    pub vanishing: bool,
    pub normalization: Scalar,
    pub expected: Scalar,
    /// `r_k = x^{b_{k-1}+1} B_k(1/x)`.
    pub reversal: bool,
    /// `B_k f - A_k` vanishes through `x^{b_{k-1}+b_k}` and has coefficient
    /// `a_0 ... a_{k-1}` at the next power.
    pub tail: bool,
}

impl OrthogonalityReport {
    pub fn holds(&self) -> bool {
        self.vanishing && self.normalization == self.expected && self.reversal && self.tail
    }
}

/// Orthogonality, normalization, reversal and tail checks for `k = 0..=k_max`.
/// Needs `k_max <= K`.
pub fn orthogonality_check(
    b: &BSeq,
    numerators: &Numerators,
    k_max: usize,
) -> Result<Vec<OrthogonalityReport>> {
    if k_max > b.last_index() {
        return Err(Error::IndexOutOfRange {
            index: k_max as i64,
            msg: format!("the sequence ends at b_{}", b.last_index()),
        });
    }
    let kmi = k_max as isize;
    let order = (b.get(kmi - 1) + b.get(kmi) + 1) as usize;
    let ext = b.extended_for_order(order);
    let s = crate::cfrac::CFrac::from_bseq(&ext, numerators.clone()).expand(order)?;
    let lambda = MomentFunctional::new(s.clone());
    let r = r_table(b, numerators, k_max)?;
    let conv = convergent_table(b, numerators, k_max)?;
    (0..=k_max)
        .into_par_iter()
        .map(|k| {
            let ki = k as isize;
            let bk = b.get(ki) as usize;
            let vanishing = (0..bk).try_fold(true, |ok, n| {
                Ok::<_, Error>(ok && lambda.apply(&r[k], n)?.is_zero())
            })?;
            let normalization = lambda.apply(&r[k], bk)?;
            let expected: Scalar = (0..k)
                .map(|j| numerator(numerators, j))
                .product::<Result<Scalar>>()?;
            let d = (b.get(ki - 1) + 1) as usize;
            let reversal = conv[k].denom.reversed(d).map(|u| u == r[k]).unwrap_or(false);
            let edge = (b.get(ki - 1) + b.get(ki) + 1) as usize;
            let residual = PowerSeries::new(
                (0..=edge)
                    .map(|n| {
                        let fb: Scalar = (0..=n)
                            .map(|j| conv[k].denom.coeff(j) * s.coeff((n - j) as i64))
                            .sum();
                        fb - conv[k].numer.coeff(n)
                    })
                    .collect(),
            );
            let tail = residual.coeffs()[..edge].iter().all(Scalar::is_zero)
                && residual.coeffs()[edge] == expected;
            Ok(OrthogonalityReport {
                k,
                vanishing,
                normalization,
                expected,
                reversal,
                tail,
            })
        })
        .collect()
}
