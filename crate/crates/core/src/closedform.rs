//! Closed forms for the Hankel determinants of C-fractions whose powers come
//! from a valid index sequence, and for several derived determinant families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;

use crate::cfrac::{BSeq, CFrac, Numerators, PowerSeries};
use crate::error::{Error, Result};
use crate::exactalg::{Scalar, Var};
use crate::hankel::hdet;

/// `sign * prod_j a_j^{e_j}` with `sign` in `{-1, 0, 1}`; zero carries no exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedMonomial {
    sign: i8,
    exponents: BTreeMap<usize, u32>,
}

impl SignedMonomial {
    pub fn zero() -> Self {
        Self {
            sign: 0,
            exponents: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self {
            sign: 1,
            exponents: BTreeMap::new(),
        }
    }

    /// Zero exponents are dropped. `sign` must be `1` or `-1`.
    pub fn new(sign: i8, exponents: impl IntoIterator<Item = (usize, u32)>) -> Self {
        assert!(sign == 1 || sign == -1, "sign of a nonzero monomial must be +-1");
        Self {
            sign,
            exponents: exponents.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn exponents(&self) -> &BTreeMap<usize, u32> {
        &self.exponents
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.exponents.get(&j).copied().unwrap_or(0)
    }

    /// The value with `a_j` replaced by the `j`-th numerator.
    pub fn evaluate(&self, numerators: &Numerators) -> Result<Scalar> {
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        let mut value = Scalar::from_int(self.sign.into());
        for (&j, &e) in &self.exponents {
            let a = numerators.get(j).ok_or(Error::InsufficientDepth {
                needed: j + 1,
                available: j,
            })?;
            value = value * a.pow(e);
        }
        Ok(value)
    }

    /// The value in the indeterminates `a_j`.
    pub fn to_scalar(&self) -> Scalar {
        self.evaluate(&Numerators::Symbolic)
            .expect("symbolic numerators are unbounded")
    }
}

/// Runs of consecutive indices sharing an exponent are grouped, as in
/// `(a0*a1)^2*(a2*a3)^1`; exponents are always written.
impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return f.write_str("0");
        }
        if self.sign < 0 {
            f.write_str("-")?;
        }
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        let mut groups: Vec<(Vec<usize>, u32)> = Vec::new();
        for (&j, &e) in &self.exponents {
            match groups.last_mut() {
                Some((idx, ge)) if *ge == e && *idx.last().unwrap() + 1 == j => idx.push(j),
                _ => groups.push((vec![j], e)),
            }
        }
        for (i, (idx, e)) in groups.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            let names: Vec<String> = idx.iter().map(|j| format!("a{j}")).collect();
            if names.len() == 1 {
                write!(f, "{}^{e}", names[0])?;
            } else {
                write!(f, "({})^{e}", names.join("*"))?;
            }
        }
        Ok(())
    }
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn parity_sign(e: i64) -> i8 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `d(b_k) = (-1)^{sum_{j=1}^k C(b_j - b_{j-1}, 2)} prod_{j<k} a_j^{b_k - b_j}`.
pub fn closed_form_at(b: &BSeq, k: usize) -> Result<SignedMonomial> {
    if k > b.last_index() {
        return Err(Error::IndexOutOfRange {
            index: k as i64,
            msg: format!("the sequence ends at b_{}", b.last_index()),
        });
    }
    let k = k as isize;
    let sign_exp: i64 = (1..=k).map(|j| binom2(b.get(j) - b.get(j - 1))).sum();
    let exps = (0..k).map(|j| (j as usize, (b.get(k) - b.get(j)) as u32));
    Ok(SignedMonomial::new(parity_sign(sign_exp), exps))
}

/// `{b_k : b_k <= up_to}`, the indices where the Hankel transform is nonzero.
pub fn transform_support(b: &BSeq, up_to: usize) -> Result<BTreeSet<i64>> {
    let n = up_to as i64;
    if b.largest() < n {
        return Err(Error::InsufficientLength {
            needed: n,
            largest: b.largest(),
        });
    }
    Ok(b.values()[1..].iter().copied().filter(|&v| v <= n).collect())
}

/// `d(0..=up_to)` as predicted by [`closed_form_at`]; zero off the support.
pub fn closed_form_transform(b: &BSeq, up_to: usize) -> Result<Vec<SignedMonomial>> {
    transform_support(b, up_to)?;
    Ok((0..=up_to as i64)
        .map(|n| match b.last_position(n) {
            Some(k) => closed_form_at(b, k as usize).expect("position lies in range"),
            None => SignedMonomial::zero(),
        })
        .collect())
}

/// Both sides of the induction step
/// `det(f_{i+j})_0^{n+b_k} = (-1)^{sum_{j<k} C(b_{j+1}-b_j, 2)} prod_{j<=k} a_j^{n+b_k-b_j}
///  * det(f^{(k+1)}_{i+j+1+b_k-b_{k+1}})_0^{n-1}`,
/// where `f^{(k+1)}` is the tail starting at `a_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepReport {
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub holds: bool,
}

/// Checks the induction step with symbolic numerators. `b` must reach index
/// `k + 1`; it is continued with unit steps when more depth is needed.
pub fn step_recursion_check(b: &BSeq, k: usize, n: usize) -> Result<StepReport> {
    if k + 1 > b.last_index() {
        return Err(Error::IndexOutOfRange {
            index: k as i64 + 1,
            msg: format!("the sequence ends at b_{}", b.last_index()),
        });
    }
    let ki = k as isize;
    let (bk, bk1) = (b.get(ki), b.get(ki + 1));
    let n = n as i64;
    let lhs_order = (2 * (n + bk)) as usize;
    let shift = 1 + bk - bk1;
    let tail_order = (2 * (n - 1) + shift).max(0) as usize;
    let b = b.extended_for_order(lhs_order.max(tail_order + (bk + bk1) as usize));
    let cf = CFrac::from_bseq(&b, Numerators::Symbolic);
    let f = cf.expand(lhs_order)?;
    let tail = cf.tail(k + 1).expand(tail_order)?;
    let lhs = hdet(&f, 0, n + bk)?;
    let sign_exp: i64 = (0..ki).map(|j| binom2(b.get(j + 1) - b.get(j))).sum();
    let exps = (0..=ki).map(|j| (j as usize, (n + bk - b.get(j)) as u32));
    let factor = SignedMonomial::new(parity_sign(sign_exp), exps).to_scalar();
    let rhs = factor * hdet(&tail, shift, n - 1)?;
    let holds = lhs == rhs;
    Ok(StepReport { lhs, rhs, holds })
}

/// Determinant families with explicit formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `d_1(N)` for `b_n = n` (all powers 2): zero for even `N`, and for `N = 2n-1`
    /// `(-1)^n a_0^{2n} (a_1 a_2)^{2n-2} (a_3 a_4)^{2n-4} ... (a_{2n-3} a_{2n-2})^2`.
    EvenPowersShifted,
    /// `d_1(N) = a_0^{N+1} (a_1 a_2)^N (a_3 a_4)^{N-1} ... (a_{2N-1} a_{2N})` for
    /// all powers 1.
    UnitPowersShifted,
    /// `d_2(N) = e_N d_1(N)` for all powers 1, with
    /// `e_N = a_{2N+1} e_{N-1} + a_0 a_2 ... a_{2N}`, `e_{-1} = 1`.
    UnitPowersDoubleShifted,
    /// `d(N)` of `sum_n a^n C_n x^{mn}`: `(-1)^{C(m-1,2) n} a^{n(mn-1)}` at
    /// `N = mn - 1`, `(-1)^{C(m-1,2) n} a^{n(mn+1)}` at `N = mn`, zero otherwise.
    StretchedCatalan { m: u32, a: Scalar },
    /// `d_1(N)` of `sum_n a^n C_n x^{mn}`: `(-1)^{C(m,2) k} a^{k^2 m}` at
    /// `N = km - 1`, zero otherwise.
    StretchedCatalanShifted { m: u32, a: Scalar },
    /// `d(N)` for `b_n = m + n` (`n > 0`): `d(0) = 1`, zero for `0 < N <= m`, and
    /// `d(m+n) = (-1)^{C(m+1,2)} a_0^{n+m} a_1^{n-1} ... a_{n-1}`.
    DelayedStart { m: u32 },
    /// `d(N)` for powers `(1, 2, 1, 1, 1, ...)`: `d(0) = 1`, `d(1) = 0` and
    /// `d(N) = -a_0^N a_1^N a_2^{N-2} D(N-3)` for `N >= 2`, where `D` is the
    /// `d_2` sequence of the all-ones-powers fraction with numerators
    /// `a_3, a_4, ...` and `D(-1) = 1`.
    MixedPowers,
}

impl Family {
    pub const NAMES: [&'static str; 7] = [
        "even-powers-d1",
        "unit-powers-d1",
        "unit-powers-d2",
        "stretched-catalan",
        "stretched-catalan-d1",
        "delayed-start",
        "mixed-powers",
    ];

    /// Parses a family name; `m` and `a` feed the parametrized families.
    pub fn from_name(name: &str, m: Option<u32>, a: Option<Scalar>) -> Result<Self> {
        let need_m = || {
            m.filter(|&m| m >= 1)
                .ok_or_else(|| Error::ParamOutOfRange(format!("family {name} needs m >= 1")))
        };
        let a_or_symbol = || a.clone().unwrap_or_else(|| Scalar::var(Var::PARAM));
        Ok(match name {
            "even-powers-d1" => Self::EvenPowersShifted,
            "unit-powers-d1" => Self::UnitPowersShifted,
            "unit-powers-d2" => Self::UnitPowersDoubleShifted,
            "stretched-catalan" => Self::StretchedCatalan {
                m: need_m()?,
                a: a_or_symbol(),
            },
            "stretched-catalan-d1" => Self::StretchedCatalanShifted {
                m: need_m()?,
                a: a_or_symbol(),
            },
            "delayed-start" => Self::DelayedStart { m: need_m()? },
            "mixed-powers" => Self::MixedPowers,
            other => return Err(Error::UnsupportedFamily(other.to_string())),
        })
    }
}

fn numerator(numerators: &Numerators, j: usize) -> Result<Scalar> {
    numerators.get(j).ok_or(Error::InsufficientDepth {
        needed: j + 1,
        available: j,
    })
}

fn signed(e: i64, value: Scalar) -> Scalar {
    if parity_sign(e) < 0 {
        -value
    } else {
        value
    }
}

/// `a_0^{N+1} (a_1 a_2)^N ... (a_{2N-1} a_{2N})` over `numerators` starting at `from`.
fn unit_powers_d1(numerators: &Numerators, from: usize, n: usize) -> Result<Scalar> {
    let mut value = numerator(numerators, from)?.pow(n as u32 + 1);
    for i in 1..=n {
        let pair = numerator(numerators, from + 2 * i - 1)? * numerator(numerators, from + 2 * i)?;
        value = value * pair.pow((n + 1 - i) as u32);
    }
    Ok(value)
}

fn unit_powers_d2(numerators: &Numerators, from: usize, n: usize) -> Result<Scalar> {
    let a = |j: usize| numerator(numerators, from + j);
    let mut e = Scalar::one();
    let mut even_product = Scalar::one();
    for i in 0..=n {
        even_product = even_product * a(2 * i)?;
        e = a(2 * i + 1)? * e + &even_product;
    }
    Ok(e * unit_powers_d1(numerators, from, n)?)
}

/// Value of `family` at Hankel index `index`. Families with symbolic numerators
/// read `a_j` from `numerators`; the stretched Catalan families use their own `a`.
pub fn family_formula(family: &Family, numerators: &Numerators, index: usize) -> Result<Scalar> {
    let a = |j: usize| numerator(numerators, j);
    match family {
        Family::EvenPowersShifted => {
            if index % 2 == 0 {
                return Ok(Scalar::zero());
            }
            let n = (index + 1) / 2;
            let mut value = a(0)?.pow(2 * n as u32);
            for i in 1..n {
                let pair = a(2 * i - 1)? * a(2 * i)?;
                value = value * pair.pow(2 * (n - i) as u32);
            }
            Ok(signed(n as i64, value))
        }
        Family::UnitPowersShifted => unit_powers_d1(numerators, 0, index),
        Family::UnitPowersDoubleShifted => unit_powers_d2(numerators, 0, index),
        Family::StretchedCatalan { m, a } => {
            let m = i64::from(*m);
            check_m(m)?;
            let big = index as i64;
            let (n, exp) = if (big + 1) % m == 0 {
                let n = (big + 1) / m;
                (n, n * (m * n - 1))
            } else if big % m == 0 {
                let n = big / m;
                (n, n * (m * n + 1))
            } else {
                return Ok(Scalar::zero());
            };
            Ok(signed(binom2(m - 1) * n, a.pow(exp as u32)))
        }
        Family::StretchedCatalanShifted { m, a } => {
            let m = i64::from(*m);
            check_m(m)?;
            let big = index as i64;
            if (big + 1) % m != 0 {
                return Ok(Scalar::zero());
            }
            let k = (big + 1) / m;
            Ok(signed(binom2(m) * k, a.pow((k * k * m) as u32)))
        }
        Family::DelayedStart { m } => {
            let m = *m as usize;
            check_m(m as i64)?;
            if index == 0 {
                return Ok(Scalar::one());
            }
            if index <= m {
                return Ok(Scalar::zero());
            }
            let n = index - m;
            let mut value = a(0)?.pow((n + m) as u32);
            for j in 1..n {
                value = value * a(j)?.pow((n - j) as u32);
            }
            Ok(signed(binom2(m as i64 + 1), value))
        }
        Family::MixedPowers => match index {
            0 => Ok(Scalar::one()),
            1 => Ok(Scalar::zero()),
            n => {
                let tail = if n == 2 {
                    Scalar::one()
                } else {
                    unit_powers_d2(numerators, 3, n - 3)?
                };
                let value = (a(0)? * a(1)?).pow(n as u32) * a(2)?.pow(n as u32 - 2) * tail;
                Ok(-value)
            }
        },
    }
}

fn check_m(m: i64) -> Result<()> {
    if m < 1 {
        return Err(Error::ParamOutOfRange(format!("m = {m} must be at least 1")));
    }
    Ok(())
}

/// Random valid index sequence: starting from `b_0 = 0`, append `b + delta` with
/// `delta` drawn from `{0, 1, 2, 3}`, never creating a value three times and never
/// exceeding `max_last`, until `b_K >= min_last`.
pub fn random_bseq(rng: &mut impl Rng, min_last: i64, max_last: i64) -> BSeq {
    assert!(0 <= min_last && min_last <= max_last);
    let mut values = vec![-1i64, 0];
    while values[values.len() - 1] < min_last {
        let last = values[values.len() - 1];
        let doubled = values[values.len() - 2] == last;
        let choices: Vec<i64> = (0..=3)
            .filter(|&d| !(d == 0 && doubled) && last + d <= max_last)
            .collect();
        values.push(last + choices[rng.random_range(0..choices.len())]);
    }
    BSeq::new(values).expect("generator keeps the invariants")
}

/// Expansion of the C-fraction of `b` with the given numerators, deep enough for
/// a Hankel transform up to `up_to` at offset 0; `b` is continued with unit steps
/// when needed.
pub fn series_for_transform(b: &BSeq, numerators: &Numerators, up_to: usize) -> Result<PowerSeries> {
    let order = 2 * up_to;
    CFrac::from_bseq(&b.extended_for_order(order), numerators.clone()).expand(order)
}
