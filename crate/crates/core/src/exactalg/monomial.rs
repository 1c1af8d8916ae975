use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// An indeterminate of the coefficient ring.
///
/// Slots `0..FIRST_INDEXED` hold the named symbols `x`, `q`, `u`, `z` and the bare
/// parameter `a`; every slot from `FIRST_INDEXED` on is a partial numerator `a_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

const FIRST_INDEXED: u32 = 5;

impl Var {
    pub const X: Var = Var(0);
    pub const Q: Var = Var(1);
    pub const U: Var = Var(2);
    pub const Z: Var = Var(3);
    /// The bare parameter `a` used by the stretched Catalan family.
    pub const PARAM: Var = Var(4);

    /// The partial numerator `a_i`.
    pub fn a(i: usize) -> Var {
        Var(FIRST_INDEXED + u32::try_from(i).expect("numerator index fits in u32"))
    }

    pub fn slot(self) -> usize {
        self.0 as usize
    }

    pub fn from_slot(slot: usize) -> Var {
        Var(u32::try_from(slot).expect("variable slot fits in u32"))
    }

    /// Index `i` when this is `a_i`.
    pub fn numerator_index(self) -> Option<usize> {
        self.0.checked_sub(FIRST_INDEXED).map(|i| i as usize)
    }

    pub fn name(self) -> String {
        match self {
            Var::X => "x".into(),
            Var::Q => "q".into(),
            Var::U => "u".into(),
            Var::Z => "z".into(),
            Var::PARAM => "a".into(),
            Var(n) => format!("a{}", n - FIRST_INDEXED),
        }
    }

    /// Inverse of [`Var::name`].
    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "x" => Some(Var::X),
            "q" => Some(Var::Q),
            "u" => Some(Var::U),
            "z" => Some(Var::Z),
            "a" => Some(Var::PARAM),
            _ => {
                let rest = name.strip_prefix('a')?;
                let digits = rest.strip_prefix('_').unwrap_or(rest);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return None;
                }
                if digits.len() > 1 && digits.starts_with('0') {
                    return None;
                }
                digits.parse::<usize>().ok().map(Var::a)
            }
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Exponent vector indexed by variable slot. Trailing zeros are never stored, so
/// two equal monomials always have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[u16; 14]>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var, exp: u16) -> Self {
        if exp == 0 {
            return Self::one();
        }
        let mut exps: SmallVec<[u16; 14]> = SmallVec::from_elem(0, v.slot() + 1);
        exps[v.slot()] = exp;
        Self {
            degree: u32::from(exp),
            exps,
        }
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (Var, u16)>) -> Self {
        pairs
            .into_iter()
            .fold(Self::one(), |acc, (v, e)| acc.mul(&Self::var(v, e)))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.exps.get(v.slot()).copied().unwrap_or(0)
    }

    /// Nonzero `(variable, exponent)` pairs in slot order.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (Var::from_slot(i), e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (slot, e) in short.exps.iter().enumerate() {
            exps[slot] = exps[slot]
                .checked_add(*e)
                .expect("exponent overflow in monomial product");
        }
        Self {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Self::one();
        }
        let n16 = u16::try_from(n).expect("exponent overflow in monomial power");
        Self {
            degree: self.degree * n,
            exps: self
                .exps
                .iter()
                .map(|e| e.checked_mul(n16).expect("exponent overflow in monomial power"))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.len() <= other.exps.len()
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div_into(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps.clone();
        for (slot, e) in self.exps.iter().enumerate() {
            exps[slot] -= *e;
        }
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Some(Self {
            degree: other.degree - self.degree,
            exps,
        })
    }

    /// Drop variable `v`, returning its exponent and the remaining monomial.
    pub fn split_off(&self, v: Var) -> (u16, Self) {
        let e = self.exponent(v);
        if e == 0 {
            return (0, self.clone());
        }
        let mut exps = self.exps.clone();
        exps[v.slot()] = 0;
        while exps.last() == Some(&0) {
            exps.pop();
        }
        (
            e,
            Self {
                degree: self.degree - u32::from(e),
                exps,
            },
        )
    }
}

/// Graded lexicographic: higher total degree is greater, ties broken by comparing
/// exponents slot by slot.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.as_slice().cmp(other.exps.as_slice()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.factors() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
