use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::Scalar;

/// Eventually periodic sequence of positive exponents `m_0, m_1, ...`: a finite
/// prefix followed by a repeating cycle. An empty cycle makes the sequence finite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeq {
    prefix: Vec<u32>,
    cycle: Vec<u32>,
}

impl PowerSeq {
    pub fn new(prefix: Vec<u32>, cycle: Vec<u32>) -> Result<Self> {
        if prefix.iter().chain(cycle.iter()).any(|&m| m == 0) {
            return Err(Error::InvalidPowers("every power must be at least 1".into()));
        }
        Ok(Self { prefix, cycle })
    }

    pub fn finite(powers: Vec<u32>) -> Result<Self> {
        Self::new(powers, Vec::new())
    }

    pub fn periodic(cycle: Vec<u32>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidPowers("empty cycle".into()));
        }
        Self::new(Vec::new(), cycle)
    }

    pub fn constant(m: u32) -> Result<Self> {
        Self::periodic(vec![m])
    }

    pub fn is_finite(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Number of stored powers for finite sequences.
    pub fn len(&self) -> Option<usize> {
        self.is_finite().then_some(self.prefix.len())
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.is_empty() && self.cycle.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<u32> {
        if n < self.prefix.len() {
            Some(self.prefix[n])
        } else if self.cycle.is_empty() {
            None
        } else {
            Some(self.cycle[(n - self.prefix.len()) % self.cycle.len()])
        }
    }

    /// The first `n` powers (fewer if the sequence is finite and shorter).
    pub fn prefix(&self, n: usize) -> Vec<u32> {
        (0..n).map_while(|i| self.get(i)).collect()
    }

    /// The sequence `m_k, m_{k+1}, ...`.
    pub fn skip(&self, k: usize) -> Self {
        if k <= self.prefix.len() {
            return Self {
                prefix: self.prefix[k..].to_vec(),
                cycle: self.cycle.clone(),
            };
        }
        if self.cycle.is_empty() {
            return Self {
                prefix: Vec::new(),
                cycle: Vec::new(),
            };
        }
        let shift = (k - self.prefix.len()) % self.cycle.len();
        let mut cycle = self.cycle[shift..].to_vec();
        cycle.extend_from_slice(&self.cycle[..shift]);
        Self {
            prefix: Vec::new(),
            cycle,
        }
    }
}

/// Source of partial numerators `a_0, a_1, ...`, either an explicit list or a
/// rule evaluated on demand.
#[derive(Clone)]
pub enum Numerators {
    /// Finite explicit list.
    List(Vec<Scalar>),
    /// `a_n` is the indeterminate `a_n`.
    Symbolic,
    /// Every `a_n` equals the same value.
    Constant(Scalar),
    /// `a_{2n} = q^{2n+1}`, `a_{2n+1} = (q^{n+1} - 1) q^{n+1}` for the given `q`.
    Eisenstein(Scalar),
    Rule(Arc<dyn Fn(usize) -> Scalar + Send + Sync>),
}

impl Numerators {
    pub fn ones() -> Self {
        Self::Constant(Scalar::one())
    }

    pub fn rule(f: impl Fn(usize) -> Scalar + Send + Sync + 'static) -> Self {
        Self::Rule(Arc::new(f))
    }

    pub fn get(&self, n: usize) -> Option<Scalar> {
        match self {
            Self::List(v) => v.get(n).cloned(),
            Self::Symbolic => Some(Scalar::a(n)),
            Self::Constant(c) => Some(c.clone()),
            Self::Eisenstein(q) => {
                let k = (n / 2) as u32;
                Some(if n % 2 == 0 {
                    q.pow(2 * k + 1)
                } else {
                    let qk = q.pow(k + 1);
                    &(&qk - &Scalar::one()) * &qk
                })
            }
            Self::Rule(f) => Some(f(n)),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Self::List(_))
    }
}

impl fmt::Debug for Numerators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::List(v) => f.debug_tuple("List").field(v).finish(),
            Self::Symbolic => f.write_str("Symbolic"),
            Self::Constant(c) => f.debug_tuple("Constant").field(c).finish(),
            Self::Eisenstein(q) => f.debug_tuple("Eisenstein").field(q).finish(),
            Self::Rule(_) => f.write_str("Rule(..)"),
        }
    }
}
