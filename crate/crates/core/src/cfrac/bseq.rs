use crate::error::{Error, Result};

use super::powers::PowerSeq;

/// Index sequence `b_{-1}, b_0, ..., b_K` with `b_{-1} = -1`, `b_0 = 0`,
/// non-decreasing and `b_{k+2} - b_k >= 1`, so no value occurs three times.
///
/// `b_{-1}` is stored explicitly and all accessors take the index `k >= -1`
/// directly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BSeq {
    values: Vec<i64>,
}

impl BSeq {
    /// `values` starts at `b_{-1}`.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        check_values(&values)?;
        Ok(Self { values })
    }

    /// `values` starts at `b_0`; `b_{-1} = -1` is prepended.
    pub fn from_b0(values: &[i64]) -> Result<Self> {
        let mut all = Vec::with_capacity(values.len() + 1);
        all.push(-1);
        all.extend_from_slice(values);
        Self::new(all)
    }

    /// `b_n = n` for `n = -1..=last`.
    pub fn identity(last: usize) -> Self {
        Self::new((-1..=last as i64).collect()).expect("b_n = n is valid")
    }

    /// `b_k` for `k >= -1`.
    pub fn get(&self, k: isize) -> i64 {
        assert!(k >= -1, "b-sequence index {k} below -1");
        self.values[(k + 1) as usize]
    }

    pub fn try_get(&self, k: isize) -> Option<i64> {
        if k < -1 {
            return None;
        }
        self.values.get((k + 1) as usize).copied()
    }

    /// `K`, the index of the last stored value.
    pub fn last_index(&self) -> usize {
        self.values.len() - 2
    }

    /// `b_K`.
    pub fn largest(&self) -> i64 {
        *self.values.last().expect("b-sequence holds b_{-1} and b_0")
    }

    /// All stored values starting at `b_{-1}`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The prefix ending at `b_k`.
    pub fn truncated(&self, k: usize) -> Self {
        Self {
            values: self.values[..(k + 2).min(self.values.len())].to_vec(),
        }
    }

    /// Continues with unit steps until `b_K + b_{K-1} >= order`, which is enough
    /// depth to expand the C-fraction up to `x^order`. Unit steps keep the
    /// sequence valid.
    pub fn extended_for_order(&self, order: usize) -> Self {
        let mut values = self.values.clone();
        while values[values.len() - 1] + values[values.len() - 2] < order as i64 {
            let last = values[values.len() - 1];
            values.push(last + 1);
        }
        Self { values }
    }

    /// Distinct values `B_{-1} = -1 < B_0 = 0 < B_1 < ...`.
    pub fn distinct(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.values.clone();
        out.dedup();
        out
    }

    /// 1 or 2 for values present in the sequence, 0 otherwise.
    pub fn multiplicity(&self, value: i64) -> usize {
        self.values.iter().filter(|&&v| v == value).count()
    }

    /// Largest `k` with `b_k = value`.
    pub fn last_position(&self, value: i64) -> Option<isize> {
        self.values
            .iter()
            .rposition(|&v| v == value)
            .map(|i| i as isize - 1)
    }

    /// `m_n = b_{n+1} - b_{n-1}` for `n = 0..K`.
    pub fn powers(&self) -> PowerSeq {
        let m = (0..self.last_index() as isize)
            .map(|n| (self.get(n + 1) - self.get(n - 1)) as u32)
            .collect();
        PowerSeq::finite(m).expect("valid b-sequences give positive powers")
    }
}

fn check_values(values: &[i64]) -> Result<()> {
    if values.len() < 2 {
        return Err(Error::InvalidBSeq("need at least b_{-1} and b_0".into()));
    }
    if values[0] != -1 {
        return Err(Error::InvalidBSeq(format!("b_{{-1}} must be -1, found {}", values[0])));
    }
    if values[1] != 0 {
        return Err(Error::InvalidBSeq(format!("b_0 must be 0, found {}", values[1])));
    }
    for (i, w) in values.windows(2).enumerate() {
        if w[1] < w[0] {
            return Err(Error::InvalidBSeq(format!(
                "decreasing at b_{}: {} < {}",
                i as isize,
                w[1],
                w[0]
            )));
        }
    }
    for (i, w) in values.windows(3).enumerate() {
        if w[2] - w[0] < 1 {
            return Err(Error::InvalidBSeq(format!(
                "value {} occurs three times from b_{}",
                w[0],
                i as isize - 1
            )));
        }
    }
    Ok(())
}

/// Alias of [`BSeq::powers`].
pub fn bseq_to_powers(b: &BSeq) -> PowerSeq {
    b.powers()
}

/// Result of [`powers_to_bseq`]: the values `b_{-1}, b_0, ..., b_L` and whether
/// they form a valid [`BSeq`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSeqCandidate {
    pub values: Vec<i64>,
    pub valid: bool,
}

impl BSeqCandidate {
    pub fn into_bseq(self) -> Result<BSeq> {
        BSeq::new(self.values)
    }
}

/// Inverts `m_n = b_{n+1} - b_{n-1}`:
/// `b_{2n} = m_{2n-1} + m_{2n-3} + ... + m_1` and
/// `b_{2n+1} = m_{2n} + m_{2n-2} + ... + m_0 - 1`.
///
/// Validity is reported rather than enforced; power sequences such as
/// `(1, 2, 1, 1, ...)` give non-monotone results.
pub fn powers_to_bseq(m: &[u32]) -> BSeqCandidate {
    let mut values = Vec::with_capacity(m.len() + 2);
    values.push(-1);
    for k in 0..=m.len() {
        let b = if k % 2 == 0 {
            (0..k / 2).map(|j| i64::from(m[k - 1 - 2 * j])).sum::<i64>()
        } else {
            (0..=(k - 1) / 2)
                .map(|j| i64::from(m[k - 1 - 2 * j]))
                .sum::<i64>()
                - 1
        };
        values.push(b);
    }
    let valid = check_values(&values).is_ok();
    BSeqCandidate { values, valid }
}
