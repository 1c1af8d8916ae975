use crate::error::{Error, Result};
use crate::exactalg::Scalar;

use super::bseq::BSeq;
use super::powers::Numerators;
use super::xpoly::XPoly;

/// Numerator and denominator of the `n`-th convergent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergent {
    pub numer: XPoly,
    pub denom: XPoly,
}

fn numerator_at(numerators: &Numerators, n: usize) -> Result<Scalar> {
    numerators.get(n).ok_or(Error::InsufficientDepth {
        needed: n + 1,
        available: n,
    })
}

/// `A_n/B_n` for `n = 0..=k` from
/// `A_n = A_{n-1} - a_{n-2} x^{b_{n-1} - b_{n-3}} A_{n-2}` (same for `B_n`),
/// `A_0 = 0, A_1 = 1, B_0 = B_1 = 1`.
pub fn convergent_table(b: &BSeq, numerators: &Numerators, k: usize) -> Result<Vec<Convergent>> {
    let max = b.last_index() + 1;
    if k > max {
        return Err(Error::DepthOutOfRange { depth: k, max });
    }
    let mut table = vec![
        Convergent {
            numer: XPoly::zero(),
            denom: XPoly::one(),
        },
        Convergent {
            numer: XPoly::one(),
            denom: XPoly::one(),
        },
    ];
    for n in 2..=k {
        let n_i = n as isize;
        let shift = (b.get(n_i - 1) - b.get(n_i - 3)) as usize;
        let a = numerator_at(numerators, n - 2)?;
        let step = |prev: &XPoly, prev2: &XPoly| prev - &prev2.shift(shift).scale(&a);
        let next = Convergent {
            numer: step(&table[n - 1].numer, &table[n - 2].numer),
            denom: step(&table[n - 1].denom, &table[n - 2].denom),
        };
        table.push(next);
    }
    table.truncate(k + 1);
    Ok(table)
}

/// `(A_k, B_k)`.
pub fn convergents(b: &BSeq, numerators: &Numerators, k: usize) -> Result<(XPoly, XPoly)> {
    let mut table = convergent_table(b, numerators, k)?;
    let last = table.pop().expect("table holds k + 1 entries");
    Ok((last.numer, last.denom))
}
