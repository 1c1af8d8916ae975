//! Index sequences, C-fractions, their series expansions and convergents.

mod bseq;
mod convergents;
mod fraction;
mod powers;
mod series;
mod xpoly;

pub use bseq::{bseq_to_powers, powers_to_bseq, BSeq, BSeqCandidate};
pub use convergents::{convergent_table, convergents, Convergent};
pub use fraction::{cfrac_expand, jfraction_expand, CFrac};
pub use powers::{Numerators, PowerSeq};
pub use series::{series_reciprocal, PowerSeries};
pub use xpoly::XPoly;
