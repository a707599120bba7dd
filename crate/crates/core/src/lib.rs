//! Cyclic DNA codes over the chain ring `R = F2 + uF2 + u^2F2`, `u^3 = 0`.
//!
//! Ring elements map to codon pairs, words of length `n` to DNA strings of
//! length `2n`, and cyclic codes to ideals of `R[x]/(x^n - 1)`. The crate
//! builds codes from generators, enumerates them, checks reverse and
//! reverse-complement closure both exhaustively and through the symbolic
//! criteria, and computes Euclidean and Hermitian duals.

pub mod cli;
pub mod code;
pub mod constraints;
pub mod dual;
pub mod error;
mod linalg;
pub mod polyf2;
pub mod polyr;
pub mod ring;

pub use code::{CodeReport, CodeSpec, CyclicCode, GeneratorSpec, Presentation};
pub use constraints::{CaseTag, Verdict};
pub use dual::{dual_code, Flavor};
pub use error::{Error, Result};
pub use polyf2::BinPoly;
pub use polyr::RingWord;
pub use ring::{Codon, Nucleotide, RingElement};
