//! Cyclic codes over `R` as ideals of `R[x]/(x^n - 1)`.
//!
//! An ideal is stored as the F2-span of `u^j * x^i * gen` over all generators,
//! `j < 3`, `i < n`. Since `R` is spanned over F2 by `1, u, u^2`, that span is
//! the ideal itself, so all module arithmetic reduces to bit linear algebra.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::polyf2::BinPoly;
use crate::polyr::{check_len, RingWord};

/// Default bound on the F2-dimension of codes we enumerate exhaustively.
pub const DEFAULT_DIM_CAP: usize = 24;

#[derive(Clone, Debug)]
pub struct CyclicCode {
    n: usize,
    basis: Echelon,
    generators: Vec<RingWord>,
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.basis == other.basis
    }
}

impl Eq for CyclicCode {}

impl CyclicCode {
    /// The ideal generated by `generators`. An empty list gives the zero code.
    pub fn build(n: usize, generators: &[RingWord]) -> Result<Self> {
        check_len(n)?;
        let mut basis = Echelon::new();
        for g in generators {
            if g.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: g.len(),
                });
            }
            let mut w = *g;
            for _ in 0..3 {
                for i in 0..n {
                    basis.insert(w.shift(i));
                }
                w = w.mul_u();
            }
        }
        Ok(Self {
            n,
            basis,
            generators: generators.to_vec(),
        })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::build(n, &[])
    }

    /// All of `R^n`.
    pub fn full(n: usize) -> Result<Self> {
        let one = RingWord::compose(n, BinPoly::ONE, BinPoly::ZERO, BinPoly::ZERO)?;
        Self::build(n, &[one])
    }

    /// Wraps an F2 subspace already known to be an ideal.
    pub(crate) fn from_echelon(n: usize, basis: Echelon) -> Self {
        let generators = basis.rows().to_vec();
        Self {
            n,
            basis,
            generators,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// F2-dimension; the code has `2^dim` words.
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// `2^dim`, or `None` when it does not fit in a `u128`.
    pub fn cardinality(&self) -> Option<u128> {
        1u128.checked_shl(self.dim() as u32)
    }

    pub fn basis(&self) -> &[RingWord] {
        self.basis.rows()
    }

    pub fn generators(&self) -> &[RingWord] {
        &self.generators
    }

    pub fn contains(&self, w: &RingWord) -> Result<bool> {
        self.check(w)?;
        Ok(self.basis.contains(w))
    }

    fn check(&self, w: &RingWord) -> Result<()> {
        if w.len() == self.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n,
                found: w.len(),
            })
        }
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.dim() > cap {
            Err(Error::CapExceeded {
                what: "code dimension for enumeration",
                requested: self.dim(),
                cap,
            })
        } else {
            Ok(())
        }
    }

    /// Every codeword exactly once, in Gray-code order over the basis.
    pub fn codewords(&self) -> Result<Codewords<'_>> {
        self.codewords_with_cap(DEFAULT_DIM_CAP)
    }

    pub fn codewords_with_cap(&self, cap: usize) -> Result<Codewords<'_>> {
        self.check_cap(cap)?;
        Ok(Codewords {
            basis: self.basis.rows(),
            index: 0,
            end: 1u64 << self.dim(),
            current: RingWord::zero(self.n),
            started: false,
        })
    }

    /// Splits the Gray-code sequence into chunks processed in parallel.
    fn par_chunks(&self, cap: usize) -> Result<impl ParallelIterator<Item = Codewords<'_>>> {
        self.check_cap(cap)?;
        let dim = self.dim();
        let chunk_bits = dim.min(12);
        let chunks = 1u64 << (dim - chunk_bits);
        let basis = self.basis.rows();
        let n = self.n;
        Ok((0..chunks).into_par_iter().map(move |c| {
            let start = c << chunk_bits;
            let gray = start ^ (start >> 1);
            let mut current = RingWord::zero(n);
            for (j, b) in basis.iter().enumerate() {
                if (gray >> j) & 1 == 1 {
                    current += *b;
                }
            }
            Codewords {
                basis,
                index: start,
                end: start + (1u64 << chunk_bits),
                current,
                started: false,
            }
        }))
    }

    /// Whether `pred` holds for every codeword (exhaustive, parallel).
    pub fn all_codewords<F>(&self, cap: usize, pred: F) -> Result<bool>
    where
        F: Fn(&RingWord) -> bool + Sync + Send,
    {
        Ok(self.par_chunks(cap)?.all(|mut chunk| chunk.all(|w| pred(&w))))
    }

    /// Minimum Hamming weight over nonzero codewords; `None` for the zero code.
    pub fn min_hamming_distance(&self) -> Result<Option<u32>> {
        self.min_hamming_distance_with_cap(DEFAULT_DIM_CAP)
    }

    pub fn min_hamming_distance_with_cap(&self, cap: usize) -> Result<Option<u32>> {
        Ok(self
            .par_chunks(cap)?
            .filter_map(|chunk| {
                chunk
                    .filter(|w| !w.is_zero())
                    .map(|w| w.hamming_weight())
                    .min()
            })
            .min())
    }

    /// Brute-force check that `X^r` lies in the code for every codeword `X`.
    pub fn is_reversible(&self) -> Result<bool> {
        self.is_reversible_with_cap(DEFAULT_DIM_CAP)
    }

    pub fn is_reversible_with_cap(&self, cap: usize) -> Result<bool> {
        self.all_codewords(cap, |w| self.basis.contains(&w.reverse()))
    }

    pub fn is_complement_closed(&self) -> Result<bool> {
        self.is_complement_closed_with_cap(DEFAULT_DIM_CAP)
    }

    pub fn is_complement_closed_with_cap(&self, cap: usize) -> Result<bool> {
        self.all_codewords(cap, |w| self.basis.contains(&w.complement()))
    }

    pub fn is_rc_closed(&self) -> Result<bool> {
        self.is_rc_closed_with_cap(DEFAULT_DIM_CAP)
    }

    pub fn is_rc_closed_with_cap(&self, cap: usize) -> Result<bool> {
        self.all_codewords(cap, |w| self.basis.contains(&w.reverse_complement()))
    }

    /// Reversibility from basis images only. Reversal is F2-linear, so this is
    /// exact and needs no enumeration.
    pub fn is_reversible_linear(&self) -> bool {
        self.basis
            .rows()
            .iter()
            .all(|b| self.basis.contains(&b.reverse()))
    }

    /// Closure under `X -> X^{rc} = X^r + u^2 I` from basis images plus the
    /// image of zero.
    pub fn is_rc_closed_linear(&self) -> bool {
        self.basis.contains(&RingWord::u2_iota(self.n)) && self.is_reversible_linear()
    }

    /// Closure under cyclic shift and multiplication by `u`, checked on basis rows.
    pub fn is_ideal(&self) -> bool {
        self.basis
            .rows()
            .iter()
            .all(|b| self.basis.contains(&b.shift(1)) && self.basis.contains(&b.mul_u()))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        let mut basis = self.basis.clone();
        for r in other.basis.rows() {
            basis.insert(*r);
        }
        Ok(Self::from_echelon(self.n, basis))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        let n = self.n;
        let mut perp = linalg::nullspace(self.basis.rows(), n);
        for r in linalg::nullspace(other.basis.rows(), n).rows() {
            perp.insert(*r);
        }
        Ok(Self::from_echelon(n, linalg::nullspace(perp.rows(), n)))
    }

    fn same_len(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            })
        }
    }

    /// Codewords of the form `u^2 k(x)`.
    pub fn u2_subcode(&self) -> Self {
        let rows = self.basis.rows_led_by(2).copied();
        Self::from_echelon(self.n, Echelon::from_vectors(rows))
    }

    /// Generator of the binary torsion code `T_i = { a : u^i a + (higher) in C }`:
    /// the monic divisor of `x^n + 1` generating it, with `x^n + 1` itself
    /// standing for the zero code.
    pub fn torsion_generator(&self, layer: usize) -> BinPoly {
        assert!(layer < 3);
        self.basis
            .rows_led_by(layer)
            .map(|r| BinPoly::from_bits(r.layer(layer) as u128))
            .fold(BinPoly::xn_plus_one(self.n), BinPoly::gcd)
    }

    /// Canonical generators in the three-generator shape of the structure
    /// theorem for even length.
    ///
    /// `g, a1, a2` are the torsion generators. The lifts are normalised by
    /// remainder: `q` modulo `a2`, then `p1` modulo `a1` (subtracting multiples
    /// of the `a1` lift), then `p2` modulo `a2`, which makes them independent
    /// of the lift first found. The case tag records how many generators are
    /// needed: 1 when the `g` lift alone generates, 2 when `u^2 a2` must be
    /// added, 3 otherwise. Unused fields are zero.
    pub fn canonical_presentation(&self) -> Result<Presentation> {
        let n = self.n;
        if !n.is_multiple_of(2) {
            return Err(Error::OddLength(n));
        }
        let xn = BinPoly::xn_plus_one(n);
        let g = self.torsion_generator(0);
        let a1 = self.torsion_generator(1);
        let a2 = self.torsion_generator(2);

        let layer_poly = |w: &RingWord, i: usize| BinPoly::from_bits(w.layer(i) as u128);
        let lift = |layer: usize, target: BinPoly| {
            self.basis
                .solve_layer(layer, target.reduce_cyclic(n).bits() as u64, n)
                .expect("torsion generator lies in its torsion code")
        };

        let mut a1_lift = lift(1, a1);
        let (k, q) = layer_poly(&a1_lift, 2).divrem(a2)?;
        a1_lift += RingWord::u2_times(n, k * a2)?;

        let mut g_lift = lift(0, g);
        let (k, _) = layer_poly(&g_lift, 1).divrem(a1)?;
        g_lift += a1_lift.mul_binary(k);
        let (k, _) = layer_poly(&g_lift, 2).divrem(a2)?;
        g_lift += RingWord::u2_times(n, (k * a2).reduce_cyclic(n))?;

        let p1 = layer_poly(&g_lift, 1);
        let p2 = layer_poly(&g_lift, 2);
        debug_assert!(a1 == xn || p1.degree() < a1.degree());
        debug_assert_eq!(a1_lift.layer(2) as u128, q.bits());

        let u2a2 = RingWord::u2_times(n, a2)?;
        let case = if Self::build(n, &[g_lift])? == *self {
            1
        } else if Self::build(n, &[g_lift, u2a2])? == *self {
            2
        } else {
            3
        };
        let z = BinPoly::ZERO;
        let (a1, q, a2) = match case {
            1 => (z, z, z),
            2 => (z, z, a2),
            _ => (a1, q, a2),
        };
        Ok(Presentation {
            case,
            g,
            p1,
            p2,
            a1,
            q,
            a2,
        })
    }
}

/// Gray-code iterator over a basis range.
pub struct Codewords<'a> {
    basis: &'a [RingWord],
    // Index (in Gray order) of `current`.
    index: u64,
    end: u64,
    current: RingWord,
    started: bool,
}

impl Iterator for Codewords<'_> {
    type Item = RingWord;

    fn next(&mut self) -> Option<RingWord> {
        if !self.started {
            self.started = true;
            return (self.index < self.end).then_some(self.current);
        }
        self.index += 1;
        if self.index >= self.end {
            return None;
        }
        // gray(i) and gray(i - 1) differ in bit tz(i).
        self.current += self.basis[self.index.trailing_zeros() as usize];
        Some(self.current)
    }
}

/// Structure-theorem data:
/// `C = <g + u p1 + u^2 p2, u a1 + u^2 q, u^2 a2>`, fields unused by the case zeroed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub case: u8,
    pub g: BinPoly,
    pub p1: BinPoly,
    pub p2: BinPoly,
    pub a1: BinPoly,
    pub q: BinPoly,
    pub a2: BinPoly,
}

impl Presentation {
    pub fn generators(&self, n: usize) -> Result<Vec<RingWord>> {
        let f = RingWord::from_ring_poly(n, self.g, self.p1, self.p2)?;
        let mut out = vec![f];
        if self.case >= 3 {
            out.push(RingWord::from_ring_poly(n, BinPoly::ZERO, self.a1, self.q)?);
        }
        if self.case >= 2 {
            out.push(RingWord::u2_times(n, self.a2)?);
        }
        Ok(out)
    }

    pub fn build(&self, n: usize) -> Result<CyclicCode> {
        CyclicCode::build(n, &self.generators(n)?)
    }
}

/// One generator of a JSON code spec, as its three u-adic parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(default = "zero_poly")]
    pub f2: BinPoly,
    #[serde(default = "zero_poly")]
    pub u: BinPoly,
    #[serde(default = "zero_poly")]
    pub u2: BinPoly,
}

fn zero_poly() -> BinPoly {
    BinPoly::ZERO
}

impl GeneratorSpec {
    pub fn to_word(&self, n: usize) -> Result<RingWord> {
        RingWord::from_ring_poly(n, self.f2, self.u, self.u2)
    }

    pub fn from_word(w: &RingWord) -> Self {
        let (f2, u, u2) = w.uadic();
        Self { f2, u, u2 }
    }
}

/// `{ "n": int, "generators": [ { "f2": "<poly>", "u": "<poly>", "u2": "<poly>" } ] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub n: usize,
    pub generators: Vec<GeneratorSpec>,
}

impl CodeSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn words(&self) -> Result<Vec<RingWord>> {
        check_len(self.n)?;
        self.generators.iter().map(|g| g.to_word(self.n)).collect()
    }

    pub fn build(&self) -> Result<CyclicCode> {
        CyclicCode::build(self.n, &self.words()?)
    }

    /// Single-generator or (generator, pure `u^2` generator) shapes, as the
    /// theorem checkers understand them.
    pub fn theorem_shape(&self) -> Option<TheoremShape> {
        match self.generators.as_slice() {
            [f] => Some(TheoremShape::Single {
                g: f.f2,
                p1: f.u,
                p2: f.u2,
            }),
            [f, s] if s.f2.is_zero() && s.u.is_zero() => Some(TheoremShape::Double {
                g: f.f2,
                p1: f.u,
                p2: f.u2,
                a2: s.u2,
            }),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremShape {
    Single {
        g: BinPoly,
        p1: BinPoly,
        p2: BinPoly,
    },
    Double {
        g: BinPoly,
        p1: BinPoly,
        p2: BinPoly,
        a2: BinPoly,
    },
}

/// `2^dim` as a JSON number, or the string `"2^dim"` once it no longer fits a u64.
pub fn cardinality_value(dim: usize) -> serde_json::Value {
    if dim < 64 {
        serde_json::Value::from(1u64 << dim)
    } else {
        serde_json::Value::from(format!("2^{dim}"))
    }
}

/// `{ "n", "dim", "cardinality", "min_distance", "reversible", "rc_closed", "presentation" }`.
///
/// `cardinality` is a number when `dim < 64` and the string `"2^dim"`
/// otherwise; `min_distance` is `null` for the zero code (infinite distance).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeReport {
    pub n: usize,
    pub dim: usize,
    pub cardinality: serde_json::Value,
    pub min_distance: Option<u32>,
    pub reversible: bool,
    pub rc_closed: bool,
    pub presentation: Option<Presentation>,
}

impl CodeReport {
    pub fn new(code: &CyclicCode, cap: usize) -> Result<Self> {
        let dim = code.dim();
        let cardinality = cardinality_value(dim);
        let presentation = if code.len().is_multiple_of(2) {
            Some(code.canonical_presentation()?)
        } else {
            None
        };
        Ok(Self {
            n: code.len(),
            dim,
            cardinality,
            min_distance: code.min_hamming_distance_with_cap(cap)?,
            reversible: code.is_reversible_with_cap(cap)?,
            rc_closed: code.is_rc_closed_with_cap(cap)?,
            presentation,
        })
    }
}
