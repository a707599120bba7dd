//! Words of length `n` over `R`, identified with `R[x]/(x^n - 1)`.
//!
//! A [`RingWord`] is held as three bit layers `(f1, f2, f3)` meaning
//! `f1 + u*f2 + u^2*f3`, bit `i` of each layer being the coefficient of `x^i`.
//! This makes cyclic shifts, multiplication by `u`, and the F2-linear algebra
//! in [`crate::code`] plain word operations.
//!
//! Reversal acts on ring coordinates. In DNA form one coordinate is one codon,
//! so reversing a word swaps codon blocks and never reverses the two
//! nucleotides inside a codon.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polyf2::BinPoly;
use crate::ring::{Codon, RingElement};

pub const MAX_LEN: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingWord {
    n: usize,
    layers: [u64; 3],
}

#[inline]
fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
fn rotl(v: u64, k: usize, n: usize) -> u64 {
    let k = k % n;
    if k == 0 {
        v
    } else {
        ((v << k) | (v >> (n - k))) & mask(n)
    }
}

#[inline]
fn reverse_within(v: u64, len: usize) -> u64 {
    // Reverses bits [0, len).
    if len == 0 {
        0
    } else {
        v.reverse_bits() >> (64 - len)
    }
}

/// Cyclic convolution of two binary layers modulo `x^n + 1`.
#[inline]
fn conv(a: u64, b: u64, n: usize) -> u64 {
    let mut acc = 0;
    let mut b = b;
    while b != 0 {
        let i = b.trailing_zeros() as usize;
        acc ^= rotl(a, i, n);
        b &= b - 1;
    }
    acc
}

pub(crate) fn check_len(n: usize) -> Result<()> {
    if (1..=MAX_LEN).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedLength(n))
    }
}

impl RingWord {
    /// The zero word. Panics unless `1 <= n <= 64`.
    pub fn zero(n: usize) -> Self {
        check_len(n).expect("invalid word length");
        Self { n, layers: [0; 3] }
    }

    /// Builds a word from raw layers; bits at or above `n` are rejected.
    pub fn from_layers(n: usize, layers: [u64; 3]) -> Result<Self> {
        check_len(n)?;
        for l in layers {
            if l & !mask(n) != 0 {
                return Err(Error::DegreeTooLarge {
                    degree: 63 - l.leading_zeros() as usize,
                    bound: n,
                });
            }
        }
        Ok(Self { n, layers })
    }

    pub(crate) fn from_layers_unchecked(n: usize, layers: [u64; 3]) -> Self {
        debug_assert!(layers.iter().all(|l| l & !mask(n) == 0));
        Self { n, layers }
    }

    pub fn from_elements(elems: &[RingElement]) -> Result<Self> {
        let n = elems.len();
        check_len(n)?;
        let mut w = Self::zero(n);
        for (i, &e) in elems.iter().enumerate() {
            w.set(i, e);
        }
        Ok(w)
    }

    /// Inverse of [`RingWord::uadic`]. Component degrees must be below `n`.
    pub fn compose(n: usize, f1: BinPoly, f2: BinPoly, f3: BinPoly) -> Result<Self> {
        check_len(n)?;
        let mut layers = [0u64; 3];
        for (slot, f) in layers.iter_mut().zip([f1, f2, f3]) {
            if let Some(d) = f.degree() {
                if d >= n {
                    return Err(Error::DegreeTooLarge { degree: d, bound: n });
                }
            }
            *slot = f.bits() as u64;
        }
        Ok(Self { n, layers })
    }

    /// `g + u*p1 + u^2*p2` reduced modulo `x^n - 1`, so e.g. `g = x^n + 1`
    /// contributes nothing.
    pub fn from_ring_poly(n: usize, g: BinPoly, p1: BinPoly, p2: BinPoly) -> Result<Self> {
        check_len(n)?;
        Self::compose(
            n,
            g.reduce_cyclic(n),
            p1.reduce_cyclic(n),
            p2.reduce_cyclic(n),
        )
    }

    /// `u^2 * k(x)`.
    pub fn u2_times(n: usize, k: BinPoly) -> Result<Self> {
        Self::from_ring_poly(n, BinPoly::ZERO, BinPoly::ZERO, k)
    }

    /// Unique decomposition `(f1, f2, f3)` with `w = f1 + u*f2 + u^2*f3`.
    pub fn uadic(&self) -> (BinPoly, BinPoly, BinPoly) {
        let [a, b, c] = self.layers;
        (
            BinPoly::from_bits(a as u128),
            BinPoly::from_bits(b as u128),
            BinPoly::from_bits(c as u128),
        )
    }

    /// The all-ones binary word `I(x) = 1 + x + ... + x^{n-1}`.
    pub fn iota(n: usize) -> Self {
        check_len(n).expect("invalid word length");
        Self {
            n,
            layers: [mask(n), 0, 0],
        }
    }

    /// `u^2 * I(x)`, the complement of the zero word.
    pub fn u2_iota(n: usize) -> Self {
        Self::iota(n).mul_u().mul_u()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn layers(&self) -> [u64; 3] {
        self.layers
    }

    pub fn layer(&self, i: usize) -> u64 {
        self.layers[i]
    }

    pub fn is_zero(&self) -> bool {
        self.layers == [0; 3]
    }

    pub fn get(&self, i: usize) -> RingElement {
        assert!(i < self.n);
        RingElement::from_bits(
            ((self.layers[0] >> i) & 1) as u8
                | ((((self.layers[1] >> i) & 1) as u8) << 1)
                | ((((self.layers[2] >> i) & 1) as u8) << 2),
        )
    }

    pub fn set(&mut self, i: usize, e: RingElement) {
        assert!(i < self.n);
        for (j, l) in self.layers.iter_mut().enumerate() {
            *l = (*l & !(1 << i)) | ((e.coeff(j) as u64) << i);
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.n).map(|i| self.get(i))
    }

    /// Number of nonzero coordinates.
    pub fn hamming_weight(&self) -> u32 {
        (self.layers[0] | self.layers[1] | self.layers[2]).count_ones()
    }

    pub fn hamming_distance(&self, other: &Self) -> u32 {
        (*self + *other).hamming_weight()
    }

    /// Largest index carrying a nonzero coefficient.
    pub fn top_index(&self) -> Option<usize> {
        let s = self.layers[0] | self.layers[1] | self.layers[2];
        (s != 0).then(|| 63 - s.leading_zeros() as usize)
    }

    /// Multiplication by `x^k`: cyclic shift towards higher indices.
    pub fn shift(&self, k: usize) -> Self {
        Self {
            n: self.n,
            layers: self.layers.map(|l| rotl(l, k, self.n)),
        }
    }

    pub fn mul_u(&self) -> Self {
        Self {
            n: self.n,
            layers: [0, self.layers[0], self.layers[1]],
        }
    }

    pub fn scale(&self, a: RingElement) -> Self {
        let mut out = Self { n: self.n, layers: [0; 3] };
        let mut term = *self;
        for i in 0..3 {
            if a.coeff(i) {
                out += term;
            }
            term = term.mul_u();
        }
        out
    }

    /// `X^r`: coordinate reversal.
    pub fn reverse(&self) -> Self {
        Self {
            n: self.n,
            layers: self.layers.map(|l| reverse_within(l, self.n)),
        }
    }

    /// `X^c`: coordinatewise Watson-Crick complement (adds `u^2` everywhere).
    pub fn complement(&self) -> Self {
        let [a, b, c] = self.layers;
        Self {
            n: self.n,
            layers: [a, b, c ^ mask(self.n)],
        }
    }

    /// `X^{rc}`.
    pub fn reverse_complement(&self) -> Self {
        self.complement().reverse()
    }

    /// `f^*`: coefficient reversal over `[0, t]` where `t` is the top nonzero index.
    /// Zero maps to zero.
    pub fn reciprocal(&self) -> Self {
        match self.top_index() {
            None => *self,
            Some(t) => Self {
                n: self.n,
                layers: self.layers.map(|l| reverse_within(l, t + 1)),
            },
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        Ok(*self + *other)
    }

    /// Product in `R[x]/(x^n - 1)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        let n = self.n;
        let [a0, a1, a2] = self.layers;
        let [b0, b1, b2] = other.layers;
        Ok(Self {
            n,
            layers: [
                conv(a0, b0, n),
                conv(a0, b1, n) ^ conv(a1, b0, n),
                conv(a0, b2, n) ^ conv(a1, b1, n) ^ conv(a2, b0, n),
            ],
        })
    }

    /// Multiplication by a binary polynomial (reduced modulo `x^n - 1`).
    pub fn mul_binary(&self, k: BinPoly) -> Self {
        let k = k.reduce_cyclic(self.n).bits() as u64;
        Self {
            n: self.n,
            layers: self.layers.map(|l| conv(l, k, self.n)),
        }
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

    /// Codon-per-coordinate DNA string, index 0 first.
    pub fn to_dna(&self) -> String {
        self.elements().map(|e| e.to_codon().to_string()).collect()
    }

    pub fn from_dna(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        if chars.is_empty() || !chars.len().is_multiple_of(2) {
            return Err(Error::Parse(format!(
                "DNA string must have positive even length, got {}",
                chars.len()
            )));
        }
        let elems = chars
            .chunks(2)
            .map(|pair| Codon::parse(&pair.iter().collect::<String>())?.to_element())
            .collect::<Result<Vec<_>>>()?;
        Self::from_elements(&elems)
    }

    /// `"g;p1;p2"` text of the u-adic parts.
    pub fn to_ring_poly_string(&self) -> String {
        let (a, b, c) = self.uadic();
        format!("{a};{b};{c}")
    }

    pub fn parse_ring_poly(n: usize, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "expected \"g;p1;p2\", got {s:?}"
            )));
        }
        Self::compose(n, parts[0].parse()?, parts[1].parse()?, parts[2].parse()?)
    }

    /// F2-linear order key: layer 0 is most significant.
    pub(crate) fn key(&self) -> (u64, u64, u64) {
        (self.layers[0], self.layers[1], self.layers[2])
    }

    /// Leading (most significant) set position as `(layer, bit)`.
    pub(crate) fn leading(&self) -> Option<(usize, usize)> {
        self.layers
            .iter()
            .enumerate()
            .find(|(_, &l)| l != 0)
            .map(|(i, &l)| (i, 63 - l.leading_zeros() as usize))
    }

    pub(crate) fn bit(&self, pos: (usize, usize)) -> bool {
        (self.layers[pos.0] >> pos.1) & 1 == 1
    }
}

impl std::ops::Add for RingWord {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "RingWord length mismatch");
        Self {
            n: self.n,
            layers: [
                self.layers[0] ^ rhs.layers[0],
                self.layers[1] ^ rhs.layers[1],
                self.layers[2] ^ rhs.layers[2],
            ],
        }
    }
}

impl std::ops::AddAssign for RingWord {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl PartialOrd for RingWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RingWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.key()).cmp(&(other.n, other.key()))
    }
}

impl fmt::Display for RingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.get(i).token())?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingWord[{self}]")
    }
}

impl FromStr for RingWord {
    type Err = Error;

    /// Comma-separated element tokens, index 0 first.
    fn from_str(s: &str) -> Result<Self> {
        let elems = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<RingElement>>>()?;
        Self::from_elements(&elems)
    }
}
