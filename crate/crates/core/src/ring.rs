//! Arithmetic in the eight-element chain ring `R = F2 + uF2 + u^2F2`, `u^3 = 0`,
//! together with the Watson-Crick complement and the dinucleotide (codon) codec.
//!
//! An element `a0 + a1*u + a2*u^2` is packed into the low three bits of a byte:
//! bit 0 is `a0`, bit 1 is `a1`, bit 2 is `a2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElement(u8);

const fn mul_bits(a: u8, b: u8) -> u8 {
    let (a0, a1, a2) = (a & 1, (a >> 1) & 1, (a >> 2) & 1);
    let (b0, b1, b2) = (b & 1, (b >> 1) & 1, (b >> 2) & 1);
    let c0 = a0 & b0;
    let c1 = (a0 & b1) ^ (a1 & b0);
    let c2 = (a0 & b2) ^ (a1 & b1) ^ (a2 & b0);
    c0 | (c1 << 1) | (c2 << 2)
}

const fn build_mul_table() -> [[u8; 8]; 8] {
    let mut t = [[0u8; 8]; 8];
    let mut a = 0;
    while a < 8 {
        let mut b = 0;
        while b < 8 {
            t[a][b] = mul_bits(a as u8, b as u8);
            b += 1;
        }
        a += 1;
    }
    t
}

static MUL_TABLE: [[u8; 8]; 8] = build_mul_table();

// Textual tokens, indexed by the packed value.
const TOKENS: [&str; 8] = ["0", "1", "u", "1+u", "u2", "1+u2", "u+u2", "1+u+u2"];

impl RingElement {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);
    pub const U: Self = Self(2);
    pub const U2: Self = Self(4);

    /// All eight elements in packed order.
    pub const ALL: [Self; 8] = [
        Self(0),
        Self(1),
        Self(2),
        Self(3),
        Self(4),
        Self(5),
        Self(6),
        Self(7),
    ];

    pub const fn new(a0: bool, a1: bool, a2: bool) -> Self {
        Self((a0 as u8) | ((a1 as u8) << 1) | ((a2 as u8) << 2))
    }

    /// Builds an element from its packed form; bits above the third are ignored.
    pub const fn from_bits(bits: u8) -> Self {
        Self(bits & 7)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// Coefficient of `u^i`, `i` in `0..3`.
    pub const fn coeff(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Units are exactly the elements with nonzero constant term.
    pub const fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn inverse(self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        Self::ALL.into_iter().find(|&b| self * b == Self::ONE)
    }

    /// Watson-Crick complement lifted to the ring: `a + u^2`.
    pub const fn complement(self) -> Self {
        Self(self.0 ^ 4)
    }

    pub fn token(self) -> &'static str {
        TOKENS[self.0 as usize]
    }

    pub fn to_codon(self) -> Codon {
        use Nucleotide::*;
        let (a, b) = match self.0 {
            0 => (G, C),
            1 => (A, T),
            2 => (G, T),
            3 => (T, G),
            4 => (C, G),
            5 => (T, A),
            6 => (C, A),
            _ => (A, C),
        };
        Codon(a, b)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Add for RingElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl std::ops::AddAssign for RingElement {
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl std::ops::Mul for RingElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(MUL_TABLE[self.0 as usize][rhs.0 as usize])
    }
}

impl std::iter::Sum for RingElement {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({})", self.token())
    }
}

impl FromStr for RingElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        TOKENS
            .iter()
            .position(|&tok| tok == t)
            .map(|i| Self(i as u8))
            .ok_or_else(|| Error::Parse(format!("unknown ring element token {t:?}")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Nucleotide {
    A,
    C,
    G,
    T,
}

impl Nucleotide {
    pub const fn complement(self) -> Self {
        match self {
            Nucleotide::A => Nucleotide::T,
            Nucleotide::T => Nucleotide::A,
            Nucleotide::C => Nucleotide::G,
            Nucleotide::G => Nucleotide::C,
        }
    }

    pub const fn as_char(self) -> char {
        match self {
            Nucleotide::A => 'A',
            Nucleotide::C => 'C',
            Nucleotide::G => 'G',
            Nucleotide::T => 'T',
        }
    }

    /// Accepts either case.
    pub fn from_char(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'A' => Ok(Nucleotide::A),
            'C' => Ok(Nucleotide::C),
            'G' => Ok(Nucleotide::G),
            'T' => Ok(Nucleotide::T),
            _ => Err(Error::InvalidNucleotide(c)),
        }
    }
}

/// An ordered pair of nucleotides.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Codon(pub Nucleotide, pub Nucleotide);

impl Codon {
    pub fn parse(s: &str) -> Result<Self> {
        let mut it = s.chars();
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => {
                Ok(Codon(Nucleotide::from_char(a)?, Nucleotide::from_char(b)?))
            }
            _ => Err(Error::Parse(format!("codon must be two nucleotides, got {s:?}"))),
        }
    }

    /// Nucleotide-wise Watson-Crick complement (no reversal).
    pub const fn complement(self) -> Self {
        Codon(self.0.complement(), self.1.complement())
    }

    /// Decodes to a ring element. Eight of the sixteen pairs carry no element.
    pub fn to_element(self) -> Result<RingElement> {
        RingElement::ALL
            .into_iter()
            .find(|e| e.to_codon() == self)
            .ok_or(Error::UnmappedCodon(self.to_string()))
    }
}

impl fmt::Display for Codon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0.as_char(), self.1.as_char())
    }
}
