//! Binary polynomials.
//!
//! A [`BinPoly`] stores coefficients as bits of a `u128` (bit `i` is the
//! coefficient of `x^i`), so degrees up to 127 are representable. Words never
//! exceed length 64, which keeps every product of two reduced polynomials in range.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default bound on `n` for [`divisors_of_xn_minus_1`].
pub const DEFAULT_DIVISOR_CAP: usize = 32;

pub const MAX_DEGREE: usize = 127;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BinPoly(u128);

impl BinPoly {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);
    pub const X: Self = Self(2);

    pub const fn from_bits(bits: u128) -> Self {
        Self(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        assert!(k <= MAX_DEGREE, "monomial degree {k} out of range");
        Self(1u128 << k)
    }

    /// `x^n + 1`, which equals `x^n - 1` over F2.
    pub fn xn_plus_one(n: usize) -> Self {
        Self::monomial(n) + Self::ONE
    }

    /// Degree, with `None` standing for the `-inf` degree of the zero polynomial.
    /// `Option` orders `None` below every `Some`, which is the comparison the
    /// theorem checkers rely on.
    pub const fn degree(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn coeff(self, i: usize) -> bool {
        i <= MAX_DEGREE && (self.0 >> i) & 1 == 1
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Multiplication by `x^k`. Panics if the result would exceed degree 127.
    #[allow(clippy::should_implement_trait)]
    pub fn shl(self, k: usize) -> Self {
        if self.is_zero() {
            return self;
        }
        let d = self.degree().unwrap();
        assert!(d + k <= MAX_DEGREE, "x^{k} * (degree {d}) overflows BinPoly");
        Self(self.0 << k)
    }

    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        match (self.degree(), rhs.degree()) {
            (Some(a), Some(b)) if a + b > MAX_DEGREE => None,
            (None, _) | (_, None) => Some(Self::ZERO),
            _ => {
                let mut acc = 0u128;
                let mut b = rhs.0;
                let mut a = self.0;
                while b != 0 {
                    if b & 1 == 1 {
                        acc ^= a;
                    }
                    a <<= 1;
                    b >>= 1;
                }
                Some(Self(acc))
            }
        }
    }

    /// Quotient and remainder: `self = q * d + r` with `deg r < deg d`.
    pub fn divrem(self, d: Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let mut q = 0u128;
        let mut r = self.0;
        while let Some(dr) = Self(r).degree() {
            if dr < dd {
                break;
            }
            let k = dr - dd;
            q |= 1 << k;
            r ^= d.0 << k;
        }
        Ok((Self(q), Self(r)))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn rem(self, d: Self) -> Result<Self> {
        Ok(self.divrem(d)?.1)
    }

    /// Whether `self` divides `f`. Every nonzero polynomial divides 0.
    pub fn divides(self, f: Self) -> Result<bool> {
        Ok(f.rem(self)?.is_zero())
    }

    pub fn gcd(self, other: Self) -> Self {
        let (mut a, mut b) = (self, other);
        while !b.is_zero() {
            let r = a.rem(b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a
    }

    /// `x^r f(1/x)` with `r = deg f`: coefficient reversal over `[0, deg f]`.
    pub fn reciprocal(self) -> Self {
        match self.degree() {
            None => self,
            Some(d) => Self(self.0.reverse_bits() >> (MAX_DEGREE - d)),
        }
    }

    pub fn is_self_reciprocal(self) -> bool {
        self.reciprocal() == self
    }

    /// Reduction modulo `x^n + 1`, folding high coefficients back cyclically.
    pub fn reduce_cyclic(self, n: usize) -> Self {
        assert!(n >= 1);
        let mask = if n >= 128 { u128::MAX } else { (1u128 << n) - 1 };
        let mut v = self.0;
        let mut out = 0u128;
        while v != 0 {
            out ^= v & mask;
            v = if n >= 128 { 0 } else { v >> n };
        }
        Self(out)
    }

    /// Product in `F2[x]/(x^n + 1)` of two polynomials of degree below `n`.
    pub fn mul_cyclic(self, rhs: Self, n: usize) -> Self {
        let a = self.reduce_cyclic(n);
        let b = rhs.reduce_cyclic(n);
        (a * b).reduce_cyclic(n)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Add for BinPoly {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl std::ops::AddAssign for BinPoly {
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl std::ops::Mul for BinPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs)
            .expect("BinPoly product exceeds degree 127")
    }
}

impl fmt::Display for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for i in (0..=d).rev() {
            if !self.coeff(i) {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({self})")
    }
}

impl FromStr for BinPoly {
    type Err = Error;

    /// Parses `"x^6+x^4+x^2+1"`-style text. Repeated monomials cancel in pairs.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s == "0" {
            return Ok(Self::ZERO);
        }
        let mut acc = Self::ZERO;
        for term in s.split('+') {
            let k = match term {
                "1" => 0,
                "x" => 1,
                t => match t.strip_prefix("x^") {
                    Some(e) => e
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))?,
                    None => return Err(Error::Parse(format!("bad monomial {t:?}"))),
                },
            };
            if k > MAX_DEGREE {
                return Err(Error::DegreeTooLarge {
                    degree: k,
                    bound: MAX_DEGREE + 1,
                });
            }
            acc += Self::monomial(k);
        }
        Ok(acc)
    }
}

impl Serialize for BinPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Irreducible factorisation of `x^n + 1` as `(factor, multiplicity)` pairs,
/// by trial division in increasing degree.
pub fn factor_xn_minus_1(n: usize) -> Result<Vec<(BinPoly, usize)>> {
    factor_xn_minus_1_with_cap(n, DEFAULT_DIVISOR_CAP)
}

pub fn factor_xn_minus_1_with_cap(n: usize, cap: usize) -> Result<Vec<(BinPoly, usize)>> {
    if n == 0 {
        return Err(Error::UnsupportedLength(0));
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "divisor enumeration length",
            requested: n,
            cap,
        });
    }
    let mut rest = BinPoly::xn_plus_one(n);
    let mut factors = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap() >= 2 * d {
        // Candidates of degree d; a minimal-degree divisor of what is left is irreducible.
        for low in 0..(1u128 << d) {
            let p = BinPoly::from_bits((1u128 << d) | low);
            let mut mult = 0;
            while let Ok((q, r)) = rest.divrem(p) {
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                factors.push((p, mult));
            }
        }
        d += 1;
    }
    if rest.degree().unwrap() >= 1 {
        match factors.iter_mut().find(|(p, _)| *p == rest) {
            Some((_, m)) => *m += 1,
            None => factors.push((rest, 1)),
        }
    }
    Ok(factors)
}

/// Every monic divisor of `x^n + 1`, sorted by degree then coefficient bits.
pub fn divisors_of_xn_minus_1(n: usize) -> Result<Vec<BinPoly>> {
    divisors_of_xn_minus_1_with_cap(n, DEFAULT_DIVISOR_CAP)
}

pub fn divisors_of_xn_minus_1_with_cap(n: usize, cap: usize) -> Result<Vec<BinPoly>> {
    let factors = factor_xn_minus_1_with_cap(n, cap)?;
    let mut out = vec![BinPoly::ONE];
    for (p, m) in factors {
        let mut next = Vec::with_capacity(out.len() * (m + 1));
        for d in &out {
            let mut acc = *d;
            next.push(acc);
            for _ in 0..m {
                acc = acc * p;
                next.push(acc);
            }
        }
        out = next;
    }
    out.sort_by_key(|p| (p.degree(), p.bits()));
    out.dedup();
    Ok(out)
}
