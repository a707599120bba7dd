//! Symbolic checkers for the reverse and reverse-complement constraints on
//! codes `<g + u p1 + u^2 p2>` and `<g + u p1 + u^2 p2, u^2 a2>` of even length.
//!
//! Each checker transcribes the theorem conditions literally and evaluates the
//! polynomial identities exactly over F2. A satisfied verdict certifies the
//! property. The converse does not hold in general: modulo `x^n - 1` a code can
//! be reversible through a multiplier the case analysis does not cover (for
//! instance `f = (1 + u) + x` at `n = 2`, where `f^* = x f`), so an unsatisfied
//! verdict is "not certified", not "refuted". [`single_generator_structure_ok`]
//! recognises the presentations produced by the structure theorem, on which the
//! case analysis is complete.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::CyclicCode;
use crate::error::{Error, Result};
use crate::polyf2::BinPoly;
use crate::polyr::{check_len, RingWord};
use crate::ring::RingElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseTag {
    A,
    B,
    C,
    D,
    #[serde(rename = "NONE")]
    None,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::A => "A",
            CaseTag::B => "B",
            CaseTag::C => "C",
            CaseTag::D => "D",
            CaseTag::None => "NONE",
        };
        f.write_str(s)
    }
}

/// `{ "satisfied", "case", "hypothesis_ok", "notes" }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub satisfied: bool,
    #[serde(rename = "case")]
    pub case_tag: CaseTag,
    pub hypothesis_ok: bool,
    pub notes: String,
}

impl Verdict {
    fn hypothesis_failed(notes: Vec<String>) -> Self {
        Self {
            satisfied: false,
            case_tag: CaseTag::None,
            hypothesis_ok: false,
            notes: notes.join("; "),
        }
    }

    /// Verdict for inputs the theorem does not speak about at all.
    pub fn not_applicable(reason: impl Into<String>) -> Self {
        Self::hypothesis_failed(vec![reason.into()])
    }
}

/// `x^{r-d} f^*` with `d = deg f`; zero for `f = 0`.
fn shifted_reciprocal(f: BinPoly, r: usize) -> BinPoly {
    match f.degree() {
        None => BinPoly::ZERO,
        Some(d) => f.reciprocal().shl(r - d),
    }
}

fn check_even(n: usize) -> Result<()> {
    check_len(n)?;
    if n.is_multiple_of(2) {
        Ok(())
    } else {
        Err(Error::OddLength(n))
    }
}

/// Degree hypothesis `r > max{s, t}`; returns `r` or the reasons it fails.
fn degree_hypothesis(g: BinPoly, p1: BinPoly, p2: BinPoly) -> std::result::Result<usize, Vec<String>> {
    let r = g.degree().expect("g checked nonzero");
    let (s, t) = (p1.degree(), p2.degree());
    let mut notes = Vec::new();
    if s >= Some(r) {
        notes.push(format!("deg p1 = {} is not below deg g = {r}", s.unwrap()));
    } else if t >= Some(r) {
        notes.push(format!(
            "r > s holds but deg p2 = {} is not below deg g = {r}; the three-part reciprocal expansion needs r > max(s, t)",
            t.unwrap()
        ));
    }
    if notes.is_empty() {
        Ok(r)
    } else {
        Err(notes)
    }
}

/// Reversibility of `<g + u p1 + u^2 p2>`: `g` self-reciprocal, and one of
/// (a) `x^{r-s}p1^* = p1`, `x^{r-t}p2^* = p2`;
/// (b) `x^{r-s}p1^* = g + p1`, `x^{r-t}p2^* = p1 + p2`;
/// (c) `x^{r-s}p1^* = p1`, `x^{r-t}p2^* = g + p2`;
/// (d) `x^{r-s}p1^* = g + p1`, `x^{r-t}p2^* = g + p1 + p2`.
/// The first matching case in that order is reported.
pub fn check_reversible_single(n: usize, g: BinPoly, p1: BinPoly, p2: BinPoly) -> Result<Verdict> {
    check_even(n)?;
    if g.is_zero() {
        return Err(Error::Hypothesis("g must be nonzero".into()));
    }
    let mut notes = Vec::new();
    if !g.divides(BinPoly::xn_plus_one(n))? {
        notes.push(format!("g = {g} does not divide x^{n}+1"));
    }
    let r = match degree_hypothesis(g, p1, p2) {
        Ok(r) if notes.is_empty() => r,
        Ok(_) => return Ok(Verdict::hypothesis_failed(notes)),
        Err(mut more) => {
            notes.append(&mut more);
            return Ok(Verdict::hypothesis_failed(notes));
        }
    };
    if !g.is_self_reciprocal() {
        return Ok(Verdict {
            satisfied: false,
            case_tag: CaseTag::None,
            hypothesis_ok: true,
            notes: "g not self-reciprocal".into(),
        });
    }
    let lhs1 = shifted_reciprocal(p1, r);
    let lhs2 = shifted_reciprocal(p2, r);
    let cases = [
        (CaseTag::A, lhs1 == p1 && lhs2 == p2),
        (CaseTag::B, lhs1 == g + p1 && lhs2 == p1 + p2),
        (CaseTag::C, lhs1 == p1 && lhs2 == g + p2),
        (CaseTag::D, lhs1 == g + p1 && lhs2 == g + p1 + p2),
    ];
    Ok(match cases.iter().find(|(_, ok)| *ok) {
        Some(&(tag, _)) => Verdict {
            satisfied: true,
            case_tag: tag,
            hypothesis_ok: true,
            notes: String::new(),
        },
        None => Verdict {
            satisfied: false,
            case_tag: CaseTag::None,
            hypothesis_ok: true,
            notes: format!(
                "no case identity holds: x^(r-s)p1* = {lhs1}, x^(r-t)p2* = {lhs2}"
            ),
        },
    })
}

/// Reversibility of `<g + u p1 + u^2 p2, u^2 a2>` with `a2 | g | x^n + 1`:
/// `g` and `a2` self-reciprocal, and
/// (a) `x^{r-s}p1^* = p1` and `a2 | x^{r-t}p2^* + p2`, or
/// (b) `x^{r-s}p1^* = g + p1` and `a2 | x^{r-t}p2^* + p1 + p2`.
pub fn check_reversible_double(
    n: usize,
    g: BinPoly,
    p1: BinPoly,
    p2: BinPoly,
    a2: BinPoly,
) -> Result<Verdict> {
    check_even(n)?;
    if g.is_zero() {
        return Err(Error::Hypothesis("g must be nonzero".into()));
    }
    if a2.is_zero() || !a2.divides(g)? {
        return Err(Error::Hypothesis(format!("a2 = {a2} does not divide g = {g}")));
    }
    if !g.divides(BinPoly::xn_plus_one(n))? {
        return Err(Error::Hypothesis(format!("g = {g} does not divide x^{n}+1")));
    }
    let r = match degree_hypothesis(g, p1, p2) {
        Ok(r) => r,
        Err(notes) => return Ok(Verdict::hypothesis_failed(notes)),
    };
    let mut failed = Vec::new();
    if !g.is_self_reciprocal() {
        failed.push("g not self-reciprocal");
    }
    if !a2.is_self_reciprocal() {
        failed.push("a2 not self-reciprocal");
    }
    if !failed.is_empty() {
        return Ok(Verdict {
            satisfied: false,
            case_tag: CaseTag::None,
            hypothesis_ok: true,
            notes: failed.join("; "),
        });
    }
    let lhs1 = shifted_reciprocal(p1, r);
    let lhs2 = shifted_reciprocal(p2, r);
    let case_a = lhs1 == p1 && a2.divides(lhs2 + p2)?;
    let case_b = lhs1 == g + p1 && a2.divides(lhs2 + p1 + p2)?;
    let tag = if case_a {
        CaseTag::A
    } else if case_b {
        CaseTag::B
    } else {
        CaseTag::None
    };
    Ok(Verdict {
        satisfied: tag != CaseTag::None,
        case_tag: tag,
        hypothesis_ok: true,
        notes: if tag == CaseTag::None {
            format!("no case holds: x^(r-s)p1* = {lhs1}, x^(r-t)p2* = {lhs2}")
        } else {
            String::new()
        },
    })
}

fn with_membership(mut v: Verdict, code: &CyclicCode) -> Result<Verdict> {
    let member = code.contains(&RingWord::u2_iota(code.len()))?;
    let mut notes: Vec<String> = Some(v.notes.clone()).into_iter().filter(|s| !s.is_empty()).collect();
    if !member {
        notes.push("u^2 I(x) is not in C".into());
    } else if !v.satisfied && v.hypothesis_ok {
        notes.push("u^2 I(x) is in C but the reversibility conditions fail".into());
    }
    v.satisfied = v.satisfied && member;
    v.notes = notes.join("; ");
    Ok(v)
}

/// Reverse-complement closure of `<g + u p1 + u^2 p2>`: `u^2 I(x) in C` and the
/// single-generator reversibility conditions.
pub fn check_rc_single(n: usize, g: BinPoly, p1: BinPoly, p2: BinPoly) -> Result<Verdict> {
    let v = check_reversible_single(n, g, p1, p2)?;
    let code = CyclicCode::build(n, &[RingWord::from_ring_poly(n, g, p1, p2)?])?;
    with_membership(v, &code)
}

/// Reverse-complement closure of `<g + u p1 + u^2 p2, u^2 a2>`.
pub fn check_rc_double(
    n: usize,
    g: BinPoly,
    p1: BinPoly,
    p2: BinPoly,
    a2: BinPoly,
) -> Result<Verdict> {
    let v = check_reversible_double(n, g, p1, p2, a2)?;
    let code = CyclicCode::build(
        n,
        &[
            RingWord::from_ring_poly(n, g, p1, p2)?,
            RingWord::u2_times(n, a2)?,
        ],
    )?;
    with_membership(v, &code)
}

/// Whether monic `f` divides `x^n - 1` in `R[x]` (plain polynomials, no quotient).
/// With `modulo_u2` the test happens in `(F2 + uF2)[x]`, i.e. the `u^2` layer is dropped.
fn monic_divides_xn_minus_1(n: usize, f: &[RingElement], modulo_u2: bool) -> bool {
    let df = f.len() - 1;
    debug_assert_eq!(f[df], RingElement::ONE);
    if df > n {
        return false;
    }
    let mut rem = vec![RingElement::ZERO; n + 1];
    rem[0] = RingElement::ONE;
    rem[n] = RingElement::ONE;
    for k in (0..=n - df).rev() {
        let c = rem[k + df];
        if !c.is_zero() {
            for (i, &fi) in f.iter().enumerate() {
                rem[k + i] += c * fi;
            }
        }
    }
    rem.iter().all(|e| {
        if modulo_u2 {
            e.bits() & 3 == 0
        } else {
            e.is_zero()
        }
    })
}

/// The conditions the structure theorem places on a single-generator
/// presentation: `g | x^n - 1`, `(g + u p1) | x^n - 1` over `F2 + uF2`,
/// `(g + u p1 + u^2 p2) | x^n - 1` over `R`, and `deg p2 < deg p1`.
pub fn single_generator_structure_ok(n: usize, g: BinPoly, p1: BinPoly, p2: BinPoly) -> bool {
    let Some(r) = g.degree() else {
        return false;
    };
    if p1.degree() >= Some(r) || p2.degree() >= Some(r) || p2.degree() >= p1.degree() {
        return false;
    }
    if !g.divides(BinPoly::xn_plus_one(n)).unwrap_or(false) {
        return false;
    }
    let coeffs: Vec<RingElement> = (0..=r)
        .map(|i| RingElement::new(g.coeff(i), p1.coeff(i), p2.coeff(i)))
        .collect();
    monic_divides_xn_minus_1(n, &coeffs, true) && monic_divides_xn_minus_1(n, &coeffs, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    fn example() -> (BinPoly, BinPoly, BinPoly) {
        (p("x^6+x^4+x^2+1"), p("x^5+x"), p("x^4+x^2"))
    }

    #[test]
    fn example_is_case_a() {
        let (g, p1, p2) = example();
        let v = check_reversible_single(8, g, p1, p2).unwrap();
        assert!(v.satisfied && v.hypothesis_ok);
        assert_eq!(v.case_tag, CaseTag::A);
        let rc = check_rc_single(8, g, p1, p2).unwrap();
        assert!(rc.satisfied);
        assert_eq!(rc.case_tag, CaseTag::A);
    }

    #[test]
    fn broken_p2_identity() {
        let (g, p1, _) = example();
        let v = check_reversible_single(8, g, p1, p("x^4+x^2+1")).unwrap();
        assert!(!v.satisfied && v.hypothesis_ok);
        assert_eq!(v.case_tag, CaseTag::None);
    }

    #[test]
    fn non_self_reciprocal_g() {
        // x^3+x+1 divides x^7+1; use n = 14 to keep the length even.
        let g = p("x^3+x+1");
        let v = check_reversible_single(14, g, BinPoly::ZERO, BinPoly::ZERO).unwrap();
        assert!(!v.satisfied);
        assert_eq!(v.notes, "g not self-reciprocal");
        let oracle = CyclicCode::build(14, &[RingWord::from_ring_poly(14, g, BinPoly::ZERO, BinPoly::ZERO).unwrap()])
            .unwrap()
            .is_reversible_linear();
        assert!(!oracle);
    }

    #[test]
    fn errors_and_hypotheses() {
        let (g, p1, p2) = example();
        assert_eq!(check_reversible_single(7, g, p1, p2), Err(Error::OddLength(7)));
        assert!(check_reversible_single(8, BinPoly::ZERO, p1, p2).is_err());
        // s < r <= t
        let v = check_reversible_single(8, p("x^2+1"), p("x"), p("x^3")).unwrap();
        assert!(!v.hypothesis_ok && !v.satisfied);
        assert!(v.notes.contains("r > s holds"));
        // r <= s
        let v = check_reversible_single(8, p("x+1"), p("x^3"), BinPoly::ZERO).unwrap();
        assert!(!v.hypothesis_ok);
        // g not dividing x^n+1
        let v = check_reversible_single(8, p("x^2+x+1"), BinPoly::ZERO, BinPoly::ZERO).unwrap();
        assert!(!v.hypothesis_ok);
    }

    #[test]
    fn zero_parts_degenerate_gracefully() {
        let g = p("x^6+x^4+x^2+1");
        let v = check_reversible_single(8, g, BinPoly::ZERO, BinPoly::ZERO).unwrap();
        assert_eq!(v.case_tag, CaseTag::A);
    }

    #[test]
    fn double_examples() {
        let (g, p1, p2) = example();
        let v = check_reversible_double(8, g, p1, p2, p("x^2+1")).unwrap();
        assert!(v.satisfied);
        assert_eq!(v.case_tag, CaseTag::A);

        let a2 = p("x^3+x^2+x+1");
        assert!(a2.is_self_reciprocal());
        let v = check_reversible_double(8, g, p1, p2, a2).unwrap();
        // Case A residue x^{r-t}p2^* + p2 is 0, divisible by anything.
        assert!(v.satisfied);

        assert!(matches!(
            check_reversible_double(8, g, p1, p2, p("x^2+x+1")),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            check_reversible_double(7, g, p1, p2, p("x+1")),
            Err(Error::OddLength(7))
        ));
    }

    #[test]
    fn rc_needs_u2_iota() {
        // g = x^8+1 reduces to the zero code: reversible, never rc-closed.
        let g = BinPoly::xn_plus_one(8);
        let v = check_rc_single(8, g, BinPoly::ZERO, BinPoly::ZERO).unwrap();
        assert!(!v.satisfied);
        assert!(v.notes.contains("u^2 I(x) is not in C"));

        // g = x^4+1 at n = 8: I(x) = (x+1)^7 is not a multiple of u^2-layer generators below.
        let g = p("x^7+x^6+x^5+x^4+x^3+x^2+x+1");
        let v = check_rc_single(8, g, BinPoly::ZERO, BinPoly::ZERO).unwrap();
        let code = CyclicCode::build(8, &[RingWord::from_ring_poly(8, g, BinPoly::ZERO, BinPoly::ZERO).unwrap()]).unwrap();
        assert_eq!(v.satisfied, code.is_rc_closed().unwrap());
    }

    #[test]
    fn theorem_is_sound_on_small_lengths() {
        for n in [2usize, 4, 6] {
            for g in crate::polyf2::divisors_of_xn_minus_1(n).unwrap() {
                let Some(r) = g.degree() else { continue };
                if r == 0 || r >= n {
                    continue;
                }
                for b1 in 0..(1u128 << r) {
                    for b2 in 0..(1u128 << r) {
                        let (p1, p2) = (BinPoly::from_bits(b1), BinPoly::from_bits(b2));
                        let v = check_reversible_single(n, g, p1, p2).unwrap();
                        let f = RingWord::from_ring_poly(n, g, p1, p2).unwrap();
                        let oracle = CyclicCode::build(n, &[f]).unwrap().is_reversible().unwrap();
                        if v.satisfied {
                            assert!(oracle, "n={n} g={g} p1={p1} p2={p2}");
                        }
                        if single_generator_structure_ok(n, g, p1, p2) {
                            assert_eq!(v.satisfied, oracle, "n={n} g={g} p1={p1} p2={p2}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn incompleteness_witness() {
        // f = (1+u) + x at n = 2 is reversible (f^* = x f) yet matches no case.
        let (g, p1, p2) = (p("x+1"), BinPoly::ONE, BinPoly::ZERO);
        let v = check_reversible_single(2, g, p1, p2).unwrap();
        assert!(v.hypothesis_ok && !v.satisfied);
        let f = RingWord::from_ring_poly(2, g, p1, p2).unwrap();
        assert_eq!(f.reciprocal(), f.shift(1));
        assert!(CyclicCode::build(2, &[f]).unwrap().is_reversible().unwrap());
    }

    #[test]
    fn structure_conditions() {
        let (g, p1, p2) = example();
        assert!(single_generator_structure_ok(8, g, p1, p2));
        assert!(!single_generator_structure_ok(8, g, p2, p1));
        assert!(!single_generator_structure_ok(8, p("x^2+x+1"), BinPoly::ONE, BinPoly::ZERO));
    }
}
