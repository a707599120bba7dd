//! Euclidean and Hermitian duals.
//!
//! Writing `X = X0 + u X1 + u^2 X2` and `Y` likewise over their bit layers,
//! `<X, Y>_E = X0.Y0 + u (X0.Y1 + X1.Y0) + u^2 (X0.Y2 + X1.Y1 + X2.Y0)`, so
//! `X` is Euclidean-orthogonal to a code iff it is F2-orthogonal to the three
//! layer-shuffled images of each basis row. Because `bar(y) = y + u^2`, the
//! Hermitian product is `<X, Y>_E + u^2 wt2(X0)`, with `wt2` the parity; it is
//! affine in `Y`, and orthogonality to a code (which contains 0) adds the one
//! extra condition `wt2(X0) = 0`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{cardinality_value, CyclicCode, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, Echelon};
use crate::polyf2::BinPoly;
use crate::polyr::RingWord;
use crate::ring::RingElement;

/// Largest length accepted by [`dual_brute`].
pub const BRUTE_MAX_LEN: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    #[default]
    Euclidean,
    Hermitian,
}

impl std::str::FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "euclidean" | "e" => Ok(Flavor::Euclidean),
            "hermitian" | "h" => Ok(Flavor::Hermitian),
            _ => Err(Error::Parse(format!("unknown flavor {s:?}"))),
        }
    }
}

fn same_len(x: &RingWord, y: &RingWord) -> Result<()> {
    if x.len() == y.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        })
    }
}

/// `sum x_i y_i`, computed elementwise.
pub fn inner_euclidean(x: &RingWord, y: &RingWord) -> Result<RingElement> {
    same_len(x, y)?;
    Ok(x.elements().zip(y.elements()).map(|(a, b)| a * b).sum())
}

/// `sum x_i bar(y_i)` with `bar(a) = a + u^2`.
pub fn inner_hermitian(x: &RingWord, y: &RingWord) -> Result<RingElement> {
    same_len(x, y)?;
    Ok(x.elements()
        .zip(y.elements())
        .map(|(a, b)| a * b.complement())
        .sum())
}

pub fn inner(flavor: Flavor, x: &RingWord, y: &RingWord) -> Result<RingElement> {
    match flavor {
        Flavor::Euclidean => inner_euclidean(x, y),
        Flavor::Hermitian => inner_hermitian(x, y),
    }
}

/// The dual of `code` under `flavor`, via a nullspace computation.
pub fn dual_code(code: &CyclicCode, flavor: Flavor) -> CyclicCode {
    let n = code.len();
    let mut functionals = Vec::with_capacity(3 * code.dim() + 1);
    for b in code.basis() {
        let [b0, b1, b2] = b.layers();
        functionals.push(RingWord::from_layers_unchecked(n, [b0, 0, 0]));
        functionals.push(RingWord::from_layers_unchecked(n, [b1, b0, 0]));
        functionals.push(RingWord::from_layers_unchecked(n, [b2, b1, b0]));
    }
    if flavor == Flavor::Hermitian {
        let ones = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        functionals.push(RingWord::from_layers_unchecked(n, [ones, 0, 0]));
    }
    CyclicCode::from_echelon(n, nullspace(&functionals, n))
}

/// The dual by exhaustive search over all `8^n` words, testing each against
/// `{0} ∪ basis` with elementwise ring arithmetic. Only for `n <= 8`.
pub fn dual_brute(code: &CyclicCode, flavor: Flavor) -> Result<CyclicCode> {
    let n = code.len();
    if n > BRUTE_MAX_LEN {
        return Err(Error::CapExceeded {
            what: "length for brute-force dual",
            requested: n,
            cap: BRUTE_MAX_LEN,
        });
    }
    let mut tests: Vec<RingWord> = vec![RingWord::zero(n)];
    tests.extend_from_slice(code.basis());
    let total = 1u64 << (3 * n);
    let (span, count) = (0..total)
        .into_par_iter()
        .fold(
            || (Echelon::new(), 0u64),
            |(mut e, mut c), idx| {
                let mask = (1u64 << n) - 1;
                let x = RingWord::from_layers_unchecked(
                    n,
                    [idx & mask, (idx >> n) & mask, (idx >> (2 * n)) & mask],
                );
                let ok = tests
                    .iter()
                    .all(|y| inner(flavor, &x, y).map(|v| v.is_zero()).unwrap_or(false));
                if ok {
                    c += 1;
                    e.insert(x);
                }
                (e, c)
            },
        )
        .reduce(
            || (Echelon::new(), 0u64),
            |(mut a, ca), (b, cb)| {
                for r in b.rows() {
                    a.insert(*r);
                }
                (a, ca + cb)
            },
        );
    debug_assert_eq!(count, 1u64 << span.dim(), "orthogonal words form a subspace");
    if count != 1u64 << span.dim() {
        return Err(Error::Hypothesis("orthogonal words do not form a subspace".into()));
    }
    Ok(CyclicCode::from_echelon(n, span))
}

/// Reversibility of a code and of both its duals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEquivalence {
    pub code: bool,
    pub euclidean: bool,
    pub hermitian: bool,
}

impl DualEquivalence {
    pub fn holds(&self) -> bool {
        self.code == self.euclidean && self.euclidean == self.hermitian
    }
}

/// `C` reversible, `C^⊥` reversible, `C^⊥H` reversible: all three flags.
pub fn check_dual_reversibility_equivalence(code: &CyclicCode) -> DualEquivalence {
    DualEquivalence {
        code: code.is_reversible_linear(),
        euclidean: dual_code(code, Flavor::Euclidean).is_reversible_linear(),
        hermitian: dual_code(code, Flavor::Hermitian).is_reversible_linear(),
    }
}

/// Outcome of checking the divisibility relations between a three-generator
/// presentation and the presentation of its dual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityReport {
    pub hypotheses_met: bool,
    pub violations: Vec<String>,
    pub claims: [bool; 6],
    pub notes: Vec<String>,
}

/// `(x^n + 1) / a^*`, when `a` is a nonzero divisor of `x^n + 1`.
fn cofactor_of_reciprocal(a: BinPoly, n: usize) -> Option<BinPoly> {
    let (q, r) = BinPoly::xn_plus_one(n).divrem(a.reciprocal()).ok()?;
    r.is_zero().then_some(q)
}

fn divides(d: BinPoly, f: BinPoly) -> bool {
    d.divides(f).unwrap_or(false)
}

/// Checks, for `P = (g, p1, p2, a1, q, a2)` and the dual presentation
/// `Phat`, the six relations
/// `(x^n+1)/a2^* | ghat`, `(x^n+1)/a1^* | a1hat`, `(x^n+1)/g^* | a2hat`,
/// `(x^n+1)/g^* | qhat`, `(x^n+1)/a1^* | p1hat`, `(x^n+1)/g^* | p2hat`.
///
/// Hypotheses on `P`: three generators, `a2 | a1 | g | x^n + 1`, `a1 | p1`,
/// `a2 | p2`, `a2 | q`, `deg g > max(deg p1, deg p2)`, `deg a1 > deg q`.
/// Fields a one- or two-generator `Phat` lacks are taken to be zero.
pub fn verify_dual_divisibility(p: &Presentation, phat: &Presentation, n: usize) -> DivisibilityReport {
    let mut violations = Vec::new();
    let mut notes = Vec::new();
    let xn = BinPoly::xn_plus_one(n);
    if !n.is_multiple_of(2) {
        violations.push(format!("length {n} is odd"));
    }
    if p.case != 3 {
        violations.push(format!("presentation has {} generator(s), not 3", p.case));
    }
    let chain = [
        (p.a2, p.a1, "a2 | a1"),
        (p.a1, p.g, "a1 | g"),
        (p.g, xn, "g | x^n+1"),
        (p.a1, p.p1, "a1 | p1"),
        (p.a2, p.p2, "a2 | p2"),
        (p.a2, p.q, "a2 | q"),
    ];
    for (d, f, what) in chain {
        if !divides(d, f) {
            violations.push(format!("{what} fails"));
        }
    }
    let (r, s, t) = (p.g.degree(), p.p1.degree(), p.p2.degree());
    if !(r > s && r > t) {
        violations.push("deg g > max(deg p1, deg p2) fails".into());
    }
    if p.a1.degree() <= p.q.degree() {
        violations.push("deg a1 > deg q fails".into());
    }

    let mut ph = *phat;
    if phat.case < 3 {
        notes.push(format!(
            "dual presentation has {} generator(s); missing a1hat, qhat{} treated as 0",
            phat.case,
            if phat.case < 2 { ", a2hat" } else { "" }
        ));
        ph.a1 = BinPoly::ZERO;
        ph.q = BinPoly::ZERO;
        if phat.case < 2 {
            ph.a2 = BinPoly::ZERO;
        }
    }

    let d_a2 = cofactor_of_reciprocal(p.a2, n);
    let d_a1 = cofactor_of_reciprocal(p.a1, n);
    let d_g = cofactor_of_reciprocal(p.g, n);
    let claim = |d: Option<BinPoly>, f: BinPoly| d.is_some_and(|d| divides(d, f));
    let claims = [
        claim(d_a2, ph.g),
        claim(d_a1, ph.a1),
        claim(d_g, ph.a2),
        claim(d_g, ph.q),
        claim(d_a1, ph.p1),
        claim(d_g, ph.p2),
    ];
    DivisibilityReport {
        hypotheses_met: violations.is_empty(),
        violations,
        claims,
        notes,
    }
}

/// `{ "flavor", "dim", "cardinality", "divisibility_claims", ... }`.
///
/// The divisibility claims are evaluated for the Euclidean dual of an
/// even-length code; they are `null` otherwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DualReport {
    pub flavor: Flavor,
    pub n: usize,
    pub dim: usize,
    pub cardinality: serde_json::Value,
    pub divisibility_claims: Option<[bool; 6]>,
    pub hypotheses_met: Option<bool>,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
    pub presentation: Option<Presentation>,
}

impl DualReport {
    pub fn new(code: &CyclicCode, flavor: Flavor) -> Result<Self> {
        let n = code.len();
        let dual = dual_code(code, flavor);
        let mut report = Self {
            flavor,
            n,
            dim: dual.dim(),
            cardinality: cardinality_value(dual.dim()),
            divisibility_claims: None,
            hypotheses_met: None,
            violations: Vec::new(),
            notes: Vec::new(),
            presentation: None,
        };
        if n.is_multiple_of(2) {
            let phat = dual.canonical_presentation()?;
            report.presentation = Some(phat);
            if flavor == Flavor::Euclidean {
                let p = code.canonical_presentation()?;
                let d = verify_dual_divisibility(&p, &phat, n);
                report.divisibility_claims = Some(d.claims);
                report.hypotheses_met = Some(d.hypotheses_met);
                report.violations = d.violations;
                report.notes = d.notes;
            }
        }
        Ok(report)
    }

    /// The dual itself, for callers that want more than the summary.
    pub fn dual(code: &CyclicCode, flavor: Flavor) -> CyclicCode {
        dual_code(code, flavor)
    }
}
