//! Command implementations behind the `dnacodes` binary.
//!
//! Each command returns plain data; the binary renders it and chooses the
//! exit code (0 ok, 1 check failed, 2 input error, 3 cap exceeded).

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::code::{cardinality_value, CodeSpec, CyclicCode, GeneratorSpec, Presentation, TheoremShape};
use crate::constraints::{
    check_rc_double, check_rc_single, check_reversible_double, check_reversible_single, CaseTag,
    Verdict,
};
use crate::dual::{DualReport, Flavor};
use crate::error::{Error, Result};
use crate::polyf2::{divisors_of_xn_minus_1, BinPoly};
use crate::polyr::RingWord;
use crate::ring::RingElement;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Reversible,
    Rc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Theorem,
    Oracle,
    #[default]
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WordFormat {
    #[default]
    Tokens,
    Dna,
}

/// Reads a spec given inline (`{...}`) or as a path to a JSON file.
pub fn load_spec(arg: &str) -> Result<CodeSpec> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?
    };
    CodeSpec::from_json(&text)
}

/// The worked example: `n = 8`, `f = (1+x^2+x^4+x^6) + u(x+x^5) + u^2(x^2+x^4)`.
pub fn example_spec() -> CodeSpec {
    let p = |s: &str| s.parse::<BinPoly>().expect("literal polynomial");
    CodeSpec {
        n: 8,
        generators: vec![GeneratorSpec {
            f2: p("x^6+x^4+x^2+1"),
            u: p("x^5+x"),
            u2: p("x^4+x^2"),
        }],
    }
}

/// The DNA strings of `{a f : a in R} ∪ {u^2 (x+1) f}` and all their cyclic
/// shifts, deduplicated and sorted.
pub fn table2() -> Vec<String> {
    let spec = example_spec();
    let f = spec.words().expect("example is valid")[0];
    let n = spec.n;
    let mut seeds: Vec<RingWord> = RingElement::ALL.iter().map(|&a| f.scale(a)).collect();
    seeds.push(f.mul_binary("x+1".parse().unwrap()).mul_u().mul_u());
    let set: BTreeSet<String> = seeds
        .iter()
        .flat_map(|w| (0..n).map(move |i| w.shift(i).to_dna()))
        .collect();
    set.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub mode: Mode,
    pub method: Method,
    pub theorem: Option<Verdict>,
    pub oracle: Option<bool>,
    pub agreement: Option<bool>,
    pub satisfied: bool,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn exit_code(&self) -> i32 {
        if self.satisfied && self.agreement != Some(false) {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        }
    }
}

/// Theorem verdict for a spec; inputs outside the theorem's reach come back as
/// `hypothesis_ok = false` rather than as errors.
pub fn theorem_verdict(spec: &CodeSpec, mode: Mode) -> Result<Verdict> {
    let n = spec.n;
    let Some(shape) = spec.theorem_shape() else {
        return Ok(Verdict::not_applicable(
            "generators are neither a single f nor a pair (f, u^2 a2)",
        ));
    };
    let r = match (shape, mode) {
        (TheoremShape::Single { g, p1, p2 }, Mode::Reversible) => check_reversible_single(n, g, p1, p2),
        (TheoremShape::Single { g, p1, p2 }, Mode::Rc) => check_rc_single(n, g, p1, p2),
        (TheoremShape::Double { g, p1, p2, a2 }, Mode::Reversible) => {
            check_reversible_double(n, g, p1, p2, a2)
        }
        (TheoremShape::Double { g, p1, p2, a2 }, Mode::Rc) => check_rc_double(n, g, p1, p2, a2),
    };
    match r {
        Ok(v) => Ok(v),
        Err(e @ (Error::OddLength(_) | Error::Hypothesis(_))) => Ok(Verdict::not_applicable(e.to_string())),
        Err(e) => Err(e),
    }
}

pub fn check(spec: &CodeSpec, mode: Mode, method: Method, cap: usize) -> Result<CheckReport> {
    let code = spec.build()?;
    let theorem = match method {
        Method::Oracle => None,
        _ => Some(theorem_verdict(spec, mode)?),
    };
    let oracle = match method {
        Method::Theorem => None,
        _ => Some(match mode {
            Mode::Reversible => code.is_reversible_with_cap(cap)?,
            Mode::Rc => code.is_rc_closed_with_cap(cap)?,
        }),
    };
    let mut notes = Vec::new();
    let (satisfied, agreement) = match (&theorem, oracle) {
        (Some(v), Some(o)) => {
            if v.satisfied != o {
                notes.push(format!(
                    "discrepancy: theorem says {}, exhaustive check says {}",
                    v.satisfied, o
                ));
            }
            (o, Some(v.satisfied == o))
        }
        (Some(v), None) => (v.satisfied, None),
        (None, Some(o)) => (o, None),
        (None, None) => unreachable!("method selects at least one check"),
    };
    Ok(CheckReport {
        mode,
        method,
        theorem,
        oracle,
        agreement,
        satisfied,
        notes,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchHit {
    pub n: usize,
    pub generators: Vec<GeneratorSpec>,
    #[serde(rename = "case")]
    pub case_tag: CaseTag,
    pub dim: usize,
    pub cardinality: serde_json::Value,
    pub min_distance: Option<u32>,
    pub oracle_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub n: usize,
    pub require: Mode,
    pub min_distance: u32,
    pub candidates: u64,
    pub certified: u64,
    pub hits: usize,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub hits: Vec<SearchHit>,
    pub summary: SearchSummary,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub n: usize,
    pub min_distance: u32,
    pub require: Mode,
    pub cap: usize,
    pub max_candidates: u64,
}

fn below(r: usize) -> impl Iterator<Item = BinPoly> {
    (0..(1u128 << r)).map(BinPoly::from_bits)
}

/// Theorem-certified codes `<g + u p1 + u^2 p2>` and `<g + u p1 + u^2 p2, u^2 a2>`
/// with `g | x^n + 1`, `deg p1, deg p2 < deg g`, `a2` a proper divisor of `g`.
/// Every hit is re-verified by the linear closure check.
pub fn search(opts: SearchOptions) -> Result<SearchResult> {
    let n = opts.n;
    if !n.is_multiple_of(2) {
        return Err(Error::OddLength(n));
    }
    let divisors = divisors_of_xn_minus_1(n)?;
    let xn = BinPoly::xn_plus_one(n);
    let mut seen: HashSet<Vec<RingWord>> = HashSet::new();
    let mut hits = Vec::new();
    let mut candidates = 0u64;
    let mut certified = 0u64;
    let mut truncated = false;

    let mut consider = |gens: Vec<RingWord>, verdict: Verdict| -> Result<bool> {
        candidates += 1;
        if candidates > opts.max_candidates {
            truncated = true;
            return Ok(false);
        }
        if !verdict.satisfied {
            return Ok(true);
        }
        certified += 1;
        let code = CyclicCode::build(n, &gens)?;
        if !seen.insert(code.basis().to_vec()) {
            return Ok(true);
        }
        if code.dim() > opts.cap {
            truncated = true;
            return Ok(true);
        }
        let d = code.min_hamming_distance_with_cap(opts.cap)?;
        if d.is_some_and(|d| d >= opts.min_distance) {
            let oracle_verified = match opts.require {
                Mode::Reversible => code.is_reversible_linear(),
                Mode::Rc => code.is_rc_closed_linear(),
            };
            hits.push(SearchHit {
                n,
                generators: gens.iter().map(GeneratorSpec::from_word).collect(),
                case_tag: verdict.case_tag,
                dim: code.dim(),
                cardinality: cardinality_value(code.dim()),
                min_distance: d,
                oracle_verified,
            });
        }
        Ok(true)
    };

    'outer: for &g in &divisors {
        if g == xn {
            continue;
        }
        let r = g.degree().expect("divisors are nonzero");
        let proper: Vec<BinPoly> = divisors
            .iter()
            .copied()
            .filter(|&a| a != g && a.divides(g).unwrap_or(false))
            .collect();
        for p1 in below(r) {
            for p2 in below(r) {
                let f = RingWord::from_ring_poly(n, g, p1, p2)?;
                let v = match opts.require {
                    Mode::Reversible => check_reversible_single(n, g, p1, p2)?,
                    Mode::Rc => check_rc_single(n, g, p1, p2)?,
                };
                if !consider(vec![f], v)? {
                    break 'outer;
                }
                for &a2 in &proper {
                    let v = match opts.require {
                        Mode::Reversible => check_reversible_double(n, g, p1, p2, a2)?,
                        Mode::Rc => check_rc_double(n, g, p1, p2, a2)?,
                    };
                    if !consider(vec![f, RingWord::u2_times(n, a2)?], v)? {
                        break 'outer;
                    }
                }
            }
        }
    }

    hits.sort_by(|a, b| {
        b.min_distance
            .cmp(&a.min_distance)
            .then(b.dim.cmp(&a.dim))
    });
    let summary = SearchSummary {
        n,
        require: opts.require,
        min_distance: opts.min_distance,
        candidates: candidates.min(opts.max_candidates),
        certified,
        hits: hits.len(),
        truncated,
    };
    Ok(SearchResult { hits, summary })
}

pub fn dual(spec: &CodeSpec, flavor: Flavor) -> Result<DualReport> {
    DualReport::new(&spec.build()?, flavor)
}

/// Minimum Hamming distance; `None` for the zero code.
pub fn distance(spec: &CodeSpec, cap: usize) -> Result<Option<u32>> {
    spec.build()?.min_hamming_distance_with_cap(cap)
}

/// Every codeword, in Gray-code order over the echelon basis.
pub fn enumerate(spec: &CodeSpec, format: WordFormat, cap: usize) -> Result<Vec<String>> {
    let code = spec.build()?;
    let words = code.codewords_with_cap(cap)?;
    Ok(words
        .map(|w| match format {
            WordFormat::Tokens => w.to_string(),
            WordFormat::Dna => w.to_dna(),
        })
        .collect())
}

pub fn canonical(spec: &CodeSpec) -> Result<Presentation> {
    let code = spec.build()?;
    if code.len() % 2 != 0 {
        return Err(Error::OddLength(code.len()));
    }
    code.canonical_presentation()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_DIM_CAP;

    #[test]
    fn table2_has_28_distinct_strings() {
        let t = table2();
        assert_eq!(t.len(), 28);
        assert!(t.iter().all(|s| s.len() == 16));
        assert!(t.contains(&"GCGCGCGCGCGCGCGC".to_string()));
    }

    #[test]
    fn example_check_agrees() {
        let r = check(&example_spec(), Mode::Rc, Method::Both, DEFAULT_DIM_CAP).unwrap();
        assert!(r.satisfied);
        assert_eq!(r.agreement, Some(true));
        assert_eq!(r.exit_code(), EXIT_OK);
        assert_eq!(r.theorem.as_ref().unwrap().case_tag, CaseTag::A);
    }

    #[test]
    fn odd_length_theorem_is_not_applicable() {
        let spec = CodeSpec::from_json(r#"{"n":7,"generators":[{"f2":"x+1"}]}"#).unwrap();
        let r = check(&spec, Mode::Reversible, Method::Theorem, DEFAULT_DIM_CAP).unwrap();
        let v = r.theorem.as_ref().unwrap();
        assert!(!v.hypothesis_ok);
        assert_eq!(r.exit_code(), EXIT_CHECK_FAILED);
    }

    #[test]
    fn cap_error_maps_to_exit_3() {
        let spec = CodeSpec::from_json(r#"{"n":16,"generators":[{"f2":"1"}]}"#).unwrap();
        let e = distance(&spec, 10).unwrap_err();
        assert_eq!(exit_code_for(&e), EXIT_CAP);
    }

    #[test]
    fn search_small_length() {
        let res = search(SearchOptions {
            n: 4,
            min_distance: 2,
            require: Mode::Rc,
            cap: DEFAULT_DIM_CAP,
            max_candidates: u64::MAX,
        })
        .unwrap();
        assert!(!res.summary.truncated);
        assert!(!res.hits.is_empty());
        for h in &res.hits {
            assert!(h.oracle_verified);
            assert!(h.min_distance.unwrap() >= 2);
        }
        for w in res.hits.windows(2) {
            assert!(w[0].min_distance >= w[1].min_distance);
        }
    }

    #[test]
    fn search_truncates() {
        let res = search(SearchOptions {
            n: 4,
            min_distance: 1,
            require: Mode::Reversible,
            cap: DEFAULT_DIM_CAP,
            max_candidates: 3,
        })
        .unwrap();
        assert!(res.summary.truncated);
        assert_eq!(res.summary.candidates, 3);
    }

    #[test]
    fn enumerate_counts() {
        let words = enumerate(&example_spec(), WordFormat::Dna, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(words.len(), 64);
        let set: HashSet<_> = words.iter().collect();
        assert_eq!(set.len(), 64);
    }

    #[test]
    fn inline_and_bad_specs() {
        assert!(load_spec(r#"{"n":2,"generators":[]}"#).is_ok());
        assert!(load_spec("/nonexistent/spec.json").is_err());
        assert!(load_spec(r#"{"n":2,"generators":[{"f2":"x^^"}]}"#).is_err());
    }
}
