//! F2 linear algebra on the `3n`-bit layer space of [`RingWord`]s.
//!
//! Bases are kept in reduced row echelon form, sorted by leading position in
//! descending order, with layer 0 the most significant block. A consequence
//! used throughout: the rows whose leading bit sits in layer `i` span exactly
//! the codewords that vanish on layers `< i`.

use crate::polyr::RingWord;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Echelon {
    rows: Vec<RingWord>,
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Self { rows: Vec::new() }
    }

    pub(crate) fn rows(&self) -> &[RingWord] {
        &self.rows
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn reduce(&self, mut v: RingWord) -> RingWord {
        for r in &self.rows {
            let lead = r.leading().expect("echelon rows are nonzero");
            if v.bit(lead) {
                v += *r;
            }
        }
        v
    }

    pub(crate) fn contains(&self, v: &RingWord) -> bool {
        self.reduce(*v).is_zero()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub(crate) fn insert(&mut self, v: RingWord) -> bool {
        let v = self.reduce(v);
        let Some(lead) = v.leading() else {
            return false;
        };
        for r in self.rows.iter_mut() {
            if r.bit(lead) {
                *r += v;
            }
        }
        let at = self
            .rows
            .iter()
            .position(|r| r.key() < v.key())
            .unwrap_or(self.rows.len());
        self.rows.insert(at, v);
        true
    }

    pub(crate) fn from_vectors<I: IntoIterator<Item = RingWord>>(vs: I) -> Self {
        let mut e = Self::new();
        for v in vs {
            e.insert(v);
        }
        e
    }

    /// Rows whose leading bit lies in `layer`.
    pub(crate) fn rows_led_by(&self, layer: usize) -> impl Iterator<Item = &RingWord> {
        self.rows
            .iter()
            .filter(move |r| r.leading().map(|(l, _)| l) == Some(layer))
    }

    /// Some row combination whose `layer` part equals `target` and whose lower
    /// layers vanish, if one exists.
    pub(crate) fn solve_layer(&self, layer: usize, target: u64, n: usize) -> Option<RingWord> {
        let mut acc = RingWord::zero(n);
        let mut t = target;
        for r in self.rows_led_by(layer) {
            let (_, b) = r.leading().unwrap();
            if (t >> b) & 1 == 1 {
                acc += *r;
                t ^= r.layer(layer);
            }
        }
        (t == 0).then_some(acc)
    }
}

/// Standard F2 dot product on the layer space.
#[cfg(test)]
pub(crate) fn dot(a: &RingWord, b: &RingWord) -> bool {
    let (x, y) = (a.layers(), b.layers());
    ((x[0] & y[0]) ^ (x[1] & y[1]) ^ (x[2] & y[2])).count_ones() & 1 == 1
}

/// All `v` in F2^{3n} with `dot(v, r) = 0` for every row `r`.
pub(crate) fn nullspace(rows: &[RingWord], n: usize) -> Echelon {
    let e = Echelon::from_vectors(rows.iter().copied());
    let pivots: Vec<(usize, usize)> = e.rows().iter().map(|r| r.leading().unwrap()).collect();
    let mut out = Echelon::new();
    for layer in 0..3 {
        for bit in 0..n {
            let pos = (layer, bit);
            if pivots.contains(&pos) {
                continue;
            }
            let mut layers = [0u64; 3];
            layers[layer] |= 1 << bit;
            for (r, p) in e.rows().iter().zip(&pivots) {
                if r.bit(pos) {
                    layers[p.0] |= 1 << p.1;
                }
            }
            out.insert(RingWord::from_layers_unchecked(n, layers));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rw(n: usize, l: [u64; 3]) -> RingWord {
        RingWord::from_layers(n, l).unwrap()
    }

    #[test]
    fn insert_and_reduce() {
        let mut e = Echelon::new();
        assert!(e.insert(rw(3, [0b011, 0, 0])));
        assert!(e.insert(rw(3, [0b001, 0b100, 0])));
        assert!(!e.insert(rw(3, [0b010, 0b100, 0])));
        assert_eq!(e.dim(), 2);
        assert!(e.contains(&rw(3, [0b010, 0b100, 0])));
        assert!(!e.contains(&rw(3, [0, 0, 1])));
        // Reduced: each pivot column appears in one row only.
        for (i, r) in e.rows().iter().enumerate() {
            let p = r.leading().unwrap();
            for (j, s) in e.rows().iter().enumerate() {
                assert_eq!(s.bit(p), i == j);
            }
        }
    }

    #[test]
    fn nullspace_is_orthogonal_complement() {
        let rows = [rw(4, [0b1010, 0b0001, 0]), rw(4, [0, 0b1100, 0b0110])];
        let ns = nullspace(&rows, 4);
        assert_eq!(ns.dim(), 12 - 2);
        for v in ns.rows() {
            for r in &rows {
                assert!(!dot(v, r));
            }
        }
        let back = nullspace(ns.rows(), 4);
        assert_eq!(back, Echelon::from_vectors(rows));
    }
}
