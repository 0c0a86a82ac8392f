//! Braid words, their closures, and the braid words of step cycles.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::diagram::{Diagram, Visit};
use crate::embedding::{BookEmbedding, Edge};
use crate::error::{domain, Error, Result};

/// A word in the braid group on `strands` strands. Letter `+i` is `σ_i`
/// (strand at position `i` over strand `i+1`, a positive crossing), `-i`
/// its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return domain(format!("a braid needs at least 2 strands, got {strands}"));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() >= strands {
                return domain(format!("letter {l} is not a generator on {strands} strands"));
            }
        }
        Ok(Self { strands, letters })
    }

    /// Parses `"1 1 -2"`; an empty string is the identity.
    pub fn parse(strands: u32, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in text.split(' ') {
            if !token.is_empty() {
                let l: i32 = token.parse().map_err(|_| Error::Parse {
                    position: offset,
                    message: format!("bad braid letter {token:?}"),
                })?;
                letters.push(l);
            }
            offset += token.len() + 1;
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Where the strand starting at each position (0-based) ends up.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands as usize).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands as usize];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// The diagram of the braid closure. Crossing `k` is letter `k`.
    pub fn closure(&self) -> Diagram {
        let p = self.strands as usize;
        let perm = self.permutation();
        let mut done = vec![false; p];
        let mut components = Vec::new();
        for start in 0..p {
            if done[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut s = start;
            while !done[s] {
                done[s] = true;
                let mut pos = s;
                for (k, &l) in self.letters.iter().enumerate() {
                    let i = l.unsigned_abs() as usize - 1;
                    if pos == i || pos == i + 1 {
                        // positive letters carry the left strand over
                        let left = pos == i;
                        comp.push(Visit {
                            crossing: k,
                            over: left == (l > 0),
                        });
                        pos = if left { i + 1 } else { i };
                    }
                }
                s = perm[s];
                debug_assert_eq!(s, pos);
            }
            components.push(comp);
        }
        let signs = self.letters.iter().map(|l| l.signum() as i8).collect();
        Diagram::from_parts(signs, components).expect("braid closures are valid diagrams")
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self {
            strands: self.strands,
            letters: out,
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        write!(f, "{}: {}", self.strands, parts.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `strands: letters`, e.g. `"3: 1 2 1 2"`.
    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = s.split_once(':').ok_or(Error::Parse {
            position: 0,
            message: "expected `strands: letters`".into(),
        })?;
        let strands: u32 = head.trim().parse().map_err(|_| Error::Parse {
            position: 0,
            message: format!("bad strand count {:?}", head.trim()),
        })?;
        Self::parse(strands, tail.trim()).map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position: position + head.len() + 1 + (tail.len() - tail.trim_start().len()),
                message,
            },
            other => other,
        })
    }
}

/// `(σ_1 σ_2 ... σ_{p-1})^q`, whose closure is the `(p,q)` torus knot or
/// link.
pub fn torus_braid(p: u32, q: u32) -> Result<BraidWord> {
    if p < 2 {
        return domain(format!("torus braid needs p >= 2, got {p}"));
    }
    if q < 1 {
        return domain("torus braid needs q >= 1");
    }
    let block: Vec<i32> = (1..p as i32).collect();
    BraidWord::new(p, block.repeat(q as usize))
}

/// The braid word of the step cycle `(1, 1+p, 1+2p, ...)` in `K_n`.
///
/// Edge `(i, i+p)` meets the edges `(i+j, i+j+p)` for `j = 1..p-1`; the
/// letter for that pair is `+j` when edge `i` passes over and `-j`
/// otherwise. Words for `i = 1..n` are concatenated.
pub fn step_cycle_braid(n: u32, p: u32) -> Result<BraidWord> {
    if p < 2 {
        return domain(format!("step cycles need p >= 2 to form a braid, got {p}"));
    }
    if n < 2 * p + 1 {
        return domain(format!("step-{p} cycles need n >= {}, got {n}", 2 * p + 1));
    }
    if n.gcd(&p) != 1 {
        return domain(format!(
            "gcd({n},{p}) != 1: the step edges form a link, which is out of scope"
        ));
    }
    let emb = BookEmbedding::new(n)?;
    let wrap = |v: u32| (v - 1) % n + 1;
    let chord = |i: u32| Edge::new(wrap(i), wrap(i + p)).expect("distinct endpoints");
    let mut letters = Vec::with_capacity((n * (p - 1)) as usize);
    for i in 1..=n {
        for j in 1..p {
            let (e, f) = (chord(i), chord(i + j));
            let letter = j as i32;
            letters.push(if emb.is_over(e, f) { letter } else { -letter });
        }
    }
    BraidWord::new(p, letters)
}


#[cfg(test)]
mod properties {
    use proptest::prelude::*;

    use super::*;
    use crate::invariants::{Fingerprint, DEFAULT_BRACKET_THRESHOLD};

    fn letters() -> impl Strategy<Value = Vec<i32>> {
        prop::collection::vec(prop_oneof![-2i32..=-1, 1i32..=2], 0..12)
    }

    proptest! {
        #[test]
        fn free_reduction_keeps_fingerprint(w in letters()) {
            let word = BraidWord::new(3, w).unwrap();
            let reduced = word.free_reduce();
            prop_assert!(reduced.len() <= word.len());
            prop_assert_eq!(reduced.permutation(), word.permutation());
            prop_assert_eq!(reduced.exponent_sum(), word.exponent_sum());
            let f = Fingerprint::of(&word.closure(), DEFAULT_BRACKET_THRESHOLD).unwrap();
            let g = Fingerprint::of(&reduced.closure(), DEFAULT_BRACKET_THRESHOLD).unwrap();
            prop_assert_eq!(f, g);
        }

        #[test]
        fn text_round_trip(w in letters()) {
            let word = BraidWord::new(3, w).unwrap();
            prop_assert_eq!(word.to_string().parse::<BraidWord>().unwrap(), word);
        }
    }
}
