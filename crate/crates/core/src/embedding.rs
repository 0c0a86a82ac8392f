//! The canonical book representation of `K_n`.
//!
//! Vertices `1..=n` sit on the spine; each edge lives in exactly one sheet
//! and sheet `S_i` lies above `S_j` whenever `i < j`. Everything here is a
//! closed-form rule on vertex labels, nothing is tabulated.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BookEmbedding {
    n: u32,
}

/// An undirected edge, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    a: u32,
    b: u32,
}

/// A sheet index, `1..=ceil(n/2)`. Smaller indices are higher in the stack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SheetIndex(pub u32);

impl Edge {
    /// Normalizes the endpoint order. Loops are rejected.
    pub fn new(u: u32, v: u32) -> Result<Self> {
        if u == v {
            return domain(format!("edge ({u},{v}) is a loop"));
        }
        if u == 0 || v == 0 {
            return domain("vertex labels start at 1");
        }
        Ok(Self {
            a: u.min(v),
            b: u.max(v),
        })
    }

    pub fn low(&self) -> u32 {
        self.a
    }

    pub fn high(&self) -> u32 {
        self.b
    }

    pub fn contains(&self, v: u32) -> bool {
        self.a == v || self.b == v
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.contains(other.a) || self.contains(other.b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl fmt::Display for SheetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}", self.0)
    }
}

/// Whether two chords interleave on the circle. Chords with a common
/// endpoint never cross.
pub fn crosses(e1: Edge, e2: Edge) -> bool {
    if e1.shares_vertex(&e2) {
        return false;
    }
    let inside = |v: u32| e1.a < v && v < e1.b;
    inside(e2.a) != inside(e2.b)
}

impl BookEmbedding {
    pub fn new(n: u32) -> Result<Self> {
        if n < 3 {
            return domain(format!("K_{n}: need at least 3 vertices"));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `floor(n/2)`
    pub fn m(&self) -> u32 {
        self.n / 2
    }

    pub fn parity(&self) -> Parity {
        if self.n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sheet_count(&self) -> u32 {
        self.n.div_ceil(2)
    }

    /// The highest vertex label that still counts as "low" in the lemma rules:
    /// `m` for even `n`, `m + 1` for odd `n`.
    fn pivot(&self) -> u32 {
        match self.parity() {
            Parity::Even => self.m(),
            Parity::Odd => self.m() + 1,
        }
    }

    pub fn check_vertex(&self, v: u32) -> Result<()> {
        if v == 0 || v > self.n {
            return domain(format!("vertex {v} is not in 1..={}", self.n));
        }
        Ok(())
    }

    pub fn check_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.a)?;
        self.check_vertex(e.b)
    }

    pub fn sheet_of(&self, e: Edge) -> Result<SheetIndex> {
        self.check_edge(e)?;
        Ok(self.sheet_unchecked(e))
    }

    pub(crate) fn sheet_unchecked(&self, e: Edge) -> SheetIndex {
        // pivot is m (even) or m+1 (odd); the three cases are the same shape
        let p = self.pivot();
        let (i, j) = (e.a, e.b);
        SheetIndex(if i <= p && j - i <= p {
            i
        } else if i <= p {
            j - p
        } else {
            i - p
        })
    }

    pub fn check_sheet(&self, s: SheetIndex) -> Result<()> {
        if s.0 == 0 || s.0 > self.sheet_count() {
            return domain(format!("{s} is not a sheet of K_{}", self.n));
        }
        Ok(())
    }

    /// All edges on sheet `s`, in lexicographic order.
    pub fn edges_in_sheet(&self, s: SheetIndex) -> Result<Vec<Edge>> {
        self.check_sheet(s)?;
        Ok(self.edges().filter(|e| self.sheet_unchecked(*e) == s).collect())
    }

    /// Every edge of `K_n`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = Edge> {
        let n = self.n;
        (1..=n).flat_map(move |a| (a + 1..=n).map(move |b| Edge { a, b }))
    }

    /// The edge that passes over at the crossing of `e1` and `e2`.
    pub fn over_edge(&self, e1: Edge, e2: Edge) -> Result<Edge> {
        self.check_edge(e1)?;
        self.check_edge(e2)?;
        if !crosses(e1, e2) {
            return Err(Error::Contract(format!("{e1} and {e2} do not cross")));
        }
        Ok(self.over_unchecked(e1, e2))
    }

    /// Lemma rule on a known crossing pair. With `(i,j)` the edge holding the
    /// smaller endpoint and `(k,l)` the other, `i < k < j < l`.
    pub(crate) fn over_unchecked(&self, e1: Edge, e2: Edge) -> Edge {
        let (ij, kl) = if e1.a < e2.a { (e1, e2) } else { (e2, e1) };
        let p = self.pivot();
        if ij.a <= p && kl.a > p {
            kl
        } else {
            ij
        }
    }

    /// Whether `e1` passes over `e2` (which must cross it).
    pub(crate) fn is_over(&self, e1: Edge, e2: Edge) -> bool {
        self.over_unchecked(e1, e2) == e1
    }

    /// Checks the closed-form over/under rule against sheet stacking on
    /// every crossing pair. Returns the number of pairs checked, or the
    /// first pair where the two disagree (or that shares a sheet).
    pub fn check_over_rule(&self) -> std::result::Result<usize, (Edge, Edge)> {
        let edges: Vec<Edge> = self.edges().collect();
        let mut checked = 0;
        for (x, &e1) in edges.iter().enumerate() {
            for &e2 in &edges[x + 1..] {
                if !crosses(e1, e2) {
                    continue;
                }
                let (s1, s2) = (self.sheet_unchecked(e1), self.sheet_unchecked(e2));
                let top = if s1 < s2 { e1 } else { e2 };
                if s1 == s2 || self.over_unchecked(e1, e2) != top {
                    return Err((e1, e2));
                }
                checked += 1;
            }
        }
        Ok(checked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn sheet_examples() {
        let k8 = BookEmbedding::new(8).unwrap();
        let k9 = BookEmbedding::new(9).unwrap();
        assert_eq!(k8.sheet_of(e(1, 3)).unwrap(), SheetIndex(1));
        assert_eq!(k8.sheet_of(e(2, 8)).unwrap(), SheetIndex(4));
        assert_eq!(k9.sheet_of(e(1, 8)).unwrap(), SheetIndex(3));
        assert_eq!(k8.sheet_of(e(6, 8)).unwrap(), SheetIndex(2));
    }

    #[test]
    fn sheet_sizes() {
        let k8 = BookEmbedding::new(8).unwrap();
        let k9 = BookEmbedding::new(9).unwrap();
        assert_eq!(k8.edges_in_sheet(SheetIndex(1)).unwrap().len(), 7);
        assert_eq!(k9.edges_in_sheet(SheetIndex(5)).unwrap().len(), 4);
        assert_eq!(k9.edges_in_sheet(SheetIndex(2)).unwrap().len(), 8);
        assert!(k9.edges_in_sheet(SheetIndex(6)).is_err());
        assert!(k9.edges_in_sheet(SheetIndex(0)).is_err());
    }

    #[test]
    fn invalid_labels() {
        let k8 = BookEmbedding::new(8).unwrap();
        assert!(matches!(k8.sheet_of(e(1, 9)), Err(Error::Domain(_))));
        assert!(Edge::new(0, 3).is_err());
        assert!(Edge::new(4, 4).is_err());
        assert!(BookEmbedding::new(2).is_err());
    }

    #[test]
    fn crossing_examples() {
        assert!(crosses(e(1, 3), e(2, 4)));
        assert!(!crosses(e(1, 2), e(3, 4)));
        assert!(crosses(e(2, 7), e(1, 3)));
        assert!(!crosses(e(1, 5), e(2, 4)));
        assert!(!crosses(e(1, 5), e(5, 7)));
    }

    #[test]
    fn over_examples() {
        let k8 = BookEmbedding::new(8).unwrap();
        assert_eq!(k8.over_edge(e(2, 6), e(5, 8)).unwrap(), e(5, 8));
        assert_eq!(k8.over_edge(e(5, 8), e(2, 6)).unwrap(), e(5, 8));
        assert_eq!(k8.over_edge(e(1, 5), e(3, 7)).unwrap(), e(1, 5));
        let k9 = BookEmbedding::new(9).unwrap();
        // i = 1 <= m+1 and k = 7 >= m+2
        assert_eq!(k9.over_edge(e(1, 8), e(7, 9)).unwrap(), e(7, 9));
        // k = 5 < m+2: the lower-labeled edge stays on top
        assert_eq!(k9.over_edge(e(1, 6), e(5, 9)).unwrap(), e(1, 6));
    }

    #[test]
    fn over_edge_rejects_non_crossing() {
        let k8 = BookEmbedding::new(8).unwrap();
        assert!(matches!(
            k8.over_edge(e(1, 2), e(3, 4)),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn lemma_rule_matches_sheet_stacking() {
        for n in 3..=30 {
            let emb = BookEmbedding::new(n).unwrap();
            let edges: Vec<Edge> = emb.edges().collect();
            for (x, &e1) in edges.iter().enumerate() {
                for &e2 in &edges[x + 1..] {
                    if !crosses(e1, e2) {
                        continue;
                    }
                    let s1 = emb.sheet_of(e1).unwrap();
                    let s2 = emb.sheet_of(e2).unwrap();
                    assert_ne!(s1, s2, "K_{n}: crossing chords {e1} {e2} share a sheet");
                    let top = if s1 < s2 { e1 } else { e2 };
                    assert_eq!(emb.over_edge(e1, e2).unwrap(), top, "K_{n}: {e1} vs {e2}");
                }
            }
        }
    }

    #[test]
    fn over_rule_check_counts_pairs() {
        // K_4 has a single interleaved pair, (1,3) and (2,4)
        assert_eq!(BookEmbedding::new(4).unwrap().check_over_rule(), Ok(1));
        // C(n,4) crossing pairs: one per 4-subset of the spine
        assert_eq!(BookEmbedding::new(10).unwrap().check_over_rule(), Ok(210));
    }

    #[test]
    fn sheets_partition_the_edges() {
        for n in 3..=30 {
            let emb = BookEmbedding::new(n).unwrap();
            let m = emb.m() as usize;
            let mut seen = std::collections::HashSet::new();
            for s in 1..=emb.sheet_count() {
                let edges = emb.edges_in_sheet(SheetIndex(s)).unwrap();
                let expected = match (emb.parity(), s as usize) {
                    (Parity::Even, _) => 2 * m - 1,
                    (Parity::Odd, s) if s <= m => 2 * m,
                    (Parity::Odd, _) => m,
                };
                assert_eq!(edges.len(), expected, "K_{n} sheet {s}");
                for e in edges {
                    assert!(seen.insert(e));
                }
            }
            assert_eq!(seen.len(), (n * (n - 1) / 2) as usize);
        }
    }
}
