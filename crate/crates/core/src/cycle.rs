//! Cycles in `K_n`, written `(1,3,5,7,2,4,6)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embedding::Edge;
use crate::error::{domain, Error, Result};

/// A closed cycle: distinct vertices in `1..=n`, at least three of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cycle {
    n: u32,
    vertices: Vec<u32>,
}

impl Cycle {
    pub fn new(n: u32, vertices: Vec<u32>) -> Result<Self> {
        if vertices.len() < 3 {
            return domain(format!("a cycle needs at least 3 vertices, got {}", vertices.len()));
        }
        let mut seen = vec![false; n as usize + 1];
        for &v in &vertices {
            if v == 0 || v > n {
                return domain(format!("vertex {v} is not in 1..={n}"));
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return domain(format!("vertex {v} repeats"));
            }
        }
        Ok(Self { n, vertices })
    }

    /// Builds without validation; callers guarantee the invariants.
    pub(crate) fn from_raw(n: u32, vertices: Vec<u32>) -> Self {
        debug_assert!(Self::new(n, vertices.clone()).is_ok());
        Self { n, vertices }
    }

    /// Parses `(1,3,5,7,2,4,6)`; the parentheses are optional.
    pub fn parse(n: u32, text: &str) -> Result<Self> {
        let mut body = text.trim();
        let mut base = text.len() - text.trim_start().len();
        if let Some(rest) = body.strip_prefix('(') {
            body = rest.strip_suffix(')').ok_or(Error::Parse {
                position: text.len(),
                message: "missing closing parenthesis".into(),
            })?;
            base += 1;
        }
        let mut vertices = Vec::new();
        let mut offset = base;
        for part in body.split(',') {
            let lead = part.len() - part.trim_start().len();
            let v: u32 = part.trim().parse().map_err(|_| Error::Parse {
                position: offset + lead,
                message: format!("expected a vertex label, found {:?}", part.trim()),
            })?;
            vertices.push(v);
            offset += part.len() + 1;
        }
        Self::new(n, vertices)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.vertices.len() == self.n as usize
    }

    pub fn contains(&self, v: u32) -> bool {
        self.vertices.contains(&v)
    }

    /// Consecutive vertex pairs in traversal order, closing edge last.
    pub fn steps(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |k| (self.vertices[k], self.vertices[(k + 1) % len]))
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.steps().map(|(u, v)| Edge::new(u, v).expect("cycle vertices are distinct"))
    }

    /// Same vertex sequence, viewed inside `K_N`.
    pub fn with_ambient(&self, n: u32) -> Result<Self> {
        Self::new(n, self.vertices.clone())
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { n: self.n, vertices }
    }

    pub fn rotated(&self, k: usize) -> Self {
        let mut vertices = self.vertices.clone();
        let len = vertices.len();
        vertices.rotate_left(k % len);
        Self { n: self.n, vertices }
    }

    /// Starts at the minimal vertex, second entry the smaller neighbor.
    pub fn canonical(&self) -> Self {
        let len = self.vertices.len();
        let (start, _) = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .unwrap();
        let next = self.vertices[(start + 1) % len];
        let prev = self.vertices[(start + len - 1) % len];
        let vertices = if next < prev {
            (0..len).map(|k| self.vertices[(start + k) % len]).collect()
        } else {
            (0..len).map(|k| self.vertices[(start + len - k) % len]).collect()
        };
        Self { n: self.n, vertices }
    }

    pub fn is_canonical(&self) -> bool {
        let v = &self.vertices;
        v[0] == *v.iter().min().unwrap() && v[1] < v[v.len() - 1]
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let c = Cycle::parse(7, "(1,3,5,7,2,4,6)").unwrap();
        assert_eq!(c.to_string(), "(1,3,5,7,2,4,6)");
        assert_eq!(Cycle::parse(7, " 1, 2 ,3 ").unwrap().vertices(), &[1, 2, 3]);
    }

    #[test]
    fn parse_errors_carry_position() {
        match Cycle::parse(7, "(1,3,x,7)") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Cycle::parse(7, "(1,2,3"), Err(Error::Parse { .. })));
        assert!(matches!(Cycle::parse(7, "(1,2,9)"), Err(Error::Domain(_))));
        assert!(matches!(Cycle::parse(7, "(1,2,2)"), Err(Error::Domain(_))));
        assert!(matches!(Cycle::parse(7, "(1,2)"), Err(Error::Domain(_))));
    }

    #[test]
    fn canonical_form() {
        let c = Cycle::new(7, vec![5, 7, 2, 4, 6, 1, 3]).unwrap();
        assert_eq!(c.canonical().vertices(), &[1, 3, 5, 7, 2, 4, 6]);
        assert_eq!(c.reversed().canonical(), c.canonical());
        assert!(c.canonical().is_canonical());
        assert!(!c.is_canonical());
    }
}
