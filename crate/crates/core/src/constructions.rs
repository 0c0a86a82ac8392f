//! Cycles built by the constructive arguments: extending a cycle through
//! new vertices, families of isotopic Hamiltonian cycles, step cycles that
//! carry torus knots, and connected sums.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::cycle::Cycle;
use crate::embedding::{BookEmbedding, Edge};
use crate::error::{domain, precondition, Result};

/// The same vertex sequence inside `K_N`.
pub fn stable_cycle(c: &Cycle, big_n: u32) -> Result<Cycle> {
    if big_n < c.n() {
        return domain(format!("cannot move a cycle of K_{} into K_{big_n}", c.n()));
    }
    c.with_ambient(big_n)
}

/// `i + 1`, wrapping `n` to 1.
fn successor(i: u32, n: u32) -> u32 {
    i % n + 1
}

/// Splices `i + 1` into the cycle right after `i`.
pub fn insert_vertex(c: &Cycle, i: u32) -> Result<Cycle> {
    let n = c.n();
    let Some(at) = c.vertices().iter().position(|&v| v == i) else {
        return precondition(format!("vertex {i} is not on the cycle {c}"));
    };
    let j = successor(i, n);
    if c.contains(j) {
        return precondition(format!("vertex {j} is already on the cycle {c}"));
    }
    let mut v = c.vertices().to_vec();
    v.insert(at + 1, j);
    Ok(Cycle::from_raw(n, v))
}

fn insert_before(c: &Cycle, i: u32) -> Cycle {
    let j = successor(i, c.n());
    let at = c.vertices().iter().position(|&v| v == i).expect("caller checked");
    let mut v = c.vertices().to_vec();
    v.insert(at, j);
    Cycle::from_raw(c.n(), v)
}

/// All `n`-subsets of `1..=big_n`, lexicographic.
fn subsets(big_n: u32, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    fn rec(start: u32, big_n: u32, n: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == n as usize {
            out.push(current.clone());
            return;
        }
        let needed = n - current.len() as u32;
        for v in start..=big_n + 1 - needed {
            current.push(v);
            rec(v + 1, big_n, n, current, out);
            current.pop();
        }
    }
    rec(1, big_n, n, &mut current, &mut out);
    out
}

/// Hamiltonian cycles of `K_{n+k}` obtained from `c` by relabeling onto each
/// `n`-subset and filling the missing vertices one at a time: the smallest
/// `j` on the cycle whose successor is missing gets that successor spliced
/// in right after or right before it. Returned in canonical form, without
/// duplicates.
pub fn extension_family(c: &Cycle, n: u32, k: u32) -> Result<BTreeSet<Cycle>> {
    if c.n() != n || !c.is_hamiltonian() {
        return precondition(format!("{c} is not a Hamiltonian cycle of K_{n}"));
    }
    let consecutive = c.edges().find(|e| e.high() - e.low() == 1 || (e.low() == 1 && e.high() == n));
    if let Some(e) = consecutive {
        return precondition(format!("edge {e} joins consecutively labeled vertices"));
    }
    let big_n = n + k;
    let mut family = BTreeSet::new();
    for subset in subsets(big_n, n) {
        let relabeled: Vec<u32> = c.vertices().iter().map(|&v| subset[v as usize - 1]).collect();
        let mut layer = vec![Cycle::from_raw(big_n, relabeled)];
        while !layer[0].is_hamiltonian() {
            let mut next = Vec::with_capacity(layer.len() * 2);
            for cycle in &layer {
                let j = (1..=big_n)
                    .find(|&j| cycle.contains(j) && !cycle.contains(successor(j, big_n)))
                    .expect("a non-Hamiltonian cycle misses a successor");
                next.push(insert_vertex(cycle, j)?);
                next.push(insert_before(cycle, j));
            }
            layer = next;
        }
        family.extend(layer.iter().map(Cycle::canonical));
    }
    Ok(family)
}

/// The cycle `(1, 1+p, 1+2p, ...)` of `K_n`, labels mod `n`.
pub fn step_cycle(n: u32, p: u32) -> Result<Cycle> {
    if n < 3 || p == 0 || p >= n {
        return domain(format!("no step-{p} cycle in K_{n}"));
    }
    if n.gcd(&p) != 1 {
        return domain(format!(
            "gcd({n},{p}) != 1: the step edges form a link, which is out of scope"
        ));
    }
    let vertices = (0..n).map(|k| (k * p) % n + 1).collect();
    Cycle::new(n, vertices)
}

/// A Hamiltonian cycle of `K_{p+q+1}` carrying the connected sum of the
/// knots of `alpha` (Hamiltonian in `K_p`) and `beta` (in `K_q`).
///
/// `alpha` is routed through `p+q+1, p+q` in place of its lowest edge,
/// `beta` moves onto `p+1..=p+q` and is routed through the same two
/// vertices, and the two cycles are joined along the shared edge.
pub fn composite_cycle(alpha: &Cycle, beta: &Cycle) -> Result<Cycle> {
    for c in [alpha, beta] {
        if !c.is_hamiltonian() {
            return precondition(format!("{c} is not a Hamiltonian cycle of K_{}", c.n()));
        }
    }
    let (alpha, beta) = if alpha.n() <= beta.n() { (alpha, beta) } else { (beta, alpha) };
    let (p, q) = (alpha.n(), beta.n());
    let big_n = p + q + 1;
    let emb = BookEmbedding::new(big_n)?;

    // the edge of alpha in the lowest sheet, ties to the smaller endpoint
    let a = alpha.vertices();
    let lowest = (0..a.len())
        .max_by_key(|&k| {
            let e = Edge::new(a[k], a[(k + 1) % a.len()]).expect("distinct");
            (emb.sheet_unchecked(e), std::cmp::Reverse(e.low()))
        })
        .expect("nonempty");
    let a: Vec<u32> = if a[lowest] < a[(lowest + 1) % a.len()] {
        alpha.rotated(lowest + 1).vertices().to_vec()
    } else {
        alpha.reversed().rotated(a.len() - 1 - lowest).vertices().to_vec()
    };
    // now the chosen edge runs from a[last] up to a[0]

    let b: Vec<u32> = beta.vertices().iter().map(|&v| v + p).collect();
    let j = b.iter().position(|&v| v == p + q).expect("beta is Hamiltonian");
    let len = b.len();
    let (before, after) = (b[(j + len - 1) % len], b[(j + 1) % len]);
    // walk beta from beta_{j-1} backwards round to beta_{j+1}, oriented so
    // that beta_{j-1} < beta_{j+1}
    let (first, step_back) = if before < after { (j + len - 1, true) } else { (j + 1, false) };
    let beta_path: Vec<u32> = (0..len - 1)
        .map(|k| {
            let idx = if step_back { first - k } else { first + k };
            b[idx % len]
        })
        .collect();

    let mut vertices = Vec::with_capacity(big_n as usize);
    vertices.push(*a.last().unwrap());
    vertices.push(big_n);
    vertices.extend(&beta_path);
    vertices.push(p + q);
    vertices.extend(&a[..a.len() - 1]);
    Cycle::new(big_n, vertices)
}

/// The explicit composite-trefoil cycles: in `K_12`, in `K_13`, and the
/// member of the `K_n` family for `n >= 14`. Each entry is `(n, cycle)`.
pub fn paper_composites(n: u32) -> Result<Vec<(u32, Cycle)>> {
    if n < 12 {
        return domain(format!("K_{n} has no composite Hamiltonian knot; need n >= 12"));
    }
    let mut out = vec![(12, Cycle::new(12, vec![1, 3, 5, 8, 10, 12, 7, 9, 11, 2, 4, 6])?)];
    if n >= 13 {
        out.push((13, Cycle::new(13, vec![1, 3, 5, 7, 9, 11, 13, 8, 10, 12, 2, 4, 6])?));
    }
    if n >= 14 {
        let mut v = vec![1, 3, 5, 7, 9, 11, 13, 8, 10, 12];
        v.extend(14..=n);
        v.extend([2, 4, 6]);
        out.push((n, Cycle::new(n, v)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn cyc(n: u32, v: &[u32]) -> Cycle {
        Cycle::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn insert_examples() {
        let c = cyc(8, &[1, 3, 5, 7, 2, 4, 6]);
        assert_eq!(insert_vertex(&c, 7).unwrap(), cyc(8, &[1, 3, 5, 7, 8, 2, 4, 6]));
        assert!(matches!(insert_vertex(&c, 1), Err(Error::Precondition(_))));
        assert!(matches!(insert_vertex(&c, 8), Err(Error::Precondition(_))));
        let boundary = cyc(6, &[1, 2, 3, 4, 5]);
        assert_eq!(insert_vertex(&boundary, 5).unwrap().vertices(), &[1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn insert_wraps_to_one() {
        let c = cyc(8, &[2, 4, 6, 8, 3, 5, 7]);
        assert_eq!(insert_vertex(&c, 8).unwrap().vertices(), &[2, 4, 6, 8, 1, 3, 5, 7]);
    }

    #[test]
    fn step_cycles() {
        assert_eq!(step_cycle(9, 2).unwrap().vertices(), &[1, 3, 5, 7, 9, 2, 4, 6, 8]);
        assert_eq!(step_cycle(7, 1).unwrap().vertices(), &[1, 2, 3, 4, 5, 6, 7]);
        assert!(step_cycle(9, 3).is_err());
    }

    #[test]
    fn subset_count() {
        assert_eq!(subsets(9, 7).len(), 36);
        assert_eq!(subsets(7, 7), vec![(1..=7).collect::<Vec<_>>()]);
    }

    #[test]
    fn family_of_seed_alone() {
        let c = cyc(7, &[1, 3, 5, 7, 2, 4, 6]);
        let f = extension_family(&c, 7, 0).unwrap();
        assert_eq!(f.len(), 1);
        assert!(f.contains(&c.canonical()));
    }

    #[test]
    fn family_rejects_consecutive_edges() {
        let c = cyc(7, &[1, 2, 4, 6, 3, 5, 7]);
        assert!(matches!(extension_family(&c, 7, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn family_sizes() {
        let c = cyc(7, &[1, 3, 5, 7, 2, 4, 6]);
        let f1 = extension_family(&c, 7, 1).unwrap();
        assert!(f1.len() >= 16);
        assert!(f1.iter().all(|c| c.is_hamiltonian() && c.n() == 8 && c.is_canonical()));
    }

    #[test]
    fn composite_shape() {
        let t = cyc(7, &[1, 3, 5, 7, 2, 4, 6]);
        let c = composite_cycle(&t, &t).unwrap();
        assert_eq!(c.n(), 15);
        assert!(c.is_hamiltonian());
        // the summands meet only at 14 and 15, each joined to one vertex of
        // either side
        for hub in [14, 15] {
            let mut sides: Vec<bool> = c.edges().filter(|e| e.contains(hub)).map(|e| e.low() <= 7).collect();
            sides.sort();
            assert_eq!(sides, vec![false, true], "vertex {hub} in {c}");
        }
    }

    #[test]
    fn paper_composite_list() {
        assert!(paper_composites(11).is_err());
        assert_eq!(paper_composites(12).unwrap().len(), 1);
        let all = paper_composites(16).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(all[2].1.vertices(), &[1, 3, 5, 7, 9, 11, 13, 8, 10, 12, 14, 15, 16, 2, 4, 6]);
    }
}
