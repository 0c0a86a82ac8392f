//! Reidemeister I/II reduction on the Gauss code.
//!
//! Visits are nodes of a doubly-linked ring per component. A kink is a node
//! whose successor is its own partner; a removable bigon is a pair of
//! consecutive nodes on the same level whose partners are also consecutive.
//! Every removal only touches a constant number of links, and the nodes
//! next to a removal are re-queued, so the whole pass is linear in the
//! number of crossings plus moves.

use crate::diagram::{Diagram, Visit};

struct Rings {
    next: Vec<usize>,
    prev: Vec<usize>,
    partner: Vec<usize>,
    over: Vec<bool>,
    crossing: Vec<usize>,
    alive: Vec<bool>,
    component: Vec<usize>,
}

impl Rings {
    fn build(d: &Diagram) -> Self {
        let total: usize = d.components().iter().map(Vec::len).sum();
        let mut next = vec![0; total];
        let mut prev = vec![0; total];
        let mut over = vec![false; total];
        let mut crossing = vec![0; total];
        let mut component = vec![0; total];
        let mut base = 0;
        for (k, comp) in d.components().iter().enumerate() {
            let len = comp.len();
            for (i, v) in comp.iter().enumerate() {
                next[base + i] = base + (i + 1) % len;
                prev[base + i] = base + (i + len - 1) % len;
                over[base + i] = v.over;
                crossing[base + i] = v.crossing;
                component[base + i] = k;
            }
            base += len;
        }
        let mut partner = vec![0; total];
        for x in d.crossings() {
            partner[x.over_position] = x.under_position;
            partner[x.under_position] = x.over_position;
        }
        Self {
            next,
            prev,
            partner,
            over,
            crossing,
            alive: vec![true; total],
            component,
        }
    }

    fn unlink(&mut self, x: usize) {
        let (p, n) = (self.prev[x], self.next[x]);
        self.next[p] = n;
        self.prev[n] = p;
        self.alive[x] = false;
    }

    /// Removes the crossing at node `x` (both of its visits) and returns the
    /// surviving neighbors of both visits.
    fn remove_crossing(&mut self, x: usize) -> [usize; 4] {
        let y = self.partner[x];
        self.unlink(x);
        self.unlink(y);
        [self.prev[x], self.next[x], self.prev[y], self.next[y]]
    }

    fn kink_at(&self, u: usize) -> bool {
        self.next[u] == self.partner[u]
    }

    fn bigon_at(&self, u: usize) -> bool {
        let v = self.next[u];
        if v == u || v == self.partner[u] || self.over[u] != self.over[v] {
            return false;
        }
        let (pu, pv) = (self.partner[u], self.partner[v]);
        self.next[pu] == pv || self.next[pv] == pu
    }
}

/// Applies Reidemeister I and II reductions until none applies.
pub fn simplify(d: &Diagram) -> Diagram {
    let mut r = Rings::build(d);
    let total = r.next.len();
    let mut work: Vec<usize> = (0..total).rev().collect();
    let mut queued = vec![true; total];
    let push = |work: &mut Vec<usize>, queued: &mut Vec<bool>, x: usize| {
        if !queued[x] {
            queued[x] = true;
            work.push(x);
        }
    };
    while let Some(u) = work.pop() {
        queued[u] = false;
        if !r.alive[u] {
            continue;
        }
        let touched: Vec<usize> = if r.kink_at(u) {
            r.remove_crossing(u).to_vec()
        } else if r.bigon_at(u) {
            let v = r.next[u];
            let mut t = r.remove_crossing(u).to_vec();
            t.extend(r.remove_crossing(v));
            t
        } else {
            continue;
        };
        for x in touched {
            if r.alive[x] {
                for y in [x, r.prev[x], r.partner[x], r.prev[r.partner[x]]] {
                    if r.alive[y] {
                        push(&mut work, &mut queued, y);
                    }
                }
            }
        }
    }
    rebuild(d, &r)
}

fn rebuild(d: &Diagram, r: &Rings) -> Diagram {
    let total = r.next.len();
    let mut new_id = vec![usize::MAX; d.crossing_count()];
    let mut signs = Vec::new();
    let mut edges = Vec::new();
    let old_edges = d.edge_table();
    let mut seen = vec![false; total];
    let mut alive_in = vec![0usize; d.component_count()];
    for x in 0..total {
        if r.alive[x] {
            alive_in[r.component[x]] += 1;
        }
    }
    let mut components = Vec::new();
    // walk each original component from its first surviving node, so the
    // output keeps the input's component order and starting points
    for start in 0..total {
        if !r.alive[start] || seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            let old = r.crossing[x];
            if new_id[old] == usize::MAX {
                new_id[old] = signs.len();
                signs.push(d.crossings()[old].sign);
                if let Some(e) = &old_edges {
                    edges.push(e[old]);
                }
            }
            comp.push(Visit {
                crossing: new_id[old],
                over: r.over[x],
            });
            x = r.next[x];
        }
        components.push(comp);
    }
    let free = alive_in.iter().filter(|&&c| c == 0).count();
    components.extend(std::iter::repeat_with(Vec::new).take(free));
    let edges = old_edges.map(|_| edges);
    Diagram::with_edges(signs, components, edges).expect("reduction keeps the diagram valid")
}


#[cfg(test)]
mod properties {
    use proptest::prelude::*;

    use super::*;
    use crate::invariants::{alexander_poly, determinant};
    use crate::testing::{diagram, hamiltonian};

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn reduction_keeps_alexander_and_determinant(c in hamiltonian(7..=11)) {
            let d = diagram(&c);
            let s = simplify(&d);
            prop_assert!(s.crossing_count() <= d.crossing_count());
            prop_assert_eq!(s.component_count(), 1);
            prop_assert_eq!(alexander_poly(&s).unwrap(), alexander_poly(&d).unwrap());
            prop_assert_eq!(determinant(&s).unwrap(), determinant(&d).unwrap());
            prop_assert_eq!(simplify(&s), s);
        }
    }
}
