//! Knot diagrams: crossings, the traversal that visits them, and the
//! Gauss / Dowker-Thistlethwaite / PD views of that traversal.
//!
//! A diagram is an oriented signed Gauss code. Each component is a cyclic
//! list of visits; every crossing is visited exactly twice, once over and
//! once under. Components with no visits are crossingless circles.

use std::fmt;

use crate::cycle::Cycle;
use crate::embedding::{crosses, BookEmbedding, Edge};
use crate::error::{domain, Error, Result};

/// One pass of the strand through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Visit {
    pub crossing: usize,
    pub over: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    /// +1 right-handed, -1 left-handed.
    pub sign: i8,
    /// Traversal positions (flattened over components) of the over and
    /// under passes.
    pub over_position: usize,
    pub under_position: usize,
    /// The chords that meet here, when the diagram came from a cycle.
    pub edges: Option<CrossingEdges>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingEdges {
    pub over: Edge,
    pub under: Edge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    components: Vec<Vec<Visit>>,
}

impl Diagram {
    /// Builds a diagram from per-crossing signs and the component traversals.
    pub fn from_parts(signs: Vec<i8>, components: Vec<Vec<Visit>>) -> Result<Self> {
        Self::with_edges(signs, components, None)
    }

    pub(crate) fn with_edges(
        signs: Vec<i8>,
        components: Vec<Vec<Visit>>,
        edges: Option<Vec<CrossingEdges>>,
    ) -> Result<Self> {
        if components.is_empty() {
            return domain("a diagram needs at least one component");
        }
        let c = signs.len();
        let mut over_pos = vec![usize::MAX; c];
        let mut under_pos = vec![usize::MAX; c];
        for (pos, visit) in components.iter().flatten().enumerate() {
            if visit.crossing >= c {
                return domain(format!("visit to unknown crossing {}", visit.crossing));
            }
            let slot = if visit.over {
                &mut over_pos[visit.crossing]
            } else {
                &mut under_pos[visit.crossing]
            };
            if *slot != usize::MAX {
                return domain(format!("crossing {} passed twice on the same level", visit.crossing));
            }
            *slot = pos;
        }
        let mut crossings = Vec::with_capacity(c);
        for x in 0..c {
            if over_pos[x] == usize::MAX || under_pos[x] == usize::MAX {
                return domain(format!("crossing {x} is not visited over and under"));
            }
            if signs[x] != 1 && signs[x] != -1 {
                return domain(format!("crossing {x} has sign {}", signs[x]));
            }
            crossings.push(Crossing {
                sign: signs[x],
                over_position: over_pos[x],
                under_position: under_pos[x],
                edges: edges.as_ref().map(|e| e[x]),
            });
        }
        Ok(Self {
            crossings,
            components,
        })
    }

    /// The crossingless unknot (or unlink of `k` circles).
    pub fn unlink(k: usize) -> Self {
        Self {
            crossings: Vec::new(),
            components: vec![Vec::new(); k.max(1)],
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn components(&self) -> &[Vec<Visit>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// All visits, component after component.
    pub fn traversal(&self) -> impl Iterator<Item = Visit> + '_ {
        self.components.iter().flatten().copied()
    }

    pub fn signs(&self) -> Vec<i8> {
        self.crossings.iter().map(|c| c.sign).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Same diagram with every crossing switched; the result is the mirror
    /// image.
    pub fn mirror(&self) -> Self {
        let components = self
            .components
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|v| Visit {
                        crossing: v.crossing,
                        over: !v.over,
                    })
                    .collect()
            })
            .collect();
        let signs = self.crossings.iter().map(|c| -c.sign).collect();
        let edges = self.edge_table().map(|edges| {
            edges
                .into_iter()
                .map(|e| CrossingEdges {
                    over: e.under,
                    under: e.over,
                })
                .collect()
        });
        Self::with_edges(signs, components, edges).expect("mirror of a valid diagram")
    }

    /// Same diagram traversed backwards. Crossing signs are unchanged for a
    /// knot, since both strands flip.
    pub fn reversed(&self) -> Self {
        let components: Vec<Vec<Visit>> = self
            .components
            .iter()
            .map(|comp| comp.iter().rev().copied().collect())
            .collect();
        Self::with_edges(self.signs(), components, self.edge_table()).expect("reversal of a valid diagram")
    }

    pub(crate) fn edge_table(&self) -> Option<Vec<CrossingEdges>> {
        self.crossings.iter().map(|c| c.edges).collect()
    }

    /// Maps each crossing to its `(over, under)` traversal positions.
    fn segment_labels(&self) -> (Vec<usize>, Vec<usize>) {
        // label of the segment leaving position p is p + 1; entering is the
        // label leaving the previous position in the same component
        let total: usize = self.components.iter().map(Vec::len).sum();
        let mut incoming = vec![0; total];
        let mut outgoing = vec![0; total];
        let mut base = 0;
        for comp in &self.components {
            let len = comp.len();
            for k in 0..len {
                outgoing[base + k] = base + k + 1;
                incoming[base + k] = base + (k + len - 1) % len + 1;
            }
            base += len;
        }
        (incoming, outgoing)
    }

    pub fn gauss_code(&self) -> GaussCode {
        GaussCode {
            components: self
                .components
                .iter()
                .map(|comp| {
                    comp.iter()
                        .map(|v| {
                            let id = v.crossing as i32 + 1;
                            if v.over {
                                id
                            } else {
                                -id
                            }
                        })
                        .collect()
                })
                .collect(),
            signs: self.signs(),
        }
    }

    /// Dowker-Thistlethwaite code. Knot diagrams only.
    pub fn dt_code(&self) -> Result<DtCode> {
        if self.components.len() != 1 {
            return domain("DT codes describe knots, not links");
        }
        let c = self.crossings.len();
        let mut pairs = vec![0i32; c];
        for x in &self.crossings {
            // visit numbers are 1-based traversal positions
            let (o, u) = (x.over_position + 1, x.under_position + 1);
            let (odd, even, even_is_over) = match (o % 2, u % 2) {
                (1, 0) => (o, u, false),
                (0, 1) => (u, o, true),
                _ => return domain("traversal parity violated: diagram is not planar"),
            };
            let value = if even_is_over { -(even as i32) } else { even as i32 };
            pairs[(odd - 1) / 2] = value;
        }
        Ok(DtCode(pairs))
    }

    /// Planar diagram code. Arcs are the traversal segments, labeled from 1;
    /// each crossing lists its arcs counterclockwise from the incoming
    /// under-strand.
    pub fn pd_code(&self) -> PdCode {
        let (incoming, outgoing) = self.segment_labels();
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let a = incoming[x.under_position];
                let c = outgoing[x.under_position];
                let over_in = incoming[x.over_position];
                let over_out = outgoing[x.over_position];
                if x.sign > 0 {
                    [a, over_out, c, over_in]
                } else {
                    [a, over_in, c, over_out]
                }
            })
            .collect();
        PdCode {
            crossings,
            free_loops: self.components.iter().filter(|c| c.is_empty()).count(),
        }
    }

    /// Rebuilds the traversal from a signed Gauss code.
    pub fn from_gauss(code: &GaussCode) -> Result<Self> {
        let components = code
            .components
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|&g| {
                        if g == 0 {
                            return domain("Gauss code entries are nonzero");
                        }
                        Ok(Visit {
                            crossing: g.unsigned_abs() as usize - 1,
                            over: g > 0,
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(code.signs.clone(), components)
    }

    /// Rebuilds a diagram from a PD code, recovering the orientation of
    /// every over-strand by following arcs from the under-strands.
    pub fn from_pd(code: &PdCode) -> Result<Self> {
        let c = code.crossings.len();
        if c == 0 {
            return Ok(Self::unlink(code.free_loops.max(1)));
        }
        // slot (x, k): the k-th arc of crossing x
        let mut slots_of_label: std::collections::HashMap<usize, Vec<(usize, usize)>> =
            std::collections::HashMap::new();
        for (x, arcs) in code.crossings.iter().enumerate() {
            for (k, &label) in arcs.iter().enumerate() {
                slots_of_label.entry(label).or_default().push((x, k));
            }
        }
        for (label, slots) in &slots_of_label {
            if slots.len() != 2 {
                return domain(format!("PD arc {label} appears {} times", slots.len()));
            }
        }
        // over_in[x]: Some(true) if the over-strand enters at slot 3 (d),
        // Some(false) if it enters at slot 1 (b)
        let mut over_enters_d: Vec<Option<bool>> = vec![None; c];
        // a slot is incoming or outgoing; under slots are known
        let is_in = |x: usize, k: usize, over_enters_d: &[Option<bool>]| -> Option<bool> {
            match k {
                0 => Some(true),
                2 => Some(false),
                1 => over_enters_d[x].map(|d| !d),
                _ => over_enters_d[x],
            }
        };
        loop {
            let mut progress = false;
            let mut undecided = None;
            for x in 0..c {
                if over_enters_d[x].is_some() {
                    continue;
                }
                undecided.get_or_insert(x);
                for k in [1usize, 3] {
                    let label = code.crossings[x][k];
                    let other = slots_of_label[&label]
                        .iter()
                        .copied()
                        .find(|&(y, j)| (y, j) != (x, k))
                        .unwrap();
                    if let Some(other_in) = is_in(other.0, other.1, &over_enters_d) {
                        // the arc leaves one end and enters the other
                        let this_in = !other_in;
                        over_enters_d[x] = Some(if k == 3 { this_in } else { !this_in });
                        progress = true;
                        break;
                    }
                }
            }
            match (progress, undecided) {
                (_, None) => break,
                (true, _) => {}
                // an over-only component: either orientation is valid
                (false, Some(x)) => over_enters_d[x] = Some(true),
            }
        }
        // next slot along the strand: outgoing slot -> arc -> incoming slot
        let exit_of = |x: usize, k: usize| -> (usize, usize) {
            match k {
                0 => (x, 2),
                2 => (x, 0),
                1 => (x, 3),
                _ => (x, 1),
            }
        };
        let entry_slots: Vec<(usize, usize)> = (0..c)
            .flat_map(|x| {
                let over_in = if over_enters_d[x].unwrap() { 3 } else { 1 };
                [(x, 0), (x, over_in)]
            })
            .collect();
        let mut used = std::collections::HashSet::new();
        let mut components = Vec::new();
        // start each component where the lowest arc label leaves, so codes
        // produced by `pd_code` come back with the same traversal
        let mut entry_slots = entry_slots;
        entry_slots.sort_by_key(|&s| {
            let out = exit_of(s.0, s.1);
            code.crossings[out.0][out.1]
        });
        for &start in &entry_slots {
            if used.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut slot = start;
            loop {
                if !used.insert(slot) {
                    break;
                }
                comp.push(Visit {
                    crossing: slot.0,
                    over: slot.1 != 0,
                });
                let out = exit_of(slot.0, slot.1);
                let label = code.crossings[out.0][out.1];
                slot = slots_of_label[&label]
                    .iter()
                    .copied()
                    .find(|&s| s != out)
                    .unwrap();
                if is_in(slot.0, slot.1, &over_enters_d) != Some(true) {
                    return domain(format!("PD arc {label} is not consistently oriented"));
                }
            }
            if slot != start {
                return domain("PD code does not close up into components");
            }
            components.push(comp);
        }
        components.extend(std::iter::repeat_with(Vec::new).take(code.free_loops));
        let signs = over_enters_d
            .iter()
            .map(|d| if d.unwrap() { 1 } else { -1 })
            .collect();
        Self::from_parts(signs, components)
    }

    /// The diagram of `cycle` drawn in the canonical book representation.
    pub fn of_cycle(emb: &BookEmbedding, cycle: &Cycle) -> Result<Self> {
        diagram_of_cycle(emb, cycle)
    }
}

type OrderKey = (u8, i64, u8, i64);

/// Draws `cycle` as a planar diagram with over/under data from the book.
///
/// Vertices sit on a horizontal line at `x = label`. Every chord `(a,b)` is
/// drawn as an arch: up at `a`, across at height `h(a,b)`, down at `b`, with
/// `h` increasing in chord length. Two interleaved chords then meet exactly
/// once, where the taller chord's vertical leg cuts the shorter chord's
/// horizontal run. That fixes the order of crossings along each chord with
/// integer comparisons only.
pub fn diagram_of_cycle(emb: &BookEmbedding, cycle: &Cycle) -> Result<Diagram> {
    if cycle.len() < 3 {
        return domain("cycle of length < 3");
    }
    if cycle.n() > emb.n() {
        return domain(format!(
            "cycle lives in K_{} but the embedding is K_{}",
            cycle.n(),
            emb.n()
        ));
    }
    for &v in cycle.vertices() {
        emb.check_vertex(v)?;
    }
    let n = emb.n() as i64;
    let steps: Vec<(u32, u32)> = cycle.steps().collect();
    let chords: Vec<Edge> = cycle.edges().collect();
    let forward: Vec<bool> = steps.iter().map(|(u, v)| u < v).collect();
    let height = |e: Edge| (e.high() - e.low()) as i64 * (n + 1) + e.low() as i64;

    // (sort key along the chord from low to high endpoint, crossing id)
    let mut along: Vec<Vec<(OrderKey, usize)>> = vec![Vec::new(); chords.len()];
    let mut signs = Vec::new();
    let mut edges = Vec::new();
    let mut over_chord = Vec::new();
    for s in 0..chords.len() {
        for t in s + 1..chords.len() {
            let (es, et) = (chords[s], chords[t]);
            if !crosses(es, et) {
                continue;
            }
            let id = signs.len();
            let (tall, short) = if height(es) > height(et) { (s, t) } else { (t, s) };
            let (te, se) = (chords[tall], chords[short]);
            // the tall chord's leg at its endpoint lying inside the short chord
            let left_leg = se.low() < te.low() && te.low() < se.high();
            let leg_x = if left_leg { te.low() } else { te.high() };
            let tall_key = if left_leg {
                (0, height(se), 0, 0)
            } else {
                (2, -height(se), 0, 0)
            };
            // legs of chords ending at x sit just left of x, the taller one
            // closer; legs of chords starting at x sit just right of x, the
            // taller one closer
            let short_key = if left_leg {
                (1, leg_x as i64, 1, -height(te))
            } else {
                (1, leg_x as i64, 0, height(te))
            };
            along[tall].push((tall_key, id));
            along[short].push((short_key, id));

            let d_tall: i64 = if forward[tall] { 1 } else { -1 };
            let d_short: i64 = if forward[short] { 1 } else { -1 };
            // leg direction: up on the left leg when moving low -> high
            let leg_dy = if left_leg { d_tall } else { -d_tall };
            let tall_over = emb.is_over(te, se);
            // z-component of over x under
            let cross = if tall_over {
                -leg_dy * d_short
            } else {
                d_short * leg_dy
            };
            signs.push(if cross > 0 { 1 } else { -1 });
            over_chord.push(if tall_over { tall } else { short });
            edges.push(if tall_over {
                CrossingEdges { over: te, under: se }
            } else {
                CrossingEdges { over: se, under: te }
            });
        }
    }
    let mut traversal = Vec::with_capacity(2 * signs.len());
    for (k, list) in along.iter_mut().enumerate() {
        list.sort_unstable();
        let push = |&(_, id): &((u8, i64, u8, i64), usize)| Visit {
            crossing: id,
            over: over_chord[id] == k,
        };
        if forward[k] {
            traversal.extend(list.iter().map(push));
        } else {
            traversal.extend(list.iter().rev().map(push));
        }
    }
    Diagram::with_edges(signs, vec![traversal], Some(edges))
}

/// Signed Gauss code: `+k` over crossing `k`, `-k` under it (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussCode {
    pub components: Vec<Vec<i32>>,
    pub signs: Vec<i8>,
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|c| c.iter().map(i32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", comps.join(" | "))
    }
}

/// DT code: the even partner of visits 1, 3, 5, ...; negative when the even
/// pass goes over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DtCode(pub Vec<i32>);

impl DtCode {
    /// Crossing pairing as `(odd, even, even_is_over)` visit numbers.
    pub fn pairing(&self) -> Vec<(usize, usize, bool)> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &v)| (2 * i + 1, v.unsigned_abs() as usize, v < 0))
            .collect()
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl std::str::FromStr for DtCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(DtCode(Vec::new()));
        }
        let mut offset = 0;
        let mut values = Vec::new();
        for part in s.split(',') {
            let v: i32 = part.trim().parse().map_err(|_| Error::Parse {
                position: offset,
                message: format!("bad DT entry {:?}", part.trim()),
            })?;
            values.push(v);
            offset += part.len() + 1;
        }
        Ok(DtCode(values))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCode {
    pub crossings: Vec<[usize; 4]>,
    /// Crossingless components, which a PD code cannot otherwise express.
    pub free_loops: usize,
}

impl fmt::Display for PdCode {
    /// One crossing per line, `a,b,c,d`, then `loops k` if there are
    /// crossingless components.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.crossings {
            writeln!(f, "{},{},{},{}", x[0], x[1], x[2], x[3])?;
        }
        if self.free_loops > 0 {
            writeln!(f, "loops {}", self.free_loops)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for PdCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut crossings = Vec::new();
        let mut free_loops = 0;
        let mut offset = 0;
        for line in s.lines() {
            let trimmed = line.trim();
            if let Some(k) = trimmed.strip_prefix("loops") {
                free_loops = k.trim().parse().map_err(|_| Error::Parse {
                    position: offset,
                    message: format!("bad loop count {:?}", k.trim()),
                })?;
            } else if !trimmed.is_empty() {
                let labels: Vec<usize> = trimmed
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Parse {
                        position: offset,
                        message: format!("bad PD line {trimmed:?}"),
                    })?;
                let arr: [usize; 4] = labels.try_into().map_err(|_| Error::Parse {
                    position: offset,
                    message: "PD crossings have four arcs".into(),
                })?;
                crossings.push(arr);
            }
            offset += line.len() + 1;
        }
        Ok(PdCode { crossings, free_loops })
    }
}


#[cfg(test)]
mod properties {
    use proptest::prelude::*;

    use super::*;
    use crate::testing::{diagram, hamiltonian};

    proptest! {
        #[test]
        fn codes_round_trip(c in hamiltonian(4..=11)) {
            let d = diagram(&c);
            let plain = Diagram::from_parts(d.signs(), d.components().to_vec()).unwrap();
            prop_assert_eq!(Diagram::from_gauss(&d.gauss_code()).unwrap(), plain.clone());
            prop_assert_eq!(Diagram::from_pd(&d.pd_code()).unwrap(), plain);
            let dt = d.dt_code().unwrap();
            prop_assert_eq!(dt.to_string().parse::<DtCode>().unwrap(), dt);
            let pd = d.pd_code();
            prop_assert_eq!(pd.to_string().parse::<PdCode>().unwrap(), pd);
        }

        #[test]
        fn crossings_are_interleaved_chords(c in hamiltonian(4..=11)) {
            let d = diagram(&c);
            let emb = BookEmbedding::new(c.n()).unwrap();
            let edges: Vec<Edge> = c.edges().collect();
            let mut expected = 0;
            for (i, &e) in edges.iter().enumerate() {
                for &f in &edges[i + 1..] {
                    if crosses(e, f) {
                        expected += 1;
                    }
                }
            }
            prop_assert_eq!(d.crossing_count(), expected);
            for x in d.crossings() {
                let e = x.edges.unwrap();
                prop_assert_eq!(emb.over_edge(e.over, e.under).unwrap(), e.over);
            }
        }

        #[test]
        fn mirror_and_reverse_are_involutions(c in hamiltonian(4..=10)) {
            let d = diagram(&c);
            prop_assert_eq!(d.mirror().mirror(), d.clone());
            prop_assert_eq!(d.mirror().writhe(), -d.writhe());
            prop_assert_eq!(d.reversed().writhe(), d.writhe());
        }
    }
}
