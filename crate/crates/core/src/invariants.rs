//! Alexander polynomial, determinant, Kauffman bracket and Jones polynomial,
//! and identification of knot types by invariant fingerprints.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::braids::BraidWord;
use crate::diagram::Diagram;
use crate::error::{domain, Error, Result};
use crate::poly::LaurentPoly;
use crate::simplify::simplify;

pub const DEFAULT_BRACKET_THRESHOLD: usize = 24;

/// Over-arc data for a knot diagram: for each crossing its over arc, the
/// incoming and the outgoing under arc.
struct Arcs {
    over: Vec<usize>,
    under_in: Vec<usize>,
    under_out: Vec<usize>,
}

fn arcs(d: &Diagram) -> Result<Arcs> {
    if d.component_count() != 1 {
        return domain(format!(
            "Alexander polynomial needs a knot, got {} components",
            d.component_count()
        ));
    }
    let c = d.crossing_count();
    let traversal: Vec<_> = d.traversal().collect();
    // arc k starts right after the k-th under pass
    let mut arc_at = vec![0usize; traversal.len()];
    let mut k = c;
    for (pos, v) in traversal.iter().enumerate() {
        arc_at[pos] = k % c;
        if !v.over {
            k += 1;
        }
    }
    let mut a = Arcs {
        over: vec![0; c],
        under_in: vec![0; c],
        under_out: vec![0; c],
    };
    for (x, crossing) in d.crossings().iter().enumerate() {
        a.over[x] = arc_at[crossing.over_position];
        a.under_in[x] = arc_at[crossing.under_position];
        a.under_out[x] = (arc_at[crossing.under_position] + 1) % c;
    }
    Ok(a)
}

/// Polynomials in `t` with nonnegative exponents, used only inside the
/// determinant.
type Dense = Vec<i128>;

fn dense_trim(mut p: Dense) -> Dense {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn dense_mul(a: &Dense, b: &Dense) -> Result<Dense> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let term = x.checked_mul(y).ok_or_else(overflow)?;
            out[i + j] = out[i + j].checked_add(term).ok_or_else(overflow)?;
        }
    }
    Ok(dense_trim(out))
}

fn dense_sub(a: &Dense, b: &Dense) -> Result<Dense> {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] = x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] = out[i].checked_sub(y).ok_or_else(overflow)?;
    }
    Ok(dense_trim(out))
}

fn dense_div_exact(a: &Dense, b: &Dense) -> Dense {
    if a.is_empty() {
        return Vec::new();
    }
    let lead = *b.last().expect("nonzero divisor");
    let mut rem = a.clone();
    let qlen = rem.len() + 1 - b.len();
    let mut q = vec![0i128; qlen];
    for qi in (0..qlen).rev() {
        let top = rem[qi + b.len() - 1];
        debug_assert_eq!(top % lead, 0, "Bareiss division is exact");
        let f = top / lead;
        q[qi] = f;
        if f != 0 {
            for (k, &bc) in b.iter().enumerate() {
                rem[qi + k] -= f * bc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    dense_trim(q)
}

fn overflow() -> Error {
    Error::Capacity("integer overflow in a determinant".into())
}

/// Fraction-free Gaussian elimination over `Z[t]`.
fn bareiss_poly(mut m: Vec<Vec<Dense>>) -> Result<Dense> {
    let size = m.len();
    if size == 0 {
        return Ok(vec![1]);
    }
    let mut prev: Dense = vec![1];
    let mut negate = false;
    for k in 0..size {
        if m[k][k].is_empty() {
            let Some(r) = (k + 1..size).find(|&r| !m[r][k].is_empty()) else {
                return Ok(Vec::new());
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = dense_sub(&dense_mul(&m[k][k], &m[i][j])?, &dense_mul(&m[i][k], &m[k][j])?)?;
                m[i][j] = dense_div_exact(&num, &prev);
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let mut det = m[size - 1][size - 1].clone();
    if negate {
        det.iter_mut().for_each(|c| *c = -*c);
    }
    Ok(det)
}

fn bareiss_int(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let size = m.len();
    if size == 0 {
        return Ok(1);
    }
    let mut prev = 1i128;
    let mut sign = 1;
    for k in 0..size {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..size).find(|&r| m[r][k] != 0) else {
                return Ok(0);
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let a = m[k][k].checked_mul(m[i][j]).ok_or_else(overflow)?;
                let b = m[i][k].checked_mul(m[k][j]).ok_or_else(overflow)?;
                m[i][j] = a.checked_sub(b).ok_or_else(overflow)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Ok(sign * m[size - 1][size - 1])
}

/// Alexander polynomial from the Fox matrix of the over-arc presentation,
/// normalized symmetric with `Δ(1) = 1`.
pub fn alexander_poly(d: &Diagram) -> Result<LaurentPoly> {
    let a = arcs(d)?;
    let c = d.crossing_count();
    if c == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut m: Vec<Vec<Dense>> = vec![vec![Vec::new(); c]; c];
    let add = |m: &mut Vec<Vec<Dense>>, x: usize, col: usize, p: [i128; 2]| {
        let cell = &mut m[x][col];
        cell.resize(2.max(cell.len()), 0);
        cell[0] += p[0];
        cell[1] += p[1];
        *cell = dense_trim(std::mem::take(cell));
    };
    for (x, crossing) in d.crossings().iter().enumerate() {
        // relation rows: (1-t) x_k + t x_i - x_j, or its negative-crossing
        // counterpart (t-1) x_k + x_i - t x_j
        let (over, inc, out) = if crossing.sign > 0 {
            ([1, -1], [0, 1], [-1, 0])
        } else {
            ([-1, 1], [1, 0], [0, -1])
        };
        add(&mut m, x, a.over[x], over);
        add(&mut m, x, a.under_in[x], inc);
        add(&mut m, x, a.under_out[x], out);
    }
    m.pop();
    for row in &mut m {
        row.pop();
    }
    let det = bareiss_poly(m)?;
    let coeffs = det
        .iter()
        .map(|&v| i64::try_from(v).map_err(|_| overflow()))
        .collect::<Result<Vec<_>>>()?;
    Ok(LaurentPoly::from_dense(0, coeffs).alexander_normalized())
}

/// `|Δ(-1)|`, computed from the integer matrix at `t = -1`.
pub fn determinant(d: &Diagram) -> Result<u64> {
    let a = arcs(d)?;
    let c = d.crossing_count();
    if c == 0 {
        return Ok(1);
    }
    let mut m = vec![vec![0i128; c]; c];
    for (x, crossing) in d.crossings().iter().enumerate() {
        let s = crossing.sign as i128;
        m[x][a.over[x]] += 2 * s;
        m[x][a.under_in[x]] -= s;
        m[x][a.under_out[x]] -= s;
    }
    m.pop();
    for row in &mut m {
        row.pop();
    }
    let det = bareiss_int(m)?;
    u64::try_from(det.unsigned_abs()).map_err(|_| overflow())
}

/// Partial smoothings: open arc label -> label at the other end of its path.
type Matching = Vec<(usize, usize)>;

/// Joins arc ends `x` and `y`; returns whether a closed loop was formed.
fn join(open: &mut HashMap<usize, usize>, x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    if open.get(&x) == Some(&y) {
        open.remove(&x);
        open.remove(&y);
        return true;
    }
    let a = match open.remove(&x) {
        Some(other) => {
            open.remove(&other);
            other
        }
        None => x,
    };
    let b = match open.remove(&y) {
        Some(other) => {
            open.remove(&other);
            other
        }
        None => y,
    };
    open.insert(a, b);
    open.insert(b, a);
    false
}

/// Kauffman bracket `⟨D⟩` in `A`, normalized so a single circle is 1.
///
/// Crossings are smoothed one at a time; states are keyed by how the open
/// arc ends are paired, so equal partial smoothings merge.
pub fn kauffman_bracket(d: &Diagram, threshold: usize) -> Result<LaurentPoly> {
    let c = d.crossing_count();
    if c > threshold {
        return Err(Error::Capacity(format!(
            "{c} crossings exceeds the bracket threshold {threshold}"
        )));
    }
    let loop_value = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let pd = d.pd_code();
    let order = smoothing_order(&pd.crossings);
    let mut states: HashMap<Matching, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    for x in order {
        let [a, b, cc, dd] = pd.crossings[x];
        let mut next: HashMap<Matching, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (matching, poly) in &states {
            for (pairs, shift) in [([(a, b), (cc, dd)], 1), ([(a, dd), (b, cc)], -1)] {
                let mut open: HashMap<usize, usize> = HashMap::with_capacity(matching.len() * 2 + 4);
                for &(u, v) in matching {
                    open.insert(u, v);
                    open.insert(v, u);
                }
                let mut value = poly.shift(shift);
                for (u, v) in pairs {
                    if join(&mut open, u, v) {
                        value = &value * &loop_value;
                    }
                }
                let mut key: Matching = open.into_iter().filter(|(u, v)| u < v).collect();
                key.sort_unstable();
                *next.entry(key).or_insert_with(LaurentPoly::zero) += &value;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    let total = states.remove(&Vec::new()).unwrap_or_else(LaurentPoly::zero);
    let mut bracket = if c == 0 {
        LaurentPoly::one()
    } else {
        total
            .div_exact(&loop_value)
            .expect("a smoothed diagram has at least one loop")
    };
    let free = d.components().iter().filter(|comp| comp.is_empty()).count();
    let extra_circles = if c == 0 { free.saturating_sub(1) } else { free };
    for _ in 0..extra_circles {
        bracket = &bracket * &loop_value;
    }
    Ok(bracket)
}

/// Greedy order: each next crossing shares as many arcs as possible with
/// the ones already smoothed, which keeps the open boundary small.
fn smoothing_order(crossings: &[[usize; 4]]) -> Vec<usize> {
    let c = crossings.len();
    let mut done = vec![false; c];
    let mut seen: HashMap<usize, u8> = HashMap::new();
    let mut order = Vec::with_capacity(c);
    for _ in 0..c {
        let best = (0..c)
            .filter(|&x| !done[x])
            .max_by_key(|&x| {
                let shared = crossings[x].iter().filter(|l| seen.contains_key(l)).count();
                (shared, std::cmp::Reverse(x))
            })
            .unwrap();
        done[best] = true;
        for &l in &crossings[best] {
            *seen.entry(l).or_insert(0) += 1;
        }
        order.push(best);
    }
    order
}

/// Jones polynomial `(-A^3)^{-w} ⟨D⟩` at `A = t^{-1/4}`. For knots the
/// result is in `t`; for links the exponents are half-integers and the
/// result is returned in `t^{1/2}`.
pub fn jones_poly(d: &Diagram, threshold: usize) -> Result<LaurentPoly> {
    let bracket = kauffman_bracket(d, threshold)?;
    let w = d.writhe();
    let mut f = bracket.shift(-3 * w as i32);
    if w % 2 != 0 {
        f = -f;
    }
    let divisor = if d.component_count() == 1 { -4 } else { -2 };
    f.divide_exponents(divisor).ok_or_else(|| {
        Error::Contract(format!("bracket exponents are not multiples of {}", -divisor))
    })
}

fn mirror_canonical(p: LaurentPoly) -> LaurentPoly {
    let m = p.mirror();
    if m < p {
        m
    } else {
        p
    }
}

/// The identification key of a knot or link type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub components: usize,
    /// Zero for links.
    pub alexander: LaurentPoly,
    /// Zero for links.
    pub determinant: u64,
    pub jones: Option<LaurentPoly>,
}

impl Fingerprint {
    /// Computes the fingerprint of an (ideally simplified) diagram. The
    /// Jones polynomial is left out when the diagram is over the bracket
    /// threshold.
    pub fn of(d: &Diagram, threshold: usize) -> Result<Self> {
        let (alexander, determinant) = if d.component_count() == 1 {
            (alexander_poly(d)?, determinant(d)?)
        } else {
            (LaurentPoly::zero(), 0)
        };
        let jones = match jones_poly(d, threshold) {
            Ok(j) => Some(mirror_canonical(j)),
            Err(Error::Capacity(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(Self {
            components: d.component_count(),
            alexander,
            determinant,
            jones,
        })
    }

    pub fn unlink(k: usize) -> Self {
        let circle = LaurentPoly::from_terms([(1, -1), (-1, -1)]);
        let (alexander, determinant, jones) = if k == 1 {
            (LaurentPoly::one(), 1, LaurentPoly::one())
        } else {
            (LaurentPoly::zero(), 0, circle.pow(k as u32 - 1))
        };
        Self {
            components: k,
            alexander,
            determinant,
            jones: Some(mirror_canonical(jones)),
        }
    }

    /// Same invariants, allowing either side to lack a Jones polynomial.
    /// Links carry no Alexander data here, so they only match on Jones.
    pub fn matches(&self, other: &Fingerprint) -> bool {
        if self.components != other.components
            || self.alexander != other.alexander
            || self.determinant != other.determinant
        {
            return false;
        }
        match (&self.jones, &other.jones) {
            (Some(a), Some(b)) => a == b,
            _ => self.components == 1,
        }
    }

    /// One-line text form, `components;alexander;determinant;jones`.
    pub fn canonical_text(&self) -> String {
        format!(
            "{};{};{};{}",
            self.components,
            self.alexander.canonical_text(),
            self.determinant,
            self.jones
                .as_ref()
                .map(LaurentPoly::canonical_text)
                .unwrap_or_else(|| "-".into())
        )
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alexander {}, determinant {}", self.alexander, self.determinant)?;
        if self.components > 1 {
            write!(f, ", {} components", self.components)?;
        }
        match &self.jones {
            Some(j) if self.components == 1 => write!(f, ", jones {j}"),
            Some(j) => write!(f, ", jones {} (in t^1/2)", j.display_in("s")),
            None => write!(f, ", jones not computed"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotName {
    Unknot,
    Trefoil,
    FigureEight,
    K5_1,
    K5_2,
    K6_1,
    K6_2,
    K7_1,
    K8_19,
    K10_124,
    TrefoilSum,
    /// `k >= 2` unlinked circles.
    Unlink(usize),
    Unidentified(Box<Fingerprint>),
}

impl KnotName {
    pub const TABLE: [KnotName; 11] = [
        KnotName::Unknot,
        KnotName::Trefoil,
        KnotName::FigureEight,
        KnotName::K5_1,
        KnotName::K5_2,
        KnotName::K6_1,
        KnotName::K6_2,
        KnotName::K7_1,
        KnotName::K8_19,
        KnotName::K10_124,
        KnotName::TrefoilSum,
    ];

    pub fn is_knotted(&self) -> bool {
        !matches!(self, KnotName::Unknot | KnotName::Unlink(_))
    }

    pub fn is_composite(&self) -> bool {
        matches!(self, KnotName::TrefoilSum)
    }

    pub fn is_identified(&self) -> bool {
        !matches!(self, KnotName::Unidentified(_))
    }
}

impl fmt::Display for KnotName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            KnotName::Unknot => "unknot",
            KnotName::Trefoil => "3_1",
            KnotName::FigureEight => "4_1",
            KnotName::K5_1 => "5_1",
            KnotName::K5_2 => "5_2",
            KnotName::K6_1 => "6_1",
            KnotName::K6_2 => "6_2",
            KnotName::K7_1 => "7_1",
            KnotName::K8_19 => "8_19",
            KnotName::K10_124 => "10_124",
            KnotName::TrefoilSum => "3_1#3_1",
            KnotName::Unlink(k) => return write!(f, "unlink({k})"),
            KnotName::Unidentified(_) => "unidentified",
        };
        f.write_str(s)
    }
}

impl FromStr for KnotName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(name) = Self::TABLE.iter().find(|k| k.to_string() == s) {
            return Ok(name.clone());
        }
        if let Some(k) = s.strip_prefix("unlink(").and_then(|r| r.strip_suffix(')')) {
            if let Ok(k) = k.parse::<usize>() {
                if k >= 2 {
                    return Ok(KnotName::Unlink(k));
                }
            }
        }
        Err(Error::Parse {
            position: 0,
            message: format!("unknown knot name {s:?}"),
        })
    }
}

#[derive(Debug, Clone)]
pub struct ReferenceKnot {
    pub name: KnotName,
    pub diagram: Diagram,
    pub fingerprint: Fingerprint,
}

const FIXTURES: &str = include_str!("../fixtures/reference_knots.txt");

fn parse_fixture_line(line: &str) -> Result<(KnotName, Diagram, Fingerprint)> {
    let bad = |m: String| Error::Fixture(format!("{m} in line {line:?}"));
    let fields: Vec<&str> = line.split(';').map(str::trim).collect();
    let [name, diagram, alexander, det, jones] = fields[..] else {
        return Err(bad("expected five fields".into()));
    };
    let name: KnotName = name.parse().map_err(|e: Error| bad(e.to_string()))?;
    let diagram = if diagram == "trivial" {
        Diagram::unlink(1)
    } else {
        diagram
            .parse::<BraidWord>()
            .map_err(|e| bad(e.to_string()))?
            .closure()
    };
    let stored = Fingerprint {
        components: 1,
        alexander: alexander.parse().map_err(|e: Error| bad(e.to_string()))?,
        determinant: det.parse().map_err(|_| bad(format!("bad determinant {det:?}")))?,
        jones: Some(mirror_canonical(jones.parse().map_err(|e: Error| bad(e.to_string()))?)),
    };
    Ok((name, diagram, stored))
}

/// Loads the reference fixtures and recomputes every fingerprint from its
/// diagram. Any disagreement, or two references sharing a fingerprint, is
/// an error.
pub fn load_reference_table() -> Result<Vec<ReferenceKnot>> {
    let mut table: Vec<ReferenceKnot> = Vec::new();
    for line in FIXTURES.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, diagram, stored) = parse_fixture_line(line)?;
        let computed = Fingerprint::of(&simplify(&diagram), usize::MAX)?;
        if computed != stored {
            return Err(Error::Fixture(format!(
                "{name}: stored fingerprint [{}] but the diagram gives [{}]",
                stored.canonical_text(),
                computed.canonical_text()
            )));
        }
        if let Some(other) = table.iter().find(|r| r.fingerprint.matches(&computed)) {
            return Err(Error::Fixture(format!(
                "{name} and {} share a fingerprint",
                other.name
            )));
        }
        table.push(ReferenceKnot {
            name,
            diagram,
            fingerprint: computed,
        });
    }
    for expected in KnotName::TABLE {
        if !table.iter().any(|r| r.name == expected) {
            return Err(Error::Fixture(format!("no reference for {expected}")));
        }
    }
    Ok(table)
}

/// The reference table, loaded and verified once per process.
///
/// # Panics
/// If the bundled fixtures are inconsistent; this is a build defect, not a
/// runtime condition.
pub fn reference_table() -> &'static [ReferenceKnot] {
    static TABLE: OnceLock<Vec<ReferenceKnot>> = OnceLock::new();
    TABLE.get_or_init(|| load_reference_table().unwrap_or_else(|e| panic!("{e}")))
}

/// Identification pipeline settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Identifier {
    pub bracket_threshold: usize,
}

impl Default for Identifier {
    fn default() -> Self {
        Self {
            bracket_threshold: DEFAULT_BRACKET_THRESHOLD,
        }
    }
}

/// Result of running the pipeline on one diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identification {
    pub name: KnotName,
    /// `None` when the diagram reduced to no crossings.
    pub fingerprint: Option<Fingerprint>,
    pub reduced_crossings: usize,
}

impl Identifier {
    pub fn new(bracket_threshold: usize) -> Self {
        Self { bracket_threshold }
    }

    pub fn identify(&self, d: &Diagram) -> KnotName {
        self.run(d).name
    }

    /// Simplify, take invariants, look the fingerprint up.
    pub fn run(&self, d: &Diagram) -> Identification {
        let s = simplify(d);
        let reduced_crossings = s.crossing_count();
        if reduced_crossings == 0 {
            let k = s.component_count();
            return Identification {
                name: if k == 1 { KnotName::Unknot } else { KnotName::Unlink(k) },
                fingerprint: None,
                reduced_crossings,
            };
        }
        let fingerprint = match Fingerprint::of(&s, self.bracket_threshold) {
            Ok(f) => f,
            Err(e) => panic!("invariants of a valid diagram failed: {e}"),
        };
        let name = self.lookup(&fingerprint);
        Identification {
            name,
            fingerprint: Some(fingerprint),
            reduced_crossings,
        }
    }

    /// Table lookup. A knot with trivial Alexander polynomial is only called
    /// the unknot when its Jones polynomial is known and trivial too.
    pub fn lookup(&self, f: &Fingerprint) -> KnotName {
        let unidentified = || KnotName::Unidentified(Box::new(f.clone()));
        if f.components > 1 {
            return if f.matches(&Fingerprint::unlink(f.components)) {
                KnotName::Unlink(f.components)
            } else {
                unidentified()
            };
        }
        if f.alexander.is_one() && f.jones.is_none() {
            return unidentified();
        }
        let mut hits = reference_table().iter().filter(|r| r.fingerprint.matches(f));
        match (hits.next(), hits.next()) {
            (Some(r), None) => r.name.clone(),
            _ => unidentified(),
        }
    }
}

/// Identifies with default settings.
pub fn identify(d: &Diagram) -> KnotName {
    Identifier::default().identify(d)
}

/// Fingerprint of the simplified diagram, computing Jones whenever the
/// threshold allows. Crossingless diagrams get the unlink fingerprint.
pub fn fingerprint(d: &Diagram, threshold: usize) -> Result<Fingerprint> {
    let s = simplify(d);
    if s.crossing_count() == 0 {
        return Ok(Fingerprint::unlink(s.component_count()));
    }
    Fingerprint::of(&s, threshold)
}


#[cfg(test)]
mod properties {
    use proptest::prelude::*;

    use super::*;
    use crate::testing::{diagram, hamiltonian};

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn fingerprint_ignores_start_direction_and_mirror(c in hamiltonian(7..=10), k in 0usize..10) {
            let f = Fingerprint::of(&diagram(&c), DEFAULT_BRACKET_THRESHOLD).unwrap();
            let rotated = Fingerprint::of(&diagram(&c.rotated(k)), DEFAULT_BRACKET_THRESHOLD).unwrap();
            let reversed = Fingerprint::of(&diagram(&c.reversed()), DEFAULT_BRACKET_THRESHOLD).unwrap();
            let mirrored = Fingerprint::of(&diagram(&c).mirror(), DEFAULT_BRACKET_THRESHOLD).unwrap();
            prop_assert_eq!(&rotated, &f);
            prop_assert_eq!(&reversed, &f);
            prop_assert_eq!(&mirrored, &f);
        }

        #[test]
        fn determinant_is_alexander_at_minus_one(c in hamiltonian(7..=11)) {
            let d = diagram(&c);
            let delta = alexander_poly(&d).unwrap();
            prop_assert_eq!(delta.eval_unit(-1).unsigned_abs(), determinant(&d).unwrap());
        }
    }
}
