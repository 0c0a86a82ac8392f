//! Checks of the constructive results on concrete instances. Each suite
//! returns one [`Check`] per instance so callers can report them.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braids::{step_cycle_braid, torus_braid};
use crate::census::{enumerate_hamiltonian, DEFAULT_MAX_N};
use crate::constructions::{
    composite_cycle, extension_family, insert_vertex, paper_composites, stable_cycle, step_cycle,
};
use crate::cycle::Cycle;
use crate::diagram::{diagram_of_cycle, Diagram};
use crate::embedding::BookEmbedding;
use crate::error::Result;
use crate::invariants::{fingerprint, Fingerprint, Identifier, KnotName};

pub const DEFAULT_SEED: u64 = 1_729;
pub const TORUS_BRACKET_THRESHOLD: usize = 64;
pub const TORUS_INSTANCES: [(u32, u32); 6] = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.label, self.detail)
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn cycle_diagram(c: &Cycle) -> Result<Diagram> {
    diagram_of_cycle(&BookEmbedding::new(c.n())?, c)
}

fn cycle_fingerprint(c: &Cycle, id: &Identifier) -> Result<Fingerprint> {
    fingerprint(&cycle_diagram(c)?, id.bracket_threshold)
}

/// Closed-form over/under rule against sheet stacking for `3..=max_n`.
pub fn lemma_checks(max_n: u32) -> Vec<Check> {
    (3..=max_n)
        .map(|n| {
            let emb = BookEmbedding::new(n).expect("n >= 3");
            match emb.check_over_rule() {
                Ok(pairs) => Check::new(format!("K_{n}"), true, format!("{pairs} crossing pairs agree")),
                Err((e1, e2)) => Check::new(format!("K_{n}"), false, format!("{e1} vs {e2} disagree")),
            }
        })
        .collect()
}

/// The step-`p` cycle of `K_{2p+q}`, its braid word, and the `(p,q)` torus
/// braid all carry the same knot.
///
/// Exact equality needs the Jones polynomial on every side, so the bracket
/// threshold is raised to at least [`TORUS_BRACKET_THRESHOLD`] here.
pub fn torus_checks(instances: &[(u32, u32)], id: &Identifier) -> Result<Vec<Check>> {
    let id = &Identifier::new(id.bracket_threshold.max(TORUS_BRACKET_THRESHOLD));
    let mut out = Vec::new();
    for &(p, q) in instances {
        let n = 2 * p + q;
        let cycle = step_cycle(n, p)?;
        let from_cycle = cycle_fingerprint(&cycle, id)?;
        let from_torus = fingerprint(&torus_braid(p, q)?.closure(), id.bracket_threshold)?;
        let from_word = fingerprint(&step_cycle_braid(n, p)?.closure(), id.bracket_threshold)?;
        let name = id.lookup(&from_cycle);
        let passed = from_cycle.jones.is_some() && from_cycle == from_torus && from_word == from_torus;
        out.push(Check::new(
            format!("T({p},{q}) in K_{n}"),
            passed,
            format!("{cycle} is {name} [{}]", from_cycle.canonical_text()),
        ));
    }
    Ok(out)
}

/// The explicit composite cycles, plus connected sums built by
/// [`composite_cycle`] against the product of the summands' invariants.
pub fn composite_checks(id: &Identifier) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (n, cycle) in paper_composites(16)? {
        let name = id.identify(&cycle_diagram(&cycle)?);
        out.push(Check::new(
            format!("K_{n} witness"),
            name == KnotName::TrefoilSum,
            format!("{cycle} is {name}"),
        ));
    }
    let trefoil = Cycle::new(7, vec![1, 3, 5, 7, 2, 4, 6])?;
    let figure_eight = first_hamiltonian(9, KnotName::FigureEight, id)?;
    let unknot = Cycle::new(7, (1..=7).collect())?;
    for (alpha, beta) in [(&trefoil, &trefoil), (&trefoil, &figure_eight), (&unknot, &unknot)] {
        let sum = composite_cycle(alpha, beta)?;
        let (fa, fb, fs) = (
            cycle_fingerprint(alpha, id)?,
            cycle_fingerprint(beta, id)?,
            cycle_fingerprint(&sum, id)?,
        );
        let product = &fa.alexander * &fb.alexander;
        let passed = fs.alexander == product && fs.determinant == fa.determinant * fb.determinant;
        out.push(Check::new(
            format!("{} # {}", id.lookup(&fa), id.lookup(&fb)),
            passed,
            format!("{sum} in K_{}: alexander {}, determinant {}", sum.n(), fs.alexander, fs.determinant),
        ));
    }
    Ok(out)
}

/// The first Hamiltonian cycle of `K_n` (in stream order) of the given type.
pub fn first_hamiltonian(n: u32, name: KnotName, id: &Identifier) -> Result<Cycle> {
    let emb = BookEmbedding::new(n)?;
    enumerate_hamiltonian(n)?
        .find(|c| id.identify(&diagram_of_cycle(&emb, c).expect("valid")) == name)
        .ok_or_else(|| crate::error::Error::Domain(format!("no Hamiltonian {name} in K_{n}")))
}

pub fn random_hamiltonian(n: u32, rng: &mut impl Rng) -> Cycle {
    let mut rest: Vec<u32> = (2..=n).collect();
    rest.shuffle(rng);
    let mut v = vec![1];
    v.extend(rest);
    Cycle::new(n, v).expect("a permutation of 1..=n")
}

/// Random cycles of `K_n`, `7 <= n <= 10`: each one is moved into a larger
/// book, and a cycle missing one vertex of `K_{n+1}` has that vertex spliced
/// in. Both must keep their fingerprint. Knotted cycles are rare, so every
/// other sample is redrawn until it is knotted. Returns one check per sample
/// that failed, plus a summary line.
pub fn extension_checks(samples: usize, seed: u64, id: &Identifier) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut knotted = 0;
    for sample in 0..samples {
        let n = rng.gen_range(7..=10);
        let (c, before) = loop {
            let c = random_hamiltonian(n, &mut rng);
            let f = cycle_fingerprint(&c, id)?;
            if sample % 2 == 0 || id.lookup(&f).is_knotted() {
                break (c, f);
            }
        };
        if id.lookup(&before).is_knotted() {
            knotted += 1;
        }
        let big_n = rng.gen_range(n..=DEFAULT_MAX_N);
        let moved = stable_cycle(&c, big_n)?;
        let after = cycle_fingerprint(&moved, id)?;
        if !before.matches(&after) {
            out.push(Check::new(format!("stable {c} into K_{big_n}"), false, "fingerprint changed"));
        }

        // a cycle of K_{n+1} through every vertex but `missing`
        let missing = rng.gen_range(1..=n + 1);
        let relabel: Vec<u32> = (1..=n + 1).filter(|&v| v != missing).collect();
        let partial = Cycle::new(n + 1, c.vertices().iter().map(|&v| relabel[v as usize - 1]).collect())?;
        let i = if missing == 1 { n + 1 } else { missing - 1 };
        let extended = insert_vertex(&partial, i)?;
        let before = cycle_fingerprint(&partial, id)?;
        let after = cycle_fingerprint(&extended, id)?;
        if !before.matches(&after) {
            out.push(Check::new(format!("insert {} into {partial}", i % (n + 1) + 1), false, "fingerprint changed"));
        }
    }
    let failures = out.len();
    out.push(Check::new(
        "extension invariance",
        failures == 0,
        format!("{samples} random cycles ({knotted} knotted), seed {seed}, {failures} failures"),
    ));
    Ok(out)
}

/// Extension families of the `K_7` trefoil against the `2^k C(7+k, k)`
/// lower bound.
pub fn family_checks(ks: &[u32], id: &Identifier) -> Result<Vec<Check>> {
    let trefoil = Cycle::new(7, vec![1, 3, 5, 7, 2, 4, 6])?;
    let mut out = Vec::new();
    for &k in ks {
        let family = extension_family(&trefoil, 7, k)?;
        let bound = (1u64 << k) * crate::census::binomial(7 + k as u64, k as u64);
        let mut wrong = None;
        for c in &family {
            let name = id.identify(&cycle_diagram(c)?);
            if name != KnotName::Trefoil {
                wrong = Some((c.clone(), name));
                break;
            }
        }
        let passed = family.len() as u64 >= bound && wrong.is_none();
        let detail = match wrong {
            Some((c, name)) => format!("{c} is {name}, not 3_1"),
            None => format!("{} distinct trefoils in K_{}, bound {bound}", family.len(), 7 + k),
        };
        out.push(Check::new(format!("family k={k}"), passed, detail));
    }
    Ok(out)
}
