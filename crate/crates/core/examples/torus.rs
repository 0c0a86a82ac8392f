//! Step cycles against torus braids: the cycle that jumps p vertices at a
//! time through K_{2p+q} carries the (p,q) torus knot.
//!
//!     cargo run --example torus

use knotbook::braids::{step_cycle_braid, torus_braid};
use knotbook::constructions::step_cycle;
use knotbook::invariants::fingerprint;
use knotbook::verify::cycle_diagram;
use knotbook::Identifier;

fn main() -> knotbook::Result<()> {
    let id = Identifier::new(64);
    for (p, q) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5)] {
        let n = 2 * p + q;
        let cycle = step_cycle(n, p)?;
        let from_cycle = fingerprint(&cycle_diagram(&cycle)?, id.bracket_threshold)?;
        let torus = torus_braid(p, q)?;
        let from_braid = fingerprint(&torus.closure(), id.bracket_threshold)?;
        println!(
            "T({p},{q}) = {:<7} {cycle} in K_{n}; braid {torus}; cycle word {}; same fingerprint: {}",
            id.lookup(&from_cycle).to_string(),
            step_cycle_braid(n, p)?.free_reduce(),
            from_cycle == from_braid,
        );
    }
    Ok(())
}
