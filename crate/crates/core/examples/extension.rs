//! Moving a knotted cycle into bigger books: relabelling into K_N and
//! splicing new vertices in both keep the knot type, and the spliced
//! cycles give at least 2^k C(n+k, k) distinct copies in K_{n+k}.
//!
//!     cargo run --example extension

use knotbook::census::binomial;
use knotbook::constructions::{extension_family, stable_cycle};
use knotbook::verify::cycle_diagram;
use knotbook::{Cycle, Identifier};

fn main() -> knotbook::Result<()> {
    let id = Identifier::default();
    let trefoil = Cycle::new(7, vec![1, 3, 5, 7, 2, 4, 6])?;
    for big_n in [8, 10, 12] {
        let moved = stable_cycle(&trefoil, big_n)?;
        println!("{moved} in K_{big_n}: {}", id.identify(&cycle_diagram(&moved)?));
    }
    for k in 1..=3 {
        let family = extension_family(&trefoil, 7, k)?;
        let all_trefoils = family
            .iter()
            .all(|c| id.identify(&cycle_diagram(c).expect("valid")) == knotbook::KnotName::Trefoil);
        let bound = (1u64 << k) * binomial(7 + k as u64, k as u64);
        println!(
            "k={k}: {} Hamiltonian trefoils in K_{} (bound {bound}), all trefoils: {all_trefoils}",
            family.len(),
            7 + k
        );
    }
    Ok(())
}
