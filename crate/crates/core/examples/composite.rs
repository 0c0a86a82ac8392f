//! Connected sums: the explicit trefoil composites in K_12, K_13 and K_14,
//! and the general construction that joins a cycle of K_p and one of K_q
//! inside K_{p+q+1}.
//!
//!     cargo run --example composite

use knotbook::constructions::{composite_cycle, paper_composites};
use knotbook::invariants::fingerprint;
use knotbook::verify::{cycle_diagram, first_hamiltonian};
use knotbook::{Cycle, Identifier, KnotName};

fn main() -> knotbook::Result<()> {
    let id = Identifier::default();
    for (n, cycle) in paper_composites(14)? {
        println!("K_{n}: {cycle} is {}", id.identify(&cycle_diagram(&cycle)?));
    }

    let trefoil = Cycle::new(7, vec![1, 3, 5, 7, 2, 4, 6])?;
    let figure_eight = first_hamiltonian(9, KnotName::FigureEight, &id)?;
    let sum = composite_cycle(&trefoil, &figure_eight)?;
    let f = fingerprint(&cycle_diagram(&sum)?, id.bracket_threshold)?;
    println!("3_1 {trefoil} # 4_1 {figure_eight}");
    println!("  = {sum} in K_{}", sum.n());
    println!("  alexander {}, determinant {}", f.alexander, f.determinant);
    Ok(())
}
