//! Identify the knot carried by a cycle, showing each stage of the pipeline.
//!
//!     cargo run --example identify -- 11 "(1,3,6,8,11,5,7,10,2,4,9)"

use knotbook::invariants::DEFAULT_BRACKET_THRESHOLD;
use knotbook::{diagram_of_cycle, simplify, BookEmbedding, Cycle, Fingerprint, Identifier};

fn main() -> knotbook::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(Ok(7), |a| a.parse()).expect("n must be an integer");
    let text = args.next().unwrap_or_else(|| "(1,3,5,7,2,4,6)".into());
    let cycle = Cycle::parse(n, &text)?;

    let d = diagram_of_cycle(&BookEmbedding::new(n)?, &cycle)?;
    println!("{cycle} in K_{n}: {} crossings, writhe {}", d.crossing_count(), d.writhe());
    println!("gauss: {}", d.gauss_code());
    let reduced = simplify(&d);
    println!("after R1/R2: {} crossings, DT {}", reduced.crossing_count(), reduced.dt_code()?);

    let f = Fingerprint::of(&reduced, DEFAULT_BRACKET_THRESHOLD)?;
    println!("fingerprint: {f}");
    println!("knot: {}", Identifier::default().identify(&d));
    Ok(())
}
