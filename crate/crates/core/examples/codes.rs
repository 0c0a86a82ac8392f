//! Gauss, DT and PD codes of a cycle's diagram, and the round trip back to
//! a diagram from each text form.
//!
//!     cargo run --example codes

use knotbook::diagram::{DtCode, PdCode};
use knotbook::{diagram_of_cycle, simplify, BookEmbedding, Cycle, Diagram};

fn main() -> knotbook::Result<()> {
    let cycle = Cycle::parse(9, "(1,3,5,7,9,2,4,6,8)")?;
    let d = simplify(&diagram_of_cycle(&BookEmbedding::new(9)?, &cycle)?);
    let gauss = d.gauss_code();
    let dt = d.dt_code()?;
    let pd = d.pd_code();
    println!("{cycle}, reduced to {} crossings", d.crossing_count());
    println!("gauss: {gauss}");
    println!("dt: {dt}");
    print!("pd:\n{pd}");

    let back = Diagram::from_pd(&pd.to_string().parse::<PdCode>()?)?;
    println!("PD text round trip: {}", back.pd_code() == pd);
    println!("Gauss round trip keeps writhe: {}", Diagram::from_gauss(&gauss)?.writhe() == d.writhe());
    println!("DT parses back: {}", dt.to_string().parse::<DtCode>()? == dt);
    Ok(())
}
