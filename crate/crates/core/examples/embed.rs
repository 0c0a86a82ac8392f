//! The canonical book of K_n: which sheet every edge lives on, and which of
//! two crossing edges passes over.
//!
//!     cargo run --example embed -- 9

use knotbook::{BookEmbedding, Edge, SheetIndex};

fn main() -> knotbook::Result<()> {
    let n: u32 = std::env::args().nth(1).map_or(Ok(9), |a| a.parse()).expect("n must be an integer");
    let book = BookEmbedding::new(n)?;
    println!("K_{n} uses {} sheets", book.sheet_count());
    for s in 1..=book.sheet_count() {
        let edges = book.edges_in_sheet(SheetIndex(s))?;
        let list: Vec<String> = edges.iter().map(ToString::to_string).collect();
        println!("S_{s}: {}", list.join(" "));
    }

    let (e, f) = (Edge::new(1, 4)?, Edge::new(2, n)?);
    println!("{e} and {f}: {} passes over", book.over_edge(e, f)?);
    println!("{} crossing pairs all obey the sheet order", book.check_over_rule().expect("consistent"));
    Ok(())
}
