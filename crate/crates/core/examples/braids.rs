//! Braid words and their closures: parse a word, reduce it, close it up
//! and identify the result.
//!
//!     cargo run --example braids -- "3: 1 2 1 2 1 2 1 2 1 2"

use knotbook::braids::BraidWord;
use knotbook::{simplify, Identifier};

fn main() -> knotbook::Result<()> {
    let words: Vec<String> = match std::env::args().nth(1) {
        Some(w) => vec![w],
        None => ["2: 1 1 1", "3: 1 -2 1 -2", "2: 1 -1 1 1 1", "3: 1 1 1 2 2 2", "2: 1 1"]
            .map(String::from)
            .to_vec(),
    };
    let id = Identifier::default();
    for text in words {
        let word: BraidWord = text.parse()?;
        let reduced = word.free_reduce();
        let closure = word.closure();
        println!(
            "{word} -> {reduced}: {} component(s), {} crossings, {} after R1/R2, {}",
            closure.component_count(),
            closure.crossing_count(),
            simplify(&closure).crossing_count(),
            id.identify(&closure)
        );
    }
    Ok(())
}
