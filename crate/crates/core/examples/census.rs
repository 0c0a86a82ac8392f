//! Count the knot types over every Hamiltonian cycle of K_n, optionally
//! with several workers and a resumable checkpoint.
//!
//!     cargo run --release --example census -- 10 4 /tmp/k10.ckpt

use std::path::PathBuf;

use knotbook::census::{run_census, total_knotted, CensusConfig};

fn main() -> knotbook::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(Ok(9), |a| a.parse()).expect("n must be an integer");
    let workers: usize = args.next().map_or(Ok(1), |a| a.parse()).expect("workers must be an integer");
    let checkpoint = args.next().map(PathBuf::from);

    let mut records = Vec::new();
    for j in 7..n {
        records.push(run_census(j, &CensusConfig { workers, ..CensusConfig::default() })?);
    }
    let config = CensusConfig {
        workers,
        checkpoint,
        ..CensusConfig::default()
    };
    let mut record = run_census(n, &config)?;
    records.push(record.clone());
    record.total_knotted = Some(total_knotted(&records, n)?);
    print!("{}", record.to_text());
    Ok(())
}
