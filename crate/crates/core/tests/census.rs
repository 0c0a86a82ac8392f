use std::fs;

use knotbook::census::{enumerate_all_cycles, run_census, shards, CensusConfig};
use knotbook::{Error, Identifier, KnotName};

fn config(checkpoint: Option<std::path::PathBuf>, workers: usize) -> CensusConfig {
    CensusConfig {
        workers,
        checkpoint,
        ..CensusConfig::default()
    }
}

#[test]
fn workers_do_not_change_counts() {
    let one = run_census(9, &config(None, 1)).unwrap();
    let four = run_census(9, &config(None, 4)).unwrap();
    assert_eq!(one, four);
    assert_eq!(one.cycles, 20160);
}

#[test]
fn resume_matches_uninterrupted_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k9.ckpt");
    let full = run_census(9, &config(Some(path.clone()), 2)).unwrap();
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + shards(9).len());

    // keep the header and a third of the shard records, as if interrupted
    let kept = lines[..1 + lines.len() / 3].join("\n") + "\n";
    fs::write(&path, kept).unwrap();
    let resumed = run_census(9, &config(Some(path.clone()), 1)).unwrap();
    assert_eq!(resumed, full);
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), lines.len());

    // a complete checkpoint needs no work at all
    assert_eq!(run_census(9, &config(Some(path), 1)).unwrap(), full);
}

#[test]
fn corrupt_checkpoints_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k8.ckpt");
    run_census(8, &config(Some(path.clone()), 1)).unwrap();
    let good = fs::read_to_string(&path).unwrap();

    fs::write(&path, format!("{good}{{not json\n")).unwrap();
    assert!(matches!(run_census(8, &config(Some(path.clone()), 1)), Err(Error::Checkpoint(_))));

    fs::write(&path, "garbage\n").unwrap();
    assert!(matches!(run_census(8, &config(Some(path.clone()), 1)), Err(Error::Checkpoint(_))));

    // a checkpoint of another book
    fs::write(&path, &good).unwrap();
    assert!(matches!(run_census(9, &config(Some(path.clone()), 1)), Err(Error::Checkpoint(_))));

    let first_record = good.lines().nth(1).unwrap();
    fs::write(&path, format!("{good}{first_record}\n")).unwrap();
    assert!(matches!(run_census(8, &config(Some(path), 1)), Err(Error::Checkpoint(_))));
}

#[test]
fn size_limits() {
    assert!(matches!(run_census(13, &CensusConfig::default()), Err(Error::Capacity(_))));
    assert!(matches!(enumerate_all_cycles(10), Err(Error::Capacity(_))));
    assert!(run_census(2, &CensusConfig::default()).is_err());
}

#[test]
fn strict_mode_fails_on_unknown_types() {
    // without the bracket, diagrams with trivial Alexander polynomial that
    // R1/R2 cannot unknot stay unidentified
    let blind = CensusConfig {
        identifier: Identifier::new(0),
        ..CensusConfig::default()
    };
    assert!(matches!(run_census(9, &blind), Err(Error::Contract(_))));
    let loose = CensusConfig { strict: false, ..blind };
    let r = run_census(9, &loose).unwrap();
    assert_eq!(r.count(&KnotName::Trefoil), 342);
    assert_eq!(r.unidentified.len(), 1);
    assert!(r.unidentified[0].fingerprint.jones.is_none());
    assert!(r.to_csv().contains("unidentified["));
}
