//! Knot types over all Hamiltonian cycles of the canonical book.
//!
//! Cycles are generated directly in canonical form (start at 1, second
//! vertex smaller than the last), so each undirected cycle appears once.
//! The stream is cut into shards by its first two free choices; workers
//! pull shards from a shared counter and the per-shard tallies are merged
//! in shard order, so the result does not depend on scheduling.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::cycle::Cycle;
use crate::diagram::diagram_of_cycle;
use crate::embedding::BookEmbedding;
use crate::error::{precondition, Error, Result};
use crate::invariants::{reference_table, Fingerprint, Identifier, KnotName};
use crate::simplify::simplify;

pub const DEFAULT_MAX_N: u32 = 12;
const CHECKPOINT_FORMAT: &str = "knotbook-census-checkpoint";
const CHECKPOINT_VERSION: u32 = 1;

/// One block of canonical cycles: those starting `(1, second, third, ...)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shard {
    pub second: u32,
    pub third: u32,
}

/// Shards of the Hamiltonian cycles of `K_n`, in stream order.
pub fn shards(n: u32) -> Vec<Shard> {
    let mut out = Vec::new();
    for second in 2..=n {
        for third in 2..=n {
            if third != second {
                out.push(Shard { second, third });
            }
        }
    }
    out
}

fn check_size(n: u32, max_n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::Domain(format!("K_{n} has no cycles")));
    }
    if n > max_n {
        return Err(Error::Capacity(format!(
            "Hamiltonian enumeration of K_{n} is above the configured maximum {max_n}"
        )));
    }
    Ok(())
}

/// Calls `f` on every canonical Hamiltonian cycle of `K_n` in the shard,
/// in lexicographic order.
pub fn for_each_in_shard(n: u32, shard: Shard, mut f: impl FnMut(&[u32])) {
    let Shard { second, third } = shard;
    let mut path = vec![1, second, third];
    if n == 3 {
        if third > second {
            f(&path);
        }
        return;
    }
    let mut used = vec![false; n as usize + 1];
    for &v in &path {
        used[v as usize] = true;
    }
    fn rec(n: u32, second: u32, path: &mut Vec<u32>, used: &mut [bool], f: &mut impl FnMut(&[u32])) {
        let last_slot = path.len() + 1 == n as usize;
        for v in 2..=n {
            if used[v as usize] || (last_slot && v < second) {
                continue;
            }
            if last_slot {
                path.push(v);
                f(path);
                path.pop();
                continue;
            }
            used[v as usize] = true;
            path.push(v);
            rec(n, second, path, used, f);
            path.pop();
            used[v as usize] = false;
        }
    }
    rec(n, second, &mut path, &mut used, &mut f);
}

/// Every Hamiltonian cycle of `K_n` once, canonical, in lexicographic order.
pub fn enumerate_hamiltonian(n: u32) -> Result<impl Iterator<Item = Cycle>> {
    enumerate_hamiltonian_up_to(n, DEFAULT_MAX_N)
}

pub fn enumerate_hamiltonian_up_to(n: u32, max_n: u32) -> Result<impl Iterator<Item = Cycle>> {
    check_size(n, max_n)?;
    Ok(shards(n).into_iter().flat_map(move |shard| {
        let mut block = Vec::new();
        for_each_in_shard(n, shard, |v| block.push(Cycle::from_raw(n, v.to_vec())));
        block
    }))
}

/// The shards worker `index` of `workers` takes under a static split.
pub fn shard_slice(n: u32, index: usize, workers: usize) -> Vec<Shard> {
    shards(n).into_iter().skip(index).step_by(workers.max(1)).collect()
}

/// Every cycle of every length `3..=n` in `K_n`, canonical. Guarded to
/// `n <= 9`.
pub fn enumerate_all_cycles(n: u32) -> Result<Vec<Cycle>> {
    if n > 9 {
        return Err(Error::Capacity(format!("all-cycle enumeration is limited to n <= 9, got {n}")));
    }
    check_size(n, 9)?;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones();
        if k < 3 {
            continue;
        }
        let labels: Vec<u32> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        for cycle in enumerate_hamiltonian_up_to(k, k)? {
            let v = cycle.vertices().iter().map(|&x| labels[x as usize - 1]).collect();
            out.push(Cycle::from_raw(n, v));
        }
    }
    Ok(out)
}

/// Identifies one cycle, skipping invariants where the outcome is forced:
/// fewer than seven vertices, or fewer than three crossings after
/// reduction, always give the unknot.
pub fn classify(emb: &BookEmbedding, cycle: &Cycle, identifier: &Identifier) -> (KnotName, Option<Fingerprint>) {
    if cycle.len() < 7 {
        return (KnotName::Unknot, None);
    }
    let d = diagram_of_cycle(emb, cycle).expect("census cycles are valid");
    if d.crossing_count() < 3 {
        return (KnotName::Unknot, None);
    }
    let s = simplify(&d);
    if s.crossing_count() < 3 {
        return (KnotName::Unknot, None);
    }
    let run = identifier.run(&s);
    (run.name, run.fingerprint)
}

/// An invariant fingerprint no reference matched, with how often it
/// occurred and the smallest cycle carrying it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unidentified {
    pub fingerprint: Fingerprint,
    pub count: u64,
    pub example: Cycle,
}

/// Tallies for some set of cycles.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub cycles: u64,
    pub counts: BTreeMap<String, u64>,
    /// Keyed by the fingerprint's canonical text.
    pub unidentified: BTreeMap<String, Unidentified>,
}

impl Tally {
    fn record(&mut self, cycle: &Cycle, name: KnotName, fingerprint: Option<Fingerprint>) {
        self.cycles += 1;
        match name {
            KnotName::Unidentified(f) => {
                let f = fingerprint.unwrap_or(*f);
                let entry = self
                    .unidentified
                    .entry(f.canonical_text())
                    .or_insert_with(|| Unidentified {
                        fingerprint: f,
                        count: 0,
                        example: cycle.clone(),
                    });
                entry.count += 1;
                if cycle < &entry.example {
                    entry.example = cycle.clone();
                }
            }
            name => *self.counts.entry(name.to_string()).or_insert(0) += 1,
        }
    }

    pub fn merge(&mut self, other: &Tally) {
        self.cycles += other.cycles;
        for (k, v) in &other.counts {
            *self.counts.entry(k.clone()).or_insert(0) += v;
        }
        for (k, u) in &other.unidentified {
            match self.unidentified.get_mut(k) {
                Some(mine) => {
                    mine.count += u.count;
                    if u.example < mine.example {
                        mine.example = u.example.clone();
                    }
                }
                None => {
                    self.unidentified.insert(k.clone(), u.clone());
                }
            }
        }
    }
}

/// Census of the Hamiltonian cycles of `K_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: u32,
    pub cycles: u64,
    /// Identified knot types (the unknot included) and their counts.
    pub counts: BTreeMap<String, u64>,
    pub unidentified: Vec<Unidentified>,
    /// Knotted cycles of every length; filled in when the censuses of all
    /// smaller `n` from 7 on are known.
    pub total_knotted: Option<u64>,
}

impl CensusRecord {
    fn from_tally(n: u32, tally: Tally) -> Self {
        Self {
            n,
            cycles: tally.cycles,
            counts: tally.counts,
            unidentified: tally.unidentified.into_values().collect(),
            total_knotted: None,
        }
    }

    pub fn count(&self, name: &KnotName) -> u64 {
        self.counts.get(&name.to_string()).copied().unwrap_or(0)
    }

    /// Knotted Hamiltonian cycles, unidentified ones included.
    pub fn f_n(&self) -> u64 {
        let named: u64 = self
            .counts
            .iter()
            .filter(|(k, _)| k.parse::<KnotName>().map(|n| n.is_knotted()).unwrap_or(true))
            .map(|(_, v)| v)
            .sum();
        named + self.unidentified.iter().map(|u| u.count).sum::<u64>()
    }

    /// Counts in table order: the reference names first, anything else
    /// after.
    pub fn ordered_counts(&self) -> Vec<(String, u64)> {
        let mut rows: Vec<(String, u64)> = KnotName::TABLE
            .iter()
            .filter_map(|k| self.counts.get(&k.to_string()).map(|&c| (k.to_string(), c)))
            .collect();
        for (k, &c) in &self.counts {
            if !rows.iter().any(|(r, _)| r == k) {
                rows.push((k.clone(), c));
            }
        }
        rows
    }

    /// `n,knot_name,count`, one row per knot type; unidentified types are
    /// named by their fingerprint.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,knot_name,count\n");
        for (name, count) in self.ordered_counts() {
            writeln!(out, "{},{},{}", self.n, name, count).unwrap();
        }
        for u in &self.unidentified {
            writeln!(out, "{},unidentified[{}],{}", self.n, u.fingerprint.canonical_text(), u.count).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let table = reference_table();
        let counts: Vec<serde_json::Value> = self
            .ordered_counts()
            .into_iter()
            .map(|(name, count)| {
                let fingerprint = table
                    .iter()
                    .find(|r| r.name.to_string() == name)
                    .map(|r| serde_json::to_value(&r.fingerprint).unwrap())
                    .unwrap_or(serde_json::Value::Null);
                serde_json::json!({ "knot": name, "count": count, "fingerprint": fingerprint })
            })
            .collect();
        let value = serde_json::json!({
            "n": self.n,
            "cycles": self.cycles,
            "f_n": self.f_n(),
            "total_knotted": self.total_knotted,
            "counts": counts,
            "unidentified": self.unidentified,
        });
        serde_json::to_string_pretty(&value).unwrap()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("K_{}: {} Hamiltonian cycles\n", self.n, self.cycles);
        for (name, count) in self.ordered_counts() {
            writeln!(out, "  {name:<10} {count}").unwrap();
        }
        for u in &self.unidentified {
            writeln!(out, "  unidentified {} (e.g. {}): {}", u.fingerprint, u.example, u.count).unwrap();
        }
        writeln!(out, "  knotted    {}", self.f_n()).unwrap();
        if let Some(t) = self.total_knotted {
            writeln!(out, "  knotted cycles of all lengths {t}").unwrap();
        }
        out
    }
}

/// `Σ_{j=7..n} C(n,j) f_j`: every `j`-subset of vertices carries a copy of
/// `K_j`, so knotted cycles of all lengths are counted from the
/// Hamiltonian censuses of the smaller books.
pub fn total_knotted(records: &[CensusRecord], n: u32) -> Result<u64> {
    let mut total = 0u64;
    for j in 7..=n {
        let Some(r) = records.iter().find(|r| r.n == j) else {
            return precondition(format!("no census for K_{j}"));
        };
        total += binomial(n as u64, j as u64) * r.f_n();
    }
    Ok(total)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub workers: usize,
    pub checkpoint: Option<PathBuf>,
    pub identifier: Identifier,
    /// Fail when any fingerprint is not in the reference table.
    pub strict: bool,
    pub max_n: u32,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self {
            workers: 1,
            checkpoint: None,
            identifier: Identifier::default(),
            strict: true,
            max_n: DEFAULT_MAX_N,
        }
    }
}

/// Tallies one shard.
pub fn census_shard(n: u32, shard: Shard, identifier: &Identifier) -> Tally {
    let emb = BookEmbedding::new(n).expect("n >= 3");
    let mut tally = Tally::default();
    for_each_in_shard(n, shard, |v| {
        let cycle = Cycle::from_raw(n, v.to_vec());
        let (name, fingerprint) = classify(&emb, &cycle, identifier);
        tally.record(&cycle, name, fingerprint);
    });
    tally
}

#[derive(Serialize, Deserialize)]
struct CheckpointHeader {
    format: String,
    version: u32,
    n: u32,
    shards: usize,
}

#[derive(Serialize, Deserialize)]
struct ShardRecord {
    shard: usize,
    tally: Tally,
}

/// Shard tallies already on disk. A missing file is an empty checkpoint.
fn read_checkpoint(path: &Path, n: u32, shard_count: usize) -> Result<BTreeMap<usize, Tally>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(BTreeMap::new()),
        Err(e) => return Err(e.into()),
    };
    let corrupt = |line: usize, what: String| Error::Checkpoint(format!("{}:{line}: {what}", path.display()));
    let mut lines = BufReader::new(file).lines();
    let Some(header) = lines.next() else {
        return Ok(BTreeMap::new());
    };
    let header: CheckpointHeader =
        serde_json::from_str(&header?).map_err(|e| corrupt(1, format!("bad header: {e}")))?;
    if header.format != CHECKPOINT_FORMAT || header.version != CHECKPOINT_VERSION {
        return Err(corrupt(1, format!("unsupported format {} v{}", header.format, header.version)));
    }
    if header.n != n || header.shards != shard_count {
        return Err(corrupt(
            1,
            format!("checkpoint is for K_{} with {} shards, not K_{n}", header.n, header.shards),
        ));
    }
    let mut done = BTreeMap::new();
    for (k, line) in lines.enumerate() {
        let line = line?;
        let record: ShardRecord =
            serde_json::from_str(&line).map_err(|e| corrupt(k + 2, format!("bad shard record: {e}")))?;
        if record.shard >= shard_count {
            return Err(corrupt(k + 2, format!("shard {} out of range", record.shard)));
        }
        if done.insert(record.shard, record.tally).is_some() {
            return Err(corrupt(k + 2, format!("shard {} recorded twice", record.shard)));
        }
    }
    Ok(done)
}

fn open_checkpoint(path: &Path, n: u32, shard_count: usize, fresh: bool) -> Result<File> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    if fresh {
        let header = CheckpointHeader {
            format: CHECKPOINT_FORMAT.into(),
            version: CHECKPOINT_VERSION,
            n,
            shards: shard_count,
        };
        writeln!(file, "{}", serde_json::to_string(&header).unwrap())?;
        file.flush()?;
    }
    Ok(file)
}

/// Runs the census of `K_n`, resuming from and appending to the
/// checkpoint when one is configured.
pub fn run_census(n: u32, config: &CensusConfig) -> Result<CensusRecord> {
    check_size(n, config.max_n)?;
    // fail on broken fixtures before spending any time
    reference_table();
    let all = shards(n);
    let mut done = match &config.checkpoint {
        Some(path) => read_checkpoint(path, n, all.len())?,
        None => BTreeMap::new(),
    };
    let fresh = config
        .checkpoint
        .as_ref()
        .map(|p| std::fs::metadata(p).map(|m| m.len() == 0).unwrap_or(true))
        .unwrap_or(false);
    let writer = match &config.checkpoint {
        Some(path) => Some(Mutex::new(open_checkpoint(path, n, all.len(), fresh)?)),
        None => None,
    };
    let pending: Vec<usize> = (0..all.len()).filter(|k| !done.contains_key(k)).collect();
    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::new());
    let failure: Mutex<Option<Error>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..config.workers.max(1) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&index) = pending.get(k) else { break };
                let tally = census_shard(n, all[index], &config.identifier);
                if let Some(w) = &writer {
                    let line = serde_json::to_string(&ShardRecord { shard: index, tally: tally.clone() }).unwrap();
                    let mut file = w.lock().unwrap();
                    if let Err(e) = writeln!(file, "{line}").and_then(|_| file.flush()) {
                        failure.lock().unwrap().get_or_insert(e.into());
                        break;
                    }
                }
                results.lock().unwrap().push((index, tally));
            });
        }
    });
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    done.extend(results.into_inner().unwrap());
    let mut total = Tally::default();
    for tally in done.values() {
        total.merge(tally);
    }
    let record = CensusRecord::from_tally(n, total);
    if config.strict && !record.unidentified.is_empty() {
        let list: Vec<String> = record
            .unidentified
            .iter()
            .map(|u| format!("{} x{} (e.g. {})", u.fingerprint, u.count, u.example))
            .collect();
        return Err(Error::Contract(format!(
            "K_{n}: {} unidentified knot type(s): {}",
            record.unidentified.len(),
            list.join("; ")
        )));
    }
    Ok(record)
}

/// Counts knotted cycles of every length in `K_n` by direct enumeration.
pub fn count_all_knotted(n: u32, identifier: &Identifier) -> Result<u64> {
    let emb = BookEmbedding::new(n)?;
    let mut knotted = 0;
    for cycle in enumerate_all_cycles(n)? {
        if classify(&emb, &cycle, identifier).0.is_knotted() {
            knotted += 1;
        }
    }
    Ok(knotted)
}

/// Distinct canonical cycles in a stream; used to check the enumeration.
pub fn distinct(cycles: impl IntoIterator<Item = Cycle>) -> (usize, usize) {
    let mut seen = HashSet::new();
    let mut total = 0;
    for c in cycles {
        total += 1;
        seen.insert(c);
    }
    (total, seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u64) -> u64 {
        (1..=n).product()
    }

    #[test]
    fn hamiltonian_counts() {
        for n in 3..=9u32 {
            let cycles: Vec<Cycle> = enumerate_hamiltonian(n).unwrap().collect();
            let expected = if n == 3 { 1 } else { factorial(n as u64 - 1) / 2 };
            assert_eq!(cycles.len() as u64, expected, "n={n}");
            assert!(cycles.iter().all(|c| c.is_canonical() && c.is_hamiltonian()));
            let (total, unique) = distinct(cycles.iter().cloned());
            assert_eq!(total, unique);
            assert!(cycles.windows(2).all(|w| w[0].vertices() < w[1].vertices()));
        }
    }

    #[test]
    fn size_guard() {
        assert!(matches!(enumerate_hamiltonian(13).err(), Some(Error::Capacity(_))));
        assert!(matches!(enumerate_all_cycles(10), Err(Error::Capacity(_))));
    }

    #[test]
    fn shards_partition_the_stream() {
        let n = 8;
        let full: Vec<Cycle> = enumerate_hamiltonian(n).unwrap().collect();
        for workers in [1, 2, 8] {
            let mut union = Vec::new();
            for w in 0..workers {
                for shard in shard_slice(n, w, workers) {
                    for_each_in_shard(n, shard, |v| union.push(Cycle::from_raw(n, v.to_vec())));
                }
            }
            union.sort();
            let mut sorted = full.clone();
            sorted.sort();
            assert_eq!(union, sorted, "workers={workers}");
        }
    }

    #[test]
    fn all_cycles_count() {
        // Σ_k C(n,k) (k-1)!/2
        let n = 6u64;
        let expected: u64 = (3..=n).map(|k| binomial(n, k) * factorial(k - 1) / 2).sum();
        assert_eq!(enumerate_all_cycles(6).unwrap().len() as u64, expected);
    }

    #[test]
    fn small_books_have_no_knots() {
        assert_eq!(count_all_knotted(6, &Identifier::default()).unwrap(), 0);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(11, 7), 330);
        assert_eq!(binomial(9, 9), 1);
        assert_eq!(binomial(5, 0), 1);
    }

    #[test]
    fn total_needs_every_smaller_census() {
        let r = CensusRecord {
            n: 8,
            cycles: 0,
            counts: BTreeMap::new(),
            unidentified: Vec::new(),
            total_knotted: None,
        };
        assert!(total_knotted(&[r], 8).is_err());
    }

    #[test]
    fn tally_merge_is_order_independent() {
        let id = Identifier::default();
        let a = census_shard(8, Shard { second: 3, third: 5 }, &id);
        let b = census_shard(8, Shard { second: 4, third: 2 }, &id);
        let mut ab = a.clone();
        ab.merge(&b);
        let mut ba = b.clone();
        ba.merge(&a);
        assert_eq!(ab, ba);
    }
}
