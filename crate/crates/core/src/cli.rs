//! The `knotbook` command line.
//!
//! ```text
//! knotbook embed    --n 9 [--output text|json|csv]
//! knotbook identify --n 7 --cycle "(1,3,5,7,2,4,6)"
//! knotbook census   --n 10 --workers 8 [--output csv|json|text]
//!                   [--strict true|false] [--checkpoint run.ckpt]
//! knotbook verify   --theorem torus|composite|extension|family|lemmas [--seed N]
//! ```
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity
//! error.
//!
//! Text formats: cycles are `(1,3,5,7,2,4,6)`; DT codes are comma separated
//! signed even integers, `4,6,2`, one per odd visit, negative when the even
//! visit passes over; PD codes list one crossing per line as `a,b,c,d`, the
//! arcs counterclockwise from the incoming under-strand. Census CSV has the
//! columns `n,knot_name,count`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::census::{run_census, total_knotted, CensusConfig, CensusRecord, DEFAULT_MAX_N};
use crate::cycle::Cycle;
use crate::embedding::{BookEmbedding, SheetIndex};
use crate::error::{Error, Result};
use crate::invariants::{Identifier, DEFAULT_BRACKET_THRESHOLD};
use crate::verify::{self, Check, DEFAULT_SEED, TORUS_INSTANCES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "knotbook", version, about = "Knots in the canonical book representation of K_n")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Torus,
    Composite,
    Extension,
    Family,
    Lemmas,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the sheets of the canonical book and the edges on each.
    Embed {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
    },
    /// Identify the knot carried by one cycle.
    Identify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        cycle: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_BRACKET_THRESHOLD)]
        bracket_threshold: usize,
    },
    /// Count knot types over all Hamiltonian cycles of K_n.
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        output: OutputFormat,
        /// Fail on fingerprints outside the reference table.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        strict: bool,
        #[arg(long, default_value_t = DEFAULT_BRACKET_THRESHOLD)]
        bracket_threshold: usize,
        /// Resume from, and record progress in, this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Check a constructive result on concrete instances.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random samples for the extension suite.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_BRACKET_THRESHOLD)]
        bracket_threshold: usize,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Precondition(_) | Error::Parse { .. } => EXIT_USAGE,
        Error::Capacity(_) => EXIT_CAPACITY,
        Error::Contract(_) | Error::Checkpoint(_) | Error::Fixture(_) | Error::Io(_) => EXIT_FAILED,
    }
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&config.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Embed { n, output } => cmd_embed(*n, *output, out),
        Command::Identify {
            n,
            cycle,
            output,
            bracket_threshold,
        } => cmd_identify(*n, cycle, *output, Identifier::new(*bracket_threshold), out),
        Command::Census {
            n,
            workers,
            output,
            strict,
            bracket_threshold,
            checkpoint,
        } => {
            let config = CensusConfig {
                workers: *workers,
                checkpoint: checkpoint.clone(),
                identifier: Identifier::new(*bracket_threshold),
                strict: *strict,
                max_n: DEFAULT_MAX_N,
            };
            cmd_census(*n, &config, *output, out)
        }
        Command::Verify {
            theorem,
            seed,
            samples,
            bracket_threshold,
        } => cmd_verify(*theorem, *seed, *samples, Identifier::new(*bracket_threshold), out),
    }
}

pub fn cmd_embed(n: u32, output: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let emb = BookEmbedding::new(n)?;
    let sheets: Vec<(u32, Vec<_>)> = (1..=emb.sheet_count())
        .map(|s| Ok((s, emb.edges_in_sheet(SheetIndex(s))?)))
        .collect::<Result<_>>()?;
    match output {
        OutputFormat::Text => {
            writeln!(out, "K_{n}: {} sheets", sheets.len())?;
            for (s, edges) in &sheets {
                let list: Vec<String> = edges.iter().map(ToString::to_string).collect();
                writeln!(out, "S_{s} ({} edges): {}", edges.len(), list.join(" "))?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "sheet,low,high")?;
            for (s, edges) in &sheets {
                for e in edges {
                    writeln!(out, "{s},{},{}", e.low(), e.high())?;
                }
            }
        }
        OutputFormat::Json => {
            let value: Vec<serde_json::Value> = sheets
                .iter()
                .map(|(s, edges)| serde_json::json!({ "sheet": s, "edges": edges.iter().map(|e| [e.low(), e.high()]).collect::<Vec<_>>() }))
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&serde_json::json!({ "n": n, "sheets": value })).unwrap())?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_identify(n: u32, cycle: &str, output: OutputFormat, id: Identifier, out: &mut dyn Write) -> Result<i32> {
    let emb = BookEmbedding::new(n)?;
    let cycle = Cycle::parse(n, cycle)?;
    let d = crate::diagram::diagram_of_cycle(&emb, &cycle)?;
    let reduced = crate::simplify::simplify(&d);
    let run = id.run(&d);
    let dt = reduced.dt_code()?;
    let fingerprint = crate::invariants::fingerprint(&d, id.bracket_threshold)?;
    match output {
        OutputFormat::Text | OutputFormat::Csv => {
            writeln!(out, "{}", run.name)?;
            writeln!(out, "cycle: {cycle} in K_{n}")?;
            writeln!(out, "crossings: {} (reduced {})", d.crossing_count(), reduced.crossing_count())?;
            writeln!(out, "fingerprint: {fingerprint}")?;
            writeln!(out, "dt: {dt}")?;
        }
        OutputFormat::Json => {
            let value = serde_json::json!({
                "n": n,
                "cycle": cycle.to_string(),
                "knot": run.name.to_string(),
                "crossings": d.crossing_count(),
                "reduced_crossings": reduced.crossing_count(),
                "fingerprint": fingerprint,
                "dt": dt.to_string(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap())?;
        }
    }
    Ok(if run.name.is_identified() { EXIT_OK } else { EXIT_FAILED })
}

/// Runs the census of `K_n`; the smaller books from `K_7` on are counted
/// too so the all-lengths total can be reported.
pub fn cmd_census(n: u32, config: &CensusConfig, output: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let mut record = run_census(n, config)?;
    if n >= 7 {
        let mut records: Vec<CensusRecord> = Vec::new();
        for j in 7..n {
            let smaller = CensusConfig {
                checkpoint: None,
                ..config.clone()
            };
            records.push(run_census(j, &smaller)?);
        }
        records.push(record.clone());
        record.total_knotted = Some(total_knotted(&records, n)?);
    } else {
        record.total_knotted = Some(0);
    }
    let text = match output {
        OutputFormat::Csv => record.to_csv(),
        OutputFormat::Json => record.to_json() + "\n",
        OutputFormat::Text => record.to_text(),
    };
    out.write_all(text.as_bytes())?;
    Ok(if record.unidentified.is_empty() { EXIT_OK } else { EXIT_FAILED })
}

pub fn cmd_verify(theorem: Theorem, seed: u64, samples: usize, id: Identifier, out: &mut dyn Write) -> Result<i32> {
    let checks: Vec<Check> = match theorem {
        Theorem::Torus => verify::torus_checks(&TORUS_INSTANCES, &id)?,
        Theorem::Composite => verify::composite_checks(&id)?,
        Theorem::Extension => verify::extension_checks(samples, seed, &id)?,
        Theorem::Family => verify::family_checks(&[1, 2], &id)?,
        Theorem::Lemmas => verify::lemma_checks(30),
    };
    for c in &checks {
        writeln!(out, "{c}")?;
    }
    Ok(if verify::all_passed(&checks) { EXIT_OK } else { EXIT_FAILED })
}
