//! The `hmap` command: check, measure, break and fuzz hypermaps stored as
//! constructor traces.
//!
//! Exit codes: 0 for success or a true predicate, 1 for a false predicate
//! (`check`, `planar`, `ring-check`, `jordan`, and `fuzz` with failures),
//! 2 for usage, parse and precondition errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use hypermap::characteristics::counts;
use hypermap::format::{parse_map, parse_ring, serialize_map, to_dot};
use hypermap::jordan::{fuzz_jordan, gen_planar, jordan_check, FuzzConfig, Verdict};
use hypermap::orbits::orbit;
use hypermap::rings::{break_along, ring_check};
use hypermap::{Dart, FreeMap, HypermapIndex, OrbitKind, RingList};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hmap",
    version,
    about = "Hypermaps as free terms: counts, planarity and the discrete Jordan check"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the construction invariant of a map.
    Check { map: PathBuf },
    /// Print counts, Euler characteristic, genus and planarity.
    Stats { map: PathBuf },
    /// Print the orbit of a dart, in orbit order.
    Orbit {
        map: PathBuf,
        #[arg(long)]
        kind: OrbitKind,
        #[arg(long)]
        dart: u32,
    },
    /// Exit 0 if the map is planar, 1 otherwise.
    Planar { map: PathBuf },
    /// Check the four ring conditions of a ring on a map.
    RingCheck { map: PathBuf, ring: PathBuf },
    /// Break every 0-link of a ring and write the resulting map.
    Break {
        map: PathBuf,
        ring: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Break a planar map along a ring and compare component counts.
    Jordan { map: PathBuf, ring: PathBuf },
    /// Generate a random planar map.
    Gen {
        #[arg(long)]
        darts: u32,
        #[arg(long)]
        links: u32,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run the Jordan check on random planar maps and found rings.
    Fuzz {
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Largest number of darts per map.
        #[arg(long)]
        size: u32,
        /// Longest ring to search for.
        #[arg(long, default_value_t = 8)]
        max_ring_len: usize,
        /// Where failing (map, ring) pairs are written.
        #[arg(long, env = "HMAP_WITNESS_DIR", default_value = "hmap-witnesses")]
        witness_dir: PathBuf,
    },
    /// Write a Graphviz rendering of a map.
    Dot {
        map: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// A failure reported on stderr with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = std::result::Result<u8, Failure>;

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn read_map(path: &Path) -> Result<FreeMap, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_map(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_ring(path: &Path) -> Result<RingList, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_ring(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn verdict(ok: bool) -> u8 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { map } => {
            let m = read_map(&map)?;
            match m.validate() {
                Ok(()) => {
                    writeln!(out, "hypermap=true")?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(out, "hypermap=false\nreason={e}")?;
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::Stats { map } => {
            let stats = counts(&read_map(&map)?)?;
            write!(out, "{}", stats.to_key_values())?;
            Ok(EXIT_OK)
        }
        Command::Orbit { map, kind, dart } => {
            let idx = HypermapIndex::build(&read_map(&map)?)?;
            let o = orbit(&idx, kind, Dart(dart))?;
            let members: Vec<String> = o.members.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", members.join(" "))?;
            Ok(EXIT_OK)
        }
        Command::Planar { map } => {
            let stats = counts(&read_map(&map)?)?;
            writeln!(out, "planar={} genus={}", stats.planar, stats.genus)?;
            Ok(verdict(stats.planar))
        }
        Command::RingCheck { map, ring } => {
            let idx = HypermapIndex::build(&read_map(&map)?)?;
            let diag = ring_check(&idx, &read_ring(&ring)?);
            writeln!(out, "ring={} {diag}", diag.is_ring())?;
            Ok(verdict(diag.is_ring()))
        }
        Command::Break { map, ring, output } => {
            let m = read_map(&map)?;
            m.validate()?;
            let broken = break_along(&m, &read_ring(&ring)?)?;
            write_file(&output, &serialize_map(&broken))?;
            writeln!(out, "nc={}", counts(&broken)?.nc)?;
            Ok(EXIT_OK)
        }
        Command::Jordan { map, ring } => {
            let outcome = jordan_check(&read_map(&map)?, &read_ring(&ring)?)?;
            writeln!(out, "{outcome}")?;
            Ok(verdict(outcome.verdict == Verdict::Pass))
        }
        Command::Gen {
            darts,
            links,
            seed,
            output,
        } => {
            let m = gen_planar(seed, darts, links)?;
            write_file(&output, &serialize_map(&m))?;
            Ok(EXIT_OK)
        }
        Command::Fuzz {
            trials,
            seed,
            size,
            max_ring_len,
            witness_dir,
        } => {
            let cfg = FuzzConfig {
                max_ring_len,
                ..FuzzConfig::new(trials, seed, size)
            };
            let report = fuzz_jordan(&cfg);
            writeln!(out, "{}", report.summary())?;
            if report.witnesses.is_empty() {
                return Ok(verdict(report.failures() == 0));
            }
            for path in report.write_witnesses(&witness_dir)? {
                writeln!(out, "witness {}", path.display())?;
            }
            Ok(EXIT_FALSE)
        }
        Command::Dot { map, output } => {
            let m = read_map(&map)?;
            let idx = HypermapIndex::build(&m)?;
            write_file(&output, &to_dot(&idx, &m))?;
            Ok(EXIT_OK)
        }
    }
}
