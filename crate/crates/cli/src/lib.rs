//! The `urmatch` command line.
//!
//! Exit status: 0 when an answer was computed, 2 for unreadable or malformed
//! input, 3 when the oracle's size guard refuses a graph, 4 when an internal
//! cross-check disagrees.

pub mod format;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use urmatch_core::decomposition::gallai_edmonds;
use urmatch_core::graph::families::random_gnp;
use urmatch_core::graph::{bipartition, Graph};
use urmatch_core::oracle::{
    cross_validate, enumerate_labeled_graphs, oracle_every_ur, oracle_some_ur, OracleGuard,
};
use urmatch_core::recognition::{every_ur_with, some_ur_with, Options, RecognitionReport};
use urmatch_core::ur::{is_uniquely_restricted, is_uniquely_restricted_bipartite};
use urmatch_core::Error;

pub use format::{parse_graph, parse_matching, render, ParseError};
pub use report::{DecompositionJson, JsonReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "urmatch",
    version,
    about = "Decide whether some or every maximum matching is uniquely restricted"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    Some,
    Every,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleProperty {
    Some,
    Every,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide the property for one or more graph files.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "both")]
        property: PropertyArg,
        /// One JSON object per line instead of text.
        #[arg(long)]
        json: bool,
        /// Print the uniquely restricted maximum matching (text mode).
        #[arg(long)]
        witness: bool,
        /// Report every violated condition, not just the first.
        #[arg(long)]
        all_failures: bool,
        /// Cross-check the odd-cycle block test against its definition.
        #[arg(long)]
        verify: bool,
    },
    /// Decide whether a given matching is uniquely restricted.
    IsUr {
        file: PathBuf,
        /// Comma-separated edges, e.g. "0-1,2-3".
        #[arg(long, allow_hyphen_values = true)]
        matching: String,
    },
    /// Print the Gallai-Edmonds decomposition and G_B.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force answer, refused beyond the size guard unless forced.
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum)]
        property: OracleProperty,
        #[arg(long)]
        force: bool,
    },
    /// Compare the algorithms with the oracle on all small graphs and random ones.
    Selftest {
        /// Every labeled graph with at most this many vertices.
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        /// Number of random graphs with 7 to 10 vertices.
        #[arg(long, default_value_t = 200)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check {
            files,
            property,
            json,
            witness,
            all_failures,
            verify,
        } => {
            let opts = Options {
                all_failures,
                verify_blocks: verify,
            };
            check(&files, property, json, witness, &opts, out, err)
        }
        Command::IsUr { file, matching } => is_ur(&file, &matching, out, err),
        Command::Decompose { file, json } => decompose(&file, json, out, err),
        Command::Oracle {
            file,
            property,
            force,
        } => oracle(&file, property, force, out, err),
        Command::Selftest { nmax, random, seed } => selftest(nmax, random, seed, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: writing output: {e}");
        EXIT_INPUT
    })
}

type Io = std::io::Result<i32>;

fn load(path: &PathBuf, err: &mut dyn Write) -> std::io::Result<Option<Graph>> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: {}: io_error: {e}", path.display())?;
            return Ok(None);
        }
    };
    match parse_graph(&text) {
        Ok(g) => Ok(Some(g)),
        Err(e) => {
            writeln!(err, "error: {}: {e}", path.display())?;
            Ok(None)
        }
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn text_line(r: &RecognitionReport, all_failures: bool) -> String {
    let mut line = r.answer.to_string();
    let tags: Vec<&str> = if all_failures {
        r.failures.iter().map(|t| t.as_str()).collect()
    } else {
        r.failure.iter().map(|t| t.as_str()).collect()
    };
    for t in tags {
        line.push(' ');
        line.push_str(t);
    }
    line
}

fn check(
    files: &[PathBuf],
    property: PropertyArg,
    json: bool,
    witness: bool,
    opts: &Options,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Io {
    let mut code = EXIT_OK;
    for path in files {
        let Some(g) = load(path, err)? else {
            code = code.max(EXIT_INPUT);
            continue;
        };
        let input = path.display().to_string();
        let start = Instant::now();
        let ge = gallai_edmonds(&g);
        let mut reports = Vec::new();
        if property != PropertyArg::Some {
            match every_ur_with(&g, &ge, opts) {
                Ok(r) => reports.push((r, elapsed_ms(start))),
                Err(e) => {
                    writeln!(err, "error: {input}: {e}")?;
                    code = code.max(EXIT_DISAGREEMENT);
                    continue;
                }
            }
        }
        if property != PropertyArg::Every {
            let start = Instant::now();
            let r = some_ur_with(&g, &ge, opts);
            let ms = elapsed_ms(start);
            reports.insert(0, (r, ms));
        }
        let prefix = if files.len() > 1 {
            format!("{input}: ")
        } else {
            String::new()
        };
        for (r, ms) in &reports {
            if json {
                let line =
                    serde_json::to_string(&JsonReport::new(&input, &g, r, opts.all_failures, *ms))
                        .expect("report serializes");
                writeln!(out, "{line}")?;
                continue;
            }
            let label = if property == PropertyArg::Both {
                format!("{} ", r.property)
            } else {
                String::new()
            };
            writeln!(out, "{prefix}{label}{}", text_line(r, opts.all_failures))?;
            if let (true, Some(w)) = (witness, &r.witness) {
                let pairs: Vec<String> = w.edges().iter().map(|e| e.to_string()).collect();
                writeln!(out, "{prefix}witness {}", pairs.join(" ").trim_end())?;
            }
        }
    }
    Ok(code)
}

fn is_ur(path: &PathBuf, spec: &str, out: &mut dyn Write, err: &mut dyn Write) -> Io {
    let Some(g) = load(path, err)? else {
        return Ok(EXIT_INPUT);
    };
    let m = match parse_matching(&g, spec) {
        Ok(m) => m,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_INPUT);
        }
    };
    let answer = is_uniquely_restricted(&g, &m).expect("matching validated against the graph");
    if let Some(bp) = bipartition(&g) {
        let bip = is_uniquely_restricted_bipartite(&g, &bp, &m).expect("valid bipartition");
        if bip != answer {
            writeln!(
                err,
                "error: general test says {answer}, D(M) test says {bip}"
            )?;
            return Ok(EXIT_DISAGREEMENT);
        }
    }
    writeln!(out, "{answer}")?;
    Ok(EXIT_OK)
}

fn joined(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn decompose(path: &PathBuf, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Io {
    let Some(g) = load(path, err)? else {
        return Ok(EXIT_INPUT);
    };
    let ge = gallai_edmonds(&g);
    let input = path.display().to_string();
    if json {
        let j = DecompositionJson::new(&input, &g, &ge);
        writeln!(out, "{}", serde_json::to_string(&j).expect("serializes"))?;
        return Ok(EXIT_OK);
    }
    let comps = |cs: &[Vec<usize>]| {
        cs.iter()
            .map(|c| format!("[{}]", joined(c)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let line = |label: &str, body: String| {
        if body.is_empty() {
            format!("{label}:")
        } else {
            format!("{label}: {body}")
        }
    };
    writeln!(out, "nu: {}", ge.matching.len())?;
    writeln!(out, "{}", line("D", joined(&ge.d_set)))?;
    writeln!(out, "{}", line("A", joined(&ge.a_set)))?;
    writeln!(out, "{}", line("C", joined(&ge.c_set)))?;
    writeln!(out, "{}", line("D-components", comps(&ge.d_components)))?;
    writeln!(out, "{}", line("C-components", comps(&ge.c_components)))?;
    let gb_edges: Vec<String> = ge.gb.edges().iter().map(|e| e.to_string()).collect();
    writeln!(
        out,
        "{}",
        line(
            &format!(
                "G_B ({} + {} vertices)",
                ge.a_set.len(),
                ge.d_components.len()
            ),
            gb_edges.join(" ")
        )
    )?;
    Ok(EXIT_OK)
}

fn oracle(
    path: &PathBuf,
    property: OracleProperty,
    force: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Io {
    let Some(g) = load(path, err)? else {
        return Ok(EXIT_INPUT);
    };
    let guard = if force {
        OracleGuard::unlimited()
    } else {
        OracleGuard::from_env()
    };
    let answer = match property {
        OracleProperty::Some => oracle_some_ur(&g, &guard),
        OracleProperty::Every => oracle_every_ur(&g, &guard),
    };
    match answer {
        Ok(a) => {
            writeln!(out, "{a}")?;
            Ok(EXIT_OK)
        }
        Err(e @ Error::OracleLimit { .. }) => {
            writeln!(err, "error: {e} (use --force or URMATCH_ORACLE_LIMIT)")?;
            Ok(EXIT_GUARD)
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_INPUT)
        }
    }
}

/// Random graphs for the self-test: `n` in 7..=10, edge probability from
/// {0.2, 0.4, 0.6}.
pub fn selftest_random_graphs(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(7..=10);
            let p = [0.2, 0.4, 0.6][rng.random_range(0..3)];
            random_gnp(n, p, &mut rng)
        })
        .collect()
}

fn selftest(nmax: usize, random: usize, seed: u64, out: &mut dyn Write, err: &mut dyn Write) -> Io {
    if nmax > 8 {
        writeln!(
            err,
            "error: --nmax {nmax} is too large for exhaustive enumeration (at most 8)"
        )?;
        return Ok(EXIT_INPUT);
    }
    let exhaustive = (0..=nmax).flat_map(enumerate_labeled_graphs);
    let randoms = selftest_random_graphs(random, seed);
    let (mut total, mut bad) = (0usize, 0usize);
    let mut exhaustive_count = 0usize;
    for (i, g) in exhaustive
        .map(|g| (true, g))
        .chain(randoms.into_iter().map(|g| (false, g)))
    {
        total += 1;
        if i {
            exhaustive_count += 1;
        }
        let problems = match cross_validate(&g, &OracleGuard::unlimited()) {
            Ok(cc) => cc.problems,
            Err(e) => vec![e.to_string()],
        };
        if !problems.is_empty() {
            bad += 1;
            write!(err, "disagreement on\n{}", render(&g))?;
            for p in problems {
                writeln!(err, "  {p}")?;
            }
        }
    }
    writeln!(
        out,
        "selftest: {total} graphs ({exhaustive_count} exhaustive with n <= {nmax}, {} random, seed {seed}), {bad} disagreements",
        total - exhaustive_count
    )?;
    Ok(if bad == 0 { EXIT_OK } else { EXIT_DISAGREEMENT })
}
