//! Exponential brute-force reference implementations.
//!
//! Nothing here shares code with the polynomial algorithms: matchings are
//! enumerated by include/exclude recursion over the edge list, and perfect
//! matchings are counted by pairing off the lowest unmatched vertex. Every
//! entry point is guarded by vertex and edge limits.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{bipartition, families, Edge, Graph};
use crate::matching::Matching;
use crate::recognition::{self, Options, RecognitionReport};
use crate::ur::is_uniquely_restricted;

/// Environment variable that overrides the vertex limit of [`OracleGuard::from_env`].
pub const ORACLE_LIMIT_ENV: &str = "URMATCH_ORACLE_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleGuard {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for OracleGuard {
    fn default() -> Self {
        OracleGuard {
            max_vertices: 16,
            max_edges: 24,
        }
    }
}

impl OracleGuard {
    pub fn unlimited() -> Self {
        OracleGuard {
            max_vertices: usize::MAX,
            max_edges: usize::MAX,
        }
    }

    pub fn with_max_vertices(max_vertices: usize) -> Self {
        OracleGuard {
            max_vertices,
            max_edges: usize::MAX,
        }
    }

    /// The default guard, or a vertex-only limit taken from `URMATCH_ORACLE_LIMIT`.
    pub fn from_env() -> Self {
        std::env::var(ORACLE_LIMIT_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Self::with_max_vertices)
            .unwrap_or_default()
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.max_vertices || g.m() > self.max_edges {
            Err(Error::OracleLimit {
                n: g.n(),
                m: g.m(),
                max_vertices: self.max_vertices,
                max_edges: self.max_edges,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingEnumeration {
    /// Every matching, each as an ascending edge list, in recursion order.
    pub all_matchings: Vec<Vec<Edge>>,
    pub maximum_size: usize,
    pub maximum_matchings: Vec<Vec<Edge>>,
}

pub fn enumerate_matchings(g: &Graph, guard: &OracleGuard) -> Result<MatchingEnumeration> {
    guard.check(g)?;
    let mut all = Vec::new();
    let mut used = vec![false; g.n()];
    let mut current = Vec::new();
    enumerate_rec(g.edges(), 0, &mut used, &mut current, &mut all);
    let maximum_size = all.iter().map(Vec::len).max().unwrap_or(0);
    let maximum_matchings = all
        .iter()
        .filter(|m| m.len() == maximum_size)
        .cloned()
        .collect();
    Ok(MatchingEnumeration {
        all_matchings: all,
        maximum_size,
        maximum_matchings,
    })
}

fn enumerate_rec(
    edges: &[Edge],
    i: usize,
    used: &mut [bool],
    current: &mut Vec<Edge>,
    out: &mut Vec<Vec<Edge>>,
) {
    if i == edges.len() {
        out.push(current.clone());
        return;
    }
    enumerate_rec(edges, i + 1, used, current, out);
    let e = edges[i];
    if !used[e.u()] && !used[e.v()] {
        used[e.u()] = true;
        used[e.v()] = true;
        current.push(e);
        enumerate_rec(edges, i + 1, used, current, out);
        current.pop();
        used[e.u()] = false;
        used[e.v()] = false;
    }
}

pub fn count_perfect_matchings(g: &Graph, guard: &OracleGuard) -> Result<u64> {
    guard.check(g)?;
    Ok(count_pm_rec(g, &mut vec![false; g.n()]))
}

fn count_pm_rec(g: &Graph, used: &mut [bool]) -> u64 {
    let Some(v) = used.iter().position(|&u| !u) else {
        return 1;
    };
    used[v] = true;
    let mut total = 0;
    for &w in g.neighbors(v) {
        if !used[w] {
            used[w] = true;
            total += count_pm_rec(g, used);
            used[w] = false;
        }
    }
    used[v] = false;
    total
}

/// `m` is uniquely restricted iff `G[V(m)]` has exactly one perfect matching.
pub fn oracle_is_ur(g: &Graph, m: &Matching, guard: &OracleGuard) -> Result<bool> {
    guard.check(g)?;
    m.check_in(g)?;
    let sub = g.induced(&m.covered());
    Ok(count_pm_rec(&sub.graph, &mut vec![false; sub.graph.n()]) == 1)
}

/// `(some maximum matching is UR, every maximum matching is UR)`.
///
/// Maximum matchings are grouped by covered vertex set; a maximum matching is
/// uniquely restricted exactly when no other matching shares its covered set,
/// and any such other matching has the same size.
pub fn oracle_ur_pair(g: &Graph, guard: &OracleGuard) -> Result<(bool, bool)> {
    let en = enumerate_matchings(g, guard)?;
    let mut groups: HashMap<Vec<usize>, usize> = HashMap::new();
    for m in &en.maximum_matchings {
        let mut covered: Vec<usize> = m.iter().flat_map(|e| [e.u(), e.v()]).collect();
        covered.sort_unstable();
        *groups.entry(covered).or_default() += 1;
    }
    let some = groups.values().any(|&c| c == 1);
    let every = groups.values().all(|&c| c == 1);
    Ok((some, every))
}

pub fn oracle_some_ur(g: &Graph, guard: &OracleGuard) -> Result<bool> {
    oracle_ur_pair(g, guard).map(|p| p.0)
}

pub fn oracle_every_ur(g: &Graph, guard: &OracleGuard) -> Result<bool> {
    oracle_ur_pair(g, guard).map(|p| p.1)
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices in edge-mask order.
pub fn enumerate_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(pairs < 64, "labeled-graph enumeration supports n <= 11");
    (0..1u64 << pairs).map(move |mask| families::from_mask(n, mask))
}

/// Outcome of running both recognition procedures against the oracle on one graph.
#[derive(Debug, Clone)]
pub struct CrossCheck {
    pub some: RecognitionReport,
    pub every: Option<RecognitionReport>,
    pub oracle_some: bool,
    pub oracle_every: bool,
    /// Answer of the bipartite-only route, when the graph is bipartite.
    pub every_bipartite: Option<bool>,
    pub problems: Vec<String>,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Runs `some_ur`, `every_ur` (with the definitional block check enabled) and,
/// for bipartite input, `every_ur_bipartite`, and compares everything against
/// the oracle. The witness is checked for size and unique restriction.
pub fn cross_validate(g: &Graph, guard: &OracleGuard) -> Result<CrossCheck> {
    let (oracle_some, oracle_every) = oracle_ur_pair(g, guard)?;
    let ge = crate::decomposition::gallai_edmonds(g);
    let opts = Options {
        all_failures: false,
        verify_blocks: true,
    };
    let some = recognition::some_ur_with(g, &ge, &opts);
    let mut problems = Vec::new();
    let every = match recognition::every_ur_with(g, &ge, &opts) {
        Ok(r) => Some(r),
        Err(e) => {
            problems.push(e.to_string());
            None
        }
    };
    if some.answer != oracle_some {
        problems.push(format!(
            "some_ur answered {} but oracle says {oracle_some}",
            some.answer
        ));
    }
    if let Some(every) = &every {
        if every.answer != oracle_every {
            problems.push(format!(
                "every_ur answered {} but oracle says {oracle_every}",
                every.answer
            ));
        }
    }
    match &some.witness {
        Some(w) => {
            let nu = ge.matching.len();
            if w.len() != nu {
                problems.push(format!("witness has {} edges, ν = {nu}", w.len()));
            }
            match is_uniquely_restricted(g, w) {
                Ok(true) => {}
                Ok(false) => problems.push("witness is not uniquely restricted".into()),
                Err(e) => problems.push(format!("witness invalid: {e}")),
            }
            if !oracle_is_ur(g, w, &OracleGuard::unlimited())? {
                problems.push("oracle rejects the witness".into());
            }
        }
        None if some.answer => problems.push("some_ur answered true without a witness".into()),
        None => {}
    }
    let every_bipartite = match bipartition(g) {
        Some(bp) => {
            let r = recognition::every_ur_bipartite(g, &bp)?;
            if r.answer != oracle_every {
                problems.push(format!(
                    "every_ur_bipartite answered {} but oracle says {oracle_every}",
                    r.answer
                ));
            }
            Some(r.answer)
        }
        None => None,
    };
    Ok(CrossCheck {
        some,
        every,
        oracle_some,
        oracle_every,
        every_bipartite,
        problems,
    })
}
