//! Accessibility orderings of independent sets in bipartite graphs.
//!
//! Walking an ordering `x1, ..., xk` of an independent set `I`, each vertex
//! `y ∈ N(I)` is claimed by the first `xi` adjacent to it; the claimed pairs
//! form `M^σ`. The ordering is an accessibility ordering when every step
//! claims at most one new neighbor, which is exactly when `M^σ` is a matching.
//! It is `E`-good when every claimed pair lies in a prescribed edge set `E`.
//!
//! For a maximum independent set, an `E`-good accessibility ordering exists
//! iff some maximum matching inside `E` is uniquely restricted, and any
//! `E`-good prefix extends to a full one when any ordering exists. The greedy
//! search below relies on that: it never needs to backtrack.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Edge, Graph};
use crate::matching::{maximum_matching_bipartite, Matching};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccessibilityOrdering {
    /// The ordered set, ascending.
    pub independent_set: Vec<usize>,
    pub sequence: Vec<usize>,
    /// `(y, p(y))` for every `y ∈ N(I)`, ascending in `y`.
    pub p_map: Vec<(usize, usize)>,
    pub induced_matching: Matching,
}

/// How the greedy search picks among several placeable vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowestId,
    /// Uniformly random choice from a seeded generator.
    Seeded(u64),
}

fn check_independent(g: &Graph, i_set: &[usize]) -> Result<Vec<bool>> {
    let mut member = vec![false; g.n()];
    for &x in i_set {
        g.check_vertex(x)?;
        member[x] = true;
    }
    for &x in i_set {
        if let Some(&y) = g.neighbors(x).iter().find(|&&y| member[y]) {
            return Err(Error::NotIndependent(Edge::new(x, y)));
        }
    }
    Ok(member)
}

fn check_ordering(g: &Graph, i_set: &[usize], sigma: &[usize]) -> Result<()> {
    check_independent(g, i_set)?;
    let mut a: Vec<usize> = i_set.to_vec();
    let mut b: Vec<usize> = sigma.to_vec();
    a.sort_unstable();
    a.dedup();
    b.sort_unstable();
    if a != b {
        return Err(Error::NotPermutation);
    }
    Ok(())
}

/// For each position of `sigma`, the neighbors it claims first.
fn claims(g: &Graph, sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut claimed = vec![false; g.n()];
    sigma
        .iter()
        .map(|&x| {
            g.neighbors(x)
                .iter()
                .copied()
                .filter(|&y| !std::mem::replace(&mut claimed[y], true))
                .collect()
        })
        .collect()
}

/// `M^σ = { y·p(y) : y ∈ N(I) }`, ascending. Not necessarily a matching.
pub fn induced_matching_edges(g: &Graph, i_set: &[usize], sigma: &[usize]) -> Result<Vec<Edge>> {
    check_ordering(g, i_set, sigma)?;
    let mut edges: Vec<Edge> = sigma
        .iter()
        .zip(claims(g, sigma))
        .flat_map(|(&x, ys)| ys.into_iter().map(move |y| Edge::new(x, y)))
        .collect();
    edges.sort_unstable();
    Ok(edges)
}

/// Whether every prefix of `sigma` grows the neighborhood by at most one vertex.
pub fn is_accessibility_ordering(g: &Graph, i_set: &[usize], sigma: &[usize]) -> Result<bool> {
    check_ordering(g, i_set, sigma)?;
    Ok(claims(g, sigma).iter().all(|ys| ys.len() <= 1))
}

pub fn find_e_good_ordering(
    g: &Graph,
    sides: &Bipartition,
    i_set: &[usize],
    allowed: &BTreeSet<Edge>,
) -> Result<Option<AccessibilityOrdering>> {
    find_e_good_ordering_with(g, sides, i_set, allowed, TieBreak::LowestId)
}

/// Greedily extends an `allowed`-good partial ordering of the maximum
/// independent set `i_set` until it is complete or stuck.
///
/// A vertex is placeable when at most one of its neighbors is still
/// unclaimed and, if there is one, the edge to it is allowed. Claiming only
/// shrinks the unclaimed counts, so a placeable vertex stays placeable.
pub fn find_e_good_ordering_with(
    g: &Graph,
    sides: &Bipartition,
    i_set: &[usize],
    allowed: &BTreeSet<Edge>,
    tie_break: TieBreak,
) -> Result<Option<AccessibilityOrdering>> {
    let member = check_independent(g, i_set)?;
    let mut independent_set = i_set.to_vec();
    independent_set.sort_unstable();
    independent_set.dedup();
    let nu = maximum_matching_bipartite(g, sides)?.len();
    if independent_set.len() + nu != g.n() {
        return Err(Error::NotMaximumIndependent {
            expected: g.n() - nu,
            found: independent_set.len(),
        });
    }

    let n = g.n();
    let mut unclaimed: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut claimed = vec![false; n];
    let mut placed = vec![false; n];
    let mut queued = vec![false; n];
    let mut ready: BTreeSet<usize> = BTreeSet::new();
    let mut rng = match tie_break {
        TieBreak::LowestId => None,
        TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };

    let open_neighbor =
        |x: usize, claimed: &[bool]| g.neighbors(x).iter().copied().find(|&y| !claimed[y]);
    let placeable = |x: usize, unclaimed: &[usize], claimed: &[bool]| match unclaimed[x] {
        0 => true,
        1 => open_neighbor(x, claimed).is_some_and(|y| allowed.contains(&Edge::new(x, y))),
        _ => false,
    };

    for &x in &independent_set {
        if placeable(x, &unclaimed, &claimed) {
            queued[x] = true;
            ready.insert(x);
        }
    }

    let mut sequence = Vec::with_capacity(independent_set.len());
    let mut p_map = Vec::new();
    while !ready.is_empty() {
        let x = match rng.as_mut() {
            None => *ready.first().expect("nonempty"),
            Some(r) => *ready
                .iter()
                .nth(r.random_range(0..ready.len()))
                .expect("in range"),
        };
        ready.remove(&x);
        placed[x] = true;
        sequence.push(x);
        if unclaimed[x] == 0 {
            continue;
        }
        let y = open_neighbor(x, &claimed).expect("one unclaimed neighbor");
        claimed[y] = true;
        p_map.push((y, x));
        for &z in g.neighbors(y) {
            if !member[z] || placed[z] {
                continue;
            }
            unclaimed[z] -= 1;
            if !queued[z] && placeable(z, &unclaimed, &claimed) {
                queued[z] = true;
                ready.insert(z);
            }
        }
    }

    if sequence.len() < independent_set.len() {
        return Ok(None);
    }
    p_map.sort_unstable();
    let induced_matching = Matching::new(g, p_map.iter().map(|&(y, x)| Edge::new(x, y)))
        .expect("claims of an accessibility ordering are disjoint graph edges");
    Ok(Some(AccessibilityOrdering {
        independent_set,
        sequence,
        p_map,
        induced_matching,
    }))
}
