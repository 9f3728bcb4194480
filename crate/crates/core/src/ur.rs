//! Uniquely restricted matchings and the alternating digraph `D(M)` of a
//! matching in a bipartite graph.
//!
//! `D(M)` orients non-matching edges from A to B and matching edges from B
//! to A, so `M`-alternating paths and cycles become directed ones. `V⁺(M)` is
//! everything reachable from an uncovered A-vertex; `V⁻(M)` is everything that
//! reaches an uncovered B-vertex.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Digraph, Edge, Graph, Subgraph};
use crate::matching::{maximum_matching_bipartite, perfect_matching_is_unique, Matching};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingDigraph {
    pub digraph: Digraph,
    /// Uncovered A-vertices.
    pub a0: Vec<usize>,
    /// Uncovered B-vertices.
    pub b0: Vec<usize>,
    pub v_plus: Vec<usize>,
    pub v_minus: Vec<usize>,
}

pub fn build_matching_digraph(
    g: &Graph,
    sides: &Bipartition,
    m: &Matching,
) -> Result<MatchingDigraph> {
    sides.check(g)?;
    m.check_in(g)?;
    let arcs = g.edges().iter().map(|&e| {
        let (a, b) = sides.orient(e);
        if m.contains(e) {
            (b, a)
        } else {
            (a, b)
        }
    });
    let digraph = Digraph::new(g.n(), arcs)?;
    let (a0, b0): (Vec<usize>, Vec<usize>) = (0..g.n())
        .filter(|&v| !m.is_covered(v))
        .partition(|&v| sides.is_a(v));
    let v_plus = digraph.reachable_from(&a0);
    let v_minus = digraph.reaching(&b0);
    Ok(MatchingDigraph {
        digraph,
        a0,
        b0,
        v_plus,
        v_minus,
    })
}

pub fn is_acyclic(d: &Digraph) -> bool {
    d.is_acyclic()
}

/// Restricts `m` to the edges inside `sub`, in local ids.
pub(crate) fn restrict_matching(sub: &Subgraph, m: &Matching) -> Matching {
    let edges = m.edges().iter().filter_map(|e| {
        let u = sub.local(e.u())?;
        let v = sub.local(e.v())?;
        Some(Edge::new(u, v))
    });
    Matching::new(&sub.graph, edges).expect("restriction of a matching to an induced subgraph")
}

/// Whether `m` is the unique perfect matching of `G[V(m)]`.
pub fn is_uniquely_restricted(g: &Graph, m: &Matching) -> Result<bool> {
    m.check_in(g)?;
    if m.is_empty() {
        return Ok(true);
    }
    let sub = g.induced(&m.covered());
    let local = restrict_matching(&sub, m);
    Ok(perfect_matching_is_unique(&sub.graph, &local))
}

/// Bipartite route: `m` is uniquely restricted iff `D(m)` is acyclic.
pub fn is_uniquely_restricted_bipartite(
    g: &Graph,
    sides: &Bipartition,
    m: &Matching,
) -> Result<bool> {
    Ok(build_matching_digraph(g, sides, m)?.digraph.is_acyclic())
}

/// `V⁺(M) ∩ V⁻(M) = ∅`, i.e. no alternating path joins an uncovered A-vertex
/// to an uncovered B-vertex.
pub fn konig_maximality_check(md: &MatchingDigraph) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < md.v_plus.len() && j < md.v_minus.len() {
        match md.v_plus[i].cmp(&md.v_minus[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// All maximum matchings one edge exchange away from the maximum matching `m`:
/// an uncovered vertex takes over the matched partner of one of its neighbors.
pub fn edge_exchanges(g: &Graph, sides: &Bipartition, m: &Matching) -> Result<Vec<Matching>> {
    let md = build_matching_digraph(g, sides, m)?;
    if !konig_maximality_check(&md) {
        return Err(Error::NotMaximumMatching {
            expected: maximum_matching_bipartite(g, sides)?.len(),
            found: m.len(),
        });
    }
    let swap = |old: Edge, new: Edge| {
        let edges = m
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != old)
            .chain(std::iter::once(new));
        Matching::new(g, edges).expect("an edge exchange keeps a matching")
    };
    let mut out = Vec::new();
    for &x in md.a0.iter().chain(md.b0.iter()) {
        for &y in g.neighbors(x) {
            // y is covered, otherwise xy would augment m
            let partner = m
                .mate(y)
                .expect("maximum matching covers neighbors of uncovered vertices");
            out.push(swap(Edge::new(y, partner), Edge::new(x, y)));
        }
    }
    Ok(out)
}
