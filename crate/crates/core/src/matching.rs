//! Matchings, maximum-matching computation and the matching predicates the
//! recognition procedures are built from.

use std::collections::VecDeque;

use crate::blossom::BlossomSearch;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Edge, Graph};

/// A set of pairwise disjoint edges of some graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Vec<Edge>,
    mate: Vec<Option<usize>>,
}

impl Matching {
    /// Validates that every edge is in `g` and no vertex is used twice.
    pub fn new<I, E>(g: &Graph, edges: I) -> Result<Matching>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut mate = vec![None; g.n()];
        let mut list = Vec::new();
        for e in edges {
            let e: Edge = e.into();
            g.check_vertex(e.v())?;
            if !g.contains_edge(e) {
                return Err(Error::EdgeNotInGraph(e));
            }
            for x in [e.u(), e.v()] {
                if mate[x].is_some() {
                    return Err(Error::OverlappingMatching(x));
                }
            }
            mate[e.u()] = Some(e.v());
            mate[e.v()] = Some(e.u());
            list.push(e);
        }
        list.sort_unstable();
        Ok(Matching { edges: list, mate })
    }

    pub fn empty(n: usize) -> Matching {
        Matching {
            edges: Vec::new(),
            mate: vec![None; n],
        }
    }

    pub(crate) fn from_mate(mate: Vec<Option<usize>>) -> Matching {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(v, w)| w.filter(|&w| v < w).map(|w| Edge::new(v, w)))
            .collect();
        Matching { edges, mate }
    }

    /// Vertex count of the host graph.
    pub fn n(&self) -> usize {
        self.mate.len()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in ascending order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn is_covered(&self, v: usize) -> bool {
        self.mate[v].is_some()
    }

    pub fn contains(&self, e: Edge) -> bool {
        e.v() < self.n() && self.mate[e.u()] == Some(e.v())
    }

    /// The covered vertex set, ascending.
    pub fn covered(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_covered(v)).collect()
    }

    /// Checks that this matching lives in `g`.
    pub fn check_in(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::VertexCountMismatch {
                expected: g.n(),
                found: self.n(),
            });
        }
        match self.edges.iter().find(|&&e| !g.contains_edge(e)) {
            Some(&e) => Err(Error::EdgeNotInGraph(e)),
            None => Ok(()),
        }
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(Edge::endpoints).collect()
    }
}

/// A maximum matching found by blossom augmentation: greedy start, then one
/// search from every free vertex in ascending order.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut search = BlossomSearch::new(g);
    search.greedy();
    search.maximize();
    search.into_matching()
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// Augmenting-path (Kuhn) maximum matching on a bipartite graph, trying
/// A-vertices in ascending order.
pub fn maximum_matching_bipartite(g: &Graph, sides: &Bipartition) -> Result<Matching> {
    sides.check(g)?;
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let mut visited = vec![0u32; n];
    let mut stamp = 0u32;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut via: Vec<usize> = Vec::new();
    for root in sides.a() {
        if g.degree(root) == 0 {
            continue;
        }
        stamp += 1;
        visited[root] = stamp;
        stack.clear();
        via.clear();
        stack.push((root, 0));
        while let Some(top) = stack.last_mut() {
            let a = top.0;
            if top.1 == g.degree(a) {
                stack.pop();
                via.pop();
                continue;
            }
            let b = g.neighbors(a)[top.1];
            top.1 += 1;
            match mate[b] {
                None => {
                    via.push(b);
                    for (&(a, _), &b) in stack.iter().zip(via.iter()) {
                        mate[a] = Some(b);
                        mate[b] = Some(a);
                    }
                    break;
                }
                Some(next) if visited[next] != stamp => {
                    visited[next] = stamp;
                    via.push(b);
                    stack.push((next, 0));
                }
                Some(_) => {}
            }
        }
    }
    Ok(Matching::from_mate(mate))
}

fn check_edge(g: &Graph, e: Edge) -> Result<()> {
    g.check_vertex(e.v())?;
    if g.contains_edge(e) {
        Ok(())
    } else {
        Err(Error::EdgeNotInGraph(e))
    }
}

/// Whether `e` lies in some maximum matching, i.e. ν(G - u - v) = ν(G) - 1.
pub fn edge_in_some_maximum_matching(g: &Graph, e: Edge) -> Result<bool> {
    check_edge(g, e)?;
    Ok(edge_in_some_given(g, &maximum_matching(g), e))
}

/// As [`edge_in_some_maximum_matching`] with a known maximum matching `m`.
pub(crate) fn edge_in_some_given(g: &Graph, m: &Matching, e: Edge) -> bool {
    if m.contains(e) {
        return true;
    }
    let mut search = BlossomSearch::with_matching(g, m);
    let freed: Vec<usize> = [e.u(), e.v()]
        .into_iter()
        .filter_map(|x| search.remove_vertex(x))
        .collect();
    // ν(G - u - v) <= ν - 1 always; we now hold ν - |freed| edges and any
    // augmenting path must end at a freed vertex.
    match freed.len() {
        0 | 1 => true,
        _ => freed.into_iter().any(|x| search.augment_from(x)),
    }
}

/// Whether some maximum matching misses `v`, i.e. ν(G - v) = ν(G).
pub fn missable_vertex(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(missable_given(g, &maximum_matching(g), v))
}

pub(crate) fn missable_given(g: &Graph, m: &Matching, v: usize) -> bool {
    let mut search = BlossomSearch::with_matching(g, m);
    match search.remove_vertex(v) {
        None => true,
        Some(u) => search.augment_from(u),
    }
}

pub fn has_unique_perfect_matching(g: &Graph) -> bool {
    let m = maximum_matching(g);
    2 * m.len() == g.n() && perfect_matching_is_unique(g, &m)
}

/// `m` is a perfect matching of `g`; it is the only one iff `g - e` has no
/// perfect matching for each `e` in `m`.
pub(crate) fn perfect_matching_is_unique(g: &Graph, m: &Matching) -> bool {
    debug_assert_eq!(2 * m.len(), g.n());
    m.edges().iter().all(|&e| {
        let mut search = BlossomSearch::with_matching(g, m);
        search.forbid_edge(e);
        !search.augment_from(e.u())
    })
}

/// Whether `g - u` has a perfect matching for every vertex `u`.
pub fn is_factor_critical(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let m = maximum_matching(g);
    2 * m.len() + 1 == g.n() && (0..g.n()).all(|u| missable_given(g, &m, u))
}

/// A maximum independent set: the complement of the König vertex cover
/// obtained from alternating reachability out of the free A-vertices.
pub fn max_independent_set_bipartite(g: &Graph, sides: &Bipartition) -> Result<Vec<usize>> {
    let m = maximum_matching_bipartite(g, sides)?;
    let n = g.n();
    let mut reached = vec![false; n];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for a in sides.a() {
        if !m.is_covered(a) {
            reached[a] = true;
            queue.push_back(a);
        }
    }
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if reached[b] || m.mate(a) == Some(b) {
                continue;
            }
            reached[b] = true;
            if let Some(next) = m.mate(b) {
                if !reached[next] {
                    reached[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    Ok((0..n).filter(|&v| sides.is_a(v) == reached[v]).collect())
}
