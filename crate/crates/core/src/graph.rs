//! Simple undirected graphs and digraphs over dense vertex ids `0..n`.
//!
//! Every value here is immutable once built. Neighbor lists are kept sorted so
//! that all traversals visit vertices in ascending id order, which makes every
//! algorithm in the crate deterministic.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        debug_assert!(self.contains(x));
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and parallel edges.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list = Vec::new();
        for e in edges {
            let e = e.into();
            if e.u == e.v {
                return Err(Error::Loop(e.u));
            }
            if e.v >= n {
                return Err(Error::VertexOutOfRange { vertex: e.v, n });
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        Ok(Graph::from_sorted_edges(n, list))
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_edges(n, Vec::new())
    }

    // Caller guarantees: sorted, distinct, no loops, endpoints < n.
    fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// The subgraph induced by `vertices`; new ids follow ascending original ids.
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut kept: Vec<usize> = vertices.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in kept.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push(Edge { u: i, v: j });
                }
            }
        }
        edges.sort_unstable();
        Subgraph {
            graph: Graph::from_sorted_edges(kept.len(), edges),
            vertices: kept,
        }
    }

    /// The graph with the listed vertices (and their edges) deleted.
    pub fn without_vertices(&self, removed: &[usize]) -> Subgraph {
        let mut gone = vec![false; self.n];
        for &v in removed {
            if v < self.n {
                gone[v] = true;
            }
        }
        let kept: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced(&kept)
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        let edges = self.edges.iter().copied().filter(|&f| f != e).collect();
        Graph::from_sorted_edges(self.n, edges)
    }
}

/// A derived graph together with the original id of each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertices[i]` is the original id of vertex `i`; ascending.
    pub vertices: Vec<usize>,
}

impl Subgraph {
    pub fn to_original(&self, v: usize) -> usize {
        self.vertices[v]
    }

    pub fn edge_to_original(&self, e: Edge) -> Edge {
        Edge::new(self.vertices[e.u], self.vertices[e.v])
    }

    /// Local id of an original vertex, if it was kept.
    pub fn local(&self, original: usize) -> Option<usize> {
        self.vertices.binary_search(&original).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Digraph> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        for &(a, b) in &arcs {
            if a == b {
                return Err(Error::Loop(a));
            }
            let top = a.max(b);
            if top >= n {
                return Err(Error::VertexOutOfRange { vertex: top, n });
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for &(a, b) in &arcs {
            out[a].push(b);
            inc[b].push(a);
        }
        for list in inc.iter_mut() {
            list.sort_unstable();
        }
        Ok(Digraph { n, arcs, out, inc })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    /// Vertices reachable from any source along directed paths (sources included).
    pub fn reachable_from(&self, sources: &[usize]) -> Vec<usize> {
        bfs_mark(self.n, sources, |v| &self.out[v])
    }

    /// Vertices from which some target can be reached (targets included).
    pub fn reaching(&self, targets: &[usize]) -> Vec<usize> {
        bfs_mark(self.n, targets, |v| &self.inc[v])
    }

    /// Kahn peeling: acyclic iff every vertex is eventually removed.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.inc[v].len()).collect();
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop_front() {
            removed += 1;
            for &w in &self.out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        removed == self.n
    }
}

fn bfs_mark<'a, F>(n: usize, sources: &[usize], next: F) -> Vec<usize>
where
    F: Fn(usize) -> &'a [usize],
{
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &s in sources {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in next(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    (0..n).filter(|&v| seen[v]).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

/// A proper 2-coloring of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    /// Validates that `a` and `b` partition the vertex set and every edge crosses.
    pub fn new(g: &Graph, a: &[usize], b: &[usize]) -> Result<Bipartition> {
        let mut side: Vec<Option<Side>> = vec![None; g.n()];
        for (list, s) in [(a, Side::A), (b, Side::B)] {
            for &v in list {
                g.check_vertex(v)?;
                if side[v].is_some() {
                    return Err(Error::InvalidBipartition(format!(
                        "vertex {v} listed twice"
                    )));
                }
                side[v] = Some(s);
            }
        }
        let side: Vec<Side> = side
            .into_iter()
            .enumerate()
            .map(|(v, s)| {
                s.ok_or_else(|| Error::InvalidBipartition(format!("vertex {v} not assigned")))
            })
            .collect::<Result<_>>()?;
        let bp = Bipartition { side };
        bp.check(g)?;
        Ok(bp)
    }

    /// Checks that this 2-coloring fits `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.side.len() != g.n() {
            return Err(Error::InvalidBipartition(format!(
                "coloring covers {} vertices, graph has {}",
                self.side.len(),
                g.n()
            )));
        }
        if let Some(e) = g.edges().iter().find(|e| self.side[e.u] == self.side[e.v]) {
            return Err(Error::InvalidBipartition(format!(
                "edge {e} has both ends on one side"
            )));
        }
        Ok(())
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn is_a(&self, v: usize) -> bool {
        self.side[v] == Side::A
    }

    pub fn a(&self) -> Vec<usize> {
        self.members(Side::A)
    }

    pub fn b(&self) -> Vec<usize> {
        self.members(Side::B)
    }

    fn members(&self, s: Side) -> Vec<usize> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == s)
            .collect()
    }

    /// Splits an edge into its (A-end, B-end).
    pub fn orient(&self, e: Edge) -> (usize, usize) {
        if self.is_a(e.u) {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        }
    }
}

/// Vertex sets of the connected components, each ascending, ordered by lowest id.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut comp = vec![usize::MAX; g.n()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..g.n() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

pub fn is_forest(g: &Graph) -> bool {
    g.m() + connected_components(g).len() == g.n()
}

/// BFS 2-coloring; the lowest id of each component is put on side A.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let mut side: Vec<Option<Side>> = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::A);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let flip = match side[v] {
                Some(Side::A) => Side::B,
                _ => Side::A,
            };
            for &w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(flip);
                        queue.push_back(w);
                    }
                    Some(s) if s != flip => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Bipartition {
        side: side.into_iter().map(|s| s.unwrap_or(Side::A)).collect(),
    })
}

/// Edge sets of the blocks (maximal 2-connected subgraphs and bridges).
///
/// Each block is sorted, and blocks are ordered by their smallest edge.
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<Edge>> {
    const NONE: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut blocks = Vec::new();
    // (vertex, dfs parent, next neighbor index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != NONE || g.degree(root) == 0 {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        frames.push((root, NONE, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if frame.2 < g.degree(v) {
                let w = g.neighbors(v)[frame.2];
                frame.2 += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == NONE {
                    edge_stack.push(Edge::new(v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(Edge::new(v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if parent != NONE {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let tree_edge = Edge::new(parent, v);
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == tree_edge {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort_unstable_by_key(|b: &Vec<Edge>| b[0]);
    blocks
}

/// Whether every block of the connected graph `g` is a cycle of odd length.
pub fn blocks_are_odd_cycles(g: &Graph) -> Result<bool> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(biconnected_blocks(g).iter().all(|b| is_odd_cycle(b)))
}

fn is_odd_cycle(block: &[Edge]) -> bool {
    if block.len() < 3 || block.len().is_multiple_of(2) {
        return false;
    }
    let mut touched: Vec<usize> = block.iter().flat_map(|e| [e.u, e.v]).collect();
    touched.sort_unstable();
    // every vertex appears exactly twice and there are as many vertices as edges
    touched.len() == 2 * block.len()
        && touched.chunks(2).all(|c| c[0] == c[1])
        && touched.windows(3).all(|w| !(w[0] == w[1] && w[1] == w[2]))
}

/// Standard graph families used throughout the tests and the CLI self-test.
pub mod families {
    use super::*;

    pub fn path(n: usize) -> Graph {
        Graph::from_sorted_edges(n, (1..n).map(|i| Edge::new(i - 1, i)).collect())
    }

    /// The cycle on `n >= 3` vertices `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<Edge> = (1..n).map(|i| Edge::new(i - 1, i)).collect();
        edges.push(Edge::new(0, n - 1));
        edges.sort_unstable();
        Graph::from_sorted_edges(n, edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push(Edge::new(u, v));
            }
        }
        Graph::from_sorted_edges(n, edges)
    }

    /// Sides are `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push(Edge::new(u, v));
            }
        }
        Graph::from_sorted_edges(a + b, edges)
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Graph {
        complete_bipartite(1, k)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push(Edge::new(i, (i + 1) % 5));
            edges.push(Edge::new(i, i + 5));
            edges.push(Edge::new(5 + i, 5 + (i + 2) % 5));
        }
        edges.sort_unstable();
        Graph::from_sorted_edges(10, edges)
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push(Edge::new(u, v));
                }
            }
        }
        Graph::from_sorted_edges(n, edges)
    }

    /// Uniform graph with `m` distinct edges (capped at the complete graph).
    pub fn random_gnm<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
        let cap = n * n.saturating_sub(1) / 2;
        let m = m.min(cap);
        let mut chosen = BTreeSet::new();
        while chosen.len() < m {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a != b {
                chosen.insert(Edge::new(a, b));
            }
        }
        Graph::from_sorted_edges(n, chosen.into_iter().collect())
    }

    /// The labeled graph on `n` vertices whose edges are selected by `mask`
    /// over the pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn from_mask(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    edges.push(Edge::new(u, v));
                }
                bit += 1;
            }
        }
        Graph::from_sorted_edges(n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn bowtie() -> Graph {
        g(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    }

    fn edges(list: &[(usize, usize)]) -> Vec<Edge> {
        let mut v: Vec<Edge> = list.iter().map(|&e| e.into()).collect();
        v.sort();
        v
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(Edge::new(0, 1)))
        );
    }

    #[test]
    fn components() {
        let p3k1 = g(4, &[(0, 1), (1, 2)]);
        assert_eq!(connected_components(&p3k1), vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(connected_components(&cycle(5)), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(
            connected_components(&Graph::empty(3)),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn forests() {
        assert!(is_forest(&path(4)));
        assert!(!is_forest(&cycle(4)));
        assert!(is_forest(&Graph::empty(0)));
    }

    #[test]
    fn bipartitions() {
        let bp = bipartition(&cycle(6)).unwrap();
        assert_eq!((bp.a(), bp.b()), (vec![0, 2, 4], vec![1, 3, 5]));
        assert!(bipartition(&cycle(5)).is_none());
        let bp = bipartition(&Graph::empty(2)).unwrap();
        assert_eq!((bp.a(), bp.b()), (vec![0, 1], vec![]));
    }

    #[test]
    fn explicit_bipartition_is_validated() {
        let p3 = path(3);
        assert!(Bipartition::new(&p3, &[0, 2], &[1]).is_ok());
        assert!(Bipartition::new(&p3, &[0, 1], &[2]).is_err());
        assert!(Bipartition::new(&p3, &[0], &[1]).is_err());
        assert!(Bipartition::new(&p3, &[0, 2], &[1, 2]).is_err());
    }

    #[test]
    fn blocks() {
        assert_eq!(
            biconnected_blocks(&bowtie()),
            vec![
                edges(&[(0, 1), (0, 2), (1, 2)]),
                edges(&[(0, 3), (0, 4), (3, 4)])
            ]
        );
        assert_eq!(biconnected_blocks(&path(2)), vec![edges(&[(0, 1)])]);
        assert_eq!(
            biconnected_blocks(&cycle(5)),
            vec![cycle(5).edges().to_vec()]
        );
    }

    #[test]
    fn odd_cycle_blocks() {
        assert_eq!(blocks_are_odd_cycles(&cycle(5)), Ok(true));
        assert_eq!(blocks_are_odd_cycles(&path(2)), Ok(false));
        assert_eq!(blocks_are_odd_cycles(&bowtie()), Ok(true));
        assert_eq!(blocks_are_odd_cycles(&Graph::empty(1)), Ok(true));
        assert_eq!(blocks_are_odd_cycles(&cycle(4)), Ok(false));
        assert_eq!(blocks_are_odd_cycles(&complete(4)), Ok(false));
        assert_eq!(
            blocks_are_odd_cycles(&Graph::empty(2)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn digraph_reachability_and_cycles() {
        let d = Digraph::new(4, [(1, 0), (2, 1), (3, 2)]).unwrap();
        assert!(d.is_acyclic());
        assert_eq!(d.reachable_from(&[2]), vec![0, 1, 2]);
        assert_eq!(d.reaching(&[1]), vec![1, 2, 3]);
        let c4 = Digraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_acyclic());
        assert!(Digraph::new(0, []).unwrap().is_acyclic());
        assert!(Digraph::new(2, [(1, 1)]).is_err());
    }

    #[test]
    fn induced_keeps_original_ids() {
        let sub = cycle(6).induced(&[5, 0, 1, 3]);
        assert_eq!(sub.vertices, vec![0, 1, 3, 5]);
        assert_eq!(sub.graph.edges(), &edges(&[(0, 1), (0, 3)])[..]);
        assert_eq!(sub.edge_to_original(Edge::new(0, 3)), Edge::new(0, 5));
    }

    #[test]
    fn family_sizes() {
        assert_eq!(petersen().m(), 15);
        assert!(petersen().neighbors(3).len() == 3);
        assert_eq!(complete_bipartite(3, 3).m(), 9);
        assert_eq!(from_mask(4, 0b111111), complete(4));
    }

    /// Brute force: does some closed walk of odd length exist? Equivalent to
    /// "some vertex reaches itself with odd parity" in the parity-doubled graph.
    fn has_odd_closed_walk(g: &Graph) -> bool {
        (0..g.n()).any(|s| {
            let mut seen = vec![[false; 2]; g.n()];
            seen[s][0] = true;
            let mut stack = vec![(s, 0usize)];
            while let Some((v, p)) = stack.pop() {
                for &w in g.neighbors(v) {
                    if !seen[w][1 - p] {
                        seen[w][1 - p] = true;
                        stack.push((w, 1 - p));
                    }
                }
            }
            seen[s][1]
        })
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                let edges = all.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e);
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn forest_iff_edge_count(g in arb_graph(12)) {
            let c = connected_components(&g).len();
            prop_assert_eq!(is_forest(&g), g.m() == g.n() - c);
        }

        #[test]
        fn components_partition_vertices(g in arb_graph(12)) {
            let mut all: Vec<usize> = connected_components(&g).concat();
            all.sort_unstable();
            prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        }

        #[test]
        fn blocks_partition_edges(g in arb_graph(10)) {
            let mut all: Vec<Edge> = biconnected_blocks(&g).concat();
            all.sort_unstable();
            prop_assert_eq!(&all[..], g.edges());
        }

        #[test]
        fn bipartition_iff_no_odd_closed_walk(g in arb_graph(8)) {
            match bipartition(&g) {
                Some(bp) => {
                    prop_assert!(bp.check(&g).is_ok());
                    prop_assert!(!has_odd_closed_walk(&g));
                }
                None => prop_assert!(has_odd_closed_walk(&g)),
            }
        }
    }
}
