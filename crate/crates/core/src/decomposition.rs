//! Gallai–Edmonds decomposition and the contracted bipartite graph `G_B`.

use std::collections::BTreeSet;

use crate::graph::{connected_components, Bipartition, Edge, Graph, Subgraph};
use crate::matching::{
    is_factor_critical, maximum_matching, maximum_matching_bipartite, missable_given, Matching,
};

/// What a vertex of `G_B` stands for in the original graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GbVertex {
    /// A vertex of `A(G)`, by original id.
    Outer(usize),
    /// A component of `G[D(G)]`, by index into `d_components`.
    Component(usize),
}

/// The partition `D(G)`, `A(G)`, `C(G)` together with `G_B`.
///
/// In `G_B` the `A(G)` vertices come first (ids `0..a_set.len()`, ascending
/// original id), followed by one vertex per D-component in `d_components` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiEdmonds {
    pub d_set: Vec<usize>,
    pub a_set: Vec<usize>,
    pub c_set: Vec<usize>,
    /// Components of `G[D(G)]`, ordered by lowest vertex id.
    pub d_components: Vec<Vec<usize>>,
    /// Components of `G[C(G)]`, ordered by lowest vertex id.
    pub c_components: Vec<Vec<usize>>,
    pub gb: Graph,
    pub gb_sides: Bipartition,
    pub contraction_map: Vec<GbVertex>,
    /// The maximum matching of `G` the decomposition was computed from.
    pub matching: Matching,
}

impl GallaiEdmonds {
    /// Index into `d_components` of the component containing `v`, if `v ∈ D(G)`.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.d_components
            .iter()
            .position(|c| c.binary_search(&v).is_ok())
    }

    pub fn gb_id_of_component(&self, index: usize) -> usize {
        self.a_set.len() + index
    }

    /// `G_B` id of an `A(G)` vertex.
    pub fn gb_id_of_outer(&self, a: usize) -> Option<usize> {
        self.a_set.binary_search(&a).ok()
    }

    /// `n - 2ν(G)`, the number of vertices every maximum matching misses.
    pub fn deficiency(&self) -> isize {
        self.d_components.len() as isize - self.a_set.len() as isize
    }
}

fn components_of(g: &Graph, vertices: &[usize]) -> Vec<Vec<usize>> {
    let sub: Subgraph = g.induced(vertices);
    connected_components(&sub.graph)
        .into_iter()
        .map(|c| c.into_iter().map(|v| sub.to_original(v)).collect())
        .collect()
}

/// Computes `D(G)` by the per-vertex test ν(G - v) = ν(G), then `A(G)`, `C(G)`,
/// the D- and C-components and `G_B`.
pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let n = g.n();
    let matching = maximum_matching(g);
    let mut in_d = vec![false; n];
    // Every maximum matching of a graph with a perfect matching is perfect.
    if 2 * matching.len() < n {
        for (v, d) in in_d.iter_mut().enumerate() {
            *d = missable_given(g, &matching, v);
        }
    }
    let d_set: Vec<usize> = (0..n).filter(|&v| in_d[v]).collect();
    let a_set: Vec<usize> = (0..n)
        .filter(|&v| !in_d[v] && g.neighbors(v).iter().any(|&w| in_d[w]))
        .collect();
    let c_set: Vec<usize> = (0..n)
        .filter(|&v| !in_d[v] && a_set.binary_search(&v).is_err())
        .collect();
    let d_components = components_of(g, &d_set);
    let c_components = components_of(g, &c_set);

    let mut comp_index = vec![usize::MAX; n];
    for (k, comp) in d_components.iter().enumerate() {
        for &v in comp {
            comp_index[v] = k;
        }
    }
    let a_count = a_set.len();
    let mut gb_edges = BTreeSet::new();
    for (i, &a) in a_set.iter().enumerate() {
        for &w in g.neighbors(a) {
            if in_d[w] {
                gb_edges.insert(Edge::new(i, a_count + comp_index[w]));
            }
        }
    }
    let gb_n = a_count + d_components.len();
    let gb = Graph::new(gb_n, gb_edges).expect("contracted edges are distinct and in range");
    let a_side: Vec<usize> = (0..a_count).collect();
    let c_side: Vec<usize> = (a_count..gb_n).collect();
    let gb_sides =
        Bipartition::new(&gb, &a_side, &c_side).expect("G_B only joins A(G) to components");
    let contraction_map = a_set
        .iter()
        .map(|&a| GbVertex::Outer(a))
        .chain((0..d_components.len()).map(GbVertex::Component))
        .collect();

    GallaiEdmonds {
        d_set,
        a_set,
        c_set,
        d_components,
        c_components,
        gb,
        gb_sides,
        contraction_map,
        matching,
    }
}

/// Independently re-checks a decomposition against `g`: the partition and
/// component structure, factor-criticality of D-components, perfect
/// matchability of C-components, the deficiency identity, `G_B` itself and
/// ν(G_B) = |A(G)|.
pub fn verify_gallai_edmonds(g: &Graph, ge: &GallaiEdmonds) -> bool {
    let n = g.n();
    let mut label = vec![0u8; n];
    for (set, tag) in [(&ge.d_set, 1u8), (&ge.a_set, 2), (&ge.c_set, 3)] {
        for &v in set.iter() {
            if v >= n || label[v] != 0 {
                return false;
            }
            label[v] = tag;
        }
    }
    if label.contains(&0) {
        return false;
    }
    let neighbors_d = |v: usize| g.neighbors(v).iter().any(|&w| label[w] == 1);
    let a_ok = (0..n).all(|v| (label[v] == 2) == (label[v] != 1 && neighbors_d(v)));
    if !a_ok
        || components_of(g, &ge.d_set) != ge.d_components
        || components_of(g, &ge.c_set) != ge.c_components
    {
        return false;
    }
    let d_ok = ge
        .d_components
        .iter()
        .all(|comp| is_factor_critical(&g.induced(comp).graph));
    let c_ok = ge.c_components.iter().all(|comp| {
        let sub = g.induced(comp);
        2 * maximum_matching(&sub.graph).len() == sub.graph.n()
    });
    let nu = maximum_matching(g).len() as isize;
    if !d_ok || !c_ok || n as isize - 2 * nu != ge.deficiency() {
        return false;
    }
    let rebuilt = gallai_edmonds_gb_only(g, ge);
    rebuilt.as_ref() == Some(&ge.gb)
        && maximum_matching_bipartite(&ge.gb, &ge.gb_sides)
            .map(|m| m.len() == ge.a_set.len())
            .unwrap_or(false)
}

fn gallai_edmonds_gb_only(g: &Graph, ge: &GallaiEdmonds) -> Option<Graph> {
    let a_count = ge.a_set.len();
    let mut edges = BTreeSet::new();
    for (k, comp) in ge.d_components.iter().enumerate() {
        for &h in comp {
            for &a in g.neighbors(h) {
                if let Ok(i) = ge.a_set.binary_search(&a) {
                    edges.insert(Edge::new(i, a_count + k));
                }
            }
        }
    }
    Graph::new(a_count + ge.d_components.len(), edges).ok()
}
