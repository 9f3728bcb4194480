//! Deciding whether some, or every, maximum matching of a graph is uniquely
//! restricted.
//!
//! Both procedures work on the Gallai–Edmonds decomposition. The C-part must
//! have a unique perfect matching in each component. What happens between
//! `A(G)` and the D-components is captured by `G_B`. Inside a D-component `H`
//! the question is which vertices `h` leave `H - h` with a unique perfect
//! matching.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::accessibility::find_e_good_ordering;
use crate::blossom::BlossomSearch;
use crate::decomposition::{gallai_edmonds, GallaiEdmonds};
use crate::error::{Error, Result};
use crate::graph::{blocks_are_odd_cycles, is_forest, Bipartition, Edge, Graph, Subgraph};
use crate::matching::{
    edge_in_some_given, max_independent_set_bipartite, maximum_matching,
    maximum_matching_bipartite, perfect_matching_is_unique, Matching,
};
use crate::ur::{build_matching_digraph, restrict_matching};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    SomeUr,
    EveryUr,
}

impl Property {
    pub fn as_str(&self) -> &'static str {
        match self {
            Property::SomeUr => "some_ur",
            Property::EveryUr => "every_ur",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The condition a negative answer is blamed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FailureTag {
    CComponentPmNotUnique,
    GbNoUrMatchingWithinE,
    DComponentNoUniquePmVertex,
    DComponentBlocksNotOddCycles,
    GbEveryMaxMatchingNotUr,
    GbEdgeMultipleNeighbors,
    GbDigraphCyclic,
    VPlusNotForest,
    VMinusNotForest,
}

impl FailureTag {
    pub const ALL: [FailureTag; 9] = [
        FailureTag::CComponentPmNotUnique,
        FailureTag::GbNoUrMatchingWithinE,
        FailureTag::DComponentNoUniquePmVertex,
        FailureTag::DComponentBlocksNotOddCycles,
        FailureTag::GbEveryMaxMatchingNotUr,
        FailureTag::GbEdgeMultipleNeighbors,
        FailureTag::GbDigraphCyclic,
        FailureTag::VPlusNotForest,
        FailureTag::VMinusNotForest,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FailureTag::CComponentPmNotUnique => "c_component_pm_not_unique",
            FailureTag::GbNoUrMatchingWithinE => "gb_no_ur_matching_within_E",
            FailureTag::DComponentNoUniquePmVertex => "d_component_no_unique_pm_vertex",
            FailureTag::DComponentBlocksNotOddCycles => "d_component_blocks_not_odd_cycles",
            FailureTag::GbEveryMaxMatchingNotUr => "gb_every_max_matching_not_ur",
            FailureTag::GbEdgeMultipleNeighbors => "gb_edge_multiple_neighbors",
            FailureTag::GbDigraphCyclic => "gb_digraph_cyclic",
            FailureTag::VPlusNotForest => "v_plus_not_forest",
            FailureTag::VMinusNotForest => "v_minus_not_forest",
        }
    }
}

impl fmt::Display for FailureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FailureTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        FailureTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown failure tag {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionReport {
    pub property: Property,
    pub answer: bool,
    /// A uniquely restricted maximum matching; only for a positive `some_ur`.
    pub witness: Option<Matching>,
    /// The first violated condition.
    pub failure: Option<FailureTag>,
    /// Every violated condition that was evaluated, in condition order.
    pub failures: Vec<FailureTag>,
}

impl RecognitionReport {
    fn new(property: Property, failures: Vec<FailureTag>, witness: Option<Matching>) -> Self {
        RecognitionReport {
            property,
            answer: failures.is_empty(),
            witness,
            failure: failures.first().copied(),
            failures,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    /// Keep evaluating conditions after the first failure.
    pub all_failures: bool,
    /// Cross-check the odd-cycle block test on D-components against the
    /// per-vertex unique-perfect-matching definition.
    pub verify_blocks: bool,
}

/// Edges `aH` of `G_B` (in `G_B` ids) such that `a` has exactly one neighbor
/// `h` in `H` and `H - h` has a unique perfect matching.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AllowedEdgeSet {
    pub edges: BTreeSet<Edge>,
    /// The original vertex `h` each allowed edge attaches to.
    pub attachment: BTreeMap<Edge, usize>,
}

pub fn allowed_edges(g: &Graph, ge: &GallaiEdmonds) -> AllowedEdgeSet {
    Context::new(g, ge).allowed_edges()
}

/// Per-call working state: induced D- and C-component graphs, each with the
/// restriction of the decomposition's maximum matching, and a cache of
/// `H - h` unique-perfect-matching answers.
struct Context<'a> {
    g: &'a Graph,
    ge: &'a GallaiEdmonds,
    comp_of: Vec<usize>,
    d_parts: Vec<(Subgraph, Matching)>,
    after_deleting: HashMap<usize, Option<Vec<Edge>>>,
}

impl<'a> Context<'a> {
    fn new(g: &'a Graph, ge: &'a GallaiEdmonds) -> Self {
        let mut comp_of = vec![usize::MAX; g.n()];
        for (k, comp) in ge.d_components.iter().enumerate() {
            for &v in comp {
                comp_of[v] = k;
            }
        }
        let d_parts = ge
            .d_components
            .iter()
            .map(|comp| {
                let sub = g.induced(comp);
                let mut near = restrict_matching(&sub, &ge.matching);
                if 2 * near.len() + 1 != sub.graph.n() {
                    near = maximum_matching(&sub.graph);
                }
                (sub, near)
            })
            .collect();
        Context {
            g,
            ge,
            comp_of,
            d_parts,
            after_deleting: HashMap::new(),
        }
    }

    /// Unique perfect matchings of all C-components (original ids), or `None`
    /// if some component's perfect matching is not unique.
    fn c_part(&self) -> Option<Vec<Edge>> {
        let mut edges = Vec::new();
        for comp in &self.ge.c_components {
            let sub = self.g.induced(comp);
            let mut pm = restrict_matching(&sub, &self.ge.matching);
            if 2 * pm.len() != sub.graph.n() {
                pm = maximum_matching(&sub.graph);
                if 2 * pm.len() != sub.graph.n() {
                    return None;
                }
            }
            if !perfect_matching_is_unique(&sub.graph, &pm) {
                return None;
            }
            edges.extend(pm.edges().iter().map(|&e| sub.edge_to_original(e)));
        }
        Some(edges)
    }

    /// The unique perfect matching of `H - h` (original ids) for the
    /// D-component `H` containing `h`, if it exists and is unique.
    fn unique_pm_without(&mut self, h: usize) -> Option<Vec<Edge>> {
        if let Some(cached) = self.after_deleting.get(&h) {
            return cached.clone();
        }
        let (sub, near) = &self.d_parts[self.comp_of[h]];
        let local_h = sub.local(h).expect("h lies in its component");
        let answer = unique_pm_after_deleting(&sub.graph, near, local_h).map(|pm| {
            pm.edges()
                .iter()
                .map(|&e| sub.edge_to_original(e))
                .collect()
        });
        self.after_deleting.insert(h, answer.clone());
        answer
    }

    fn neighbors_in_component(&self, a: usize, k: usize) -> Vec<usize> {
        self.g
            .neighbors(a)
            .iter()
            .copied()
            .filter(|&w| self.comp_of[w] == k)
            .collect()
    }

    fn gb_edge_parts(&self, e: Edge) -> (usize, usize) {
        let a_count = self.ge.a_set.len();
        let (x, y) = e.endpoints();
        debug_assert!(x < a_count && y >= a_count);
        (self.ge.a_set[x], y - a_count)
    }

    fn allowed_edges(&mut self) -> AllowedEdgeSet {
        let mut out = AllowedEdgeSet::default();
        for &e in self.ge.gb.edges() {
            let (a, k) = self.gb_edge_parts(e);
            if let [h] = self.neighbors_in_component(a, k)[..] {
                if self.unique_pm_without(h).is_some() {
                    out.edges.insert(e);
                    out.attachment.insert(e, h);
                }
            }
        }
        out
    }

    /// Lowest `h` in component `k` with `H - h` uniquely perfectly matchable.
    fn lowest_good_vertex(&mut self, k: usize) -> Option<(usize, Vec<Edge>)> {
        for i in 0..self.ge.d_components[k].len() {
            let h = self.ge.d_components[k][i];
            if let Some(pm) = self.unique_pm_without(h) {
                return Some((h, pm));
            }
        }
        None
    }
}

/// With `near` a near-perfect matching of the factor-critical graph `hg`,
/// returns the perfect matching of `hg - h` if it is unique.
fn unique_pm_after_deleting(hg: &Graph, near: &Matching, h: usize) -> Option<Matching> {
    let mut search = BlossomSearch::with_matching(hg, near);
    if let Some(u) = search.remove_vertex(h) {
        // any augmenting path must start at the freed partner of h
        if !search.augment_from(u) {
            return None;
        }
    }
    if 2 * search.size() + 1 != hg.n() {
        return None;
    }
    let pm = search.into_matching();
    let unique = pm.edges().iter().all(|&e| {
        let mut s = BlossomSearch::with_matching(hg, &pm);
        s.remove_vertex(h);
        s.forbid_edge(e);
        !s.augment_from(e.u())
    });
    unique.then_some(pm)
}

pub fn some_ur(g: &Graph) -> RecognitionReport {
    some_ur_with(g, &gallai_edmonds(g), &Options::default())
}

/// Some maximum matching is uniquely restricted iff
/// (i) every C-component has a unique perfect matching,
/// (ii) `G_B` has a uniquely restricted maximum matching inside the allowed
/// edge set, and (iii) every D-component `H` has a vertex `h` such that
/// `H - h` has a unique perfect matching. On success the witness joins the
/// C-part matching, one edge `ah` per `G_B` matching edge `aH`, and the unique
/// perfect matching of `H - h` in every D-component.
pub fn some_ur_with(g: &Graph, ge: &GallaiEdmonds, opts: &Options) -> RecognitionReport {
    let mut ctx = Context::new(g, ge);
    let mut failures = Vec::new();
    let done = |failures: &Vec<FailureTag>| !failures.is_empty() && !opts.all_failures;

    let c_edges = ctx.c_part();
    if c_edges.is_none() {
        failures.push(FailureTag::CComponentPmNotUnique);
        if done(&failures) {
            return RecognitionReport::new(Property::SomeUr, failures, None);
        }
    }

    let allowed = ctx.allowed_edges();
    let independent = max_independent_set_bipartite(&ge.gb, &ge.gb_sides)
        .expect("G_B comes with a valid bipartition");
    let ordering = find_e_good_ordering(&ge.gb, &ge.gb_sides, &independent, &allowed.edges)
        .expect("independent set is maximum by construction");
    if ordering.is_none() {
        failures.push(FailureTag::GbNoUrMatchingWithinE);
        if done(&failures) {
            return RecognitionReport::new(Property::SomeUr, failures, None);
        }
    }

    // Attachment vertex per D-component chosen by the G_B matching.
    let mut attached: BTreeMap<usize, usize> = BTreeMap::new();
    let mut cross_edges = Vec::new();
    if let Some(o) = &ordering {
        for &e in o.induced_matching.edges() {
            let h = allowed.attachment[&e];
            let (a, k) = ctx.gb_edge_parts(e);
            attached.insert(k, h);
            cross_edges.push(Edge::new(a, h));
        }
    }
    let mut inner_edges = Vec::new();
    let mut d_ok = true;
    for k in 0..ge.d_components.len() {
        let chosen = match attached.get(&k) {
            Some(&h) => ctx.unique_pm_without(h).map(|pm| (h, pm)),
            None => ctx.lowest_good_vertex(k),
        };
        match chosen {
            Some((_, pm)) => inner_edges.extend(pm),
            None => {
                d_ok = false;
                break;
            }
        }
    }
    if !d_ok {
        failures.push(FailureTag::DComponentNoUniquePmVertex);
    }

    let witness = if failures.is_empty() {
        let edges = c_edges
            .into_iter()
            .flatten()
            .chain(cross_edges)
            .chain(inner_edges);
        Some(Matching::new(g, edges).expect("witness parts are disjoint edges of G"))
    } else {
        None
    };
    RecognitionReport::new(Property::SomeUr, failures, witness)
}

pub fn every_ur(g: &Graph) -> RecognitionReport {
    every_ur_with(g, &gallai_edmonds(g), &Options::default())
        .expect("no cross-check requested, so no disagreement can be reported")
}

/// Every maximum matching is uniquely restricted iff
/// (i) every C-component has a unique perfect matching,
/// (ii) every D-component is connected with all blocks odd cycles,
/// (iii) every maximum matching of `G_B` is uniquely restricted, and
/// (iv) whenever a `G_B` edge `aH` lies in some maximum matching of `G_B`,
/// `a` has exactly one neighbor in `H`.
///
/// Fails only when `verify_blocks` is set and the block test disagrees with
/// the per-vertex definition.
pub fn every_ur_with(g: &Graph, ge: &GallaiEdmonds, opts: &Options) -> Result<RecognitionReport> {
    let mut ctx = Context::new(g, ge);
    let mut failures = Vec::new();
    let done = |failures: &Vec<FailureTag>| !failures.is_empty() && !opts.all_failures;
    let report = |failures| Ok(RecognitionReport::new(Property::EveryUr, failures, None));

    if ctx.c_part().is_none() {
        failures.push(FailureTag::CComponentPmNotUnique);
        if done(&failures) {
            return report(failures);
        }
    }

    for k in 0..ge.d_components.len() {
        let fast =
            blocks_are_odd_cycles(&ctx.d_parts[k].0.graph).expect("D-components are connected");
        if opts.verify_blocks {
            let definitional = ge.d_components[k]
                .iter()
                .all(|&h| ctx.unique_pm_without(h).is_some());
            if definitional != fast {
                return Err(Error::Inconsistent(format!(
                    "D-component {k}: odd-cycle block test says {fast}, \
                     per-vertex unique perfect matching check says {definitional}"
                )));
            }
        }
        if !fast {
            failures.push(FailureTag::DComponentBlocksNotOddCycles);
            break;
        }
    }
    if done(&failures) {
        return report(failures);
    }

    let gb_report = every_ur_bipartite(&ge.gb, &ge.gb_sides)?;
    if !gb_report.answer {
        failures.push(FailureTag::GbEveryMaxMatchingNotUr);
        if done(&failures) {
            return report(failures);
        }
    }

    let gb_matching = maximum_matching(&ge.gb);
    let violated = ge.gb.edges().iter().any(|&e| {
        let (a, k) = ctx.gb_edge_parts(e);
        ctx.neighbors_in_component(a, k).len() > 1 && edge_in_some_given(&ge.gb, &gb_matching, e)
    });
    if violated {
        failures.push(FailureTag::GbEdgeMultipleNeighbors);
    }
    report(failures)
}

/// Bipartite criterion, from any one maximum matching `M`: every maximum
/// matching is uniquely restricted iff `D(M)` is acyclic and both `G[V⁺(M)]`
/// and `G[V⁻(M)]` are forests. All three conditions are always evaluated.
pub fn every_ur_bipartite(g: &Graph, sides: &Bipartition) -> Result<RecognitionReport> {
    let m = maximum_matching_bipartite(g, sides)?;
    let md = build_matching_digraph(g, sides, &m)?;
    let mut failures = Vec::new();
    if !md.digraph.is_acyclic() {
        failures.push(FailureTag::GbDigraphCyclic);
    }
    if !is_forest(&g.induced(&md.v_plus).graph) {
        failures.push(FailureTag::VPlusNotForest);
    }
    if !is_forest(&g.induced(&md.v_minus).graph) {
        failures.push(FailureTag::VMinusNotForest);
    }
    Ok(RecognitionReport::new(Property::EveryUr, failures, None))
}
