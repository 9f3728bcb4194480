//! Property checks shared by the integration tests and the acceptance run.
//! Each check walks a set of graphs and tallies violations instead of
//! panicking, so callers can report or assert as they like.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use urmatch_core::accessibility::{
    find_e_good_ordering, find_e_good_ordering_with, induced_matching_edges,
    is_accessibility_ordering, TieBreak,
};
use urmatch_core::decomposition::{gallai_edmonds, verify_gallai_edmonds, GbVertex};
use urmatch_core::graph::families::{random_gnp, star};
use urmatch_core::graph::{bipartition, blocks_are_odd_cycles, Bipartition, Edge, Graph};
use urmatch_core::matching::{
    edge_in_some_maximum_matching, has_unique_perfect_matching, is_factor_critical,
    max_independent_set_bipartite, maximum_matching, maximum_matching_bipartite, missable_vertex,
    Matching,
};
use urmatch_core::oracle::{
    count_perfect_matchings, cross_validate, enumerate_labeled_graphs, enumerate_matchings,
    oracle_is_ur, OracleGuard,
};
use urmatch_core::recognition::{every_ur, every_ur_bipartite, some_ur};
use urmatch_core::ur::{
    build_matching_digraph, edge_exchanges, is_uniquely_restricted, konig_maximality_check,
};

const KEEP: usize = 10;

pub struct Tally {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub examples: Vec<String>,
}

impl Tally {
    pub fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            checked: 0,
            failed: 0,
            examples: Vec::new(),
        }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < KEEP {
                self.examples.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
        let room = KEEP.saturating_sub(self.examples.len());
        self.examples.extend(other.examples.into_iter().take(room));
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} checks, {} failures",
            self.name, self.checked, self.failed
        )
    }

    pub fn assert_clean(&self) {
        assert!(
            self.passed(),
            "{}\n{}",
            self.summary(),
            self.examples.join("\n")
        );
    }
}

pub fn show(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|e| e.to_string()).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

pub fn labeled_up_to(n_max: usize) -> impl Iterator<Item = Graph> {
    (0..=n_max).flat_map(enumerate_labeled_graphs)
}

pub fn bipartite_up_to(n_max: usize) -> impl Iterator<Item = (Graph, Bipartition)> {
    labeled_up_to(n_max).filter_map(|g| bipartition(&g).map(|bp| (g, bp)))
}

/// `count` graphs with `n` uniform in `lo..=hi` and `p` uniform over `ps`.
pub fn random_graphs(count: usize, lo: usize, hi: usize, ps: &[f64], seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(lo..=hi);
            let p = ps[rng.random_range(0..ps.len())];
            random_gnp(n, p, &mut rng)
        })
        .collect()
}

/// Random factor-critical graphs on exactly `n` (odd) vertices, built from an
/// odd cycle by adding odd ears, then sprinkled with chords. Roughly a third
/// use closed ears only and no chords, so their blocks are odd cycles.
pub fn random_factor_critical(count: usize, n: usize, seed: u64) -> Vec<Graph> {
    assert!(n % 2 == 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let cactus = rng.random_bool(0.35);
        let mut edges: BTreeSet<Edge> = BTreeSet::new();
        let start = if n == 1 {
            1
        } else {
            3 + 2 * rng.random_range(0..=(n - 3) / 2)
        };
        for i in 0..start {
            if start > 1 {
                edges.insert(Edge::new(i, (i + 1) % start));
            }
        }
        let mut used = start;
        let mut stuck = 0;
        while used < n && stuck < 50 {
            let k = 2 * rng.random_range(0..=(n - used) / 2);
            let x = rng.random_range(0..used);
            let y = if cactus || rng.random_bool(0.5) {
                x
            } else {
                rng.random_range(0..used)
            };
            if (x == y && k == 0) || (k == 0 && edges.contains(&Edge::new(x, y))) {
                stuck += 1;
                continue;
            }
            let mut path = vec![x];
            path.extend(used..used + k);
            path.push(y);
            for w in path.windows(2) {
                edges.insert(Edge::new(w[0], w[1]));
            }
            used += k;
        }
        if used < n {
            continue;
        }
        if !cactus {
            for _ in 0..rng.random_range(0..=3) {
                let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
                if a != b {
                    edges.insert(Edge::new(a, b));
                }
            }
        }
        out.push(Graph::new(n, edges).expect("ears produce simple graphs"));
    }
    out
}

fn all_maximum_matchings(g: &Graph) -> Vec<Matching> {
    enumerate_matchings(g, &OracleGuard::unlimited())
        .expect("unlimited guard")
        .maximum_matchings
        .into_iter()
        .map(|m| Matching::new(g, m).expect("oracle returns matchings"))
        .collect()
}

fn all_matchings(g: &Graph) -> (Vec<Matching>, usize) {
    let en = enumerate_matchings(g, &OracleGuard::unlimited()).expect("unlimited guard");
    let all = en
        .all_matchings
        .into_iter()
        .map(|m| Matching::new(g, m).expect("oracle returns matchings"))
        .collect();
    (all, en.maximum_size)
}

// ---------------------------------------------------------------- matching

pub fn nu_matches_oracle(graphs: impl IntoIterator<Item = Graph>) -> Tally {
    let mut t = Tally::new("maximum matching size equals oracle");
    for g in graphs {
        let m = maximum_matching(&g);
        let nu = enumerate_matchings(&g, &OracleGuard::unlimited())
            .unwrap()
            .maximum_size;
        t.check(m.check_in(&g).is_ok() && m.len() == nu, || {
            format!("{}: got {}, oracle {nu}", show(&g), m.len())
        });
    }
    t
}

pub fn konig_identity(graphs: impl IntoIterator<Item = (Graph, Bipartition)>) -> Tally {
    let mut t = Tally::new("König identity |I| + ν = n");
    for (g, bp) in graphs {
        let i_set = max_independent_set_bipartite(&g, &bp).unwrap();
        let nu = maximum_matching_bipartite(&g, &bp).unwrap().len();
        let independent = g
            .edges()
            .iter()
            .all(|e| !(i_set.binary_search(&e.u()).is_ok() && i_set.binary_search(&e.v()).is_ok()));
        t.check(independent && i_set.len() + nu == g.n(), || {
            format!("{}: |I|={} ν={nu}", show(&g), i_set.len())
        });
    }
    t
}

pub fn unique_pm_matches_count(graphs: impl IntoIterator<Item = Graph>) -> Tally {
    let mut t = Tally::new("unique perfect matching equals oracle count 1");
    for g in graphs {
        let count = count_perfect_matchings(&g, &OracleGuard::unlimited()).unwrap();
        let got = has_unique_perfect_matching(&g);
        t.check(got == (count == 1), || {
            format!("{}: got {got}, count {count}", show(&g))
        });
    }
    t
}

pub fn membership_matches_oracle(graphs: impl IntoIterator<Item = Graph>) -> Tally {
    let mut t = Tally::new("edge and vertex membership in maximum matchings");
    for g in graphs {
        let maxes = all_maximum_matchings(&g);
        for &e in g.edges() {
            let expected = maxes.iter().any(|m| m.contains(e));
            let got = edge_in_some_maximum_matching(&g, e).unwrap();
            t.check(got == expected, || {
                format!("{}: edge {e} got {got}", show(&g))
            });
        }
        for v in 0..g.n() {
            let expected = maxes.iter().any(|m| !m.is_covered(v));
            let got = missable_vertex(&g, v).unwrap();
            t.check(got == expected, || {
                format!("{}: vertex {v} got {got}", show(&g))
            });
        }
    }
    t
}

// ----------------------------------------------------------- decomposition

pub fn gallai_edmonds_invariants(graphs: impl IntoIterator<Item = Graph>) -> Tally {
    let mut t = Tally::new("Gallai-Edmonds invariants");
    for g in graphs {
        let ge = gallai_edmonds(&g);
        let a = ge.a_set.len();
        let gb_bipartite = ge.gb.edges().iter().all(|e| e.u() < a && e.v() >= a);
        let map_ok = ge.contraction_map.len() == a + ge.d_components.len()
            && ge.contraction_map.iter().all(|x| match *x {
                GbVertex::Outer(v) => ge.a_set.binary_search(&v).is_ok(),
                GbVertex::Component(k) => k < ge.d_components.len(),
            });
        let nu = ge.matching.len() as isize;
        let deficiency = g.n() as isize - 2 * nu == ge.deficiency();
        t.check(
            verify_gallai_edmonds(&g, &ge) && gb_bipartite && map_ok && deficiency,
            || show(&g),
        );
    }
    t
}

// ---------------------------------------------------------------------- ur

pub fn bipartite_ur_agreement(graphs: impl IntoIterator<Item = (Graph, Bipartition)>) -> Tally {
    let mut t = Tally::new("D(M) acyclic ⟺ uniquely restricted ⟺ oracle");
    for (g, bp) in graphs {
        for m in all_matchings(&g).0 {
            let acyclic = build_matching_digraph(&g, &bp, &m)
                .unwrap()
                .digraph
                .is_acyclic();
            let general = is_uniquely_restricted(&g, &m).unwrap();
            let oracle = oracle_is_ur(&g, &m, &OracleGuard::unlimited()).unwrap();
            t.check(acyclic == general && general == oracle, || {
                format!(
                    "{} M={:?}: {acyclic} {general} {oracle}",
                    show(&g),
                    m.pairs()
                )
            });
        }
    }
    t
}

pub fn konig_check_matches_nu(graphs: impl IntoIterator<Item = (Graph, Bipartition)>) -> Tally {
    let mut t = Tally::new("V⁺ ∩ V⁻ = ∅ ⟺ |M| = ν");
    for (g, bp) in graphs {
        let (all, nu) = all_matchings(&g);
        for m in all {
            let md = build_matching_digraph(&g, &bp, &m).unwrap();
            let got = konig_maximality_check(&md);
            t.check(got == (m.len() == nu), || {
                format!("{} M={:?}: got {got}", show(&g), m.pairs())
            });
        }
    }
    t
}

pub fn v_plus_minus_invariance(graphs: impl IntoIterator<Item = (Graph, Bipartition)>) -> Tally {
    let mut t = Tally::new("V⁺ and V⁻ independent of the maximum matching");
    for (g, bp) in graphs {
        let maxes = all_maximum_matchings(&g);
        let first = build_matching_digraph(&g, &bp, &maxes[0]).unwrap();
        for m in &maxes[1..] {
            let md = build_matching_digraph(&g, &bp, m).unwrap();
            t.check(
                md.v_plus == first.v_plus && md.v_minus == first.v_minus,
                || format!("{} M={:?}", show(&g), m.pairs()),
            );
        }
    }
    t
}

pub fn edge_exchange_closure(graphs: impl IntoIterator<Item = (Graph, Bipartition)>) -> Tally {
    let mut t = Tally::new("edge exchanges from an acyclic D(M) reach every maximum matching");
    for (g, bp) in graphs {
        let maxes = all_maximum_matchings(&g);
        let everything: HashSet<Vec<Edge>> = maxes.iter().map(|m| m.edges().to_vec()).collect();
        for m in &maxes {
            if !build_matching_digraph(&g, &bp, m)
                .unwrap()
                .digraph
                .is_acyclic()
            {
                continue;
            }
            let mut seen: HashSet<Vec<Edge>> = HashSet::new();
            let mut queue = VecDeque::from([m.clone()]);
            seen.insert(m.edges().to_vec());
            while let Some(cur) = queue.pop_front() {
                for next in edge_exchanges(&g, &bp, &cur).unwrap() {
                    if seen.insert(next.edges().to_vec()) {
                        queue.push_back(next);
                    }
                }
            }
            t.check(seen == everything, || {
                format!(
                    "{} from {:?}: reached {} of {}",
                    show(&g),
                    m.pairs(),
                    seen.len(),
                    everything.len()
                )
            });
        }
    }
    t
}

// ----------------------------------------------------------- accessibility

fn independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    (0u32..1 << g.n())
        .map(|mask| {
            (0..g.n())
                .filter(|&v| mask >> v & 1 == 1)
                .collect::<Vec<_>>()
        })
        .filter(|s: &Vec<usize>| {
            g.edges()
                .iter()
                .all(|e| !(s.contains(&e.u()) && s.contains(&e.v())))
        })
        .collect()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn is_matching(edges: &[Edge]) -> bool {
    let mut seen = HashSet::new();
    edges
        .iter()
        .all(|e| seen.insert(e.u()) && seen.insert(e.v()))
}

pub fn accessibility_definition(graphs: impl IntoIterator<Item = Graph>) -> Tally {
    let mut t = Tally::new("accessibility ordering ⟺ M^σ is a matching");
    for g in graphs {
        for i_set in independent_sets(&g) {
            for sigma in permutations(&i_set) {
                let acc = is_accessibility_ordering(&g, &i_set, &sigma).unwrap();
                let edges = induced_matching_edges(&g, &i_set, &sigma).unwrap();
                t.check(acc == is_matching(&edges), || {
                    format!("{} I={i_set:?} σ={sigma:?}", show(&g))
                });
            }
        }
    }
    t
}

fn maximum_independent_sets(g: &Graph, bp: &Bipartition) -> Vec<Vec<usize>> {
    let target = g.n() - maximum_matching_bipartite(g, bp).unwrap().len();
    independent_sets(g)
        .into_iter()
        .filter(|s| s.len() == target)
        .collect()
}

/// Oracle side of the ordering existence check: some maximum matching inside `allowed`
/// is uniquely restricted.
fn oracle_ur_within(g: &Graph, maxes: &[Matching], allowed: &BTreeSet<Edge>) -> bool {
    maxes.iter().any(|m| {
        m.edges().iter().all(|e| allowed.contains(e))
            && oracle_is_ur(g, m, &OracleGuard::unlimited()).unwrap()
    })
}

/// The full edge set plus `extra` random subsets per graph.
fn allowed_sets(g: &Graph, extra: usize, rng: &mut ChaCha8Rng) -> Vec<BTreeSet<Edge>> {
    let mut sets = vec![g.edges().iter().copied().collect()];
    for _ in 0..extra {
        let keep = rng.random_range(0.3..1.0);
        sets.push(
            g.edges()
                .iter()
                .copied()
                .filter(|_| rng.random_bool(keep))
                .collect(),
        );
    }
    sets
}

/// The greedy ordering search against the oracle: success ⟺ some UR maximum
/// matching inside `allowed`; the same answer for every maximum independent
/// set and every tie-break seed; and on success `M^σ` is a UR maximum
/// matching inside `allowed`.
pub fn ordering_existence(
    graphs: impl IntoIterator<Item = (Graph, Bipartition)>,
    extra_sets: usize,
    seeds: u64,
    seed: u64,
) -> Tally {
    let mut t = Tally::new("E-good ordering existence");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (g, bp) in graphs {
        let maxes = all_maximum_matchings(&g);
        let nu = maxes[0].len();
        let i_sets = maximum_independent_sets(&g, &bp);
        for allowed in allowed_sets(&g, extra_sets, &mut rng) {
            let expected = oracle_ur_within(&g, &maxes, &allowed);
            for i_set in &i_sets {
                let found = find_e_good_ordering(&g, &bp, i_set, &allowed).unwrap();
                t.check(found.is_some() == expected, || {
                    format!(
                        "{} I={i_set:?} E={allowed:?}: expected {expected}",
                        show(&g)
                    )
                });
                if let Some(o) = &found {
                    let m = &o.induced_matching;
                    let sound = m.len() == nu
                        && is_uniquely_restricted(&g, m).unwrap()
                        && m.edges().iter().all(|e| allowed.contains(e));
                    t.check(sound, || format!("{} I={i_set:?}: unsound M^σ", show(&g)));
                }
            }
            let i_set = &i_sets[0];
            for s in 0..seeds {
                let found =
                    find_e_good_ordering_with(&g, &bp, i_set, &allowed, TieBreak::Seeded(s))
                        .unwrap();
                t.check(found.is_some() == expected, || {
                    format!("{} seed {s}: expected {expected}", show(&g))
                });
            }
        }
    }
    t
}

/// Tie-break invariance on larger random bipartite graphs (no oracle).
pub fn tie_break_invariance(count: usize, seeds: u64, seed: u64) -> Tally {
    let mut t = Tally::new("greedy tie-break invariance");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < count {
        let n = rng.random_range(2..=14);
        let g = random_gnp(n, rng.random_range(0.1..0.5), &mut rng);
        let Some(bp) = bipartition(&g) else { continue };
        done += 1;
        let i_set = max_independent_set_bipartite(&g, &bp).unwrap();
        for allowed in allowed_sets(&g, 2, &mut rng) {
            let base = find_e_good_ordering(&g, &bp, &i_set, &allowed)
                .unwrap()
                .is_some();
            for s in 0..seeds {
                let got = find_e_good_ordering_with(&g, &bp, &i_set, &allowed, TieBreak::Seeded(s))
                    .unwrap()
                    .is_some();
                t.check(got == base, || format!("{} seed {s}", show(&g)));
            }
        }
    }
    t
}

// ------------------------------------------------------------- recognition

/// Both recognition procedures against the oracle, with witness soundness,
/// the bipartite route and the block characterization checked on the way.
pub fn oracle_equivalence(graphs: impl IntoIterator<Item = Graph>, guard: &OracleGuard) -> Tally {
    let mut t = Tally::new("recognition agrees with the oracle");
    for g in graphs {
        match cross_validate(&g, guard) {
            Ok(cc) => t.check(cc.agrees(), || {
                format!("{}: {}", show(&g), cc.problems.join("; "))
            }),
            Err(e) => t.check(false, || format!("{}: {e}", show(&g))),
        }
    }
    t
}

/// Witness size and unique restriction, without the oracle.
pub fn witness_soundness(graphs: impl IntoIterator<Item = Graph>) -> Tally {
    let mut t = Tally::new("witness soundness");
    for g in graphs {
        let r = some_ur(&g);
        if !r.answer {
            continue;
        }
        let nu = maximum_matching(&g).len();
        let ok = r.witness.as_ref().is_some_and(|w| {
            w.check_in(&g).is_ok() && w.len() == nu && is_uniquely_restricted(&g, w).unwrap()
        });
        t.check(ok, || show(&g));
    }
    t
}

pub fn every_implies_some(graphs: impl IntoIterator<Item = Graph>) -> Tally {
    let mut t = Tally::new("every_ur ⟹ some_ur");
    for g in graphs {
        t.check(!every_ur(&g).answer || some_ur(&g).answer, || show(&g));
    }
    t
}

pub fn bipartite_consistency(graphs: impl IntoIterator<Item = (Graph, Bipartition)>) -> Tally {
    let mut t = Tally::new("bipartite and general every_ur agree");
    for (g, bp) in graphs {
        let general = every_ur(&g).answer;
        let bip = every_ur_bipartite(&g, &bp).unwrap().answer;
        t.check(general == bip, || {
            format!("{}: general {general}, bipartite {bip}", show(&g))
        });
    }
    t
}

/// On factor-critical graphs: all blocks odd cycles ⟺ `H - h` has a unique
/// perfect matching for every `h`.
pub fn block_characterization(graphs: impl IntoIterator<Item = Graph>) -> Tally {
    let mut t = Tally::new("odd-cycle blocks ⟺ every H-h uniquely perfectly matchable");
    for h in graphs {
        if !is_factor_critical(&h) || h.n() == 0 {
            continue;
        }
        let blocks = blocks_are_odd_cycles(&h).unwrap();
        let definitional = (0..h.n()).all(|v| {
            let sub = h.without_vertices(&[v]);
            count_perfect_matchings(&sub.graph, &OracleGuard::unlimited()).unwrap() == 1
        });
        t.check(blocks == definitional, || {
            format!("{}: blocks {blocks}, per-vertex {definitional}", show(&h))
        });
    }
    t
}

/// The standard families with their expected `(some, every)` answers; `None`
/// where only `some` is pinned down.
pub fn family_cases() -> Vec<(String, Graph, bool, Option<bool>)> {
    use urmatch_core::graph::families::{complete, complete_bipartite, cycle, path};
    let mut cases = Vec::new();
    for k in 2..=8 {
        cases.push((format!("C{}", 2 * k), cycle(2 * k), false, Some(false)));
    }
    for k in 1..=8 {
        cases.push((
            format!("C{}", 2 * k + 1),
            cycle(2 * k + 1),
            true,
            Some(true),
        ));
    }
    for n in 2..=12 {
        cases.push((format!("P{n}"), path(n), true, Some(true)));
    }
    for n in 4..=8 {
        cases.push((format!("K{n}"), complete(n), false, None));
    }
    for k in 2..=5 {
        cases.push((format!("K{k},{k}"), complete_bipartite(k, k), false, None));
    }
    cases.push(("K1,5".into(), star(5), true, Some(true)));
    cases
}

/// Fixed answers on the standard families. The oracle is also consulted for
/// graphs with at most `oracle_max_n` vertices.
pub fn named_families(oracle_max_n: usize) -> Tally {
    let mut t = Tally::new("named families");
    let guard = OracleGuard::with_max_vertices(oracle_max_n);
    for (name, g, some, every) in family_cases() {
        let s = some_ur(&g);
        let e = every_ur(&g).answer;
        t.check(s.answer == some, || format!("{name}: some_ur {}", s.answer));
        if let Some(every) = every {
            t.check(e == every, || format!("{name}: every_ur {e}"));
        }
        if g.n() <= oracle_max_n {
            let cc = cross_validate(&g, &guard).unwrap();
            t.check(cc.agrees(), || {
                format!("{name}: {}", cc.problems.join("; "))
            });
            t.check(cc.oracle_some == some, || format!("{name}: oracle some"));
            if let Some(every) = every {
                t.check(cc.oracle_every == every, || format!("{name}: oracle every"));
            }
        }
    }
    t
}

/// A shuffled copy of `g`, to vary vertex ids in otherwise fixed families.
pub fn relabel(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Graph::new(g.n(), g.edges().iter().map(|e| (perm[e.u()], perm[e.v()]))).unwrap()
}
