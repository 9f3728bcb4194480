//! Edmonds' blossom search for augmenting paths in general graphs.
//!
//! One search grows an alternating tree from a single free root, contracting
//! odd cycles by redirecting `base`. Searches can be run on a graph with some
//! vertices deleted and one edge forbidden, starting from any matching. That
//! is what lets the matching predicates answer "is ν(G - X) still k?" with a
//! single search instead of a fresh maximum-matching computation.

use std::collections::VecDeque;

use crate::graph::{Edge, Graph};
use crate::matching::Matching;

const NONE: usize = usize::MAX;

pub(crate) struct BlossomSearch<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    removed: Vec<bool>,
    forbidden: Option<Edge>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<u32>,
    lca_stamp: u32,
    queue: VecDeque<usize>,
}

impl<'g> BlossomSearch<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        let n = g.n();
        BlossomSearch {
            g,
            mate: vec![NONE; n],
            removed: vec![false; n],
            forbidden: None,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![0; n],
            lca_stamp: 0,
            queue: VecDeque::new(),
        }
    }

    pub(crate) fn with_matching(g: &'g Graph, m: &Matching) -> Self {
        let mut s = Self::new(g);
        for e in m.edges() {
            s.mate[e.u()] = e.v();
            s.mate[e.v()] = e.u();
        }
        s
    }

    /// Deletes `v`; its matching edge (if any) is dropped and the former mate returned.
    pub(crate) fn remove_vertex(&mut self, v: usize) -> Option<usize> {
        self.removed[v] = true;
        let w = self.mate[v];
        self.mate[v] = NONE;
        if w != NONE {
            self.mate[w] = NONE;
            Some(w)
        } else {
            None
        }
    }

    /// Forbids `e`, dropping it from the matching if present.
    pub(crate) fn forbid_edge(&mut self, e: Edge) {
        if self.mate[e.u()] == e.v() {
            self.mate[e.u()] = NONE;
            self.mate[e.v()] = NONE;
        }
        self.forbidden = Some(e);
    }

    /// Greedy initial matching in ascending vertex order.
    pub(crate) fn greedy(&mut self) {
        for v in 0..self.g.n() {
            if self.removed[v] || self.mate[v] != NONE {
                continue;
            }
            let g = self.g;
            if let Some(&w) = g
                .neighbors(v)
                .iter()
                .find(|&&w| self.usable(v, w) && self.mate[w] == NONE)
            {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
    }

    /// Runs one search from every free vertex in ascending order.
    pub(crate) fn maximize(&mut self) {
        for v in 0..self.g.n() {
            if !self.removed[v] && self.mate[v] == NONE {
                self.augment_from(v);
            }
        }
    }

    pub(crate) fn size(&self) -> usize {
        self.mate.iter().filter(|&&w| w != NONE).count() / 2
    }

    pub(crate) fn into_matching(self) -> Matching {
        let mate = self
            .mate
            .into_iter()
            .map(|w| if w == NONE { None } else { Some(w) })
            .collect();
        Matching::from_mate(mate)
    }

    #[inline]
    fn usable(&self, v: usize, w: usize) -> bool {
        !self.removed[w]
            && match self.forbidden {
                Some(e) => e != Edge::new(v, w),
                None => true,
            }
    }

    /// Searches for an augmenting path from the free vertex `root` and applies it.
    pub(crate) fn augment_from(&mut self, root: usize) -> bool {
        debug_assert!(!self.removed[root] && self.mate[root] == NONE);
        match self.find_path(root) {
            Some(end) => {
                let mut v = end;
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
                true
            }
            None => false,
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        for i in 0..n {
            self.parent[i] = NONE;
            self.base[i] = i;
            self.used[i] = false;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        let g = self.g;
        while let Some(v) = self.queue.pop_front() {
            for &to in g.neighbors(v) {
                if !self.usable(v, to) || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn lca(&mut self, a: usize, b: usize) -> usize {
        self.lca_stamp = self.lca_stamp.wrapping_add(1);
        if self.lca_stamp == 0 {
            self.lca_mark.iter_mut().for_each(|m| *m = 0);
            self.lca_stamp = 1;
        }
        let stamp = self.lca_stamp;
        let mut a = a;
        loop {
            a = self.base[a];
            self.lca_mark[a] = stamp;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base[b];
            if self.lca_mark[b] == stamp {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }
}
