//! Maximum matchings and the matching-covered / factor-critical predicates.

use std::collections::VecDeque;

use crate::certificate::{Certificate, Reason, Witness};
use crate::graph::{edge, Bipartition, Edge, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    fn from_mates(mate: &[usize]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != NONE && v < m)
            .map(|(v, &m)| (v, m))
            .collect();
        Matching { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&edge(u, v)).is_ok()
    }

    /// Checks the matching invariants against a host graph.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut covered = vec![false; g.n()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        true
    }

    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        self.is_valid_in(g) && 2 * self.len() == g.n()
    }
}

/// Edmonds' blossom algorithm with explicit base/parent arrays.
struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.g.n() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&u) = self.g.neighbors(v).iter().find(|&&u| self.mate[u] == NONE) {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
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
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    /// Augments from every exposed root. Returns `false` as soon as more than
    /// `stop_after_exposed` roots are found to stay exposed.
    fn run(&mut self, stop_after_exposed: Option<usize>) -> bool {
        self.greedy();
        let mut exposed = 0;
        for root in 0..self.g.n() {
            if self.mate[root] != NONE {
                continue;
            }
            match self.find_augmenting(root) {
                Some(end) => self.augment(end),
                None => {
                    exposed += 1;
                    if stop_after_exposed.is_some_and(|limit| exposed > limit) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Maximum-cardinality matching of a general graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut b = Blossom::new(g);
    b.run(None);
    Matching::from_mates(&b.mate)
}

/// Maximum matching of a bipartite graph by repeated augmenting-path search
/// from color A.
pub fn maximum_bipartite_matching(g: &Graph, parts: &Bipartition) -> Matching {
    fn try_kuhn(g: &Graph, v: usize, seen: &mut [bool], mate: &mut [usize]) -> bool {
        for &u in g.neighbors(v) {
            if seen[u] {
                continue;
            }
            seen[u] = true;
            if mate[u] == NONE || try_kuhn(g, mate[u], seen, mate) {
                mate[u] = v;
                mate[v] = u;
                return true;
            }
        }
        false
    }
    let n = g.n();
    let mut mate = vec![NONE; n];
    let mut seen = vec![false; n];
    for v in parts.color_a() {
        seen.fill(false);
        try_kuhn(g, v, &mut seen, &mut mate);
    }
    Matching::from_mates(&mate)
}

/// `true` iff some matching covers every vertex; the order-zero graph
/// qualifies vacuously.
pub fn has_perfect_matching(g: &Graph) -> bool {
    let n = g.n();
    if n % 2 == 1 || (0..n).any(|v| g.degree(v) == 0) {
        return false;
    }
    Blossom::new(g).run(Some(0))
}

fn has_perfect_matching_without(g: &Graph, removed: &[usize]) -> bool {
    let mut mask = vec![false; g.n()];
    for &v in removed {
        mask[v] = true;
    }
    has_perfect_matching(&g.induced_by_mask(&mask).0)
}

/// `uv` is allowed when some perfect matching of `g` uses it, i.e. when
/// `g - {u, v}` has a perfect matching.
pub fn is_allowed_edge(g: &Graph, u: usize, v: usize) -> bool {
    g.has_edge(u, v) && has_perfect_matching_without(g, &[u, v])
}

pub fn allowed_edges(g: &Graph) -> Vec<Edge> {
    g.edges().filter(|&(u, v)| has_perfect_matching_without(g, &[u, v])).collect()
}

pub fn is_matching_covered(g: &Graph) -> Certificate {
    if g.n() < 2 {
        return Certificate::fails(Reason::Trivial, Witness::None);
    }
    if !g.is_connected() {
        return Certificate::fails(Reason::Disconnected, Witness::None);
    }
    if !has_perfect_matching(g) {
        return Certificate::fails(Reason::NoPerfectMatching, Witness::None);
    }
    match g.edges().find(|&(u, v)| !has_perfect_matching_without(g, &[u, v])) {
        Some(e) => Certificate::fails(Reason::EdgeNotAllowed, Witness::Edge { edge: e }),
        None => Certificate::holds(),
    }
}

pub fn is_minimal_matching_covered(g: &Graph) -> Certificate {
    if !is_matching_covered(g).verdict {
        return Certificate::fails(Reason::NotMatchingCovered, Witness::None);
    }
    match g.edges().find(|&(u, v)| is_matching_covered(&g.remove_edge(u, v)).verdict) {
        Some(e) => Certificate::fails(Reason::RemovableEdge, Witness::Edge { edge: e }),
        None => Certificate::holds(),
    }
}

pub fn is_factor_critical(g: &Graph) -> Certificate {
    if g.n().is_multiple_of(2) {
        return Certificate::fails(Reason::EvenOrder, Witness::None);
    }
    if !g.is_connected() {
        return Certificate::fails(Reason::Disconnected, Witness::None);
    }
    match (0..g.n()).find(|&v| !has_perfect_matching_without(g, &[v])) {
        Some(v) => Certificate::fails(Reason::VertexNotMatchable, Witness::Vertex { vertex: v }),
        None => Certificate::holds(),
    }
}

pub fn is_minimal_factor_critical(g: &Graph) -> Certificate {
    if !is_factor_critical(g).verdict {
        return Certificate::fails(Reason::NotFactorCritical, Witness::None);
    }
    match g.edges().find(|&(u, v)| is_factor_critical(&g.remove_edge(u, v)).verdict) {
        Some(e) => Certificate::fails(Reason::RemovableEdge, Witness::Edge { edge: e }),
        None => Certificate::holds(),
    }
}
