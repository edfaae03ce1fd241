//! Simple undirected graphs on dense vertex labels `0..n`.

use std::collections::VecDeque;

use thiserror::Error;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an edge so that the smaller endpoint comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} is already present")]
    EdgePresent(usize, usize),
    #[error("edge {0}-{1} is not present")]
    EdgeMissing(usize, usize),
}

/// Simple undirected graph stored as sorted adjacency lists.
///
/// Invariants: adjacency is symmetric, loop-free and every neighbor index is
/// below `n`. Values are immutable once built; every edit returns a new graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// Two-coloring of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    /// `side[v]` is `false` for color A and `true` for color B.
    side: Vec<bool>,
}

impl Bipartition {
    pub fn color_a(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| !self.side[v]).collect()
    }

    pub fn color_b(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v]).collect()
    }

    /// `true` when `v` lies in color B.
    #[inline]
    pub fn side(&self, v: usize) -> bool {
        self.side[v]
    }

    #[inline]
    pub fn same_part(&self, u: usize, v: usize) -> bool {
        self.side[u] == self.side[v]
    }
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = edge(u, w[0]);
                return Err(GraphError::EdgePresent(a, b));
            }
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from adjacency lists that are already known to be
    /// symmetric and loop-free; lists are sorted here.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| edge(i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
            .expect("complete graph edges are valid")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            .expect("complete bipartite edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Induced subgraph on `V \ s`, relabeled order-preservingly.
    ///
    /// The returned map sends each new label to the caller's label.
    pub fn without_vertices(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut removed = vec![false; self.n()];
        for &v in s {
            self.check_vertex(v)?;
            removed[v] = true;
        }
        Ok(self.induced_by_mask(&removed))
    }

    /// Same as [`Graph::without_vertices`] but driven by a removal mask.
    pub(crate) fn induced_by_mask(&self, removed: &[bool]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        let mut map = Vec::with_capacity(self.n());
        for v in 0..self.n() {
            if !removed[v] {
                index[v] = map.len();
                map.push(v);
            }
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| !removed[u])
                    .map(|&u| index[u])
                    .collect()
            })
            .collect();
        (Graph { adj }, map)
    }

    pub fn without_edges(&self, es: &[Edge]) -> Result<Graph, GraphError> {
        let mut adj = self.adj.clone();
        for &(u, v) in es {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            let (a, b) = edge(u, v);
            match adj[u].binary_search(&v) {
                Ok(i) => {
                    adj[u].remove(i);
                }
                Err(_) => return Err(GraphError::EdgeMissing(a, b)),
            }
            if let Ok(i) = adj[v].binary_search(&u) {
                adj[v].remove(i);
            }
        }
        Ok(Graph { adj })
    }

    pub fn with_edges(&self, es: &[Edge]) -> Result<Graph, GraphError> {
        let mut adj = self.adj.clone();
        for &(u, v) in es {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = edge(u, v);
            match adj[u].binary_search(&v) {
                Ok(_) => return Err(GraphError::EdgePresent(a, b)),
                Err(i) => adj[u].insert(i, v),
            }
            let i = adj[v].binary_search(&u).unwrap_err();
            adj[v].insert(i, u);
        }
        Ok(Graph { adj })
    }

    /// `self - e` for an edge known to be present.
    pub(crate) fn remove_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Graph { adj }
    }

    /// Appends `k` isolated vertices.
    pub fn with_new_vertices(&self, k: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.extend(std::iter::repeat_with(Vec::new).take(k));
        Graph { adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm[v]] = list.iter().map(|&u| perm[u]).collect();
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Every vertex reachable from vertex 0; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Two-coloring, or `None` when an odd cycle exists.
    ///
    /// For disconnected input each component is colored independently with its
    /// lowest-index vertex in color A.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &u in &self.adj[v] {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition {
            side: color.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// `true` when the graph contains a cycle of length four.
    pub fn has_four_cycle(&self) -> bool {
        let n = self.n();
        for u in 0..n {
            for w in u + 1..n {
                let common = intersection_count(&self.adj[u], &self.adj[w]);
                if common >= 2 {
                    return true;
                }
            }
        }
        false
    }
}

fn intersection_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}
