//! Finding ear decompositions by reverse deletion: repeatedly strip a
//! maximal chain of degree-2 vertices (or a single edge) whose removal keeps
//! the remaining graph in the class, until a cycle is left.

use thiserror::Error;

use super::{Ear, EarDecomposition, EarKind};
use crate::blocks::block_decomposition;
use crate::graph::Graph;
use crate::matching::{is_factor_critical, is_matching_covered};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OddEarError {
    #[error("graph of order {0} is too small for an odd ear decomposition")]
    TooSmall(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has cut vertex {0}")]
    CutVertex(usize),
}

/// Host graph with some vertices and edges peeled away. Deleted vertices
/// stay as isolated labels so ears keep the original numbering.
#[derive(Clone)]
struct Peeled {
    g: Graph,
    alive: Vec<bool>,
}

impl Peeled {
    fn alive_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    fn compact(&self) -> Graph {
        let removed: Vec<bool> = self.alive.iter().map(|&a| !a).collect();
        self.g.induced_by_mask(&removed).0
    }

    /// Vertex order around the cycle, when the remaining graph is one.
    fn as_cycle(&self) -> Option<Vec<usize>> {
        let start = self.alive.iter().position(|&a| a)?;
        let len = self.alive_count();
        if len < 3 || (0..self.g.n()).any(|v| self.alive[v] && self.g.degree(v) != 2) {
            return None;
        }
        let nb = self.g.neighbors(start);
        let mut order = vec![start, nb[0].min(nb[1])];
        while order.len() < len {
            let (prev, cur) = (order[order.len() - 2], order[order.len() - 1]);
            let next = *self.g.neighbors(cur).iter().find(|&&w| w != prev)?;
            if next == start {
                return None;
            }
            order.push(next);
        }
        self.g.has_edge(*order.last()?, start).then_some(order)
    }

    /// Maximal chains of degree-2 vertices between distinct vertices of
    /// degree at least 3, including single edges between such vertices.
    /// Only odd chains are kept. Longest first, then lexicographic.
    fn candidates(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for u in 0..self.g.n() {
            if !self.alive[u] || self.g.degree(u) < 3 {
                continue;
            }
            for &w in self.g.neighbors(u) {
                let mut path = vec![u, w];
                while self.g.degree(*path.last().unwrap()) == 2 {
                    let (prev, cur) = (path[path.len() - 2], path[path.len() - 1]);
                    let next = *self.g.neighbors(cur).iter().find(|&&x| x != prev).unwrap();
                    path.push(next);
                    if next == u {
                        break;
                    }
                }
                let end = *path.last().unwrap();
                if end > u && (path.len() - 1) % 2 == 1 {
                    out.push(path);
                }
            }
        }
        out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        out
    }

    fn without_chain(&self, chain: &[usize]) -> Peeled {
        let mut next = self.clone();
        for w in chain.windows(2) {
            next.g = next.g.remove_edge(w[0], w[1]);
        }
        for &v in &chain[1..chain.len() - 1] {
            next.alive[v] = false;
        }
        next
    }
}

struct Terminal {
    base: Graph,
    base_vertices: Vec<usize>,
    first_ear: Option<Ear>,
}

fn peel(h: &Peeled, kind: EarKind, keeps_class: &dyn Fn(&Graph) -> bool) -> Option<(Terminal, Vec<Ear>)> {
    if kind == EarKind::Bipartite && h.alive_count() == 2 && h.g.edge_count() == 1 {
        let (a, b) = h.g.edges().next()?;
        let base = Graph::complete(2);
        return Some((Terminal { base, base_vertices: vec![a, b], first_ear: None }, Vec::new()));
    }
    if let Some(order) = h.as_cycle() {
        let terminal = match kind {
            EarKind::Odd if order.len() % 2 == 1 => Terminal {
                base: Graph::cycle(order.len()),
                base_vertices: order,
                first_ear: None,
            },
            EarKind::Bipartite if order.len() % 2 == 0 => {
                // Base edge from the smallest vertex to its smaller neighbor;
                // the first ear runs the other way around.
                let (a, b) = (order[0], order[1]);
                let mut path = vec![a];
                path.extend(order[2..].iter().rev());
                path.push(b);
                Terminal { base: Graph::complete(2), base_vertices: vec![a, b], first_ear: Some(Ear::new(path)) }
            }
            _ => return None,
        };
        return Some((terminal, Vec::new()));
    }
    for chain in h.candidates() {
        let next = h.without_chain(&chain);
        if !keeps_class(&next.compact()) {
            continue;
        }
        if let Some((terminal, mut ears)) = peel(&next, kind, keeps_class) {
            ears.push(Ear::new(chain));
            return Some((terminal, ears));
        }
    }
    None
}

fn assemble(kind: EarKind, terminal: Terminal, later: Vec<Ear>) -> EarDecomposition {
    let mut ears: Vec<Ear> = terminal.first_ear.into_iter().collect();
    ears.extend(later);
    EarDecomposition::new(kind, terminal.base, terminal.base_vertices, ears)
}

/// A bipartite ear decomposition of `g`, or `None` when `g` is not a
/// matching covered bipartite graph.
pub fn find_bipartite_ear_decomposition(g: &Graph) -> Option<EarDecomposition> {
    if !g.is_bipartite() || !is_matching_covered(g).verdict {
        return None;
    }
    let start = Peeled { g: g.clone(), alive: vec![true; g.n()] };
    let keeps = |h: &Graph| is_matching_covered(h).verdict;
    let (terminal, ears) = peel(&start, EarKind::Bipartite, &keeps)?;
    Some(assemble(EarKind::Bipartite, terminal, ears))
}

/// An odd ear decomposition with open ears of a connected graph without cut
/// vertices; `Ok(None)` when `g` is not factor-critical.
pub fn find_odd_ear_decomposition(g: &Graph) -> Result<Option<EarDecomposition>, OddEarError> {
    if g.n() < 3 {
        return Err(OddEarError::TooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(OddEarError::Disconnected);
    }
    if let Some(&v) = block_decomposition(g).cut_vertices.first() {
        return Err(OddEarError::CutVertex(v));
    }
    if !is_factor_critical(g).verdict {
        return Ok(None);
    }
    let start = Peeled { g: g.clone(), alive: vec![true; g.n()] };
    let keeps = |h: &Graph| {
        h.is_connected() && block_decomposition(h).cut_vertices.is_empty() && is_factor_critical(h).verdict
    };
    Ok(peel(&start, EarKind::Odd, &keeps).map(|(terminal, ears)| assemble(EarKind::Odd, terminal, ears)))
}
