//! Nice subgraphs, cycle enumeration, chords, and the chord-free
//! characterization of minimal matching covered bipartite graphs.

use thiserror::Error;

use crate::certificate::{Certificate, Reason, Witness};
use crate::graph::{edge, Edge, Graph, GraphError};
use crate::matching::{has_perfect_matching, is_matching_covered};

/// Default cap on the number of cycles enumerated before reporting overflow.
pub const DEFAULT_MAX_CYCLES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least three vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeats on the cycle")]
    RepeatedVertex(usize),
    #[error("cycle edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NiceCycleError {
    #[error("input is not bipartite")]
    NotBipartite,
    #[error("input is not matching covered ({})", .0.as_str())]
    NotMatchingCovered(Reason),
    #[error("more than {0} cycles; enumeration truncated")]
    CycleLimit(usize),
}

/// A cycle given by its cyclically ordered vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validates the cycle against `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, CycleError> {
        let k = vertices.len();
        if k < 3 {
            return Err(CycleError::TooShort(k));
        }
        let mut seen = vec![false; g.n()];
        for &v in &vertices {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(CycleError::RepeatedVertex(v));
            }
        }
        for i in 0..k {
            let (u, v) = (vertices[i], vertices[(i + 1) % k]);
            if !g.has_edge(u, v) {
                return Err(CycleError::MissingEdge(u, v));
            }
        }
        Ok(Cycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

/// Result of [`enumerate_cycles`]; `overflow` is set when the listing was cut
/// off at `max_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleListing {
    pub cycles: Vec<Cycle>,
    pub overflow: bool,
}

/// Every simple cycle once, rotated to start at its minimum vertex and
/// oriented toward the smaller of that vertex's two cycle neighbors.
pub fn enumerate_cycles(g: &Graph, max_count: usize) -> CycleListing {
    let n = g.n();
    let mut out = CycleListing { cycles: Vec::new(), overflow: false };
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        if !extend_cycles(g, start, &mut path, &mut on_path, max_count, &mut out) {
            out.overflow = true;
            return out;
        }
        on_path[start] = false;
        path.pop();
    }
    out
}

fn extend_cycles(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    max_count: usize,
    out: &mut CycleListing,
) -> bool {
    let last = *path.last().unwrap();
    for &next in g.neighbors(last) {
        if next == start && path.len() >= 3 && path[1] < last {
            if out.cycles.len() == max_count {
                return false;
            }
            out.cycles.push(Cycle { vertices: path.clone() });
        }
        if next <= start || on_path[next] {
            continue;
        }
        on_path[next] = true;
        path.push(next);
        let ok = extend_cycles(g, start, path, on_path, max_count, out);
        path.pop();
        on_path[next] = false;
        if !ok {
            return false;
        }
    }
    true
}

/// `h` is nice when `g - h` has a perfect matching.
pub fn is_nice(g: &Graph, h: &[usize]) -> Result<bool, GraphError> {
    let (rest, _) = g.without_vertices(h)?;
    Ok(has_perfect_matching(&rest))
}

/// Edges of `g` joining two vertices of `c` that are not edges of `c`.
pub fn chords(g: &Graph, c: &Cycle) -> Result<Vec<Edge>, CycleError> {
    let c = Cycle::new(g, c.vertices.clone())?;
    Ok(chords_unchecked(g, &c))
}

fn chords_unchecked(g: &Graph, c: &Cycle) -> Vec<Edge> {
    let k = c.len();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in c.vertices.iter().enumerate() {
        pos[v] = i;
    }
    let mut out: Vec<Edge> = Vec::new();
    for &u in &c.vertices {
        for &v in g.neighbors(u) {
            if v <= u || pos[v] == usize::MAX {
                continue;
            }
            let d = pos[u].abs_diff(pos[v]);
            if d != 1 && d != k - 1 {
                out.push((u, v));
            }
        }
    }
    out.sort_unstable();
    out
}

/// A matching covered bipartite graph is minimal exactly when none of its
/// nice cycles has a chord. Returns a chorded nice cycle when one exists.
pub fn minimality_via_nice_cycles(g: &Graph) -> Result<Certificate, NiceCycleError> {
    minimality_via_nice_cycles_with_limit(g, DEFAULT_MAX_CYCLES)
}

pub fn minimality_via_nice_cycles_with_limit(
    g: &Graph,
    max_cycles: usize,
) -> Result<Certificate, NiceCycleError> {
    if !g.is_bipartite() {
        return Err(NiceCycleError::NotBipartite);
    }
    let mc = is_matching_covered(g);
    if !mc.verdict {
        return Err(NiceCycleError::NotMatchingCovered(mc.note));
    }
    let listing = enumerate_cycles(g, max_cycles);
    if listing.overflow {
        return Err(NiceCycleError::CycleLimit(max_cycles));
    }
    for cycle in listing.cycles {
        // Chordless cycles can never be witnesses, so test chords first.
        let cs = chords_unchecked(g, &cycle);
        let Some(&chord) = cs.first() else { continue };
        if is_nice(g, cycle.vertices()).expect("cycle vertices are in range") {
            return Ok(Certificate::fails(
                Reason::ChordedNiceCycle,
                Witness::CycleChord { cycle: cycle.vertices, chord },
            ));
        }
    }
    Ok(Certificate::holds())
}
