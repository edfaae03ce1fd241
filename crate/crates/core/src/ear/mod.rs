//! Ear decompositions: bipartite (grown from `K2`) and odd (grown from an odd
//! cycle).
//!
//! A decomposition is read as a sequence of *units*. Unit 0 is the initial
//! cycle: the odd base cycle, or for the bipartite kind the base edge closed
//! by the first ear. Every later ear is its own unit. Grades and host indices
//! are expressed in unit indices, so `grades[0] == 0` always.

mod exchange;
mod search;

pub use exchange::{edge_exchange, ExchangeError, ExchangeSet};
pub use search::{find_bipartite_ear_decomposition, find_odd_ear_decomposition, OddEarError};

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::certificate::{Certificate, Reason, Witness};
use crate::graph::{edge, Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EarKind {
    Bipartite,
    Odd,
}

impl EarKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EarKind::Bipartite => "bipartite",
            EarKind::Odd => "odd",
        }
    }
}

/// A path `v0 .. vk` whose ends lie in the current prefix and whose internal
/// vertices are new. Trivial when `k == 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ear {
    path: Vec<usize>,
}

impl Ear {
    pub fn new(path: Vec<usize>) -> Self {
        Ear { path }
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.path.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.len() == 1
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.path[0], *self.path.last().expect("ears have at least one vertex"))
    }

    pub fn internal(&self) -> &[usize] {
        if self.path.len() < 2 {
            &[]
        } else {
            &self.path[1..self.path.len() - 1]
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.path.windows(2).map(|w| edge(w[0], w[1]))
    }
}

/// Ears sharing both ends; `members` are unit indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParallelFamily {
    pub ends: Edge,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    pub kind: EarKind,
    /// Base graph on its own labels `0..b`.
    pub base: Graph,
    /// `base_vertices[i]` is the host label of base vertex `i`; for the odd
    /// kind this is the cyclic order of the base cycle.
    pub base_vertices: Vec<usize>,
    pub ears: Vec<Ear>,
    /// One grade per unit (see module docs).
    pub grades: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EarError {
    #[error("invalid decomposition: ear {index:?} fails with {}", .reason.as_str())]
    InvalidDecomposition { index: Option<usize>, reason: Reason },
    #[error("unit index {index} out of range ({units} units)")]
    InvalidIndex { index: usize, units: usize },
    #[error("family with ends {0:?} has no end on the host ear")]
    FamilyNotAttached(Edge),
    #[error("ear has even length {0}")]
    EvenEar(usize),
    #[error("trivial ears are not allowed for the bipartite kind")]
    TrivialEar,
    #[error("ear end {0} is not a vertex of the graph")]
    EndOutsideGraph(usize),
    #[error("ear ends coincide at {0}")]
    EndsCoincide(usize),
    #[error("ear ends {0} and {1} are adjacent")]
    EndsAdjacent(usize, usize),
    #[error("ear ends {0} and {1} lie in the same part")]
    EndsSamePart(usize, usize),
    #[error("internal vertex {0} is not a fresh label")]
    InternalVertexCollision(usize),
}

/// Grades per unit plus the largest grade.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Grades {
    pub per_unit: Vec<usize>,
    pub max: usize,
}

impl EarDecomposition {
    /// Assembles a decomposition and fills in its grades.
    pub fn new(kind: EarKind, base: Graph, base_vertices: Vec<usize>, ears: Vec<Ear>) -> Self {
        let mut d = EarDecomposition { kind, base, base_vertices, ears, grades: Vec::new() };
        d.grades = grades_unchecked(&d);
        d
    }

    pub fn unit_count(&self) -> usize {
        match self.kind {
            EarKind::Bipartite => self.ears.len().max(1),
            EarKind::Odd => self.ears.len() + 1,
        }
    }

    /// Index into `ears` of the ear forming unit `u >= 1`.
    fn ear_of_unit(&self, u: usize) -> usize {
        match self.kind {
            EarKind::Bipartite => u,
            EarKind::Odd => u - 1,
        }
    }

    /// Unit formed by `ears[i]`.
    pub fn unit_of_ear(&self, i: usize) -> usize {
        match self.kind {
            EarKind::Bipartite => i,
            EarKind::Odd => i + 1,
        }
    }

    /// Vertex sequence of a unit. Unit 0 of the bipartite kind runs along
    /// the first ear from one base vertex around to the other.
    pub fn unit_vertices(&self, u: usize) -> &[usize] {
        if u == 0 {
            match self.kind {
                EarKind::Bipartite if !self.ears.is_empty() => self.ears[0].path(),
                _ => &self.base_vertices,
            }
        } else {
            self.ears[self.ear_of_unit(u)].path()
        }
    }

    /// Unit in which each vertex first appears.
    fn host_units(&self) -> BTreeMap<usize, usize> {
        let mut host = BTreeMap::new();
        for &v in &self.base_vertices {
            host.insert(v, 0);
        }
        for (i, ear) in self.ears.iter().enumerate() {
            let unit = self.unit_of_ear(i);
            for &v in ear.internal() {
                host.entry(v).or_insert(unit);
            }
        }
        host
    }

    /// Order of the final prefix.
    pub fn vertex_count(&self) -> usize {
        self.base_vertices.len() + self.ears.iter().map(|e| e.internal().len()).sum::<usize>()
    }

    /// Union of the base and all ears, provided the labels are dense.
    pub fn assemble(&self) -> Option<Graph> {
        let n = self.vertex_count();
        let mut edges: Vec<Edge> = self
            .base
            .edges()
            .map(|(a, b)| Some(edge(*self.base_vertices.get(a)?, *self.base_vertices.get(b)?)))
            .collect::<Option<_>>()?;
        edges.extend(self.ears.iter().flat_map(Ear::edges));
        edges.sort_unstable();
        edges.dedup();
        Graph::from_edges(n, edges).ok()
    }

    /// Compact copy of prefix `G_i` (base plus the first `i` ears), with the
    /// map from its labels back to the host labels.
    pub fn prefix(&self, i: usize) -> (Graph, Vec<usize>) {
        let mut map: Vec<usize> = self.base_vertices.clone();
        for ear in &self.ears[..i] {
            map.extend_from_slice(ear.internal());
        }
        let index: BTreeMap<usize, usize> = map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges: Vec<Edge> = self
            .base
            .edges()
            .map(|(a, b)| edge(index[&self.base_vertices[a]], index[&self.base_vertices[b]]))
            .collect();
        for ear in &self.ears[..i] {
            edges.extend(ear.edges().map(|(a, b)| edge(index[&a], index[&b])));
        }
        edges.sort_unstable();
        edges.dedup();
        (Graph::from_edges(map.len(), edges).expect("prefix edges are in range"), map)
    }
}

fn invalid(index: Option<usize>, reason: Reason) -> Certificate {
    let witness = match index {
        Some(index) => Witness::Ear { index },
        None => Witness::None,
    };
    Certificate::fails(reason, witness)
}

fn base_is_valid(g: &Graph, d: &EarDecomposition) -> bool {
    let b = d.base.n();
    if d.base_vertices.len() != b {
        return false;
    }
    let mut seen = HashSet::new();
    if !d.base_vertices.iter().all(|&v| v < g.n() && seen.insert(v)) {
        return false;
    }
    let shape_ok = match d.kind {
        EarKind::Bipartite => b == 2 && d.base.edge_count() == 1,
        EarKind::Odd => {
            b >= 3 && b % 2 == 1 && d.base.is_connected() && (0..b).all(|v| d.base.degree(v) == 2)
        }
    };
    shape_ok && d.base.edges().all(|(x, y)| g.has_edge(d.base_vertices[x], d.base_vertices[y]))
}

/// Checks every ear and prefix invariant and that the final prefix is `g`.
/// A failing certificate names the first offending ear.
pub fn validate(g: &Graph, d: &EarDecomposition) -> Certificate {
    if !base_is_valid(g, d) {
        return invalid(None, Reason::InvalidBase);
    }
    let n = g.n();
    let mut in_prefix = vec![false; n];
    // Two-coloring of the prefix, used by the bipartite kind.
    let mut color = vec![false; n];
    let mut prefix_edges: HashSet<Edge> = HashSet::new();
    for (i, &v) in d.base_vertices.iter().enumerate() {
        in_prefix[v] = true;
        color[v] = i % 2 == 1;
    }
    for (a, b) in d.base.edges() {
        prefix_edges.insert(edge(d.base_vertices[a], d.base_vertices[b]));
    }
    for (i, ear) in d.ears.iter().enumerate() {
        let k = ear.len();
        if k % 2 == 0 {
            return invalid(Some(i), Reason::EvenEar);
        }
        let (a, b) = ear.ends();
        if a >= n || b >= n || !in_prefix[a] || !in_prefix[b] {
            return invalid(Some(i), Reason::EarEndOutsidePrefix);
        }
        if a == b {
            return invalid(Some(i), Reason::EarEndsCoincide);
        }
        let mut seen = HashSet::new();
        if !ear.internal().iter().all(|&v| v < n && !in_prefix[v] && seen.insert(v)) {
            return invalid(Some(i), Reason::EarInternalVertexReused);
        }
        if d.kind == EarKind::Bipartite && color[a] == color[b] {
            return invalid(Some(i), Reason::EarEndsSamePart);
        }
        for e in ear.edges() {
            if !g.has_edge(e.0, e.1) {
                return invalid(Some(i), Reason::EarEdgeMissing);
            }
            if !prefix_edges.insert(e) {
                return invalid(Some(i), Reason::EarEdgeRepeated);
            }
        }
        for (j, &v) in ear.path().iter().enumerate().skip(1).take(k.saturating_sub(1)) {
            in_prefix[v] = true;
            color[v] = color[a] ^ (j % 2 == 1);
        }
    }
    if in_prefix.iter().any(|&p| !p) || prefix_edges.len() != g.edge_count() {
        return invalid(None, Reason::NotSpanning);
    }
    Certificate::holds()
}

fn grades_unchecked(d: &EarDecomposition) -> Vec<usize> {
    let host = d.host_units();
    let mut grades = vec![0; d.unit_count()];
    for u in 1..d.unit_count() {
        let ear = &d.ears[d.ear_of_unit(u)];
        let (a, b) = ear.ends();
        let ga = host.get(&a).map_or(0, |&h| grades[h]);
        let gb = host.get(&b).map_or(0, |&h| grades[h]);
        grades[u] = 1 + ga.max(gb);
    }
    grades
}

fn require_valid(d: &EarDecomposition) -> Result<(), EarError> {
    let g = d.assemble().ok_or(EarError::InvalidDecomposition {
        index: None,
        reason: Reason::NotSpanning,
    })?;
    let cert = validate(&g, d);
    if cert.verdict {
        return Ok(());
    }
    let index = match cert.witness {
        Witness::Ear { index } => Some(index),
        _ => None,
    };
    Err(EarError::InvalidDecomposition { index, reason: cert.note })
}

/// Grade of every unit: the initial cycle has grade 0, and an ear has grade
/// `1 + max` of the grades of the units in which its two ends first appeared.
pub fn ear_grades(d: &EarDecomposition) -> Result<Grades, EarError> {
    require_valid(d)?;
    let per_unit = grades_unchecked(d);
    let max = per_unit.iter().copied().max().unwrap_or(0);
    Ok(Grades { per_unit, max })
}

/// Ears with at least one end first appearing in unit `host`, grouped by
/// their end pair. Families are listed by their first member.
pub fn parallel_families(d: &EarDecomposition, host: usize) -> Result<Vec<ParallelFamily>, EarError> {
    require_valid(d)?;
    let units = d.unit_count();
    if host >= units {
        return Err(EarError::InvalidIndex { index: host, units });
    }
    let hosts = d.host_units();
    let mut families: Vec<ParallelFamily> = Vec::new();
    for u in host + 1..units {
        let (a, b) = d.ears[d.ear_of_unit(u)].ends();
        if hosts.get(&a) != Some(&host) && hosts.get(&b) != Some(&host) {
            continue;
        }
        let ends = edge(a, b);
        match families.iter_mut().find(|f| f.ends == ends) {
            Some(f) => f.members.push(u),
            None => families.push(ParallelFamily { ends, members: vec![u] }),
        }
    }
    Ok(families)
}

fn host_segment(seq: &[usize], f: &ParallelFamily) -> Option<(usize, usize)> {
    let positions: Vec<usize> = [f.ends.0, f.ends.1]
        .iter()
        .filter_map(|v| seq.iter().position(|w| w == v))
        .collect();
    Some((*positions.iter().min()?, *positions.iter().max()?))
}

/// Two families are compatible when their attachment points on the host
/// ear occupy disjoint, non-interleaved segments of the host's vertex
/// sequence.
pub fn compatible(
    d: &EarDecomposition,
    host: usize,
    f1: &ParallelFamily,
    f2: &ParallelFamily,
) -> Result<bool, EarError> {
    let units = d.unit_count();
    if host >= units {
        return Err(EarError::InvalidIndex { index: host, units });
    }
    segments_compatible(d.unit_vertices(host), f1, f2)
}

fn segments_compatible(
    seq: &[usize],
    f1: &ParallelFamily,
    f2: &ParallelFamily,
) -> Result<bool, EarError> {
    let s1 = host_segment(seq, f1).ok_or(EarError::FamilyNotAttached(f1.ends))?;
    let s2 = host_segment(seq, f2).ok_or(EarError::FamilyNotAttached(f2.ends))?;
    Ok(s1.1 < s2.0 || s2.1 < s1.0)
}

/// Appends `ear` to the decomposition of `g`. Internal vertices must be the
/// fresh labels `g.n() ..`; for the bipartite kind the ear must be
/// nontrivial with nonadjacent ends in different parts.
pub fn add_ear(
    g: &Graph,
    d: &EarDecomposition,
    ear: Ear,
) -> Result<(Graph, EarDecomposition), EarError> {
    let cert = validate(g, d);
    if !cert.verdict {
        let index = match cert.witness {
            Witness::Ear { index } => Some(index),
            _ => None,
        };
        return Err(EarError::InvalidDecomposition { index, reason: cert.note });
    }
    let k = ear.len();
    if k.is_multiple_of(2) {
        return Err(EarError::EvenEar(k));
    }
    let (a, b) = ear.ends();
    for v in [a, b] {
        if v >= g.n() {
            return Err(EarError::EndOutsideGraph(v));
        }
    }
    if a == b {
        return Err(EarError::EndsCoincide(a));
    }
    let n = g.n();
    let mut fresh = vec![false; k - 1];
    for &v in ear.internal() {
        if v < n || v >= n + k - 1 || std::mem::replace(&mut fresh[v - n], true) {
            return Err(EarError::InternalVertexCollision(v));
        }
    }
    if d.kind == EarKind::Bipartite && ear.is_trivial() {
        return Err(EarError::TrivialEar);
    }
    if g.has_edge(a, b) && (d.kind == EarKind::Bipartite || ear.is_trivial()) {
        return Err(EarError::EndsAdjacent(a.min(b), a.max(b)));
    }
    if d.kind == EarKind::Bipartite {
        let parts = g.bipartition().expect("a valid bipartite decomposition is bipartite");
        if parts.same_part(a, b) {
            return Err(EarError::EndsSamePart(a.min(b), a.max(b)));
        }
    }
    let edges: Vec<Edge> = ear.edges().collect();
    let grown = g
        .with_new_vertices(k - 1)
        .with_edges(&edges)
        .expect("fresh ear edges are absent and in range");
    let mut ears = d.ears.clone();
    ears.push(ear);
    let next = EarDecomposition::new(d.kind, d.base.clone(), d.base_vertices.clone(), ears);
    Ok((grown, next))
}

#[cfg(test)]
mod tests;
