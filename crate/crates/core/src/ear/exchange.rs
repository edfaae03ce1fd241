use serde::Serialize;
use thiserror::Error;

use crate::graph::{edge, Edge, Graph};

/// Names the three vertex sets of an exchange in error messages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExchangeSet {
    T,
    S1,
    S2,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExchangeError {
    #[error("set {0:?} is empty")]
    EmptySet(ExchangeSet),
    #[error("vertex {vertex} in set {set:?} is out of range")]
    VertexOutOfRange { set: ExchangeSet, vertex: usize },
    #[error("vertex {vertex} appears in both {first:?} and {second:?}")]
    Overlap { first: ExchangeSet, second: ExchangeSet, vertex: usize },
    #[error("edge {0:?} between T and S1 already exists")]
    EdgeToS1Present(Edge),
    #[error("pair {0:?} between T and S2 is not an edge")]
    EdgeToS2Missing(Edge),
}

fn membership(n: usize, sets: [(&[usize], ExchangeSet); 3]) -> Result<(), ExchangeError> {
    let mut owner: Vec<Option<ExchangeSet>> = vec![None; n];
    for (vs, name) in sets {
        if vs.is_empty() {
            return Err(ExchangeError::EmptySet(name));
        }
        for &v in vs {
            if v >= n {
                return Err(ExchangeError::VertexOutOfRange { set: name, vertex: v });
            }
            match owner[v] {
                Some(first) if first != name => {
                    return Err(ExchangeError::Overlap { first, second: name, vertex: v })
                }
                _ => owner[v] = Some(name),
            }
        }
    }
    Ok(())
}

/// Joins every vertex of `t` to every vertex of `s1` and deletes every edge
/// between `t` and `s2`. Requires no existing `t`-`s1` edges and a complete
/// join between `t` and `s2`, so the edge count is preserved when
/// `|s1| == |s2|`.
pub fn edge_exchange(g: &Graph, t: &[usize], s1: &[usize], s2: &[usize]) -> Result<Graph, ExchangeError> {
    membership(g.n(), [(t, ExchangeSet::T), (s1, ExchangeSet::S1), (s2, ExchangeSet::S2)])?;
    let mut added = Vec::new();
    let mut removed = Vec::new();
    for &x in t {
        for &y in s1 {
            if g.has_edge(x, y) {
                return Err(ExchangeError::EdgeToS1Present(edge(x, y)));
            }
            added.push(edge(x, y));
        }
        for &y in s2 {
            if !g.has_edge(x, y) {
                return Err(ExchangeError::EdgeToS2Missing(edge(x, y)));
            }
            removed.push(edge(x, y));
        }
    }
    added.sort_unstable();
    added.dedup();
    removed.sort_unstable();
    removed.dedup();
    let out = g
        .without_edges(&removed)
        .and_then(|h| h.with_edges(&added))
        .expect("edge sets were checked against g");
    Ok(out)
}
