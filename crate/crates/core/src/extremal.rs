//! Extremal families, exhaustive enumeration of both graph classes, and the
//! spectral bound checks built on them.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_order, orbits};
use crate::graph::{edge, Edge, Graph};
use crate::graph6::to_graph6;
use crate::matching::{is_minimal_factor_critical, is_minimal_matching_covered};
use crate::scalar::Scalar;
use crate::spectral::{rho_friendship, rho_p3star, spectral_radius, SpectralError, SpectralOptions};

pub const BIPARTITE_MAX_ORDER: usize = 12;
pub const FACTOR_CRITICAL_MAX_ORDER: usize = 11;
pub const BRUTE_BIPARTITE_MAX_ORDER: usize = 8;
pub const BRUTE_FACTOR_CRITICAL_MAX_ORDER: usize = 7;

/// Graphs whose spectral radius lies within this distance of the maximum
/// count as maximizers; also the slack on the bound comparison.
pub const RHO_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    MinimalMcBipartite,
    MinimalFactorCritical,
}

impl GraphClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::MinimalMcBipartite => "minimal-mc-bipartite",
            GraphClass::MinimalFactorCritical => "minimal-factor-critical",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExtremalError {
    #[error("{what} needs {rule}; got n = {n}")]
    Order { what: &'static str, rule: &'static str, n: usize },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

fn order_error(what: &'static str, rule: &'static str, n: usize) -> ExtremalError {
    ExtremalError::Order { what, rule, n }
}

/// Hubs 0 and 1 joined by `(n - 2) / 2` paths `0 - 2i+2 - 2i+3 - 1`.
pub fn gen_p3star(n: usize) -> Result<Graph, ExtremalError> {
    if n < 6 || n % 2 == 1 {
        return Err(order_error("P*3", "an even order of at least 6", n));
    }
    let edges = (0..(n - 2) / 2).flat_map(|i| {
        let (a, b) = (2 + 2 * i, 3 + 2 * i);
        [(0, a), (a, b), (1, b)]
    });
    Ok(Graph::from_edges(n, edges).expect("paths are disjoint"))
}

/// Center 0 joined to the disjoint edges `(1,2), (3,4), ...`.
pub fn gen_friendship(n: usize) -> Result<Graph, ExtremalError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(order_error("friendship graph", "an odd order of at least 3", n));
    }
    let edges = (0..(n - 1) / 2).flat_map(|i| {
        let (a, b) = (1 + 2 * i, 2 + 2 * i);
        [(0, a), (0, b), (a, b)]
    });
    Ok(Graph::from_edges(n, edges).expect("triangles share only the center"))
}

pub fn gen_cycle(n: usize) -> Result<Graph, ExtremalError> {
    if n < 3 {
        return Err(order_error("cycle", "an order of at least 3", n));
    }
    Ok(Graph::cycle(n))
}

/// graph6 string and graph of the canonical relabeling.
fn canonical_pair(g: &Graph) -> (String, Graph) {
    let order = canonical_order(g).expect("enumeration orders stay within the canonical limit");
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    let canon = g.permuted(&perm);
    (to_graph6(&canon).expect("small order"), canon)
}

type Level = BTreeMap<String, Graph>;

/// Breadth-first closure of `seeds` under `expand`, which must strictly
/// increase the order. Returns one canonical map per order `0..=max_n`.
fn grow<F>(seeds: Vec<Graph>, max_n: usize, expand: F) -> Vec<Level>
where
    F: Fn(&Graph) -> Vec<Graph> + Sync,
{
    let mut levels: Vec<Level> = vec![Level::new(); max_n + 1];
    for s in seeds {
        let (key, g) = canonical_pair(&s);
        levels[g.n()].entry(key).or_insert(g);
    }
    for k in 0..=max_n {
        let children: Level = levels[k]
            .par_iter()
            .fold(Level::new, |mut acc, (_, g)| {
                for h in expand(g) {
                    let (key, canon) = canonical_pair(&h);
                    acc.entry(key).or_insert(canon);
                }
                acc
            })
            .reduce(Level::new, |mut a, b| {
                a.extend(b);
                a
            });
        for (key, h) in children {
            debug_assert!(h.n() > k);
            levels[h.n()].entry(key).or_insert(h);
        }
    }
    levels
}

fn orbit_representatives(g: &Graph) -> Vec<usize> {
    orbits(g).into_iter().map(|orbit| orbit[0]).collect()
}

/// Every graph obtained by attaching one nontrivial odd ear to `g` with
/// distinct ends, up to symmetry of the first end and reversal.
fn ear_extensions(g: &Graph, max_n: usize, bipartite: bool) -> Vec<Graph> {
    let n = g.n();
    let parts = if bipartite { g.bipartition() } else { None };
    let mut out = Vec::new();
    for u in orbit_representatives(g) {
        for v in 0..n {
            if v == u {
                continue;
            }
            if let Some(parts) = &parts {
                if parts.same_part(u, v) || g.has_edge(u, v) {
                    continue;
                }
            }
            for len in (3..).step_by(2).take_while(|len| n + len - 1 <= max_n) {
                let mut path = vec![u];
                path.extend(n..n + len - 1);
                path.push(v);
                let edges: Vec<Edge> = path.windows(2).map(|w| edge(w[0], w[1])).collect();
                out.push(g.with_new_vertices(len - 1).with_edges(&edges).expect("fresh vertices"));
            }
        }
    }
    out
}

fn bipartite_levels(max_n: usize) -> Vec<Level> {
    let seeds = (4..=max_n).step_by(2).map(Graph::cycle).collect();
    let mut levels = grow(seeds, max_n, |g| ear_extensions(g, max_n, true));
    if max_n >= 2 {
        let (key, k2) = canonical_pair(&Graph::complete(2));
        levels[2].insert(key, k2);
    }
    levels
}

fn check_bipartite_order(n: usize) -> Result<(), ExtremalError> {
    if n < 2 || n % 2 == 1 || n > BIPARTITE_MAX_ORDER {
        return Err(order_error("minimal-mc-bipartite enumeration", "an even order in 2..=12", n));
    }
    Ok(())
}

fn check_factor_critical_order(n: usize) -> Result<(), ExtremalError> {
    if n < 3 || n.is_multiple_of(2) || n > FACTOR_CRITICAL_MAX_ORDER {
        return Err(order_error("minimal-factor-critical enumeration", "an odd order in 3..=11", n));
    }
    Ok(())
}

/// Every state reached by the bipartite ear growth up to order `max_n`:
/// `K2`, even cycles, and all nontrivial-ear extensions with nonadjacent
/// ends in different parts. Each is matching covered and bipartite, but not
/// necessarily minimal. Canonical graphs, sorted by order then code.
pub fn bipartite_growth_corpus(max_n: usize) -> Result<Vec<Graph>, ExtremalError> {
    if max_n > BIPARTITE_MAX_ORDER {
        return Err(order_error("bipartite growth corpus", "an order of at most 12", max_n));
    }
    Ok(bipartite_levels(max_n).into_iter().flat_map(|level| level.into_values()).collect())
}

/// Canonical graph6 codes of all minimal matching covered bipartite graphs
/// of order `n`, by ear growth from even cycles.
pub fn enumerate_minimal_mc_bipartite(n: usize) -> Result<BTreeSet<String>, ExtremalError> {
    check_bipartite_order(n)?;
    let levels = bipartite_levels(n);
    Ok(levels[n]
        .par_iter()
        .filter(|(_, g)| is_minimal_matching_covered(g).verdict)
        .map(|(key, _)| key.clone())
        .collect())
}

/// Two-connected minimal factor-critical graphs with at most `max_n`
/// vertices, by open odd-ear growth from odd cycles.
pub fn minimal_factor_critical_blocks(max_n: usize) -> Vec<Graph> {
    let seeds = (3..=max_n).step_by(2).map(Graph::cycle).collect();
    grow(seeds, max_n, |g| ear_extensions(g, max_n, false))
        .into_iter()
        .flat_map(|level| level.into_values())
        .filter(|g| is_minimal_factor_critical(g).verdict)
        .collect()
}

/// Identifies vertex `w` of `b` with vertex `v` of `g`.
fn glue(g: &Graph, v: usize, b: &Graph, w: usize) -> Graph {
    let n = g.n();
    let label = |x: usize| match x.cmp(&w) {
        std::cmp::Ordering::Equal => v,
        std::cmp::Ordering::Less => n + x,
        std::cmp::Ordering::Greater => n + x - 1,
    };
    let edges: Vec<Edge> = b.edges().map(|(x, y)| edge(label(x), label(y))).collect();
    g.with_new_vertices(b.n() - 1).with_edges(&edges).expect("blocks share one vertex")
}

/// Canonical graph6 codes of all minimal factor-critical graphs of order
/// `n`: blocks are grown by odd ears, then glued one at a time at single
/// vertices into block trees.
pub fn enumerate_minimal_factor_critical(n: usize) -> Result<BTreeSet<String>, ExtremalError> {
    check_factor_critical_order(n)?;
    let blocks: Vec<(Graph, Vec<usize>)> = minimal_factor_critical_blocks(n)
        .into_iter()
        .map(|b| {
            let reps = orbit_representatives(&b);
            (b, reps)
        })
        .collect();
    let seeds = blocks.iter().map(|(b, _)| b.clone()).collect();
    let levels = grow(seeds, n, |g| {
        let mut out = Vec::new();
        let reps = orbit_representatives(g);
        for (b, b_reps) in &blocks {
            if g.n() + b.n() - 1 > n {
                continue;
            }
            for &v in &reps {
                for &w in b_reps {
                    out.push(glue(g, v, b, w));
                }
            }
        }
        out
    });
    Ok(levels[n]
        .par_iter()
        .filter(|(_, g)| is_minimal_factor_critical(g).verdict)
        .map(|(key, _)| key.clone())
        .collect())
}

fn all_pairs(n: usize) -> Vec<Edge> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn graph_from_mask(n: usize, pairs: &[Edge], mask: u64) -> Graph {
    let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
    Graph::from_edges(n, edges).expect("distinct pairs")
}

/// Exhaustive oracle: every bipartite graph on `0..n` with a balanced
/// bipartition (containing vertex 0 on one side), filtered by the
/// predicate. Unbalanced bipartitions admit no perfect matching.
pub fn brute_minimal_mc_bipartite(n: usize) -> Result<BTreeSet<String>, ExtremalError> {
    if n < 2 || n % 2 == 1 || n > BRUTE_BIPARTITE_MAX_ORDER {
        return Err(order_error("bipartite oracle", "an even order in 2..=8", n));
    }
    let half = n / 2;
    let sides: Vec<u32> = (0u32..1 << n)
        .filter(|s| s & 1 == 1 && s.count_ones() as usize == half)
        .collect();
    let found: BTreeSet<String> = sides
        .par_iter()
        .flat_map_iter(|&side| {
            let pairs: Vec<Edge> = all_pairs(n)
                .into_iter()
                .filter(|&(u, v)| (side >> u & 1) != (side >> v & 1))
                .collect();
            (0u64..1 << pairs.len())
                .filter_map(move |mask| {
                    let g = graph_from_mask(n, &pairs, mask);
                    if n > 2 && g.min_degree() < Some(2) {
                        return None;
                    }
                    is_minimal_matching_covered(&g).verdict.then(|| canonical_pair(&g).0)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(found)
}

/// Exhaustive oracle over all labeled graphs on `0..n`.
pub fn brute_minimal_factor_critical(n: usize) -> Result<BTreeSet<String>, ExtremalError> {
    if n < 3 || n.is_multiple_of(2) || n > BRUTE_FACTOR_CRITICAL_MAX_ORDER {
        return Err(order_error("factor-critical oracle", "an odd order in 3..=7", n));
    }
    let pairs = all_pairs(n);
    let found: BTreeSet<String> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter(|mask| mask.count_ones() as usize >= n)
        .filter_map(|mask| {
            let g = graph_from_mask(n, &pairs, mask);
            if g.min_degree() < Some(2) {
                return None;
            }
            is_minimal_factor_critical(&g).verdict.then(|| canonical_pair(&g).0)
        })
        .collect();
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnumerationReport<T> {
    pub n: usize,
    pub class_name: GraphClass,
    pub count: usize,
    pub max_rho: T,
    /// Canonical codes within [`RHO_TOLERANCE`] of the maximum, sorted.
    pub argmax: Vec<String>,
    pub bound: T,
    pub bound_met: bool,
    pub extremal_match: bool,
}

fn report<T: Scalar>(
    n: usize,
    class_name: GraphClass,
    codes: &BTreeSet<String>,
    bound: T,
    extremal: &Graph,
    opts: &SpectralOptions<T>,
) -> Result<EnumerationReport<T>, ExtremalError> {
    let rhos: Vec<(String, T)> = codes
        .par_iter()
        .map(|code| {
            let g = crate::graph6::parse_graph6(code).expect("codes come from the encoder");
            spectral_radius(&g, opts).map(|r| (code.clone(), r.rho))
        })
        .collect::<Result<_, _>>()?;
    let max_rho = rhos.iter().map(|&(_, r)| r).fold(T::zero(), T::max);
    let tol = T::of(RHO_TOLERANCE);
    let argmax: Vec<String> =
        rhos.iter().filter(|&&(_, r)| r >= max_rho - tol).map(|(c, _)| c.clone()).collect();
    let expected = vec![canonical_pair(extremal).0];
    Ok(EnumerationReport {
        n,
        class_name,
        count: codes.len(),
        max_rho,
        bound_met: max_rho <= bound + tol,
        extremal_match: argmax == expected,
        argmax,
        bound,
    })
}

/// Maximum spectral radius over minimal matching covered bipartite graphs
/// of order `n`, compared with `(1 + sqrt(2n - 3)) / 2` (or 2 when
/// `n <= 4`) and with `P*3(n)` as the expected unique maximizer.
pub fn verify_theorem_1<T: Scalar>(
    n: usize,
    opts: &SpectralOptions<T>,
) -> Result<EnumerationReport<T>, ExtremalError> {
    let codes = enumerate_minimal_mc_bipartite(n)?;
    let (bound, extremal) = match n {
        2 => (T::of(2.0), Graph::complete(2)),
        4 => (T::of(2.0), Graph::cycle(4)),
        _ => (rho_p3star(n).expect("order checked"), gen_p3star(n)?),
    };
    report(n, GraphClass::MinimalMcBipartite, &codes, bound, &extremal, opts)
}

/// Maximum spectral radius over minimal factor-critical graphs of order
/// `n`, compared with the friendship graph.
pub fn verify_theorem_2<T: Scalar>(
    n: usize,
    opts: &SpectralOptions<T>,
) -> Result<EnumerationReport<T>, ExtremalError> {
    let codes = enumerate_minimal_factor_critical(n)?;
    let bound = rho_friendship(n).expect("order checked");
    report(n, GraphClass::MinimalFactorCritical, &codes, bound, &gen_friendship(n)?, opts)
}

#[cfg(test)]
mod tests;
