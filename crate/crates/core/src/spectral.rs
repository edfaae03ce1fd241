//! Spectral radius and Perron vector of the adjacency matrix.

use serde::Serialize;
use thiserror::Error;

use crate::canon::{orbits, SizeLimitError};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Largest order accepted by [`automorphism_orbits`].
pub const ORBIT_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralOptions<T> {
    pub tol: T,
    pub max_iter: usize,
}

impl<T: Scalar> Default for SpectralOptions<T> {
    fn default() -> Self {
        SpectralOptions { tol: T::default_tolerance(), max_iter: 1_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult<T> {
    pub rho: T,
    /// Positive, unit Euclidean norm.
    pub perron: Vec<T>,
    pub iterations: usize,
    /// `max_v |sum_{u ~ v} x_u - rho x_v|`.
    pub residual: T,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("order {0} must be even and at least 6")]
    P3StarOrder(usize),
    #[error("order {0} must be odd and at least 3")]
    FriendshipOrder(usize),
}

fn adjacency_times<T: Scalar>(g: &Graph, x: &[T], out: &mut [T]) {
    for (v, slot) in out.iter_mut().enumerate() {
        *slot = g.neighbors(v).iter().map(|&u| x[u]).sum();
    }
}

/// Power iteration on `A + I` from the all-ones vector. The shift makes the
/// Perron value strictly dominant even for bipartite graphs, whose spectrum
/// is symmetric about zero.
pub fn spectral_radius<T: Scalar>(
    g: &Graph,
    opts: &SpectralOptions<T>,
) -> Result<SpectralResult<T>, SpectralError> {
    let n = g.n();
    if n == 0 {
        return Err(SpectralError::Empty);
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let mut x = vec![T::one() / T::of(n as f64).sqrt(); n];
    let mut ax = vec![T::zero(); n];
    let mut residual = T::infinity();
    for iterations in 0..=opts.max_iter {
        adjacency_times(g, &x, &mut ax);
        let rho: T = x.iter().zip(&ax).map(|(&a, &b)| a * b).sum();
        residual = x
            .iter()
            .zip(&ax)
            .map(|(&xv, &yv)| (yv - rho * xv).abs())
            .fold(T::zero(), T::max);
        if residual <= opts.tol * rho.max(T::one()) {
            return Ok(SpectralResult { rho, perron: x, iterations, residual });
        }
        for (xv, &yv) in x.iter_mut().zip(&ax) {
            *xv = *xv + yv;
        }
        let norm = x.iter().map(|&v| v * v).sum::<T>().sqrt();
        for xv in &mut x {
            *xv = *xv / norm;
        }
    }
    Err(SpectralError::NoConvergence {
        iterations: opts.max_iter,
        residual: residual.to_f64().unwrap_or(f64::NAN),
    })
}

/// Largest spectral radius over the components of a possibly disconnected
/// graph; zero for an edgeless graph.
pub fn spectral_radius_of_components<T: Scalar>(
    g: &Graph,
    opts: &SpectralOptions<T>,
) -> Result<T, SpectralError> {
    if g.n() == 0 {
        return Err(SpectralError::Empty);
    }
    let mut best = T::zero();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let mut removed = vec![true; g.n()];
        for &v in &comp {
            removed[v] = false;
        }
        let (part, _) = g.induced_by_mask(&removed);
        best = best.max(spectral_radius(&part, opts)?.rho);
    }
    Ok(best)
}

/// `(1 + sqrt(2n - 3)) / 2`, the positive root of `r^2 - r - (n - 2)/2`.
pub fn rho_p3star<T: Scalar>(n: usize) -> Result<T, ClosedFormError> {
    if n < 6 || n % 2 == 1 {
        return Err(ClosedFormError::P3StarOrder(n));
    }
    Ok((T::one() + T::of((2 * n - 3) as f64).sqrt()) / T::of(2.0))
}

/// `(1 + sqrt(4n - 3)) / 2`, the positive root of `r^2 - r - (n - 1)`, from
/// the equitable partition into the center and the rest.
pub fn rho_friendship<T: Scalar>(n: usize) -> Result<T, ClosedFormError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(ClosedFormError::FriendshipOrder(n));
    }
    Ok((T::one() + T::of((4 * n - 3) as f64).sqrt()) / T::of(2.0))
}

/// Vertex orbits under the full automorphism group, each sorted and listed
/// by smallest member.
pub fn automorphism_orbits(g: &Graph) -> Result<Vec<Vec<usize>>, SizeLimitError> {
    if g.n() > ORBIT_MAX_ORDER {
        return Err(SizeLimitError { n: g.n(), limit: ORBIT_MAX_ORDER });
    }
    Ok(orbits(g))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dominance<T> {
    pub rho_sub: T,
    pub rho_super: T,
    /// The subgraph misses at least one edge, so the inequality must be strict.
    pub strict_expected: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DominanceError {
    #[error("orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("edge {0:?} of the subgraph is missing from the supergraph")]
    NotSubgraph((usize, usize)),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Compares `rho(h)` against `rho(g)` for a spanning subgraph `h` of a
/// connected graph `g`: equal when the edge sets agree, strictly smaller
/// otherwise.
pub fn dominance_check<T: Scalar>(
    h: &Graph,
    g: &Graph,
    opts: &SpectralOptions<T>,
) -> Result<Dominance<T>, DominanceError> {
    if h.n() != g.n() {
        return Err(DominanceError::OrderMismatch(h.n(), g.n()));
    }
    if let Some(e) = h.edges().find(|&(u, v)| !g.has_edge(u, v)) {
        return Err(DominanceError::NotSubgraph(e));
    }
    let rho_super = spectral_radius(g, opts)?.rho;
    let rho_sub = spectral_radius_of_components(h, opts)?;
    let strict_expected = h.edge_count() < g.edge_count();
    let slack = opts.tol * rho_super.max(T::one()) * T::of(4.0);
    let holds = if strict_expected {
        rho_sub < rho_super
    } else {
        (rho_sub - rho_super).abs() <= slack
    };
    Ok(Dominance { rho_sub, rho_super, strict_expected, holds })
}
