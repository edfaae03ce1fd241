//! Canonical labeling and automorphism orbits for small graphs.
//!
//! The canonical form is the graph6 string of the relabeling whose
//! upper-triangle bit string (graph6 column-major order) is lexicographically
//! minimal among the leaves of an individualize/refine search tree. Root
//! cells come from iterated degree refinement, so only orderings compatible
//! with the refined degree partition are compared. Automorphisms found along
//! the way prune isomorphic subtrees.

use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph of order {n} exceeds the limit of {limit} for this operation")]
pub struct SizeLimitError {
    pub n: usize,
    pub limit: usize,
}

type Cells = Vec<Vec<usize>>;

struct Masks(Vec<u64>);

impl Masks {
    fn new(g: &Graph) -> Self {
        Masks(
            (0..g.n())
                .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
                .collect(),
        )
    }

    #[inline]
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.0[u] >> v & 1 == 1
    }
}

/// Splits cells by neighbor counts into every other cell until stable.
/// Subcells are ordered by their (label independent) signature.
fn refine(masks: &Masks, mut cells: Cells) -> Cells {
    loop {
        let cell_masks: Vec<u64> =
            cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = cell_masks.iter().map(|cm| (masks.0[v] & cm).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn root_partition(masks: &Masks, n: usize) -> Cells {
    if n == 0 {
        return Vec::new();
    }
    refine(masks, vec![(0..n).collect()])
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

struct CanonSearch<'a> {
    masks: &'a Masks,
    n: usize,
    best: Option<(u128, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn code(&self, order: &[usize]) -> u128 {
        let mut code = 0u128;
        for j in 1..self.n {
            for i in 0..j {
                code = code << 1 | u128::from(self.masks.adjacent(order[i], order[j]));
            }
        }
        code
    }

    fn search(&mut self, cells: Cells, path: &mut Vec<usize>) {
        let cells = refine(self.masks, cells);
        let Some(c) = cells.iter().position(|cell| cell.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let code = self.code(&order);
            match &self.best {
                Some((best, _)) if code > *best => {}
                Some((best, best_order)) if code == *best => {
                    let mut gamma = vec![0; self.n];
                    for (&a, &b) in best_order.iter().zip(&order) {
                        gamma[a] = b;
                    }
                    if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(gamma);
                    }
                }
                _ => self.best = Some((code, order)),
            }
            return;
        };
        let cell = cells[c].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() && self.equivalent_to_tried(path, &tried, v) {
                continue;
            }
            let mut next: Cells = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..c]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[c + 1..]);
            path.push(v);
            self.search(next, path);
            path.pop();
            tried.push(v);
        }
    }

    /// Whether some stored automorphism fixing `path` pointwise links `v` to an
    /// already explored sibling.
    fn equivalent_to_tried(&self, path: &[usize], tried: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (x, &y) in gamma.iter().enumerate() {
                    union(&mut parent, x, y);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }
}

/// Canonical vertex order: position `i` of the canonical graph is vertex
/// `order[i]` of `g`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>, SizeLimitError> {
    let n = g.n();
    if n > CANON_MAX_ORDER {
        return Err(SizeLimitError { n, limit: CANON_MAX_ORDER });
    }
    let masks = Masks::new(g);
    let mut search = CanonSearch { masks: &masks, n, best: None, automorphisms: Vec::new() };
    search.search(root_partition(&masks, n), &mut Vec::new());
    Ok(search.best.map(|(_, order)| order).unwrap_or_default())
}

/// Canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, SizeLimitError> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.permuted(&perm))
}

/// graph6 string of the canonical relabeling; equal exactly for isomorphic
/// inputs.
pub fn canonical_form(g: &Graph) -> Result<String, SizeLimitError> {
    let canon = canonical_graph(g)?;
    Ok(to_graph6(&canon).expect("canonical forms are limited to small orders"))
}

/// Vertex orbits of the full automorphism group, each sorted, ordered by
/// smallest member. Works for any order up to 64 but is exponential in the
/// worst case.
pub(crate) fn orbits(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let masks = Masks::new(g);
    let cells = root_partition(&masks, n);
    let mut cell_of = vec![0; n];
    for (i, cell) in cells.iter().enumerate() {
        for &v in cell {
            cell_of[v] = i;
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for cell in &cells {
        for (i, &v) in cell.iter().enumerate() {
            for &w in &cell[i + 1..] {
                if find(&mut parent, v) == find(&mut parent, w) {
                    continue;
                }
                let mut map = vec![usize::MAX; n];
                let mut used = vec![false; n];
                map[v] = w;
                used[w] = true;
                if extend_isomorphism(&masks, &cell_of, &mut map, &mut used, 0) {
                    for (x, &y) in map.iter().enumerate() {
                        union(&mut parent, x, y);
                    }
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(v);
    }
    groups
}

fn extend_isomorphism(
    masks: &Masks,
    cell_of: &[usize],
    map: &mut [usize],
    used: &mut [bool],
    from: usize,
) -> bool {
    let n = map.len();
    let Some(x) = (from..n).find(|&x| map[x] == usize::MAX) else {
        return true;
    };
    for y in 0..n {
        if used[y] || cell_of[y] != cell_of[x] {
            continue;
        }
        let consistent = (0..n)
            .filter(|&z| map[z] != usize::MAX)
            .all(|z| masks.adjacent(x, z) == masks.adjacent(y, map[z]));
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend_isomorphism(masks, cell_of, map, used, x + 1) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}
