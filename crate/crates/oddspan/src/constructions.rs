//! The named extremal graphs: Turán graphs, complete bipartite graphs,
//! cycles, balanced cycle blow-ups, the BC spine-of-blocks family, and
//! Häggkvist's three-block construction.
//!
//! Vertex numbering is deterministic throughout (spine vertices first, then
//! block vertices in copy order) so graph6 output and test fixtures are
//! stable.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("{0} must be at least 1")]
    ZeroParameter(&'static str),
    #[error("Turán graph needs r <= n, got r={r}, n={n}")]
    TooManyParts { n: usize, r: usize },
    #[error("order {n} is not divisible by {divisor}")]
    NotDivisible { n: usize, divisor: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Rejects orders beyond the library cap before any edge list is built, so
/// absurd parameters fail fast instead of allocating.
fn check_order(parts: &[usize]) -> Result<usize, ConstructError> {
    let order = parts.iter().fold(0usize, |acc, &p| acc.saturating_add(p));
    if order > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(order).into());
    }
    Ok(order)
}

/// Complete r-partite graph on `n` vertices with near-equal part sizes.
/// Larger parts come first; vertices are numbered part by part.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph, ConstructError> {
    if n == 0 {
        return Err(ConstructError::ZeroParameter("n"));
    }
    if r == 0 {
        return Err(ConstructError::ZeroParameter("r"));
    }
    if r > n {
        return Err(ConstructError::TooManyParts { n, r });
    }
    check_order(&[n])?;
    let sizes: Vec<usize> = (0..r).map(|i| n / r + usize::from(i < n % r)).collect();
    let mut edges = Vec::new();
    let mut start = 0;
    let mut starts = Vec::with_capacity(r);
    for &s in &sizes {
        starts.push(start);
        start += s;
    }
    for i in 0..r {
        for j in (i + 1)..r {
            for u in starts[i]..starts[i] + sizes[i] {
                for v in starts[j]..starts[j] + sizes[j] {
                    edges.push((u, v));
                }
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// K_{a,b} with part A = `0..a` and part B = `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, ConstructError> {
    if a == 0 || b == 0 {
        return Err(ConstructError::ZeroParameter("part size"));
    }
    check_order(&[a, b])?;
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(a + b, &edges)?)
}

/// The cycle C_m on vertices `0..m` in order.
pub fn cycle_graph(m: usize) -> Result<Graph, ConstructError> {
    if m < 3 {
        return Err(ConstructError::CycleTooShort(m));
    }
    check_order(&[m])?;
    let edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    Ok(Graph::from_edges(m, &edges)?)
}

/// Blow-up of C_m with every part an independent set of size `t`.
/// Order mt, every vertex of degree 2t; for odd m the shortest odd cycle is m.
pub fn balanced_cycle_blowup(m: usize, t: usize) -> Result<Graph, ConstructError> {
    if t == 0 {
        return Err(ConstructError::ZeroParameter("t"));
    }
    check_order(&[m])?; // bounds m before any m-sized allocation
    check_order(&vec![t; m.max(1)])?;
    Ok(cycle_graph(m)?.blow_up(&vec![t; m])?)
}

/// `2l+1` disjoint copies of K_{t,t} with one selected vertex per copy, the
/// selected vertices joined in a cycle of length `2l+1`.
///
/// Order 2(2l+1)t, minimum degree t, selected vertices of degree t+2, and the
/// only odd cycle length present is 2l+1.
pub fn bc_graph(ell: usize, t: usize) -> Result<Graph, ConstructError> {
    if ell == 0 {
        return Err(ConstructError::ZeroParameter("ell"));
    }
    if ell > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(usize::MAX).into());
    }
    blocks_on_spine(2 * ell + 1, t)
}

/// Häggkvist's construction: three disjoint copies of K_{t,t} with the three
/// selected vertices pairwise joined. Order 6t, minimum degree t, and the only
/// odd cycle length present is 3.
pub fn haggkvist_graph(t: usize) -> Result<Graph, ConstructError> {
    blocks_on_spine(3, t)
}

/// Shared builder: `spine` disjoint K_{t,t} blocks, one selected vertex each,
/// selected vertices forming a cycle. Spine vertices are `0..spine`; block i
/// then owns the `2t-1` vertices starting at `spine + i(2t-1)`, its side-X
/// fillers first and side Y after them.
fn blocks_on_spine(spine: usize, t: usize) -> Result<Graph, ConstructError> {
    if t == 0 {
        return Err(ConstructError::ZeroParameter("t"));
    }
    debug_assert!(spine >= 3 && spine % 2 == 1);
    if t > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(usize::MAX).into());
    }
    let n = check_order(&vec![2 * t; spine])?;
    let mut edges = Vec::new();
    for i in 0..spine {
        edges.push((i, (i + 1) % spine));
    }
    for i in 0..spine {
        let base = spine + i * (2 * t - 1);
        // side X of block i: selected vertex i plus t-1 fillers
        let side_x: Vec<usize> = std::iter::once(i).chain(base..base + t - 1).collect();
        let side_y = base + t - 1..base + 2 * t - 1;
        for &x in &side_x {
            for y in side_y.clone() {
                edges.push((x, y));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Parameters for one named construction, as accepted on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionSpec {
    Turan { n: usize, r: usize },
    CompleteBipartite { a: usize, b: usize },
    Cycle { m: usize },
    CycleBlowup { m: usize, t: usize },
    Bc { ell: usize, t: usize },
    Haggkvist { t: usize },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Graph, ConstructError> {
        match *self {
            ConstructionSpec::Turan { n, r } => turan_graph(n, r),
            ConstructionSpec::CompleteBipartite { a, b } => complete_bipartite(a, b),
            ConstructionSpec::Cycle { m } => cycle_graph(m),
            ConstructionSpec::CycleBlowup { m, t } => balanced_cycle_blowup(m, t),
            ConstructionSpec::Bc { ell, t } => bc_graph(ell, t),
            ConstructionSpec::Haggkvist { t } => haggkvist_graph(t),
        }
    }
}

/// BC graph specified by total order; errors unless `2(2l+1)` divides `n`.
pub fn bc_graph_with_order(ell: usize, n: usize) -> Result<Graph, ConstructError> {
    if ell == 0 {
        return Err(ConstructError::ZeroParameter("ell"));
    }
    if ell > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(usize::MAX).into());
    }
    let divisor = 2 * (2 * ell + 1);
    if n == 0 || !n.is_multiple_of(divisor) {
        return Err(ConstructError::NotDivisible { n, divisor });
    }
    bc_graph(ell, n / divisor)
}

/// Balanced blow-up of C_m specified by total order; errors unless `m | n`.
pub fn balanced_cycle_blowup_with_order(m: usize, n: usize) -> Result<Graph, ConstructError> {
    if m < 3 {
        return Err(ConstructError::CycleTooShort(m));
    }
    if n == 0 || !n.is_multiple_of(m) {
        return Err(ConstructError::NotDivisible { n, divisor: m });
    }
    balanced_cycle_blowup(m, n / m)
}

/// Häggkvist graph specified by total order; errors unless `6 | n`.
pub fn haggkvist_graph_with_order(n: usize) -> Result<Graph, ConstructError> {
    if n == 0 || !n.is_multiple_of(6) {
        return Err(ConstructError::NotDivisible { n, divisor: 6 });
    }
    haggkvist_graph(n / 6)
}
