//! Immutable simple undirected graphs over vertex indices `0..n`, stored as
//! fixed-width adjacency bit rows.
//!
//! The order cap is [`MAX_VERTICES`] (512), which keeps every row in a handful
//! of machine words. Graphs are immutable after construction, so values can be
//! shared freely across threads.

use thiserror::Error;

/// Hard cap on the number of vertices a [`Graph`] may have.
pub const MAX_VERTICES: usize = 512;

/// Errors raised while building or querying graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("order {0} exceeds the {MAX_VERTICES}-vertex cap")]
    TooManyVertices(usize),
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
    #[error("blow-up size list has {got} entries, graph has {expected} vertices")]
    SizeListMismatch { expected: usize, got: usize },
    #[error("blow-up part sizes must be positive")]
    ZeroPartSize,
}

/// An immutable simple undirected graph.
///
/// Adjacency is one bit row per vertex; `bits[v * words_per_row + w]` holds
/// bits `64w..64w+63` of row `v`. Rows are kept symmetric and loop-free by
/// construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Box<[u64]>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges collapse;
    /// endpoints must be distinct and in range.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Self::empty_rows(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Self::empty_rows(n))
    }

    fn empty_rows(n: usize) -> Self {
        let words_per_row = words_for(n);
        Graph {
            n,
            words_per_row,
            bits: vec![0u64; n.max(1) * words_per_row].into_boxed_slice(),
        }
    }

    /// Internal constructor from validated single-word rows (n <= 64).
    pub(crate) fn from_words(n: usize, rows: &[u64]) -> Self {
        debug_assert!(n <= 64 && rows.len() == n);
        let mut g = Self::empty_rows(n);
        for (v, &row) in rows.iter().enumerate() {
            debug_assert_eq!(row >> v & 1, 0, "self-loop in row {v}");
            g.bits[v * g.words_per_row] = row;
        }
        if cfg!(debug_assertions) {
            for u in 0..n {
                for v in 0..n {
                    debug_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                }
            }
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words_per_row;
        self.bits[u * w + v / 64] |= 1 << (v % 64);
        self.bits[v * w + u / 64] |= 1 << (u % 64);
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Adjacency row of `v` as bit words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Minimum degree over all vertices. Errors on the empty graph.
    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let base = wi * 64;
            BitIter(word).map(move |b| base + b)
        })
    }

    /// All edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    ///
    /// `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Self::empty_rows(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Induced subgraph on `verts` (vertex `i` of the result is `verts[i]`).
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Self::empty_rows(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Replaces vertex `v` by an independent set of `sizes[v]` vertices and
    /// each edge by a complete bipartite join between the corresponding sets.
    ///
    /// Vertex numbering is deterministic: the set for vertex `v` occupies the
    /// consecutive range starting at `sizes[0] + ... + sizes[v-1]`.
    pub fn blow_up(&self, sizes: &[usize]) -> Result<Graph, GraphError> {
        if sizes.len() != self.n {
            return Err(GraphError::SizeListMismatch {
                expected: self.n,
                got: sizes.len(),
            });
        }
        if sizes.contains(&0) {
            return Err(GraphError::ZeroPartSize);
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(total));
        }
        let mut offsets = Vec::with_capacity(self.n);
        let mut acc = 0;
        for &s in sizes {
            offsets.push(acc);
            acc += s;
        }
        let mut g = Self::empty_rows(total);
        for (u, v) in self.edges() {
            for i in 0..sizes[u] {
                for j in 0..sizes[v] {
                    g.set_edge(offsets[u] + i, offsets[v] + j);
                }
            }
        }
        Ok(g)
    }

    /// Two-colors the graph if possible, otherwise exhibits an odd cycle.
    pub fn bipartiteness(&self) -> Bipartiteness {
        // BFS layering per component; an edge between same-parity layers
        // closes an odd cycle through the BFS-tree lowest common ancestor.
        let n = self.n;
        let mut color = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = color[u] ^ 1;
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return Bipartiteness::OddCycle(odd_cycle_through(
                            u, v, &parent, &depth,
                        ));
                    }
                }
            }
        }
        let part_a = (0..n).filter(|&v| color[v] == 0).collect();
        let part_b = (0..n).filter(|&v| color[v] == 1).collect();
        Bipartiteness::Bipartite(Bipartition { part_a, part_b })
    }

    /// True iff the graph has no odd cycle.
    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartiteness(), Bipartiteness::Bipartite(_))
    }
}

/// Shrinks the odd closed walk `u ~ v` plus the two BFS tree paths into a
/// simple odd cycle by cutting both paths at their lowest common ancestor.
fn odd_cycle_through(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> OddCycle {
    let (mut x, mut y) = (u, v);
    let mut up_x = Vec::new();
    let mut up_y = Vec::new();
    while depth[x] > depth[y] {
        up_x.push(x);
        x = parent[x];
    }
    while depth[y] > depth[x] {
        up_y.push(y);
        y = parent[y];
    }
    while x != y {
        up_x.push(x);
        up_y.push(y);
        x = parent[x];
        y = parent[y];
    }
    // cycle: u .. lca .. v, then the u~v edge closes it
    let mut vertices = up_x;
    vertices.push(x);
    vertices.extend(up_y.into_iter().rev());
    debug_assert!(vertices.len() % 2 == 1 && vertices.len() >= 3);
    OddCycle { vertices }
}

/// Outcome of a two-coloring attempt.
#[derive(Debug, Clone)]
pub enum Bipartiteness {
    Bipartite(Bipartition),
    OddCycle(OddCycle),
}

impl Bipartiteness {
    pub fn bipartition(self) -> Option<Bipartition> {
        match self {
            Bipartiteness::Bipartite(b) => Some(b),
            Bipartiteness::OddCycle(_) => None,
        }
    }

    pub fn odd_cycle(self) -> Option<OddCycle> {
        match self {
            Bipartiteness::Bipartite(_) => None,
            Bipartiteness::OddCycle(c) => Some(c),
        }
    }
}

/// Witness that a graph is bipartite: two disjoint parts covering every
/// vertex, with every edge crossing between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
}

impl Bipartition {
    /// Checks the defining property against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut side = vec![u8::MAX; g.n()];
        for &v in &self.part_a {
            side[v] = 0;
        }
        for &v in &self.part_b {
            if side[v] != u8::MAX {
                return false;
            }
            side[v] = 1;
        }
        side.iter().all(|&s| s != u8::MAX)
            && g.edges().all(|(u, v)| side[u] != side[v])
    }
}

/// A simple cycle of odd length, listed in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    pub vertices: Vec<usize>,
}

impl OddCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks that the witness really is a simple odd cycle of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        crate::cycles::is_simple_cycle(g, &self.vertices) && self.vertices.len() % 2 == 1
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
