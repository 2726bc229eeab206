//! Canonical labeling and isomorphism for graphs on at most 64 vertices.
//!
//! The labeling is the classic individualization-refinement search: start from
//! a degree-invariant ordered partition, refine it to equitability, branch on
//! the vertices of the first non-singleton cell, and keep the lexicographically
//! smallest relabeled adjacency code over all leaves. Automorphisms discovered
//! when two leaves tie are used to prune branches and are returned as
//! generators.

use crate::graph::Graph;
use thiserror::Error;

/// Isomorphism machinery is capped at 64 vertices so a row fits in one word.
pub const ISO_MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("order {0} exceeds the {ISO_MAX_VERTICES}-vertex isomorphism cap")]
    CapExceeded(usize),
}

/// Result of a canonical labeling run.
#[derive(Debug, Clone)]
pub(crate) struct CanonOutcome {
    /// Adjacency rows of the canonically relabeled graph.
    pub canonical_rows: Vec<u64>,
    /// `labeling[v]` = canonical position of original vertex `v`.
    pub labeling: Vec<usize>,
    /// Generators of the discovered automorphism group (vertex images).
    pub generators: Vec<Vec<usize>>,
}

impl CanonOutcome {
    /// Vertex sitting at canonical position `pos`.
    pub fn vertex_at(&self, pos: usize) -> usize {
        self.labeling
            .iter()
            .position(|&p| p == pos)
            .expect("labeling is a permutation")
    }

    /// Orbit partition of the discovered automorphism group, as the smallest
    /// vertex of each orbit.
    #[allow(dead_code)] // exercised by the brute-force orbit cross-check
    pub fn orbits(&self) -> Vec<usize> {
        let n = self.labeling.len();
        let mut uf = UnionFind::new(n);
        for g in &self.generators {
            for v in 0..n {
                uf.union(v, g[v]);
            }
        }
        (0..n).map(|v| uf.find(v)).collect()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

/// Canonically labels `rows` (bit adjacency, `n <= 64`). `colors` constrains
/// the search to color-preserving relabelings; vertices of smaller color come
/// first in the canonical order.
pub(crate) fn canonize(n: usize, rows: &[u64], colors: &[u32]) -> CanonOutcome {
    debug_assert!(n <= ISO_MAX_VERTICES && rows.len() == n && colors.len() == n);
    if n == 0 {
        return CanonOutcome {
            canonical_rows: Vec::new(),
            labeling: Vec::new(),
            generators: Vec::new(),
        };
    }
    // initial partition: one cell per color value, ascending
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let mut cells: Vec<Vec<usize>> = palette
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();
    refine(n, rows, &mut cells);

    let mut search = Search {
        n,
        rows,
        best_code: None,
        best_labeling: Vec::new(),
        generators: Vec::new(),
        prefix: Vec::new(),
    };
    search.explore(cells);
    CanonOutcome {
        canonical_rows: search.best_code.expect("at least one leaf"),
        labeling: search.best_labeling,
        generators: search.generators,
    }
}

struct Search<'a> {
    n: usize,
    rows: &'a [u64],
    best_code: Option<Vec<u64>>,
    best_labeling: Vec<usize>,
    generators: Vec<Vec<usize>>,
    prefix: Vec<usize>,
}

impl Search<'_> {
    fn explore(&mut self, cells: Vec<Vec<usize>>) {
        let target = match cells.iter().position(|c| c.len() > 1) {
            None => return self.leaf(&cells),
            Some(t) => t,
        };
        let candidates = cells[target].clone();
        let mut branched: Vec<usize> = Vec::new();
        for &u in &candidates {
            if self.equivalent_to_branched(u, &branched) {
                continue;
            }
            branched.push(u);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..target].iter().cloned());
            child.push(vec![u]);
            child.push(cells[target].iter().copied().filter(|&v| v != u).collect());
            child.extend(cells[target + 1..].iter().cloned());
            refine(self.n, self.rows, &mut child);
            self.prefix.push(u);
            self.explore(child);
            self.prefix.pop();
        }
    }

    /// Prunes `u` when an automorphism fixing the individualized prefix maps
    /// it onto an already-explored sibling branch.
    fn equivalent_to_branched(&self, u: usize, branched: &[usize]) -> bool {
        if branched.is_empty() || self.generators.is_empty() {
            return false;
        }
        let usable: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|g| self.prefix.iter().all(|&p| g[p] == p))
            .collect();
        if usable.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for g in usable {
            for v in 0..self.n {
                uf.union(v, g[v]);
            }
        }
        let ru = uf.find(u);
        branched.iter().any(|&w| uf.find(w) == ru)
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let mut labeling = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = pos;
        }
        let code = apply_labeling(self.n, self.rows, &labeling);
        match &self.best_code {
            None => {
                self.best_code = Some(code);
                self.best_labeling = labeling;
            }
            Some(best) => match code.cmp(best) {
                std::cmp::Ordering::Less => {
                    self.best_code = Some(code);
                    self.best_labeling = labeling;
                }
                std::cmp::Ordering::Equal => {
                    // two labelings with one code compose to an automorphism
                    let mut inv_leaf = vec![0usize; self.n];
                    for v in 0..self.n {
                        inv_leaf[labeling[v]] = v;
                    }
                    let auto: Vec<usize> =
                        (0..self.n).map(|v| inv_leaf[self.best_labeling[v]]).collect();
                    if auto.iter().enumerate().any(|(v, &img)| img != v) {
                        self.generators.push(auto);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

fn apply_labeling(n: usize, rows: &[u64], labeling: &[usize]) -> Vec<u64> {
    let mut out = vec![0u64; n];
    for v in 0..n {
        let mut bits = rows[v];
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out[labeling[v]] |= 1 << labeling[w];
        }
    }
    out
}

/// Splits cells by per-cell neighbor counts until the partition is equitable.
/// New sub-cells are ordered by their count signature, which only depends on
/// cell positions, so the refinement commutes with relabeling.
fn refine(n: usize, rows: &[u64], cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut cell_of = vec![0usize; n];
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let k = cells.len();
        let signature = |v: usize| {
            let mut sig = vec![0u32; k];
            let mut bits = rows[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                sig[cell_of[w]] += 1;
            }
            sig
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(k);
        let mut split = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut group: Vec<usize> = vec![keyed[0].1];
            for pair in keyed.windows(2) {
                if pair[0].0 == pair[1].0 {
                    group.push(pair[1].1);
                } else {
                    next.push(std::mem::take(&mut group));
                    group.push(pair[1].1);
                    split = true;
                }
            }
            next.push(group);
        }
        *cells = next;
        if !split {
            return;
        }
    }
}

fn graph_rows(g: &Graph) -> Result<Vec<u64>, IsoError> {
    if g.n() > ISO_MAX_VERTICES {
        return Err(IsoError::CapExceeded(g.n()));
    }
    Ok((0..g.n()).map(|v| g.row(v)[0]).collect())
}

/// Canonical representative of the isomorphism class of `g`.
///
/// Re-canonicalizing the result returns it unchanged.
pub fn canonical_form(g: &Graph) -> Result<Graph, IsoError> {
    let rows = graph_rows(g)?;
    let outcome = canonize(g.n(), &rows, &vec![0; g.n()]);
    Ok(Graph::from_words(g.n(), &outcome.canonical_rows))
}

/// Tests whether an edge-preserving bijection exists between `g` and `h`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, IsoError> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        graph_rows(g)?;
        graph_rows(h)?;
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        graph_rows(g)?;
        graph_rows(h)?;
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bc_graph, cycle_graph};
    use crate::graph::Graph;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn c5_relabelings_are_isomorphic() {
        let g = cycle_graph(5).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..5).collect();
            perm.shuffle(&mut rng);
            assert!(are_isomorphic(&g, &g.permuted(&perm)).unwrap());
        }
    }

    #[test]
    fn c6_vs_two_triangles() {
        let c6 = cycle_graph(6).unwrap();
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        // equal degree sequences, different graphs
        assert!(!are_isomorphic(&c6, &two_triangles).unwrap());
    }

    #[test]
    fn bc_graph_shuffled() {
        let g = bc_graph(2, 2).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        assert!(are_isomorphic(&g, &g.permuted(&perm)).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = cycle_graph(65).unwrap();
        assert_eq!(canonical_form(&g), Err(IsoError::CapExceeded(65)));
        assert_eq!(are_isomorphic(&g, &g), Err(IsoError::CapExceeded(65)));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let g = bc_graph(1, 2).unwrap();
        let c = canonical_form(&g).unwrap();
        assert_eq!(canonical_form(&c).unwrap(), c);
    }

    #[test]
    fn discovered_orbits_match_brute_force_on_small_graphs() {
        // every graph on 5 vertices
        for code in 0u32..1 << 10 {
            let mut edges = Vec::new();
            let mut bit = 0;
            for v in 1..5 {
                for u in 0..v {
                    if code >> bit & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            let g = Graph::from_edges(5, &edges).unwrap();
            let rows = graph_rows(&g).unwrap();
            let outcome = canonize(5, &rows, &[0; 5]);
            assert_eq!(
                outcome.orbits(),
                crate::oracle::automorphism_orbits_brute(&g),
                "orbit mismatch for code {code}"
            );
        }
    }

    #[test]
    fn highly_symmetric_graphs_are_canonized_consistently() {
        // large automorphism groups are where labeling searches usually break
        let zoo: Vec<Graph> = vec![
            crate::constructions::turan_graph(12, 3).unwrap(),
            crate::constructions::complete_bipartite(5, 5).unwrap(),
            crate::constructions::balanced_cycle_blowup(5, 2).unwrap(),
            crate::constructions::haggkvist_graph(2).unwrap(),
            bc_graph(2, 2).unwrap(),
            Graph::empty(10).unwrap(),
            crate::constructions::turan_graph(8, 8).unwrap(),
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(404);
        for g in &zoo {
            let canon = canonical_form(g).unwrap();
            for _ in 0..50 {
                let mut perm: Vec<usize> = (0..g.n()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.permuted(&perm)).unwrap(), canon);
            }
        }
    }

    #[test]
    fn relabeling_near_the_cap() {
        let g = bc_graph(2, 6).unwrap();
        assert_eq!(g.n(), 60);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(60);
        let mut perm: Vec<usize> = (0..60).collect();
        perm.shuffle(&mut rng);
        assert!(are_isomorphic(&g, &g.permuted(&perm)).unwrap());
    }

    #[test]
    fn circulant_identities_and_non_identities() {
        let circulant = |n: usize, steps: &[usize]| {
            let mut edges = Vec::new();
            for u in 0..n {
                for &s in steps {
                    edges.push((u, (u + s) % n));
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        };
        // the doubled 5-cycle is the circulant C10(1,4)
        let blowup = crate::constructions::balanced_cycle_blowup(5, 2).unwrap();
        assert!(are_isomorphic(&blowup, &circulant(10, &[1, 4])).unwrap());
        // C10(1,3) is 4-regular too, but bipartite, hence different
        assert!(!are_isomorphic(&blowup, &circulant(10, &[1, 3])).unwrap());
    }

    proptest! {
        #[test]
        fn canonical_form_invariant_under_relabeling(seed in any::<u64>(), n in 1usize..12) {
            use rand::RngExt;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm);
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }
    }
}
