//! Independent reference implementations used to cross-check the fast paths.
//!
//! Everything here is deliberately naive: subset-and-cyclic-order cycle
//! search, permutation-based automorphisms and longest paths, and labeled
//! graph enumeration with orbit dedup. None of it shares code with the
//! algorithms it audits.

use crate::graph::Graph;
use itertools::Itertools;
use std::collections::BTreeSet;

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// True iff `g` has a cycle with exactly `len` vertices, by checking every
/// vertex subset of that size and every cyclic order of it. Only sensible for
/// small orders (n <= ~10).
pub fn subset_cycle_oracle(g: &Graph, len: usize) -> bool {
    if len < 3 || len > g.n() {
        return false;
    }
    for subset in (0..g.n()).combinations(len) {
        let first = subset[0];
        for rest in subset[1..].iter().copied().permutations(len - 1) {
            let mut ok = g.has_edge(first, rest[0]) && g.has_edge(*rest.last().unwrap(), first);
            if ok {
                ok = rest.windows(2).all(|w| g.has_edge(w[0], w[1]));
            }
            if ok {
                return true;
            }
        }
    }
    false
}

/// Lengths of all simple cycles, by exhaustive anchored path enumeration.
/// Output-sensitive; fine for graphs whose paths are short or sparse, such as
/// the block constructions.
pub fn all_cycle_lengths(g: &Graph) -> BTreeSet<usize> {
    let mut lengths = BTreeSet::new();
    let n = g.n();
    let mut path = Vec::new();
    let mut visited = vec![false; n];
    for anchor in 0..n {
        path.push(anchor);
        visited[anchor] = true;
        enumerate_paths(g, anchor, &mut path, &mut visited, &mut lengths);
        path.pop();
        visited[anchor] = false;
    }
    lengths
}

fn enumerate_paths(
    g: &Graph,
    anchor: usize,
    path: &mut Vec<usize>,
    visited: &mut [bool],
    lengths: &mut BTreeSet<usize>,
) {
    let u = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(u, anchor) {
        lengths.insert(path.len());
    }
    for w in g.neighbors(u) {
        if w > anchor && !visited[w] {
            path.push(w);
            visited[w] = true;
            enumerate_paths(g, anchor, path, visited, lengths);
            path.pop();
            visited[w] = false;
        }
    }
}

/// Automorphism orbits by checking all n! vertex permutations (n <= 8).
/// Returns the smallest orbit member for each vertex.
pub fn automorphism_orbits_brute(g: &Graph) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 8, "brute-force automorphisms are capped at 8 vertices");
    let mut orbit_min: Vec<usize> = (0..n).collect();
    let mut reps: Vec<usize> = (0..n).collect();
    let find = |reps: &mut Vec<usize>, mut v: usize| {
        while reps[v] != v {
            v = reps[v];
        }
        v
    };
    for perm in (0..n).permutations(n) {
        // a bijection mapping every edge onto an edge maps non-edges onto
        // non-edges as well, so this one-sided check suffices
        let is_auto = g.edges().all(|(u, v)| g.has_edge(perm[u], perm[v]));
        if is_auto {
            for v in 0..n {
                let (a, b) = (find(&mut reps, v), find(&mut reps, perm[v]));
                if a != b {
                    reps[a.max(b)] = a.min(b);
                }
            }
        }
    }
    for v in 0..n {
        orbit_min[v] = find(&mut reps, v);
    }
    orbit_min
}

/// Longest simple path order by brute force over vertex permutations
/// (n <= 10): the longest path is the longest permutation prefix whose
/// consecutive vertices are all adjacent.
pub fn longest_path_brute(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 10, "brute-force longest path is capped at 10 vertices");
    if n == 0 {
        return 0;
    }
    let mut best = 1;
    for perm in (0..n).permutations(n) {
        let mut run = 1;
        for w in perm.windows(2) {
            if g.has_edge(w[0], w[1]) {
                run += 1;
                if run > best {
                    best = run;
                }
            } else {
                break;
            }
        }
        if best == n {
            break;
        }
    }
    best
}

/// Number of isomorphism classes of simple graphs on `n` vertices, by
/// enumerating all `2^C(n,2)` labeled graphs and expanding permutation orbits
/// (n <= 7).
pub fn count_isomorphism_classes_brute(n: usize) -> u64 {
    assert!(n <= 7, "labeled enumeration is capped at 7 vertices");
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let s = slots.len();
    let mut slot_index = vec![vec![0usize; n.max(1)]; n.max(1)];
    for (i, &(u, v)) in slots.iter().enumerate() {
        slot_index[u][v] = i;
        slot_index[v][u] = i;
    }
    // per-permutation slot relabeling tables
    let perm_tables: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .map(|perm| {
            slots
                .iter()
                .map(|&(u, v)| slot_index[perm[u]][perm[v]])
                .collect()
        })
        .collect();
    let total: usize = 1 << s;
    let mut visited = vec![0u64; total.div_ceil(64)];
    let mut classes = 0u64;
    for code in 0..total as u64 {
        if visited[(code / 64) as usize] >> (code % 64) & 1 == 1 {
            continue;
        }
        classes += 1;
        for table in &perm_tables {
            let mut mapped = 0u64;
            let mut bits = code;
            while bits != 0 {
                let slot = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                mapped |= 1 << table[slot];
            }
            visited[(mapped / 64) as usize] |= 1 << (mapped % 64);
        }
    }
    classes
}

/// Decodes a labeled-graph bitmask over the `(u,v), u<v` slots used by
/// [`count_isomorphism_classes_brute`], lexicographic by `(u, v)`.
pub fn labeled_graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if code >> i & 1 == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn petersen_basics() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn subset_oracle_on_known_graphs() {
        let c5 = crate::constructions::cycle_graph(5).unwrap();
        assert!(subset_cycle_oracle(&c5, 5));
        assert!(!subset_cycle_oracle(&c5, 4));
        assert!(!subset_cycle_oracle(&c5, 3));
    }

    #[test]
    fn cycle_length_enumeration_on_k4() {
        let k4 = crate::constructions::turan_graph(4, 4).unwrap();
        assert_eq!(all_cycle_lengths(&k4), [3usize, 4].into_iter().collect());
    }

    #[test]
    fn brute_orbits_of_a_star() {
        // star K_{1,3}: center 0 alone, leaves together
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(automorphism_orbits_brute(&g), vec![0, 1, 1, 1]);
    }

    #[test]
    fn brute_class_counts_for_tiny_orders() {
        assert_eq!(count_isomorphism_classes_brute(0), 1);
        assert_eq!(count_isomorphism_classes_brute(1), 1);
        assert_eq!(count_isomorphism_classes_brute(2), 2);
        assert_eq!(count_isomorphism_classes_brute(3), 4);
        assert_eq!(count_isomorphism_classes_brute(4), 11);
    }

    #[test]
    fn longest_path_brute_on_cycle() {
        let c5 = crate::constructions::cycle_graph(5).unwrap();
        assert_eq!(longest_path_brute(&c5), 5);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(longest_path_brute(&star), 3);
    }
}
