//! Connectivity helpers: connected components, cut vertices, and biconnected
//! blocks. Every simple cycle of a graph lies inside a single block, which is
//! what lets the cycle searches restrict their work.

use crate::graph::Graph;

/// Biconnected blocks (as sorted vertex sets) plus cut-vertex flags.
/// Isolated vertices belong to no block; a bridge forms a 2-vertex block.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub is_cut: Vec<bool>,
}

/// Hopcroft–Tarjan lowpoint computation, iterative so deep graphs at the
/// 512-vertex cap cannot overflow the stack.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut timer = 1usize;
    let mut is_cut = vec![false; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // frame: (vertex, parent, neighbor list, scan position)
    let mut stack: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != 0 {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0usize;
        stack.push((root, usize::MAX, g.neighbors(root).collect(), 0));
        while !stack.is_empty() {
            let top = stack.len() - 1;
            let (u, parent) = (stack[top].0, stack[top].1);
            if stack[top].3 < stack[top].2.len() {
                let v = stack[top].2[stack[top].3];
                stack[top].3 += 1;
                if v == parent {
                    continue;
                }
                if disc[v] == 0 {
                    edge_stack.push((u, v));
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, g.neighbors(v).collect(), 0));
                } else if disc[v] < disc[u] {
                    // back edge to a proper ancestor
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    break;
                }
                low[parent] = low[parent].min(low[u]);
                if low[u] >= disc[parent] {
                    // edges above (parent, u) on the stack form one block
                    let mut verts = std::collections::BTreeSet::new();
                    loop {
                        let (a, b) = edge_stack.pop().expect("tree edge on stack");
                        verts.insert(a);
                        verts.insert(b);
                        if (a, b) == (parent, u) {
                            break;
                        }
                    }
                    blocks.push(verts.into_iter().collect());
                    if parent != root {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    BlockDecomposition { blocks, is_cut }
}

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
