//! Biconnected components and the block–cut-vertex tree.

use super::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTree {
    /// Edge ids of each block, sorted. Bridges are single-edge blocks.
    pub blocks: Vec<Vec<EdgeId>>,
    /// Vertices of each block, sorted.
    pub block_vertices: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
    /// `(block index, cut vertex)` incidences.
    pub incidence: Vec<(usize, Vertex)>,
}

impl BlockTree {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Blocks containing `v`.
    pub fn blocks_at(&self, v: Vertex) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.block_vertices[b].binary_search(&v).is_ok())
            .collect()
    }

    /// Block index of every edge.
    pub fn edge_block(&self, m: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; m];
        for (b, ids) in self.blocks.iter().enumerate() {
            for &id in ids {
                out[id] = b;
            }
        }
        out
    }
}

/// Iterative Hopcroft–Tarjan decomposition. Isolated vertices belong to no block.
pub fn block_decomposition(g: &Graph) -> BlockTree {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks: Vec<Vec<EdgeId>> = Vec::new();
    let mut is_cut = vec![false; n];

    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent edge, next incident index)
        let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (u, parent_edge, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(u) {
                let (w, id) = g.incident(u)[*idx];
                *idx += 1;
                if Some(id) == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(id);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, Some(id), 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push(id);
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(&(p, _, _)), Some(pe)) = (stack.last(), parent_edge) {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    blocks.sort();
    let block_vertices: Vec<Vec<Vertex>> = blocks
        .iter()
        .map(|ids| {
            let mut vs: Vec<Vertex> = ids
                .iter()
                .flat_map(|&id| {
                    let (a, b) = g.edge(id);
                    [a, b]
                })
                .collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    let cut_vertices: Vec<Vertex> = (0..n).filter(|&v| is_cut[v]).collect();
    let mut incidence = Vec::new();
    for (b, vs) in block_vertices.iter().enumerate() {
        for &v in vs {
            if is_cut[v] {
                incidence.push((b, v));
            }
        }
    }
    BlockTree {
        blocks,
        block_vertices,
        cut_vertices,
        incidence,
    }
}
