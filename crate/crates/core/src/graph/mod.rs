//! Simple graphs and arc-pair digraphs with dense vertex indices.
//!
//! Edges are stored canonically as `(min, max)` and sorted, so an edge id is
//! its position in [`Graph::edges`]. Every coloring in this crate is indexed
//! by these ids.

mod blocks;
mod family;
mod io;
mod search;
mod spheres;

pub use blocks::{block_decomposition, BlockTree};
pub use family::{generate, CircuitOrder, FamilyKind, FamilySpec};
pub use io::{parse_graph, parse_graphs, serialize_graph, Format, ParseError};
pub use search::{
    find_asymmetric_spanning_subgraph, find_cycle, find_hamiltonian_path, SearchError,
    EXACT_CYCLE_LIMIT, EXACT_PATH_LIMIT,
};
pub use spheres::{geodesic_cover_check, spheres, SphereDecomposition};

use std::collections::VecDeque;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;
pub type ArcId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRangeVertex { vertex: Vertex, n: usize },
    #[error("edge {0}-{1} is not an edge of the host graph")]
    NotASubgraph(Vertex, Vertex),
    #[error("vertex counts differ ({0} vs {1})")]
    VertexCountMismatch(usize, usize),
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRangeVertex { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Builds a graph, silently dropping loops and repeated edges.
    pub fn new_dedup<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRangeVertex { vertex: u.max(v), n });
            }
            if u != v {
                list.push((u.min(v), u.max(v)));
            }
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// `(neighbor, edge id)` pairs sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn other_end(&self, id: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[id];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Connected components (vertex lists, each sorted), ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances(&self, s: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Two-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap_or(false);
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// Spanning subgraph keeping only the listed edges.
    pub fn spanning_subgraph(&self, ids: impl IntoIterator<Item = EdgeId>) -> Graph {
        let mut list: Vec<_> = ids.into_iter().map(|id| self.edges[id]).collect();
        list.sort_unstable();
        list.dedup();
        Graph::from_sorted(self.n, list)
    }

    /// Subgraph induced by `vertices`, relabelled to `0..k` in the given order.
    /// Returns the graph and the map from new to old labels.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut list = Vec::new();
        for &(u, v) in &self.edges {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                list.push((local[u], local[v]));
            }
        }
        let g = Graph::new_dedup(vertices.len(), list).expect("induced edges are in range");
        (g, vertices.to_vec())
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        Graph::new_dedup(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("relabelling keeps vertices in range")
    }
}

/// `g − h`: same vertex set, edge set `E(g) \ E(h)`.
pub fn graph_minus(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    if g.n() != h.n() {
        return Err(GraphError::VertexCountMismatch(g.n(), h.n()));
    }
    let mut drop = vec![false; g.m()];
    for &(u, v) in h.edges() {
        let id = g.edge_id(u, v).ok_or(GraphError::NotASubgraph(u, v))?;
        drop[id] = true;
    }
    Ok(g.spanning_subgraph((0..g.m()).filter(|&id| !drop[id])))
}

/// A digraph on vertices `0..n` without loops or repeated arcs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    out_adj: Vec<Vec<(Vertex, ArcId)>>,
    in_adj: Vec<Vec<(Vertex, ArcId)>>,
}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRangeVertex { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (id, &(u, v)) in list.iter().enumerate() {
            out_adj[u].push((v, id));
            in_adj[v].push((u, id));
        }
        for l in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            l.sort_unstable();
        }
        Ok(Self {
            n,
            arcs: list,
            out_adj,
            in_adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn arc(&self, id: ArcId) -> (Vertex, Vertex) {
        self.arcs[id]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_adj[v].len()
    }

    pub fn out_arcs(&self, v: Vertex) -> &[(Vertex, ArcId)] {
        &self.out_adj[v]
    }

    pub fn in_arcs(&self, v: Vertex) -> &[(Vertex, ArcId)] {
        &self.in_adj[v]
    }

    pub fn arc_id(&self, u: Vertex, v: Vertex) -> Option<ArcId> {
        let list = self.out_adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| self.arc_id(v, u).is_some())
    }

    /// The underlying simple graph when the digraph is symmetric.
    pub fn underlying(&self) -> Option<Graph> {
        if !self.is_symmetric() {
            return None;
        }
        Graph::new(
            self.n,
            self.arcs.iter().filter(|&&(u, v)| u < v).copied(),
        )
        .ok()
    }
}

/// `↔g`: every edge replaced by a pair of opposite arcs.
pub fn symmetric_closure(g: &Graph) -> Digraph {
    Digraph::new(
        g.n(),
        g.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]),
    )
    .expect("closure of a simple graph is a simple digraph")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::OutOfRangeVertex { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn edge_lookup_is_symmetric() {
        let g = cycle(5);
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_id(u, v), Some(id));
            assert_eq!(g.edge_id(v, u), Some(id));
        }
        assert_eq!(g.edge_id(0, 2), None);
    }

    #[test]
    fn minus_of_matching_in_k4_is_c4() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let matching = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        let rest = graph_minus(&k4, &matching).unwrap();
        assert_eq!(rest.m(), 4);
        assert_eq!(rest.degree_sequence(), vec![2, 2, 2, 2]);
        assert!(rest.is_connected());
    }

    #[test]
    fn minus_self_is_edgeless() {
        let g = cycle(6);
        assert_eq!(graph_minus(&g, &g).unwrap().m(), 0);
    }

    #[test]
    fn minus_rejects_non_subgraph() {
        let g = cycle(5);
        let h = Graph::new(5, [(0, 2)]).unwrap();
        assert_eq!(graph_minus(&g, &h), Err(GraphError::NotASubgraph(0, 2)));
    }

    #[test]
    fn k5_minus_spanning_c5_is_c5() {
        let k5 = Graph::new(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap();
        let rest = graph_minus(&k5, &cycle(5)).unwrap();
        assert_eq!(rest.m(), 5);
        assert_eq!(rest.degree_sequence(), vec![2; 5]);
        assert!(rest.is_connected());
    }

    #[test]
    fn closure_counts() {
        let k3 = cycle(3);
        assert_eq!(symmetric_closure(&k3).arc_count(), 6);
        let e = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(symmetric_closure(&e).arc_count(), 2);
        let c4 = symmetric_closure(&cycle(4));
        assert_eq!(c4.arc_count(), 8);
        assert!(c4.is_symmetric());
        for v in 0..4 {
            assert_eq!(c4.out_degree(v), 2);
            assert_eq!(c4.in_degree(v), 2);
        }
        assert_eq!(c4.underlying().unwrap(), cycle(4));
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(cycle(6).bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
    }
}
