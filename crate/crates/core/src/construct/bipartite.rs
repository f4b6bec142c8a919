//! Majority 3-colorings of bipartite graphs and of symmetric digraphs.

use super::two_coloring::parts_2_3;
use super::util::{konig, split_vertices};
use super::{certify_majority, ConstructError, Result};
use crate::coloring::{ArcColoring, EdgeColoring, Palette};
use crate::graph::{Digraph, Graph};
use crate::verify::{verify_arc_majority, MajorityMode};

/// Strict majority coloring with at most three colors: split every vertex
/// into parts of two or three edges, color the split graph properly with
/// three colors and pull the colors back.
pub fn majority3_bipartite(g: &Graph) -> Result<EdgeColoring> {
    if g.bipartition().is_none() {
        return Err(ConstructError::NotBipartite);
    }
    if g.min_degree() < 2 {
        return Err(ConstructError::MinDegreeTooSmall {
            got: g.min_degree(),
            need: 2,
        });
    }
    let (n_split, edges) = split_vertices(g, parts_2_3);
    let colors = konig(n_split, &edges);
    let k = colors.iter().max().map_or(1, |&c| c as usize + 1);
    certify_majority(g, EdgeColoring::new(colors, Palette::numbered(k)), MajorityMode::Strict)
}

/// Arc majority coloring of `↔G` with at most three colors via the bipartite
/// graph with a copy `v₁` holding the out-arcs and `v₂` the in-arcs of `v`.
pub fn majority3_symmetric_digraph(d: &Digraph) -> Result<ArcColoring> {
    let g = d.underlying().ok_or(ConstructError::NotSymmetric)?;
    if g.min_degree() < 2 {
        return Err(ConstructError::MinDegreeTooSmall {
            got: g.min_degree(),
            need: 2,
        });
    }
    let n = d.n();
    let aux = Graph::new(2 * n, d.arcs().iter().map(|&(u, v)| (u, n + v)))?;
    let c = majority3_bipartite(&aux)?;
    let colors = d
        .arcs()
        .iter()
        .map(|&(u, v)| c.colors[aux.edge_id(u, n + v).expect("arc edge")])
        .collect();
    let arc = ArcColoring::new(colors, c.palette);
    let r = verify_arc_majority(d, &arc)?;
    if !r.passed() {
        return Err(ConstructError::VerifierRejected(r.to_string()));
    }
    Ok(arc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::symmetric_closure;

    fn kmn(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn complete_bipartite() {
        for (a, b) in [(3, 3), (4, 4), (2, 7), (5, 6)] {
            let c = majority3_bipartite(&kmn(a, b)).unwrap();
            assert!(c.colors_used() <= 3);
        }
        assert!(matches!(
            majority3_bipartite(&Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()),
            Err(ConstructError::NotBipartite)
        ));
    }

    #[test]
    fn digraphs() {
        let c4 = Graph::new(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
        let c = majority3_symmetric_digraph(&symmetric_closure(&c4)).unwrap();
        assert!(c.colors_used() <= 3);
        let k4 = Graph::new(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)))).unwrap();
        assert!(majority3_symmetric_digraph(&symmetric_closure(&k4)).is_ok());
        let p2 = Graph::new(2, [(0, 1)]).unwrap();
        assert!(matches!(
            majority3_symmetric_digraph(&symmetric_closure(&p2)),
            Err(ConstructError::MinDegreeTooSmall { .. })
        ));
    }
}
