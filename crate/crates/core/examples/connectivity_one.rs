//! Graphs with cut vertices: blocks sharing a vertex get pairwise
//! non-isomorphic colorings, and symmetric trees of blocks get distinct
//! branch colorings.

use majicolor::construct::{color_connectivity1, color_symmetric_tree_attachment, enumerate_block_colorings};
use majicolor::graph::Graph;
use majicolor::verify::verify_majority_distinguishing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Two K5 sharing vertex 0.
    let mut edges = Vec::new();
    for side in [0, 4] {
        let vs: Vec<usize> = std::iter::once(0).chain(side + 1..side + 5).collect();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((vs[i], vs[j]));
            }
        }
    }
    let g = Graph::new(9, edges)?;
    let c = color_connectivity1(&g, 0)?;
    println!("two K5: {}", verify_majority_distinguishing(&g, &c)?);

    let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5)))?;
    let variants = enumerate_block_colorings(&c5, 0, 2, 4, 0)?;
    println!("C5 block variants rooted at 0: {}", variants.len());

    let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)])?;
    let triangle = Graph::new(3, [(0, 1), (1, 2), (2, 0)])?;
    let t = color_symmetric_tree_attachment(&star, &triangle, 0, 0)?;
    println!("K1,3 with triangles: {}", verify_majority_distinguishing(&t.graph, &t.coloring)?);
    Ok(())
}
