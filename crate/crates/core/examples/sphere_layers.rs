//! Layer-by-layer coloring between two fixed vertices, with the per-layer
//! invariants it maintains.

use majicolor::automorphism::color_preserving_stabilizer;
use majicolor::construct::lemma_h_coloring;
use majicolor::graph::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // K_{2,4} between a = 0 and b = 1: the middle vertices must end up with
    // pairwise distinct color multisets.
    let g = Graph::new(6, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)])?;
    let out = lemma_h_coloring(&g, 0, 1, 4, 5, 0)?;
    for t in &out.trace {
        println!("{t:?}");
    }
    for v in 2..6 {
        println!("vertex {v}: {:?}", out.coloring.colors_at(&g, v));
    }
    let fixed = color_preserving_stabilizer(&g, &out.coloring, &[0, 1])?;
    println!("preserving automorphisms fixing a and b: {}", fixed.order_string());
    Ok(())
}
