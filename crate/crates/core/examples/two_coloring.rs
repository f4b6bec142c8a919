//! Balanced 2-colorings: every vertex splits its edges as evenly as parity
//! allows, with one special vertex when all degrees are even and |E| is odd.

use majicolor::construct::{two_coloring_balanced, TwoColoringSpec};
use majicolor::graph::{generate, FamilyKind, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (kind, params) in [(FamilyKind::Cycle, vec![4]), (FamilyKind::Cycle, vec![7]), (FamilyKind::Complete, vec![5])] {
        let g = generate(&FamilySpec::new(kind, params.clone()))?;
        let spec = TwoColoringSpec { special_vertex: Some(2), forbidden_special: vec![] };
        let out = two_coloring_balanced(&g, &spec)?;
        println!("{kind}{params:?}: special vertex {:?}", out.special_vertex);
        for v in 0..g.n() {
            println!("  vertex {v}: colors {:?}", out.coloring.colors_at(&g, v));
        }
    }
    Ok(())
}
