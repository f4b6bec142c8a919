//! Majority distinguishing arc colorings of symmetric digraphs with about
//! ⌈⁴√Δ⌉ + 4 colors.

use majicolor::construct::color_symmetric_digraph;
use majicolor::graph::{generate, symmetric_closure, FamilyKind, FamilySpec};
use majicolor::verify::verify_arc_majority_distinguishing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (kind, params) in [(FamilyKind::Complete, vec![5]), (FamilyKind::Petersen, vec![]), (FamilyKind::Cycle, vec![6])] {
        let d = symmetric_closure(&generate(&FamilySpec::new(kind, params.clone()))?);
        let c = color_symmetric_digraph(&d, 0)?;
        println!("{kind}{params:?}: {}", verify_arc_majority_distinguishing(&d, &c)?);
    }
    Ok(())
}
