//! Four colors on an asymmetric spanning subgraph plus a balanced coloring of
//! the remaining edges on a disjoint palette.

use majicolor::construct::color_via_asymmetric_subgraph;
use majicolor::graph::{generate, FamilyKind, FamilySpec, Graph};
use majicolor::verify::verify_majority_distinguishing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k7 = generate(&FamilySpec::new(FamilyKind::Complete, [7]))?;
    let c = color_via_asymmetric_subgraph(&k7, 1)?;
    println!("K7: {}", verify_majority_distinguishing(&k7, &c)?);

    // Circulant C_10(1, 2), 4-regular.
    let g = Graph::new(10, (0..10).flat_map(|i| [(i, (i + 1) % 10), (i, (i + 2) % 10)]))?;
    let c = color_via_asymmetric_subgraph(&g, 1)?;
    println!("C10(1,2): {}", verify_majority_distinguishing(&g, &c)?);
    Ok(())
}
