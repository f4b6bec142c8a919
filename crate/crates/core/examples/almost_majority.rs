//! Almost majority colorings with at most four colors, and the Eulerian
//! alternating 2-coloring.

use majicolor::construct::{almost_majority_4, eulerian_2coloring};
use majicolor::graph::{generate, CircuitOrder, FamilyKind, FamilySpec, Graph};
use majicolor::verify::{verify_majority, MajorityMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A triangle with a tail and a pendant vertex.
    let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (3, 5), (5, 1)])?;
    let c = almost_majority_4(&g)?;
    println!("almost majority: {}", verify_majority(&g, &c, MajorityMode::Almost)?);

    let c8 = generate(&FamilySpec::new(FamilyKind::Cycle, [8]))?;
    let e = eulerian_2coloring(&c8, &CircuitOrder::Hierholzer)?;
    println!("C8 alternating: {}", e.report);
    Ok(())
}
