//! Glued-cycle families colored by alternating along an Euler circuit that
//! starts on the shortest cycle.

use majicolor::construct::eulerian_2coloring;
use majicolor::graph::{generate, CircuitOrder, FamilyKind, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (FamilyKind::GluedCycleEdge, vec![3, 5, 7]),
        (FamilyKind::GluedCycleVertex, vec![4, 6, 8]),
        (FamilyKind::GluedCycleVertex, vec![4, 6]),
    ];
    for (kind, params) in cases {
        let g = generate(&FamilySpec::new(kind, params.clone()))?;
        let e = eulerian_2coloring(&g, &CircuitOrder::Hierholzer)?;
        println!("{kind}{params:?}: n={} m={}, {}", g.n(), g.m(), e.report);
    }
    Ok(())
}
