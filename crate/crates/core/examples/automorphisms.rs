//! Automorphism groups and the subgroup preserving a coloring.

use majicolor::automorphism::{automorphism_group, color_preserving_group};
use majicolor::coloring::EdgeColoring;
use majicolor::graph::{generate, FamilyKind, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = generate(&FamilySpec::new(FamilyKind::Petersen, []))?;
    let aut = automorphism_group(&g);
    println!("Petersen: order {}, orbits {:?}", aut.order_string(), aut.orbits());

    let c6 = generate(&FamilySpec::new(FamilyKind::Cycle, [6]))?;
    let mut colors = vec![0; c6.m()];
    colors[0] = 1;
    let sub = color_preserving_group(&c6, &EdgeColoring::numbered(colors))?;
    println!("C6 with one red edge: order {}", sub.order_string());
    for p in sub.generators() {
        println!("  generator {p}");
    }
    Ok(())
}
