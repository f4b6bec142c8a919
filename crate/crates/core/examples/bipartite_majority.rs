//! Majority 3-colorings of bipartite graphs, and of symmetric digraphs
//! through their out/in split.

use majicolor::construct::{majority3_bipartite, majority3_symmetric_digraph};
use majicolor::graph::{generate, symmetric_closure, FamilyKind, FamilySpec};
use majicolor::verify::{verify_arc_majority, verify_majority, MajorityMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for params in [vec![3, 3], vec![4, 4], vec![2, 7]] {
        let g = generate(&FamilySpec::new(FamilyKind::CompleteBipartite, params.clone()))?;
        let c = majority3_bipartite(&g)?;
        println!("K{params:?}: {}", verify_majority(&g, &c, MajorityMode::Strict)?);
    }
    let d = symmetric_closure(&generate(&FamilySpec::new(FamilyKind::Complete, [4]))?);
    let c = majority3_symmetric_digraph(&d)?;
    println!("symmetric K4: {}", verify_arc_majority(&d, &c)?);
    Ok(())
}
