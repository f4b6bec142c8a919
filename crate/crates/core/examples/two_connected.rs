//! The general pipeline: at most ⌈√Δ⌉ + 5 colors for any connected graph
//! without pendant edges.

use majicolor::construct::color_auto;
use majicolor::graph::{generate, FamilyKind, FamilySpec};
use majicolor::verify::verify_majority_distinguishing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (FamilyKind::Petersen, vec![]),
        (FamilyKind::Complete, vec![9]),
        (FamilyKind::CompleteBipartite, vec![2, 6]),
        (FamilyKind::CompleteBipartite, vec![4, 7]),
        (FamilyKind::ChordPathCycle, vec![2, 3, 4, 5]),
    ];
    for (kind, params) in cases {
        let g = generate(&FamilySpec::new(kind, params.clone()))?;
        let c = color_auto(&g, 0)?;
        let bound = (1..).find(|s| s * s >= g.max_degree()).unwrap() + 5;
        println!("{kind}{params:?} Δ={} bound {bound}: {}", g.max_degree(), verify_majority_distinguishing(&g, &c)?);
    }
    Ok(())
}
