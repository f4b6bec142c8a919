//! Three colors for traceable graphs of minimum degree four: green on a
//! spanning path, a balanced red/blue split on the rest.

use majicolor::construct::color_traceable_mindeg4;
use majicolor::exact::DEFAULT_BUDGET;
use majicolor::graph::{find_hamiltonian_path, generate, FamilyKind, FamilySpec};
use majicolor::verify::verify_majority_distinguishing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (kind, params) in [(FamilyKind::CompleteBipartite, vec![5, 5]), (FamilyKind::Complete, vec![6])] {
        let g = generate(&FamilySpec::new(kind, params.clone()))?;
        let path = find_hamiltonian_path(&g, DEFAULT_BUDGET)?.ok_or("not traceable")?;
        let c = color_traceable_mindeg4(&g, &path, 0)?;
        println!("{kind}{params:?} path {path:?}: {}", verify_majority_distinguishing(&g, &c)?);
    }
    Ok(())
}
