//! Tests small graphs against the five-color conjecture: find a connected
//! asymmetric spanning subgraph, then the exact index.

use majicolor::exact::{probe_conjecture, DEFAULT_BUDGET};
use majicolor::graph::{generate, FamilyKind, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (kind, params) in [(FamilyKind::Complete, vec![5]), (FamilyKind::Complete, vec![6]), (FamilyKind::CompleteBipartite, vec![3, 4]), (FamilyKind::Petersen, vec![])] {
        let g = generate(&FamilySpec::new(kind, params.clone()))?;
        let r = probe_conjecture(&g, DEFAULT_BUDGET, 0)?;
        println!("{kind}{params:?}: {:?}, k = {:?}, asymmetric subgraph {}", r.status, r.k, r.asymmetric_subgraph.is_some());
    }
    Ok(())
}
