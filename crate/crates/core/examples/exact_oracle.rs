//! Exact indices of small graphs by exhaustive search.

use majicolor::exact::{exact_index, DEFAULT_BUDGET};
use majicolor::graph::{generate, FamilyKind, FamilySpec};
use majicolor::verify::IndexKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let kinds = [
        IndexKind::Majority,
        IndexKind::Distinguishing,
        IndexKind::MajorityDistinguishing,
        IndexKind::ProperDistinguishing,
    ];
    for (kind, params) in [(FamilyKind::Complete, vec![4]), (FamilyKind::Cycle, vec![5]), (FamilyKind::CompleteBipartite, vec![3, 3])] {
        let g = generate(&FamilySpec::new(kind, params.clone()))?;
        let row: Vec<String> = kinds
            .iter()
            .map(|&k| match exact_index(&g, k, 8, DEFAULT_BUDGET) {
                Ok(r) => format!("{}={}", k.symbol(), r.k),
                Err(e) => format!("{}: {e}", k.symbol()),
            })
            .collect();
        println!("{kind}{params:?}: {}", row.join(", "));
    }
    Ok(())
}
