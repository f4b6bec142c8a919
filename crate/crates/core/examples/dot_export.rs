//! Writes a colored Petersen graph as DOT on stdout.

use majicolor::cli::dot_graph;
use majicolor::construct::color_auto;
use majicolor::graph::{generate, FamilyKind, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = generate(&FamilySpec::new(FamilyKind::Petersen, []))?;
    let c = color_auto(&g, 0)?;
    let colors: Vec<_> = (0..g.m()).map(|e| c.color(e)).collect();
    print!("{}", dot_graph(&g, Some(&colors)));
    Ok(())
}
