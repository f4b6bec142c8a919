//! `K_{2,n}` with distinct ordered color pairs on the large side.

use majicolor::construct::{color_k2n, k2n_colors};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [3, 5, 6, 11, 12, 20] {
        let (g, c) = color_k2n(n)?;
        let pairs: Vec<String> = (2..g.n())
            .map(|y| format!("{}{}", c.color(g.edge_id(0, y).unwrap()), c.color(g.edge_id(1, y).unwrap())))
            .collect();
        println!("K2,{n}: {} colors (formula {}), pairs {}", c.colors_used(), k2n_colors(n), pairs.join(" "));
    }
    Ok(())
}
