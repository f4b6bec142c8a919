//! Majority distinguishing colorings of complete graphs.

use majicolor::construct::color_complete;
use majicolor::verify::verify_majority_distinguishing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 3..=12 {
        let (g, c) = color_complete(n)?;
        println!("K{n}: {}", verify_majority_distinguishing(&g, &c)?);
    }
    Ok(())
}
