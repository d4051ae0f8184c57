//! Verlinde dimensions of the genus-g block spaces for the modular builtins.
//!
//!     cargo run --release --example verlinde_table

use quantum3::builtins;
use quantum3::surgery::verlinde_dim;

fn main() {
    println!("{:<12} {:>8} {:>8} {:>8} {:>8} {:>8} {:>10}", "category", "g=0", "g=1", "g=2", "g=3", "g=4", "g=5");
    for (name, cat) in [("fibonacci", builtins::fibonacci()), ("ising", builtins::ising())] {
        let row: Vec<String> = (0..=5u32)
            .map(|g| format!("{:.3}", verlinde_dim(&cat, g).re))
            .collect();
        println!(
            "{name:<12} {:>8} {:>8} {:>8} {:>8} {:>8} {:>10}",
            row[0], row[1], row[2], row[3], row[4], row[5]
        );
    }
}
