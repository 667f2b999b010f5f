//! Solution-count bounds for the critical-direction system by dimension:
//! the Bezout number of the Lagrange system and the sharper mixed-volume
//! bound `6 S(n+1, 3)` in Stirling numbers of the second kind.
//!
//! ```sh
//! cargo run --example bounds_table
//! ```

use simplex_cylinders::formulation::{bezout_bounds, stirling2};

fn main() {
    println!("{:>3} {:>14} {:>14} {:>12}", "n", "2*3^(n+1)", "6*S(n+1,3)", "S(n+1,3)");
    for n in 2..=7 {
        let b = bezout_bounds(n);
        println!("{n:>3} {:>14} {:>14} {:>12}", b.general, b.stirling, stirling2(n + 1, 3));
    }
    let b3 = bezout_bounds(3);
    println!(
        "\nfor n = 3 the reduced system (degrees 3, 6, 2) gives the bound {}",
        b3.e3_system.unwrap()
    );
}
