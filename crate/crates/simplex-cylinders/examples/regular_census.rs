//! Exact critical-direction census of the regular 4-simplex: 150 solutions
//! over the complex numbers and the smallest circumscribing radius
//! 7 sqrt(5) / 20.
//!
//! ```sh
//! cargo run --example regular_census
//! ```

use simplex_cylinders::regular::{enumerate_all_critical, regular_min_radius, stirling_census_check};

fn main() {
    let n = 4;
    let report = enumerate_all_critical(n).expect("census");
    println!(
        "regular {n}-simplex census: {} solutions ({} real, {} complex)",
        report.total, report.real_total, report.complex_total
    );
    for e in &report.entries {
        let kind = if e.real { "real" } else { "complex" };
        println!(
            "  block sizes {:?}: {} solutions, {kind}, sigma4 = {:+.6}{:+.6}i",
            e.partition, e.count, e.sigma4.0, e.sigma4.1
        );
    }
    let check = stirling_census_check(n).expect("bound");
    println!(
        "mixed-volume bound 6*S({},3) = {}; census saturates it: {}",
        n + 1,
        check.bound,
        check.equal
    );
    let (r, v) = regular_min_radius(n).expect("minimum");
    println!("\nsmallest circumscribing radius (edge sqrt 2): {r:.12}");
    println!("achieved by component values {:?}", v.iter().collect::<Vec<_>>());
}
