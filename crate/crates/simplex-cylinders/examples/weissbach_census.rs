//! Corrected solution census of the quartic-minimization system
//! `min sum u_i^4` on the sphere slice `sum u_i = 0, sum u_i^2 = 1`:
//! the symmetric family (second multiplier zero) plus the families a
//! published symmetry argument missed.
//!
//! ```sh
//! cargo run --example weissbach_census
//! ```

use simplex_cylinders::weissbach::{enumerate_solutions, lambda2_zero_census, verify_published_tuples};

fn main() {
    for n in [3usize, 4] {
        let census = enumerate_solutions(n).expect("census");
        println!(
            "n = {n}: {} solutions = {} with l2 = 0  +  {} with l2 != 0 (closed form {})",
            census.total,
            census.lambda2_zero_count,
            census.lambda2_nonzero_count,
            lambda2_zero_census(n)
        );
        for sol in &census.solutions {
            println!(
                "  blocks {:?} x{}: values {:?}, l1 = {:+.6}, l2 = {:+.6}",
                sol.partition,
                sol.count,
                sol.values.iter().map(|v| format!("{:+.4}", v.0)).collect::<Vec<_>>(),
                sol.lambda1.0,
                sol.lambda2.0
            );
        }
        let tuples = verify_published_tuples(n).expect("tuples");
        println!("  published tuples verify with max residual {:.2e}\n", tuples.max_residual);
    }
}
