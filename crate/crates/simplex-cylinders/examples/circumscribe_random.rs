//! All locally extreme circumscribing cylinders of a random tetrahedron.
//!
//! ```sh
//! cargo run --example circumscribe_random
//! ```

use nalgebra::DVector;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplex_cylinders::formulation::CircumFormulation;
use simplex_cylinders::geometry::SimplexN;
use simplex_cylinders::solver::{global_min, solve_all, SolverConfig};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let simplex = loop {
        let vertices: Vec<DVector<f64>> = (0..4)
            .map(|_| DVector::from_fn(3, |_, _| rng.random_range(-1.0..1.0)))
            .collect();
        if let Ok(s) = SimplexN::new(3, vertices) {
            break s;
        }
    };
    println!("vertices:");
    for (i, p) in simplex.vertices().iter().enumerate() {
        println!("  p{i} = ({:.6}, {:.6}, {:.6})", p[0], p[1], p[2]);
    }

    let form = CircumFormulation::build(&simplex).expect("nondegenerate");
    let cfg = SolverConfig::for_dim(3).with_restarts(2000);
    let points = solve_all(&form, &cfg).expect("critical points");
    println!("\n{} critical directions (up to sign):", points.len());
    println!("{:>12} {:>12} {:>14} {:>8}", "radius", "kind", "residual", "basins");
    for p in &points {
        println!(
            "{:>12.8} {:>12} {:>14.2e} {:>8}",
            p.r,
            format!("{:?}", p.kind),
            p.residual,
            p.basin_count
        );
    }
    let best = global_min(&points).expect("nonempty");
    println!("\nsmallest circumscribing cylinder: r = {:.10}", best.radius);
    println!(
        "axis direction = ({:.6}, {:.6}, {:.6})",
        best.axis.direction()[0],
        best.axis.direction()[1],
        best.axis.direction()[2]
    );
}
