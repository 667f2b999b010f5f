//! Smallest enclosing cylinder of a flattened tetrahedron, cross-checked
//! against the direction-sampling oracle.
//!
//! ```sh
//! cargo run --example enclosing_oracle
//! ```

use simplex_cylinders::enclosing::{smallest_enclosing_cylinder, EncloseConfig, OracleConfig};
use simplex_cylinders::geometry::SimplexN;
use simplex_cylinders::solver::SolverConfig;

fn main() {
    let simplex = SimplexN::from_rows(
        3,
        &[
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.3, 0.3, 0.0003],
        ],
    )
    .expect("nondegenerate");

    let cfg = EncloseConfig {
        solver: SolverConfig::for_dim(3).with_restarts(800),
        oracle: OracleConfig { samples: 100_000, refine_iters: 200, rng_seed: 42 },
        ..Default::default()
    };
    let result = smallest_enclosing_cylinder(&simplex, &cfg).expect("enclosing cylinder");
    println!("witness family:    {:?}", result.witness);
    println!("radius:            {:.10}", result.cylinder.radius);
    println!("oracle radius:     {:.10}", result.oracle_radius);
    println!("gap:               {:.3e}", result.oracle_gap);
    println!("surface contacts:  {:?}", result.support);
    let axis = &result.cylinder.axis;
    println!(
        "axis: point ({:.6}, {:.6}, {:.6}), direction ({:.6}, {:.6}, {:.6})",
        axis.moment()[0],
        axis.moment()[1],
        axis.moment()[2],
        axis.direction()[0],
        axis.direction()[1],
        axis.direction()[2]
    );
    for (k, p) in simplex.vertices().iter().enumerate() {
        println!("dist(p{k}, axis) = {:.10}", axis.distance(p));
    }
}
