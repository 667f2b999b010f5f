//! The independent verification path: for a fixed direction the enclosing
//! radius is the smallest enclosing circle of the projected vertices, and
//! minimizing over sampled directions bounds the smallest enclosing
//! cylinder from above.
//!
//! ```sh
//! cargo run --example projection_oracle
//! ```

use nalgebra::DVector;
use simplex_cylinders::enclosing::{oracle_min_enclosing, projection_radius, OracleConfig};
use simplex_cylinders::geometry::box_simplex;

fn main() {
    let simplex = box_simplex([0.5, 0.5, 0.5]).expect("regular tetrahedron, edge sqrt 2");

    // A few named directions first.
    for (label, v) in [
        ("box x-axis (optimal)", [1.0, 0.0, 0.0]),
        ("edge direction", [0.0, 1.0, 1.0]),
        ("skew direction", [1.0, 1.0, 0.3]),
    ] {
        let dir = DVector::from_column_slice(&v);
        let r = projection_radius(simplex.vertices(), &dir);
        println!("{label:<22} r = {r:.10}");
    }

    let cfg = OracleConfig { samples: 200_000, refine_iters: 200, rng_seed: 42 };
    let (r, v) = oracle_min_enclosing(simplex.vertices(), &cfg);
    println!("\noracle minimum over {} sampled directions: r = {r:.10}", cfg.samples);
    println!("direction = ({:.8}, {:.8}, {:.8})", v[0], v[1], v[2]);
    println!("exact value 1/sqrt(2) = {:.10}", 1.0 / 2f64.sqrt());
}
