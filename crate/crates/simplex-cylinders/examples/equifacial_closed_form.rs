//! Equifacial tetrahedra (all four facet areas equal) are box-inscribed,
//! and their minimal circumscribing cylinder comes from three opposite-edge
//! candidates with no polynomial solving. This compares the closed form
//! with the general multi-start solver.
//!
//! ```sh
//! cargo run --example equifacial_closed_form
//! ```

use simplex_cylinders::formulation::CircumFormulation;
use simplex_cylinders::geometry::box_simplex;
use simplex_cylinders::solver::{global_min, solve_all, SolverConfig};
use simplex_cylinders::special_e3::{box_params, classify, equifacial_min_cylinder, rho_profile};

fn main() {
    let w = [1.0, 2.0, 3.0];
    let simplex = box_simplex(w).expect("box simplex");
    let class = classify(&simplex).expect("classification");
    println!("facet-area class: {:?} (extrema bound {})", class.tag, class.extrema_bound);

    let params = box_params(&simplex).expect("box parameters");
    println!("box half-lengths: {:?}", params.w);
    println!(
        "squared-radius profile endpoints: rho(0) = {}, rho(1) = {}",
        rho_profile(&params, 0.0),
        rho_profile(&params, 1.0)
    );

    let closed = equifacial_min_cylinder(&simplex).expect("closed form");
    println!("closed-form radius:   {:.12}", closed.radius);

    let form = CircumFormulation::build(&simplex).expect("formulation");
    let points = solve_all(&form, &SolverConfig::for_dim(3).with_restarts(1500)).expect("solve");
    let general = global_min(&points).expect("global minimum");
    println!("general solver:       {:.12}", general.radius);
    println!("difference:           {:.3e}", (closed.radius - general.radius).abs());
}
