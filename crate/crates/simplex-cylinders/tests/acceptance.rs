//! Acceptance suite: one test per shipped guarantee, each printing a
//! PASS line with the measured quantity next to its pinned tolerance.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::time::Instant;

use nalgebra::DVector;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use simplex_cylinders::enclosing::{
    oracle_min_enclosing, smallest_enclosing_cylinder, EncloseConfig, OracleConfig,
};
use simplex_cylinders::formulation::{bezout_bounds, CircumFormulation};
use simplex_cylinders::geometry::{box_simplex, canonical_direction, cross3, recover_axis, SimplexN};
use simplex_cylinders::regular::{
    enumerate_all_critical, radius_sq_from_sigma4, regular_min_radius, regular_vertices, sigma_eval,
};
use simplex_cylinders::solver::{classify as classify_point, global_min, solve_all, CriticalKind, SolverConfig};
use simplex_cylinders::special_e3::equifacial_min_cylinder;
use simplex_cylinders::weissbach::{enumerate_solutions, verify_published_tuples};

fn random_simplex(rng: &mut ChaCha8Rng, dim: usize) -> SimplexN {
    loop {
        let vertices: Vec<DVector<f64>> = (0..=dim)
            .map(|_| DVector::from_fn(dim, |_, _| rng.random_range(-1.0..1.0)))
            .collect();
        if let Ok(s) = SimplexN::new(dim, vertices) {
            if s.base_matrix().determinant().abs() > 1e-3 {
                return s;
            }
        }
    }
}

#[test]
fn criterion_1_regular_4_simplex_minimum_radius() {
    let started = Instant::now();
    let (radius, _) = regular_min_radius(4).unwrap();
    let elapsed = started.elapsed();
    let expect = 7.0 * 5f64.sqrt() / 20.0;
    let err = (radius - expect).abs();
    assert!(err < 1e-9, "radius {radius} vs 7*sqrt(5)/20 = {expect}");
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "PASS criterion 1: regular n=4 radius {radius:.12} = 7*sqrt(5)/20 within {err:.2e} (tol 1e-9), {:.0} ms < 1 s",
        elapsed.as_secs_f64() * 1e3
    );
}

#[test]
fn criterion_2_regular_4_simplex_census() {
    let started = Instant::now();
    let report = enumerate_all_critical(4).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(report.total, 150);
    let mut counts_113: Vec<(u64, bool)> = report
        .entries
        .iter()
        .filter(|e| e.partition == vec![1, 1, 3])
        .map(|e| (e.count, e.real))
        .collect();
    counts_113.sort();
    assert_eq!(counts_113, vec![(20, false), (20, false), (20, true)]);
    let counts_122: Vec<(u64, bool)> = report
        .entries
        .iter()
        .filter(|e| e.partition == vec![1, 2, 2])
        .map(|e| (e.count, e.real))
        .collect();
    assert_eq!(counts_122, vec![(30, true); 3]);
    assert_eq!(report.entries.len(), 6);
    assert_eq!(report.complex_total, 40);
    assert!(elapsed.as_secs_f64() < 2.0, "took {elapsed:?}");
    println!(
        "PASS criterion 2: census 150 = 20+20+20 (k=1,l=1; 40 complex) + 30+30+30 (k=1,l=2; real), {:.0} ms < 2 s",
        elapsed.as_secs_f64() * 1e3
    );
}

#[test]
fn criterion_3_weissbach_census_and_tuples() {
    let started = Instant::now();
    let c3 = enumerate_solutions(3).unwrap();
    let c4 = enumerate_solutions(4).unwrap();
    let t3 = verify_published_tuples(3).unwrap();
    let t4 = verify_published_tuples(4).unwrap();
    let elapsed = started.elapsed();
    assert_eq!((c3.total, c3.lambda2_zero_count, c3.lambda2_nonzero_count), (26, 18, 8));
    assert_eq!((c4.total, c4.lambda2_zero_count, c4.lambda2_nonzero_count), (80, 50, 30));
    let max_residual = t3.max_residual.max(t4.max_residual);
    assert!(max_residual < 1e-12, "tuple residual {max_residual}");
    assert!(elapsed.as_secs_f64() < 2.0, "took {elapsed:?}");
    println!(
        "PASS criterion 3: censuses 26 = 18+8 and 80 = 50+30, tuple residual {max_residual:.2e} < 1e-12, {:.0} ms < 2 s",
        elapsed.as_secs_f64() * 1e3
    );
}

#[test]
fn criterion_4_regular_tetrahedron_directions_and_radius() {
    let s = box_simplex([0.5, 0.5, 0.5]).unwrap();
    let form = CircumFormulation::build(&s).unwrap();
    let points = solve_all(&form, &SolverConfig::for_dim(3)).unwrap();
    assert_eq!(points.len(), 9, "canonical directions");
    let cross_count = points.iter().filter(|p| (p.r - 1.0 / 2f64.sqrt()).abs() < 1e-9).count();
    let edge_count = points.iter().filter(|p| (p.r - 0.75).abs() < 1e-9).count();
    assert_eq!((edge_count, cross_count), (6, 3));
    let solver_min = global_min(&points).unwrap().radius;
    let closed_form = equifacial_min_cylinder(&s).unwrap().radius;
    let solver_vs_closed = (solver_min - closed_form).abs();
    assert!(solver_vs_closed < 1e-6);
    let (oracle_r, _) = oracle_min_enclosing(s.vertices(), &OracleConfig::default());
    let solver_vs_oracle = (solver_min - oracle_r).abs();
    assert!(solver_vs_oracle < 1e-4);
    assert!((solver_min - 1.0 / 2f64.sqrt()).abs() < 1e-9);
    println!(
        "PASS criterion 4: 9 directions (6 edge + 3 cross); min radius {solver_min:.10}; \
         |solver - closed form| = {solver_vs_closed:.2e} < 1e-6; |solver - oracle| = {solver_vs_oracle:.2e} < 1e-4"
    );
}

#[test]
fn criterion_5_edge_direction_feasibility() {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    let mut worst_g1 = 0.0f64;
    let mut worst_equi = 0.0f64;
    for dim in 2..=6 {
        for _ in 0..100 {
            let s = random_simplex(&mut rng, dim);
            let scale = s.data_scale().powi(4);
            for v in s.edge_directions() {
                let rec = recover_axis(&v, &s).unwrap();
                let g1_rel = rec.g1_residual.abs() / scale;
                worst_g1 = worst_g1.max(g1_rel);
                assert!(g1_rel < 1e-10, "edge cubic residual {g1_rel:.2e} at dim {dim}");
                let axis = rec.world_axis(&s).unwrap();
                for p in s.vertices() {
                    let rel = (axis.distance(p) - rec.radius).abs() / (1.0 + rec.radius);
                    worst_equi = worst_equi.max(rel);
                    assert!(rel < 1e-9, "vertex distance deviation {rel:.2e}");
                }
            }
        }
    }
    println!(
        "PASS criterion 5: 100 simplices per n in 2..=6; worst |g1|/scale = {worst_g1:.2e} < 1e-10, \
         worst equidistance deviation = {worst_equi:.2e} < 1e-9"
    );
}

#[test]
fn criterion_6_bound_tables() {
    let b3 = bezout_bounds(3);
    assert_eq!(b3.e3_system, Some(36));
    let expect = [6u64, 36, 150, 540, 1806, 5796];
    for (n, want) in (2..=7).zip(expect) {
        let b = bezout_bounds(n);
        assert_eq!(b.stirling, want, "stirling row at n = {n}");
        assert_eq!(b.general, 2 * 3u64.pow(n as u32 + 1));
    }
    println!("PASS criterion 6: reduced-system bound 36, general 2*3^(n+1), stirling row {{6, 36, 150, 540, 1806, 5796}} exact");
}

#[test]
fn criterion_7_equifacial_pipeline() {
    let mut rng = ChaCha8Rng::seed_from_u64(1007);
    let solver_cfg = SolverConfig::for_dim(3).with_restarts(800);
    let oracle_cfg = OracleConfig { samples: 40_000, refine_iters: 200, rng_seed: 42 };
    let mut worst_solver = 0.0f64;
    let mut worst_oracle = 0.0f64;
    for _ in 0..50 {
        let w = [
            rng.random_range(0.2..3.0),
            rng.random_range(0.2..3.0),
            rng.random_range(0.2..3.0),
        ];
        let s = box_simplex(w).unwrap();
        let closed = equifacial_min_cylinder(&s).unwrap();
        let form = CircumFormulation::build(&s).unwrap();
        let general = global_min(&solve_all(&form, &solver_cfg).unwrap()).unwrap();
        let rel = (closed.radius - general.radius).abs() / general.radius;
        worst_solver = worst_solver.max(rel);
        assert!(rel < 1e-8, "closed form vs solver deviation {rel:.2e} at w = {w:?}");
        let (oracle_r, _) = oracle_min_enclosing(s.vertices(), &oracle_cfg);
        let gap = (closed.radius - oracle_r).abs() / closed.radius;
        worst_oracle = worst_oracle.max(gap);
        assert!(gap < 1e-4, "closed form vs oracle gap {gap:.2e} at w = {w:?}");
        // Axis orthogonal to one opposite-edge pair.
        let v = closed.axis.direction();
        let pairs = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))];
        let orthogonal = pairs.iter().any(|&((a, b), (c, d))| {
            let e1 = s.vertex(b) - s.vertex(a);
            let e2 = s.vertex(d) - s.vertex(c);
            v.dot(&e1).abs() < 1e-10 * e1.norm() && v.dot(&e2).abs() < 1e-10 * e2.norm()
        });
        assert!(orthogonal, "axis not orthogonal to an opposite-edge pair at w = {w:?}");
    }
    println!(
        "PASS criterion 7: 50 box simplices; worst closed-form-vs-solver rel = {worst_solver:.2e} < 1e-8, \
         worst vs oracle = {worst_oracle:.2e} < 1e-4, axes orthogonal to an opposite-edge pair (1e-10)"
    );
}

#[test]
fn criterion_8_enclosing_vs_oracle() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1008);
    let cfg = EncloseConfig {
        solver: SolverConfig::for_dim(3).with_restarts(350),
        oracle: OracleConfig { samples: 200_000, refine_iters: 200, rng_seed: 42 },
        ..Default::default()
    };
    let mut worst_gap = 0.0f64;
    let mut witness_counts = std::collections::BTreeMap::new();
    for case in 0..100 {
        let s = if case < 10 {
            // Deliberately flattened: last coordinate squashed by 1e-3.
            loop {
                let vertices: Vec<DVector<f64>> = (0..4)
                    .map(|_| {
                        let mut p = DVector::from_fn(3, |_, _| rng.random_range(-1.0..1.0));
                        p[2] *= 1e-3;
                        p
                    })
                    .collect();
                if let Ok(s) = SimplexN::new(3, vertices) {
                    break s;
                }
            }
        } else {
            random_simplex(&mut rng, 3)
        };
        let result = smallest_enclosing_cylinder(&s, &cfg).unwrap();
        let rel_gap = result.oracle_gap / result.oracle_radius;
        worst_gap = worst_gap.max(rel_gap);
        assert!(
            rel_gap < 1e-4,
            "case {case}: radius {} vs oracle {} (witness {:?})",
            result.cylinder.radius,
            result.oracle_radius,
            result.witness
        );
        let violation = result.cylinder.max_violation(s.vertices());
        assert!(violation <= 1e-9 * result.cylinder.radius, "case {case}: enclosure violated by {violation:.2e}");
        *witness_counts.entry(format!("{:?}", result.witness)).or_insert(0usize) += 1;
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "PASS criterion 8: 100 tetrahedra (10 flattened); worst relative oracle gap {worst_gap:.2e} < 1e-4; \
         witnesses {witness_counts:?}; {:.1} s < 60 s",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_9_numerical_hygiene() {
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    // Gradients against central differences, 1000 (simplex, direction) pairs.
    let mut worst_grad = 0.0f64;
    for _ in 0..1000 {
        let dim = rng.random_range(2..=5);
        let s = random_simplex(&mut rng, dim);
        let form = CircumFormulation::build(&s).unwrap();
        let mut v = DVector::from_fn(dim, |_, _| rng.random_range(-1.0..1.0));
        v /= v.norm();
        let (gf, g1, g2) = form.gradients(&v);
        let h = 1e-5;
        for a in 0..dim {
            let mut vp = v.clone();
            let mut vm = v.clone();
            vp[a] += h;
            vm[a] -= h;
            for (analytic, fd) in [
                (gf[a], (form.objective(&vp) - form.objective(&vm)) / (2.0 * h)),
                (g1[a], (form.cubic(&vp) - form.cubic(&vm)) / (2.0 * h)),
                (g2[a], (form.unit(&vp) - form.unit(&vm)) / (2.0 * h)),
            ] {
                let rel = (analytic - fd).abs() / analytic.abs().max(fd.abs()).max(1e-6);
                worst_grad = worst_grad.max(rel);
                assert!(rel < 1e-6, "gradient mismatch {rel:.2e}");
            }
        }
    }
    // Objective equals the squared recovered radius.
    let mut worst_obj = 0.0f64;
    for _ in 0..1000 {
        let dim = rng.random_range(2..=5);
        let s = random_simplex(&mut rng, dim);
        let form = CircumFormulation::build(&s).unwrap();
        let mut v = DVector::from_fn(dim, |_, _| rng.random_range(-1.0..1.0));
        v /= v.norm();
        let rec = recover_axis(&v, &s).unwrap();
        let f = form.objective(&v);
        let rel = (f - rec.radius * rec.radius).abs() / f.max(1e-12);
        worst_obj = worst_obj.max(rel);
        assert!(rel < 1e-10, "objective vs radius^2 deviation {rel:.2e}");
    }
    // Sigma identity r^2 = 9(n-1)/(8(n+1)) - sigma4 on feasible directions
    // (zero sum, unit norm, sigma3 = 0 via Newton projection).
    let mut worst_sigma = 0.0f64;
    for n in [3usize, 4, 5] {
        let emb = regular_vertices(n).unwrap();
        for _ in 0..334 {
            let v = match feasible_direction(&mut rng, n) {
                Some(v) => v,
                None => continue,
            };
            let sig = sigma_eval(v.as_slice());
            let chart_v = canonical_direction(&emb.chart_direction(&v));
            let rec = recover_axis(&chart_v, emb.simplex()).unwrap();
            let want = radius_sq_from_sigma4(n, sig[3]);
            let err = (rec.radius * rec.radius - want).abs();
            worst_sigma = worst_sigma.max(err);
            assert!(err < 1e-9, "sigma identity deviation {err:.2e} at n = {n}");
        }
    }
    println!(
        "PASS criterion 9: worst gradient-vs-FD rel {worst_grad:.2e} < 1e-6; \
         worst f-vs-r^2 rel {worst_obj:.2e} < 1e-10; worst sigma-identity deviation {worst_sigma:.2e} < 1e-9"
    );
}

/// Random unit zero-sum direction projected onto `sigma_3 = 0` by a few
/// Newton steps inside the feasible sphere.
fn feasible_direction(rng: &mut ChaCha8Rng, n: usize) -> Option<DVector<f64>> {
    let len = n + 1;
    let mut v = DVector::from_fn(len, |_, _| rng.random_range(-1.0..1.0f64));
    let mean = v.iter().sum::<f64>() / len as f64;
    v.add_scalar_mut(-mean);
    v /= v.norm();
    for _ in 0..80 {
        let sig = sigma_eval(v.as_slice());
        if sig[2].abs() < 1e-13 {
            // Re-impose the linear constraints exactly.
            let mean = v.iter().sum::<f64>() / len as f64;
            v.add_scalar_mut(-mean);
            v /= v.norm();
            if sigma_eval(v.as_slice())[2].abs() < 1e-12 {
                return Some(v);
            }
        }
        // grad sigma_3 projected into the feasible tangent space.
        let mut grad = DVector::from_fn(len, |i, _| {
            let rest: Vec<f64> = (0..len).filter(|&j| j != i).map(|j| v[j]).collect();
            sigma_eval(&rest)[1]
        });
        let mean = grad.iter().sum::<f64>() / len as f64;
        grad.add_scalar_mut(-mean);
        let along = grad.dot(&v);
        grad -= &v * along;
        let norm_sq = grad.norm_squared();
        if norm_sq < 1e-14 {
            return None;
        }
        v -= &grad * (sig[2] / norm_sq);
        v /= v.norm();
        let mean = v.iter().sum::<f64>() / len as f64;
        v.add_scalar_mut(-mean);
        v /= v.norm();
    }
    None
}

#[test]
fn acceptance_classify_smoke() {
    // The classification entry points used above stay wired to the report
    // types; exercise them once.
    let s = box_simplex([0.5, 0.5, 0.5]).unwrap();
    let unit = s.scaled(1.0 / s.data_scale());
    let form = CircumFormulation::build(&unit).unwrap();
    let v = canonical_direction(&cross3(
        &(unit.vertex(1) - unit.vertex(0)),
        &(unit.vertex(3) - unit.vertex(2)),
    ));
    assert_eq!(classify_point(&form, &v, 0.0, 1.0), CriticalKind::LocalMin);
}
