//! Multi-start Newton solver for the critical directions of the
//! circumscribing-cylinder program.
//!
//! The square Lagrange system in `(v, l1, l2)` is
//!
//! ```text
//! grad f(v) - l1 grad g1(v) - l2 grad g2(v) = 0
//! g1(v) = 0
//! g2(v) = 0
//! ```
//!
//! Seeds are the `C(n+1, 2)` edge directions (always feasible for `g1`),
//! the three opposite-edge cross products when `n = 3`, and `restarts`
//! random unit vectors. Damped Newton polishes each seed; converged
//! solutions are re-verified geometrically, deduplicated up to the
//! `v == -v` identification, and classified by the projected Hessian of the
//! Lagrangian. Starts are independent work items and the merge is a
//! deterministic sort, so a sequential run fixes the output for any
//! schedule.
//!
//! All tolerances below refer to the internally rescaled simplex whose
//! largest translated vertex norm is 1.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::formulation::CircumFormulation;
use crate::geometry::{canonical_direction, cross3, recover_axis, AxisLine, Cylinder, SimplexN};
use crate::{Error, Result};

/// Second-order classification of a critical direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalKind {
    LocalMin,
    LocalMax,
    Saddle,
    /// Projected Hessian has an eigenvalue too close to zero to call.
    Unclassified,
}

/// A converged critical direction of the program, reported in the original
/// coordinates of the input simplex.
#[derive(Debug, Clone)]
pub struct CriticalPoint {
    /// Canonical unit direction (first significant component positive).
    pub v: DVector<f64>,
    /// Moment point of the axis in original coordinates.
    pub u: DVector<f64>,
    /// Cylinder radius in original units.
    pub r: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    /// Max-norm of the Lagrange system at the unit-scaled solution.
    pub residual: f64,
    pub kind: CriticalKind,
    /// Number of starts that converged into this direction.
    pub basin_count: usize,
}

impl CriticalPoint {
    pub fn axis(&self) -> Result<AxisLine> {
        AxisLine::through(&self.u, &self.v)
    }
}

/// Multi-start configuration. `rng_seed` is the only nondeterminism control.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SolverConfig {
    pub restarts: usize,
    pub rng_seed: u64,
    pub newton_max_iter: usize,
    pub newton_tol: f64,
    /// Angle below which two canonical directions are the same solution.
    pub dedup_angle_tol: f64,
}

impl SolverConfig {
    /// Defaults scaled to the dimension: `200 * 3^min(n, 5)` restarts
    /// saturates the known censuses with a wide margin.
    pub fn for_dim(n: usize) -> Self {
        Self {
            restarts: 200 * 3usize.pow(n.min(5) as u32),
            rng_seed: 42,
            newton_max_iter: 80,
            newton_tol: 1e-12,
            dedup_angle_tol: 1e-7,
        }
    }

    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts.max(1);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.rng_seed = seed;
        self
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self::for_dim(3)
    }
}

/// Residual tolerance accepted for a returned point (unit-scaled data).
const ACCEPT_RESIDUAL: f64 = 1e-10;
const ACCEPT_G1: f64 = 1e-10;
const ACCEPT_G2: f64 = 1e-12;

struct NewtonOutcome {
    v: DVector<f64>,
    lambda: [f64; 2],
    residual: f64,
}

fn system_residual(
    form: &CircumFormulation,
    v: &DVector<f64>,
    l1: f64,
    l2: f64,
) -> DVector<f64> {
    let n = form.dim();
    let (gf, g1, g2) = form.gradients(v);
    let mut out = DVector::zeros(n + 2);
    for i in 0..n {
        out[i] = gf[i] - l1 * g1[i] - l2 * g2[i];
    }
    out[n] = form.cubic(v);
    out[n + 1] = form.unit(v);
    out
}

fn system_jacobian(form: &CircumFormulation, v: &DVector<f64>, l1: f64, l2: f64) -> DMatrix<f64> {
    let n = form.dim();
    let (_, g1, g2) = form.gradients(v);
    let hf = form.hess_objective(v);
    let hg1 = form.hess_cubic(v);
    let mut jac = DMatrix::zeros(n + 2, n + 2);
    for i in 0..n {
        for j in 0..n {
            jac[(i, j)] = hf[(i, j)] - l1 * hg1[(i, j)] - l2 * if i == j { 2.0 } else { 0.0 };
        }
        jac[(i, n)] = -g1[i];
        jac[(i, n + 1)] = -g2[i];
        jac[(n, i)] = g1[i];
        jac[(n + 1, i)] = g2[i];
    }
    jac
}

/// Least-squares multipliers at a seed: fit `grad f ~ l1 grad g1 + l2 grad g2`.
fn fit_multipliers(form: &CircumFormulation, v: &DVector<f64>) -> [f64; 2] {
    let (gf, g1, g2) = form.gradients(v);
    let b = DMatrix::from_fn(form.dim(), 2, |i, c| if c == 0 { g1[i] } else { g2[i] });
    match b.svd(true, true).solve(&gf, 1e-13) {
        Ok(sol) => [sol[(0, 0)], sol[(1, 0)]],
        Err(_) => [0.0, 0.0],
    }
}

/// Damped Newton on the square Lagrange system from one seed.
///
/// Iterates past the nominal tolerance down to the numerical floor: at
/// degenerate solutions (free multiplier, singular Jacobian) the residual
/// shrinks only linearly with the distance squared, so stopping early would
/// scatter converged directions over a band far wider than the dedup angle.
fn newton_polish(form: &CircumFormulation, seed: &DVector<f64>, cfg: &SolverConfig) -> Option<NewtonOutcome> {
    let n = form.dim();
    let mut v = seed / seed.norm();
    let [mut l1, mut l2] = fit_multipliers(form, &v);
    let mut res = system_residual(form, &v, l1, l2);
    let mut norm = res.amax();
    for _ in 0..cfg.newton_max_iter {
        if norm < 1e-15 {
            break;
        }
        let jac = system_jacobian(form, &v, l1, l2);
        let step = match jac.clone().lu().solve(&(-&res)) {
            Some(s) if s.iter().all(|x| x.is_finite()) => s,
            _ => match jac.svd(true, true).solve(&(-&res), 1e-13) {
                Ok(s) => s,
                Err(_) => return None,
            },
        };
        // Halve until the residual decreases.
        let mut t = 1.0;
        let mut improved = false;
        for _ in 0..40 {
            let vt = DVector::from_fn(n, |i, _| v[i] + t * step[i]);
            let l1t = l1 + t * step[n];
            let l2t = l2 + t * step[n + 1];
            let rt = system_residual(form, &vt, l1t, l2t);
            let nt = rt.amax();
            if nt < norm {
                v = vt;
                l1 = l1t;
                l2 = l2t;
                res = rt;
                norm = nt;
                improved = true;
                break;
            }
            t *= 0.5;
        }
        if !improved {
            break;
        }
    }
    if let Some(snapped) = degenerate_snap(form, &v, l2, norm) {
        return Some(snapped);
    }
    (norm <= cfg.newton_tol.max(ACCEPT_RESIDUAL)).then_some(NewtonOutcome { v, lambda: [l1, l2], residual: norm })
}

/// Quadratically convergent polish for directions where the cubic's
/// gradient vanishes (the multiplier `l1` is then free and the full system
/// is singular). Solves the sphere-restricted stationarity system
/// `grad f = l2 * 2v, v^2 = 1` and keeps the result only if it still
/// satisfies the full Lagrange system with `l1 = 0`.
fn degenerate_snap(form: &CircumFormulation, v: &DVector<f64>, l2: f64, norm: f64) -> Option<NewtonOutcome> {
    let n = form.dim();
    let (_, g1, _) = form.gradients(v);
    if g1.norm() > 1e-4 {
        return None;
    }
    let mut x = v.clone();
    let mut l2 = l2;
    for _ in 0..12 {
        let (gf, _, _) = form.gradients(&x);
        let mut rhs = DVector::zeros(n + 1);
        for i in 0..n {
            rhs[i] = -(gf[i] - 2.0 * l2 * x[i]);
        }
        rhs[n] = -(x.dot(&x) - 1.0);
        if rhs.amax() < 1e-16 {
            break;
        }
        let hf = form.hess_objective(&x);
        let mut jac = DMatrix::zeros(n + 1, n + 1);
        for i in 0..n {
            for j in 0..n {
                jac[(i, j)] = hf[(i, j)] - if i == j { 2.0 * l2 } else { 0.0 };
            }
            jac[(i, n)] = -2.0 * x[i];
            jac[(n, i)] = 2.0 * x[i];
        }
        let step = jac.lu().solve(&rhs)?;
        for i in 0..n {
            x[i] += step[i];
        }
        l2 += step[n];
    }
    let res = system_residual(form, &x, 0.0, l2).amax();
    (res <= norm.max(1e-13)).then_some(NewtonOutcome { v: x, lambda: [0.0, l2], residual: res })
}

/// Second-order classification at a critical direction.
///
/// At smooth points of `{g1 = 0, g2 = 0}` this is the eigenvalue-sign test
/// of the Lagrangian Hessian projected onto the tangent space, with a
/// near-zero eigenvalue reported as `Unclassified`. Where the cubic's
/// gradient vanishes the feasible set is a singular crossing of branches
/// (the regular tetrahedron's opposite-edge axes are the canonical case)
/// and the plane-projected Hessian misreads the geometry, so the kind is
/// decided by retracting a ring of nearby directions onto the constraint
/// set and comparing objective values.
pub fn classify(form: &CircumFormulation, v: &DVector<f64>, l1: f64, l2: f64) -> CriticalKind {
    let n = form.dim();
    let (_, g1, g2) = form.gradients(v);
    let g1_degenerate = g1.norm() <= 1e-7;
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for grad in [&g2, &g1] {
        let mut w = grad.clone();
        for b in &basis {
            let along = w.dot(b);
            w -= b * along;
        }
        if w.norm() > 1e-7 {
            basis.push(&w / w.norm());
        }
    }
    // Complete to an orthonormal basis; leftover columns span the tangent.
    let mut tangent: Vec<DVector<f64>> = Vec::new();
    for i in 0..n {
        let mut w = DVector::from_fn(n, |j, _| if j == i { 1.0 } else { 0.0 });
        for b in basis.iter().chain(tangent.iter()) {
            let along = w.dot(b);
            w -= b * along;
        }
        if w.norm() > 1e-7 {
            tangent.push(&w / w.norm());
        }
    }
    if tangent.is_empty() {
        // Zero-dimensional feasible set: vacuously a strict minimum.
        return CriticalKind::LocalMin;
    }
    if g1_degenerate {
        return classify_by_feasible_samples(form, v, &tangent);
    }
    let hess = form.hess_objective(v) - form.hess_cubic(v) * l1 - DMatrix::identity(n, n) * (2.0 * l2);
    let t = tangent.len();
    let projected = DMatrix::from_fn(t, t, |i, j| (&hess * &tangent[j]).dot(&tangent[i]));
    let eig = projected.symmetric_eigen().eigenvalues;
    let max_abs = eig.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    let tol = 1e-8 + 1e-6 * max_abs;
    if eig.iter().any(|e| e.abs() <= tol) {
        return CriticalKind::Unclassified;
    }
    let pos = eig.iter().filter(|e| **e > 0.0).count();
    if pos == t {
        CriticalKind::LocalMin
    } else if pos == 0 {
        CriticalKind::LocalMax
    } else {
        CriticalKind::Saddle
    }
}

/// Compares the objective at feasible retractions of a deterministic ring
/// of perturbed directions against the value at `v`.
fn classify_by_feasible_samples(
    form: &CircumFormulation,
    v: &DVector<f64>,
    tangent: &[DVector<f64>],
) -> CriticalKind {
    let f0 = form.objective(v);
    let eps = 1e-2;
    let margin = 1e-8 * f0.max(1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let samples = 8 * tangent.len().max(2);
    let (mut higher, mut lower, mut total) = (0usize, 0usize, 0usize);
    for k in 0..samples {
        let dir = if tangent.len() == 2 {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / samples as f64;
            &tangent[0] * theta.cos() + &tangent[1] * theta.sin()
        } else {
            let mut d = DVector::zeros(v.len());
            for t in tangent {
                d += t * rng.random_range(-1.0..1.0f64);
            }
            if d.norm() < 1e-9 {
                continue;
            }
            let norm = d.norm();
            d / norm
        };
        let Some(x) = retract_to_constraints(form, &(v + &dir * eps)) else {
            continue;
        };
        let moved = (&x - v).norm();
        // Samples that get pulled back onto the point itself (retraction
        // collapses directions between branches) carry no information.
        if moved > 10.0 * eps || moved < 0.1 * eps {
            continue;
        }
        total += 1;
        let df = form.objective(&x) - f0;
        if df > margin {
            higher += 1;
        } else if df < -margin {
            lower += 1;
        }
    }
    if total < 4 {
        return CriticalKind::Unclassified;
    }
    match (higher > 0, lower > 0) {
        (true, false) if higher == total => CriticalKind::LocalMin,
        (false, true) if lower == total => CriticalKind::LocalMax,
        (true, true) => CriticalKind::Saddle,
        _ => CriticalKind::Unclassified,
    }
}

/// Newton projection onto `{g1 = 0, g2 = 0}` with least-norm updates.
fn retract_to_constraints(form: &CircumFormulation, start: &DVector<f64>) -> Option<DVector<f64>> {
    let mut x = start / start.norm();
    for _ in 0..60 {
        let c1 = form.cubic(&x);
        let c2 = form.unit(&x);
        if c1.abs().max(c2.abs()) < 1e-13 {
            return Some(x);
        }
        let (_, g1, g2) = form.gradients(&x);
        let jac = DMatrix::from_fn(2, x.len(), |r, c| if r == 0 { g1[c] } else { g2[c] });
        let rhs = DVector::from_column_slice(&[-c1, -c2]);
        let step = jac.svd(true, true).solve(&rhs, 1e-13).ok()?;
        x += step;
    }
    None
}

/// Groups points whose canonical directions differ by less than `tol`
/// radians, keeping the smallest residual and accumulating basin counts.
/// Idempotent.
pub fn dedup(points: Vec<CriticalPoint>, tol: f64) -> Vec<CriticalPoint> {
    let mut kept: Vec<CriticalPoint> = Vec::new();
    for p in points {
        let mut merged = false;
        for k in kept.iter_mut() {
            let cosine = p.v.dot(&k.v).clamp(-1.0, 1.0);
            if cosine.acos() < tol {
                k.basin_count += p.basin_count;
                if p.residual < k.residual {
                    let basins = k.basin_count;
                    *k = p.clone();
                    k.basin_count = basins;
                }
                merged = true;
                break;
            }
        }
        if !merged {
            kept.push(p);
        }
    }
    sort_points(&mut kept);
    kept
}

fn sort_points(points: &mut [CriticalPoint]) {
    points.sort_by(|a, b| {
        a.r.partial_cmp(&b.r)
            .unwrap()
            .then_with(|| a.v.iter().partial_cmp(b.v.iter()).unwrap())
    });
}

/// Finds all real critical directions of the circumscribing program for the
/// simplex behind `form`. Deterministic for a fixed `(simplex, cfg)`.
pub fn solve_all(form: &CircumFormulation, cfg: &SolverConfig) -> Result<Vec<CriticalPoint>> {
    let original = form.simplex();
    let scale = original.data_scale();
    let unit_simplex = original.scaled(1.0 / scale);
    let unit_form = CircumFormulation::build(&unit_simplex)?;
    let n = unit_form.dim();

    let mut seeds: Vec<DVector<f64>> = unit_simplex.edge_directions();
    if n == 3 {
        // Opposite-edge cross products; critical for equifacial inputs and
        // harmless extra seeds otherwise.
        for (a, b, c, d) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
            let e1 = unit_simplex.vertex(b) - unit_simplex.vertex(a);
            let e2 = unit_simplex.vertex(d) - unit_simplex.vertex(c);
            let cp = cross3(&e1, &e2);
            if cp.norm() > 1e-12 {
                seeds.push(canonical_direction(&cp));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    for _ in 0..cfg.restarts {
        seeds.push(random_unit_vector(&mut rng, n));
    }

    let mut accepted: Vec<CriticalPoint> = Vec::new();
    for seed in &seeds {
        let Some(out) = newton_polish(&unit_form, seed, cfg) else {
            continue;
        };
        let Some(point) = validate_point(&unit_form, original, scale, out) else {
            continue;
        };
        accepted.push(point);
    }
    if accepted.is_empty() {
        return Err(Error::NoCriticalPointFound);
    }
    let mut points = dedup(accepted, cfg.dedup_angle_tol);
    for p in points.iter_mut() {
        p.kind = classify(&unit_form, &p.v, p.lambda1 / scale, p.lambda2 / (scale * scale));
    }
    sort_points(&mut points);
    Ok(points)
}

/// Re-verifies a converged direction against the geometry before accepting
/// it: constraint residuals, radius consistency, and vertex equidistance.
fn validate_point(
    unit_form: &CircumFormulation,
    original: &SimplexN,
    scale: f64,
    out: NewtonOutcome,
) -> Option<CriticalPoint> {
    let v = canonical_direction(&out.v);
    if unit_form.cubic(&v).abs() > ACCEPT_G1 || unit_form.unit(&v).abs() > ACCEPT_G2 {
        return None;
    }
    let unit_simplex = unit_form.simplex();
    let rec = recover_axis(&v, unit_simplex).ok()?;
    let f = unit_form.objective(&v);
    if (f - rec.radius * rec.radius).abs() > 1e-10 * f.max(1.0) {
        return None;
    }
    let axis = rec.world_axis(unit_simplex).ok()?;
    for p in unit_simplex.vertices() {
        if (axis.distance(p) - rec.radius).abs() / (1.0 + rec.radius) > 1e-9 {
            return None;
        }
    }
    // Lift to original coordinates.
    let world_axis = AxisLine::through(
        &(&rec.u_local * scale + original.base_vertex()),
        &v,
    )
    .ok()?;
    Some(CriticalPoint {
        v,
        u: world_axis.moment().clone(),
        r: rec.radius * scale,
        lambda1: out.lambda[0] * scale,
        lambda2: out.lambda[1] * scale * scale,
        residual: out.residual,
        kind: CriticalKind::Unclassified,
        basin_count: 1,
    })
}

/// Smallest-radius critical point as a cylinder in original coordinates.
/// Ties break toward the lexicographically smallest canonical direction.
pub fn global_min(points: &[CriticalPoint]) -> Result<Cylinder> {
    let best = points
        .iter()
        .min_by(|a, b| {
            a.r.partial_cmp(&b.r)
                .unwrap()
                .then_with(|| a.v.iter().partial_cmp(b.v.iter()).unwrap())
        })
        .ok_or(Error::EmptyInput)?;
    Cylinder::new(best.axis()?, best.r)
}

/// Distance a direction moves under a full Newton polish of the Lagrange
/// system; near zero exactly when the direction already is a critical
/// point. Exposed for cross-checks between the exact censuses and the
/// generic solver.
pub fn polish_drift(form: &CircumFormulation, v: &DVector<f64>) -> f64 {
    let cfg = SolverConfig::for_dim(form.dim());
    match newton_polish(form, v, &cfg) {
        Some(out) => {
            let unit = v / v.norm();
            (&out.v - unit).norm()
        }
        None => f64::INFINITY,
    }
}

pub(crate) fn random_unit_vector(rng: &mut ChaCha8Rng, n: usize) -> DVector<f64> {
    loop {
        // Box-Muller normals give a rotation-invariant direction.
        let v = DVector::from_fn(n, |_, _| {
            let u1: f64 = rng.random_range(f64::EPSILON..1.0);
            let u2: f64 = rng.random_range(0.0..1.0);
            (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
        });
        let norm = v.norm();
        if norm > 1e-6 {
            return v / norm;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::box_simplex;

    fn fast_cfg(n: usize) -> SolverConfig {
        SolverConfig::for_dim(n).with_restarts(400)
    }

    fn random_simplex(rng: &mut ChaCha8Rng, dim: usize) -> SimplexN {
        loop {
            let vertices: Vec<DVector<f64>> = (0..=dim)
                .map(|_| DVector::from_fn(dim, |_, _| rng.random_range(-1.0..1.0)))
                .collect();
            if let Ok(s) = SimplexN::new(dim, vertices) {
                if s.base_matrix().determinant().abs() > 1e-2 {
                    return s;
                }
            }
        }
    }

    #[test]
    fn regular_tetrahedron_census() {
        let s = box_simplex([0.5, 0.5, 0.5]).unwrap();
        let form = CircumFormulation::build(&s).unwrap();
        let points = solve_all(&form, &fast_cfg(3)).unwrap();
        assert_eq!(points.len(), 9, "expected 6 edge + 3 cross directions");
        let min_r = 1.0 / 2f64.sqrt();
        let crosses: Vec<_> = points.iter().filter(|p| (p.r - min_r).abs() < 1e-9).collect();
        let edges: Vec<_> = points.iter().filter(|p| (p.r - 0.75).abs() < 1e-9).collect();
        assert_eq!(crosses.len(), 3);
        assert_eq!(edges.len(), 6);
        for c in &crosses {
            assert_eq!(c.kind, CriticalKind::LocalMin);
        }
        for e in &edges {
            assert_ne!(e.kind, CriticalKind::LocalMin);
        }
        let gm = global_min(&points).unwrap();
        assert!((gm.radius - min_r).abs() < 1e-10);
    }

    #[test]
    fn critical_points_satisfy_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for _ in 0..5 {
            let s = random_simplex(&mut rng, 3);
            let form = CircumFormulation::build(&s).unwrap();
            let points = solve_all(&form, &fast_cfg(3)).unwrap();
            assert!(!points.is_empty());
            assert!(points.len() <= 18, "n=3 direction count bound violated: {}", points.len());
            let unit = s.scaled(1.0 / s.data_scale());
            let unit_form = CircumFormulation::build(&unit).unwrap();
            for p in &points {
                assert!(p.residual < ACCEPT_RESIDUAL);
                assert!(unit_form.cubic(&p.v).abs() < ACCEPT_G1);
                assert!(unit_form.unit(&p.v).abs() < ACCEPT_G2);
                let det = unit_form.optimality_determinant_e3(&p.v).unwrap();
                assert!(det.abs() < 1e-7, "optimality determinant {det}");
                let rec = recover_axis(&p.v, &s).unwrap();
                assert!((rec.radius - p.r).abs() <= 1e-10 * p.r.max(1.0));
            }
        }
    }

    #[test]
    fn optimality_minors_vanish_at_critical_points_of_4_simplex() {
        let mut rng = ChaCha8Rng::seed_from_u64(97);
        let s = random_simplex(&mut rng, 4);
        let unit = s.scaled(1.0 / s.data_scale());
        let unit_form = CircumFormulation::build(&unit).unwrap();
        let form = CircumFormulation::build(&s).unwrap();
        let points = solve_all(&form, &SolverConfig::for_dim(4).with_restarts(300)).unwrap();
        assert!(!points.is_empty());
        for p in &points {
            let minors = unit_form.optimality_minors(&p.v).unwrap();
            assert_eq!(minors.len(), 4);
            let max = minors.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            assert!(max < 1e-7, "largest minor {max:.2e}");
        }
    }

    #[test]
    fn deterministic_output() {
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        let s = random_simplex(&mut rng, 3);
        let form = CircumFormulation::build(&s).unwrap();
        let cfg = fast_cfg(3);
        let a = solve_all(&form, &cfg).unwrap();
        let b = solve_all(&form, &cfg).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.v, y.v);
            assert_eq!(x.r, y.r);
            assert_eq!(x.basin_count, y.basin_count);
        }
    }

    #[test]
    fn global_min_beats_edge_radii() {
        let mut rng = ChaCha8Rng::seed_from_u64(107);
        for _ in 0..3 {
            let s = random_simplex(&mut rng, 3);
            let form = CircumFormulation::build(&s).unwrap();
            let points = solve_all(&form, &fast_cfg(3)).unwrap();
            let gm = global_min(&points).unwrap();
            for v in s.edge_directions() {
                let rec = recover_axis(&v, &s).unwrap();
                assert!(gm.radius <= rec.radius * (1.0 + 1e-9));
            }
        }
    }

    #[test]
    fn dedup_merges_sign_pairs_and_is_idempotent() {
        let s = box_simplex([0.5, 0.5, 0.5]).unwrap();
        let v = canonical_direction(&DVector::from_column_slice(&[1.0, 0.0, 0.0]));
        let rec = recover_axis(&v, &s).unwrap();
        let mk = |res: f64| CriticalPoint {
            v: v.clone(),
            u: DVector::zeros(3),
            r: rec.radius,
            lambda1: 0.0,
            lambda2: 0.0,
            residual: res,
            kind: CriticalKind::Unclassified,
            basin_count: 1,
        };
        // -v canonicalizes onto v, so sign pairs collapse to one point.
        let from_neg = CriticalPoint { v: canonical_direction(&-&v), ..mk(2e-12) };
        let merged = dedup(vec![mk(1e-12), from_neg], 1e-7);
        assert_eq!(merged.len(), 1);
        assert_eq!(merged[0].basin_count, 2);
        assert_eq!(merged[0].residual, 1e-12);
        let again = dedup(merged.clone(), 1e-7);
        assert_eq!(again.len(), 1);
        assert_eq!(again[0].basin_count, 2);
    }

    #[test]
    fn distinct_edge_directions_stay_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(109);
        let s = random_simplex(&mut rng, 3);
        let dirs = s.edge_directions();
        let mk = |v: &DVector<f64>| CriticalPoint {
            v: v.clone(),
            u: DVector::zeros(3),
            r: 1.0,
            lambda1: 0.0,
            lambda2: 0.0,
            residual: 1e-12,
            kind: CriticalKind::Unclassified,
            basin_count: 1,
        };
        let out = dedup(vec![mk(&dirs[0]), mk(&dirs[1])], 1e-7);
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn projected_hessian_matches_chart_finite_differences() {
        // Retract onto {g1 = 0, g2 = 0} along the two constraint normals and
        // compare the chart Hessian of f with the projected Lagrangian
        // Hessian at a critical point of a 4-simplex (tangent dim 2).
        let mut rng = ChaCha8Rng::seed_from_u64(113);
        let s = random_simplex(&mut rng, 4);
        let form = CircumFormulation::build(&s).unwrap();
        let unit = s.scaled(1.0 / s.data_scale());
        let uform = CircumFormulation::build(&unit).unwrap();
        let points = solve_all(&form, &SolverConfig::for_dim(4).with_restarts(300)).unwrap();
        let p = &points[0];
        let (_, g1, g2) = uform.gradients(&p.v);
        // Orthonormal normal-space and tangent-space bases.
        let mut normals: Vec<DVector<f64>> = Vec::new();
        for g in [&g2, &g1] {
            let mut w = g.clone();
            for b in &normals {
                let along = w.dot(b);
                w -= b * along;
            }
            if w.norm() > 1e-9 {
                normals.push(&w / w.norm());
            }
        }
        assert_eq!(normals.len(), 2);
        let mut tangent: Vec<DVector<f64>> = Vec::new();
        for i in 0..4 {
            let mut w = DVector::from_fn(4, |j, _| if j == i { 1.0 } else { 0.0 });
            for b in normals.iter().chain(tangent.iter()) {
                let along = w.dot(b);
                w -= b * along;
            }
            if w.norm() > 1e-7 {
                tangent.push(&w / w.norm());
            }
        }
        assert_eq!(tangent.len(), 2);
        let retract = |theta: [f64; 2]| -> DVector<f64> {
            let mut x = &p.v + &tangent[0] * theta[0] + &tangent[1] * theta[1];
            for _ in 0..60 {
                let c = DVector::from_column_slice(&[uform.cubic(&x), uform.unit(&x)]);
                if c.amax() < 1e-13 {
                    break;
                }
                let (_, g1x, g2x) = uform.gradients(&x);
                let jac = DMatrix::from_fn(2, 2, |r, cidx| {
                    let g = if r == 0 { &g1x } else { &g2x };
                    g.dot(&normals[cidx])
                });
                let delta = jac.lu().solve(&(-&c)).unwrap();
                x += &normals[0] * delta[0] + &normals[1] * delta[1];
            }
            x
        };
        let f = |theta: [f64; 2]| uform.objective(&retract(theta));
        let h = 1e-4;
        let f00 = f([0.0, 0.0]);
        let mut fd = DMatrix::zeros(2, 2);
        for a in 0..2 {
            for b in 0..2 {
                if a == b {
                    let mut tp = [0.0; 2];
                    tp[a] = h;
                    let mut tm = [0.0; 2];
                    tm[a] = -h;
                    fd[(a, a)] = (f(tp) - 2.0 * f00 + f(tm)) / (h * h);
                } else {
                    let eval = |sa: f64, sb: f64| {
                        let mut t = [0.0; 2];
                        t[a] = sa * h;
                        t[b] = sb * h;
                        f(t)
                    };
                    fd[(a, b)] =
                        (eval(1.0, 1.0) - eval(1.0, -1.0) - eval(-1.0, 1.0) + eval(-1.0, -1.0)) / (4.0 * h * h);
                }
            }
        }
        let scale = s.data_scale();
        let l1 = p.lambda1 / scale;
        let l2 = p.lambda2 / (scale * scale);
        let hess = uform.hess_objective(&p.v) - uform.hess_cubic(&p.v) * l1 - DMatrix::identity(4, 4) * (2.0 * l2);
        let projected = DMatrix::from_fn(2, 2, |i, j| (&hess * &tangent[j]).dot(&tangent[i]));
        let mut eig_fd: Vec<f64> = fd.symmetric_eigen().eigenvalues.iter().copied().collect();
        let mut eig_an: Vec<f64> = projected.symmetric_eigen().eigenvalues.iter().copied().collect();
        eig_fd.sort_by(|a, b| a.partial_cmp(b).unwrap());
        eig_an.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (x, y) in eig_fd.iter().zip(&eig_an) {
            assert!((x - y).abs() < 1e-4 * (1.0 + y.abs()), "fd {x} vs analytic {y}");
        }
    }
}
