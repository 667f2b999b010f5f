//! Smallest enclosing cylinder of a tetrahedron.
//!
//! An optimal enclosing cylinder can always be moved, at constant radius,
//! until its surface passes through four vertices (a circumscribing
//! cylinder) or through three vertices with the axis confined to one of
//! three one-parameter line families built on a vertex pair `(p_i, p_j)`
//! and the spheres of radius `r` around them:
//!
//! * (a) rulings of the cylinder of radius `r` around the line `p_i p_j`
//!   (axes parallel to the edge at distance `r` from both endpoints),
//! * (b) rulings of the double cone with apex at the midpoint (disjoint
//!   spheres, `2r < a`),
//! * (c) lines in the bisector plane tangent to the circle of radius
//!   `sqrt(r^2 - a^2/4)` around the midpoint (overlapping spheres,
//!   `2r >= a`).
//!
//! The pipeline therefore takes the minimum of the circumscribing global
//! optimum and, for every ordered (pair, third-vertex) choice, the best
//! feasible member of each family, found by bisection on the coupled
//! radius with a grid-seeded golden-section search over the family
//! parameter inside. An independent direction-sampling oracle (projection
//! onto `v`-orthogonal hyperplanes plus exact minidisk) validates every
//! result.

use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::formulation::CircumFormulation;
use crate::geometry::{canonical_direction, AxisLine, Cylinder, SimplexN};
use crate::minidisk::min_enclosing_ball;
use crate::solver::{global_min, random_unit_vector, solve_all, SolverConfig};
use crate::{Error, Result};

/// Which candidate family produced the optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Circumscribing4Pts,
    PairCylinderA,
    PairConeB,
    PairBisectorC,
}

impl Witness {
    fn rank(self) -> u8 {
        match self {
            Witness::Circumscribing4Pts => 0,
            Witness::PairCylinderA => 1,
            Witness::PairConeB => 2,
            Witness::PairBisectorC => 3,
        }
    }
}

/// Result of the enclosing pipeline, cross-checked against the oracle.
#[derive(Debug, Clone)]
pub struct EnclosingResult {
    pub cylinder: Cylinder,
    pub witness: Witness,
    /// Vertex indices on the cylinder surface (within `1e-8 * scale`).
    pub support: Vec<usize>,
    pub oracle_radius: f64,
    pub oracle_direction: DVector<f64>,
    /// `|r - r_oracle|`.
    pub oracle_gap: f64,
}

/// Sampling-oracle budget; deterministic for a fixed seed.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct OracleConfig {
    pub samples: usize,
    pub refine_iters: usize,
    pub rng_seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { samples: 200_000, refine_iters: 200, rng_seed: 42 }
    }
}

/// Configuration of the full enclosing pipeline.
#[derive(Debug, Clone, Copy)]
pub struct EncloseConfig {
    pub solver: SolverConfig,
    pub oracle: OracleConfig,
    /// Grid seeds for the inner family-parameter search.
    pub family_grid: usize,
    /// Radius-scan resolution locating the feasibility transition.
    pub radius_scan: usize,
    pub bisect_iters: usize,
}

impl Default for EncloseConfig {
    fn default() -> Self {
        Self {
            solver: SolverConfig::for_dim(3),
            oracle: OracleConfig::default(),
            family_grid: 64,
            radius_scan: 64,
            bisect_iters: 48,
        }
    }
}

/// Radius of the smallest enclosing ball of the points projected onto the
/// hyperplane orthogonal to `v` (exact Welzl minidisk in dimension n - 1).
pub fn projection_radius(points: &[DVector<f64>], v: &DVector<f64>) -> f64 {
    let n = v.len();
    if n == 3 && points.len() <= 12 {
        return projection_radius_3d(points, v);
    }
    let unit = v / v.norm();
    let basis = orthonormal_complement(&unit);
    let projected: Vec<DVector<f64>> = points
        .iter()
        .map(|p| DVector::from_fn(n - 1, |i, _| basis[i].dot(p)))
        .collect();
    min_enclosing_ball(&projected).radius
}

/// Allocation-free fast path for the oracle's inner loop: project onto an
/// explicit orthonormal pair and take the exact minidisk by support-set
/// enumeration (the optimal circle is determined by two or three points).
fn projection_radius_3d(points: &[DVector<f64>], v: &DVector<f64>) -> f64 {
    let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    let u = [v[0] / norm, v[1] / norm, v[2] / norm];
    let pivot = if u[0].abs() <= u[1].abs() && u[0].abs() <= u[2].abs() {
        0
    } else if u[1].abs() <= u[2].abs() {
        1
    } else {
        2
    };
    let mut b1 = [0.0f64; 3];
    b1[pivot] = 1.0;
    let along = b1[0] * u[0] + b1[1] * u[1] + b1[2] * u[2];
    for i in 0..3 {
        b1[i] -= along * u[i];
    }
    let b1n = (b1[0] * b1[0] + b1[1] * b1[1] + b1[2] * b1[2]).sqrt();
    for x in b1.iter_mut() {
        *x /= b1n;
    }
    let b2 = [
        u[1] * b1[2] - u[2] * b1[1],
        u[2] * b1[0] - u[0] * b1[2],
        u[0] * b1[1] - u[1] * b1[0],
    ];
    let mut proj = [[0.0f64; 2]; 12];
    let m = points.len();
    for (k, p) in points.iter().enumerate() {
        proj[k] = [
            p[0] * b1[0] + p[1] * b1[1] + p[2] * b1[2],
            p[0] * b2[0] + p[1] * b2[1] + p[2] * b2[2],
        ];
    }
    minidisk_2d(&proj[..m])
}

/// Exact smallest enclosing circle of at most a dozen points, by checking
/// every pair-diameter and triple-circumcircle candidate.
fn minidisk_2d(pts: &[[f64; 2]]) -> f64 {
    let m = pts.len();
    if m == 1 {
        return 0.0;
    }
    let covers = |c: [f64; 2], r2: f64| -> bool {
        pts.iter().all(|p| {
            let dx = p[0] - c[0];
            let dy = p[1] - c[1];
            dx * dx + dy * dy <= r2 * (1.0 + 1e-12) + 1e-300
        })
    };
    let mut best = f64::INFINITY;
    for i in 0..m {
        for j in (i + 1)..m {
            let c = [(pts[i][0] + pts[j][0]) / 2.0, (pts[i][1] + pts[j][1]) / 2.0];
            let dx = pts[i][0] - c[0];
            let dy = pts[i][1] - c[1];
            let r2 = dx * dx + dy * dy;
            if r2 < best && covers(c, r2) {
                best = r2;
            }
        }
    }
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                let (a, b, c) = (pts[i], pts[j], pts[k]);
                let d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]));
                if d.abs() < 1e-30 {
                    continue;
                }
                let a2 = a[0] * a[0] + a[1] * a[1];
                let b2 = b[0] * b[0] + b[1] * b[1];
                let c2 = c[0] * c[0] + c[1] * c[1];
                let ux = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d;
                let uy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d;
                let dx = a[0] - ux;
                let dy = a[1] - uy;
                let r2 = dx * dx + dy * dy;
                if r2 < best && covers([ux, uy], r2) {
                    best = r2;
                }
            }
        }
    }
    best.sqrt()
}

/// Deterministic orthonormal basis of the hyperplane orthogonal to a unit
/// vector.
fn orthonormal_complement(unit: &DVector<f64>) -> Vec<DVector<f64>> {
    let n = unit.len();
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(n - 1);
    for i in 0..n {
        let mut w = DVector::from_fn(n, |j, _| if j == i { 1.0 } else { 0.0 });
        let along = w.dot(unit);
        w -= unit * along;
        for b in &basis {
            let along = w.dot(b);
            w -= b * along;
        }
        if w.norm() > 1e-7 {
            basis.push(&w / w.norm());
        }
        if basis.len() == n - 1 {
            break;
        }
    }
    basis
}

/// Direction-sampling oracle for the smallest enclosing cylinder radius:
/// a Fibonacci sphere of directions for `n = 3` (uniform random samples in
/// higher dimension), followed by Nelder-Mead refinement on the sphere
/// around the best few samples. Upper bound on the exact radius by
/// construction.
pub fn oracle_min_enclosing(points: &[DVector<f64>], cfg: &OracleConfig) -> (f64, DVector<f64>) {
    assert!(cfg.samples >= 1);
    let n = points[0].len();
    let mut best: Vec<(f64, DVector<f64>)> = Vec::new();
    let push = |r: f64, v: DVector<f64>, best: &mut Vec<(f64, DVector<f64>)>| {
        best.push((r, v));
        best.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        best.truncate(6);
    };
    if n == 3 {
        let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
        for k in 0..cfg.samples {
            let z = 1.0 - 2.0 * (k as f64 + 0.5) / cfg.samples as f64;
            let rho = (1.0 - z * z).sqrt();
            let phi = golden * k as f64;
            let v = DVector::from_column_slice(&[rho * phi.cos(), rho * phi.sin(), z]);
            let r = projection_radius(points, &v);
            push(r, v, &mut best);
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
        for _ in 0..cfg.samples {
            let v = random_unit_vector(&mut rng, n);
            let r = projection_radius(points, &v);
            push(r, v, &mut best);
        }
    }
    let mut winner = best[0].clone();
    for (_, v0) in best.into_iter().take(3) {
        let (r, v) = nelder_mead_on_sphere(points, &v0, cfg.refine_iters);
        if r < winner.0 {
            winner = (r, v);
        }
    }
    (winner.0, canonical_direction(&winner.1))
}

/// Nelder-Mead minimization of the projection radius over a local chart of
/// the direction sphere.
fn nelder_mead_on_sphere(
    points: &[DVector<f64>],
    v0: &DVector<f64>,
    iters: usize,
) -> (f64, DVector<f64>) {
    let n = v0.len();
    let dim = n - 1;
    let unit = v0 / v0.norm();
    let basis = orthonormal_complement(&unit);
    let lift = |theta: &DVector<f64>| {
        let mut v = unit.clone();
        for (t, b) in theta.iter().zip(&basis) {
            v += b * *t;
        }
        let norm = v.norm();
        v / norm
    };
    let f = |theta: &DVector<f64>| projection_radius(points, &lift(theta));
    let mut simplex: Vec<(f64, DVector<f64>)> = Vec::with_capacity(dim + 1);
    let zero = DVector::zeros(dim);
    simplex.push((f(&zero), zero.clone()));
    for i in 0..dim {
        let mut t = zero.clone();
        t[i] = 0.02;
        simplex.push((f(&t), t));
    }
    for _ in 0..iters {
        simplex.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let best = simplex[0].0;
        let worst = simplex[dim].0;
        if worst - best < 1e-14 * (1.0 + best) {
            break;
        }
        let centroid = {
            let mut c = DVector::zeros(dim);
            for (_, t) in &simplex[..dim] {
                c += t;
            }
            c / dim as f64
        };
        let reflect = &centroid * 2.0 - &simplex[dim].1;
        let fr = f(&reflect);
        if fr < simplex[0].0 {
            let expand = &centroid * 3.0 - &simplex[dim].1 * 2.0;
            let fe = f(&expand);
            simplex[dim] = if fe < fr { (fe, expand) } else { (fr, reflect) };
        } else if fr < simplex[dim - 1].0 {
            simplex[dim] = (fr, reflect);
        } else {
            let contract = (&centroid + &simplex[dim].1) * 0.5;
            let fc = f(&contract);
            if fc < simplex[dim].0 {
                simplex[dim] = (fc, contract);
            } else {
                let best_point = simplex[0].1.clone();
                for entry in simplex.iter_mut().skip(1) {
                    let t = (&entry.1 + &best_point) * 0.5;
                    *entry = (f(&t), t);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    (simplex[0].0, lift(&simplex[0].1))
}

type V3 = [f64; 3];

fn v3_from(p: &DVector<f64>) -> V3 {
    [p[0], p[1], p[2]]
}

fn add(a: V3, b: V3) -> V3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn scale3(a: V3, t: f64) -> V3 {
    [a[0] * t, a[1] * t, a[2] * t]
}

fn dot3(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3a(a: V3, b: V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Orthonormal pair-adapted frame: x along the edge, (y, z) spanning the
/// normal plane.
struct PairFrame {
    origin: V3,
    a: f64,
    x: V3,
    y: V3,
    z: V3,
}

fn pair_frame(s: &SimplexN, i: usize, j: usize) -> PairFrame {
    let origin = v3_from(s.vertex(i));
    let edge = v3_from(&(s.vertex(j) - s.vertex(i)));
    let a = dot3(edge, edge).sqrt();
    let x = scale3(edge, 1.0 / a);
    // Seed with the coordinate axis least aligned with x.
    let pivot = (0..3)
        .min_by(|&p, &q| x[p].abs().partial_cmp(&x[q].abs()).unwrap())
        .unwrap();
    let mut y = [0.0; 3];
    y[pivot] = 1.0;
    let along = dot3(y, x);
    for k in 0..3 {
        y[k] -= along * x[k];
    }
    let norm = dot3(y, y).sqrt();
    let y = scale3(y, 1.0 / norm);
    let z = cross3a(x, y);
    PairFrame { origin, a, x, y, z }
}

/// Axis line of a family member, as (point, direction).
fn family_line(frame: &PairFrame, family: Witness, r: f64, psi: f64) -> Option<(V3, V3)> {
    match family {
        Witness::PairCylinderA => {
            let offset = add(scale3(frame.y, r * psi.cos()), scale3(frame.z, r * psi.sin()));
            Some((add(frame.origin, offset), frame.x))
        }
        Witness::PairConeB => {
            let sin_t = 2.0 * r / frame.a;
            if sin_t >= 1.0 {
                return None;
            }
            let cos_t = (1.0 - sin_t * sin_t).sqrt();
            let apex = add(frame.origin, scale3(frame.x, frame.a / 2.0));
            let radial = add(scale3(frame.y, psi.cos()), scale3(frame.z, psi.sin()));
            Some((apex, add(scale3(frame.x, cos_t), scale3(radial, sin_t))))
        }
        Witness::PairBisectorC => {
            let rho_sq = r * r - frame.a * frame.a / 4.0;
            if rho_sq < 0.0 {
                return None;
            }
            let rho = rho_sq.sqrt();
            let mid = add(frame.origin, scale3(frame.x, frame.a / 2.0));
            let radial = add(scale3(frame.y, psi.cos()), scale3(frame.z, psi.sin()));
            let touch = add(mid, scale3(radial, rho));
            let dir = add(scale3(frame.y, -psi.sin()), scale3(frame.z, psi.cos()));
            Some((touch, dir))
        }
        Witness::Circumscribing4Pts => None,
    }
}

fn line_distance(point: V3, dir: V3, p: V3) -> f64 {
    let d = [p[0] - point[0], p[1] - point[1], p[2] - point[2]];
    let along = dot3(d, dir);
    let perp = [d[0] - along * dir[0], d[1] - along * dir[1], d[2] - along * dir[2]];
    dot3(perp, perp).sqrt()
}

/// Best candidate of one restricted family for an ordered (pair, third)
/// choice: smallest feasible coupled radius such that some family member
/// covers the two non-pair vertices, subject to the third-vertex contact
/// condition. `Ok(None)` when the family exists but yields no candidate
/// here; `EmptyFamily` when its radius domain is void below `r_hi`.
fn family_candidate(
    s: &SimplexN,
    pair: (usize, usize),
    third: usize,
    family: Witness,
    r_hi: f64,
    cfg: &EncloseConfig,
) -> Result<Option<(Cylinder, Witness)>> {
    let (i, j) = pair;
    let remaining: Vec<usize> = (0..4).filter(|&k| k != i && k != j).collect();
    debug_assert!(remaining.contains(&third));
    let frame = pair_frame(s, i, j);
    let scale = s.max_edge_length();
    let (r_lo, r_hi_eff) = match family {
        Witness::PairCylinderA => (1e-9 * scale, r_hi),
        Witness::PairConeB => (1e-9 * scale, r_hi.min(frame.a / 2.0 * (1.0 - 1e-12))),
        Witness::PairBisectorC => (frame.a / 2.0, r_hi),
        Witness::Circumscribing4Pts => unreachable!("not a pair family"),
    };
    if r_lo >= r_hi_eff {
        return Err(Error::EmptyFamily(format!(
            "{family:?} needs radii in a void range (lo {r_lo:.6}, hi {r_hi_eff:.6})"
        )));
    }
    let others: Vec<V3> = remaining.iter().map(|&k| v3_from(s.vertex(k))).collect();
    // Worst distance to the two non-pair vertices, minimized over the
    // family parameter by a seeded golden-section search.
    let inner = |r: f64| -> (f64, f64) {
        let eval = |psi: f64| -> f64 {
            match family_line(&frame, family, r, psi) {
                Some((point, dir)) => others
                    .iter()
                    .map(|&p| line_distance(point, dir, p))
                    .fold(f64::NEG_INFINITY, f64::max),
                None => f64::INFINITY,
            }
        };
        let grid = cfg.family_grid;
        let (mut best_k, mut best_val) = (0, f64::INFINITY);
        for k in 0..grid {
            let psi = 2.0 * std::f64::consts::PI * k as f64 / grid as f64;
            let val = eval(psi);
            if val < best_val {
                best_val = val;
                best_k = k;
            }
        }
        let step = 2.0 * std::f64::consts::PI / grid as f64;
        let (mut lo, mut hi) = (best_k as f64 * step - step, best_k as f64 * step + step);
        let phi = (5f64.sqrt() - 1.0) / 2.0;
        let (mut c, mut d) = (hi - phi * (hi - lo), lo + phi * (hi - lo));
        let (mut fc, mut fd) = (eval(c), eval(d));
        for _ in 0..48 {
            if fc < fd {
                hi = d;
                d = c;
                fd = fc;
                c = hi - phi * (hi - lo);
                fc = eval(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + phi * (hi - lo);
                fd = eval(d);
            }
        }
        let psi = 0.5 * (lo + hi);
        (eval(psi), psi)
    };
    let feasible = |r: f64| inner(r).0 <= r * (1.0 + 1e-12) + 1e-15 * scale;

    // Locate the feasibility transition on a scan, then bisect.
    let scan = cfg.radius_scan;
    let mut bracket: Option<(f64, f64)> = None;
    let mut prev = r_lo;
    let mut prev_feasible = feasible(r_lo);
    if prev_feasible {
        bracket = Some((r_lo, r_lo));
    } else {
        for k in 1..=scan {
            let r = r_lo + (r_hi_eff - r_lo) * k as f64 / scan as f64;
            let feas = feasible(r);
            if feas {
                bracket = Some((prev, r));
                break;
            }
            prev = r;
            prev_feasible = feas;
        }
    }
    let _ = prev_feasible;
    let Some((mut lo, mut hi)) = bracket else {
        return Ok(None);
    };
    for _ in 0..cfg.bisect_iters {
        if hi - lo < 1e-14 * (1.0 + hi) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let r = hi;
    let (_, psi) = inner(r);
    let Some((point, dir)) = family_line(&frame, family, r, psi) else {
        return Ok(None);
    };
    let axis = AxisLine::through(
        &DVector::from_column_slice(&point),
        &DVector::from_column_slice(&dir),
    )?;
    // Defining contacts: the pair lies on the surface by construction; the
    // designated third vertex must too, else this configuration belongs to
    // the enumeration step with the other third choice.
    let contact_tol = 1e-8 * scale.max(1.0);
    if (axis.distance(s.vertex(i)) - r).abs() > contact_tol
        || (axis.distance(s.vertex(j)) - r).abs() > contact_tol
        || (axis.distance(s.vertex(third)) - r).abs() > contact_tol
    {
        return Ok(None);
    }
    // Enclosure of all vertices.
    let radius = s
        .vertices()
        .iter()
        .map(|p| axis.distance(p))
        .fold(r, f64::max);
    if radius > r * (1.0 + 1e-9) {
        return Ok(None);
    }
    Ok(Some((Cylinder::new(axis, radius)?, family)))
}

/// All valid restricted-axis candidates for an ordered (pair, third)
/// choice, over the three families, below the radius bound `r_hi`.
pub fn case_ii_candidates(
    s: &SimplexN,
    pair: (usize, usize),
    third: usize,
    r_hi: f64,
    cfg: &EncloseConfig,
) -> Result<Vec<(Cylinder, Witness)>> {
    if s.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: s.dim() });
    }
    let mut out = Vec::new();
    let mut void = 0;
    for family in [Witness::PairCylinderA, Witness::PairConeB, Witness::PairBisectorC] {
        match family_candidate(s, pair, third, family, r_hi, cfg) {
            Ok(Some(c)) => out.push(c),
            Ok(None) => {}
            Err(Error::EmptyFamily(_)) => void += 1,
            Err(e) => return Err(e),
        }
    }
    if out.is_empty() && void == 3 {
        return Err(Error::EmptyFamily(format!(
            "all pair families void for pair {pair:?} below radius {r_hi:.6}"
        )));
    }
    Ok(out)
}

/// Smallest enclosing cylinder of a tetrahedron: minimum of the
/// circumscribing global optimum and the restricted-axis families, with
/// the guarantee that every vertex lies inside the returned cylinder.
pub fn smallest_enclosing_cylinder(s: &SimplexN, cfg: &EncloseConfig) -> Result<EnclosingResult> {
    if s.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: s.dim() });
    }
    let form = CircumFormulation::build(s)?;
    let points = solve_all(&form, &cfg.solver)?;
    smallest_enclosing_cylinder_from_points(s, cfg, &points)
}

/// Same as [`smallest_enclosing_cylinder`] but reusing already-solved
/// critical points of the circumscribing program.
pub fn smallest_enclosing_cylinder_from_points(
    s: &SimplexN,
    cfg: &EncloseConfig,
    points: &[crate::solver::CriticalPoint],
) -> Result<EnclosingResult> {
    if s.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: s.dim() });
    }
    let circ = global_min(points)?;
    let mut best: (Cylinder, Witness) = (circ, Witness::Circumscribing4Pts);

    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    for &(i, j) in &pairs {
        for third in (0..4).filter(|&k| k != i && k != j) {
            let r_hi = best.0.radius * (1.0 + 1e-9);
            let candidates = match case_ii_candidates(s, (i, j), third, r_hi, cfg) {
                Ok(c) => c,
                Err(Error::EmptyFamily(_)) => continue,
                Err(e) => return Err(e),
            };
            for (cyl, witness) in candidates {
                let better = cyl.radius < best.0.radius * (1.0 - 1e-12)
                    || (cyl.radius <= best.0.radius * (1.0 + 1e-12)
                        && witness.rank() < best.1.rank());
                if better {
                    best = (cyl, witness);
                }
            }
        }
    }

    let (cylinder, witness) = best;
    let scale = s.max_edge_length();
    let support: Vec<usize> = (0..4)
        .filter(|&k| (cylinder.axis.distance(s.vertex(k)) - cylinder.radius).abs() <= 1e-8 * scale.max(1.0))
        .collect();
    let (oracle_radius, oracle_direction) = oracle_min_enclosing(s.vertices(), &cfg.oracle);
    Ok(EnclosingResult {
        oracle_gap: (cylinder.radius - oracle_radius).abs(),
        cylinder,
        witness,
        support,
        oracle_radius,
        oracle_direction,
    })
}
