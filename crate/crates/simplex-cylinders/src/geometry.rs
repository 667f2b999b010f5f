//! Geometric primitives: simplices, axis lines, cylinders, distances,
//! tangency residuals, and axis recovery from a direction vector.
//!
//! All types are immutable after construction and safe to share across
//! threads. Computations are plain `f64` with residual-based acceptance;
//! degenerate inputs are rejected at construction instead of propagating
//! garbage downstream.

use nalgebra::{DMatrix, DVector};

use crate::{Error, Result};

/// Components smaller than this are treated as zero when picking the sign
/// of a canonical direction.
const CANONICAL_EPS: f64 = 1e-12;

/// Relative tolerance of the affine-independence test.
pub const DEGENERACY_TOL: f64 = 1e-10;

/// A nondegenerate simplex in `E^n`: `n + 1` affinely independent vertices.
///
/// The last vertex plays the role of the translated-to-origin base point in
/// every formulation built from the simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexN {
    dim: usize,
    vertices: Vec<DVector<f64>>,
}

impl SimplexN {
    /// Validates vertex counts, finiteness and affine independence.
    ///
    /// Affine independence requires `|det M| >= 1e-10 * (max edge)^n` where
    /// `M` has rows `p_i - p_{n+1}`.
    pub fn new(dim: usize, vertices: Vec<DVector<f64>>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Shape(format!("dimension must be >= 2, got {dim}")));
        }
        if vertices.len() != dim + 1 {
            return Err(Error::Shape(format!(
                "expected {} vertices for dimension {dim}, got {}",
                dim + 1,
                vertices.len()
            )));
        }
        for (i, p) in vertices.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::Shape(format!(
                    "vertex {i} has {} coordinates, expected {dim}",
                    p.len()
                )));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::Shape(format!("vertex {i} has a non-finite coordinate")));
            }
        }
        let s = Self { dim, vertices };
        let det = s.base_matrix().determinant();
        let tol = DEGENERACY_TOL * s.max_edge_length().powi(dim as i32);
        if det.abs() < tol {
            return Err(Error::SingularMatrix { det: det.abs(), tol });
        }
        Ok(s)
    }

    pub fn from_rows(dim: usize, rows: &[Vec<f64>]) -> Result<Self> {
        let vertices = rows
            .iter()
            .map(|r| DVector::from_column_slice(r))
            .collect();
        Self::new(dim, vertices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[DVector<f64>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &DVector<f64> {
        &self.vertices[i]
    }

    /// The base vertex `p_{n+1}` that gets translated to the origin.
    pub fn base_vertex(&self) -> &DVector<f64> {
        &self.vertices[self.dim]
    }

    /// `p_i - p_{n+1}` for `i = 1..n`; the base vertex maps to the origin.
    pub fn translated(&self) -> Vec<DVector<f64>> {
        let base = self.base_vertex().clone();
        self.vertices[..self.dim].iter().map(|p| p - &base).collect()
    }

    /// Matrix `M` with rows `p_i - p_{n+1}`.
    pub fn base_matrix(&self) -> DMatrix<f64> {
        let rows = self.translated();
        DMatrix::from_fn(self.dim, self.dim, |i, j| rows[i][j])
    }

    pub fn max_edge_length(&self) -> f64 {
        let mut best: f64 = 0.0;
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                best = best.max((&self.vertices[i] - &self.vertices[j]).norm());
            }
        }
        best
    }

    /// Largest vertex norm after translating the base vertex to the origin.
    /// Used as the data scale for residual tolerances.
    pub fn data_scale(&self) -> f64 {
        self.translated().iter().map(|q| q.norm()).fold(0.0, f64::max)
    }

    /// Unit canonical directions of all `C(n+1, 2)` edges.
    pub fn edge_directions(&self) -> Vec<DVector<f64>> {
        let mut dirs = Vec::new();
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                dirs.push(canonical_direction(&(&self.vertices[i] - &self.vertices[j])));
            }
        }
        dirs
    }

    /// Uniform rescale of all vertices by `t > 0`.
    pub fn scaled(&self, t: f64) -> Self {
        Self {
            dim: self.dim,
            vertices: self.vertices.iter().map(|p| p * t).collect(),
        }
    }
}

/// Unit vector equivalent to `v` up to sign, with the first component of
/// magnitude above `1e-12` made positive. Houses the `v == -v`
/// identification of axis directions.
pub fn canonical_direction(v: &DVector<f64>) -> DVector<f64> {
    let norm = v.norm();
    // Skip the division when already unit so the map is exactly idempotent.
    let mut u = if (norm - 1.0).abs() <= 4.0 * f64::EPSILON { v.clone() } else { v / norm };
    if let Some(first) = u.iter().find(|x| x.abs() > CANONICAL_EPS) {
        if *first < 0.0 {
            u.neg_mut();
        }
    }
    u
}

/// A line in `E^n` stored as `(u, v)` where `v` is a canonical unit
/// direction and `u` is the point of the line closest to the origin
/// (`u . v = 0`).
#[derive(Debug, Clone, PartialEq)]
pub struct AxisLine {
    u: DVector<f64>,
    v: DVector<f64>,
}

impl AxisLine {
    /// Line through `point` with direction `dir` (any nonzero vector).
    pub fn through(point: &DVector<f64>, dir: &DVector<f64>) -> Result<Self> {
        let norm = dir.norm();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::Shape("axis direction must be nonzero".into()));
        }
        let v = canonical_direction(dir);
        let u = point - &v * point.dot(&v);
        Ok(Self { u, v })
    }

    /// Moment point: the point of the line closest to the origin.
    pub fn moment(&self) -> &DVector<f64> {
        &self.u
    }

    pub fn direction(&self) -> &DVector<f64> {
        &self.v
    }

    /// Distance from `p` to the line.
    pub fn distance(&self, p: &DVector<f64>) -> f64 {
        let d = p - &self.u;
        let along = d.dot(&self.v);
        (&d - &self.v * along).norm()
    }
}

/// Distance from a point to a line; `||(p - u) - ((p - u).v) v||`.
pub fn point_line_distance(p: &DVector<f64>, line: &AxisLine) -> f64 {
    line.distance(p)
}

/// Homogeneous quartic-form tangency residual
/// `v^2 u^2 - 2 v^2 (u.p) + v^2 p^2 - (v.p)^2 - r^2 v^2`.
///
/// Zero exactly when `dist(p, line) = r`; for a unit direction with
/// `u . v = 0` it equals `dist^2 - r^2`.
pub fn tangency_residual(line: &AxisLine, p: &DVector<f64>, r: f64) -> f64 {
    let u = &line.u;
    let v = &line.v;
    let v2 = v.dot(v);
    let vp = v.dot(p);
    v2 * u.dot(u) - 2.0 * v2 * u.dot(p) + v2 * p.dot(p) - vp * vp - r * r * v2
}

/// A circular cylinder: axis line plus positive radius.
#[derive(Debug, Clone, PartialEq)]
pub struct Cylinder {
    pub axis: AxisLine,
    pub radius: f64,
}

impl Cylinder {
    pub fn new(axis: AxisLine, radius: f64) -> Result<Self> {
        if radius <= 0.0 || !radius.is_finite() {
            return Err(Error::Shape(format!("cylinder radius must be positive, got {radius}")));
        }
        Ok(Self { axis, radius })
    }

    /// Max over `points` of the signed surface gap `dist - radius`.
    pub fn max_violation(&self, points: &[DVector<f64>]) -> f64 {
        points
            .iter()
            .map(|p| self.axis.distance(p) - self.radius)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Axis data recovered from a direction: moment point in the translated
/// frame, radius, and the cubic residual `u . v` that vanishes exactly when
/// the line circumscribes.
#[derive(Debug, Clone)]
pub struct RecoveredAxis {
    /// Closest-to-origin point of the candidate axis, in the frame where the
    /// base vertex sits at the origin.
    pub u_local: DVector<f64>,
    /// Unit direction the axis was recovered from.
    pub v: DVector<f64>,
    /// `||u_local||`; equals the circumscribing radius when `g1_residual = 0`.
    pub radius: f64,
    /// `u_local . v`.
    pub g1_residual: f64,
}

impl RecoveredAxis {
    /// The axis as a line in the original coordinates.
    pub fn world_axis(&self, s: &SimplexN) -> Result<AxisLine> {
        AxisLine::through(&(&self.u_local + s.base_vertex()), &self.v)
    }
}

/// Solves the linear system `2 (u . q_i) = q_i^2 - (v . q_i)^2` for the axis
/// point `u` in the translated frame (`q_i = p_i - p_{n+1}`, unit `v`).
///
/// All `n + 1` vertices are equidistant from the recovered line exactly when
/// `g1_residual = 0`.
pub fn recover_axis(v: &DVector<f64>, s: &SimplexN) -> Result<RecoveredAxis> {
    if v.len() != s.dim() {
        return Err(Error::DimensionMismatch { expected: s.dim(), got: v.len() });
    }
    let v = v / v.norm();
    let m = s.base_matrix();
    let det = m.determinant();
    let tol = DEGENERACY_TOL * s.max_edge_length().powi(s.dim() as i32);
    if det.abs() < tol {
        return Err(Error::SingularMatrix { det: det.abs(), tol });
    }
    let q = s.translated();
    let rhs = DVector::from_fn(s.dim(), |i, _| {
        let vq = v.dot(&q[i]);
        0.5 * (q[i].dot(&q[i]) - vq * vq)
    });
    let u = m.lu().solve(&rhs).ok_or(Error::SingularMatrix { det: det.abs(), tol })?;
    let g1_residual = u.dot(&v);
    Ok(RecoveredAxis { radius: u.norm(), u_local: u, v, g1_residual })
}

/// Areas of the four triangular facets of a 3-simplex, indexed by the
/// opposite vertex.
pub fn face_areas_e3(s: &SimplexN) -> Result<[f64; 4]> {
    if s.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: s.dim() });
    }
    let mut areas = [0.0; 4];
    for (opposite, area) in areas.iter_mut().enumerate() {
        let rest: Vec<&DVector<f64>> = (0..4).filter(|&i| i != opposite).map(|i| s.vertex(i)).collect();
        let e1 = rest[1] - rest[0];
        let e2 = rest[2] - rest[0];
        *area = 0.5 * cross3(&e1, &e2).norm();
    }
    Ok(areas)
}

/// Cross product of two vectors in `E^3`.
pub fn cross3(a: &DVector<f64>, b: &DVector<f64>) -> DVector<f64> {
    assert_eq!(a.len(), 3);
    assert_eq!(b.len(), 3);
    DVector::from_column_slice(&[
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ])
}

/// Vertices of the equifacial simplex carved from the box `[-w1,w1] x
/// [-w2,w2] x [-w3,w3]`: four pairwise non-adjacent box corners.
pub fn box_simplex(w: [f64; 3]) -> Result<SimplexN> {
    let [w1, w2, w3] = w;
    SimplexN::from_rows(
        3,
        &[
            vec![w1, w2, w3],
            vec![w1, -w2, -w3],
            vec![-w1, w2, -w3],
            vec![-w1, -w2, w3],
        ],
    )
}
