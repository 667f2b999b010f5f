//! Polynomial program for circumscribing cylinders of a simplex in `E^n`.
//!
//! With the base vertex translated to the origin and `M` the matrix of the
//! remaining vertices, a unit direction `v` determines the candidate axis
//! point `u(v) = (1/2) M^{-1} [v^2 q_i^2 - (v.q_i)^2]_i`. Writing `w(v)` for
//! the same expression without the `1/v^2` normalization, the program is
//!
//! ```text
//! minimize  f(v)  = ||w(v)||^2          (homogeneous quartic; r^2 on g2 = 0)
//! s.t.      g1(v) = w(v) . v   = 0      (homogeneous cubic)
//!           g2(v) = v . v - 1  = 0
//! ```
//!
//! Critical directions satisfy `grad f = l1 grad g1 + l2 grad g2`. For
//! `n = 3` eliminating the multipliers gives a degree-6 determinant, hence a
//! Bezout count of `3 * 6 * 2 = 36`; the general bound is `2 * 3^(n+1)` and
//! the sharper mixed-volume count is `6 * S(n+1, 3)` in terms of Stirling
//! numbers of the second kind.

use nalgebra::{DMatrix, DVector};

use crate::geometry::SimplexN;
use crate::{Error, Result};

/// Evaluators for the objective, constraints, gradients and Hessians of the
/// circumscribing-cylinder program of a fixed simplex. Immutable and
/// read-only after construction; safe to share across threads.
#[derive(Debug, Clone)]
pub struct CircumFormulation {
    dim: usize,
    simplex: SimplexN,
    /// Translated vertices `q_i = p_i - p_{n+1}`, `i = 1..n`.
    translated: Vec<DVector<f64>>,
    m_inv: DMatrix<f64>,
    /// Constant Hessians of the components of `w`.
    w_hessians: Vec<DMatrix<f64>>,
}

impl CircumFormulation {
    pub fn build(s: &SimplexN) -> Result<Self> {
        let n = s.dim();
        let m = s.base_matrix();
        let det = m.determinant();
        let tol = crate::geometry::DEGENERACY_TOL * s.max_edge_length().powi(n as i32);
        if det.abs() < tol {
            return Err(Error::SingularMatrix { det: det.abs(), tol });
        }
        let m_inv = m.try_inverse().ok_or(Error::SingularMatrix { det: det.abs(), tol })?;
        let translated = s.translated();
        // Hess h_i = 2 (q_i^2 I - q_i q_i^T), constant in v; w_j mixes them
        // through the inverse matrix.
        let h_hessians: Vec<DMatrix<f64>> = translated
            .iter()
            .map(|q| {
                let qq = q * q.transpose();
                (DMatrix::identity(n, n) * q.dot(q) - qq) * 2.0
            })
            .collect();
        let w_hessians = (0..n)
            .map(|j| {
                let mut acc = DMatrix::zeros(n, n);
                for (i, h) in h_hessians.iter().enumerate() {
                    acc += h * (0.5 * m_inv[(j, i)]);
                }
                acc
            })
            .collect();
        Ok(Self { dim: n, simplex: s.clone(), translated, m_inv, w_hessians })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simplex(&self) -> &SimplexN {
        &self.simplex
    }

    /// `h_i(v) = v^2 q_i^2 - (v . q_i)^2`.
    fn quad_residuals(&self, v: &DVector<f64>) -> DVector<f64> {
        let v2 = v.dot(v);
        DVector::from_fn(self.dim, |i, _| {
            let q = &self.translated[i];
            let vq = v.dot(q);
            v2 * q.dot(q) - vq * vq
        })
    }

    /// `w(v) = (1/2) M^{-1} h(v)`; equals `v^2 u(v)`.
    pub fn moment_numerator(&self, v: &DVector<f64>) -> DVector<f64> {
        &self.m_inv * self.quad_residuals(v) * 0.5
    }

    /// Objective `f(v) = ||w(v)||^2`; the squared radius on the unit sphere.
    pub fn objective(&self, v: &DVector<f64>) -> f64 {
        self.moment_numerator(v).norm_squared()
    }

    /// Cubic constraint `g1(v) = w(v) . v`.
    pub fn cubic(&self, v: &DVector<f64>) -> f64 {
        self.moment_numerator(v).dot(v)
    }

    /// Sphere constraint `g2(v) = v^2 - 1`.
    pub fn unit(&self, v: &DVector<f64>) -> f64 {
        v.dot(v) - 1.0
    }

    /// Jacobian of `w`: entry `(j, a) = d w_j / d v_a`.
    fn moment_jacobian(&self, v: &DVector<f64>) -> DMatrix<f64> {
        // grad h_i = 2 q_i^2 v - 2 (v.q_i) q_i, row i.
        let jh = DMatrix::from_fn(self.dim, self.dim, |i, a| {
            let q = &self.translated[i];
            2.0 * q.dot(q) * v[a] - 2.0 * v.dot(q) * q[a]
        });
        &self.m_inv * jh * 0.5
    }

    /// Analytic gradients of `(f, g1, g2)` at `v`.
    pub fn gradients(&self, v: &DVector<f64>) -> (DVector<f64>, DVector<f64>, DVector<f64>) {
        let w = self.moment_numerator(v);
        let jw = self.moment_jacobian(v);
        let grad_f = jw.transpose() * &w * 2.0;
        let grad_g1 = jw.transpose() * v + &w;
        let grad_g2 = v * 2.0;
        (grad_f, grad_g1, grad_g2)
    }

    /// Hessian of `f` at `v`.
    pub fn hess_objective(&self, v: &DVector<f64>) -> DMatrix<f64> {
        let w = self.moment_numerator(v);
        let jw = self.moment_jacobian(v);
        let mut acc = jw.transpose() * &jw;
        for j in 0..self.dim {
            acc += &self.w_hessians[j] * w[j];
        }
        acc * 2.0
    }

    /// Hessian of `g1` at `v`.
    pub fn hess_cubic(&self, v: &DVector<f64>) -> DMatrix<f64> {
        let jw = self.moment_jacobian(v);
        let mut acc = jw.transpose() + jw;
        for j in 0..self.dim {
            acc += &self.w_hessians[j] * v[j];
        }
        acc
    }

    /// `det(-grad f | grad g1 | grad g2)`: vanishing is necessary for a
    /// local extremum in `E^3`. Homogeneous of degree 6.
    pub fn optimality_determinant_e3(&self, v: &DVector<f64>) -> Result<f64> {
        if self.dim != 3 {
            return Err(Error::DimensionMismatch { expected: 3, got: self.dim });
        }
        let (gf, g1, g2) = self.gradients(v);
        let m = DMatrix::from_fn(3, 3, |i, j| match j {
            0 => -gf[i],
            1 => g1[i],
            _ => g2[i],
        });
        Ok(m.determinant())
    }

    /// All `C(n, 3)` 3x3 minors of the `n x 3` gradient matrix
    /// `(-grad f | grad g1 | grad g2)`, in lexicographic row order. All
    /// vanish at critical directions.
    pub fn optimality_minors(&self, v: &DVector<f64>) -> Result<Vec<f64>> {
        if self.dim < 3 {
            return Err(Error::DimensionMismatch { expected: 3, got: self.dim });
        }
        let (gf, g1, g2) = self.gradients(v);
        let cols = [gf.map(|x| -x), g1, g2];
        let mut minors = Vec::new();
        for a in 0..self.dim {
            for b in (a + 1)..self.dim {
                for c in (b + 1)..self.dim {
                    let rows = [a, b, c];
                    let m = DMatrix::from_fn(3, 3, |i, j| cols[j][rows[i]]);
                    minors.push(m.determinant());
                }
            }
        }
        Ok(minors)
    }
}

/// Coefficients of the cubic constraint expressed in the vertex basis
/// `v = sum t_i p_i`:
/// `(1/2) sum_{i != j} alpha_ij t_i^2 t_j + sum_{i<j<k} beta_ijk t_i t_j t_k`.
///
/// `alpha_ij` is the squared area of the parallelogram spanned by `p_i, p_j`
/// (a 2x2 Gram determinant); `beta_ijk` sums three mixed 2x2 determinants.
#[derive(Debug, Clone)]
pub struct TCubicCoefficients {
    dim: usize,
    alpha: DMatrix<f64>,
    beta: Vec<((usize, usize, usize), f64)>,
}

impl TCubicCoefficients {
    pub fn alpha(&self, i: usize, j: usize) -> f64 {
        self.alpha[(i, j)]
    }

    pub fn beta(&self) -> &[((usize, usize, usize), f64)] {
        &self.beta
    }

    /// Evaluates the cubic at basis coordinates `t`.
    pub fn eval(&self, t: &DVector<f64>) -> f64 {
        assert_eq!(t.len(), self.dim);
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    acc += 0.5 * self.alpha[(i, j)] * t[i] * t[i] * t[j];
                }
            }
        }
        for &((i, j, k), b) in &self.beta {
            acc += b * t[i] * t[j] * t[k];
        }
        acc
    }
}

/// Edge-direction form of the cubic constraint: at `t = e_i` and
/// `t = e_i - e_j` the cubic vanishes, which is why every edge direction of
/// the simplex is the direction of a circumscribing cylinder.
pub fn t_cubic(s: &SimplexN) -> TCubicCoefficients {
    let q = s.translated();
    let n = s.dim();
    let gram = DMatrix::from_fn(n, n, |i, j| q[i].dot(&q[j]));
    let alpha = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            0.0
        } else {
            gram[(i, i)] * gram[(j, j)] - gram[(i, j)] * gram[(i, j)]
        }
    });
    let det2 = |a: f64, b: f64, c: f64, d: f64| a * d - b * c;
    let mut beta = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let b = det2(gram[(i, j)], gram[(i, k)], gram[(k, j)], gram[(k, k)])
                    + det2(gram[(i, k)], gram[(i, j)], gram[(j, k)], gram[(j, j)])
                    + det2(gram[(j, k)], gram[(j, i)], gram[(i, k)], gram[(i, i)]);
                beta.push(((i, j, k), b));
            }
        }
    }
    TCubicCoefficients { dim: n, alpha, beta }
}

/// Solution-count bounds for the critical-direction system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BezoutBounds {
    /// Bezout number 36 of the reduced three-dimensional system
    /// (degrees 3, 6, 2); only defined for `n = 3`.
    pub e3_system: Option<u64>,
    /// Bezout number `2 * 3^(n+1)` of the Lagrange system.
    pub general: u64,
    /// Mixed-volume bound `6 * S(n+1, 3)`.
    pub stirling: u64,
}

pub fn bezout_bounds(n: usize) -> BezoutBounds {
    assert!(n >= 2, "bounds are defined for n >= 2");
    BezoutBounds {
        e3_system: (n == 3).then_some(36),
        general: 2 * 3u64.pow(n as u32 + 1),
        stirling: 6 * stirling2(n + 1, 3),
    }
}

/// Stirling number of the second kind `S(m, k)`: partitions of an `m`-set
/// into `k` nonempty blocks, by the recurrence
/// `S(m, k) = k S(m-1, k) + S(m-1, k-1)`.
pub fn stirling2(m: usize, k: usize) -> u64 {
    assert!(k <= m, "stirling2 requires k <= m");
    if m == 0 {
        return 1; // S(0, 0)
    }
    if k == 0 {
        return 0;
    }
    let mut row = vec![0u64; k + 1];
    row[0] = 1; // S(0, 0)
    for _ in 1..=m {
        for j in (1..=k).rev() {
            row[j] = (j as u64) * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{box_simplex, recover_axis};
    use nalgebra::DVector;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

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

    fn random_unit(rng: &mut ChaCha8Rng, dim: usize) -> DVector<f64> {
        loop {
            let v = DVector::from_fn(dim, |_, _| rng.random_range(-1.0..1.0));
            let n = v.norm();
            if n > 1e-3 {
                return v / n;
            }
        }
    }

    #[test]
    fn edge_directions_satisfy_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for dim in 2..=6 {
            let s = random_simplex(&mut rng, dim);
            let form = CircumFormulation::build(&s).unwrap();
            for v in s.edge_directions() {
                assert!(form.cubic(&v).abs() < 1e-12 * s.data_scale().powi(4).max(1.0));
            }
        }
    }

    #[test]
    fn unit_constraint_on_basis_vector() {
        let s = box_simplex([0.5, 0.5, 0.5]).unwrap();
        let form = CircumFormulation::build(&s).unwrap();
        let e1 = DVector::from_column_slice(&[1.0, 0.0, 0.0]);
        assert_eq!(form.unit(&e1), 0.0);
    }

    #[test]
    fn objective_matches_recovered_radius() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..200 {
            let dim = rng.random_range(2..=5);
            let s = random_simplex(&mut rng, dim);
            let form = CircumFormulation::build(&s).unwrap();
            let v = random_unit(&mut rng, dim);
            let rec = recover_axis(&v, &s).unwrap();
            let f = form.objective(&v);
            assert!(
                (f - rec.radius * rec.radius).abs() <= 1e-10 * f.max(1.0),
                "f = {f}, r^2 = {}",
                rec.radius * rec.radius
            );
        }
    }

    #[test]
    fn gradients_match_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let h = 1e-5;
        for _ in 0..60 {
            let dim = rng.random_range(2..=5);
            let s = random_simplex(&mut rng, dim);
            let form = CircumFormulation::build(&s).unwrap();
            let v = random_unit(&mut rng, dim);
            let (gf, g1, g2) = form.gradients(&v);
            assert_eq!(g2, &v * 2.0, "sphere gradient is 2v exactly");
            for a in 0..dim {
                let mut vp = v.clone();
                let mut vm = v.clone();
                vp[a] += h;
                vm[a] -= h;
                let checks = [
                    (gf[a], (form.objective(&vp) - form.objective(&vm)) / (2.0 * h)),
                    (g1[a], (form.cubic(&vp) - form.cubic(&vm)) / (2.0 * h)),
                    (g2[a], (form.unit(&vp) - form.unit(&vm)) / (2.0 * h)),
                ];
                for (analytic, fd) in checks {
                    let denom = analytic.abs().max(fd.abs()).max(1e-6);
                    assert!(
                        (analytic - fd).abs() / denom < 1e-6,
                        "analytic {analytic} vs fd {fd}"
                    );
                }
            }
        }
    }

    #[test]
    fn hessians_match_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let h = 1e-5;
        for _ in 0..20 {
            let dim = rng.random_range(2..=4);
            let s = random_simplex(&mut rng, dim);
            let form = CircumFormulation::build(&s).unwrap();
            let v = random_unit(&mut rng, dim);
            let hf = form.hess_objective(&v);
            let hg1 = form.hess_cubic(&v);
            for a in 0..dim {
                let mut vp = v.clone();
                let mut vm = v.clone();
                vp[a] += h;
                vm[a] -= h;
                let (gfp, g1p, _) = form.gradients(&vp);
                let (gfm, g1m, _) = form.gradients(&vm);
                for b in 0..dim {
                    let fd_f = (gfp[b] - gfm[b]) / (2.0 * h);
                    let fd_g1 = (g1p[b] - g1m[b]) / (2.0 * h);
                    assert!((hf[(b, a)] - fd_f).abs() < 1e-5 * (1.0 + fd_f.abs()));
                    assert!((hg1[(b, a)] - fd_g1).abs() < 1e-5 * (1.0 + fd_g1.abs()));
                }
            }
        }
    }

    #[test]
    fn homogeneity_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..50 {
            let dim = rng.random_range(2..=5);
            let s = random_simplex(&mut rng, dim);
            let form = CircumFormulation::build(&s).unwrap();
            let v = random_unit(&mut rng, dim);
            let t = rng.random_range(0.3..2.5);
            let tv = &v * t;
            assert!((form.cubic(&tv) - t.powi(3) * form.cubic(&v)).abs() < 1e-9 * (1.0 + form.cubic(&v).abs()));
            assert!((form.objective(&tv) - t.powi(4) * form.objective(&v)).abs() < 1e-9 * (1.0 + form.objective(&v)));
            let (_, g1v, _) = form.gradients(&v);
            let (_, g1tv, _) = form.gradients(&(&v * 2.0));
            assert!((&g1tv - &g1v * 4.0).norm() < 1e-9 * (1.0 + g1v.norm()));
        }
    }

    #[test]
    fn parity_of_objective_and_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..50 {
            let dim = rng.random_range(2..=5);
            let s = random_simplex(&mut rng, dim);
            let form = CircumFormulation::build(&s).unwrap();
            let v = random_unit(&mut rng, dim);
            let neg = -&v;
            assert!((form.objective(&v) - form.objective(&neg)).abs() < 1e-12);
            assert!((form.cubic(&v) + form.cubic(&neg)).abs() < 1e-12);
            assert!((form.unit(&v) - form.unit(&neg)).abs() < 1e-12);
        }
    }

    #[test]
    fn determinant_homogeneous_degree_six() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        let s = random_simplex(&mut rng, 3);
        let form = CircumFormulation::build(&s).unwrap();
        for _ in 0..20 {
            let v = random_unit(&mut rng, 3);
            let d1 = form.optimality_determinant_e3(&v).unwrap();
            let d2 = form.optimality_determinant_e3(&(&v * 2.0)).unwrap();
            assert!((d2 - 64.0 * d1).abs() < 1e-8 * (1.0 + d1.abs() * 64.0));
        }
    }

    #[test]
    fn determinant_nonzero_off_critical() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let s = random_simplex(&mut rng, 3);
        let form = CircumFormulation::build(&s).unwrap();
        let mut found_nonzero = false;
        for _ in 0..20 {
            let v = random_unit(&mut rng, 3);
            if form.cubic(&v).abs() > 1e-3 {
                found_nonzero |= form.optimality_determinant_e3(&v).unwrap().abs() > 1e-10;
            }
        }
        assert!(found_nonzero);
    }

    #[test]
    fn single_minor_equals_determinant_for_n3() {
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        let s = random_simplex(&mut rng, 3);
        let form = CircumFormulation::build(&s).unwrap();
        let v = random_unit(&mut rng, 3);
        let minors = form.optimality_minors(&v).unwrap();
        assert_eq!(minors.len(), 1);
        assert!((minors[0] - form.optimality_determinant_e3(&v).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn minors_vanish_when_objective_gradient_vanishes() {
        // Structural: if the first column is zero every 3x3 minor drops rank.
        let m = DMatrix::<f64>::from_fn(4, 3, |i, j| if j == 0 { 0.0 } else { (i + j) as f64 });
        for a in 0..4 {
            for b in (a + 1)..4 {
                for c in (b + 1)..4 {
                    let rows = [a, b, c];
                    let minor = DMatrix::from_fn(3, 3, |i, j| m[(rows[i], j)]).determinant();
                    assert_eq!(minor, 0.0);
                }
            }
        }
    }

    #[test]
    fn edge_directions_feasible_everywhere_stationary_only_for_regular() {
        // Edge directions always satisfy g1 = 0, but for a generic simplex
        // the objective gradient leaves span{grad g1, grad g2} there: they
        // are seeds, not critical points. For the regular tetrahedron the
        // symmetry makes all six edges genuinely stationary.
        let span_residual = |form: &CircumFormulation, v: &DVector<f64>| {
            let (gf, g1, g2) = form.gradients(v);
            let b = DMatrix::from_fn(v.len(), 2, |i, c| if c == 0 { g1[i] } else { g2[i] });
            let sol = b.clone().svd(true, true).solve(&gf, 1e-13).unwrap();
            (&gf - &b * &sol).norm()
        };

        let regular = box_simplex([0.5, 0.5, 0.5]).unwrap();
        let form = CircumFormulation::build(&regular).unwrap();
        for v in regular.edge_directions() {
            assert!(span_residual(&form, &v) < 1e-10);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let mut generic_nonstationary = 0;
        for _ in 0..10 {
            let s = random_simplex(&mut rng, 3);
            let form = CircumFormulation::build(&s).unwrap();
            for v in s.edge_directions() {
                assert!(form.cubic(&v).abs() < 1e-10 * s.data_scale().powi(4).max(1.0));
                if span_residual(&form, &v) > 1e-3 {
                    generic_nonstationary += 1;
                }
            }
        }
        assert!(generic_nonstationary > 0, "expected some non-stationary edges on random input");
    }

    #[test]
    fn t_cubic_vanishes_on_edges() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for dim in 2..=6 {
            let s = random_simplex(&mut rng, dim);
            let cubic = t_cubic(&s);
            let scale = s.data_scale().powi(4).max(1.0);
            for i in 0..dim {
                let mut t = DVector::zeros(dim);
                t[i] = 1.0;
                assert!(cubic.eval(&t).abs() < 1e-10 * scale);
                for j in (i + 1)..dim {
                    let mut t = DVector::zeros(dim);
                    t[i] = 1.0;
                    t[j] = -1.0;
                    assert!(cubic.eval(&t).abs() < 1e-10 * scale);
                }
            }
        }
    }

    #[test]
    fn t_cubic_alpha_nonnegative_and_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(79);
        let s = random_simplex(&mut rng, 4);
        let q = s.translated();
        let cubic = t_cubic(&s);
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    let expect = q[i].dot(&q[i]) * q[j].dot(&q[j]) - q[i].dot(&q[j]).powi(2);
                    assert!((cubic.alpha(i, j) - expect).abs() < 1e-12);
                    assert!(cubic.alpha(i, j) >= 0.0);
                    assert!((cubic.alpha(i, j) - cubic.alpha(j, i)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn t_cubic_agrees_with_g1_in_vertex_basis() {
        let mut rng = ChaCha8Rng::seed_from_u64(83);
        for dim in 2..=5 {
            let s = random_simplex(&mut rng, dim);
            let form = CircumFormulation::build(&s).unwrap();
            let cubic = t_cubic(&s);
            let q = s.translated();
            for _ in 0..20 {
                let t = DVector::from_fn(dim, |_, _| rng.random_range(-1.0..1.0));
                let mut v = DVector::zeros(dim);
                for i in 0..dim {
                    v += &q[i] * t[i];
                }
                let lhs = cubic.eval(&t);
                let rhs = form.cubic(&v);
                assert!(
                    (lhs - rhs).abs() < 1e-8 * (1.0 + lhs.abs().max(rhs.abs())),
                    "t-cubic {lhs} vs g1 {rhs}"
                );
            }
        }
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(5, 3), 25);
        assert_eq!(stirling2(8, 3), 966);
        for m in 1..=10 {
            assert_eq!(stirling2(m, 1), 1);
            assert_eq!(stirling2(m, m), 1);
        }
    }

    #[test]
    fn bound_table() {
        let b3 = bezout_bounds(3);
        assert_eq!(b3.e3_system, Some(36));
        assert_eq!(b3.general, 162);
        assert_eq!(b3.stirling, 36);
        assert_eq!(bezout_bounds(2).stirling, 6);
        assert_eq!(bezout_bounds(7).stirling, 5796);
        let expect = [6, 36, 150, 540, 1806, 5796];
        for (n, want) in (2..=7).zip(expect) {
            assert_eq!(bezout_bounds(n).stirling, want);
            assert_eq!(bezout_bounds(n).e3_system.is_some(), n == 3);
        }
    }
}
