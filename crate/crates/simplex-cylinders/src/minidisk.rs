//! Smallest enclosing ball by Welzl's recursion, in any dimension.
//!
//! Point counts here are tiny (projections of simplex vertices), so the
//! plain recursive form without move-to-front is plenty and keeps the
//! result deterministic. The ball of a boundary set is the circumball of
//! the support points, with the center in their affine hull.

use nalgebra::{DMatrix, DVector};

#[derive(Debug, Clone)]
pub struct Ball {
    pub center: DVector<f64>,
    pub radius: f64,
}

impl Ball {
    fn empty(dim: usize) -> Self {
        Ball { center: DVector::zeros(dim), radius: -1.0 }
    }

    pub fn contains(&self, p: &DVector<f64>) -> bool {
        if self.radius < 0.0 {
            return false;
        }
        (p - &self.center).norm() <= self.radius * (1.0 + 1e-12) + 1e-14
    }
}

/// Smallest ball with all boundary points on its surface; center solved in
/// the affine hull through the Gram system.
fn ball_from_boundary(dim: usize, boundary: &[DVector<f64>]) -> Ball {
    match boundary.len() {
        0 => Ball::empty(dim),
        1 => Ball { center: boundary[0].clone(), radius: 0.0 },
        k => {
            let base = &boundary[0];
            let spans: Vec<DVector<f64>> = boundary[1..].iter().map(|p| p - base).collect();
            let gram = DMatrix::from_fn(k - 1, k - 1, |i, j| spans[i].dot(&spans[j]));
            let rhs = DVector::from_fn(k - 1, |i, _| spans[i].dot(&spans[i]) / 2.0);
            let coeffs = gram
                .clone()
                .lu()
                .solve(&rhs)
                .or_else(|| gram.svd(true, true).solve(&rhs, 1e-13).ok())
                .unwrap_or_else(|| DVector::zeros(k - 1));
            let mut center = base.clone();
            for (t, s) in coeffs.iter().zip(&spans) {
                center += s * *t;
            }
            let radius = (&center - base).norm();
            Ball { center, radius }
        }
    }
}

fn welzl(dim: usize, points: &mut Vec<DVector<f64>>, boundary: &mut Vec<DVector<f64>>) -> Ball {
    if points.is_empty() || boundary.len() == dim + 1 {
        return ball_from_boundary(dim, boundary);
    }
    let p = points.pop().unwrap();
    let ball = welzl(dim, points, boundary);
    let ball = if ball.contains(&p) {
        ball
    } else {
        boundary.push(p.clone());
        let b = welzl(dim, points, boundary);
        boundary.pop();
        b
    };
    points.push(p);
    ball
}

/// Exact smallest enclosing ball of a nonempty point set.
pub fn min_enclosing_ball(points: &[DVector<f64>]) -> Ball {
    assert!(!points.is_empty(), "smallest enclosing ball of an empty set");
    let dim = points[0].len();
    if dim == 0 {
        return Ball { center: DVector::zeros(0), radius: 0.0 };
    }
    let mut pts = points.to_vec();
    let mut boundary = Vec::new();
    welzl(dim, &mut pts, &mut boundary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pts(rows: &[&[f64]]) -> Vec<DVector<f64>> {
        rows.iter().map(|r| DVector::from_column_slice(r)).collect()
    }

    #[test]
    fn single_and_pair() {
        let b = min_enclosing_ball(&pts(&[&[1.0, 2.0]]));
        assert_eq!(b.radius, 0.0);
        let b = min_enclosing_ball(&pts(&[&[0.0, 0.0], &[2.0, 0.0]]));
        assert!((b.radius - 1.0).abs() < 1e-12);
        assert!((b.center[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn equilateral_triangle_circumradius() {
        let h = 3f64.sqrt() / 2.0;
        let b = min_enclosing_ball(&pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.5, h]]));
        assert!((b.radius - 1.0 / 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn obtuse_triangle_uses_diameter() {
        let b = min_enclosing_ball(&pts(&[&[0.0, 0.0], &[4.0, 0.0], &[2.0, 0.1]]));
        assert!((b.radius - 2.0).abs() < 1e-9);
    }

    #[test]
    fn unit_square_in_3d() {
        let b = min_enclosing_ball(&pts(&[
            &[0.0, 0.0, 0.0],
            &[1.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0],
            &[1.0, 1.0, 0.0],
        ]));
        assert!((b.radius - 2f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn collinear_and_duplicate_points() {
        let b = min_enclosing_ball(&pts(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 2.0], &[1.0, 1.0]]));
        assert!((b.radius - 2f64.sqrt()).abs() < 1e-12);
    }

    /// Brute-force oracle: the optimal ball is determined by a support
    /// subset of at most dim + 1 points.
    fn brute_force_radius(points: &[DVector<f64>]) -> f64 {
        let dim = points[0].len();
        let n = points.len();
        let mut best = f64::INFINITY;
        let mut subset = Vec::new();
        fn rec(
            points: &[DVector<f64>],
            dim: usize,
            start: usize,
            subset: &mut Vec<usize>,
            best: &mut f64,
        ) {
            if !subset.is_empty() {
                let boundary: Vec<DVector<f64>> =
                    subset.iter().map(|&i| points[i].clone()).collect();
                let ball = super::ball_from_boundary(dim, &boundary);
                if ball.radius < *best
                    && points.iter().all(|p| (p - &ball.center).norm() <= ball.radius * (1.0 + 1e-10) + 1e-12)
                {
                    *best = ball.radius;
                }
            }
            if subset.len() == dim + 1 {
                return;
            }
            for i in start..points.len() {
                subset.push(i);
                rec(points, dim, i + 1, subset, best);
                subset.pop();
            }
        }
        let _ = n;
        rec(points, dim, 0, &mut subset, &mut best);
        best
    }

    #[test]
    fn matches_brute_force_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(151);
        for dim in 2..=4usize {
            for _ in 0..25 {
                let count = rng.random_range(2..=7);
                let points: Vec<DVector<f64>> = (0..count)
                    .map(|_| DVector::from_fn(dim, |_, _| rng.random_range(-1.0..1.0)))
                    .collect();
                let ball = min_enclosing_ball(&points);
                for p in &points {
                    assert!(ball.contains(p));
                }
                let want = brute_force_radius(&points);
                assert!(
                    (ball.radius - want).abs() < 1e-9 * (1.0 + want),
                    "welzl {} vs brute force {}",
                    ball.radius,
                    want
                );
            }
        }
    }
}
