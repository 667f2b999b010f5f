//! Small-degree polynomial machinery: companion-matrix root finding for
//! univariate real polynomials and Sylvester resultants of bivariate pairs.
//!
//! Degrees here stay at desk scale (<= 6 after elimination), so companion
//! eigenvalues plus a few complex Newton polish steps give roots to near
//! machine precision, and the resultant in one variable is recovered by
//! interpolating numeric Sylvester determinants at Chebyshev nodes.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Dense univariate polynomial, coefficients low to high.
#[derive(Debug, Clone, PartialEq)]
pub struct RPoly(pub Vec<f64>);

impl RPoly {
    pub fn zero() -> Self {
        RPoly(vec![])
    }

    pub fn constant(c: f64) -> Self {
        RPoly(vec![c])
    }

    /// Degree after trimming coefficients below `tol` relative to the
    /// largest one; `None` for the zero polynomial.
    pub fn degree(&self, tol: f64) -> Option<usize> {
        let max = self.0.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if max == 0.0 {
            return None;
        }
        self.0.iter().rposition(|c| c.abs() > tol * max)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.0.iter().rev().fold(Complex64::ZERO, |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> RPoly {
        if self.0.len() <= 1 {
            return RPoly::zero();
        }
        RPoly(self.0.iter().enumerate().skip(1).map(|(k, &c)| k as f64 * c).collect())
    }
}

/// All complex roots of a real polynomial via eigenvalues of the companion
/// matrix of its trimmed monic form, polished by complex Newton steps.
pub fn companion_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let p = RPoly(coeffs.to_vec());
    let deg = match p.degree(1e-12) {
        Some(d) if d >= 1 => d,
        _ => return vec![],
    };
    let lead = p.0[deg];
    let monic: Vec<f64> = p.0[..deg].iter().map(|c| c / lead).collect();
    let comp = DMatrix::from_fn(deg, deg, |i, j| {
        if j == deg - 1 {
            -monic[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let eig: DVector<Complex64> = comp.complex_eigenvalues();
    let trimmed = RPoly(coeffs[..=deg].to_vec());
    let dp = trimmed.derivative();
    let mut roots: Vec<Complex64> = eig
        .iter()
        .map(|&z0| {
            let mut z = z0;
            for _ in 0..8 {
                let f = trimmed.eval_complex(z);
                let d = dp.eval_complex(z);
                if d.norm() < 1e-300 {
                    break;
                }
                let step = f / d;
                if !step.re.is_finite() || !step.im.is_finite() {
                    break;
                }
                z -= step;
                if step.norm() < 1e-15 * (1.0 + z.norm()) {
                    break;
                }
            }
            // Keep the polish only if it did not fly off (multiple roots).
            if trimmed.eval_complex(z).norm() <= trimmed.eval_complex(z0).norm() {
                z
            } else {
                z0
            }
        })
        .collect();
    roots.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    roots
}

/// Bivariate polynomial stored as coefficients of powers of `x`, each a
/// polynomial in `y`.
#[derive(Debug, Clone)]
pub struct BiPoly {
    /// `coeffs[k]` multiplies `x^k`.
    pub coeffs: Vec<RPoly>,
}

impl BiPoly {
    pub fn eval_complex(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::ZERO, |acc, c| acc * x + c.eval_complex(y))
    }

    /// Coefficients in `x` at a fixed real `y`.
    fn at_y(&self, y: f64) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.eval(y)).collect()
    }

    /// Total degree: max over monomials of `x`-power plus `y`-power.
    fn total_degree(&self) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.degree(0.0).map(|d| k + d))
            .max()
            .unwrap_or(0)
    }
}

/// Determinant of the Sylvester matrix of two real univariate polynomials
/// given by their full coefficient lists (low to high, fixed nominal degree).
fn sylvester_det(a: &[f64], b: &[f64]) -> f64 {
    let da = a.len() - 1;
    let db = b.len() - 1;
    let size = da + db;
    if size == 0 {
        return 1.0;
    }
    let mut m = DMatrix::zeros(size, size);
    for row in 0..db {
        for (k, &c) in a.iter().enumerate() {
            m[(row, row + (da - k))] = c;
        }
    }
    for row in 0..da {
        for (k, &c) in b.iter().enumerate() {
            m[(db + row, row + (db - k))] = c;
        }
    }
    m.determinant()
}

/// Resultant of `a` and `b` with respect to `x`, as a polynomial in `y`.
///
/// The Sylvester determinant is evaluated at Chebyshev nodes spanning
/// `[-node_radius, node_radius]` and interpolated back to monomial
/// coefficients. The interpolation uses exactly `deg + 1` nodes for the
/// Bezout bound `deg = total_deg(a) * total_deg(b)`; an inflated node
/// count would smear rounding noise into spurious high-order coefficients
/// and shift nearby roots. Nominal `x`-degrees are used in the Sylvester
/// blocks, so identically vanishing leading coefficients are fine; for the
/// fixed-degree systems used here they are constants.
pub fn resultant_x(a: &BiPoly, b: &BiPoly, node_radius: f64) -> RPoly {
    let res_degree = a.total_degree() * b.total_degree();
    let n_nodes = res_degree + 1;
    if n_nodes == 1 {
        let v = sylvester_det(&a.at_y(0.0), &b.at_y(0.0));
        return RPoly::constant(v);
    }
    // Chebyshev points of the second kind over [-R, R].
    let nodes: Vec<f64> = (0..n_nodes)
        .map(|k| node_radius * (std::f64::consts::PI * k as f64 / (n_nodes - 1) as f64).cos())
        .collect();
    let values: Vec<f64> = nodes.iter().map(|&y| sylvester_det(&a.at_y(y), &b.at_y(y))).collect();
    interpolate(&nodes, &values)
}

/// Newton-form interpolation expanded to monomial coefficients.
fn interpolate(xs: &[f64], ys: &[f64]) -> RPoly {
    let n = xs.len();
    let mut divided = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner expansion of the Newton form.
    let mut coeffs = vec![0.0; n];
    coeffs[0] = divided[n - 1];
    for (deg, k) in (0..n - 1).rev().enumerate() {
        // multiply by (x - xs[k]) then add divided[k]
        for i in (1..=deg + 1).rev() {
            coeffs[i] = coeffs[i - 1] - xs[k] * coeffs[i];
        }
        coeffs[0] = divided[k] - xs[k] * coeffs[0];
    }
    RPoly(coeffs)
}

/// Roots of a complex quadratic `c2 z^2 + c1 z + c0`, with the numerically
/// stable signed form of the quadratic formula.
pub fn quadratic_roots(c2: Complex64, c1: Complex64, c0: Complex64) -> Vec<Complex64> {
    if c2.norm() < 1e-14 * (c1.norm() + c0.norm()).max(1.0) {
        if c1.norm() == 0.0 {
            return vec![];
        }
        return vec![-c0 / c1];
    }
    let disc = (c1 * c1 - 4.0 * c2 * c0).sqrt();
    // Pick the sign that avoids cancellation in -c1 -+ disc.
    let q = if (c1 + disc).norm() >= (c1 - disc).norm() { -(c1 + disc) * 0.5 } else { (disc - c1) * 0.5 };
    if q.norm() == 0.0 {
        return vec![Complex64::ZERO, Complex64::ZERO];
    }
    vec![q / c2, c0 / q]
}
