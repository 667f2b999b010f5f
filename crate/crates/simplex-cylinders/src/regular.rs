//! Exact critical-direction census for the regular simplex in `E^n`.
//!
//! The regular simplex embeds as the standard basis vectors of `E^(n+1)`
//! inside the hyperplane `x_1 + ... + x_{n+1} = 1`; directions live in the
//! sum-zero subspace. In these coordinates the objective and the cubic
//! constraint are symmetric polynomials, and the program is equivalent to
//!
//! ```text
//! maximize sigma_4(v)   s.t.  sigma_1 = 0, sigma_2 = -1/2, sigma_3 = 0,
//! ```
//!
//! with squared radius `r^2 = 9(n-1) / (8(n+1)) - sigma_4`. Every critical
//! direction takes at most three distinct component values, so setting the
//! block sizes `(k, l, m)` reduces the program to a square polynomial
//! system in three unknowns, solved exactly by eliminating the linear
//! equation and taking a Sylvester resultant of the remaining
//! quadratic/cubic pair. Expanding block solutions over all component
//! placements and both signs reproduces the published solution counts
//! (150 for `n = 4`).

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::formulation::stirling2;
use crate::geometry::SimplexN;
use crate::polyroots::{companion_roots, quadratic_roots, resultant_x, BiPoly, RPoly};
use crate::{Error, Result};

/// Feasibility tolerance on the elementary symmetric values.
const SIGMA_TOL: f64 = 1e-10;
/// Residual accepted for a polished solution multiset.
const ROOT_RESIDUAL_TOL: f64 = 1e-9;
/// Loose filter for raw root candidates: double roots of the eliminant are
/// only accurate to about the square root of machine precision, and the
/// polish step restores full accuracy afterwards.
const CANDIDATE_RESIDUAL_TOL: f64 = 1e-6;
/// Values closer than this inside one candidate multiset are the same
/// block (double-root splitting); genuine distinct solutions are separated
/// by much more than 1e-4.
const VALUE_MERGE_TOL: f64 = 1e-5;
/// Clustering tolerance between polished multisets.
const VALUE_DEDUP_TOL: f64 = 1e-8;
/// Components with imaginary part below this are treated as real.
const REALITY_TOL: f64 = 1e-10;

/// Largest supported dimension for the enumerations.
pub const MAX_CENSUS_DIM: usize = 9;

/// The regular simplex with unit-vector vertices in `E^(n+1)` plus an
/// isometric chart onto `E^n` for interop with the generic pipeline.
#[derive(Debug, Clone)]
pub struct RegularEmbedding {
    n: usize,
    /// `(n+1) x n` matrix with orthonormal columns spanning the sum-zero
    /// subspace (Helmert basis).
    chart: DMatrix<f64>,
    simplex: SimplexN,
}

/// Builds the embedding for the regular `n`-simplex with edge `sqrt(2)`.
pub fn regular_vertices(n: usize) -> Result<RegularEmbedding> {
    if n < 2 {
        return Err(Error::Shape(format!("dimension must be >= 2, got {n}")));
    }
    let m = n + 1;
    let mut chart = DMatrix::zeros(m, n);
    for k in 1..=n {
        let denom = (k as f64 * (k as f64 + 1.0)).sqrt();
        for i in 0..k {
            chart[(i, k - 1)] = 1.0 / denom;
        }
        chart[(k, k - 1)] = -(k as f64) / denom;
    }
    let vertices: Vec<DVector<f64>> = (0..m)
        .map(|i| {
            let mut e = DVector::zeros(m);
            e[i] = 1.0;
            e[m - 1] -= 1.0;
            chart.transpose() * e
        })
        .collect();
    let simplex = SimplexN::new(n, vertices)?;
    Ok(RegularEmbedding { n, chart, simplex })
}

impl RegularEmbedding {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Embedded vertices `e_i` of `E^(n+1)`.
    pub fn vertices_embedded(&self) -> Vec<DVector<f64>> {
        (0..=self.n)
            .map(|i| DVector::from_fn(self.n + 1, |j, _| if i == j { 1.0 } else { 0.0 }))
            .collect()
    }

    /// Chart image of the simplex in `E^n`.
    pub fn simplex(&self) -> &SimplexN {
        &self.simplex
    }

    /// Isometric image of a sum-zero direction vector.
    pub fn chart_direction(&self, d: &DVector<f64>) -> DVector<f64> {
        self.chart.transpose() * d
    }

    /// Isometric image of a point on the hyperplane (base vertex at origin).
    pub fn chart_point(&self, x: &DVector<f64>) -> DVector<f64> {
        let mut shifted = x.clone();
        shifted[self.n] -= 1.0;
        self.chart.transpose() * shifted
    }
}

/// First four elementary symmetric functions via Newton's identities on the
/// power sums; for fewer than four components the missing ones are zero.
pub fn sigma_eval(v: &[f64]) -> [f64; 4] {
    let c = sigma_eval_complex(&v.iter().map(|&x| Complex64::new(x, 0.0)).collect::<Vec<_>>());
    [c[0].re, c[1].re, c[2].re, c[3].re]
}

pub fn sigma_eval_complex(v: &[Complex64]) -> [Complex64; 4] {
    let mut p = [Complex64::ZERO; 4];
    for &x in v {
        let mut acc = Complex64::new(1.0, 0.0);
        for pk in p.iter_mut() {
            acc *= x;
            *pk += acc;
        }
    }
    let e1 = p[0];
    let e2 = (e1 * p[0] - p[1]) / 2.0;
    let e3 = (e2 * p[0] - e1 * p[1] + p[2]) / 3.0;
    let e4 = (e3 * p[0] - e2 * p[1] + e1 * p[2] - p[3]) / 4.0;
    let len = v.len();
    [
        e1,
        if len >= 2 { e2 } else { Complex64::ZERO },
        if len >= 3 { e3 } else { Complex64::ZERO },
        if len >= 4 { e4 } else { Complex64::ZERO },
    ]
}

/// Squared radius of the circumscribing cylinder with feasible direction
/// `v` (edge-`sqrt(2)` regular simplex): `9(n-1)/(8(n+1)) - sigma_4`.
pub fn radius_sq_from_sigma4(n: usize, sigma4: f64) -> f64 {
    9.0 * (n as f64 - 1.0) / (8.0 * (n as f64 + 1.0)) - sigma4
}

/// A feasible direction of the symmetric program together with its
/// elementary symmetric values.
#[derive(Debug, Clone)]
pub struct SigmaPoint {
    pub v: DVector<f64>,
    pub sigma: [f64; 4],
}

impl SigmaPoint {
    /// Validates feasibility: `sigma_1 = 0`, `sigma_2 = -1/2`,
    /// `sigma_3 = 0` within `1e-10`.
    pub fn new(v: DVector<f64>) -> Result<Self> {
        let sigma = sigma_eval(v.as_slice());
        if sigma[0].abs() >= SIGMA_TOL {
            return Err(Error::Shape(format!("sigma_1 = {} not zero", sigma[0])));
        }
        if (sigma[1] + 0.5).abs() >= SIGMA_TOL {
            return Err(Error::Shape(format!("sigma_2 = {} not -1/2", sigma[1])));
        }
        if sigma[2].abs() >= SIGMA_TOL {
            return Err(Error::Shape(format!("sigma_3 = {} not zero", sigma[2])));
        }
        Ok(Self { v, sigma })
    }

    pub fn radius_sq(&self) -> f64 {
        radius_sq_from_sigma4(self.v.len() - 1, self.sigma[3])
    }
}

/// The embedded formulation in `E^(n+1)` coordinates: axis point recovery
/// and the objective/cubic evaluated directly from the linear system of
/// tangency differences. Used to cross-check the symmetric-function
/// expressions.
#[derive(Debug, Clone)]
pub struct EmbeddedFormulation {
    n: usize,
    m_inv: DMatrix<f64>,
}

impl EmbeddedFormulation {
    pub fn new(n: usize) -> Self {
        let m = n + 1;
        let mat = DMatrix::from_fn(m, m, |i, j| {
            if i < n {
                (if j == i { 1.0 } else { 0.0 }) - (if j == n { 1.0 } else { 0.0 })
            } else {
                1.0
            }
        });
        Self { n, m_inv: mat.try_inverse().expect("embedding matrix is invertible") }
    }

    /// Axis point on the hyperplane for a unit direction `v`.
    pub fn moment(&self, v: &DVector<f64>) -> DVector<f64> {
        let mut rhs = DVector::zeros(self.n + 1);
        for i in 0..self.n {
            rhs[i] = -(v[i] * v[i] - v[self.n] * v[self.n]);
        }
        rhs[self.n] = 2.0;
        &self.m_inv * rhs * 0.5
    }

    /// Squared radius as a function of a unit direction.
    pub fn objective(&self, v: &DVector<f64>) -> f64 {
        let u = self.moment(v);
        u.dot(&u) - 2.0 * u[self.n] + 1.0 - v[self.n] * v[self.n]
    }

    /// Cubic constraint `u . v`; equals the symmetric-function expression
    /// `(-(n-2) s1^3 + 3(n-1) s1 s2) / (2(n+1)) - (3/2) s3`.
    pub fn cubic(&self, v: &DVector<f64>) -> f64 {
        self.moment(v).dot(v)
    }
}

/// Block-structure reduction of the symmetric program: components split
/// into three groups of sizes `(k, l, m)` sharing values `(v1, v2, v3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionSystem {
    pub k: usize,
    pub l: usize,
    pub m: usize,
}

impl PartitionSystem {
    pub fn new(k: usize, l: usize, m: usize) -> Self {
        assert!(k >= 1 && l >= 1 && m >= 1);
        Self { k, l, m }
    }

    /// Residuals of the three reduced equations at a candidate triple.
    pub fn residual(&self, v: [Complex64; 3]) -> f64 {
        let (k, l, m) = (self.k as f64, self.l as f64, self.m as f64);
        let [x, y, z] = v;
        let e1 = k * x + l * y + m * z;
        let e2 = k * x * x + l * y * y + m * z * z - 1.0;
        let e3 = self.sigma3(v);
        e1.norm().max(e2.norm()).max(e3.norm())
    }

    /// Third elementary symmetric function of the full component vector in
    /// block form.
    fn sigma3(&self, v: [Complex64; 3]) -> Complex64 {
        let [x, y, z] = v;
        let mut acc = Complex64::ZERO;
        for (i1, i2, i3) in triples() {
            let c = binomial(self.k, i1) * binomial(self.l, i2) * binomial(self.m, i3);
            if c > 0.0 {
                acc += c * x.powu(i1 as u32) * y.powu(i2 as u32) * z.powu(i3 as u32);
            }
        }
        acc
    }

    /// Solves the reduced system over the complex numbers.
    ///
    /// The linear equation eliminates `v3`; the remaining quadratic/cubic
    /// pair reduces by a Sylvester resultant to a univariate polynomial of
    /// degree at most 6 whose roots come from companion-matrix
    /// eigenvalues. Back-substitution keeps pairs passing the residual
    /// filter.
    pub fn solve(&self) -> Vec<[Complex64; 3]> {
        let (k, l, m) = (self.k as f64, self.l as f64, self.m as f64);
        // v3 = -(k v1 + l v2) / m.
        // Quadratic: k v1^2 + l v2^2 + (k v1 + l v2)^2 / m = 1.
        let a = BiPoly {
            coeffs: vec![
                RPoly(vec![-1.0, 0.0, l + l * l / m]),
                RPoly(vec![0.0, 2.0 * k * l / m]),
                RPoly::constant(k + k * k / m),
            ],
        };
        // Cubic: block sigma_3 after substituting v3(v1, v2).
        let b = self.sigma3_bipoly();
        let res = resultant_x(&a, &b, 2.0);
        let mut out = Vec::new();
        for y in companion_roots(&res.0) {
            // v1 roots of the quadratic at this v2.
            let c2 = Complex64::new(k + k * k / m, 0.0);
            let c1 = Complex64::new(2.0 * k * l / m, 0.0) * y;
            let c0 = Complex64::new(l + l * l / m, 0.0) * y * y - 1.0;
            for x in quadratic_roots(c2, c1, c0) {
                let z = -(k * x + l * y) / m;
                let cand = [x, y, z];
                if self.residual(cand) < CANDIDATE_RESIDUAL_TOL {
                    out.push(cand);
                }
            }
        }
        out
    }

    /// Block `sigma_3` with `v3` eliminated, as a bivariate cubic in
    /// `(v1, v2)`.
    fn sigma3_bipoly(&self) -> BiPoly {
        let (k, l, m) = (self.k as f64, self.l as f64, self.m as f64);
        // coeff[i][j] multiplies v1^i v2^j.
        let mut coeff = [[0.0f64; 4]; 4];
        for (i1, i2, i3) in triples() {
            let c = binomial(self.k, i1) * binomial(self.l, i2) * binomial(self.m, i3);
            if c == 0.0 {
                continue;
            }
            // (-(k v1 + l v2)/m)^(i3) expanded binomially.
            let sign = if i3 % 2 == 1 { -1.0 } else { 1.0 };
            let scale = c * sign / m.powi(i3 as i32);
            for t in 0..=i3 {
                let w = choose_f(i3, t) * k.powi(t as i32) * l.powi((i3 - t) as i32);
                coeff[i1 + t][i2 + (i3 - t)] += scale * w;
            }
        }
        BiPoly {
            coeffs: (0..4)
                .map(|i| RPoly(coeff[i].to_vec()))
                .collect(),
        }
    }
}

fn triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=3usize).flat_map(|i1| {
        (0..=(3 - i1)).map(move |i2| (i1, i2, 3 - i1 - i2))
    })
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    choose_f(n, k)
}

fn choose_f(n: usize, k: usize) -> f64 {
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

fn multinomial(total: usize, parts: &[usize]) -> u64 {
    debug_assert_eq!(parts.iter().sum::<usize>(), total);
    let mut acc = 1u64;
    let mut remaining = total;
    for &p in parts {
        acc *= binomial(remaining, p).round() as u64;
        remaining -= p;
    }
    acc
}

/// One distinct value multiset in the census: block values with their
/// multiplicities, expanded over all component placements.
#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    /// Sorted block sizes of the distinct values (may have fewer than
    /// three blocks when a reduced solution degenerates).
    pub partition: Vec<usize>,
    /// Distinct values as `(re, im)` pairs, ordered consistently with
    /// `partition`.
    pub values: Vec<(f64, f64)>,
    pub real: bool,
    /// Number of full-length solution vectors this multiset yields
    /// (all component placements; signs appear as separate entries).
    pub count: u64,
    /// `sigma_4` of the full vector.
    pub sigma4: (f64, f64),
    /// Squared radius for real entries.
    pub r_sq: Option<f64>,
}

impl CensusEntry {
    /// One representative full-length vector (blocks in order).
    pub fn representative(&self, len: usize) -> Vec<Complex64> {
        let mut v = Vec::with_capacity(len);
        for (size, &(re, im)) in self.partition.iter().zip(&self.values) {
            for _ in 0..*size {
                v.push(Complex64::new(re, im));
            }
        }
        debug_assert_eq!(v.len(), len);
        v
    }

    /// All full-length placement vectors (real entries only), used to
    /// cross-check counts at small `n`.
    pub fn real_vectors(&self, len: usize) -> Vec<DVector<f64>> {
        if !self.real {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut assignment = vec![usize::MAX; len];
        fill_placements(&mut assignment, &self.partition.clone(), 0, &mut |a| {
            out.push(DVector::from_fn(len, |i, _| self.values[a[i]].0));
        });
        out
    }
}

fn fill_placements(
    assignment: &mut [usize],
    parts: &[usize],
    block: usize,
    emit: &mut impl FnMut(&[usize]),
) {
    if block == parts.len() {
        emit(assignment);
        return;
    }
    let free: Vec<usize> = (0..assignment.len()).filter(|&i| assignment[i] == usize::MAX).collect();
    let need = parts[block];
    let mut chosen = vec![0usize; need];
    combinations(&free, need, &mut chosen, 0, 0, &mut |sel| {
        for &i in sel.iter() {
            assignment[i] = block;
        }
        fill_placements(assignment, parts, block + 1, emit);
        for &i in sel.iter() {
            assignment[i] = usize::MAX;
        }
    });
}

fn combinations(
    pool: &[usize],
    need: usize,
    chosen: &mut Vec<usize>,
    start: usize,
    depth: usize,
    emit: &mut impl FnMut(&[usize]),
) {
    if depth == need {
        emit(chosen);
        return;
    }
    for i in start..pool.len() {
        chosen[depth] = pool[i];
        combinations(pool, need, chosen, i + 1, depth + 1, emit);
    }
}

/// Census of all (real and complex) critical directions of the symmetric
/// program for the regular `n`-simplex.
#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub entries: Vec<CensusEntry>,
    /// Total full-length vector count (signs and placements included).
    pub total: u64,
    pub real_total: u64,
    pub complex_total: u64,
    /// Entries whose distinct values form fewer than three blocks; the
    /// reduced systems with an empty block are overdetermined and usually
    /// have no solutions, so any that do are surfaced here.
    pub empty_block_exceptions: Vec<String>,
}

/// Enumerates all critical directions by partition shape.
///
/// Every shape of `n + 1` into at most three blocks is tried: three-block
/// shapes through the resultant pipeline, two-block and one-block shapes by
/// direct elimination with the leftover equations checked rather than
/// assumed unsatisfiable.
pub fn enumerate_all_critical(n: usize) -> Result<CensusReport> {
    if !(2..=MAX_CENSUS_DIM).contains(&n) {
        return Err(Error::DimensionTooLarge(n));
    }
    let len = n + 1;
    let mut multisets: Vec<(Vec<(Complex64, usize)>, f64)> = Vec::new();

    // Three-block shapes k <= l <= m, all nonempty.
    for k in 1..=len / 3 {
        for l in k..=(len - k) / 2 {
            let m = len - k - l;
            let system = PartitionSystem::new(k, l, m);
            for sol in system.solve() {
                let ms = normalize_multiset(&[(sol[0], k), (sol[1], l), (sol[2], m)]);
                let residual = multiset_residual(&ms);
                if residual < ROOT_RESIDUAL_TOL {
                    multisets.push((ms, residual));
                }
            }
        }
    }
    // Two-block shapes: k x + l y = 0, k x^2 + l y^2 = 1 has the closed
    // form below; sigma_3 = 0 is then a check, not a constraint.
    for k in 1..len {
        let l = len - k;
        let (kf, lf) = (k as f64, l as f64);
        let x0 = (lf / (kf * (kf + lf))).sqrt();
        for x in [x0, -x0] {
            let y = -kf * x / lf;
            let ms = normalize_multiset(&[(Complex64::new(x, 0.0), k), (Complex64::new(y, 0.0), l)]);
            let residual = multiset_residual(&ms);
            if residual < ROOT_RESIDUAL_TOL {
                multisets.push((ms, residual));
            }
        }
    }
    // One-block shape: sigma_1 = 0 forces the zero vector, which violates
    // sigma_2 = -1/2. Checked by construction: (n+1) x = 0 has only x = 0.

    let entries = build_entries(n, multisets);
    let total: u64 = entries.iter().map(|e| e.count).sum();
    let real_total: u64 = entries.iter().filter(|e| e.real).map(|e| e.count).sum();
    let empty_block_exceptions = entries
        .iter()
        .filter(|e| e.partition.len() < 3)
        .map(|e| {
            format!(
                "partition {:?} with values {:?} contributes {} solutions",
                e.partition, e.values, e.count
            )
        })
        .collect();
    Ok(CensusReport {
        n,
        complex_total: total - real_total,
        total,
        real_total,
        entries,
        empty_block_exceptions,
    })
}

/// Canonical form of a block-value multiset: numerically equal values
/// merged (solutions with coinciding blocks come from double roots, whose
/// raw accuracy is only about the square root of machine precision), the
/// merged values polished back onto the feasibility system, and blocks
/// ordered by multiplicity then value.
fn normalize_multiset(blocks: &[(Complex64, usize)]) -> Vec<(Complex64, usize)> {
    let mut items: Vec<(Complex64, usize)> = blocks.to_vec();
    items.sort_by(|a, b| (a.0.re, a.0.im).partial_cmp(&(b.0.re, b.0.im)).unwrap());
    let mut merged: Vec<(Complex64, usize)> = Vec::new();
    for (val, mult) in items {
        match merged.last_mut() {
            Some((prev, pm)) if (*prev - val).norm() < VALUE_MERGE_TOL => {
                // Multiplicity-weighted mean of the cluster.
                *prev = (*prev * (*pm as f64) + val * (mult as f64)) / (*pm + mult) as f64;
                *pm += mult;
            }
            _ => merged.push((val, mult)),
        }
    }
    polish_multiset(&mut merged);
    merged.sort_by(|a, b| {
        a.1.cmp(&b.1).then_with(|| (a.0.re, a.0.im).partial_cmp(&(b.0.re, b.0.im)).unwrap())
    });
    merged
}

/// Residual of the feasibility system on a full multiset.
fn multiset_residual(blocks: &[(Complex64, usize)]) -> f64 {
    let full: Vec<Complex64> = blocks.iter().flat_map(|&(v, m)| std::iter::repeat_n(v, m)).collect();
    let s = sigma_eval_complex(&full);
    s[0].norm().max((s[1] + 0.5).norm()).max(s[2].norm())
}

/// Multiplicity-preserving fuzzy equality of two canonical multisets.
fn multisets_equal(a: &[(Complex64, usize)], b: &[(Complex64, usize)], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for &(va, ma) in a {
        for (j, &(vb, mb)) in b.iter().enumerate() {
            if !used[j] && ma == mb && (va - vb).norm() < tol {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Gauss-Newton refinement of the distinct block values against
/// `sigma_1 = 0, sigma_2 = -1/2, sigma_3 = 0`. Refinement only: if the
/// iteration wanders further than the candidate tolerance it is abandoned
/// and the caller's residual filter rejects the multiset.
fn polish_multiset(blocks: &mut [(Complex64, usize)]) {
    let d = blocks.len();
    let start: Vec<Complex64> = blocks.iter().map(|b| b.0).collect();
    let expand = |blocks: &[(Complex64, usize)]| -> Vec<Complex64> {
        blocks.iter().flat_map(|&(v, m)| std::iter::repeat_n(v, m)).collect()
    };
    for _ in 0..8 {
        let full = expand(blocks);
        let s = sigma_eval_complex(&full);
        let residual = DVector::from_column_slice(&[s[0], s[1] + 0.5, s[2]]);
        if residual.iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-15 {
            break;
        }
        // d sigma_k / d w_j = m_j * sigma_{k-1}(multiset minus one copy).
        let mut jac = DMatrix::<Complex64>::zeros(3, d);
        for j in 0..d {
            let m = blocks[j].1;
            let mut reduced = Vec::with_capacity(full.len() - 1);
            for (jj, &(v, mm)) in blocks.iter().enumerate() {
                let copies = if jj == j { mm - 1 } else { mm };
                reduced.extend(std::iter::repeat_n(v, copies));
            }
            let sr = sigma_eval_complex(&reduced);
            jac[(0, j)] = Complex64::new(m as f64, 0.0);
            jac[(1, j)] = sr[0] * m as f64;
            jac[(2, j)] = sr[1] * m as f64;
        }
        // Least-squares step through the normal equations (d <= 3).
        let jh = jac.adjoint();
        let lhs = &jh * &jac;
        let rhs = &jh * &residual;
        let Some(step) = lhs.lu().solve(&rhs) else {
            break;
        };
        let mut progressed = false;
        for (j, b) in blocks.iter_mut().enumerate() {
            if step[j].norm().is_finite() {
                b.0 -= step[j];
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
        let drift = blocks
            .iter()
            .zip(&start)
            .map(|(b, s)| (b.0 - s).norm())
            .fold(0.0, f64::max);
        if drift > 1e-4 {
            for (b, s) in blocks.iter_mut().zip(&start) {
                b.0 = *s;
            }
            break;
        }
    }
}

fn build_entries(n: usize, multisets: Vec<(Vec<(Complex64, usize)>, f64)>) -> Vec<CensusEntry> {
    let len = n + 1;
    let mut unique: Vec<Vec<(Complex64, usize)>> = Vec::new();
    for (ms, _residual) in multisets {
        let duplicate = unique.iter().any(|other| multisets_equal(other, &ms, VALUE_DEDUP_TOL));
        if !duplicate {
            unique.push(ms);
        }
    }
    let mut entries: Vec<CensusEntry> = unique
        .into_iter()
        .map(|ms| {
            let parts: Vec<usize> = ms.iter().map(|&(_, m)| m).collect();
            let count = multinomial(len, &parts);
            let real = ms.iter().all(|(v, _)| v.im.abs() < REALITY_TOL);
            let rep: Vec<Complex64> = ms
                .iter()
                .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
                .collect();
            let sigma4 = sigma_eval_complex(&rep)[3];
            CensusEntry {
                partition: parts,
                values: ms.iter().map(|&(v, _)| (v.re, v.im)).collect(),
                real,
                count,
                sigma4: (sigma4.re, sigma4.im),
                r_sq: real.then(|| radius_sq_from_sigma4(n, sigma4.re)),
            }
        })
        .collect();
    entries.sort_by(|a, b| {
        a.partition
            .cmp(&b.partition)
            .then_with(|| a.values.partial_cmp(&b.values).unwrap())
    });
    entries
}

/// Radius of the smallest circumscribing cylinder of the regular
/// `n`-simplex with edge `sqrt(2)`, and the direction achieving it
/// (full-length coordinates).
pub fn regular_min_radius(n: usize) -> Result<(f64, DVector<f64>)> {
    let report = enumerate_all_critical(n)?;
    let best = report
        .entries
        .iter()
        .filter(|e| e.real)
        .max_by(|a, b| a.sigma4.0.partial_cmp(&b.sigma4.0).unwrap())
        .ok_or(Error::NoCriticalPointFound)?;
    let r = radius_sq_from_sigma4(n, best.sigma4.0).sqrt();
    let v = DVector::from_fn(n + 1, |i, _| best.representative(n + 1)[i].re);
    Ok((r, v))
}

/// Census totals against the mixed-volume bound `6 S(n+1, 3)`.
#[derive(Debug, Clone, Serialize)]
pub struct StirlingCensusReport {
    pub n: usize,
    pub bound: u64,
    pub census_total: u64,
    pub equal: bool,
    pub slack: i64,
}

pub fn stirling_census_check(n: usize) -> Result<StirlingCensusReport> {
    if !(2..=7).contains(&n) {
        return Err(Error::DimensionTooLarge(n));
    }
    let report = enumerate_all_critical(n)?;
    let bound = 6 * stirling2(n + 1, 3);
    Ok(StirlingCensusReport {
        n,
        bound,
        census_total: report.total,
        equal: report.total == bound,
        slack: bound as i64 - report.total as i64,
    })
}
