//! Census of the quartic-minimization Lagrange system on the sphere slice
//!
//! ```text
//! 4 u_i^3 + 2 l1 u_i + l2 = 0,  i = 1..n+1,
//! sum u_i^2 = 1,
//! sum u_i   = 0,
//! ```
//!
//! which arises when minimizing `sum u_i^4` over the unit sphere
//! intersected with the sum-zero hyperplane. A published treatment of this
//! system argued `l2 = 0` by symmetry and missed a whole solution family;
//! the enumeration here reproduces the corrected counts: 26 solutions for
//! `n = 3` split 18/8 by `l2`, and 80 for `n = 4` split 50/30.
//!
//! Every component is a root of the same depressed cubic, so a solution
//! takes at most three distinct values whose multiplicities `(k, l, m)`
//! tile `n + 1`. Three distinct values must be the three cubic roots,
//! forcing `x + y + z = 0` (the cubic has no quadratic term); two values
//! leave the third root free. Either way the block system is linear
//! elimination plus one quadratic scaling, and the multipliers come from
//! the Vieta relations `l1 = 2 e_2`, `l2 = -4 e_3` of the root triple.

use nalgebra::DVector;
use num_complex::Complex64;
use serde::Serialize;

use crate::polyroots::{companion_roots, quadratic_roots};
use crate::{Error, Result};

/// Accepted residual of the full Lagrange system.
const SYSTEM_TOL: f64 = 1e-10;
/// `l2` magnitudes below this are the symmetric family.
const LAMBDA2_ZERO_TOL: f64 = 1e-10;
const REALITY_TOL: f64 = 1e-10;
const VALUE_DEDUP_TOL: f64 = 1e-8;

pub const MAX_CENSUS_DIM: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Lambda2Family {
    Lambda2Zero,
    Lambda2Nonzero,
}

/// One distinct-value multiset of solutions with its multipliers; expanding
/// the block values over all component placements gives `count` full
/// solution vectors.
#[derive(Debug, Clone, Serialize)]
pub struct WeissbachSolution {
    /// Block sizes of the distinct values, sorted ascending.
    pub partition: Vec<usize>,
    /// Distinct component values as `(re, im)`, aligned with `partition`.
    pub values: Vec<(f64, f64)>,
    pub lambda1: (f64, f64),
    pub lambda2: (f64, f64),
    /// Max-norm of the full system at a representative vector.
    pub residual: f64,
    pub family: Lambda2Family,
    pub real: bool,
    /// Number of full-length solution vectors (component placements).
    pub count: u64,
    /// False for points that lie on a positive-dimensional solution family
    /// (equal block sizes make the linear pair rank-deficient).
    pub isolated: bool,
}

impl WeissbachSolution {
    /// Representative full-length vector (blocks in order).
    pub fn representative(&self, len: usize) -> Vec<Complex64> {
        let mut v = Vec::with_capacity(len);
        for (size, &(re, im)) in self.partition.iter().zip(&self.values) {
            for _ in 0..*size {
                v.push(Complex64::new(re, im));
            }
        }
        v
    }

    /// All real full-length placement vectors; small dimensions only.
    pub fn real_vectors(&self, len: usize) -> Vec<DVector<f64>> {
        if !self.real {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut assignment = vec![usize::MAX; len];
        placements(&mut assignment, &self.partition, 0, &mut |a| {
            out.push(DVector::from_fn(len, |i, _| self.values[a[i]].0));
        });
        out
    }
}

fn placements(assignment: &mut [usize], parts: &[usize], block: usize, emit: &mut impl FnMut(&[usize])) {
    if block == parts.len() {
        emit(assignment);
        return;
    }
    let free: Vec<usize> = (0..assignment.len()).filter(|&i| assignment[i] == usize::MAX).collect();
    fn choose(pool: &[usize], need: usize, start: usize, sel: &mut Vec<usize>, act: &mut impl FnMut(&[usize])) {
        if sel.len() == need {
            act(sel);
            return;
        }
        for i in start..pool.len() {
            sel.push(pool[i]);
            choose(pool, need, i + 1, sel, act);
            sel.pop();
        }
    }
    let mut sel = Vec::new();
    choose(&free, parts[block], 0, &mut sel, &mut |chosen| {
        for &i in chosen {
            assignment[i] = block;
        }
        placements(assignment, parts, block + 1, emit);
        for &i in chosen {
            assignment[i] = usize::MAX;
        }
    });
}

/// Full census for components of length `n + 1`.
#[derive(Debug, Clone, Serialize)]
pub struct WeissbachCensus {
    pub n: usize,
    pub solutions: Vec<WeissbachSolution>,
    /// Total full-vector count over isolated solutions.
    pub total: u64,
    pub lambda2_zero_count: u64,
    pub lambda2_nonzero_count: u64,
    pub all_real: bool,
    /// Block shapes `(k, k, k)` whose linear pair is rank-deficient: the
    /// solution set there is a continuum, reported rather than counted.
    /// Its `l2 = 0` stratum still appears among the solutions, flagged
    /// non-isolated.
    pub continuum_shapes: Vec<[usize; 3]>,
}

/// Residual of the full system at a block multiset with multipliers.
fn system_residual(blocks: &[(Complex64, usize)], l1: Complex64, l2: Complex64) -> f64 {
    let mut res: f64 = 0.0;
    let mut sum = Complex64::ZERO;
    let mut sum_sq = Complex64::ZERO;
    for &(x, m) in blocks {
        res = res.max((4.0 * x * x * x + 2.0 * l1 * x + l2).norm());
        sum += x * m as f64;
        sum_sq += x * x * m as f64;
    }
    res.max(sum.norm()).max((sum_sq - 1.0).norm())
}

fn multinomial(total: usize, parts: &[usize]) -> u64 {
    let mut acc = 1u64;
    let mut remaining = total;
    for &p in parts {
        let mut c = 1u64;
        for i in 0..p {
            c = c * (remaining - i) as u64 / (i + 1) as u64;
        }
        acc *= c;
        remaining -= p;
    }
    acc
}

struct Candidate {
    blocks: Vec<(Complex64, usize)>,
    l1: Complex64,
    l2: Complex64,
    isolated: bool,
}

/// Enumerates all isolated solutions (plus flagged continuum strata) of the
/// system for `2 <= n <= 9`.
pub fn enumerate_solutions(n: usize) -> Result<WeissbachCensus> {
    if !(2..=MAX_CENSUS_DIM).contains(&n) {
        return Err(Error::DimensionTooLarge(n));
    }
    let len = n + 1;
    let mut candidates: Vec<Candidate> = Vec::new();
    let mut continuum_shapes = Vec::new();

    // Two distinct values x != y with multiplicities (k, l):
    // k x + l y = 0 and k x^2 + l y^2 = 1 give x directly; the multipliers
    // solve the 2x2 linear system of the two cubic conditions.
    for k in 1..len {
        let l = len - k;
        if k > l {
            continue;
        }
        let (kf, lf) = (k as f64, l as f64);
        let x0 = (lf / (kf * (kf + lf))).sqrt();
        for x in [x0, -x0] {
            let y = -kf * x / lf;
            let (xc, yc) = (Complex64::new(x, 0.0), Complex64::new(y, 0.0));
            // l1 = -2 (x^2 + x y + y^2), l2 = 4 x y (x + y).
            let l1 = -2.0 * (xc * xc + xc * yc + yc * yc);
            let l2 = 4.0 * xc * yc * (xc + yc);
            candidates.push(Candidate {
                blocks: vec![(xc, k), (yc, l)],
                l1,
                l2,
                isolated: true,
            });
        }
    }

    // Three distinct values: they must be the three roots of the cubic, so
    // x + y + z = 0 joins the two block constraints. Equal block sizes make
    // the linear pair rank-deficient (a continuum); its l2 = 0 stratum
    // (z = 0, y = -x) is still enumerated, flagged non-isolated.
    for k in 1..=len / 3 {
        for l in k..=(len - k) / 2 {
            let m = len - k - l;
            let (kf, lf, mf) = (k as f64, l as f64, m as f64);
            if k == l && l == m {
                continuum_shapes.push([k, l, m]);
                let x = 1.0 / (2.0 * kf).sqrt();
                for sign in [1.0, -1.0] {
                    let xc = Complex64::new(sign * x, 0.0);
                    candidates.push(Candidate {
                        blocks: vec![(xc, k), (-xc, k), (Complex64::ZERO, k)],
                        l1: Complex64::new(-2.0 * x * x, 0.0),
                        l2: Complex64::ZERO,
                        isolated: false,
                    });
                }
                continue;
            }
            // Kernel direction of [[1,1,1],[k,l,m]].
            let d = [lf - mf, mf - kf, kf - lf];
            let q = kf * d[0] * d[0] + lf * d[1] * d[1] + mf * d[2] * d[2];
            // q > 0 for a real nonzero direction; complex scalings of a
            // real direction cannot satisfy the quadratic otherwise.
            let roots = quadratic_roots(
                Complex64::new(q, 0.0),
                Complex64::ZERO,
                Complex64::new(-1.0, 0.0),
            );
            for s in roots {
                let x = s * d[0];
                let y = s * d[1];
                let z = s * d[2];
                // Vieta on 4(t-x)(t-y)(t-z) = 4t^3 + 2 l1 t + l2.
                let l1 = 2.0 * (x * y + y * z + z * x);
                let l2 = -4.0 * x * y * z;
                candidates.push(Candidate {
                    blocks: vec![(x, k), (y, l), (z, m)],
                    l1,
                    l2,
                    isolated: true,
                });
            }
        }
    }
    // One block: (n+1) x = 0 forces x = 0, violating the sphere equation.

    // Canonicalize, verify, dedup.
    let mut solutions: Vec<WeissbachSolution> = Vec::new();
    for cand in candidates {
        let mut blocks = merge_blocks(&cand.blocks);
        blocks.sort_by(|a, b| {
            a.1.cmp(&b.1).then_with(|| (a.0.re, a.0.im).partial_cmp(&(b.0.re, b.0.im)).unwrap())
        });
        let residual = system_residual(&blocks, cand.l1, cand.l2);
        if residual > SYSTEM_TOL {
            continue;
        }
        let duplicate = solutions.iter().any(|s| {
            s.partition.len() == blocks.len()
                && blocks.iter().all(|&(v, m)| {
                    s.values
                        .iter()
                        .zip(&s.partition)
                        .any(|(&(re, im), &sm)| sm == m && (v - Complex64::new(re, im)).norm() < VALUE_DEDUP_TOL)
                })
        });
        if duplicate {
            continue;
        }
        let parts: Vec<usize> = blocks.iter().map(|b| b.1).collect();
        let real = blocks.iter().all(|(v, _)| v.im.abs() < REALITY_TOL)
            && cand.l1.im.abs() < REALITY_TOL
            && cand.l2.im.abs() < REALITY_TOL;
        solutions.push(WeissbachSolution {
            count: multinomial(len, &parts),
            partition: parts,
            values: blocks.iter().map(|&(v, _)| (v.re, v.im)).collect(),
            lambda1: (cand.l1.re, cand.l1.im),
            lambda2: (cand.l2.re, cand.l2.im),
            residual,
            family: if cand.l2.norm() < LAMBDA2_ZERO_TOL {
                Lambda2Family::Lambda2Zero
            } else {
                Lambda2Family::Lambda2Nonzero
            },
            real,
            isolated: cand.isolated,
        });
    }
    solutions.sort_by(|a, b| {
        a.partition
            .cmp(&b.partition)
            .then_with(|| a.values.partial_cmp(&b.values).unwrap())
    });
    let lambda2_zero_count = solutions
        .iter()
        .filter(|s| s.family == Lambda2Family::Lambda2Zero)
        .map(|s| s.count)
        .sum();
    let lambda2_nonzero_count = solutions
        .iter()
        .filter(|s| s.family == Lambda2Family::Lambda2Nonzero)
        .map(|s| s.count)
        .sum();
    Ok(WeissbachCensus {
        n,
        total: lambda2_zero_count + lambda2_nonzero_count,
        lambda2_zero_count,
        lambda2_nonzero_count,
        all_real: solutions.iter().all(|s| s.real),
        solutions,
        continuum_shapes,
    })
}

fn merge_blocks(blocks: &[(Complex64, usize)]) -> Vec<(Complex64, usize)> {
    let mut items = blocks.to_vec();
    items.sort_by(|a, b| (a.0.re, a.0.im).partial_cmp(&(b.0.re, b.0.im)).unwrap());
    let mut merged: Vec<(Complex64, usize)> = Vec::new();
    for (v, m) in items {
        match merged.last_mut() {
            Some((prev, pm)) if (*prev - v).norm() < VALUE_DEDUP_TOL => *pm += m,
            _ => merged.push((v, m)),
        }
    }
    merged
}

/// Closed-form count of the `l2 = 0` family:
/// `sum_{h >= 1, 2h <= n+1} C(n+1, 2h) C(2h, h)`
/// (h components at `+(2h)^(-1/2)`, h at the negative, the rest zero).
pub fn lambda2_zero_census(n: usize) -> u64 {
    let len = n + 1;
    let mut acc = 0u64;
    let choose = |n: usize, k: usize| -> u64 {
        let mut c = 1u64;
        for i in 0..k {
            c = c * (n - i) as u64 / (i + 1) as u64;
        }
        c
    };
    let mut h = 1;
    while 2 * h <= len {
        acc += choose(len, 2 * h) * choose(2 * h, h);
        h += 1;
    }
    acc
}

/// Verification report for the explicitly published solution tuples.
#[derive(Debug, Clone, Serialize)]
pub struct TupleReport {
    pub n: usize,
    pub cases: Vec<(String, f64)>,
    pub max_residual: f64,
}

/// Substitutes the published `l2 != 0` tuples (and their sign partners)
/// into the system and reports residuals.
pub fn verify_published_tuples(n: usize) -> Result<TupleReport> {
    let tuples: Vec<(Vec<f64>, f64, f64, String)> = match n {
        3 => {
            let s = 1.0 / (2.0 * 3f64.sqrt());
            vec![
                (
                    vec![s, -3.0 * s, s, s],
                    -7.0 / 6.0,
                    1.0 / 3f64.sqrt(),
                    "(1,-3,1,1)/(2 sqrt 3)".into(),
                ),
                (
                    vec![-s, 3.0 * s, -s, -s],
                    -7.0 / 6.0,
                    -1.0 / 3f64.sqrt(),
                    "(-1,3,-1,-1)/(2 sqrt 3)".into(),
                ),
            ]
        }
        4 => {
            let a = 1.0 / 30f64.sqrt();
            let b = 1.0 / (2.0 * 5f64.sqrt());
            vec![
                (
                    vec![-2.0 * a, -2.0 * a, -2.0 * a, 3.0 * a, 3.0 * a],
                    -7.0 / 15.0,
                    -2.0 / 75.0 * 30f64.sqrt(),
                    "(-2,-2,-2,3,3)/sqrt 30".into(),
                ),
                (
                    vec![2.0 * a, 2.0 * a, 2.0 * a, -3.0 * a, -3.0 * a],
                    -7.0 / 15.0,
                    2.0 / 75.0 * 30f64.sqrt(),
                    "(2,2,2,-3,-3)/sqrt 30".into(),
                ),
                (
                    vec![b, -4.0 * b, b, b, b],
                    -13.0 / 10.0,
                    6.0 / 25.0 * 5f64.sqrt(),
                    "(1,-4,1,1,1)/(2 sqrt 5)".into(),
                ),
                (
                    vec![-b, 4.0 * b, -b, -b, -b],
                    -13.0 / 10.0,
                    -6.0 / 25.0 * 5f64.sqrt(),
                    "(-1,4,-1,-1,-1)/(2 sqrt 5)".into(),
                ),
            ]
        }
        _ => return Err(Error::DimensionTooLarge(n)),
    };
    let mut cases = Vec::new();
    let mut max_residual: f64 = 0.0;
    for (u, l1, l2, label) in tuples {
        let mut res: f64 = 0.0;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for &x in &u {
            res = res.max((4.0 * x * x * x + 2.0 * l1 * x + l2).abs());
            sum += x;
            sum_sq += x * x;
        }
        res = res.max(sum.abs()).max((sum_sq - 1.0).abs());
        max_residual = max_residual.max(res);
        cases.push((label, res));
    }
    Ok(TupleReport { n, cases, max_residual })
}

/// All cube roots of `4 t^3 + 2 l1 t + l2` for a real multiplier pair.
pub fn cubic_roots(l1: f64, l2: f64) -> Vec<Complex64> {
    companion_roots(&[l2, 2.0 * l1, 0.0, 4.0])
}
