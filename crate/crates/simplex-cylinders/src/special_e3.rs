//! Facet-area classification of tetrahedra and the equifacial closed form.
//!
//! The cubic constraint of the circumscribing program factors according to
//! the facet areas: a linear times an irreducible quadratic factor exactly
//! when the four areas split into two equal pairs with distinct values
//! (isolated extrema then drop from 36 to 20 + 8 = 28), and three linear
//! factors exactly when all four areas are equal (at most 24 extrema). An
//! equifacial tetrahedron is four pairwise non-adjacent corners of a
//! rectangular box, and its minimal circumscribing cylinder needs no
//! polynomial solving at all: the axis is perpendicular to two opposite
//! edges, so three candidate directions settle it.
//!
//! The two-pairs class is classified and its reduced bound reported, but it
//! is solved with the generic pipeline; the explicit linear factor of the
//! cubic is not constructed.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::geometry::{canonical_direction, face_areas_e3, recover_axis, Cylinder, SimplexN};
use crate::{Error, Result};

/// Relative tolerance for facet-area equality. Inputs near the class
/// boundary fall back to `Generic`, which never skips extrema.
const AREA_TOL: f64 = 1e-9;

/// Orthogonality tolerance of the opposite-edge midpoint connectors; above
/// it the box representation does not exist.
const FRAME_ORTHO_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SimplexClassTag {
    Generic,
    TwoPairs,
    Equifacial,
}

/// Facet-area class of a tetrahedron with the applicable bound on isolated
/// local extrema of the circumscribing program.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimplexClassE3 {
    pub tag: SimplexClassTag,
    /// Facet indices grouped by equal area (index = opposite vertex),
    /// groups sorted by ascending area.
    pub area_partition: Vec<Vec<usize>>,
    pub areas: [f64; 4],
    /// Bound on isolated local extrema: 36 generic, 28 two-pairs,
    /// 24 equifacial.
    pub extrema_bound: u32,
    /// Bezout numbers of the two reduced systems in the two-pairs case
    /// (quadratic factor, linear factor).
    pub two_pairs_split: Option<(u32, u32)>,
}

/// Groups the four facets by area and names the class.
pub fn classify(s: &SimplexN) -> Result<SimplexClassE3> {
    if s.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: s.dim() });
    }
    let areas = face_areas_e3(s)?;
    let max_area = areas.iter().fold(0.0f64, |m, a| m.max(*a));
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&a, &b| areas[a].partial_cmp(&areas[b]).unwrap());
    let mut groups: Vec<Vec<usize>> = vec![vec![order[0]]];
    for &i in &order[1..] {
        let last = groups.last_mut().unwrap();
        let anchor = last[0];
        if (areas[i] - areas[anchor]).abs() <= AREA_TOL * max_area {
            last.push(i);
        } else {
            groups.push(vec![i]);
        }
    }
    let sizes: Vec<usize> = groups.iter().map(|g| g.len()).collect();
    let (tag, extrema_bound, two_pairs_split) = match sizes.as_slice() {
        [4] => (SimplexClassTag::Equifacial, 24, None),
        [2, 2] => (SimplexClassTag::TwoPairs, 28, Some((20, 8))),
        _ => (SimplexClassTag::Generic, 36, None),
    };
    Ok(SimplexClassE3 { tag, area_partition: groups, areas, extrema_bound, two_pairs_split })
}

/// Box representation of an equifacial tetrahedron: half-lengths `w` and
/// the orthogonal frame + center mapping box coordinates onto the input.
///
/// Vertex `k` maps to `center + frame * b_k` with the sign patterns
/// `b_0 = (w1, w2, w3)`, `b_1 = (w1, -w2, -w3)`, `b_2 = (-w1, w2, -w3)`,
/// `b_3 = (-w1, -w2, w3)`. The frame is orthogonal but may be improper
/// depending on the handedness of the input labeling.
#[derive(Debug, Clone)]
pub struct BoxParams {
    pub w: [f64; 3],
    pub frame: DMatrix<f64>,
    pub center: DVector<f64>,
}

impl BoxParams {
    /// Box-pattern coordinates of vertex `k`.
    pub fn pattern(&self, k: usize) -> DVector<f64> {
        let [w1, w2, w3] = self.w;
        let rows = [
            [w1, w2, w3],
            [w1, -w2, -w3],
            [-w1, w2, -w3],
            [-w1, -w2, w3],
        ];
        DVector::from_column_slice(&rows[k])
    }

    /// Vertex `k` reproduced in input coordinates.
    pub fn vertex(&self, k: usize) -> DVector<f64> {
        &self.frame * self.pattern(k) + &self.center
    }
}

/// Recovers the box half-lengths and frame from the three opposite-edge
/// midpoint connectors, which are mutually orthogonal exactly for
/// equifacial input.
pub fn box_params(s: &SimplexN) -> Result<BoxParams> {
    let class = classify(s)?;
    if class.tag != SimplexClassTag::Equifacial {
        return Err(Error::NotEquifacial(format!("facet areas {:?}", class.areas)));
    }
    let connectors = opposite_edge_connectors(s);
    let units: Vec<DVector<f64>> = connectors.iter().map(|c| c / c.norm()).collect();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let cosine = units[i].dot(&units[j]).abs();
            if cosine > FRAME_ORTHO_TOL {
                return Err(Error::NotEquifacial(format!(
                    "edge-midpoint connectors not orthogonal (|cos| = {cosine:.3e})"
                )));
            }
        }
    }
    let w = [connectors[0].norm() / 2.0, connectors[1].norm() / 2.0, connectors[2].norm() / 2.0];
    let frame = DMatrix::from_fn(3, 3, |i, j| units[j][i]);
    let mut center = DVector::zeros(3);
    for p in s.vertices() {
        center += p;
    }
    center /= 4.0;
    let params = BoxParams { w, frame, center };
    let scale = s.max_edge_length();
    for k in 0..4 {
        let err = (params.vertex(k) - s.vertex(k)).norm();
        if err > 1e-9 * scale {
            return Err(Error::NotEquifacial(format!(
                "box reproduction failed at vertex {k} (error {err:.3e})"
            )));
        }
    }
    Ok(params)
}

/// Connectors between the midpoints of the three opposite-edge pairs
/// (01|23), (02|13), (03|12).
fn opposite_edge_connectors(s: &SimplexN) -> [DVector<f64>; 3] {
    let mid = |a: usize, b: usize| (s.vertex(a) + s.vertex(b)) * 0.5;
    [
        mid(0, 1) - mid(2, 3),
        mid(0, 2) - mid(1, 3),
        mid(0, 3) - mid(1, 2),
    ]
}

/// Squared circumscribing radius along the one-parameter family of
/// feasible directions `(0, v2, v3)` in box coordinates, as a quadratic in
/// `z2 = v2^2`:
/// `rho(z2) = -(w2^2 w3^2 / w1^2) z2^2 - (w2^2 - w3^2 - w2^2 w3^2 / w1^2) z2
///  + w1^2 + w2^2`.
///
/// The quadratic coefficient is negative, so `rho` is concave and its
/// minimum over `[0, 1]` sits at a boundary point; that is why the minimal
/// axis is perpendicular to two opposite edges.
pub fn rho_profile(w: &BoxParams, z2: f64) -> f64 {
    let [w1, w2, w3] = w.w;
    let (a, b, c) = (w1 * w1, w2 * w2, w3 * w3);
    -(b * c / a) * z2 * z2 - (b - c - b * c / a) * z2 + a + b
}

/// Minimal circumscribing cylinder of an equifacial tetrahedron from the
/// three opposite-edge cross-product candidates; no polynomial system.
pub fn equifacial_min_cylinder(s: &SimplexN) -> Result<Cylinder> {
    let params = box_params(s)?;
    let mut best: Option<(f64, DVector<f64>)> = None;
    for j in 0..3 {
        let v = canonical_direction(&params.frame.column(j).into_owned());
        let rec = recover_axis(&v, s)?;
        let candidate = (rec.radius, v);
        best = Some(match best {
            None => candidate,
            Some(cur) => {
                if candidate.0 < cur.0 - 1e-15
                    || ((candidate.0 - cur.0).abs() <= 1e-15
                        && candidate.1.iter().partial_cmp(cur.1.iter()) == Some(std::cmp::Ordering::Less))
                {
                    candidate
                } else {
                    cur
                }
            }
        });
    }
    let (_, v) = best.expect("three candidates always exist");
    let rec = recover_axis(&v, s)?;
    Cylinder::new(rec.world_axis(s)?, rec.radius)
}
