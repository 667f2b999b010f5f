//! Input parsing and report documents.
//!
//! Input is a JSON simplex document; reports are a single structured
//! document rendered either as JSON (stable field names, shortest
//! round-trip float formatting) or as plain text carrying the same numeric
//! payload. Radii that sit within `1e-10` of a known closed form are
//! annotated with it; the lookup is cosmetic and never feeds computation.

use serde::{Deserialize, Serialize};

use crate::enclosing::{EnclosingResult, OracleConfig, Witness};
use crate::formulation::BezoutBounds;
use crate::geometry::{Cylinder, SimplexN};
use crate::regular::{CensusEntry, StirlingCensusReport};
use crate::solver::{CriticalKind, CriticalPoint, SolverConfig};
use crate::special_e3::SimplexClassE3;
use crate::weissbach::{TupleReport, WeissbachSolution};
use crate::{Error, Result};

/// JSON input document: a labeled list of `(n+1) x n` vertex coordinates.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SimplexInputDoc {
    pub dim: usize,
    pub vertices: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl SimplexInputDoc {
    pub fn from_simplex(s: &SimplexN, label: Option<String>) -> Self {
        Self {
            dim: s.dim(),
            vertices: s.vertices().iter().map(|p| p.iter().copied().collect()).collect(),
            label,
        }
    }
}

/// Parses and validates a simplex document; errors carry the JSON position
/// for malformed input and name the degeneracy test for flat input.
pub fn parse_simplex(bytes: &[u8]) -> Result<(SimplexN, Option<String>)> {
    let doc: SimplexInputDoc =
        serde_json::from_slice(bytes).map_err(|e| Error::Schema(e.to_string()))?;
    let simplex = simplex_from_doc(&doc)?;
    Ok((simplex, doc.label))
}

pub fn simplex_from_doc(doc: &SimplexInputDoc) -> Result<SimplexN> {
    if doc.vertices.len() != doc.dim + 1 {
        return Err(Error::Shape(format!(
            "dim {} requires {} vertices, document has {}",
            doc.dim,
            doc.dim + 1,
            doc.vertices.len()
        )));
    }
    for (i, row) in doc.vertices.iter().enumerate() {
        if row.len() != doc.dim {
            return Err(Error::Shape(format!(
                "vertex {i} has {} coordinates, expected {}",
                row.len(),
                doc.dim
            )));
        }
    }
    match SimplexN::from_rows(doc.dim, &doc.vertices) {
        Ok(s) => Ok(s),
        Err(Error::SingularMatrix { det, tol }) => Err(Error::Degenerate(format!(
            "vertices fail the affine-independence test |det M| >= 1e-10 * (max edge)^n \
             (|det| = {det:.3e}, tolerance = {tol:.3e})"
        ))),
        Err(e) => Err(e),
    }
}

/// Closed forms recognized for radius annotation.
const CLOSED_FORMS: &[(f64, &str)] = &[
    (std::f64::consts::FRAC_1_SQRT_2, "1/sqrt(2)"),
    (0.782_623_792_124_926_4, "7*sqrt(5)/20"),
    (0.75, "3/4"),
    (0.5, "1/2"),
    (1.0, "1"),
    (std::f64::consts::SQRT_2, "sqrt(2)"),
    (0.866_025_403_784_438_6, "sqrt(3)/2"),
];

pub fn closed_form_annotation(r: f64) -> Option<&'static str> {
    CLOSED_FORMS
        .iter()
        .find(|(v, _)| (r - v).abs() < 1e-10)
        .map(|&(_, name)| name)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CylinderDoc {
    /// Moment point of the axis (closest point to the origin).
    pub point: Vec<f64>,
    pub direction: Vec<f64>,
    pub radius: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius_closed_form: Option<String>,
}

impl CylinderDoc {
    pub fn from_cylinder(c: &Cylinder) -> Self {
        Self {
            point: c.axis.moment().iter().copied().collect(),
            direction: c.axis.direction().iter().copied().collect(),
            radius: c.radius,
            radius_closed_form: closed_form_annotation(c.radius).map(String::from),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CriticalPointDoc {
    pub direction: Vec<f64>,
    pub moment: Vec<f64>,
    pub radius: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius_closed_form: Option<String>,
    pub kind: CriticalKind,
    pub lambda1: f64,
    pub lambda2: f64,
    pub residual: f64,
    pub basin_count: usize,
}

impl CriticalPointDoc {
    pub fn from_point(p: &CriticalPoint) -> Self {
        Self {
            direction: p.v.iter().copied().collect(),
            moment: p.u.iter().copied().collect(),
            radius: p.r,
            radius_closed_form: closed_form_annotation(p.r).map(String::from),
            kind: p.kind,
            lambda1: p.lambda1,
            lambda2: p.lambda2,
            residual: p.residual,
            basin_count: p.basin_count,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnclosingDoc {
    pub cylinder: CylinderDoc,
    pub witness: Witness,
    pub support: Vec<usize>,
    pub oracle_radius: f64,
    pub oracle_direction: Vec<f64>,
    pub oracle_gap: f64,
}

impl EnclosingDoc {
    pub fn from_result(r: &EnclosingResult) -> Self {
        Self {
            cylinder: CylinderDoc::from_cylinder(&r.cylinder),
            witness: r.witness,
            support: r.support.clone(),
            oracle_radius: r.oracle_radius,
            oracle_direction: r.oracle_direction.iter().copied().collect(),
            oracle_gap: r.oracle_gap,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleDoc {
    pub radius: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius_closed_form: Option<String>,
    pub direction: Vec<f64>,
    pub samples: usize,
    pub refine_iters: usize,
    pub rng_seed: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e3_system: Option<u64>,
    pub general: u64,
    pub stirling: u64,
}

impl BoundsDoc {
    pub fn from_bounds(n: usize, b: &BezoutBounds) -> Self {
        Self { n, e3_system: b.e3_system, general: b.general, stirling: b.stirling }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularDoc {
    pub n: usize,
    pub min_radius: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_radius_closed_form: Option<String>,
    pub min_direction: Vec<f64>,
    pub census_total: u64,
    pub census_real: u64,
    pub census_complex: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stirling: Option<StirlingCensusReport>,
    pub empty_block_exceptions: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<CensusEntry>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeissbachDoc {
    pub n: usize,
    pub total: u64,
    pub lambda2_zero: u64,
    pub lambda2_nonzero: u64,
    pub lambda2_zero_closed_form: u64,
    pub all_real: bool,
    pub continuum_shapes: Vec<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tuple_verification: Option<TupleReport>,
    pub solutions: Vec<WeissbachSolution>,
}

/// Configuration echo: everything needed to reproduce the run.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ConfigEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver: Option<SolverConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleConfig>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct TimingsDoc {
    pub stages_ms: Vec<(String, f64)>,
    pub total_ms: f64,
}

/// The single structured report every subcommand emits.
#[derive(Debug, Clone, Serialize)]
pub struct ReportDoc {
    pub command: String,
    pub config: ConfigEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<SimplexInputDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<SimplexClassE3>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical_points: Option<Vec<CriticalPointDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub global_min: Option<CylinderDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enclosing: Option<EnclosingDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular: Option<RegularDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weissbach: Option<WeissbachDoc>,
    pub timings: TimingsDoc,
}

impl ReportDoc {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            config: ConfigEcho::default(),
            input: None,
            classification: None,
            critical_points: None,
            global_min: None,
            enclosing: None,
            oracle: None,
            bounds: None,
            regular: None,
            weissbach: None,
            timings: TimingsDoc::default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Plain-text rendering of the same numeric payload.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(&mut out, format!("command: {}", self.command));
        if let Some(solver) = &self.config.solver {
            push(
                &mut out,
                format!(
                    "solver config: restarts={} seed={} newton_tol={} dedup_angle_tol={}",
                    solver.restarts, solver.rng_seed, solver.newton_tol, solver.dedup_angle_tol
                ),
            );
        }
        if let Some(oracle) = &self.config.oracle {
            push(
                &mut out,
                format!(
                    "oracle config: samples={} refine_iters={} seed={}",
                    oracle.samples, oracle.refine_iters, oracle.rng_seed
                ),
            );
        }
        if let Some(input) = &self.input {
            push(&mut out, format!("input: dim={} label={:?}", input.dim, input.label));
            for (i, v) in input.vertices.iter().enumerate() {
                push(&mut out, format!("  vertex {i}: {}", join_floats(v)));
            }
        }
        if let Some(class) = &self.classification {
            push(
                &mut out,
                format!(
                    "classification: {:?} (areas {}, extrema bound {}{})",
                    class.tag,
                    join_floats(&class.areas),
                    class.extrema_bound,
                    class
                        .two_pairs_split
                        .map(|(a, b)| format!(", split {a}+{b}"))
                        .unwrap_or_default()
                ),
            );
        }
        if let Some(points) = &self.critical_points {
            push(&mut out, format!("critical directions ({}):", points.len()));
            for p in points {
                push(
                    &mut out,
                    format!(
                        "  r={}{} kind={:?} v=({}) residual={} basins={}",
                        p.radius,
                        p.radius_closed_form
                            .as_deref()
                            .map(|c| format!(" [{c}]"))
                            .unwrap_or_default(),
                        p.kind,
                        join_floats(&p.direction),
                        p.residual,
                        p.basin_count
                    ),
                );
            }
        }
        if let Some(gm) = &self.global_min {
            push(&mut out, format!("global minimum: {}", cylinder_line(gm)));
        }
        if let Some(enc) = &self.enclosing {
            push(
                &mut out,
                format!(
                    "smallest enclosing cylinder: {} witness={:?} support={:?}",
                    cylinder_line(&enc.cylinder),
                    enc.witness,
                    enc.support
                ),
            );
            push(
                &mut out,
                format!(
                    "oracle comparison: radius={} gap={}",
                    enc.oracle_radius, enc.oracle_gap
                ),
            );
        }
        if let Some(oracle) = &self.oracle {
            push(
                &mut out,
                format!(
                    "oracle: radius={}{} direction=({}) samples={}",
                    oracle.radius,
                    oracle
                        .radius_closed_form
                        .as_deref()
                        .map(|c| format!(" [{c}]"))
                        .unwrap_or_default(),
                    join_floats(&oracle.direction),
                    oracle.samples
                ),
            );
        }
        if let Some(b) = &self.bounds {
            push(
                &mut out,
                format!(
                    "solution bounds: n={} general=2*3^(n+1)={} stirling=6*S(n+1,3)={}{}",
                    b.n,
                    b.general,
                    b.stirling,
                    b.e3_system.map(|x| format!(" reduced-system={x}")).unwrap_or_default()
                ),
            );
        }
        if let Some(reg) = &self.regular {
            push(
                &mut out,
                format!(
                    "regular simplex n={}: smallest circumscribing radius = {}{}",
                    reg.n,
                    reg.min_radius,
                    reg.min_radius_closed_form
                        .as_deref()
                        .map(|c| format!(" [{c}]"))
                        .unwrap_or_default()
                ),
            );
            push(
                &mut out,
                format!(
                    "census: total={} real={} complex={}",
                    reg.census_total, reg.census_real, reg.census_complex
                ),
            );
            if let Some(st) = &reg.stirling {
                push(
                    &mut out,
                    format!(
                        "stirling bound 6*S(n+1,3)={} observed={} equal={} slack={}",
                        st.bound, st.census_total, st.equal, st.slack
                    ),
                );
            }
            for e in &reg.empty_block_exceptions {
                push(&mut out, format!("note: {e}"));
            }
            if let Some(entries) = &reg.entries {
                for e in entries {
                    push(
                        &mut out,
                        format!(
                            "  blocks {:?} x{} real={} sigma4=({}, {}) values={:?}",
                            e.partition, e.count, e.real, e.sigma4.0, e.sigma4.1, e.values
                        ),
                    );
                }
            }
        }
        if let Some(w) = &self.weissbach {
            push(
                &mut out,
                format!(
                    "quartic-system census n={}: {} solutions ({} + {})",
                    w.n, w.total, w.lambda2_zero, w.lambda2_nonzero
                ),
            );
            push(
                &mut out,
                format!(
                    "lambda2 = 0 closed form: {}; all real: {}",
                    w.lambda2_zero_closed_form, w.all_real
                ),
            );
            for shape in &w.continuum_shapes {
                push(&mut out, format!("continuum family at block shape {shape:?}"));
            }
            if let Some(t) = &w.tuple_verification {
                push(&mut out, format!("published tuples: max residual {}", t.max_residual));
                for (label, res) in &t.cases {
                    push(&mut out, format!("  {label}: residual {res}"));
                }
            }
            for s in &w.solutions {
                push(
                    &mut out,
                    format!(
                        "  blocks {:?} x{} values={:?} l1={} l2={} family={:?}{}",
                        s.partition,
                        s.count,
                        s.values,
                        s.lambda1.0,
                        s.lambda2.0,
                        s.family,
                        if s.isolated { "" } else { " (non-isolated)" }
                    ),
                );
            }
        }
        for (stage, ms) in &self.timings.stages_ms {
            push(&mut out, format!("timing {stage}: {ms} ms"));
        }
        push(&mut out, format!("timing total: {} ms", self.timings.total_ms));
        out
    }
}

fn join_floats(xs: &[f64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn cylinder_line(c: &CylinderDoc) -> String {
    format!(
        "radius={}{} axis point=({}) direction=({})",
        c.radius,
        c.radius_closed_form
            .as_deref()
            .map(|cf| format!(" [{cf}]"))
            .unwrap_or_default(),
        join_floats(&c.point),
        join_floats(&c.direction)
    )
}
