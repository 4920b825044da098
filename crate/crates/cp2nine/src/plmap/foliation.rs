//! The foliation of the boundary of Y14 by bigon loops and the matching
//! foliation of [0, π] × D² by coned disks.
//!
//! In chart coordinates (α, β) on the central torus each loop is the graph
//! α = g_t(β) of a two-segment polygon with corners A(t), B(t) and
//! A(t) - (0, 3). For t ∈ [0, t*] the corners slide linearly along the edges
//! 8–5 and 6–9 from the loop α = 3/2 (∂D') to the vertices 5 and 9; at t = t*
//! the loop is ∂(259); for t ∈ [t*, 1] they move on to (0, 1) and (0, 0), the
//! loop α = 0 (∂D''). The image of the loop at t is coned to (π(1-t), 0),
//! the point where its long arc meets the segment s from (3/2, 0) to (0, -1)
//! through vertex 2.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{Half, PLPoint, PlModel};
use crate::error::Result;
use crate::geometry::ProjectivePoint;
use crate::label::lbl;
use crate::report::Check;
use crate::sx;

/// Loop parameter of ∂(259), where the loops pass from B14' into B14''.
pub const SECTION_BREAK: f64 = 3.0 / 7.0;

const P5: [f64; 2] = [3.0 / 7.0, 9.0 / 7.0];
const P9: [f64; 2] = [9.0 / 7.0, 6.0 / 7.0];

fn lerp(a: [f64; 2], b: [f64; 2], u: f64) -> [f64; 2] {
    [a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1])]
}

/// Corners A(t), B(t) of the loop at parameter t.
pub fn corners(t: f64) -> ([f64; 2], [f64; 2]) {
    let t = t.clamp(0.0, 1.0);
    if t <= SECTION_BREAK {
        let u = t / SECTION_BREAK;
        (lerp([1.5, 2.0], P5, u), lerp([1.5, 1.0], P9, u))
    } else {
        let u = (t - SECTION_BREAK) / (1.0 - SECTION_BREAK);
        (lerp(P5, [0.0, 1.0], u), lerp(P9, [0.0, 0.0], u))
    }
}

/// g_t(β): the α coordinate of the loop at parameter t over β (mod 3).
pub fn loop_alpha(t: f64, beta: f64) -> f64 {
    let (a, b) = corners(t);
    let a2 = [a[0], a[1] - 3.0];
    let mut y = (beta - a2[1]).rem_euclid(3.0) + a2[1];
    if y <= a2[1] {
        y += 3.0;
    }
    if y >= b[1] {
        let u = (a[1] - y) / (a[1] - b[1]);
        a[0] + u * (b[0] - a[0])
    } else {
        let u = (b[1] - y) / (b[1] - a2[1]);
        b[0] + u * (a2[0] - b[0])
    }
}

/// θ of the leaf at parameter t above z ∈ D²: the cone from (π(1-t), 0)
/// over the image loop.
pub fn leaf_theta(t: f64, z: Complex64) -> f64 {
    let r = z.norm().min(1.0);
    let beta = 3.0 * z.arg() / (2.0 * PI);
    (1.0 - r) * PI * (1.0 - t) + r * 2.0 * PI * loop_alpha(t, beta) / 3.0
}

/// The leaf parameter through (θ, z), by bisection (leaves decrease in t).
pub fn locate_leaf(theta: f64, z: Complex64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..64 {
        let m = 0.5 * (lo + hi);
        if leaf_theta(m, z) > theta {
            lo = m;
        } else {
            hi = m;
        }
    }
    0.5 * (lo + hi)
}

/// Point of the leaf t at radius r and angle φ.
pub fn section_point(t: f64, radius: f64, angle: f64) -> (f64, Complex64) {
    let z = Complex64::from_polar(radius, angle);
    (leaf_theta(t, z), z)
}

/// Position of a point of B14 within the foliation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SectionCoords {
    pub t: f64,
    pub radius: f64,
    pub angle: f64,
    /// The point lies in the T-image of Y14.
    pub mirrored: bool,
}

/// One leaf: its boundary loop on the torus and its core point.
#[derive(Clone, Debug)]
pub struct FoliationSection {
    pub t: f64,
    pub loop_points: Vec<PLPoint>,
    pub core_point: PLPoint,
    pub half: Half,
}

impl FoliationSection {
    /// Image of the core point, [1 : e^{iπ(1-t)} : 0].
    pub fn image_centre(&self) -> ProjectivePoint {
        super::upsilon_point(PI * (1.0 - self.t), Complex64::new(0.0, 0.0))
    }
}

fn segment_hits(p: [f64; 2], q: [f64; 2], a: (f64, f64), b: (f64, f64)) -> Option<f64> {
    let d = [q[0] - p[0], q[1] - p[1]];
    let e = [b.0 - a.0, b.1 - a.1];
    let den = d[0] * e[1] - d[1] * e[0];
    if den.abs() < 1e-15 {
        return None;
    }
    let r = [a.0 - p[0], a.1 - p[1]];
    let s = (r[0] * e[1] - r[1] * e[0]) / den;
    let u = (r[0] * d[1] - r[1] * d[0]) / den;
    (s > 1e-12 && s < 1.0 - 1e-12 && (-1e-12..=1.0 + 1e-12).contains(&u)).then_some(s)
}

impl PlModel {
    pub fn locate_section(&self, p: &PLPoint) -> Result<SectionCoords> {
        let (th, z, mirrored) = self.upsilon_coords(p)?;
        Ok(SectionCoords { t: locate_leaf(th, z), radius: z.norm(), angle: z.arg(), mirrored })
    }

    /// Chart polygon of the loop at t, refined at every crossing with an
    /// edge of the half's torus triangles.
    fn loop_polygon(&self, t: f64, half: Half) -> Vec<[f64; 2]> {
        let (a, b) = corners(t);
        let a2 = [a[0], a[1] - 3.0];
        let mut out = Vec::new();
        for (p, q) in [(a, b), (b, a2)] {
            out.push(p);
            let mut hits = Vec::new();
            for (_, ch) in self.torus_charts(half) {
                for k in -2..=2 {
                    let sh = 3.0 * k as f64;
                    let c = ch.map(|(x, y)| (x, y + sh));
                    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
                        if let Some(s) = segment_hits(p, q, c[i], c[j]) {
                            hits.push(s);
                        }
                    }
                }
            }
            hits.sort_by(f64::total_cmp);
            hits.dedup_by(|x, y| (*x - *y).abs() < 1e-12);
            out.extend(hits.into_iter().map(|s| lerp(p, q, s)));
        }
        out
    }

    pub fn section(&self, t: f64) -> Result<FoliationSection> {
        let half = if t >= SECTION_BREAK { Half::Inner } else { Half::Outer };
        let loop_points = self
            .loop_polygon(t, half)
            .into_iter()
            .map(|[a, b]| self.locate_chart(half, a, b))
            .collect::<Result<Vec<_>>>()?;
        let core_point = if t >= SECTION_BREAK {
            let rho = (1.0 - t) / (1.0 - SECTION_BREAK);
            let w = rho / 3.0;
            PLPoint::from_pairs(&[(lbl("[14]"), 1.0 - rho), (lbl("2"), w), (lbl("5"), w), (lbl("9"), w)])?
        } else {
            let c = self.outer_position(&PLPoint::barycenter(&sx("259")));
            let a = self.apex();
            let rho = t / SECTION_BREAK;
            self.locate_outer([0, 1, 2].map(|k| a[k] + rho * (c[k] - a[k])))?
        };
        Ok(FoliationSection { t, loop_points, core_point, half })
    }

    /// `n` sections with evenly spaced parameters from 0 to 1.
    pub fn foliation_sections(&self, n: usize) -> Result<Vec<FoliationSection>> {
        let n = n.max(2);
        (0..n).map(|k| self.section(k as f64 / (n - 1) as f64)).collect()
    }
}

/// Runtime checks on `n` sections of the foliation.
pub fn verify_foliation(model: &PlModel, n: usize) -> Result<Vec<Check>> {
    let sections = model.foliation_sections(n)?;
    let mut checks = Vec::new();

    // endpoints: ∂D' and ∂D'' with cores [[23][89]] and [14]
    let first = &sections[0];
    let last = sections.last().expect("n >= 2");
    let mut end_err: f64 = 0.0;
    for (sec, u) in [(first, -1.0), (last, 1.0)] {
        for p in &sec.loop_points {
            let c = model.eval_h147(p)?.canonical();
            end_err = end_err.max((c.0[1] - Complex64::new(u, 0.0)).norm());
        }
    }
    let apex = PLPoint::barycenter(&sx("2389"));
    let core0 = first
        .core_point
        .on(&apex.simplex)
        .map(|p| p.barycentric.iter().zip(&apex.barycentric).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max));
    let core_ok = core0.is_ok_and(|e| e < 1e-12) && (1.0 - last.core_point.weight(&lbl("[14]"))).abs() < 1e-12;
    checks.push(Check::new(
        "section_endpoints",
        end_err < 1e-12 && core_ok,
        "t=0: loop in [1:-1:u], core [[23][89]]; t=1: loop in [1:1:u], core [14]",
        format!("max deviation {end_err:.1e}; cores {}", if core_ok { "match" } else { "differ" }),
        "the extreme loops bound the cutting disks",
    ));

    // disjointness of consecutive loops
    let mut gap = f64::INFINITY;
    for w in sections.windows(2) {
        for k in 0..600 {
            let beta = 3.0 * k as f64 / 600.0;
            gap = gap.min(loop_alpha(w[0].t, beta) - loop_alpha(w[1].t, beta));
        }
    }
    checks.push(Check::new(
        "loops_disjoint",
        gap > 0.0,
        "consecutive loops separated (gap > 0)",
        format!("min gap {gap:.3e} over {} sections", sections.len()),
        "the loops are disjoint",
    ));

    // each loop meets s once, at the parameter matching its cone point
    let mut worst_count = 1;
    let mut pos_err: f64 = 0.0;
    for sec in &sections {
        let f = |lam: f64| loop_alpha(sec.t, -lam) - 1.5 * (1.0 - lam);
        let m = 2000;
        let mut count = 0;
        let mut prev = f(0.0);
        if prev == 0.0 {
            count += 1;
        }
        for k in 1..=m {
            let cur = f(k as f64 / m as f64);
            if cur == 0.0 || (prev != 0.0 && prev.signum() != cur.signum()) {
                count += 1;
            }
            prev = cur;
        }
        if count != 1 {
            worst_count = count;
        }
        pos_err = pos_err.max(f(sec.t).abs());
    }
    checks.push(Check::new(
        "loops_cross_s_once",
        worst_count == 1 && pos_err < 1e-12,
        "one crossing per loop, at λ = t (centre θ = π(1-t))",
        format!(
            "crossings per loop {}, max offset {pos_err:.1e}",
            if worst_count == 1 { "1".into() } else { worst_count.to_string() }
        ),
        "the intersection with s is a centre of symmetry of each loop",
    ));

    // core points map to the cone centres
    let mut core_err: f64 = 0.0;
    let mut loop_err: f64 = 0.0;
    for sec in &sections {
        core_err = core_err.max(model.eval_h14(&sec.core_point)?.distance(&sec.image_centre()));
        for p in &sec.loop_points {
            let (a, b) = model.chart_of(sec.half, p).expect("torus point");
            loop_err = loop_err.max((a - loop_alpha(sec.t, b)).abs());
            loop_err = loop_err.max(model.eval_h14(p)?.distance(&model.eval_h147(p)?));
        }
    }
    checks.push(Check::new(
        "core_path",
        core_err < 1e-12,
        "core [[23][89]] -> [259] -> [14] maps to (π(1-t), 0)",
        format!("max error {core_err:.1e}"),
        "the core path runs through [14], [259], [[23][89]]",
    ));
    checks.push(Check::new(
        "loop_images",
        loop_err < 1e-12,
        "loop points lie on α = g_t(β) and h14 = h147 there",
        format!("max error {loop_err:.1e}"),
        "the loops are polygonal on the boundary torus",
    ));

    // where the loops pass from B14' to B14''
    let mut outer_max = f64::NEG_INFINITY;
    let mut inner_min = f64::INFINITY;
    for sec in &sections {
        let pts: Vec<[f64; 2]> = model.loop_polygon(sec.t, Half::Inner);
        let all = |h: Half| pts.iter().all(|q| model.locate_chart(h, q[0], q[1]).is_ok());
        if all(Half::Inner) {
            inner_min = inner_min.min(sec.t);
        }
        let pts = model.loop_polygon(sec.t, Half::Outer);
        if pts.iter().all(|q| model.locate_chart(Half::Outer, q[0], q[1]).is_ok()) {
            outer_max = outer_max.max(sec.t);
        }
    }
    let ok = outer_max <= SECTION_BREAK + 1e-12 && inner_min >= SECTION_BREAK - 1e-12;
    checks.push(Check::new(
        "partition_crossing",
        ok,
        format!("loops in B14' for t <= {SECTION_BREAK:.6}, in B14'' after"),
        format!("last loop in B14' at t={outer_max:.6}, first in B14'' at t={inner_min:.6}"),
        "the foliation respects the split into B14' and B14''",
    ));
    Ok(checks)
}
