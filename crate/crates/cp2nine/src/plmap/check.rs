//! Sampled property checks and mesh export.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{foliation::verify_foliation, upsilon_point, Half, PLPoint, PlModel};
use crate::error::Result;
use crate::geometry::{
    beta_membership, central_vertex_positions, sigma_inverse, sigma_map, star_map, tau_map, ProjectivePoint,
};
use crate::label::{lbl, Label};
use crate::report::{Check, Report};
use crate::{sx, Simplex};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlOptions {
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
    pub sections: usize,
}

impl Default for PlOptions {
    fn default() -> Self {
        Self { samples: 10_000, tol: 1e-9, seed: 0, sections: 256 }
    }
}

fn dirichlet(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let e: Vec<f64> = (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    let s: f64 = e.iter().sum();
    e.into_iter().map(|x| x / s).collect()
}

fn random_point(rng: &mut ChaCha8Rng, facets: &[Simplex]) -> PLPoint {
    let f = &facets[rng.gen_range(0..facets.len())];
    PLPoint { simplex: f.clone(), barycentric: dirichlet(rng, f.len()) }
}

fn fmt_err(x: f64) -> String {
    format!("{x:.2e}")
}

/// Expected images of the 13 vertices of the subdivided complex.
pub(crate) fn vertex_table() -> Vec<(Label, ProjectivePoint)> {
    let mut out = vec![
        (lbl("1"), ProjectivePoint::real(1.0, 0.0, 0.0)),
        (lbl("4"), ProjectivePoint::real(0.0, 1.0, 0.0)),
        (lbl("7"), ProjectivePoint::real(0.0, 0.0, 1.0)),
        (lbl("[14]"), ProjectivePoint::real(1.0, 1.0, 0.0)),
        (lbl("[17]"), ProjectivePoint::real(1.0, 0.0, 1.0)),
        (lbl("[47]"), ProjectivePoint::real(0.0, 1.0, 1.0)),
        (lbl("[147]"), ProjectivePoint::real(1.0, 1.0, 1.0)),
    ];
    for (v, p) in central_vertex_positions() {
        if v != lbl("[147]") {
            out.push((v, star_map(&p.to_f64())));
        }
    }
    out
}

pub fn check_map_properties(samples: usize, tol: f64, seed: u64) -> Result<Report> {
    check_with(&PlModel::new()?, PlOptions { samples, tol, seed, ..PlOptions::default() })
}

pub(crate) fn check_with(m: &PlModel, opt: PlOptions) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(opt.seed);
    let tol = opt.tol;
    let n = opt.samples.max(1);
    let facets: Vec<Simplex> = m.subdivided.facets().to_vec();
    let mut r = Report::new("plmap", opt.seed);
    r.tolerances.insert("tol".into(), tol);
    r.tolerances.insert("boundary".into(), 1e-12);

    // vertex table
    let mut verr: f64 = 0.0;
    for (v, want) in vertex_table() {
        verr = verr.max(m.eval_h(&m.vertex_point(&v)?)?.distance(&want));
    }
    r.checks.push(Check::new(
        "vertex_images",
        verr < 1e-12,
        "13 vertices on their table images",
        format!("max error {}", fmt_err(verr)),
        "vertices 1, 4, 7 go to the coordinate points; the table of vertex images",
    ));

    // named points off the vertex set
    let named = [
        (PLPoint::barycenter(&sx("259")), upsilon_point(4.0 * PI / 7.0, Complex64::new(0.0, 0.0)), "[259]"),
        (PLPoint::barycenter(&sx("56")), ProjectivePoint::real(1.0, 1.0, -1.0), "[56]"),
        (PLPoint::barycenter(&sx("2389")), ProjectivePoint::real(1.0, -1.0, 0.0), "[[23][89]]"),
    ];
    let mut nerr: f64 = 0.0;
    for (p, want, _) in &named {
        nerr = nerr.max(m.eval_h14(p)?.distance(want));
    }
    let b258 = m.eval_h147(&PLPoint::barycenter(&sx("258")))?;
    let fixed = b258.distance(&sigma_map(&b258));
    r.checks.push(Check::new(
        "named_points",
        nerr < 1e-12 && fixed < 1e-12,
        "[259]->[1:e^{4πi/7}:0], [56]->[1:1:-1], [[23][89]]->[1:-1:0]; image of [258] Σ-fixed",
        format!("max error {}, Σ-defect {}", fmt_err(nerr), fmt_err(fixed)),
        "the table entries for [56] and [259]",
    ));

    // h14 agrees with h147 on the torus
    let torus: Vec<Simplex> = m.layout.complex.facets().to_vec();
    let mut berr: f64 = 0.0;
    for _ in 0..n.min(2000) {
        let p = random_point(&mut rng, &torus);
        berr = berr.max(m.eval_h14(&p)?.distance(&m.eval_h147(&p)?));
    }
    r.checks.push(Check::new(
        "boundary_compatibility",
        berr < 1e-12,
        "h14 = h147 on the central torus (< 1e-12)",
        format!("max error {}", fmt_err(berr)),
        "h14 extends the torus isometry",
    ));

    // continuity across shared faces
    let ridges = m.subdivided.ridge_incidence();
    let mut cerr: f64 = 0.0;
    for _ in 0..n {
        let f = &facets[rng.gen_range(0..facets.len())];
        let i = rng.gen_range(0..f.len());
        let ridge = f.facet_without(i).expect("ridge");
        let others = &ridges[&ridge];
        let g = others.iter().map(|&k| &facets[k]).find(|g| *g != f).expect("closed pseudomanifold");
        let w = dirichlet(&mut rng, ridge.len());
        let q = PLPoint { simplex: ridge, barycentric: w };
        let a = m.eval_h(&q.on(f)?)?;
        let b = m.eval_h(&q.on(g)?)?;
        cerr = cerr.max(a.distance(&b));
    }
    r.checks.push(Check::new(
        "continuity",
        cerr < tol,
        format!("shared-face discrepancy < {tol:.0e}"),
        format!("max {} over {n} ridge samples", fmt_err(cerr)),
        "h is a continuous map",
    ));

    // membership, conjugation, cone consistency
    let (s, t) = (m.s().clone(), m.t().clone());
    let mut violations = 0usize;
    let mut serr: f64 = 0.0;
    let mut terr: f64 = 0.0;
    let mut literal: f64 = 0.0;
    let mut cone: f64 = 0.0;
    let mut d_on_disk: f64 = 0.0;
    for _ in 0..n {
        let p = random_point(&mut rng, &facets);
        let img = m.eval_h(&p)?;
        let j = [1u32, 4, 7].into_iter().find(|j| p.simplex.contains(&Label::orig(*j))).expect("piece");
        if !beta_membership(&img, tol).contains(&j) {
            violations += 1;
        }
        let sp = m.eval_h(&p.relabel(&s)?)?;
        serr = serr.max(sp.distance(&sigma_inverse(&img)));
        literal = literal.max(sp.distance(&sigma_map(&img)));
        terr = terr.max(m.eval_h(&p.relabel(&t)?)?.distance(&tau_map(&img)));

        // scaling along the cone line through p
        let idx = [1u32, 4, 7].iter().position(|x| *x == j).expect("index");
        let (sv, q) = p.split(&Label::orig(j))?;
        if let Some(q) = q {
            let full = m.eval_h(&q.on(&p.simplex)?)?;
            let fm = full.0.map(|c| (c / full.0[idx]).norm());
            let pm = img.0.map(|c| (c / img.0[idx]).norm());
            for k in (0..3).filter(|k| *k != idx) {
                cone = cone.max((pm[k] - sv * fm[k]).abs());
            }
        }
    }
    // points of D'' land in {[1:1:z], |z| <= 1}
    for _ in 0..n.min(2000) {
        let beta = 3.0 * rng.gen::<f64>();
        let rho = rng.gen::<f64>();
        let edge = m.locate_chart(Half::Inner, 0.0, beta)?;
        let y = edge.clone();
        let mut pairs: Vec<(Label, f64)> =
            y.simplex.vertices().iter().cloned().zip(y.barycentric.iter().map(|w| w * rho)).collect();
        pairs.push((lbl("[14]"), 1.0 - rho));
        let p = PLPoint::from_pairs(&pairs)?;
        let img = m.eval_disk_cone(&p)?.canonical();
        let dev = (img.0[1] - Complex64::new(1.0, 0.0)).norm().max((img.0[2].norm() - 1.0).max(0.0));
        d_on_disk = d_on_disk.max(dev).max((img.0[2].norm() - rho).abs());
    }
    r.checks.push(Check::new(
        "membership",
        violations == 0,
        format!("h(B_j) ⊆ β_j, 0 violations at tol {tol:.0e}"),
        format!("{violations} violations over {n} samples"),
        "h maps B_j to β_j",
    ));
    r.checks.push(Check::new(
        "s_conjugation",
        serr < tol,
        format!("h∘S = Σ∘h < {tol:.0e}, Σ acting on points as (z1,z4,z7) -> (z7,z1,z4)"),
        format!("max error {}", fmt_err(serr)),
        "h conjugates S to Σ",
    ));
    r.checks.push(Check::new(
        "sigma_convention",
        literal > 0.1 && serr < tol,
        "coordinate shift (z1,z4,z7) -> (z4,z7,z1) is not the conjugate of S (vertex 4 must go to [0:1:0])",
        format!("error with that shift {literal:.3}"),
        "h conjugates S to Σ and sends 1, 4, 7 to the coordinate points",
    ));
    r.checks.push(Check::new(
        "t_conjugation",
        terr < tol,
        format!("h∘T = 𝒯∘h < {tol:.0e}"),
        format!("max error {}", fmt_err(terr)),
        "h conjugates T to complex conjugation",
    ));
    r.checks.push(Check::new(
        "cone_consistency",
        cone < 1e-12,
        "non-j moduli are s times their boundary values",
        format!("max deviation {}", fmt_err(cone)),
        "h is extended over each B_j by coning",
    ));
    r.checks.push(Check::new(
        "disk_bound",
        d_on_disk < 1e-12,
        "h(D'') ⊆ {[1:1:z] : |z| <= 1}, radial in z",
        format!("max deviation {}", fmt_err(d_on_disk)),
        "the loop a14 bounds a disk in β14",
    ));

    // local injectivity and leaf reconstruction on B14
    let b14: Vec<Simplex> = m.b14.facets().to_vec();
    let mut min_img = f64::INFINITY;
    let delta = 1e-3;
    let mut pairs = 0;
    for _ in 0..n {
        let f = &facets[rng.gen_range(0..facets.len())];
        let a = PLPoint { simplex: f.clone(), barycentric: dirichlet(&mut rng, f.len()) };
        let b = PLPoint { simplex: f.clone(), barycentric: dirichlet(&mut rng, f.len()) };
        let d: f64 = a.barycentric.iter().zip(&b.barycentric).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
        if d > delta {
            pairs += 1;
            min_img = min_img.min(m.eval_h(&a)?.distance(&m.eval_h(&b)?));
        }
    }
    r.checks.push(Check::new(
        "local_injectivity",
        min_img > tol,
        format!("distinct images for pairs at distance > {delta:.0e}"),
        format!("min image distance {min_img:.3e} over {pairs} pairs"),
        "h is injective",
    ));
    let mut rec: f64 = 0.0;
    for _ in 0..n.min(4000) {
        let p = random_point(&mut rng, &b14);
        let c = m.locate_section(&p)?;
        let (th, z) = super::section_point(c.t, c.radius, c.angle);
        let img = upsilon_point(th, z);
        let img = if c.mirrored { tau_map(&img) } else { img };
        rec = rec.max(img.distance(&m.eval_h14(&p)?));
    }
    r.checks.push(Check::new(
        "leafwise_coning",
        rec < tol,
        "h14(p) is the cone of its leaf's image loop to (π(1-t), 0)",
        format!("max error {}", fmt_err(rec)),
        "h147 is extended to Y14 by coning, leaf by leaf",
    ));

    r.checks.extend(verify_foliation(m, opt.sections)?);

    let mesh = export_mesh(m, MeshPart::All, 4)?;
    let finite = mesh.iter().all(|t| t.iter().all(|x| x.is_finite()));
    r.checks.push(Check::new(
        "mesh_export",
        finite && !mesh.is_empty(),
        "finite triangle soup of B147, D', D'' and B14 images",
        format!("{} triangles", mesh.len()),
        "sampled images for inspection",
    ));
    r.tolerances.insert("injectivity_delta".into(), delta);
    Ok(r)
}

/// Parts of the image available for export.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeshPart {
    CentralTorus,
    OuterDisk,
    InnerDisk,
    B14Faces,
    All,
}

/// Real coordinates for viewing points of β14: (arg(z4/z1), Re, Im of z7/z1).
pub fn mesh_coordinates(p: &ProjectivePoint) -> [f64; 3] {
    let w = p.0[2] / p.0[0];
    [(p.0[1] / p.0[0]).arg(), w.re, w.im]
}

fn grid(res: usize) -> Vec<[[f64; 3]; 3]> {
    let r = res.max(1);
    let b = |i: usize, j: usize| [(r - i - j) as f64 / r as f64, i as f64 / r as f64, j as f64 / r as f64];
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r - i {
            out.push([b(i, j), b(i + 1, j), b(i, j + 1)]);
            if i + j + 1 < r {
                out.push([b(i + 1, j), b(i + 1, j + 1), b(i, j + 1)]);
            }
        }
    }
    out
}

fn unwrap_theta(mut t: [[f64; 3]; 3]) -> [f64; 9] {
    for k in 1..3 {
        while t[k][0] - t[0][0] > PI {
            t[k][0] -= 2.0 * PI;
        }
        while t[k][0] - t[0][0] < -PI {
            t[k][0] += 2.0 * PI;
        }
    }
    [t[0][0], t[0][1], t[0][2], t[1][0], t[1][1], t[1][2], t[2][0], t[2][1], t[2][2]]
}

fn mesh_triangles(
    tris: &[Simplex],
    res: usize,
    f: impl Fn(&PLPoint) -> Result<ProjectivePoint>,
) -> Result<Vec<[f64; 9]>> {
    let mut out = Vec::new();
    for tri in tris {
        for g in grid(res) {
            let mut pts = [[0.0; 3]; 3];
            for (k, w) in g.iter().enumerate() {
                let p = PLPoint { simplex: tri.clone(), barycentric: w.to_vec() };
                pts[k] = mesh_coordinates(&f(&p)?);
            }
            out.push(unwrap_theta(pts));
        }
    }
    Ok(out)
}

/// Image triangles, `res` subdivisions per edge.
pub fn export_mesh(m: &PlModel, part: MeshPart, res: usize) -> Result<Vec<[f64; 9]>> {
    let mut out = Vec::new();
    if matches!(part, MeshPart::CentralTorus | MeshPart::All) {
        out.extend(mesh_triangles(m.layout.complex.facets(), res, |p| m.eval_h147(p))?);
    }
    for (which, u) in [(MeshPart::InnerDisk, 0.0), (MeshPart::OuterDisk, 1.5)] {
        if part != which && part != MeshPart::All {
            continue;
        }
        // radial strips of the cone over the loop α = u
        let half = if u == 0.0 { Half::Inner } else { Half::Outer };
        let k = 24 * res.max(1);
        let centre = if u == 0.0 {
            upsilon_point(0.0, Complex64::new(0.0, 0.0))
        } else {
            upsilon_point(PI, Complex64::new(0.0, 0.0))
        };
        let c = mesh_coordinates(&centre);
        for i in 0..k {
            let b0 = 3.0 * i as f64 / k as f64;
            let b1 = 3.0 * (i + 1) as f64 / k as f64;
            let p0 = m.eval_h14(&m.locate_chart(half, u, b0)?)?;
            let p1 = m.eval_h14(&m.locate_chart(half, u, b1)?)?;
            out.push(unwrap_theta([c, mesh_coordinates(&p0), mesh_coordinates(&p1)]));
        }
    }
    if matches!(part, MeshPart::B14Faces | MeshPart::All) {
        let tris: Vec<Simplex> = m.b14.faces_of_dim(2).cloned().collect();
        out.extend(mesh_triangles(&tris, res, |p| m.eval_h14(p))?);
    }
    Ok(out)
}

/// One triangle per line, nine floats with 17 significant digits.
pub fn format_mesh(tris: &[[f64; 9]]) -> String {
    let mut s = String::new();
    for t in tris {
        let line: Vec<String> = t.iter().map(|x| format!("{x:.16e}")).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}
