//! Numerical model of the homeomorphism from the subdivided 9-vertex complex
//! onto CP².
//!
//! The pieces:
//! * `eval_h147` — the flat isometry of the central torus onto {|z1|=|z4|=|z7|};
//! * `eval_h14` — its extension over the solid torus B14, built on the half
//!   Y14 (between the disks D'' = {θ=0} and D' = {θ=π}) and transported to the
//!   other half by T and complex conjugation;
//! * `eval_h` — transport to B17, B47 by S and the coordinate shift, then
//!   coning over the boundary of each piece.
//!
//! Points of the half Y14 are described by their image coordinates
//! [1 : e^{iθ} : z] ↦ (θ, z) ∈ [0, π] × D². Y14 ∩ B14'' is a cone from [14]
//! over a disk made of torus triangles and the triangle 259; Y14 ∩ B14' is a
//! cone from [[23][89]] over the complementary disk. The image of 259 is the
//! graph θ = (1-|z|)·4π/7 + |z|·θ(∂259), which splits [0, π] × D² into two
//! regions star-shaped about (0, 0) and (π, 0); each half of Y14 is carried
//! radially onto one of them.

pub(crate) mod check;
mod foliation;

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::catalog::{build_cp2_9, s_perm, t_perm};
use crate::error::{Error, Result};
use crate::geometry::{
    central_torus_coordinates, sigma_inverse, sigma_map, star_map, tau_map, CentralTorusLayout, ExactFlatPoint,
    FlatTorusPoint, ProjectivePoint, Q,
};
use crate::label::{lbl, Label};
use crate::subdivision::{label_set, relative_subdivide};
use crate::symmetry::Permutation;
use crate::trisection::{trisect, Trisection, B14_TETRAHEDRA};
use crate::{sx, Simplex, SimplicialComplex};

pub use check::{check_map_properties, export_mesh, format_mesh, mesh_coordinates, MeshPart, PlOptions};
pub use foliation::{
    leaf_theta, locate_leaf, loop_alpha, section_point, verify_foliation, FoliationSection, SectionCoords,
    SECTION_BREAK,
};

const BARY_TOL: f64 = 1e-9;

/// A point of a simplex in barycentric coordinates, listed in the
/// simplex's vertex order.
#[derive(Clone, Debug, PartialEq)]
pub struct PLPoint {
    pub simplex: Simplex,
    pub barycentric: Vec<f64>,
}

impl PLPoint {
    pub fn new(simplex: Simplex, barycentric: Vec<f64>) -> Result<Self> {
        if barycentric.len() != simplex.len() {
            return Err(Error::BadBarycentric(format!("{} weights for {}", barycentric.len(), simplex)));
        }
        let sum: f64 = barycentric.iter().sum();
        if barycentric.iter().any(|w| !w.is_finite() || *w < -BARY_TOL) || (sum - 1.0).abs() > BARY_TOL {
            return Err(Error::BadBarycentric(format!("{barycentric:?} on {simplex}")));
        }
        let barycentric = barycentric.iter().map(|w| w.max(0.0) / sum).collect();
        Ok(Self { simplex, barycentric })
    }

    pub fn vertex(l: Label) -> Self {
        Self { simplex: Simplex::new([l]).expect("one vertex"), barycentric: vec![1.0] }
    }

    /// Barycenter of a simplex.
    pub fn barycenter(s: &Simplex) -> Self {
        let n = s.len() as f64;
        Self { simplex: s.clone(), barycentric: vec![1.0 / n; s.len()] }
    }

    pub fn from_pairs(pairs: &[(Label, f64)]) -> Result<Self> {
        let s = Simplex::new(pairs.iter().map(|p| p.0.clone()))?;
        let w = s.vertices().iter().map(|v| pairs.iter().find(|p| &p.0 == v).map_or(0.0, |p| p.1)).collect();
        Self::new(s, w)
    }

    pub fn weight(&self, l: &Label) -> f64 {
        self.simplex.vertices().iter().position(|v| v == l).map_or(0.0, |i| self.barycentric[i])
    }

    /// Vertices carrying positive weight.
    pub fn support(&self) -> Result<Simplex> {
        Simplex::new(
            self.simplex.vertices().iter().zip(&self.barycentric).filter(|(_, w)| **w > 0.0).map(|(v, _)| v.clone()),
        )
    }

    /// The same point expressed on a larger simplex.
    pub fn on(&self, s: &Simplex) -> Result<Self> {
        let sup = self.support()?;
        if !sup.is_subset_of(s) {
            return Err(Error::OutsideDomain(format!("{} is not supported on {s}", self.simplex)));
        }
        let w = s.vertices().iter().map(|v| self.weight(v)).collect();
        Ok(Self { simplex: s.clone(), barycentric: w })
    }

    pub fn relabel(&self, p: &Permutation) -> Result<Self> {
        let s = p.apply_simplex(&self.simplex)?;
        let mut w = vec![0.0; s.len()];
        for (v, x) in self.simplex.vertices().iter().zip(&self.barycentric) {
            let img = p.apply_label(v)?;
            let i = s.vertices().iter().position(|u| *u == img).expect("image vertex");
            w[i] = *x;
        }
        Ok(Self { simplex: s, barycentric: w })
    }

    /// Splits off vertex `v`: returns (1 - w_v, the renormalized point on the
    /// opposite face). The face point is `None` when all weight sits on `v`.
    pub fn split(&self, v: &Label) -> Result<(f64, Option<PLPoint>)> {
        let i = self
            .simplex
            .vertices()
            .iter()
            .position(|u| u == v)
            .ok_or_else(|| Error::OutsideDomain(format!("{v} not in {}", self.simplex)))?;
        let s = 1.0 - self.barycentric[i];
        let face = self.simplex.facet_without(i).expect("positive dimension");
        if s <= f64::EPSILON {
            return Ok((0.0, None));
        }
        let w: Vec<f64> = self.barycentric.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| x / s).collect();
        Ok((s, Some(PLPoint { simplex: face, barycentric: w })))
    }
}

impl std::fmt::Display for PLPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> =
            self.simplex.vertices().iter().zip(&self.barycentric).map(|(v, w)| format!("{w:.6}·{v}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Which realization a tetrahedron of B14 belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Half {
    /// B14'': the ten tetrahedra containing [14].
    Inner,
    /// B14': 5289, 2389, 3689.
    Outer,
}

/// Image coordinates (θ, z) of [1 : e^{iθ} : z].
pub fn upsilon_point(theta: f64, z: Complex64) -> ProjectivePoint {
    ProjectivePoint([Complex64::new(1.0, 0.0), Complex64::from_polar(1.0, theta), z])
}

fn chart_image(alpha: f64, beta: f64) -> (f64, Complex64) {
    (2.0 * PI * alpha / 3.0, Complex64::from_polar(1.0, 2.0 * PI * beta / 3.0))
}

fn qf(x: Q) -> f64 {
    x.to_f64().expect("finite rational")
}

type Chart = (f64, f64);

/// Precomputed data for evaluating the map.
#[derive(Clone, Debug)]
pub struct PlModel {
    pub subdivided: SimplicialComplex,
    pub trisection: Trisection,
    pub layout: CentralTorusLayout,
    pub b14: SimplicialComplex,
    s: Permutation,
    t: Permutation,
    pair_of: BTreeMap<Simplex, (u32, u32)>,
    half_of: BTreeMap<Simplex, Half>,
    /// Chart coordinates (α, β) of each torus triangle's vertices, with α in
    /// the lift used by the given half.
    torus_charts: BTreeMap<(Half, Simplex), [Chart; 3]>,
    /// Chart coordinates of the edges of the triangle 259.
    disk_edges: BTreeMap<Simplex, [Chart; 2]>,
    /// α of each vertex in each half's lift; the outer half lifts 3, 6, 8.
    alpha: BTreeMap<(Half, Label), Q>,
    outer_pos: BTreeMap<Label, [f64; 3]>,
    outer_faces: Vec<Simplex>,
    apex: [f64; 3],
}

impl PlModel {
    pub fn new() -> Result<Self> {
        let subdivided = relative_subdivide(&build_cp2_9(), &label_set(&[1, 4, 7]))?;
        let trisection = trisect(&subdivided, &[lbl("1"), lbl("4"), lbl("7")])?;
        let layout = central_torus_coordinates()?;
        let b14 = trisection.pair(&lbl("1"), &lbl("4"));
        let mut pair_of = BTreeMap::new();
        for (a, b) in [(1u32, 4u32), (1, 7), (4, 7)] {
            for f in trisection.pair(&Label::orig(a), &Label::orig(b)).facets() {
                pair_of.insert(f.clone(), (a, b));
            }
        }
        let b14_list = SimplicialComplex::from_compact(&B14_TETRAHEDRA);
        if b14_list != b14 {
            return Err(Error::BadSubdivision("B14 differs from the 13-tetrahedron list".into()));
        }
        let center = lbl("[14]");
        let half_of: BTreeMap<Simplex, Half> = b14
            .facets()
            .iter()
            .map(|f| (f.clone(), if f.contains(&center) { Half::Inner } else { Half::Outer }))
            .collect();

        let mut alpha = BTreeMap::new();
        for (v, p) in &layout.positions {
            let a = p.chart().0;
            alpha.insert((Half::Inner, v.clone()), a);
            let lifted = ["3", "6", "8"].iter().any(|x| lbl(x) == *v);
            alpha.insert((Half::Outer, v.clone()), if lifted { a + Q::from(3) } else { a });
        }
        alpha.insert((Half::Inner, center.clone()), Q::from(0));

        let torus = &layout.complex;
        let mut torus_charts = BTreeMap::new();
        for f in b14.facets() {
            let half = half_of[f];
            for tri in f.faces().into_iter().filter(|s| s.len() == 3 && torus.contains(s)) {
                let lift = layout.lift_of(&tri).expect("torus triangle");
                let v = tri.vertices();
                let shift = alpha[&(half, v[0].clone())] - lift[&v[0]].chart().0;
                let mut ch = [(0.0, 0.0); 3];
                for (k, u) in v.iter().enumerate() {
                    let (a, b) = lift[u].chart();
                    if alpha[&(half, u.clone())] - a != shift || !(shift / Q::from(3)).is_integer() {
                        return Err(Error::AmbiguousLift(format!("{tri} in {half:?} half")));
                    }
                    ch[k] = (qf(a + shift), qf(b));
                }
                torus_charts.insert((half, tri), ch);
            }
        }

        let mut disk_edges = BTreeMap::new();
        for e in sx("259").faces().into_iter().filter(|s| s.len() == 2) {
            let tri = torus.facets().iter().find(|t| e.is_subset_of(t)).expect("torus edge");
            let lift = layout.lift_of(tri).expect("lift");
            let (a, b) = (&e.vertices()[0], &e.vertices()[1]);
            let d: ExactFlatPoint = lift[b] - lift[a];
            let (a0, b0) = layout.positions[a].chart();
            let (da, db) = d.chart();
            if a0 + da != alpha[&(Half::Inner, b.clone())] {
                return Err(Error::AmbiguousLift(format!("edge {e}")));
            }
            disk_edges.insert(e.clone(), [(qf(a0), qf(b0)), (qf(a0 + da), qf(b0 + db))]);
        }

        let mut outer_pos = BTreeMap::new();
        for v in ["2", "3", "5", "6", "8", "9"] {
            let l = lbl(v);
            let th = 2.0 * PI * qf(alpha[&(Half::Outer, l.clone())]) / 3.0;
            let ph = 2.0 * PI * qf(layout.positions[&l].chart().1) / 3.0;
            outer_pos.insert(l, [th, ph.cos(), ph.sin()]);
        }
        let mut apex = [0.0; 3];
        for v in ["2", "3", "8", "9"] {
            for (k, x) in outer_pos[&lbl(v)].iter().enumerate() {
                apex[k] += x / 4.0;
            }
        }
        let outer =
            SimplicialComplex::from_facets(b14.facets().iter().filter(|f| half_of[*f] == Half::Outer).cloned())?;
        let outer_faces = outer.boundary_complex()?.facets().to_vec();

        Ok(Self {
            subdivided,
            trisection,
            layout,
            b14,
            s: s_perm(),
            t: t_perm(),
            pair_of,
            half_of,
            torus_charts,
            disk_edges,
            alpha,
            outer_pos,
            outer_faces,
            apex,
        })
    }

    pub fn s(&self) -> &Permutation {
        &self.s
    }

    pub fn t(&self) -> &Permutation {
        &self.t
    }

    pub fn half_of(&self, tet: &Simplex) -> Option<Half> {
        self.half_of.get(tet).copied()
    }

    /// Pair (j, k) with the tetrahedron in B_jk.
    pub fn pair_of(&self, tet: &Simplex) -> Option<(u32, u32)> {
        self.pair_of.get(tet).copied()
    }

    pub fn apex(&self) -> [f64; 3] {
        self.apex
    }

    /// Torus triangles of one half with their chart coordinates.
    pub fn torus_charts(&self, half: Half) -> impl Iterator<Item = (&Simplex, &[Chart; 3])> {
        self.torus_charts.iter().filter(move |((h, _), _)| *h == half).map(|((_, s), c)| (s, c))
    }

    /// Finds a facet of `c` carrying the point: the point's own simplex if it
    /// is a facet, otherwise the first facet containing its support.
    fn carrier(&self, c: &SimplicialComplex, p: &PLPoint) -> Result<PLPoint> {
        if c.facets().contains(&p.simplex) {
            return Ok(p.clone());
        }
        let sup = p.support()?;
        let f = c
            .facets()
            .iter()
            .find(|f| sup.is_subset_of(f))
            .ok_or_else(|| Error::OutsideDomain(format!("{} not in the complex", p.simplex)))?;
        p.on(f)
    }

    pub fn eval_h147(&self, p: &PLPoint) -> Result<ProjectivePoint> {
        let q = self.carrier(&self.layout.complex, p)?;
        let lift = self.layout.lift_of(&q.simplex).expect("torus triangle");
        let mut x = [0.0; 3];
        for (v, w) in q.simplex.vertices().iter().zip(&q.barycentric) {
            let c = lift[v].to_f64();
            for (xk, ck) in x.iter_mut().zip(c.0) {
                *xk += w * ck;
            }
        }
        Ok(star_map(&FlatTorusPoint(x)))
    }

    /// θ of a point of B14 in its half's realization.
    pub fn theta_of(&self, p: &PLPoint) -> Result<f64> {
        let q = self.carrier(&self.b14, p)?;
        let half = self.half_of[&q.simplex];
        Ok(q.simplex
            .vertices()
            .iter()
            .zip(&q.barycentric)
            .map(|(v, w)| w * 2.0 * PI * qf(self.alpha[&(half, v.clone())]) / 3.0)
            .sum())
    }

    /// Image of a point of the boundary disk of one half: torus triangles go
    /// through the chart, the triangle 259 is coned from its center.
    fn surface(&self, half: Half, y: &PLPoint) -> Result<(f64, Complex64)> {
        let tri = &y.simplex;
        if let Some(ch) = self.torus_charts.get(&(half, tri.clone())) {
            let (mut a, mut b) = (0.0, 0.0);
            for (c, w) in ch.iter().zip(&y.barycentric) {
                a += w * c.0;
                b += w * c.1;
            }
            return Ok(chart_image(a, b));
        }
        if *tri != sx("259") {
            return Err(Error::OutsideDomain(format!("{tri} is not on the boundary of Y14")));
        }
        let m = y.barycentric.iter().cloned().fold(f64::INFINITY, f64::min).max(0.0);
        let rho = (1.0 - 3.0 * m).clamp(0.0, 1.0);
        let centre = PI * (1.0 - SECTION_BREAK);
        if rho <= f64::EPSILON {
            return Ok((centre, Complex64::new(0.0, 0.0)));
        }
        let i_min = (0..3).min_by(|&i, &j| y.barycentric[i].total_cmp(&y.barycentric[j])).expect("three");
        let edge = tri.facet_without(i_min).expect("edge");
        let ends = self.disk_edges[&edge];
        let (mut a, mut b) = (0.0, 0.0);
        let mut k = 0;
        for (i, w) in y.barycentric.iter().enumerate() {
            if i == i_min {
                continue;
            }
            let wx = (w - m) / rho;
            a += wx * ends[k].0;
            b += wx * ends[k].1;
            k += 1;
        }
        let (th, z) = chart_image(a, b);
        Ok(((1.0 - rho) * centre + rho * th, z * rho))
    }

    fn realize_outer(&self, p: &PLPoint) -> [f64; 3] {
        let mut x = [0.0; 3];
        for (v, w) in p.simplex.vertices().iter().zip(&p.barycentric) {
            for (xk, ck) in x.iter_mut().zip(self.outer_pos[v]) {
                *xk += w * ck;
            }
        }
        x
    }

    /// Radial decomposition of an outer point from the apex: (ρ, exit point).
    fn outer_ray(&self, p: &PLPoint) -> Result<(f64, Option<PLPoint>)> {
        let x = self.realize_outer(p);
        let d = sub(x, self.apex);
        if norm(d) < 1e-14 {
            return Ok((0.0, None));
        }
        let mut best: Option<(f64, f64, &Simplex, [f64; 3])> = None;
        for f in &self.outer_faces {
            let v = f.vertices();
            let (p0, p1, p2) = (self.outer_pos[&v[0]], self.outer_pos[&v[1]], self.outer_pos[&v[2]]);
            let Some((lam, u, w)) = ray_triangle(self.apex, d, p0, p1, p2) else { continue };
            if lam <= 0.0 {
                continue;
            }
            let b = [1.0 - u - w, u, w];
            let score = b.iter().cloned().fold(f64::INFINITY, f64::min);
            if best.as_ref().is_none_or(|bb| score > bb.1) {
                best = Some((lam, score, f, b));
            }
        }
        let (lam, score, f, b) = best.ok_or_else(|| Error::OutsideDomain("ray from the apex misses B14'".into()))?;
        if score < -1e-6 {
            return Err(Error::OutsideDomain(format!("no exit face for {p}")));
        }
        let b = b.map(|x| x.max(0.0));
        let s: f64 = b.iter().sum();
        let y = PLPoint { simplex: f.clone(), barycentric: b.iter().map(|x| x / s).collect() };
        Ok(((1.0 / lam).min(1.0), Some(y)))
    }

    /// (θ, z) coordinates of a point of Y14, the half of B14 with
    /// 0 ≤ θ ≤ π. Points of the other half are reported as mirrored: their
    /// coordinates are those of T(p), and the image is conjugated.
    pub fn upsilon_coords(&self, p: &PLPoint) -> Result<(f64, Complex64, bool)> {
        let q = self.carrier(&self.b14, p)?;
        let half = self.half_of[&q.simplex];
        let th = self.theta_of(&q)?;
        let mirrored = match half {
            Half::Inner => th < 0.0,
            Half::Outer => th > PI,
        };
        let q = if mirrored { q.relabel(&self.t)? } else { q };
        let (th, z) = match half {
            Half::Inner => match q.split(&lbl("[14]"))? {
                (_, None) => (0.0, Complex64::new(0.0, 0.0)),
                (rho, Some(y)) => {
                    let (a, z) = self.surface(half, &y)?;
                    (rho * a, z * rho)
                }
            },
            Half::Outer => match self.outer_ray(&q)? {
                (_, None) => (PI, Complex64::new(0.0, 0.0)),
                (rho, Some(y)) => {
                    let (a, z) = self.surface(half, &y)?;
                    (PI + rho * (a - PI), z * rho)
                }
            },
        };
        Ok((th, z, mirrored))
    }

    pub fn eval_h14(&self, p: &PLPoint) -> Result<ProjectivePoint> {
        let (th, z, mirrored) = self.upsilon_coords(p)?;
        let img = upsilon_point(th, z);
        Ok(if mirrored { tau_map(&img) } else { img })
    }

    /// The map on the cutting disks D'' (θ = 0, coned to [1:1:0]) and
    /// D' (θ = π, coned to [1:-1:0]).
    pub fn eval_disk_cone(&self, p: &PLPoint) -> Result<ProjectivePoint> {
        let q = self.carrier(&self.b14, p)?;
        let th = self.theta_of(&q)?;
        let (target, u) = match self.half_of[&q.simplex] {
            Half::Inner if th.abs() <= BARY_TOL => (0.0, 1.0),
            Half::Outer if (th - PI).abs() <= BARY_TOL => (PI, -1.0),
            _ => return Err(Error::OutsideDomain(format!("{p} is on neither cutting disk"))),
        };
        let (th2, z, mirrored) = self.upsilon_coords(&q)?;
        debug_assert!((th2 - target).abs() < 1e-6);
        let z = if mirrored { z.conj() } else { z };
        Ok(ProjectivePoint([Complex64::new(1.0, 0.0), Complex64::new(u, 0.0), z]))
    }

    /// The map on a tetrahedron of B14, B17 or B47.
    pub fn eval_pair(&self, q: &PLPoint) -> Result<ProjectivePoint> {
        let pair = self
            .pair_of
            .get(&q.simplex)
            .copied()
            .or_else(|| {
                let sup = q.support().ok()?;
                self.pair_of.iter().find(|(f, _)| sup.is_subset_of(f)).map(|(_, p)| *p)
            })
            .ok_or_else(|| Error::OutsideDomain(format!("{} is not in a pair complex", q.simplex)))?;
        match pair {
            (1, 4) => self.eval_h14(q),
            (1, 7) => Ok(sigma_map(&self.eval_h14(&q.relabel(&self.s)?)?)),
            _ => Ok(sigma_inverse(&self.eval_h14(&q.relabel(&self.s.inverse())?)?)),
        }
    }

    /// The full map on the subdivided complex.
    pub fn eval_h(&self, p: &PLPoint) -> Result<ProjectivePoint> {
        let p = self.carrier(&self.subdivided, p)?;
        let (j, idx) = [(1u32, 0usize), (4, 1), (7, 2)]
            .into_iter()
            .find(|(j, _)| p.simplex.contains(&Label::orig(*j)))
            .ok_or_else(|| Error::OutsideDomain(format!("{} has no distinguished vertex", p.simplex)))?;
        let mut e = [Complex64::new(0.0, 0.0); 3];
        e[idx] = Complex64::new(1.0, 0.0);
        let (s, q) = p.split(&Label::orig(j))?;
        let Some(q) = q else { return Ok(ProjectivePoint(e)) };
        let img = self.eval_pair(&q)?;
        let d = img.0[idx];
        let mut z = img.0.map(|c| c / d * s);
        z[idx] = Complex64::new(1.0, 0.0);
        Ok(ProjectivePoint(z))
    }

    /// A point of the subdivided complex at a vertex.
    pub fn vertex_point(&self, v: &Label) -> Result<PLPoint> {
        self.carrier(&self.subdivided, &PLPoint::vertex(v.clone()))
    }

    /// Locates a realized point of B14' (θ, x, y) in one of its tetrahedra.
    pub(crate) fn locate_outer(&self, x: [f64; 3]) -> Result<PLPoint> {
        let mut best: Option<(f64, PLPoint)> = None;
        for f in self.b14.facets().iter().filter(|f| self.half_of[*f] == Half::Outer) {
            let v = f.vertices();
            let p: Vec<[f64; 3]> = v.iter().map(|l| self.outer_pos[l]).collect();
            let Some(b) = barycentric3(x, [p[0], p[1], p[2], p[3]]) else { continue };
            let score = b.iter().cloned().fold(f64::INFINITY, f64::min);
            if best.as_ref().is_none_or(|bb| score > bb.0) {
                let b = b.map(|w| w.max(0.0));
                let s: f64 = b.iter().sum();
                best = Some((score, PLPoint { simplex: f.clone(), barycentric: b.iter().map(|w| w / s).collect() }));
            }
        }
        match best {
            Some((score, p)) if score > -1e-9 => Ok(p),
            _ => Err(Error::OutsideDomain("point outside B14'".into())),
        }
    }

    pub(crate) fn outer_position(&self, p: &PLPoint) -> [f64; 3] {
        self.realize_outer(p)
    }

    /// Point of the central torus with chart coordinates (α, β) located on a
    /// torus triangle of the given half (α taken in that half's lift).
    pub fn locate_chart(&self, half: Half, alpha: f64, beta: f64) -> Result<PLPoint> {
        let mut best: Option<(f64, PLPoint)> = None;
        for (tri, ch) in self.torus_charts(half) {
            for k in -2..=2 {
                let b = beta + 3.0 * k as f64;
                let Some(w) = barycentric2((alpha, b), *ch) else { continue };
                let score = w.iter().cloned().fold(f64::INFINITY, f64::min);
                if best.as_ref().is_none_or(|bb| score > bb.0) {
                    let w = w.map(|x| x.max(0.0));
                    let s: f64 = w.iter().sum();
                    best =
                        Some((score, PLPoint { simplex: tri.clone(), barycentric: w.iter().map(|x| x / s).collect() }));
                }
            }
        }
        match best {
            Some((score, p)) if score > -1e-9 => Ok(p),
            _ => Err(Error::OutsideDomain(format!("chart point ({alpha}, {beta}) not in the {half:?} half"))),
        }
    }

    /// Chart coordinates of a torus point given on a triangle of a half.
    pub fn chart_of(&self, half: Half, p: &PLPoint) -> Option<Chart> {
        let ch = self.torus_charts.get(&(half, p.simplex.clone()))?;
        let (mut a, mut b) = (0.0, 0.0);
        for (c, w) in ch.iter().zip(&p.barycentric) {
            a += w * c.0;
            b += w * c.1;
        }
        Some((a, b))
    }
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// Möller–Trumbore: (λ, u, v) with o + λd = p0 + u(p1-p0) + v(p2-p0).
fn ray_triangle(o: [f64; 3], d: [f64; 3], p0: [f64; 3], p1: [f64; 3], p2: [f64; 3]) -> Option<(f64, f64, f64)> {
    let e1 = sub(p1, p0);
    let e2 = sub(p2, p0);
    let h = cross(d, e2);
    let det = dot(e1, h);
    if det.abs() < 1e-15 {
        return None;
    }
    let s = sub(o, p0);
    let u = dot(s, h) / det;
    let q = cross(s, e1);
    let v = dot(d, q) / det;
    let lam = dot(e2, q) / det;
    Some((lam, u, v))
}

fn barycentric3(x: [f64; 3], p: [[f64; 3]; 4]) -> Option<[f64; 4]> {
    let (a, b, c) = (sub(p[1], p[0]), sub(p[2], p[0]), sub(p[3], p[0]));
    let det = dot(a, cross(b, c));
    if det.abs() < 1e-15 {
        return None;
    }
    let r = sub(x, p[0]);
    let u = dot(r, cross(b, c)) / det;
    let v = dot(a, cross(r, c)) / det;
    let w = dot(a, cross(b, r)) / det;
    Some([1.0 - u - v - w, u, v, w])
}

fn barycentric2(x: Chart, p: [Chart; 3]) -> Option<[f64; 3]> {
    let (ax, ay) = (p[1].0 - p[0].0, p[1].1 - p[0].1);
    let (bx, by) = (p[2].0 - p[0].0, p[2].1 - p[0].1);
    let det = ax * by - ay * bx;
    if det.abs() < 1e-15 {
        return None;
    }
    let (rx, ry) = (x.0 - p[0].0, x.1 - p[0].1);
    let u = (rx * by - ry * bx) / det;
    let v = (ax * ry - ay * rx) / det;
    Some([1.0 - u - v, u, v])
}
