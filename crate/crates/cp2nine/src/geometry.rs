//! Flat torus coordinates, the star map onto the central torus of CP², the
//! coordinate maps Σ and 𝒯, and the flat layout of the 7-vertex torus.
//!
//! Flat points live in the plane x1 + x4 + x7 = 0 modulo the lattice Λ
//! spanned by (1,1,-2) and (-2,1,1). In the lattice basis a point is
//! a·(1,1,-2) + b·(-2,1,1) with a = (x1 + 2·x4)/3 and b = (x4 - x1)/3.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::catalog::build_t2_7;
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::label::{lbl, Label};

pub type Q = Ratio<i64>;

pub const LATTICE_BASIS: [[i64; 3]; 2] = [[1, 1, -2], [-2, 1, 1]];

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Exact flat point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ExactFlatPoint(pub [Q; 3]);

impl ExactFlatPoint {
    pub fn new(c: [Q; 3]) -> Result<Self> {
        let s = c[0] + c[1] + c[2];
        if !s.is_zero() {
            return Err(Error::NonzeroSum(s.to_string()));
        }
        Ok(Self(c))
    }

    pub fn sevenths(a: i64, b: i64, c: i64) -> Self {
        Self::new([q(a, 7), q(b, 7), q(c, 7)]).expect("sum zero")
    }

    pub fn zero() -> Self {
        Self([Q::zero(); 3])
    }

    pub fn lattice(i: i64, j: i64) -> Self {
        let [e, f] = LATTICE_BASIS;
        Self([0, 1, 2].map(|k| Q::from(i * e[k] + j * f[k])))
    }

    pub fn basis_coords(&self) -> (Q, Q) {
        let [x1, x4, _] = self.0;
        ((x1 + x4 * 2) / 3, (x4 - x1) / 3)
    }

    pub fn is_lattice_point(&self) -> bool {
        let (a, b) = self.basis_coords();
        a.is_integer() && b.is_integer()
    }

    pub fn in_hexagon(&self) -> bool {
        self.0.iter().all(|x| x.abs() <= Q::from(1))
    }

    pub fn norm2(&self) -> Q {
        self.0.iter().map(|x| x * x).sum()
    }

    /// Representative in the closed hexagon; lexicographically smallest on
    /// the boundary.
    pub fn reduce(&self) -> Self {
        let (a, b) = self.basis_coords();
        let (ra, rb) = (a.round().to_integer(), b.round().to_integer());
        let mut best: Option<Self> = None;
        for i in -1..=1 {
            for j in -1..=1 {
                let y = *self - Self::lattice(ra + i, rb + j);
                if y.in_hexagon() && best.is_none_or(|b| y < b) {
                    best = Some(y);
                }
            }
        }
        best.expect("some neighbour of the rounded lattice point is a nearest one")
    }

    pub fn to_f64(&self) -> FlatTorusPoint {
        FlatTorusPoint(self.0.map(|x| *x.numer() as f64 / *x.denom() as f64))
    }

    pub fn sigma(&self) -> Self {
        let [a, b, c] = self.0;
        Self([b, c, a])
    }

    pub fn sigma_inverse(&self) -> Self {
        let [a, b, c] = self.0;
        Self([c, a, b])
    }

    /// Chart coordinates (x4 - x1, x7 - x1); Λ becomes 3·Z² there.
    pub fn chart(&self) -> (Q, Q) {
        (self.0[1] - self.0[0], self.0[2] - self.0[0])
    }
}

impl Add for ExactFlatPoint {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for ExactFlatPoint {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Neg for ExactFlatPoint {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|x| -x))
    }
}

impl Mul<Q> for ExactFlatPoint {
    type Output = Self;
    fn mul(self, s: Q) -> Self {
        Self(self.0.map(|x| x * s))
    }
}

impl fmt::Display for ExactFlatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Floating-point flat point.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct FlatTorusPoint(pub [f64; 3]);

pub const SUM_TOL: f64 = 1e-12;

impl FlatTorusPoint {
    pub fn new(c: [f64; 3]) -> Result<Self> {
        let s = c[0] + c[1] + c[2];
        if s.abs() > SUM_TOL * (1.0 + c.iter().map(|x| x.abs()).sum::<f64>()) {
            return Err(Error::NonzeroSum(s.to_string()));
        }
        Ok(Self(c))
    }

    /// From chart coordinates (x4 - x1, x7 - x1).
    pub fn from_chart(alpha: f64, beta: f64) -> Self {
        let x1 = -(alpha + beta) / 3.0;
        Self([x1, x1 + alpha, x1 + beta])
    }

    pub fn chart(&self) -> (f64, f64) {
        (self.0[1] - self.0[0], self.0[2] - self.0[0])
    }

    pub fn lattice(i: i64, j: i64) -> Self {
        let [e, f] = LATTICE_BASIS;
        Self([0, 1, 2].map(|k| (i * e[k] + j * f[k]) as f64))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }

    pub fn neg(&self) -> Self {
        Self(self.0.map(|x| -x))
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn basis_coords(&self) -> (f64, f64) {
        let [x1, x4, _] = self.0;
        ((x1 + 2.0 * x4) / 3.0, (x4 - x1) / 3.0)
    }

    pub fn in_hexagon(&self, tol: f64) -> bool {
        self.0.iter().all(|x| x.abs() <= 1.0 + tol)
    }

    pub fn reduce(&self) -> Result<Self> {
        Self::new(self.0)?;
        let (a, b) = self.basis_coords();
        let (ra, rb) = (a.round() as i64, b.round() as i64);
        let mut best: Option<Self> = None;
        for i in -1..=1 {
            for j in -1..=1 {
                let y = self.sub(&Self::lattice(ra + i, rb + j));
                if y.in_hexagon(SUM_TOL) && best.is_none_or(|b| lex_less(&y.0, &b.0)) {
                    best = Some(y);
                }
            }
        }
        Ok(best.expect("some neighbour of the rounded lattice point is a nearest one"))
    }

    pub fn sigma(&self) -> Self {
        let [a, b, c] = self.0;
        Self([b, c, a])
    }
}

fn lex_less(a: &[f64; 3], b: &[f64; 3]) -> bool {
    for k in 0..3 {
        if (a[k] - b[k]).abs() > SUM_TOL {
            return a[k] < b[k];
        }
    }
    false
}

/// A point of CP², stored as any non-zero representative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectivePoint(pub [Complex64; 3]);

pub const PROJ_TOL: f64 = 1e-12;

impl ProjectivePoint {
    pub fn new(z: [Complex64; 3]) -> Result<Self> {
        if z.iter().all(|c| c.norm() == 0.0) || z.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::OutsideDomain("projective point needs a finite non-zero representative".into()));
        }
        Ok(Self(z))
    }

    pub fn real(a: f64, b: f64, c: f64) -> Self {
        Self([Complex64::new(a, 0.0), Complex64::new(b, 0.0), Complex64::new(c, 0.0)])
    }

    /// Index of the coordinate used for normalization: the first whose
    /// modulus is within 1e-12 (relative) of the largest.
    pub fn lead(&self) -> usize {
        let m: Vec<f64> = self.0.iter().map(|c| c.norm()).collect();
        let top = m.iter().cloned().fold(0.0, f64::max);
        m.iter().position(|&x| x >= top * (1.0 - PROJ_TOL)).expect("non-empty")
    }

    /// Divides by the leading coordinate, so that coordinate is exactly 1.
    pub fn canonical(&self) -> Self {
        let k = self.lead();
        let d = self.0[k];
        let mut z = self.0.map(|c| c / d);
        z[k] = Complex64::new(1.0, 0.0);
        Self(z)
    }

    pub fn moduli(&self) -> [f64; 3] {
        let c = self.canonical();
        c.0.map(|x| x.norm())
    }

    /// Fubini–Study angle, computed from |u ∧ v| for accuracy near zero.
    pub fn distance(&self, other: &Self) -> f64 {
        let (u, v) = (self.0, other.0);
        let nu: f64 = u.iter().map(|c| c.norm_sqr()).sum();
        let nv: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        let mut w = 0.0;
        for i in 0..3 {
            for j in i + 1..3 {
                w += (u[i] * v[j] - u[j] * v[i]).norm_sqr();
            }
        }
        (w / (nu * nv)).sqrt().min(1.0).asin()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.distance(other) <= tol
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        let parts: Vec<String> =
            c.0.iter()
                .map(|z| {
                    let (re, im) = (clean(z.re), clean(z.im));
                    if im == 0.0 {
                        format!("{re}")
                    } else if re == 0.0 {
                        format!("{im}i")
                    } else {
                        format!("{re}{:+}i", im)
                    }
                })
                .collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

fn clean(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// e^{2πix/3}
pub fn star(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * x / 3.0)
}

pub fn star_map(p: &FlatTorusPoint) -> ProjectivePoint {
    ProjectivePoint(p.0.map(star))
}

pub fn sigma_flat(p: &FlatTorusPoint) -> FlatTorusPoint {
    p.sigma()
}

/// Cyclic coordinate shift (z1, z4, z7) -> (z4, z7, z1).
pub fn sigma_map(q: &ProjectivePoint) -> ProjectivePoint {
    let [a, b, c] = q.0;
    ProjectivePoint([b, c, a])
}

/// (z1, z4, z7) -> (z7, z1, z4): the inverse shift, which carries [1:0:0]
/// to [0:1:0].
pub fn sigma_inverse(q: &ProjectivePoint) -> ProjectivePoint {
    let [a, b, c] = q.0;
    ProjectivePoint([c, a, b])
}

pub fn tau_map(q: &ProjectivePoint) -> ProjectivePoint {
    ProjectivePoint(q.0.map(|z| z.conj()))
}

/// Indices among {1, 4, 7} whose coordinate modulus is within `tol` of the
/// largest.
pub fn beta_membership(q: &ProjectivePoint, tol: f64) -> BTreeSet<u32> {
    let m = q.moduli();
    let top = m.iter().cloned().fold(0.0, f64::max);
    [1u32, 4, 7].into_iter().zip(m).filter(|(_, x)| *x >= top - tol).map(|(j, _)| j).collect()
}

/// Flat positions of the central torus vertices, and per-triangle lifts.
#[derive(Clone, Debug)]
pub struct CentralTorusLayout {
    pub complex: SimplicialComplex,
    pub positions: BTreeMap<Label, ExactFlatPoint>,
    /// Each triangle with lifted vertex positions in the simplex's vertex order.
    pub triangles: Vec<(Simplex, [ExactFlatPoint; 3])>,
}

pub fn p2() -> ExactFlatPoint {
    ExactFlatPoint::sevenths(-1, 5, -4)
}

/// Exact vertex positions: [147] at the origin, 2 at (-1,5,-4)/7, the orbit
/// of 2 under S placed so that S acts as the coordinate shift carrying
/// vertex 1's axis to vertex 4's, and T acting as negation.
pub fn central_vertex_positions() -> BTreeMap<Label, ExactFlatPoint> {
    let p2 = p2();
    let p5 = p2.sigma_inverse();
    let p8 = p5.sigma_inverse();
    BTreeMap::from([
        (lbl("2"), p2),
        (lbl("3"), -p2),
        (lbl("5"), p5),
        (lbl("6"), -p5),
        (lbl("8"), p8),
        (lbl("9"), -p8),
        (lbl("[147]"), ExactFlatPoint::zero()),
    ])
}

fn diameter2(p: &[ExactFlatPoint; 3]) -> Q {
    let mut m = Q::zero();
    for i in 0..3 {
        for j in i + 1..3 {
            m = m.max((p[i] - p[j]).norm2());
        }
    }
    m
}

/// Lift of a triangle minimizing its diameter, anchored at the first vertex.
pub fn minimal_lift(pts: [ExactFlatPoint; 3]) -> Option<[ExactFlatPoint; 3]> {
    let mut best: Option<([ExactFlatPoint; 3], Q)> = None;
    let mut ties = 0;
    let r = -2..=2;
    for i1 in r.clone() {
        for j1 in r.clone() {
            for i2 in r.clone() {
                for j2 in r.clone() {
                    let cand =
                        [pts[0], pts[1] + ExactFlatPoint::lattice(i1, j1), pts[2] + ExactFlatPoint::lattice(i2, j2)];
                    let d = diameter2(&cand);
                    match &best {
                        Some((_, bd)) if d > *bd => {}
                        Some((_, bd)) if d == *bd => ties += 1,
                        _ => {
                            best = Some((cand, d));
                            ties = 0;
                        }
                    }
                }
            }
        }
    }
    if ties > 0 {
        None
    } else {
        best.map(|b| b.0)
    }
}

/// Twice the signed area in the plane, as a multiple of the unit normal
/// (1,1,1)/√3: returns c with cross product = c·(1,1,1).
pub fn signed_cross(p: &[ExactFlatPoint; 3]) -> Q {
    let u = p[1] - p[0];
    let v = p[2] - p[0];
    // first component of u × v; all three agree for vectors in the plane
    u.0[1] * v.0[2] - u.0[2] * v.0[1]
}

pub fn triangle_area(p: &[ExactFlatPoint; 3]) -> f64 {
    let c = signed_cross(p).abs();
    (*c.numer() as f64 / *c.denom() as f64) * 3f64.sqrt() / 2.0
}

pub fn hexagon_area() -> f64 {
    3.0 * 3f64.sqrt()
}

pub fn central_torus_coordinates() -> Result<CentralTorusLayout> {
    let complex = build_t2_7();
    let positions = central_vertex_positions();
    let mut triangles = Vec::new();
    for s in complex.facets() {
        let v = s.vertices();
        let pts = [positions[&v[0]], positions[&v[1]], positions[&v[2]]];
        let lift = minimal_lift(pts).ok_or_else(|| Error::AmbiguousLift(s.to_string()))?;
        triangles.push((s.clone(), lift));
    }
    Ok(CentralTorusLayout { complex, positions, triangles })
}

impl CentralTorusLayout {
    pub fn areas(&self) -> Vec<f64> {
        self.triangles.iter().map(|(_, p)| triangle_area(p)).collect()
    }

    /// Signed areas (as cross-product coefficients) oriented by the
    /// combinatorial orientation of the torus.
    pub fn oriented_crosses(&self) -> Vec<Q> {
        let signs = self.complex.check_orientable().expect("surface").expect("orientable");
        self.triangles.iter().zip(signs).map(|((_, p), s)| signed_cross(p) * Q::from(s as i64)).collect()
    }

    /// Lifted positions of a triangle's vertices keyed by label.
    pub fn lift_of(&self, s: &Simplex) -> Option<BTreeMap<Label, ExactFlatPoint>> {
        self.triangles
            .iter()
            .find(|(t, _)| t == s)
            .map(|(t, p)| t.vertices().iter().cloned().zip(p.iter().copied()).collect())
    }
}

/// Exponents k in {1, 2} for which 2·p2 - Σ^k(p2) is Λ-equivalent to (-1,2,-1).
pub fn p2_identity_exponents() -> Vec<u32> {
    let target = ExactFlatPoint::new([q(-1, 1), q(2, 1), q(-1, 1)]).expect("sum zero");
    let p = p2();
    let mut out = Vec::new();
    let mut s = p;
    for k in 1..=2u32 {
        s = s.sigma();
        if ((p * Q::from(2) - s) - target).is_lattice_point() {
            out.push(k);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        assert_eq!(ExactFlatPoint::lattice(1, 0).reduce(), ExactFlatPoint::zero());
        assert_eq!(p2().reduce(), p2());
        let x = ExactFlatPoint::new([q(6, 5), q(-3, 5), q(-3, 5)]).unwrap();
        let r = x.reduce();
        assert!(r.in_hexagon());
        assert!((x - r).is_lattice_point());
        assert!(ExactFlatPoint::new([q(1, 1), q(0, 1), q(0, 1)]).is_err());
        assert!(FlatTorusPoint::new([1.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn hexagon_corners_reduce_to_themselves() {
        let one = Q::from(1);
        let z = Q::zero();
        let corners = [[one, -one, z], [one, z, -one], [-one, one, z], [z, one, -one], [-one, z, one], [z, -one, one]];
        for c in corners {
            let p = ExactFlatPoint::new(c).unwrap();
            assert!(p.in_hexagon());
            // antipodal corners are not equivalent, but opposite sides are
            assert!(!(p - (-p)).is_lattice_point());
        }
        let half = q(1, 2);
        let side_mid = ExactFlatPoint([one, -half, -half]);
        assert!((side_mid - (-side_mid)).is_lattice_point());
        // corners fall into two classes of three
        let reps: BTreeSet<ExactFlatPoint> = corners.iter().map(|c| ExactFlatPoint(*c).reduce()).collect();
        assert_eq!(reps.len(), 2);
    }

    #[test]
    fn star_map_basics() {
        let o = star_map(&FlatTorusPoint([0.0; 3]));
        assert!(o.approx_eq(&ProjectivePoint::real(1.0, 1.0, 1.0), 1e-15));
        let q = ProjectivePoint::real(1.0, 0.0, 0.0);
        assert!(sigma_map(&q).approx_eq(&ProjectivePoint::real(0.0, 0.0, 1.0), 0.0));
        assert_eq!(beta_membership(&q, 1e-9), BTreeSet::from([1]));
        let i = Complex64::i();
        let one = Complex64::new(1.0, 0.0);
        let a = ProjectivePoint([one, i, -i]);
        assert!(tau_map(&a).approx_eq(&ProjectivePoint([one, -i, i]), 1e-15));
    }

    #[test]
    fn canonical_rep_has_unit_lead() {
        let p = ProjectivePoint([Complex64::new(0.0, 2.0), Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.5)]);
        let c = p.canonical();
        assert_eq!(c.0[0], Complex64::new(1.0, 0.0));
        assert!(c.approx_eq(&p, 1e-15));
        assert!(ProjectivePoint::new([Complex64::new(0.0, 0.0); 3]).is_err());
    }

    #[test]
    fn layout_is_exact() {
        let l = central_torus_coordinates().unwrap();
        assert_eq!(l.triangles.len(), 14);
        let c = l.oriented_crosses();
        assert_eq!(c[0].abs(), q(3, 7));
        assert!(c.iter().all(|x| *x == c[0]));
    }
}
