//! Verification suites, one per target, each producing a [`Report`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::*;
use crate::error::{Error, Result};
use crate::geometry::*;
use crate::homology::{homology_groups, recognize_sphere_bistellar, SphereVerdict};
use crate::iso::is_isomorphic;
use crate::label::lbl;
use crate::plmap::{PlModel, PlOptions};
use crate::report::{Check, Report, Status};
use crate::subdivision::{label_set, relative_rank, relative_subdivide, subdivide_facet};
use crate::symmetry::{automorphism_group, geometric_fixed_set, orbit_closure};
use crate::trisection::*;
use crate::{sx, Simplex, SimplicialComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Rp26,
    T27,
    Cp29,
    Subdivision,
    Trisection,
    SolidTorus,
    CentralTorus,
    FixedSet,
    Geometry,
    Plmap,
    All,
}

impl Target {
    pub const EACH: [Target; 10] = [
        Target::Rp26,
        Target::T27,
        Target::Cp29,
        Target::Subdivision,
        Target::Trisection,
        Target::SolidTorus,
        Target::CentralTorus,
        Target::FixedSet,
        Target::Geometry,
        Target::Plmap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Rp26 => "rp26",
            Target::T27 => "t27",
            Target::Cp29 => "cp29",
            Target::Subdivision => "subdivision",
            Target::Trisection => "trisection",
            Target::SolidTorus => "solid-torus",
            Target::CentralTorus => "central-torus",
            Target::FixedSet => "fixed-set",
            Target::Geometry => "geometry",
            Target::Plmap => "plmap",
            Target::All => "all",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Target> {
        Target::EACH
            .into_iter()
            .chain([Target::All])
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTarget(s.into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
    pub flip_budget: u64,
    pub sections: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { samples: 10_000, tol: 1e-9, seed: 0, flip_budget: crate::homology::DEFAULT_FLIP_BUDGET, sections: 256 }
    }
}

pub fn verify(target: Target, opt: &VerifyOptions) -> Result<Report> {
    let mut r = Report::new(target.name(), opt.seed);
    match target {
        Target::Rp26 => r.checks = rp26()?,
        Target::T27 => r.checks = t27()?,
        Target::Cp29 => {
            r.checks = cp29(opt)?;
            r.tolerances.insert("flip_budget".into(), opt.flip_budget as f64);
        }
        Target::Subdivision => r.checks = subdivision()?,
        Target::Trisection => r.checks = trisection_rows()?,
        Target::SolidTorus => {
            r.checks = solid_torus(opt)?;
            r.tolerances.insert("flip_budget".into(), opt.flip_budget as f64);
        }
        Target::CentralTorus => r.checks = central_torus()?,
        Target::FixedSet => r.checks = fixed_set()?,
        Target::Geometry => {
            r.checks = geometry(opt)?;
            r.tolerances.insert("algebraic".into(), 1e-12);
            r.tolerances.insert("geometric".into(), 1e-9);
        }
        Target::Plmap => {
            let m = PlModel::new()?;
            let pl = PlOptions { samples: opt.samples, tol: opt.tol, seed: opt.seed, sections: opt.sections };
            r = crate::plmap::check::check_with(&m, pl)?;
            r.tolerances.insert("sections".into(), opt.sections as f64);
        }
        Target::All => {
            for t in Target::EACH {
                let sub = verify(t, opt)?;
                for mut c in sub.checks {
                    c.name = format!("{}.{}", t.name(), c.name);
                    r.checks.push(c);
                }
                for (k, v) in sub.tolerances {
                    r.tolerances.insert(format!("{}.{k}", t.name()), v);
                }
            }
        }
    }
    Ok(r)
}

fn sphere_check(name: &str, verdict: &SphereVerdict, dim: usize, claim: &str) -> Check {
    match verdict {
        SphereVerdict::Sphere { dim: d, flips } => {
            Check::new(name, *d == dim, format!("Sphere({dim})"), format!("Sphere({d}) after {flips} flips"), claim)
        }
        SphereVerdict::Unknown { flips, facets_left } => Check::new(
            name,
            false,
            format!("Sphere({dim})"),
            format!("unknown after {flips} flips ({facets_left} facets left)"),
            claim,
        )
        .with_status(Status::Unknown),
    }
}

fn rp26() -> Result<Vec<Check>> {
    let c = build_rp2_6();
    let mut out = Vec::new();
    let fv = c.f_vector();
    out.push(Check::eq("f_vector", "(6, 15, 10)", fmt_counts(&fv.counts), "six vertices, ten triangles"));
    let surf = c.classify_closed_surface()?;
    out.push(Check::eq(
        "surface",
        "non-orientable, χ=1",
        fmt_surface(surf.orientable, surf.euler),
        "a projective plane",
    ));
    out.push(Check::eq("homology", "(Z, Z/2, 0)", homology_groups(&c), "the homology of RP²"));
    let g = automorphism_group(&c);
    out.push(Check::eq("aut_order", 60, g.len(), "the automorphism group is A5"));
    let rot = rp2_rotation();
    out.push(Check::new(
        "rotation",
        rot.apply_complex(&c)? == c && rot.order() == 3,
        "(123)(456) is an automorphism of order 3",
        format!("invariant={}, order {}", rot.apply_complex(&c)? == c, rot.order()),
        "a rotational symmetry of order 3",
    ));
    let small: Vec<usize> = (4..=6)
        .map(|n| enumerate_small_surfaces(n, SurfaceType::PROJECTIVE_PLANE).map(|v| v.len()))
        .collect::<Result<_>>()?;
    let six = enumerate_small_surfaces(6, SurfaceType::PROJECTIVE_PLANE)?;
    out.push(Check::new(
        "minimality",
        small == [0, 0, 1] && is_isomorphic(&six[0], &c).is_some(),
        "0, 0, 1 triangulations on 4, 5, 6 vertices; the one on 6 is this complex",
        format!("{small:?}"),
        "the unique minimal triangulation of RP²",
    ));
    Ok(out)
}

fn t27() -> Result<Vec<Check>> {
    let c = build_t2_7();
    let mut out = Vec::new();
    out.push(Check::eq(
        "f_vector",
        "(7, 21, 14)",
        fmt_counts(&c.f_vector().counts),
        "seven vertices, fourteen triangles",
    ));
    let surf = c.classify_closed_surface()?;
    out.push(Check::eq("surface", "orientable, χ=0", fmt_surface(surf.orientable, surf.euler), "a torus"));
    out.push(Check::eq("homology", "(Z, Z^2, Z)", homology_groups(&c), "the homology of the torus"));
    let g = automorphism_group(&c);
    out.push(Check::eq("aut_order", 42, g.len(), "the symmetry group of the 7-vertex torus"));
    let orbit = orbit_closure(&[c.facets()[0].clone()], &g)?;
    out.push(Check::eq("facet_transitive", 14, orbit.len(), "all triangles are equivalent"));
    let tori = enumerate_small_surfaces(7, SurfaceType::TORUS)?;
    out.push(Check::new(
        "uniqueness",
        tori.len() == 1 && is_isomorphic(&tori[0], &c).is_some(),
        "exactly one 7-vertex torus, isomorphic to this one",
        format!("{} found", tori.len()),
        "the 7-vertex torus is unique",
    ));
    Ok(out)
}

fn cp29(opt: &VerifyOptions) -> Result<Vec<Check>> {
    let c = build_cp2_9();
    let mut out = Vec::new();
    let s = s_perm();
    let t = t_perm();
    let seeds: Vec<Simplex> = CP2_9_SEEDS.iter().map(|x| sx(x)).collect();
    let orbit = orbit_closure(&seeds, std::slice::from_ref(&s))?;
    out.push(Check::new(
        "facets",
        orbit.len() == 36 && c.facets().len() == 36,
        "facets=36",
        format!("facets={}", orbit.len()),
        "36 4-simplices from the seed facets under S",
    ));
    let fv = c.f_vector();
    out.push(Check::eq("f_vector", "(9, 36, 84, 90, 36)", fmt_counts(&fv.counts), "the face numbers"));
    out.push(Check::eq("euler", 3, fv.euler, "Euler characteristic of CP²"));
    let check_ok = CP2_9_CHECK.iter().all(|f| c.facets().contains(&sx(f)));
    out.push(Check::new(
        "listed_facets",
        check_ok && s.apply_simplex(&sx("14726"))? == sx("14759"),
        "contains the listed facets; 14726 -> 14759 under S",
        if check_ok { "present" } else { "missing" },
        "the S-orbit example and listed facets",
    ));
    let mut missing = 0;
    for a in 1..=9u32 {
        for b in a + 1..=9 {
            for d in b + 1..=9 {
                if !c.contains(&Simplex::new([a.into(), b.into(), d.into()])?) {
                    missing += 1;
                }
            }
        }
    }
    out.push(Check::eq("neighborly_3", "84 of 84 triples", format!("{} of 84 triples", 84 - missing), "3-neighborly"));
    let g = automorphism_group(&c);
    let st = s.compose(&t)? == t.compose(&s)?;
    out.push(Check::new(
        "aut_order",
        g.len() == 54 && g.contains(&s) && g.contains(&t) && st,
        "aut_order=54, contains S and T, ST=TS",
        format!("aut_order={}, S:{}, T:{}, ST=TS:{st}", g.len(), g.contains(&s), g.contains(&t)),
        "a symmetry group of order 54",
    ));
    out.push(Check::eq("homology", "(Z, 0, Z, 0, Z)", homology_groups(&c), "the homology of CP²"));
    out.push(Check::new(
        "pseudomanifold",
        c.is_closed_pseudomanifold(),
        "every tetrahedron in two facets",
        c.is_closed_pseudomanifold(),
        "a closed 4-dimensional triangulation",
    ));
    for v in c.vertices() {
        let lk = c.vertex_link(v)?;
        let verdict = recognize_sphere_bistellar(&lk, opt.flip_budget, opt.seed)?;
        out.push(sphere_check(&format!("link_{v}"), &verdict, 3, "vertex links are 3-spheres"));
    }
    Ok(out)
}

fn subdivision() -> Result<Vec<Check>> {
    let d = label_set(&[1, 4, 7]);
    let cp = build_cp2_9();
    let s = relative_subdivide(&cp, &d)?;
    let mut out = Vec::new();
    out.push(Check::eq("facets", 78, s.facets().len(), "78 4-simplices after subdividing"));
    out.push(Check::eq("vertices", 13, s.vertices().len(), "9 + [14], [17], [47], [147]"));
    let bad = s.facets().iter().filter(|f| f.vertices().iter().filter(|l| d.contains(l)).count() != 1).count();
    out.push(Check::eq("one_distinguished", 0, bad, "each new simplex has exactly one of 1, 4, 7"));
    let fact = |k: usize| (1..=k).product::<usize>();
    let total: usize = cp.facets().iter().map(|f| fact(relative_rank(f, &d))).sum();
    out.push(Check::eq("rank_factorials", 78, total, "a facet of rank r splits into r! pieces"));
    let two: BTreeSet<Simplex> = subdivide_facet(&sx("14256"), &d)?.into_iter().collect();
    let want2: BTreeSet<Simplex> = ["1[14]256", "4[14]256"].iter().map(|x| sx(x)).collect();
    out.push(Check::eq("rank2_pieces", fmt_set(&want2), fmt_set(&two), "the pieces of 14256"));
    let three: BTreeSet<Simplex> = subdivide_facet(&sx("14726"), &d)?.into_iter().collect();
    let want3: BTreeSet<Simplex> =
        ["1[14][147]26", "1[17][147]26", "4[14][147]26", "4[47][147]26", "7[17][147]26", "7[47][147]26"]
            .iter()
            .map(|x| sx(x))
            .collect();
    out.push(Check::eq("rank3_pieces", fmt_set(&want3), fmt_set(&three), "the pieces of 14726"));
    out.push(Check::eq("homology", "(Z, 0, Z, 0, Z)", homology_groups(&s), "subdivision preserves homology"));
    let sp = s_perm();
    out.push(Check::new(
        "s_invariant",
        sp.apply_complex(&s)? == s,
        "S maps the subdivision to itself",
        sp.apply_complex(&s)? == s,
        "the subdivision respects the symmetry",
    ));
    let real = relative_subdivide(&build_rp2_6(), &label_set(&[1, 2, 3]))?;
    let d3 = label_set(&[1, 2, 3]);
    let ok = real.facets().iter().all(|f| f.vertices().iter().filter(|l| d3.contains(l)).count() == 1);
    out.push(Check::new(
        "real_case",
        real.facets().len() == 18 && ok,
        "18 triangles, each with one of 1, 2, 3",
        format!("{} triangles", real.facets().len()),
        "the real case",
    ));
    Ok(out)
}

fn tri() -> Result<Trisection> {
    let s = relative_subdivide(&build_cp2_9(), &label_set(&[1, 4, 7]))?;
    trisect(&s, &[lbl("1"), lbl("4"), lbl("7")])
}

fn trisection_rows() -> Result<Vec<Check>> {
    let t = tri()?;
    let mut out = Vec::new();
    let sizes: Vec<usize> = t.pieces.iter().map(|p| p.facets().len()).collect();
    out.push(Check::eq(
        "pieces",
        "26 + 26 + 26 = 78",
        format!("{} + {} + {} = {}", sizes[0], sizes[1], sizes[2], sizes.iter().sum::<usize>()),
        "B_j is the union of the 26 simplices containing j",
    ));
    let s = s_perm();
    let cyc = s.apply_complex(&t.pieces[0])? == t.pieces[1]
        && s.apply_complex(&t.pieces[1])? == t.pieces[2]
        && s.apply_complex(&t.pieces[2])? == t.pieces[0];
    out.push(Check::new("S_cycles_pieces", cyc, "B1 -> B4 -> B7 -> B1", cyc, "S permutes the pieces"));
    let b14 = t.pair(&lbl("1"), &lbl("4"));
    let want = SimplicialComplex::from_compact(&B14_TETRAHEDRA);
    out.push(Check::new(
        "B14_facets",
        b14 == want,
        "13 (the listed tetrahedra)",
        b14.facets().len(),
        "the tetrahedra in B14",
    ));
    let b17 = t.pair(&lbl("1"), &lbl("7"));
    let ok = s.inverse().apply_complex(&b14)? == b17 && b14.facet_set().is_disjoint(&b17.facet_set());
    out.push(Check::new(
        "B17_is_image",
        ok,
        "B17 = S⁻¹(B14), no common tetrahedra",
        format!("{} tetrahedra", b17.facets().len()),
        "the images of the 13 tetrahedra under S⁻¹ lie in B17",
    ));
    out.extend(verify_cone_structure(&t));
    Ok(out)
}

fn solid_torus(opt: &VerifyOptions) -> Result<Vec<Check>> {
    let b14 = tri()?.pair(&lbl("1"), &lbl("4"));
    Ok(verify_solid_torus(&b14, opt.flip_budget, opt.seed)?.checks)
}

fn central_torus() -> Result<Vec<Check>> {
    let mut out = verify_central_torus(&tri()?);
    let tori = enumerate_small_surfaces(7, SurfaceType::TORUS)?;
    out.push(Check::new(
        "unique_7_vertex_torus",
        tori.len() == 1 && is_isomorphic(&tori[0], &build_t2_7()).is_some(),
        "exactly one 7-vertex torus",
        format!("{} found", tori.len()),
        "the central complex is the unique 7-vertex torus",
    ));
    Ok(out)
}

fn fixed_set() -> Result<Vec<Check>> {
    let cp = build_cp2_9();
    let t = t_perm();
    let f = geometric_fixed_set(&cp, &t)?;
    let mut out = Vec::new();
    let verts: Vec<String> = f.vertices().iter().map(|l| l.to_string()).collect();
    out.push(Check::eq("vertices", "1,4,7,[23],[56],[89]", verts.join(","), "the fixed set of T"));
    out.push(Check::new(
        "is_rp2_6",
        f.facets().len() == 10 && is_isomorphic(&f, &build_rp2_6()).is_some(),
        "10 triangles, isomorphic to the 6-vertex RP²",
        format!("{} triangles", f.facets().len()),
        "the fixed set of T is a copy of RP²",
    ));
    let sub = relative_subdivide(&cp, &label_set(&[1, 4, 7]))?;
    let fs = geometric_fixed_set(&sub, &t)?;
    let expected = relative_subdivide(&f, &label_set(&[1, 4, 7]))?;
    out.push(Check::new(
        "subdivided",
        fs == expected && fs.facets().len() == 18,
        "18 triangles, the relative subdivision of the fixed set",
        format!("{} triangles", fs.facets().len()),
        "the subdivision restricts to the real case",
    ));
    let s = s_perm();
    let commutes = s.apply_complex(&f)? == geometric_fixed_set(&s.apply_complex(&cp)?, &t)?;
    out.push(Check::new("commutes_with_S", commutes, "S(Fix T) = Fix T", commutes, "S and T commute"));
    Ok(out)
}

fn geometry(opt: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(opt.seed);
    let n = opt.samples.max(1);
    let mut lat: f64 = 0.0;
    let mut eq: f64 = 0.0;
    for _ in 0..n {
        let a: f64 = rng.gen_range(-3.0..3.0);
        let b: f64 = rng.gen_range(-3.0..3.0);
        let p = FlatTorusPoint([a, b, -a - b]);
        let l = FlatTorusPoint::lattice(rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        lat = lat.max(star_map(&p.add(&l)).distance(&star_map(&p)));
        eq = eq.max(star_map(&sigma_flat(&p)).distance(&sigma_map(&star_map(&p))));
        eq = eq.max(star_map(&p.neg()).distance(&tau_map(&star_map(&p))));
    }
    out.push(Check::new(
        "lattice_invariance",
        lat < 1e-12,
        "star_map(p + λ) = star_map(p) (< 1e-12)",
        format!("max {lat:.2e} over {n} samples"),
        "the star map is well defined on the flat torus",
    ));
    out.push(Check::new(
        "equivariance",
        eq < 1e-12,
        "coordinate shift and negation match Σ and conjugation (< 1e-12)",
        format!("max {eq:.2e}"),
        "Σ and 𝒯 restrict to the central torus",
    ));
    let w = |k: f64| Complex64::from_polar(1.0, k * std::f64::consts::PI / 7.0);
    let want2 = ProjectivePoint([Complex64::new(1.0, 0.0), w(4.0), w(12.0)]);
    let got2 = star_map(&p2().to_f64());
    out.push(Check::new(
        "vertex_2",
        got2.distance(&want2) < 1e-12,
        "2 -> [1:e^{4πi/7}:e^{12πi/7}]",
        format!("{got2} (error {:.1e})", got2.distance(&want2)),
        "the image of vertex 2",
    ));
    let pos = central_vertex_positions();
    let img = |v: &str| star_map(&pos[&lbl(v)].to_f64());
    let mut sym: f64 = 0.0;
    for (a, b) in [("2", "5"), ("5", "8"), ("8", "2"), ("3", "6"), ("6", "9"), ("9", "3")] {
        sym = sym.max(img(b).distance(&sigma_inverse(&img(a))));
    }
    for (a, b) in [("2", "3"), ("5", "6"), ("8", "9")] {
        sym = sym.max(img(b).distance(&tau_map(&img(a))));
    }
    sym = sym.max(img("[147]").distance(&ProjectivePoint::real(1.0, 1.0, 1.0)));
    out.push(Check::new(
        "vertex_table",
        sym < 1e-12,
        "remaining vertices follow from S and T; [147] -> [1:1:1]",
        format!("max {sym:.2e}"),
        "the remaining images follow from the symmetries",
    ));
    let layout = central_torus_coordinates()?;
    let areas = layout.areas();
    let total: f64 = areas.iter().sum();
    let spread =
        areas.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - areas.iter().cloned().fold(f64::INFINITY, f64::min);
    out.push(Check::new(
        "hexagon_areas",
        areas.len() == 14 && (total - hexagon_area()).abs() < 1e-9 && spread < 1e-9,
        "14 equal triangles, total 3√3",
        format!("{} triangles, total {total:.12}, spread {spread:.1e}", areas.len()),
        "the torus triangles tile the hexagon",
    ));
    let exps = p2_identity_exponents();
    out.push(Check::new(
        "p2_identity",
        exps == [1],
        "2p2 - Σ^k(p2) ≡ (-1,2,-1) for k = 1 only; the Σ² form does not hold",
        format!("holds for k in {exps:?}"),
        "p2 solves the defining identity",
    ));
    let one = Q::from(1);
    let z = Q::from(0);
    let corners = [[one, -one, z], [one, z, -one], [-one, one, z], [z, one, -one], [-one, z, one], [z, -one, one]];
    let pts: Vec<ExactFlatPoint> = corners.iter().map(|c| ExactFlatPoint(*c)).collect();
    let inside = pts.iter().all(|p| p.in_hexagon());
    let reps: BTreeSet<ExactFlatPoint> =
        pts.iter().map(|p| *pts.iter().find(|q| (*p - **q).is_lattice_point()).expect("self")).collect();
    let antipodal = pts.iter().filter(|p| (**p - -**p).is_lattice_point()).count();
    let half = Q::new(1, 2);
    let mid = ExactFlatPoint([one, -half, -half]);
    let sides = (mid - -mid).is_lattice_point();
    out.push(Check::new(
        "hexagon_corners",
        inside && reps.len() == 2 && antipodal == 0 && sides,
        "corners are the permutations of (1,-1,0), in two Λ-classes of three; opposite sides identified",
        format!("{} classes, {antipodal} antipodal pairs equivalent, side midpoints equivalent: {sides}", reps.len()),
        "the hexagon's opposite sides are identified",
    ));
    let mut memb = true;
    for k in 0..n.min(1000) {
        let u = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 1000.0);
        let q = ProjectivePoint([Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0), u]);
        memb &= beta_membership(&q, 1e-12).is_superset(&[1, 4].into());
    }
    out.push(Check::new("alpha14_membership", memb, "[1:1:u], |u|=1 lies in β14", memb, "the loop α14 lies in β147"));
    let p5 = pos[&lbl("5")];
    let p6 = pos[&lbl("6")];
    let lift = layout
        .triangles
        .iter()
        .find(|(t, _)| t.contains(&lbl("5")) && t.contains(&lbl("6")))
        .map(|(t, p)| {
            let i5 = t.vertices().iter().position(|l| *l == lbl("5")).expect("5");
            let i6 = t.vertices().iter().position(|l| *l == lbl("6")).expect("6");
            (p[i5], p[i6])
        })
        .unwrap_or((p5, p6));
    let m = (lift.0 + lift.1) * Q::new(1, 2);
    let m56 = star_map(&m.to_f64());
    out.push(Check::new(
        "midpoint_56",
        m56.distance(&ProjectivePoint::real(1.0, 1.0, -1.0)) < 1e-12,
        "[56] -> [1:1:-1]",
        format!("{m56}"),
        "the image of [56]",
    ));
    Ok(out)
}

fn fmt_counts(c: &[usize]) -> String {
    format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn fmt_surface(orientable: bool, euler: i64) -> String {
    format!("{}, χ={euler}", if orientable { "orientable" } else { "non-orientable" })
}

fn fmt_set(s: &BTreeSet<Simplex>) -> String {
    s.iter().map(compact).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_names_round_trip() {
        for t in Target::EACH.into_iter().chain([Target::All]) {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert!(matches!("cp3".parse::<Target>(), Err(Error::UnknownTarget(_))));
    }

    #[test]
    fn all_concatenates_every_target() {
        let opt = VerifyOptions { samples: 500, seed: 1, ..Default::default() };
        let all = verify(Target::All, &opt).unwrap();
        assert!(all.all_pass(false), "{}", all.to_text());
        let rows: usize = Target::EACH.iter().map(|t| verify(*t, &opt).unwrap().checks.len()).sum();
        assert_eq!(all.checks.len(), rows);
        assert!(all.checks.iter().any(|c| c.name == "trisection.B14_facets"));
    }
}
