//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_complex::Complex64;

use cp2nine::catalog::*;
use cp2nine::geometry::*;
use cp2nine::homology::{homology_groups, recognize_sphere_bistellar, DEFAULT_FLIP_BUDGET};
use cp2nine::iso::{is_isomorphic, verify_isomorphism};
use cp2nine::plmap::check_map_properties;
use cp2nine::subdivision::{label_set, relative_subdivide, subdivide_facet};
use cp2nine::symmetry::{automorphism_group, geometric_fixed_set, orbit_closure};
use cp2nine::trisection::*;
use cp2nine::{lbl, sx, Label, Simplex, SimplicialComplex};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

// ---------- oracles ----------

fn mask(s: &Simplex) -> u16 {
    s.vertices().iter().fold(0, |m, l| match l {
        Label::Original(k) => m | 1 << k,
        _ => panic!("original labels only"),
    })
}

fn permute_mask(m: u16, p: &[u16; 10]) -> u16 {
    (1..10).filter(|k| m & 1 << k != 0).fold(0, |acc, k| acc | 1 << p[k])
}

/// Facet masks of the S-orbit of the seeds, with S written out by hand.
fn orbit_masks() -> BTreeSet<u16> {
    let s: [u16; 10] = [0, 4, 5, 6, 7, 8, 9, 1, 2, 3];
    let mut out: BTreeSet<u16> = CP2_9_SEEDS.iter().map(|x| mask(&sx(x))).collect();
    for _ in 0..2 {
        let next: Vec<u16> = out.iter().map(|&m| permute_mask(m, &s)).collect();
        out.extend(next);
    }
    out
}

fn f_vector_from_masks(facets: &BTreeSet<u16>) -> Vec<usize> {
    let mut faces = BTreeSet::new();
    for &f in facets {
        // all non-empty sub-masks
        let mut sub = f;
        while sub != 0 {
            faces.insert(sub);
            sub = (sub - 1) & f;
        }
    }
    let mut counts = vec![0; 5];
    for f in faces {
        counts[f.count_ones() as usize - 1] += 1;
    }
    counts
}

/// Number of permutations of 1..9 preserving the facet set, by exhaustion.
fn brute_force_aut(facets: &BTreeSet<u16>) -> usize {
    let mut p: Vec<u16> = (1..10).collect();
    let mut count = 0;
    loop {
        let mut full = [0u16; 10];
        for (i, &x) in p.iter().enumerate() {
            full[i + 1] = x;
        }
        if facets.iter().all(|&f| facets.contains(&permute_mask(f, &full))) {
            count += 1;
        }
        let n = p.len();
        let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    count
}

fn rank_mod_p(mut a: Vec<Vec<i64>>, p: i64) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = (1..p).find(|x| x * a[rank][c] % p == 1).unwrap();
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c] * inv % p;
                let pivot = a[rank].clone();
                for (x, y) in a[i].iter_mut().zip(pivot) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers over Z/p from boundary matrices built here.
fn betti_mod_p(c: &SimplicialComplex, p: i64) -> Vec<usize> {
    let d = c.dim().unwrap();
    let by_dim: Vec<Vec<&Simplex>> = (0..=d).map(|k| c.faces_of_dim(k).collect()).collect();
    let mut ranks = vec![0; d + 2];
    for k in 1..=d {
        let index: BTreeMap<&Simplex, usize> = by_dim[k - 1].iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut m = vec![vec![0i64; by_dim[k].len()]; by_dim[k - 1].len()];
        for (j, s) in by_dim[k].iter().enumerate() {
            for i in 0..s.len() {
                let face = s.facet_without(i).unwrap();
                m[index[&face]][j] = if i % 2 == 0 { 1 } else { p - 1 };
            }
        }
        ranks[k] = rank_mod_p(m, p);
    }
    (0..=d).map(|k| by_dim[k].len() - ranks[k] - ranks[k + 1]).collect()
}

/// Relative subdivision of one facet, written directly from the chain description.
fn chains(f: &Simplex, d: &[u32]) -> BTreeSet<Simplex> {
    let dist: Vec<u32> = d.iter().copied().filter(|k| f.contains(&Label::Original(*k))).collect();
    let rest: Vec<Label> =
        f.vertices().iter().filter(|l| !dist.iter().any(|k| **l == Label::Original(*k))).cloned().collect();
    let mut out = BTreeSet::new();
    let mut perm = dist.clone();
    perm.sort();
    loop {
        let mut vs = rest.clone();
        for i in 1..=perm.len() {
            let prefix: Vec<Label> = perm[..i].iter().map(|k| Label::Original(*k)).collect();
            vs.push(if i == 1 { prefix[0].clone() } else { Label::derived(prefix).unwrap() });
        }
        out.insert(Simplex::new(vs).unwrap());
        let n = perm.len();
        if n < 2 {
            break;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    out
}

fn set(v: &[&str]) -> BTreeSet<Simplex> {
    v.iter().map(|s| sx(s)).collect()
}

fn subdivided() -> SimplicialComplex {
    relative_subdivide(&build_cp2_9(), &label_set(&[1, 4, 7])).unwrap()
}

fn trisection() -> Trisection {
    trisect(&subdivided(), &[lbl("1"), lbl("4"), lbl("7")]).unwrap()
}

// ---------- criteria ----------

fn c1_construction() -> Outcome {
    let lib = orbit_closure(&CP2_9_SEEDS.map(sx), &[s_perm()]).map_err(|e| e.to_string())?;
    let oracle = orbit_masks();
    ensure!(lib.len() == 36 && oracle.len() == 36, "orbit sizes {} / {}", lib.len(), oracle.len());
    ensure!(lib.iter().map(mask).collect::<BTreeSet<_>>() == oracle, "orbit differs from hand-computed orbit");
    let c = build_cp2_9();
    let fv = c.f_vector();
    ensure!(fv.counts == [9, 36, 84, 90, 36], "f-vector {:?}", fv.counts);
    ensure!(f_vector_from_masks(&oracle) == fv.counts, "f-vector oracle disagrees");
    ensure!(fv.euler == 3, "χ = {}", fv.euler);
    Ok("36 facets, f = (9,36,84,90,36), χ = 3".into())
}

fn c2_symmetry() -> Outcome {
    let c = build_cp2_9();
    let g = automorphism_group(&c);
    let (s, t) = (s_perm(), t_perm());
    let brute = brute_force_aut(&orbit_masks());
    ensure!(g.len() == 54 && brute == 54, "group order {} (exhaustive {brute})", g.len());
    ensure!(g.contains(&s) && g.contains(&t), "S or T missing");
    ensure!(s.compose(&t).unwrap() == t.compose(&s).unwrap(), "S and T do not commute");
    Ok("|Aut| = 54 (exhaustive over 9! agrees), S, T ∈ Aut, ST = TS".into())
}

fn c3_homology() -> Outcome {
    let b14 = trisection().pair(&lbl("1"), &lbl("4"));
    let cases = [
        ("CP2_9", build_cp2_9(), "(Z, 0, Z, 0, Z)", [vec![1, 0, 1, 0, 1], vec![1, 0, 1, 0, 1]]),
        ("RP2_6", build_rp2_6(), "(Z, Z/2, 0)", [vec![1, 1, 1], vec![1, 0, 0]]),
        ("T2_7", build_t2_7(), "(Z, Z^2, Z)", [vec![1, 2, 1], vec![1, 2, 1]]),
        ("B14", b14, "(Z, Z, 0, 0)", [vec![1, 1, 0, 0], vec![1, 1, 0, 0]]),
    ];
    for (name, c, want, [mod2, mod3]) in cases {
        let h = homology_groups(&c).to_string();
        ensure!(h == want, "{name}: {h}");
        // universal coefficients: Betti numbers over Z/2 and Z/3
        ensure!(betti_mod_p(&c, 2) == mod2 && betti_mod_p(&c, 3) == mod3, "{name}: mod-p Betti numbers disagree");
    }
    Ok("CP2_9, RP2_6, T2_7, B14 match; mod 2 and mod 3 ranks agree".into())
}

fn c4_manifold() -> Outcome {
    let c = build_cp2_9();
    let mut flips = Vec::new();
    for v in c.vertices() {
        let lk = c.vertex_link(v).unwrap();
        let verdict = recognize_sphere_bistellar(&lk, DEFAULT_FLIP_BUDGET, 0).unwrap();
        match verdict {
            cp2nine::homology::SphereVerdict::Sphere { dim: 3, flips: f } => flips.push(f),
            other => return Err(format!("link of {v}: {other:?}")),
        }
    }
    let (_, inner) = split_b14(&trisection().pair(&lbl("1"), &lbl("4"))).unwrap();
    let sphere = inner.link(&Simplex::new([lbl("[14]")]).unwrap()).unwrap();
    ensure!(sphere.facets().len() == 10, "{} triangles", sphere.facets().len());
    // the boundary of a cone over a closed surface is that surface
    ensure!(inner.boundary_complex().unwrap().facet_set() == sphere.facet_set(), "∂B14'' is not the link of [14]");
    let v = recognize_sphere_bistellar(&sphere, DEFAULT_FLIP_BUDGET, 0).unwrap();
    ensure!(matches!(v, cp2nine::homology::SphereVerdict::Sphere { dim: 2, .. }), "∂B14'': {v:?}");
    Ok(format!("9 links Sphere(3) (max {} flips), ∂B14'' Sphere(2) with 10 triangles", flips.iter().max().unwrap()))
}

fn c5_subdivision() -> Outcome {
    let s = subdivided();
    ensure!(
        s.facets().len() == 78 && s.vertices().len() == 13,
        "{} facets, {} vertices",
        s.facets().len(),
        s.vertices().len()
    );
    let d = label_set(&[1, 4, 7]);
    ensure!(
        s.facets().iter().all(|f| f.vertices().iter().filter(|l| d.contains(l)).count() == 1),
        "a facet without exactly one of 1,4,7"
    );
    let oracle: BTreeSet<Simplex> = build_cp2_9().facets().iter().flat_map(|f| chains(f, &[1, 4, 7])).collect();
    ensure!(oracle == s.facet_set(), "subdivision differs from the chain oracle");
    let two: BTreeSet<Simplex> = subdivide_facet(&sx("14256"), &d).unwrap().into_iter().collect();
    ensure!(two == set(&["1[14]256", "4[14]256"]), "rank-2 list");
    let three: BTreeSet<Simplex> = subdivide_facet(&sx("14726"), &d).unwrap().into_iter().collect();
    let want = set(&["1[14][147]26", "1[17][147]26", "4[14][147]26", "4[47][147]26", "7[17][147]26", "7[47][147]26"]);
    ensure!(three == want, "rank-3 list");
    let real = relative_subdivide(&build_rp2_6(), &label_set(&[1, 2, 3])).unwrap();
    let d3 = label_set(&[1, 2, 3]);
    ensure!(real.facets().len() == 18, "real case: {} triangles", real.facets().len());
    ensure!(
        real.facets().iter().all(|f| f.vertices().iter().filter(|l| d3.contains(l)).count() == 1),
        "real case vertex condition"
    );
    Ok("78 facets on 13 vertices, lists verbatim, real case 18 triangles".into())
}

fn c6_trisection() -> Outcome {
    let t = trisection();
    let s = s_perm();
    for (j, b) in ["1", "4", "7"].iter().zip(&t.pieces) {
        ensure!(b.facets().len() == 26, "B{j} has {} facets", b.facets().len());
        // oracle: facets of the subdivision containing j
        let direct: BTreeSet<Simplex> = subdivided().facets().iter().filter(|f| f.contains(&lbl(j))).cloned().collect();
        ensure!(b.facet_set() == direct, "B{j} differs from the facets containing {j}");
    }
    for k in 0..3 {
        ensure!(s.apply_complex(&t.pieces[k]).unwrap() == t.pieces[(k + 1) % 3], "S does not cycle the pieces");
    }
    let listed = set(&[
        "5289",
        "2389",
        "3689",
        "[14]256",
        "[14]356",
        "[14]259",
        "[14]368",
        "[14][147]26",
        "[14][147]68",
        "[14][147]83",
        "[14][147]35",
        "[14][147]59",
        "[14][147]92",
    ]);
    let b14 = t.pair(&lbl("1"), &lbl("4"));
    ensure!(b14.facet_set() == listed, "B14 differs from the listed 13 tetrahedra");
    Ok("|B_j| = 26, S cycles B1 → B4 → B7, B14 = the 13 listed tetrahedra".into())
}

fn c7_solid_torus() -> Outcome {
    let b14 = trisection().pair(&lbl("1"), &lbl("4"));
    let cert = verify_solid_torus(&b14, DEFAULT_FLIP_BUDGET, 0).unwrap();
    ensure!(cert.checks.len() == 6, "{} rows", cert.checks.len());
    for c in &cert.checks {
        ensure!(c.passed(), "{}: expected {}, observed {}", c.name, c.expected, c.observed);
    }
    // independent: outer half is the join of the path 5-2-3-6 with the edge 89
    let path = SimplicialComplex::from_compact(&["52", "23", "36"]);
    let edge = SimplicialComplex::from_compact(&["89"]);
    ensure!(path.join(&edge).unwrap() == cert.outer, "outer half is not the join");
    ensure!(cert.gluing == vec![sx("259"), sx("368")], "gluing {:?}", cert.gluing);
    let bd = b14.boundary_complex().unwrap().classify_closed_surface().unwrap();
    ensure!(bd.orientable && bd.euler == 0, "boundary {bd:?}");
    Ok("six certificate rows pass; join, gluing 259/368, ∂B14 orientable χ = 0".into())
}

fn c8_central() -> Outcome {
    let t = trisection();
    let b14 = t.pair(&lbl("1"), &lbl("4"));
    let bd = b14.boundary_complex().unwrap();
    let t27 = build_t2_7();
    let iso = is_isomorphic(&bd, &t27).ok_or("no isomorphism ∂B14 → T2_7")?;
    ensure!(verify_isomorphism(&bd, &t27, &iso), "bijection does not map facets to facets");
    let s = s_perm();
    ensure!(s.apply_label(&lbl("[147]")).unwrap() == lbl("[147]"), "S moves [147]");
    ensure!(s.apply_complex(&bd).is_ok_and(|x| x == t.central()), "S does not act on the central torus");
    let tori = enumerate_small_surfaces(7, SurfaceType::TORUS).unwrap();
    ensure!(tori.len() == 1, "{} tori on 7 vertices", tori.len());
    Ok("∂B14 ≅ T2_7 (verified bijection), S fixes [147], unique 7-vertex torus".into())
}

fn c9_minimality() -> Outcome {
    let start = Instant::now();
    let counts: Vec<usize> =
        (4..=6).map(|n| enumerate_small_surfaces(n, SurfaceType::PROJECTIVE_PLANE).unwrap().len()).collect();
    ensure!(counts == [0, 0, 1], "RP² counts on 4, 5, 6 vertices: {counts:?}");
    let six = enumerate_small_surfaces(6, SurfaceType::PROJECTIVE_PLANE).unwrap();
    ensure!(is_isomorphic(&six[0], &build_rp2_6()).is_some(), "the 6-vertex RP² is not RP2_6");
    let tori = enumerate_small_surfaces(7, SurfaceType::TORUS).unwrap();
    ensure!(tori.len() == 1 && is_isomorphic(&tori[0], &build_t2_7()).is_some(), "7-vertex tori: {}", tori.len());
    let secs = start.elapsed().as_secs_f64();
    ensure!(secs < 30.0, "took {secs:.1} s");
    Ok(format!("RP²: 0, 0, 1 on 4, 5, 6 vertices; 1 torus on 7 ({secs:.2} s)"))
}

fn c10_fixed_set() -> Outcome {
    let t = t_perm();
    let f = geometric_fixed_set(&build_cp2_9(), &t).unwrap();
    let want: BTreeSet<Label> = ["1", "4", "7", "[23]", "[56]", "[89]"].into_iter().map(lbl).collect();
    ensure!(*f.vertices() == want, "vertices {:?}", f.vertices());
    ensure!(is_isomorphic(&f, &build_rp2_6()).is_some(), "fixed set is not RP2_6");
    let fs = geometric_fixed_set(&subdivided(), &t).unwrap();
    ensure!(fs.facets().len() == 18, "{} triangles after subdividing", fs.facets().len());
    ensure!(fs == relative_subdivide(&f, &label_set(&[1, 4, 7])).unwrap(), "not the relative subdivision");
    Ok("Fix(T) ≅ RP2_6 on {1,4,7,[23],[56],[89]}; 18 triangles after subdividing".into())
}

fn c11_geometry() -> Outcome {
    // deterministic grid of sample points and lattice shifts
    let mut worst: f64 = 0.0;
    for k in 0..10_000u64 {
        let a = ((k * 7919) % 10_007) as f64 / 10_007.0 * 6.0 - 3.0;
        let b = ((k * 104_729) % 10_009) as f64 / 10_009.0 * 6.0 - 3.0;
        let p = FlatTorusPoint([a, b, -a - b]);
        let l = FlatTorusPoint::lattice((k % 11) as i64 - 5, (k % 7) as i64 - 3);
        worst = worst.max(star_map(&p.add(&l)).distance(&star_map(&p)));
    }
    ensure!(worst < 1e-12, "lattice invariance {worst:e}");
    let w = |k: f64| Complex64::from_polar(1.0, k * std::f64::consts::PI / 7.0);
    let want = ProjectivePoint([Complex64::new(1.0, 0.0), w(4.0), w(12.0)]);
    let e2 = star_map(&p2().to_f64()).distance(&want);
    ensure!(e2 < 1e-12, "vertex 2 error {e2:e}");
    let areas = central_torus_coordinates().unwrap().areas();
    let total: f64 = areas.iter().sum();
    ensure!(areas.len() == 14, "{} triangles", areas.len());
    ensure!(areas.iter().all(|a| (a - 3.0 * 3f64.sqrt() / 14.0).abs() < 1e-9), "unequal areas {areas:?}");
    ensure!((total - 3.0 * 3f64.sqrt()).abs() < 1e-9, "total area {total}");
    let exps = p2_identity_exponents();
    ensure!(exps == [1], "identity exponents {exps:?}");
    Ok(format!(
        "invariance {worst:.1e}, vertex 2 {e2:.1e}, 14 × 3√3/14; identity holds with Σ¹ only; the Σ² form fails"
    ))
}

fn c12_plmap() -> Outcome {
    let r = check_map_properties(10_000, 1e-9, 7).map_err(|e| e.to_string())?;
    let needed = ["vertex_images", "continuity", "membership", "s_conjugation", "t_conjugation"];
    let mut seen = Vec::new();
    for c in &r.checks {
        if needed.contains(&c.name.as_str()) {
            ensure!(c.passed(), "{}: expected {}, observed {}", c.name, c.expected, c.observed);
            seen.push(format!("{}: {}", c.name, c.observed));
        }
    }
    ensure!(seen.len() == needed.len(), "missing rows");
    ensure!(r.all_pass(false), "{}", r.to_text());
    Ok(format!("{} rows pass; {}", r.checks.len(), seen.join("; ")))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("CP2_9 construction", c1_construction),
        ("symmetry group", c2_symmetry),
        ("homology", c3_homology),
        ("manifold check", c4_manifold),
        ("subdivision", c5_subdivision),
        ("trisection", c6_trisection),
        ("solid torus certificate", c7_solid_torus),
        ("central torus", c8_central),
        ("minimality", c9_minimality),
        ("fixed set", c10_fixed_set),
        ("geometry", c11_geometry),
        ("PL map properties", c12_plmap),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
