//! The three pieces B_j of the subdivided complex and the certificates built
//! on them: cone structure, the solid torus B14, and the central torus.

use std::collections::BTreeSet;

use crate::catalog::{build_t2_7, s_perm};
use crate::complex::{sx, Simplex, SimplicialComplex, SurfaceDescriptor};
use crate::error::{Error, Result};
use crate::homology::{homology_groups, recognize_sphere_bistellar, HomologySummary, SphereVerdict};
use crate::iso::is_isomorphic;
use crate::label::{lbl, Label};
use crate::report::{Check, Status};

/// The intersection of the pieces around vertices 1 and 4, as listed
/// tetrahedron by tetrahedron.
pub const B14_TETRAHEDRA: [&str; 13] = [
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
];

#[derive(Clone, Debug)]
pub struct Trisection {
    pub labels: Vec<Label>,
    pub pieces: Vec<SimplicialComplex>,
}

impl Trisection {
    fn index(&self, l: &Label) -> usize {
        self.labels.iter().position(|x| x == l).expect("distinguished label")
    }

    pub fn piece(&self, l: &Label) -> &SimplicialComplex {
        &self.pieces[self.index(l)]
    }

    pub fn pair(&self, a: &Label, b: &Label) -> SimplicialComplex {
        self.piece(a).intersection(self.piece(b))
    }

    pub fn central(&self) -> SimplicialComplex {
        self.pieces.iter().skip(1).fold(self.pieces[0].clone(), |acc, p| acc.intersection(p))
    }
}

/// Splits the facets by their unique distinguished vertex.
pub fn trisect(subdivided: &SimplicialComplex, distinguished: &[Label]) -> Result<Trisection> {
    let mut buckets: Vec<Vec<Simplex>> = vec![Vec::new(); distinguished.len()];
    for f in subdivided.facets() {
        let hits: Vec<usize> = (0..distinguished.len()).filter(|&i| f.contains(&distinguished[i])).collect();
        if hits.len() != 1 {
            return Err(Error::BadSubdivision(format!("facet {f} has {} distinguished vertices", hits.len())));
        }
        buckets[hits[0]].push(f.clone());
    }
    let pieces = buckets.into_iter().map(SimplicialComplex::from_facets).collect::<Result<Vec<_>>>()?;
    Ok(Trisection { labels: distinguished.to_vec(), pieces })
}

pub fn pair_intersection(t: &Trisection, i: &Label, j: &Label) -> SimplicialComplex {
    t.pair(i, j)
}

fn facet_list(c: &SimplicialComplex) -> String {
    let v: Vec<String> = c.facets().iter().map(compact).collect();
    v.join(",")
}

/// Compact text of a simplex: labels concatenated.
pub fn compact(s: &Simplex) -> String {
    s.vertices().iter().map(|l| l.to_string()).collect()
}

pub fn verify_cone_structure(t: &Trisection) -> Vec<Check> {
    let mut out = Vec::new();
    let n = t.labels.len();
    for (i, j) in t.labels.iter().enumerate() {
        let b = &t.pieces[i];
        let lk = b.vertex_link(j).expect("distinguished vertex is in its piece");
        let cone = lk.cone_over(j).expect("apex is not in its own link");
        out.push(Check::new(
            &format!("B{j}_is_cone"),
            cone == *b,
            "B_j = cone over its link",
            if cone == *b { "equal" } else { "different" },
            "each piece is the cone to its vertex over its boundary",
        ));
        let bd = b.boundary_complex().expect("pure");
        let others: Vec<SimplicialComplex> = (0..n).filter(|&k| k != i).map(|k| b.intersection(&t.pieces[k])).collect();
        let union = others.iter().skip(1).fold(others[0].clone(), |acc, c| acc.union(c));
        let sizes: Vec<String> = others.iter().map(|c| c.facets().len().to_string()).collect();
        out.push(Check::new(
            &format!("dB{j}_tetrahedra"),
            bd.facets().len() == 26 && union == bd && lk == bd,
            "26 = 13 + 13, union of the two pair intersections",
            format!("{} = {}", bd.facets().len(), sizes.join(" + ")),
            "the boundary of each piece is made of 26 tetrahedra",
        ));
        if others.len() == 2 {
            let shared = others[0].intersection(&others[1]);
            let disjoint = others[0].facet_set().is_disjoint(&others[1].facet_set());
            let ok = disjoint && shared == t.central() && shared.dim() == Some(2);
            out.push(Check::new(
                &format!("B{j}_pairs_meet_in_center"),
                ok,
                "pair intersections share only the central 2-complex",
                format!("shared dim {:?}, common tetrahedra: {}", shared.dim(), !disjoint),
                "pair intersections have disjoint interiors",
            ));
        }
    }
    out
}

/// Splits B14 into the facets without the vertex [14] and those with it.
pub fn split_b14(b14: &SimplicialComplex) -> Result<(SimplicialComplex, SimplicialComplex)> {
    let apex = lbl("[14]");
    if b14.dim() != Some(3) || !b14.is_pure() {
        return Err(Error::NotPure("expected a pure 3-complex".into()));
    }
    let (with, without): (Vec<Simplex>, Vec<Simplex>) = b14.facets().iter().cloned().partition(|f| f.contains(&apex));
    if with.is_empty() || without.is_empty() {
        return Err(Error::MalformedSimplex("unexpected facet shape for the split".into()));
    }
    Ok((SimplicialComplex::from_facets(without)?, SimplicialComplex::from_facets(with)?))
}

#[derive(Clone, Debug)]
pub struct SolidTorusCertificate {
    pub outer: SimplicialComplex,
    pub inner: SimplicialComplex,
    pub inner_sphere: Option<SurfaceDescriptor>,
    pub sphere_verdict: Option<SphereVerdict>,
    pub gluing: Vec<Simplex>,
    pub orientation: Option<Vec<i8>>,
    pub homology: HomologySummary,
    pub boundary: Option<SurfaceDescriptor>,
    pub checks: Vec<Check>,
}

impl SolidTorusCertificate {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }
}

/// Reproduces the ball-gluing argument for B14 plus algebraic corroboration.
pub fn verify_solid_torus(b14: &SimplicialComplex, flip_budget: u64, seed: u64) -> Result<SolidTorusCertificate> {
    let (outer, inner) = split_b14(b14)?;
    let mut checks = Vec::new();

    let path = SimplicialComplex::from_compact(&["52", "23", "36"]);
    let edge = SimplicialComplex::from_compact(&["89"]);
    let join = path.join(&edge)?;
    checks.push(Check::new(
        "outer_is_join",
        join == outer,
        "join(path 5-2-3-6, edge 89) = {5289,2389,3689}",
        facet_list(&outer),
        "the half without [14] is a join of a path and a segment (a ball)",
    ));

    let apex = lbl("[14]");
    let sphere = inner.vertex_link(&apex)?;
    let desc = sphere.classify_closed_surface().ok();
    let verdict = recognize_sphere_bistellar(&sphere, flip_budget, seed).ok();
    let cone_ok = sphere.cone_over(&apex)? == inner;
    let sphere_ok = desc.as_ref().is_some_and(|d| d.orientable && d.euler == 2 && d.triangles == 10);
    let flips_ok = verdict.as_ref().is_some_and(|v| v.is_sphere());
    let mut c = Check::new(
        "inner_is_cone_on_sphere",
        cone_ok && sphere_ok && flips_ok,
        "cone to [14] over a 10-triangle 2-sphere",
        format!(
            "cone={cone_ok}, link={}, flips={}",
            desc.as_ref().map_or("not a surface".into(), |d| format!("{} ({} triangles)", d.name(), d.triangles)),
            verdict.as_ref().map_or("error".into(), |v| format!("{v:?}"))
        ),
        "the half with [14] is a cone over a 10-triangle 2-sphere (a ball)",
    );
    if cone_ok && sphere_ok && matches!(verdict, Some(SphereVerdict::Unknown { .. })) {
        c = c.with_status(Status::Unknown);
    }
    checks.push(c);

    let glue = outer.intersection(&inner);
    let gluing: Vec<Simplex> = glue.facets().to_vec();
    let disjoint = glue.components().len() == 2;
    let on_boundaries = {
        let bo = outer.boundary_complex()?;
        let bi = inner.boundary_complex()?;
        gluing.iter().all(|g| bo.contains(g) && bi.contains(g))
    };
    checks.push(Check::new(
        "gluing_disks",
        gluing == vec![sx("259"), sx("368")] && disjoint && on_boundaries,
        "two disjoint boundary triangles 259, 368",
        format!("{} (components {}, on both boundaries {})", facet_list(&glue), glue.components().len(), on_boundaries),
        "the halves meet in two disjoint boundary triangles",
    ));

    let orientation = b14.check_orientable()?;
    checks.push(Check::new(
        "orientable",
        orientation.is_some(),
        "orientable",
        if orientation.is_some() { "orientable" } else { "non-orientable" },
        "the gluing yields a solid torus, not a solid Klein bottle",
    ));

    let homology = homology_groups(b14);
    checks.push(Check::eq("homology", "(Z, Z, 0, 0)", &homology, "homology of a solid torus"));

    let boundary = b14.boundary_complex()?.classify_closed_surface().ok();
    checks.push(Check::new(
        "boundary_torus",
        boundary.as_ref().is_some_and(|d| d.orientable && d.euler == 0),
        "orientable, chi=0",
        boundary.as_ref().map_or("not a surface".into(), |d| format!("orientable={}, chi={}", d.orientable, d.euler)),
        "the boundary of the solid torus is a torus",
    ));

    Ok(SolidTorusCertificate {
        outer,
        inner,
        inner_sphere: desc,
        sphere_verdict: verdict,
        gluing,
        orientation,
        homology,
        boundary,
        checks,
    })
}

pub fn verify_central_torus(t: &Trisection) -> Vec<Check> {
    let mut out = Vec::new();
    let center = t.central();
    let (l1, l4, l7) = (&t.labels[0], &t.labels[1], &t.labels[2]);
    let b14 = t.pair(l1, l4);
    let b17 = t.pair(l1, l7);
    let b47 = t.pair(l4, l7);
    let bds: Vec<SimplicialComplex> = [&b14, &b17, &b47].iter().map(|c| c.boundary_complex().expect("pure")).collect();
    out.push(Check::new(
        "center_is_boundary",
        bds.iter().all(|b| *b == center) && b14.intersection(&b17) == center,
        "B147 = dB14 = dB17 = dB47 = B14 n B17",
        format!("{} triangles", center.facets().len()),
        "the central complex is the common boundary of the pair intersections",
    ));
    let verts: Vec<String> = center.vertices().iter().map(|l| l.to_string()).collect();
    out.push(Check::eq("center_vertices", "2,3,5,6,8,9,[147]", verts.join(","), "the central torus has 7 vertices"));
    let t27 = build_t2_7();
    let iso = is_isomorphic(&center, &t27);
    out.push(Check::new(
        "center_iso_T27",
        iso.is_some() && center == t27,
        "isomorphic (and label-identical)",
        match &iso {
            Some(_) if center == t27 => "identical".to_string(),
            Some(_) => "isomorphic".to_string(),
            None => "no bijection".to_string(),
        },
        "the central complex is the 7-vertex torus",
    ));
    let s = s_perm();
    let image = s.apply_complex(&center).expect("labels in support");
    let fixed = s.apply_label(&lbl("[147]")).expect("in support");
    let cycles = {
        let on: BTreeSet<Label> = center.vertices().clone();
        let mut parts = Vec::new();
        let mut seen = BTreeSet::new();
        for v in &on {
            if seen.contains(v) {
                continue;
            }
            let mut cyc = vec![v.clone()];
            seen.insert(v.clone());
            let mut x = s.apply_label(v).expect("in support");
            while x != *v {
                seen.insert(x.clone());
                cyc.push(x.clone());
                x = s.apply_label(&x).expect("in support");
            }
            if cyc.len() > 1 {
                parts.push(format!("({})", cyc.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")));
            }
        }
        parts.join("")
    };
    out.push(Check::new(
        "S_on_center",
        image == center && fixed == lbl("[147]") && cycles == "(2 5 8)(3 6 9)",
        "invariant, fixes [147], (2 5 8)(3 6 9)",
        format!("invariant={}, [147]->{fixed}, {cycles}", image == center),
        "S acts on the central torus fixing [147]",
    ));
    out
}
