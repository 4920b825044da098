//! Finite abstract simplicial complexes over [`Label`]s.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::label::Label;

/// A simplex: a strictly sorted, non-empty vertex list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Simplex(Vec<Label>);

impl Simplex {
    pub fn new(vertices: impl IntoIterator<Item = Label>) -> Result<Simplex> {
        let mut v: Vec<Label> = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(Error::MalformedSimplex("no vertices".into()));
        }
        v.sort();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(Error::MalformedSimplex(format!("duplicate vertex {}", w[0])));
            }
        }
        Ok(Simplex(v))
    }

    /// Compact form used for literals: `15289`, `[14][147]26`.
    pub fn compact(s: &str) -> Result<Simplex> {
        Simplex::new(Label::parse_run(s)?)
    }

    pub fn vertices(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.0.binary_search(l).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|l| other.contains(l))
    }

    /// The face obtained by deleting the `i`-th vertex (`None` for a vertex).
    pub fn facet_without(&self, i: usize) -> Option<Simplex> {
        if self.0.len() == 1 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(i);
        Some(Simplex(v))
    }

    pub fn union(&self, other: &Simplex) -> Result<Simplex> {
        Simplex::new(self.0.iter().chain(other.0.iter()).cloned().collect::<BTreeSet<_>>())
    }

    pub fn intersects(&self, other: &Simplex) -> bool {
        self.0.iter().any(|l| other.contains(l))
    }

    /// All non-empty subsets.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        assert!(n < 32, "simplex too large to enumerate faces");
        (1u32..(1 << n))
            .map(|mask| Simplex((0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i].clone()).collect()))
            .collect()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorthand for literals in compact form; panics on bad input.
pub fn sx(s: &str) -> Simplex {
    Simplex::compact(s).unwrap_or_else(|e| panic!("bad simplex literal {s}: {e}"))
}

/// A downward-closed set of simplices. Faces are stored explicitly.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SimplicialComplex {
    faces: BTreeSet<Simplex>,
    facets: Vec<Simplex>,
    vertices: BTreeSet<Label>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    pub counts: Vec<usize>,
    pub euler: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceDescriptor {
    pub orientable: bool,
    pub euler: i64,
    pub triangles: usize,
}

impl SurfaceDescriptor {
    pub fn name(&self) -> String {
        match (self.orientable, self.euler) {
            (true, 2) => "sphere".into(),
            (true, 0) => "torus".into(),
            (false, 1) => "projective plane".into(),
            (false, 0) => "Klein bottle".into(),
            (true, e) => format!("orientable genus {}", (2 - e) / 2),
            (false, e) => format!("non-orientable genus {}", 2 - e),
        }
    }
}

impl SimplicialComplex {
    /// The empty complex (no faces at all).
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_facets(facets: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let facets: Vec<Simplex> = facets.into_iter().collect();
        if facets.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let mut faces = BTreeSet::new();
        for f in &facets {
            faces.extend(f.faces());
        }
        Ok(Self::from_face_set(faces))
    }

    /// Parses compact facets, e.g. `["123", "124"]`. Panics on bad input.
    pub fn from_compact(facets: &[&str]) -> Self {
        Self::from_facets(facets.iter().map(|s| sx(s))).expect("non-empty literal complex")
    }

    /// `faces` must already be downward closed.
    pub(crate) fn from_face_set(faces: BTreeSet<Simplex>) -> Self {
        let vertices: BTreeSet<Label> = faces.iter().filter(|f| f.len() == 1).map(|f| f.0[0].clone()).collect();
        let mut facets = Vec::new();
        for f in &faces {
            let maximal = !vertices.iter().any(|v| {
                !f.contains(v) && {
                    let mut w = f.0.clone();
                    let pos = w.binary_search(v).unwrap_err();
                    w.insert(pos, v.clone());
                    faces.contains(&Simplex(w))
                }
            });
            if maximal {
                facets.push(f.clone());
            }
        }
        Self { faces, facets, vertices }
    }

    pub fn faces(&self) -> &BTreeSet<Simplex> {
        &self.faces
    }

    /// Facets in canonical (dimension, lexicographic) order.
    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn vertices(&self) -> &BTreeSet<Label> {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.faces.contains(s)
    }

    /// Dimension; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.dim() {
            None => true,
            Some(d) => self.facets.iter().all(|f| f.dim() == d),
        }
    }

    pub fn faces_of_dim(&self, k: usize) -> impl Iterator<Item = &Simplex> {
        self.faces.iter().filter(move |f| f.dim() == k)
    }

    pub fn facet_set(&self) -> BTreeSet<Simplex> {
        self.facets.iter().cloned().collect()
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0usize; self.dim().map_or(0, |d| d + 1)];
        for f in &self.faces {
            counts[f.dim()] += 1;
        }
        let euler = counts.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        FVector { counts, euler }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler
    }

    pub fn link(&self, f: &Simplex) -> Result<SimplicialComplex> {
        if !self.contains(f) {
            return Err(Error::NotAFace(f.to_string()));
        }
        let mut out = BTreeSet::new();
        for g in &self.faces {
            if f.is_subset_of(g) && g.len() > f.len() {
                let rest: Vec<Label> = g.0.iter().filter(|l| !f.contains(l)).cloned().collect();
                out.insert(Simplex(rest));
            }
        }
        Ok(Self::from_face_set(out))
    }

    pub fn vertex_link(&self, v: &Label) -> Result<SimplicialComplex> {
        self.link(&Simplex(vec![v.clone()]))
    }

    /// Facets of `self` that contain `v`, as a complex (the closed star).
    pub fn star(&self, v: &Label) -> SimplicialComplex {
        let fs: Vec<Simplex> = self.facets.iter().filter(|f| f.contains(v)).cloned().collect();
        if fs.is_empty() {
            return Self::empty();
        }
        Self::from_facets(fs).expect("non-empty")
    }

    /// Ridges of a pure complex mapped to the facets containing them.
    pub fn ridge_incidence(&self) -> BTreeMap<Simplex, Vec<usize>> {
        let mut inc: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
        for (i, f) in self.facets.iter().enumerate() {
            for j in 0..f.len() {
                if let Some(r) = f.facet_without(j) {
                    inc.entry(r).or_default().push(i);
                }
            }
        }
        inc
    }

    fn require_pure(&self) -> Result<usize> {
        if !self.is_pure() {
            return Err(Error::NotPure(format!(
                "facet dimensions {:?}",
                self.facets.iter().map(|f| f.dim()).collect::<BTreeSet<_>>()
            )));
        }
        Ok(self.dim().unwrap_or(0))
    }

    /// Complex generated by the ridges lying in exactly one facet.
    pub fn boundary_complex(&self) -> Result<SimplicialComplex> {
        self.require_pure()?;
        let free: Vec<Simplex> =
            self.ridge_incidence().into_iter().filter(|(_, v)| v.len() == 1).map(|(r, _)| r).collect();
        if free.is_empty() {
            return Ok(Self::empty());
        }
        Self::from_facets(free)
    }

    pub fn cone_over(&self, apex: &Label) -> Result<SimplicialComplex> {
        if self.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        if self.vertices.contains(apex) {
            return Err(Error::LabelCollision(apex.to_string()));
        }
        let a = Simplex(vec![apex.clone()]);
        let mut faces = self.faces.clone();
        faces.insert(a.clone());
        for f in &self.faces {
            faces.insert(f.union(&a)?);
        }
        Ok(Self::from_face_set(faces))
    }

    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if let Some(v) = self.vertices.intersection(&other.vertices).next() {
            return Err(Error::LabelCollision(v.to_string()));
        }
        let mut faces = self.faces.clone();
        faces.extend(other.faces.iter().cloned());
        for f in &self.faces {
            for g in &other.faces {
                faces.insert(f.union(g)?);
            }
        }
        if faces.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        Ok(Self::from_face_set(faces))
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut faces = self.faces.clone();
        faces.extend(other.faces.iter().cloned());
        Self::from_face_set(faces)
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        Self::from_face_set(self.faces.intersection(&other.faces).cloned().collect())
    }

    /// Connected components of the 1-skeleton, as vertex sets.
    pub fn components(&self) -> Vec<BTreeSet<Label>> {
        let mut adj: HashMap<&Label, Vec<&Label>> = HashMap::new();
        for e in self.faces_of_dim(1) {
            adj.entry(&e.0[0]).or_default().push(&e.0[1]);
            adj.entry(&e.0[1]).or_default().push(&e.0[0]);
        }
        let mut seen: BTreeSet<Label> = BTreeSet::new();
        let mut out = Vec::new();
        for v in &self.vertices {
            if seen.contains(v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut q = VecDeque::from([v]);
            seen.insert(v.clone());
            while let Some(x) = q.pop_front() {
                comp.insert(x.clone());
                for &y in adj.get(x).map(|v| v.as_slice()).unwrap_or(&[]) {
                    if seen.insert(y.clone()) {
                        q.push_back(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Tries to orient the facets coherently. Returns per-facet signs (in
    /// facet order) relative to the sorted vertex order, or `None` when the
    /// complex is non-orientable.
    pub fn check_orientable(&self) -> Result<Option<Vec<i8>>> {
        self.require_pure()?;
        let inc = self.ridge_incidence();
        // (neighbour, sign relation): sign[j] must equal rel * sign[i]
        let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); self.facets.len()];
        for (r, fs) in &inc {
            if fs.len() > 2 {
                return Err(Error::NotPseudomanifold(r.to_string(), fs.len()));
            }
            if fs.len() == 2 {
                let (i, j) = (fs[0], fs[1]);
                let si = induced_sign(&self.facets[i], r);
                let sj = induced_sign(&self.facets[j], r);
                // need sign[i]*si = -sign[j]*sj
                let rel = -si * sj;
                adj[i].push((j, rel));
                adj[j].push((i, rel));
            }
        }
        let mut sign = vec![0i8; self.facets.len()];
        for start in 0..self.facets.len() {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut q = VecDeque::from([start]);
            while let Some(i) = q.pop_front() {
                for &(j, rel) in &adj[i] {
                    let want = rel * sign[i];
                    if sign[j] == 0 {
                        sign[j] = want;
                        q.push_back(j);
                    } else if sign[j] != want {
                        return Ok(None);
                    }
                }
            }
        }
        Ok(Some(sign))
    }

    /// Checks that a pure connected 2-complex is a closed surface.
    pub fn classify_closed_surface(&self) -> Result<SurfaceDescriptor> {
        let d = self.require_pure()?;
        if d != 2 {
            return Err(Error::NotASurface(format!("dimension {d}, expected 2")));
        }
        for (e, fs) in self.ridge_incidence() {
            if fs.len() != 2 {
                return Err(Error::NotASurface(format!("edge {e} lies in {} triangles", fs.len())));
            }
        }
        for v in &self.vertices {
            let lk = self.vertex_link(v)?;
            if !is_single_cycle(&lk) {
                return Err(Error::NotASurface(format!("link of vertex {v} is not a single cycle")));
            }
        }
        if self.components().len() != 1 {
            return Err(Error::NotASurface("disconnected".into()));
        }
        let orientable = self.check_orientable()?.is_some();
        Ok(SurfaceDescriptor { orientable, euler: self.euler_characteristic(), triangles: self.facets.len() })
    }

    /// Every ridge in exactly two facets and connected.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        self.is_pure()
            && !self.is_empty()
            && self.ridge_incidence().values().all(|v| v.len() == 2)
            && self.components().len() == 1
    }

    /// Applies a vertex map to every face.
    pub fn relabel(&self, f: impl Fn(&Label) -> Result<Label>) -> Result<SimplicialComplex> {
        if self.is_empty() {
            return Ok(Self::empty());
        }
        let facets: Result<Vec<Simplex>> =
            self.facets.iter().map(|s| Simplex::new(s.0.iter().map(&f).collect::<Result<Vec<_>>>()?)).collect();
        Self::from_facets(facets?)
    }
}

/// Sign with which the sorted `ridge` appears in the boundary of the sorted
/// `facet`: (-1)^i where i is the index of the deleted vertex.
pub(crate) fn induced_sign(facet: &Simplex, ridge: &Simplex) -> i8 {
    let i = facet.0.iter().position(|l| !ridge.contains(l)).expect("ridge is a proper face");
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

fn is_single_cycle(c: &SimplicialComplex) -> bool {
    if c.dim() != Some(1) || !c.is_pure() {
        return false;
    }
    let mut deg: HashMap<&Label, usize> = HashMap::new();
    for e in c.faces_of_dim(1) {
        *deg.entry(&e.0[0]).or_default() += 1;
        *deg.entry(&e.0[1]).or_default() += 1;
    }
    deg.values().all(|&d| d == 2) && c.components().len() == 1
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.facets {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
