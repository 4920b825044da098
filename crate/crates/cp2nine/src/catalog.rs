//! Named complexes and an exhaustive enumerator of small closed surfaces.

use std::collections::BTreeSet;

use crate::complex::{sx, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::iso::is_isomorphic;
use crate::label::Label;
use crate::symmetry::{orbit_closure, Permutation};

/// The 6-vertex projective plane: the icosahedron modulo the antipodal map.
/// This labeling is invariant under (123)(456); vertex 1..3 form a triangle
/// whose opposite hexagon 4..6 closes up with the half-twist.
pub const RP2_6_FACETS: [&str; 10] = ["123", "124", "235", "136", "156", "145", "246", "256", "345", "346"];

/// The 7-vertex torus, labeled as the central torus of the subdivided
/// 9-vertex complex.
pub const T2_7_FACETS: [&str; 14] = [
    "238", "239", "256", "258", "26[147]", "29[147]", "356", "35[147]", "369", "38[147]", "589", "59[147]", "689",
    "68[147]",
];

/// Orbit representatives for the 9-vertex complex under S.
pub const CP2_9_SEEDS: [&str; 12] =
    ["15289", "12389", "13689", "45289", "42389", "43689", "14256", "14356", "14259", "14368", "14726", "14768"];

/// Four further facets the orbit must contain.
pub const CP2_9_CHECK: [&str; 4] = ["14783", "14735", "14759", "14792"];

pub const S_CYCLES: &str = "(147)(258)(369)";
pub const T_CYCLES: &str = "(23)(56)(89)";
pub const RP2_ROTATION: &str = "(123)(456)";

pub fn s_perm() -> Permutation {
    Permutation::parse_cycles(S_CYCLES, Some(9)).expect("valid literal")
}

pub fn t_perm() -> Permutation {
    Permutation::parse_cycles(T_CYCLES, Some(9)).expect("valid literal")
}

pub fn rp2_rotation() -> Permutation {
    Permutation::parse_cycles(RP2_ROTATION, Some(6)).expect("valid literal")
}

pub fn build_rp2_6() -> SimplicialComplex {
    SimplicialComplex::from_compact(&RP2_6_FACETS)
}

pub fn build_t2_7() -> SimplicialComplex {
    SimplicialComplex::from_compact(&T2_7_FACETS)
}

pub fn build_cp2_9() -> SimplicialComplex {
    let seeds: Vec<Simplex> = CP2_9_SEEDS.iter().map(|s| sx(s)).collect();
    let orbit = orbit_closure(&seeds, &[s_perm()]).expect("seed labels are in the support");
    assert_eq!(orbit.len(), 36, "seed data corrupted: orbit has {} facets", orbit.len());
    for s in CP2_9_CHECK {
        assert!(orbit.contains(&sx(s)), "seed data corrupted: {s} missing");
    }
    SimplicialComplex::from_facets(orbit).expect("non-empty")
}

/// A closed-surface type, identified by orientability and Euler characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceType {
    pub orientable: bool,
    pub euler: i64,
}

impl SurfaceType {
    pub const SPHERE: SurfaceType = SurfaceType { orientable: true, euler: 2 };
    pub const TORUS: SurfaceType = SurfaceType { orientable: true, euler: 0 };
    pub const PROJECTIVE_PLANE: SurfaceType = SurfaceType { orientable: false, euler: 1 };
    pub const KLEIN_BOTTLE: SurfaceType = SurfaceType { orientable: false, euler: 0 };
}

struct Enumerator {
    n: usize,
    tris: Vec<[usize; 3]>,
    edge_count: Vec<u8>,
    chosen: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Vec<usize>>,
}

fn edge_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    a * n + b
}

impl Enumerator {
    fn edges(&self, t: usize) -> [usize; 3] {
        let [a, b, c] = self.tris[t];
        [edge_index(self.n, a, b), edge_index(self.n, a, c), edge_index(self.n, b, c)]
    }

    /// Partial vertex links must stay unions of paths, or one closed cycle.
    fn links_ok(&self) -> bool {
        for v in 0..self.n {
            let mut deg = vec![0u8; self.n];
            let mut link_edges = Vec::new();
            for &t in &self.chosen {
                let tri = self.tris[t];
                if tri.contains(&v) {
                    let o: Vec<usize> = tri.iter().copied().filter(|&x| x != v).collect();
                    deg[o[0]] += 1;
                    deg[o[1]] += 1;
                    link_edges.push((o[0], o[1]));
                }
            }
            if deg.iter().any(|&d| d > 2) {
                return false;
            }
            // a closed cycle must use every link vertex
            let verts = deg.iter().filter(|&&d| d > 0).count();
            if verts > 0 && link_edges.len() >= verts && link_edges.len() != verts {
                return false;
            }
            if link_edges.len() == verts && verts > 0 {
                // cycle count: the link is a 2-regular graph; must be connected
                let mut comp = vec![usize::MAX; self.n];
                let mut ncomp = 0;
                for &(a, _) in &link_edges {
                    if comp[a] != usize::MAX {
                        continue;
                    }
                    let mut stack = vec![a];
                    comp[a] = ncomp;
                    while let Some(x) = stack.pop() {
                        for &(p, q) in &link_edges {
                            for (s, t) in [(p, q), (q, p)] {
                                if s == x && comp[t] == usize::MAX {
                                    comp[t] = ncomp;
                                    stack.push(t);
                                }
                            }
                        }
                    }
                    ncomp += 1;
                }
                if ncomp > 1 {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self) {
        let open = (0..self.n * self.n).find(|&e| self.edge_count[e] == 1);
        let Some(e) = open else {
            self.found.push(self.chosen.clone());
            return;
        };
        for t in 0..self.tris.len() {
            if self.used[t] || !self.edges(t).contains(&e) {
                continue;
            }
            if self.edges(t).iter().any(|&x| self.edge_count[x] >= 2) {
                continue;
            }
            self.add(t);
            if self.links_ok() {
                self.run();
            }
            self.remove(t);
        }
    }

    fn add(&mut self, t: usize) {
        for x in self.edges(t) {
            self.edge_count[x] += 1;
        }
        self.used[t] = true;
        self.chosen.push(t);
    }

    fn remove(&mut self, t: usize) {
        for x in self.edges(t) {
            self.edge_count[x] -= 1;
        }
        self.used[t] = false;
        self.chosen.pop();
    }
}

/// All closed surfaces of the given type on exactly `n` vertices, one per
/// isomorphism class.
pub fn enumerate_small_surfaces(n: usize, target: SurfaceType) -> Result<Vec<SimplicialComplex>> {
    if n > 7 {
        return Err(Error::EnumerationTooLarge(n));
    }
    if n < 4 {
        return Ok(Vec::new());
    }
    let mut tris = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                tris.push([a, b, c]);
            }
        }
    }
    let mut e = Enumerator {
        n,
        edge_count: vec![0; n * n],
        used: vec![false; tris.len()],
        tris,
        chosen: Vec::new(),
        found: Vec::new(),
    };
    // every surface contains some triangle; relabel it to 0,1,2
    e.add(0);
    e.run();
    let mut classes: Vec<SimplicialComplex> = Vec::new();
    let mut seen: BTreeSet<BTreeSet<Simplex>> = BTreeSet::new();
    for sol in &e.found {
        let facets: Vec<Simplex> = sol
            .iter()
            .map(|&t| Simplex::new(e.tris[t].iter().map(|&v| Label::Original(v as u32 + 1))).expect("distinct"))
            .collect();
        let c = SimplicialComplex::from_facets(facets)?;
        if c.vertices().len() != n || !seen.insert(c.facet_set()) {
            continue;
        }
        let Ok(d) = c.classify_closed_surface() else { continue };
        if d.orientable != target.orientable || d.euler != target.euler {
            continue;
        }
        if classes.iter().all(|k| is_isomorphic(k, &c).is_none()) {
            classes.push(c);
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rp2_counts() {
        let c = build_rp2_6();
        assert_eq!(c.f_vector().counts, vec![6, 15, 10]);
        let rot = rp2_rotation();
        assert_eq!(rot.apply_complex(&c).unwrap().facet_set(), c.facet_set());
    }

    #[test]
    fn torus_counts() {
        let c = build_t2_7();
        let fv = c.f_vector();
        assert_eq!((fv.counts, fv.euler), (vec![7, 21, 14], 0));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_small_surfaces(4, SurfaceType::SPHERE).unwrap().len(), 1);
        assert_eq!(enumerate_small_surfaces(5, SurfaceType::SPHERE).unwrap().len(), 1);
        assert_eq!(enumerate_small_surfaces(6, SurfaceType::SPHERE).unwrap().len(), 2);
        assert!(matches!(enumerate_small_surfaces(8, SurfaceType::SPHERE), Err(Error::EnumerationTooLarge(8))));
    }
}
