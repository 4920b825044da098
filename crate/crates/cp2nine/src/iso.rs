//! Vertex-bijection search between complexes.
//!
//! Complexes are compared through their facet hypergraphs: a bijection is an
//! isomorphism iff it carries the facet set of one onto the facet set of the
//! other. Candidates are pruned by a per-vertex signature (facet degrees by
//! dimension plus the link f-vector) and by 1-skeleton adjacency.

use std::collections::{BTreeMap, HashSet};

use crate::complex::SimplicialComplex;
use crate::label::Label;

struct Indexed {
    labels: Vec<Label>,
    facets: HashSet<u64>,
    by_vertex: Vec<Vec<u64>>,
    adj: Vec<u64>,
    sig: Vec<Vec<usize>>,
}

impl Indexed {
    fn new(c: &SimplicialComplex) -> Option<Indexed> {
        let labels: Vec<Label> = c.vertices().iter().cloned().collect();
        if labels.len() > 64 {
            return None;
        }
        let idx: BTreeMap<&Label, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mask = |s: &crate::complex::Simplex| s.vertices().iter().fold(0u64, |m, l| m | 1 << idx[l]);
        let facets: HashSet<u64> = c.facets().iter().map(mask).collect();
        let n = labels.len();
        let mut by_vertex = vec![Vec::new(); n];
        for &f in &facets {
            for (i, bv) in by_vertex.iter_mut().enumerate() {
                if f & (1 << i) != 0 {
                    bv.push(f);
                }
            }
        }
        let mut adj = vec![0u64; n];
        for e in c.faces_of_dim(1) {
            let (a, b) = (idx[&e.vertices()[0]], idx[&e.vertices()[1]]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let maxd = c.dim().unwrap_or(0) + 1;
        let sig = (0..n)
            .map(|i| {
                let mut s = vec![0usize; maxd + 1];
                for f in &by_vertex[i] {
                    s[f.count_ones() as usize - 1] += 1;
                }
                let lk = c.vertex_link(&labels[i]).expect("vertex is a face");
                s.extend(lk.f_vector().counts);
                s
            })
            .collect();
        Some(Indexed { labels, facets, by_vertex, adj, sig })
    }
}

struct Search<'a> {
    a: &'a Indexed,
    b: &'a Indexed,
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: u64,
}

impl<'a> Search<'a> {
    fn consistent(&self, av: usize, bv: usize) -> bool {
        if self.a.sig[av] != self.b.sig[bv] {
            return false;
        }
        for (u, m) in self.map.iter().enumerate() {
            if let Some(w) = m {
                let ea = self.a.adj[av] & (1 << u) != 0;
                let eb = self.b.adj[bv] & (1 << w) != 0;
                if ea != eb {
                    return false;
                }
            }
        }
        // every facet through av whose vertices are all assigned must map to a facet
        for &f in &self.a.by_vertex[av] {
            let mut img = 1u64 << bv;
            let mut complete = true;
            let mut rest = f & !(1 << av);
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                match self.map[u] {
                    Some(w) => img |= 1 << w,
                    None => {
                        complete = false;
                        break;
                    }
                }
            }
            if complete && !self.b.facets.contains(&img) {
                return false;
            }
        }
        true
    }

    fn run(&mut self, depth: usize, out: &mut dyn FnMut(&[Option<usize>]) -> bool) -> bool {
        if depth == self.order.len() {
            return out(&self.map);
        }
        let av = self.order[depth];
        for bv in 0..self.b.labels.len() {
            if self.used & (1 << bv) != 0 || !self.consistent(av, bv) {
                continue;
            }
            self.map[av] = Some(bv);
            self.used |= 1 << bv;
            let stop = self.run(depth + 1, out);
            self.map[av] = None;
            self.used &= !(1 << bv);
            if stop {
                return true;
            }
        }
        false
    }
}

/// Visits every isomorphism `a -> b`; the visitor returns `true` to stop.
fn search(a: &SimplicialComplex, b: &SimplicialComplex, visit: &mut dyn FnMut(BTreeMap<Label, Label>) -> bool) {
    if a.vertices().len() != b.vertices().len() || a.facets().len() != b.facets().len() || a.f_vector() != b.f_vector()
    {
        return;
    }
    let (Some(ia), Some(ib)) = (Indexed::new(a), Indexed::new(b)) else {
        return;
    };
    let mut sa: Vec<&Vec<usize>> = ia.sig.iter().collect();
    let mut sb: Vec<&Vec<usize>> = ib.sig.iter().collect();
    sa.sort();
    sb.sort();
    if sa != sb {
        return;
    }
    // assign vertices in breadth-first order so adjacency prunes early
    let n = ia.labels.len();
    let mut order = Vec::with_capacity(n);
    let mut seen = 0u64;
    for s in 0..n {
        if seen & (1 << s) != 0 {
            continue;
        }
        seen |= 1 << s;
        let start = order.len();
        order.push(s);
        let mut k = start;
        while k < order.len() {
            let v = order[k];
            let mut nb = ia.adj[v] & !seen;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << u;
                order.push(u);
            }
            k += 1;
        }
    }
    let mut s = Search { a: &ia, b: &ib, order, map: vec![None; n], used: 0 };
    let mut cb = |m: &[Option<usize>]| {
        let map: BTreeMap<Label, Label> = m
            .iter()
            .enumerate()
            .map(|(i, w)| (ia.labels[i].clone(), ib.labels[w.expect("complete")].clone()))
            .collect();
        visit(map)
    };
    s.run(0, &mut cb);
}

/// A vertex bijection carrying the facets of `a` onto those of `b`, if any.
/// The first one found in canonical order is returned.
pub fn is_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<BTreeMap<Label, Label>> {
    let mut found = None;
    search(a, b, &mut |m| {
        found = Some(m);
        true
    });
    if let Some(m) = &found {
        debug_assert!(verify_isomorphism(a, b, m));
    }
    found
}

/// All automorphisms as vertex maps, in canonical (lexicographic) order.
pub fn automorphisms(c: &SimplicialComplex) -> Vec<BTreeMap<Label, Label>> {
    let mut out = Vec::new();
    search(c, c, &mut |m| {
        out.push(m);
        false
    });
    out.sort();
    out
}

/// Checks a claimed isomorphism witness directly.
pub fn verify_isomorphism(a: &SimplicialComplex, b: &SimplicialComplex, m: &BTreeMap<Label, Label>) -> bool {
    let images: HashSet<&Label> = m.values().collect();
    if m.len() != a.vertices().len() || images.len() != m.len() {
        return false;
    }
    let Ok(img) = a.relabel(|l| m.get(l).cloned().ok_or(crate::error::Error::OutsideSupport(l.to_string()))) else {
        return false;
    };
    img.facet_set() == b.facet_set()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_boundary_has_s4_symmetry() {
        let c = SimplicialComplex::from_compact(&["123", "124", "134", "234"]);
        assert_eq!(automorphisms(&c).len(), 24);
    }

    #[test]
    fn hexagon_symmetry() {
        let c = SimplicialComplex::from_compact(&["12", "23", "34", "45", "56", "16"]);
        let auts = automorphisms(&c);
        assert_eq!(auts.len(), 12);
        assert!(auts.iter().all(|m| verify_isomorphism(&c, &c, m)));
    }

    #[test]
    fn path_vs_cycle() {
        let p = SimplicialComplex::from_compact(&["12", "23", "34"]);
        let q = SimplicialComplex::from_compact(&["12", "23", "31", "4"]);
        assert!(is_isomorphic(&p, &q).is_none());
        let r = SimplicialComplex::from_compact(&["56", "67", "78"]);
        assert!(is_isomorphic(&p, &r).is_some());
    }
}
