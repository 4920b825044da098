//! Relative subdivision: each facet is cut along the barycentric subdivision
//! of its distinguished face, joined with the opposite face.

use std::collections::BTreeSet;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::label::Label;

pub fn relative_rank(s: &Simplex, distinguished: &BTreeSet<Label>) -> usize {
    s.vertices().iter().filter(|l| distinguished.contains(l)).count()
}

/// Barycenter label of a set of labels (the label itself for a singleton).
pub fn barycenter(vs: &[Label]) -> Result<Label> {
    match vs {
        [] => Err(Error::MalformedSimplex("barycenter of nothing".into())),
        [v] => Ok(v.clone()),
        _ => Label::derived(vs.iter().cloned()),
    }
}

/// Maximal chains of faces of `f`, as simplices of barycenters. There are
/// |f|! of them, in lexicographic order of the vertex orderings.
pub fn barycentric_chains(f: &[Label]) -> Result<Vec<Vec<Label>>> {
    let mut out = Vec::new();
    let mut perm: Vec<Label> = f.to_vec();
    perm.sort();
    permutations(&mut perm, 0, &mut |order| {
        let chain: Result<Vec<Label>> = (1..=order.len()).map(|k| barycenter(&order[..k])).collect();
        out.push(chain);
    });
    out.into_iter().collect()
}

fn permutations(v: &mut Vec<Label>, k: usize, f: &mut dyn FnMut(&[Label])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        // keep lexicographic order: rotate instead of swapping
        v[k..=i].rotate_right(1);
        permutations(v, k + 1, f);
        v[k..=i].rotate_left(1);
    }
}

/// Pieces of one facet: join of the chains of its distinguished face with
/// the opposite face. A facet of rank 0 or 1 is returned unchanged.
pub fn subdivide_facet(s: &Simplex, distinguished: &BTreeSet<Label>) -> Result<Vec<Simplex>> {
    let f: Vec<Label> = s.vertices().iter().filter(|l| distinguished.contains(l)).cloned().collect();
    if f.len() <= 1 {
        return Ok(vec![s.clone()]);
    }
    let rest: Vec<Label> = s.vertices().iter().filter(|l| !distinguished.contains(l)).cloned().collect();
    let mut out = Vec::new();
    for chain in barycentric_chains(&f)? {
        out.push(Simplex::new(chain.into_iter().chain(rest.iter().cloned()))?);
    }
    Ok(out)
}

pub fn relative_subdivide(c: &SimplicialComplex, distinguished: &BTreeSet<Label>) -> Result<SimplicialComplex> {
    if !c.is_pure() {
        return Err(Error::NotPure("relative subdivision needs a pure complex".into()));
    }
    if let Some(v) = distinguished.iter().find(|v| !c.vertices().contains(v)) {
        return Err(Error::NotAFace(v.to_string()));
    }
    let mut facets = Vec::new();
    for s in c.facets() {
        facets.extend(subdivide_facet(s, distinguished)?);
    }
    SimplicialComplex::from_facets(facets)
}

pub fn label_set(labels: &[u32]) -> BTreeSet<Label> {
    labels.iter().map(|&n| Label::Original(n)).collect()
}
