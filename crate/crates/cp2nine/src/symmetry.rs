//! Permutations of labels, orbits, automorphism groups and fixed sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::iso;
use crate::label::Label;

/// A bijection on an explicit finite support of labels. Derived labels whose
/// children are all handled map through their children.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation {
    map: BTreeMap<Label, Label>,
}

impl Permutation {
    pub fn identity(support: impl IntoIterator<Item = Label>) -> Self {
        Self { map: support.into_iter().map(|l| (l.clone(), l)).collect() }
    }

    pub fn from_map(map: BTreeMap<Label, Label>) -> Result<Self> {
        let img: BTreeSet<&Label> = map.values().collect();
        let dom: BTreeSet<&Label> = map.keys().collect();
        if img != dom {
            return Err(Error::BadPermutation("not a bijection of its support".into()));
        }
        Ok(Self { map })
    }

    /// Cycle form over original labels 1..=`degree` (or the largest label
    /// mentioned when `degree` is `None`). Cycles written without spaces use
    /// one character per label, e.g. `(147)(258)(369)`; with spaces, labels
    /// are separated: `(1 10 4)`.
    pub fn parse_cycles(s: &str, degree: Option<u32>) -> Result<Self> {
        let bad = |m: &str| Error::BadPermutation(format!("{s}: {m}"));
        let mut cycles: Vec<Vec<Label>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad("expected `(`"));
            }
            let close = rest.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let body = rest[1..close].trim();
            let cyc: Vec<Label> = if body.contains(char::is_whitespace) {
                body.split_whitespace().map(|t| t.parse()).collect::<Result<_>>()?
            } else {
                Label::parse_run(body)?
            };
            cycles.push(cyc);
            rest = rest[close + 1..].trim_start();
        }
        let mut top = degree.unwrap_or(0);
        let mut map: BTreeMap<Label, Label> = BTreeMap::new();
        for cyc in &cycles {
            for l in cyc {
                if let Label::Original(n) = l {
                    top = top.max(*n);
                }
            }
        }
        if let Some(d) = degree {
            if top > d {
                return Err(bad("label exceeds degree"));
            }
        }
        for n in 1..=top {
            map.insert(Label::Original(n), Label::Original(n));
        }
        let mut seen = BTreeSet::new();
        for cyc in &cycles {
            for (i, l) in cyc.iter().enumerate() {
                if !seen.insert(l.clone()) {
                    return Err(bad("label repeated"));
                }
                map.insert(l.clone(), cyc[(i + 1) % cyc.len()].clone());
            }
        }
        Self::from_map(map)
    }

    pub fn support(&self) -> impl Iterator<Item = &Label> {
        self.map.keys()
    }

    pub fn mapping(&self) -> &BTreeMap<Label, Label> {
        &self.map
    }

    pub fn apply_label(&self, l: &Label) -> Result<Label> {
        if let Some(x) = self.map.get(l) {
            return Ok(x.clone());
        }
        match l {
            Label::Original(_) => Err(Error::OutsideSupport(l.to_string())),
            Label::Derived(c) => {
                let kids = c.iter().map(|k| self.apply_label(k)).collect::<Result<Vec<_>>>()?;
                Label::derived(kids)
            }
        }
    }

    pub fn apply_simplex(&self, s: &Simplex) -> Result<Simplex> {
        Simplex::new(s.vertices().iter().map(|l| self.apply_label(l)).collect::<Result<Vec<_>>>()?)
    }

    pub fn apply_complex(&self, c: &SimplicialComplex) -> Result<SimplicialComplex> {
        c.relabel(|l| self.apply_label(l))
    }

    /// `self ∘ other` (apply `other` first). Supports must agree.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if !self.map.keys().eq(other.map.keys()) {
            return Err(Error::BadPermutation("composition of permutations with different supports".into()));
        }
        let map = other.map.iter().map(|(k, v)| (k.clone(), self.map[v].clone())).collect();
        Ok(Permutation { map })
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { map: self.map.iter().map(|(k, v)| (v.clone(), k.clone())).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(k, v)| k == v)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut n = 1;
        while !p.is_identity() {
            p = self.compose(&p).expect("same support");
            n += 1;
        }
        n
    }

    pub fn cycles(&self) -> Vec<Vec<Label>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for k in self.map.keys() {
            if seen.contains(k) {
                continue;
            }
            let mut cyc = vec![k.clone()];
            seen.insert(k.clone());
            let mut x = &self.map[k];
            while x != k {
                seen.insert(x.clone());
                cyc.push(x.clone());
                x = &self.map[x];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let compact = self.map.keys().all(|l| l.to_string().len() == 1 || !l.is_original());
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|l| l.to_string()).collect();
            write!(f, "({})", parts.join(if compact { "" } else { " " }))?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse_cycles(s, None)
    }
}

pub fn apply_permutation(c: &SimplicialComplex, p: &Permutation) -> Result<SimplicialComplex> {
    p.apply_complex(c)
}

/// Smallest set containing `seeds` and closed under the generators.
pub fn orbit_closure(seeds: &[Simplex], generators: &[Permutation]) -> Result<BTreeSet<Simplex>> {
    let mut out: BTreeSet<Simplex> = seeds.iter().cloned().collect();
    let mut frontier: Vec<Simplex> = out.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for g in generators {
            let t = g.apply_simplex(&s)?;
            if out.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    Ok(out)
}

/// Every vertex bijection preserving the facet set, sorted.
pub fn automorphism_group(c: &SimplicialComplex) -> Vec<Permutation> {
    iso::automorphisms(c).into_iter().map(|m| Permutation { map: m }).collect()
}

/// Fixed point set of the linear extension of the involution `t` on `|c|`,
/// with midpoints of swapped pairs written as derived labels.
pub fn geometric_fixed_set(c: &SimplicialComplex, t: &Permutation) -> Result<SimplicialComplex> {
    for v in c.vertices() {
        let w = t.apply_label(v)?;
        if t.apply_label(&w)? != *v {
            return Err(Error::NotInvolution);
        }
    }
    if t.apply_complex(c)?.facet_set() != c.facet_set() {
        return Err(Error::NotInvariant);
    }
    let mut pieces: BTreeSet<Simplex> = BTreeSet::new();
    for s in c.faces() {
        if t.apply_simplex(s)? != *s {
            continue;
        }
        let mut verts = Vec::new();
        for v in s.vertices() {
            let w = t.apply_label(v)?;
            if w == *v {
                verts.push(v.clone());
            } else if *v < w {
                verts.push(Label::derived([v.clone(), w])?);
            }
        }
        pieces.insert(Simplex::new(verts)?);
    }
    if pieces.is_empty() {
        return Ok(SimplicialComplex::empty());
    }
    SimplicialComplex::from_facets(pieces)
}
