//! Bistellar moves on closed combinatorial manifolds.
//!
//! A move is a pair (A, B) of disjoint vertex sets with |A| + |B| = d + 2
//! such that A is a face whose link is the boundary of the simplex B and B
//! is not a face. It replaces A * ∂B by ∂A * B. Moves with |B| = 1 insert a
//! vertex; recognition never uses them.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::label::Label;

pub const DEFAULT_FLIP_BUDGET: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SphereVerdict {
    Sphere { dim: usize, flips: u64 },
    Unknown { flips: u64, facets_left: usize },
}

impl SphereVerdict {
    pub fn is_sphere(&self) -> bool {
        matches!(self, SphereVerdict::Sphere { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Move {
    pub a: u128,
    pub b: u128,
}

impl Move {
    /// Change in the number of facets.
    pub fn delta(&self) -> i32 {
        self.a.count_ones() as i32 - self.b.count_ones() as i32
    }
}

/// Facets as bitmasks over an indexed label table.
#[derive(Clone, Debug)]
pub struct FlipComplex {
    labels: Vec<Label>,
    facets: Vec<u128>,
    dim: usize,
}

fn subsets(mask: u128) -> impl Iterator<Item = u128> {
    // all non-empty subsets of `mask`
    let bits: Vec<u32> = (0..128).filter(|i| mask >> i & 1 == 1).collect();
    let n = bits.len();
    (1u64..(1 << n)).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).fold(0u128, |acc, i| acc | 1 << bits[i]))
}

impl FlipComplex {
    pub fn new(c: &SimplicialComplex) -> Result<FlipComplex> {
        if !c.is_closed_pseudomanifold() {
            return Err(Error::NotClosed("every ridge must lie in exactly two facets".into()));
        }
        let labels: Vec<Label> = c.vertices().iter().cloned().collect();
        if labels.len() > 100 {
            return Err(Error::NotClosed("too many vertices for flip search".into()));
        }
        let idx: BTreeMap<&Label, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let facets = c.facets().iter().map(|f| f.vertices().iter().fold(0u128, |m, l| m | 1 << idx[l])).collect();
        Ok(FlipComplex { labels, facets, dim: c.dim().expect("non-empty") })
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.facets.iter().fold(0u128, |m, f| m | f).count_ones() as usize
    }

    pub fn is_simplex_boundary(&self) -> bool {
        self.facets.len() == self.dim + 2 && self.vertex_count() == self.dim + 2
    }

    fn is_face(&self, s: u128) -> bool {
        self.facets.iter().any(|f| f & s == s)
    }

    /// All available moves; vertex insertions only when `insert` is set
    /// (their B is a fresh vertex, encoded as `b = 0`).
    pub fn moves(&self, insert: bool) -> Vec<Move> {
        let mut faces: HashSet<u128> = HashSet::new();
        for &f in &self.facets {
            faces.extend(subsets(f));
        }
        let mut faces: Vec<u128> = faces.into_iter().collect();
        faces.sort_unstable();
        let mut out = Vec::new();
        for a in faces {
            let na = a.count_ones() as usize;
            if na == self.dim + 1 {
                if insert {
                    out.push(Move { a, b: 0 });
                }
                continue;
            }
            let nb = self.dim + 2 - na;
            let link: Vec<u128> = self.facets.iter().filter(|&&f| f & a == a).map(|f| f & !a).collect();
            if link.len() != nb {
                continue;
            }
            let b = link.iter().fold(0u128, |m, f| m | f);
            if b.count_ones() as usize != nb {
                continue;
            }
            // distinct (nb-1)-subsets of an nb-set, nb of them: exactly ∂B
            if self.is_face(b) {
                continue;
            }
            out.push(Move { a, b });
        }
        out
    }

    fn fresh_label(&self) -> Label {
        let top = self
            .labels
            .iter()
            .filter_map(|l| match l {
                Label::Original(n) => Some(*n),
                _ => None,
            })
            .max()
            .unwrap_or(0);
        Label::Original(top + 1)
    }

    pub fn apply(&mut self, mv: Move) {
        let b = if mv.b == 0 {
            // fresh vertex
            let l = self.fresh_label();
            self.labels.push(l);
            assert!(self.labels.len() <= 128, "label table overflow");
            1u128 << (self.labels.len() - 1)
        } else {
            mv.b
        };
        self.facets.retain(|f| f & mv.a != mv.a);
        let mut rest = mv.a;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            self.facets.push((mv.a & !bit) | b);
        }
    }

    pub fn to_complex(&self) -> SimplicialComplex {
        let facets = self.facets.iter().map(|&f| {
            Simplex::new((0..self.labels.len()).filter(|i| f >> i & 1 == 1).map(|i| self.labels[i].clone()))
                .expect("non-empty facet")
        });
        SimplicialComplex::from_facets(facets).expect("non-empty")
    }
}

/// Heuristic sphere recognition: descend on the facet count with random
/// tie-breaking, taking random non-decreasing moves when stuck.
pub fn recognize_sphere_bistellar(c: &SimplicialComplex, flip_budget: u64, rng_seed: u64) -> Result<SphereVerdict> {
    let mut fc = FlipComplex::new(c)?;
    let dim = fc.dim;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut flips = 0u64;
    while !fc.is_simplex_boundary() {
        if flips >= flip_budget {
            return Ok(SphereVerdict::Unknown { flips, facets_left: fc.facet_count() });
        }
        let moves = fc.moves(false);
        let Some(best) = moves.iter().map(|m| m.delta()).min() else {
            return Ok(SphereVerdict::Unknown { flips, facets_left: fc.facet_count() });
        };
        let pick = if best < 0 {
            let cands: Vec<&Move> = moves.iter().filter(|m| m.delta() == best).collect();
            **cands.choose(&mut rng).expect("non-empty")
        } else {
            // plateau: prefer zero-change moves, else a random small increase
            let level = if moves.iter().any(|m| m.delta() == 0) && rng.gen_bool(0.8) { 0 } else { best.max(1) };
            let mut cands: Vec<&Move> = moves.iter().filter(|m| m.delta() == level).collect();
            if cands.is_empty() {
                cands = moves.iter().collect();
            }
            **cands.choose(&mut rng).expect("non-empty")
        };
        fc.apply(pick);
        flips += 1;
    }
    Ok(SphereVerdict::Sphere { dim, flips })
}

/// `n` uniformly random moves (vertex insertions included).
pub fn random_flips(c: &SimplicialComplex, n: usize, rng_seed: u64) -> Result<SimplicialComplex> {
    let mut fc = FlipComplex::new(c)?;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    for _ in 0..n {
        let moves = fc.moves(fc.labels.len() < 120);
        let Some(&m) = moves.choose(&mut rng) else { break };
        fc.apply(m);
    }
    Ok(fc.to_complex())
}
