//! Integral simplicial homology and bistellar sphere recognition.

pub mod bistellar;
pub mod snf;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::{induced_sign, Simplex, SimplicialComplex};
use crate::error::{Error, Result};

pub use bistellar::{recognize_sphere_bistellar, SphereVerdict, DEFAULT_FLIP_BUDGET};
pub use snf::{smith_normal_form, IntegerMatrix};

/// Matrix of the boundary operator from k-faces (columns) to (k-1)-faces
/// (rows), both in canonical order.
pub fn boundary_matrix(c: &SimplicialComplex, k: usize) -> Result<IntegerMatrix> {
    let max = c.dim().unwrap_or(0);
    if k < 1 || k > max {
        return Err(Error::DimensionOutOfRange { k, max });
    }
    Ok(boundary_matrix_unchecked(c, k))
}

fn boundary_matrix_unchecked(c: &SimplicialComplex, k: usize) -> IntegerMatrix {
    let rows: Vec<&Simplex> = c.faces_of_dim(k - 1).collect();
    let cols: Vec<&Simplex> = c.faces_of_dim(k).collect();
    let row_of: HashMap<&Simplex, usize> = rows.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut m = IntegerMatrix::zeros(rows.len(), cols.len());
    for (j, s) in cols.iter().enumerate() {
        for i in 0..s.len() {
            let r = s.facet_without(i).expect("k >= 1");
            m.set(row_of[&r], j, BigInt::from(induced_sign(s, &r)));
        }
    }
    m
}

/// Betti numbers and torsion coefficients, non-reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologySummary {
    pub fn group(&self, k: usize) -> String {
        let b = self.betti.get(k).copied().unwrap_or(0);
        let mut parts = Vec::new();
        match b {
            0 => {}
            1 => parts.push("Z".to_string()),
            _ => parts.push(format!("Z^{b}")),
        }
        for t in self.torsion.get(k).into_iter().flatten() {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn euler(&self) -> i64 {
        self.betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    pub fn groups(&self) -> Vec<String> {
        (0..self.betti.len()).map(|k| self.group(k)).collect()
    }
}

impl fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.groups().join(", "))
    }
}

pub fn homology_groups(c: &SimplicialComplex) -> HomologySummary {
    let Some(d) = c.dim() else {
        return HomologySummary { betti: vec![], torsion: vec![] };
    };
    let fv = c.f_vector();
    // factors[k] = invariant factors of the k-th boundary map; k = 0 and d+1 are zero maps
    let mut factors: Vec<Vec<BigInt>> = vec![Vec::new(); d + 2];
    for (k, slot) in factors.iter_mut().enumerate().take(d + 1).skip(1) {
        *slot = smith_normal_form(&boundary_matrix_unchecked(c, k));
    }
    let mut betti = Vec::with_capacity(d + 1);
    let mut torsion = Vec::with_capacity(d + 1);
    for k in 0..=d {
        betti.push(fv.counts[k] - factors[k].len() - factors[k + 1].len());
        torsion.push(factors[k + 1].iter().filter(|x| !x.is_one()).cloned().collect());
    }
    let h = HomologySummary { betti, torsion };
    assert_eq!(h.euler(), fv.euler, "Euler-Poincare violated");
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_errors() {
        let c = SimplicialComplex::from_compact(&["123"]);
        assert!(boundary_matrix(&c, 0).is_err());
        assert!(boundary_matrix(&c, 3).is_err());
        let d1 = boundary_matrix(&c, 1).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
    }

    #[test]
    fn triangle_edges_cycle() {
        let c = SimplicialComplex::from_compact(&["12", "23", "13"]);
        let d1 = boundary_matrix(&c, 1).unwrap();
        for j in 0..3 {
            let s: BigInt = (0..3).map(|i| d1.get(i, j).clone()).sum();
            assert_eq!(s, BigInt::from(0));
        }
        assert_eq!(homology_groups(&c).to_string(), "(Z, Z)");
    }

    #[test]
    fn disjoint_points() {
        let c = SimplicialComplex::from_compact(&["1", "2"]);
        assert_eq!(homology_groups(&c).to_string(), "(Z^2)");
    }
}
