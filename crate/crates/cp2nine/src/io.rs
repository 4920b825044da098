//! Facet-list text format: one facet per line, labels separated by single
//! spaces, `#` starts a comment line.

use std::path::Path;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::label::Label;

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        let labels = line
            .split_whitespace()
            .map(|t| t.parse::<Label>().map_err(|e| err(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        facets.push(Simplex::new(labels).map_err(|e| err(e.to_string()))?);
    }
    SimplicialComplex::from_facets(facets)
}

pub fn format_complex(c: &SimplicialComplex) -> String {
    c.to_string()
}

pub fn read_complex(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    parse_complex(&std::fs::read_to_string(path)?)
}

pub fn write_complex(c: &SimplicialComplex, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, format_complex(c))?;
    Ok(())
}
