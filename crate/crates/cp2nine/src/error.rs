use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse label `{0}`: {1}")]
    LabelParse(String, &'static str),
    #[error("derived label needs at least two distinct children, got {0}")]
    BadDerived(String),
    #[error("malformed simplex: {0}")]
    MalformedSimplex(String),
    #[error("empty facet list")]
    EmptyFacetList,
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("complex is not pure: {0}")]
    NotPure(String),
    #[error("label collision on {0}")]
    LabelCollision(String),
    #[error("not a pseudomanifold: ridge {0} lies in {1} facets")]
    NotPseudomanifold(String, usize),
    #[error("not a closed pseudomanifold: {0}")]
    NotClosed(String),
    #[error("not a closed surface: {0}")]
    NotASurface(String),
    #[error("dimension {k} out of range 1..={max}")]
    DimensionOutOfRange { k: usize, max: usize },
    #[error("label {0} is outside the permutation support")]
    OutsideSupport(String),
    #[error("bad permutation: {0}")]
    BadPermutation(String),
    #[error("permutation is not an involution on the vertex set")]
    NotInvolution,
    #[error("complex is not invariant under the permutation")]
    NotInvariant,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("surface enumeration refused for {0} vertices (limit 7)")]
    EnumerationTooLarge(usize),
    #[error("coordinates must sum to zero (sum = {0})")]
    NonzeroSum(String),
    #[error("ambiguous lattice lift for triangle {0}")]
    AmbiguousLift(String),
    #[error("point is not in the domain: {0}")]
    OutsideDomain(String),
    #[error("bad barycentric coordinates: {0}")]
    BadBarycentric(String),
    #[error("bad subdivision: {0}")]
    BadSubdivision(String),
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
