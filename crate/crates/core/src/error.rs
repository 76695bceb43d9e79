use thiserror::Error;

/// Errors raised while reading inputs or building algebras and modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("field modulus {0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("relation on line {line}: paths are not parallel")]
    NotParallel { line: usize },
    #[error("relation on line {line}: path of length {len} < 2")]
    ShortPath { line: usize, len: usize },
    #[error("relation on line {line}: all coefficients vanish")]
    ZeroRelation { line: usize },
    #[error("algebra is not verifiably finite-dimensional with paths up to length {cap}")]
    NotFiniteAtCap { cap: usize },
    #[error("inadmissible Kupisch series {0:?}")]
    InadmissibleKupisch(Vec<usize>),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("module violates relation {0}")]
    RelationViolated(String),
    #[error("projective module at vertex {0} is injective; no almost split sequence starts there")]
    ProjectiveInjective(usize),
    #[error("Ext^1 vanishes, so no almost split sequence has these end terms")]
    ExtensionVanishes,
    #[error("{0}")]
    Corpus(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
