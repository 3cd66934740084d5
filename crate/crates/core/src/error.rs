use thiserror::Error;

/// Errors raised by the exact computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported angle expression: {0}")]
    UnsupportedExpr(String),
    #[error("cosine {0} is not the cosine of any supported angle")]
    NotIdentified(String),
    #[error("value is not representable over Q[tau]: {0}")]
    NotRepresentable(String),
    #[error("degenerate (flat) tetrahedron")]
    Degenerate,
    #[error("naming is ambiguous: {0} bijections match the reference invariants")]
    AmbiguousNaming(usize),
    #[error("no bijection matches the reference invariants")]
    NoMatch,
    #[error("expected {expected} tetrahedra, got {found}")]
    CatalogIncomplete { expected: usize, found: usize },
    #[error("under-determined system: {constraints} constraint columns for {tiles} tiles")]
    UnderDetermined { constraints: usize, tiles: usize },
    #[error("over-determined system: {constraints} constraint columns for {tiles} tiles")]
    OverDetermined { constraints: usize, tiles: usize },
    #[error("constraint matrix is singular")]
    SingularSystem,
    #[error("Galois splitting requires the rationality hypothesis on the inflation matrix")]
    RationalityNotAssumed,
    #[error("eigen-relation {0} does not hold over Q[tau]")]
    EigenRelationFailed(String),
    #[error("exhaustive search for k = {k} exceeds the supported bound k <= {max}")]
    SearchTooLarge { k: usize, max: usize },
    #[error("packing map columns are linearly dependent (rank {rank} < {cols})")]
    NotInjective { rank: usize, cols: usize },
    #[error("matrix mismatch at ({row}, {col}): expected {expected}, found {found}")]
    MatrixMismatch {
        row: usize,
        col: usize,
        expected: String,
        found: String,
    },
    #[error("invalid CRS pair <{p}>_{d}: {reason}")]
    InvalidPair { p: u64, d: u64, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
