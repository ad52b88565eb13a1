use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported exterior degree {degree} (at most 4)")]
    UnsupportedDegree { degree: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("cannot contract a degree-{vector} multivector into a degree-{form} form")]
    DegreeMismatch { form: usize, vector: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("characteristic matrix is {rows}x{cols}, expected {m}x{k0}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        m: usize,
        k0: usize,
    },

    #[error("row L{row} of the characteristic matrix is zero: center intersects derived ideal")]
    ZeroRow { row: usize },

    #[error("characteristic matrix is not injective (rank {rank} < k0 = {k0})")]
    NotInjective { rank: usize, k0: usize },

    #[error("k0 = {k0} exceeds m = {m}")]
    TooManyGenerators { k0: usize, m: usize },

    #[error("derived ideal is empty (m = 0): the algebra is abelian")]
    Abelian,

    #[error("not a cocycle: nonzero residual on pair ({x}, {y})")]
    NotCocycle { x: String, y: String },

    #[error("algebra is degenerate; {operation} is stated for nondegenerate algebras only")]
    Degenerate { operation: &'static str },

    #[error("degeneracy criteria disagree for this characteristic matrix: {detail}")]
    Anomalous { detail: String },

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("unknown basis name `{0}`")]
    UnknownBasisName(String),

    #[error("unknown verification case `{0}`")]
    UnknownCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;
