use alloc::string::String;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("vertex {0} repeated within an edge")]
    RepeatedVertex(u32),
    #[error("edge has {0} distinct vertices, at least 2 are required")]
    EdgeTooSmall(usize),
    #[error("expected a {expected}-uniform hypergraph")]
    NotUniform { expected: usize },
    #[error("hypergraph is not uniform")]
    NonUniform,
    #[error("color {color} out of range for {k} colors")]
    ColorOutOfRange { color: u32, k: u32 },
    #[error("expected {expected} colors, got {got}")]
    WrongColorCount { expected: u32, got: u32 },
    #[error("coloring has {got} entries, expected {expected}")]
    ColoringLength { expected: usize, got: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix has a nonzero diagonal entry at {0}")]
    NonZeroDiagonal(usize),
    #[error("matrix has dimension 0")]
    EmptyMatrix,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("the zero matrix has no defined bound")]
    ZeroMatrix,
    #[error("graph has no edges")]
    Edgeless,
    #[error("zero vector")]
    ZeroVector,
    #[error("eigensolver did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("size {size} exceeds the configured cap of {cap}")]
    CapExceeded { size: u64, cap: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, Error>;
