use thiserror::Error;

/// Errors raised by the combinatorial operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<usize>),

    #[error("weight {0:?} is not a partition")]
    NonPartitionWeight(Vec<usize>),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { outer: Vec<usize>, inner: Vec<usize> },

    #[error("letters and colors must be positive")]
    ZeroLetter,

    #[error("duplicate colored letter {letter}_{color}")]
    DuplicateLetter { letter: usize, color: usize },

    #[error("sector {0} is not in decreasing prismatic order")]
    SectorOrder(usize),

    #[error("row {0} is not in increasing prismatic order")]
    RowOrder(usize),

    #[error("colors of letter {0} are not a contiguous range")]
    ColorGap(usize),

    #[error("shape {shape:?} does not match {len} letters")]
    ShapeLength { shape: Vec<usize>, len: usize },

    #[error("row {0} of the filling has the wrong number of entries")]
    RowLength(usize),

    #[error("filling is not a tabloid (row {0} decreases)")]
    NotTabloid(usize),

    #[error("filling is not a reverse plane partition")]
    NotReversePlanePartition,

    #[error("operation needs a straight partition shape")]
    SkewUnsupported,

    #[error("filling has {0} inversion triples")]
    HasInversions(usize),

    #[error("tensor component {0} is not weakly increasing")]
    UnsortedComponent(usize),

    #[error("word length {word} does not match shape size {shape}")]
    LengthMismatch { word: usize, shape: usize },

    #[error("descent position {0} is out of range")]
    DescentOutOfRange(usize),

    #[error("expansion is not symmetric in its variables")]
    NotSymmetric,

    #[error("nonzero residual after Schur elimination")]
    NonzeroResidual,

    #[error("enumeration size {requested} exceeds the cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
