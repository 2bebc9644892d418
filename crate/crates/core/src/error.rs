use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("set size must be at least 1")]
    EmptySet,
    #[error("index {index} out of range 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("index {0} appears more than once")]
    RepeatedIndex(usize),
    #[error("malformed permutation {text:?}: {reason}")]
    Malformed { text: String, reason: String },
    #[error("image list is not a bijection on 1..={0}")]
    NotBijection(usize),
    #[error("permutations act on different set sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("group closure exceeded {cap} elements")]
    ClosureCap { cap: usize },
    #[error("{what} is not supported for n = {n}")]
    UnsupportedSize { what: &'static str, n: usize },
    #[error("group file line {line}: {message}")]
    GroupFile { line: usize, message: String },
    #[error("concentration sums to {total} but the set has {size} elements")]
    ConcentrationMismatch { total: usize, size: usize },
    #[error("concentration must name at least one color")]
    EmptyConcentration,
    #[error("weighted coefficient sum {sum} is not divisible by group order {order}")]
    InexactDivision { sum: String, order: usize },
    #[error("instance exceeds oracle guard rails: {0}")]
    GuardRail(String),
}
