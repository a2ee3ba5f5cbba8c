use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("set size must be at least 1")]
    EmptySet,
    #[error("no image given for pair ({0},{1})")]
    MissingPair(usize, usize),
    #[error("pair ({0},{1}) given more than once")]
    DuplicatePair(usize, usize),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("map is not a bijection of 1..={0}")]
    NotABijection(usize),
    #[error("search space too large: {0}")]
    SizeTooLarge(String),
    #[error("quadratic set is not idempotent")]
    NotIdempotent,
    #[error("quadratic set is not left nondegenerate")]
    NotLeftNondegenerate,
    #[error("quadratic set is not braided")]
    NotBraided,
    #[error("relation {0} is not homogeneous")]
    NonHomogeneousInput(usize),
    #[error("relation {0} is not homogeneous of degree 2")]
    NonQuadraticInput(usize),
    #[error("Groebner basis is not binomial")]
    NotBinomial,
    #[error("Groebner basis only verified through degree {have}, need {need}")]
    InsufficientDegree { have: usize, need: usize },
    #[error("normal form of a generator product does not factor into degree-{0} normal words")]
    NormalFormNotFactorable(usize),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
