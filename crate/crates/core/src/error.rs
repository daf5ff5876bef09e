use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid integer literal {0:?}")]
    Integer(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("malformed scalar {0:?}")]
    Scalar(String),
    #[error("malformed json: {0}")]
    Json(String),
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("duplicate entry ({0}, {1})")]
    DuplicateEntry(usize, usize),
    #[error("sector {0:?} too large to enumerate")]
    SectorTooLarge([u32; 4]),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("count function {function} is undefined on monomial {monomial}")]
    DiagonalDomain { function: String, monomial: String },
    #[error("operator shifts family counts inconsistently: {0:?} vs {1:?}")]
    InconsistentShift([i32; 4], [i32; 4]),
    #[error("operator maps sector {domain:?} below zero quanta")]
    NegativeSector { domain: [u32; 4] },
    #[error("matrix dimensions do not match: {0}")]
    Shape(String),
    #[error("matrix pair is not hermitian at entry ({row}, {col})")]
    NonHermitian { row: usize, col: usize },
    #[error("gram matrix is not positive definite (pivot {0})")]
    NotPositiveDefinite(usize),
    #[error("characteristic polynomial has {real} real roots but degree {degree}")]
    NonRealSpectrum { real: usize, degree: usize },
    #[error("invalid generator index pair ({0}, {1})")]
    InvalidIndex(usize, usize),
    #[error("interior margin {got} below the required {required}")]
    MarginTooSmall { required: u32, got: u32 },
    #[error("negative multiplicity at weight ({two_i3}, {three_y}) during peel-off")]
    NegativeMultiplicity { two_i3: i32, three_y: i32 },
    #[error("highest remaining weight ({two_i3}, {three_y}) is not dominant")]
    NonDominant { two_i3: i32, three_y: i32 },
    #[error("no term with index {0}")]
    NoSuchTerm(usize),
    #[error("state is not an eigenvector of {0}")]
    NotEigenvector(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
