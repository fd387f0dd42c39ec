use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for {num_vars} variables")]
    IndexOutOfRange { index: usize, num_vars: usize },

    #[error("point has {got} coordinates, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("no substitution given for variable z{0}")]
    MissingAssignment(usize),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not holomorphic (contains conjugate variables)")]
    NotHolomorphic,

    #[error("polynomial is not bihomogeneous")]
    NotBihomogeneous,

    #[error("polynomial is neither real-valued nor purely imaginary-valued")]
    NotRealValued,

    #[error("polynomial is purely imaginary-valued; enable imaginary normalization to accept it")]
    ImaginaryValued,

    #[error("matrix is not Hermitian")]
    NotHermitian,

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("at least {required} variables required, got {got}")]
    TooFewVariables { required: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed leaf family: {0}")]
    MalformedFamily(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("document error: {0}")]
    Document(String),
}

/// A syntax error in polynomial text, with 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected {found}, expected {expected}")]
    UnexpectedToken { found: String, expected: String },
    #[error("exponent {0} exceeds the maximum of 65536")]
    ExponentOverflow(String),
    #[error("variable z{index} out of range for {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
