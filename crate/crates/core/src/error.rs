use alloc::string::String;

/// Everything that can go wrong in this crate.
///
/// Certification failures (`Uncertified`, `LexCapTooSmall`,
/// `CircuitsTruncated`) are outcomes the caller is expected to surface rather
/// than bugs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomials or ideals live in different rings")]
    RingMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("modulus {0} is not a prime below 2^62")]
    InvalidModulus(u64),
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("polynomial `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("monomial of degree {found} where degree {expected} was required")]
    WrongDegree { expected: u32, found: u32 },
    #[error("circuit enumeration in degree {degree} truncated at size cap {size_cap}")]
    CircuitsTruncated { degree: u32, size_cap: usize },
    #[error("Hilbert data violates Macaulay's bound in degree {degree}")]
    MacaulayViolation { degree: u32 },
    #[error("lex-segment cap {cap} too small: a generator appears in degree {last_generator_degree}; increase cap")]
    LexCapTooSmall { cap: u32, last_generator_degree: u32 },
    #[error("generic circuits set not certified after {rounds} rounds")]
    Uncertified { rounds: u32 },
    #[error("could not sample an invertible matrix after {attempts} attempts")]
    ResampleExhausted { attempts: u32 },
    #[error("fan enumeration inconsistency: {0}")]
    FanInconsistent(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = core::result::Result<T, Error>;
