use alloc::string::String;
use core::fmt;

/// Errors produced by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed polynomial text; `position` is a byte offset.
    Syntax { position: usize, message: String },
    /// A variable outside the ambient ring.
    UnknownVariable { position: usize, name: String },
    /// Operands live over different coefficient fields.
    FieldMismatch,
    /// Operands live in different polynomial rings.
    AmbientMismatch,
    /// The requested modulus is not a prime (or is out of the supported range).
    NotPrime(u64),
    /// Division by zero in a coefficient field.
    DivisionByZero,
    /// An input that must be homogeneous is not.
    NotHomogeneous,
    /// An input that must be nonzero is zero.
    ZeroElement,
    /// Module vectors of different shape.
    ShapeMismatch,
    /// A configured computational limit was hit.
    ResourceExhausted { what: &'static str, limit: usize },
    /// The ideal is not primary to the irrelevant ideal, or the relation
    /// module does not minimalize to a free basis of the expected rank.
    NotPrimary,
    /// The vector passed to `module_coordinates` is not a relation.
    NotARelation,
    /// The supplied syzygy columns do not form a free basis.
    BasisNotFree,
    /// The plane curve is singular.
    SingularCurve,
    /// No linear coordinate change made the defining form monic in `z`.
    NoMonicCoordinate,
    /// The relation module is not known to split (a generator involves `z`).
    SplittingNotEstablished,
    /// No power of `x` or `y` up to the cap lies in the ideal.
    DenominatorCapExceeded { cap: u32 },
    /// Invalid degree data for the bound formulas.
    InvalidDegreeData(String),
    /// A bound needs splitting twists that were not supplied.
    MissingTwists,
    /// A bound formula is stated for a different number of generators.
    WrongGeneratorCount { expected: usize, found: usize },
    /// A bound needs a structural flag (or characteristic) that is not set.
    PreconditionMissing(&'static str),
    /// Index outside the allowed range.
    OutOfRange { index: i64, min: i64, max: i64 },
    /// An empty degree range.
    EmptyRange,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax { position, message } => {
                write!(f, "syntax error at position {position}: {message}")
            }
            Error::UnknownVariable { position, name } => {
                write!(f, "unknown variable `{name}` at position {position}")
            }
            Error::FieldMismatch => f.write_str("operands are over different fields"),
            Error::AmbientMismatch => f.write_str("operands are in different polynomial rings"),
            Error::NotPrime(p) => write!(f, "{p} is not a supported prime modulus"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::NotHomogeneous => f.write_str("element is not homogeneous"),
            Error::ZeroElement => f.write_str("element is zero"),
            Error::ShapeMismatch => f.write_str("module shapes do not match"),
            Error::ResourceExhausted { what, limit } => {
                write!(f, "resource exhausted: {what} exceeded limit {limit}")
            }
            Error::NotPrimary => f.write_str("ideal is not primary to the irrelevant ideal"),
            Error::NotARelation => f.write_str("vector is not a relation of the generators"),
            Error::BasisNotFree => f.write_str("syzygy columns do not form a free basis"),
            Error::SingularCurve => f.write_str("singular curve"),
            Error::NoMonicCoordinate => f.write_str("no monic coordinate found"),
            Error::SplittingNotEstablished => f.write_str("splitting not established"),
            Error::DenominatorCapExceeded { cap } => {
                write!(f, "no power of x or y up to {cap} lies in the ideal")
            }
            Error::InvalidDegreeData(msg) => write!(f, "invalid degree data: {msg}"),
            Error::MissingTwists => f.write_str("splitting twists are required"),
            Error::WrongGeneratorCount { expected, found } => {
                write!(f, "expected {expected} generators, found {found}")
            }
            Error::PreconditionMissing(what) => write!(f, "precondition missing: {what}"),
            Error::OutOfRange { index, min, max } => {
                write!(f, "index {index} outside [{min}, {max}]")
            }
            Error::EmptyRange => f.write_str("empty degree range"),
        }
    }
}

impl core::error::Error for Error {}
