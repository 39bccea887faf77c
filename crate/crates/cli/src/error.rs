use std::fmt;

use tightclosure_core::Error;

/// A failure together with the exit status it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or invalid input (exit 2).
    Input(String),
    /// A mathematical precondition does not hold (exit 3).
    Precondition(String),
    /// A configured limit was hit (exit 4).
    Resource(String),
    /// The engine failed an internal consistency check (exit 1).
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Resource(_) => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Internal(_) => "internal",
            CliError::Input(_) => "input",
            CliError::Precondition(_) => "precondition",
            CliError::Resource(_) => "resource",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Precondition(m) | CliError::Resource(m) | CliError::Internal(m) => m,
        }
    }

    /// Wraps an engine error, prefixing the input location it came from.
    pub fn at(context: &str, e: Error) -> CliError {
        let mut out = CliError::from(e);
        let msg = match &mut out {
            CliError::Input(m) | CliError::Precondition(m) | CliError::Resource(m) | CliError::Internal(m) => m,
        };
        *msg = format!("{context}: {msg}");
        out
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.message())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::SingularCurve => CliError::Precondition(format!(
                "{msg}; decisions need a smooth curve, the `bounds` subcommand still applies"
            )),
            Error::NoMonicCoordinate | Error::PreconditionMissing(_) => CliError::Precondition(msg),
            Error::ResourceExhausted { .. } | Error::DenominatorCapExceeded { .. } => CliError::Resource(msg),
            Error::NotARelation | Error::BasisNotFree | Error::ShapeMismatch | Error::AmbientMismatch => {
                CliError::Internal(msg)
            }
            _ => CliError::Input(msg),
        }
    }
}
