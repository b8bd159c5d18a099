use std::fmt;

use selfdual_core::Error as CoreError;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const OTHER: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const NOT_SELFDUAL: i32 = 3;
    pub const OVERFLOW: i32 = 4;
    pub const RESOURCE_LIMIT: i32 = 5;
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed user input: weights, flags, environment or config values.
    Parse(String),
    Core(CoreError),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => exit::PARSE,
            CliError::Io(_) => exit::OTHER,
            CliError::Core(e) => match e {
                CoreError::NotSelfdual { .. } => exit::NOT_SELFDUAL,
                CoreError::Overflow(_) => exit::OVERFLOW,
                CoreError::ResourceLimit { .. } => exit::RESOURCE_LIMIT,
                CoreError::InvariantViolation(_) => exit::OTHER,
                CoreError::InvalidRank { .. }
                | CoreError::IndexOutOfRange { .. }
                | CoreError::RankMismatch { .. }
                | CoreError::NegativeCoordinate { .. }
                | CoreError::InvalidArgument(_) => exit::PARSE,
            },
        }
    }

    /// Stable machine-readable tag printed with every diagnostic.
    pub fn code(&self) -> &'static str {
        match self.exit_code() {
            exit::PARSE => "parse",
            exit::NOT_SELFDUAL => "not_selfdual",
            exit::OVERFLOW => "overflow",
            exit::RESOURCE_LIMIT => "resource_limit",
            _ => match self {
                CliError::Io(_) => "io",
                _ => "internal",
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Io(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;
