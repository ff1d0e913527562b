use std::fmt;

/// A failed command and the exit status it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Bad input text, unknown names, bad flags.
    Usage(String),
    /// Well-formed input outside the domain of a map.
    Domain(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => write!(f, "error: {m}"),
            CliError::Io(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<simsun_core::Error> for CliError {
    fn from(e: simsun_core::Error) -> Self {
        use simsun_core::Error as E;
        match e {
            E::NotSimsun(_) | E::Domain(_) => CliError::Domain(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
