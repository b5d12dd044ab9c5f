//! Library half of the CLI: output rendering (table / JSON / CSV) and the
//! verification report. The binary in `main.rs` is a thin argument layer
//! over these, and the acceptance tests drive them directly.

pub mod render;
pub mod report;

/// Failures split by exit code: usage problems exit 1, detected mathematical
/// inconsistencies exit 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Inconsistency(String),
}

impl From<cyclotomy::Error> for CliError {
    fn from(err: cyclotomy::Error) -> Self {
        use cyclotomy::Error::*;
        let msg = err.to_string();
        match err {
            NonIntegerAccumulation { .. }
            | NotDivisibleByOrderSquared { .. }
            | NegativeEntry { .. }
            | CensusMismatch { .. }
            | OrderMismatch { .. }
            | InconsistentParameters { .. }
            | NotAnInteger => CliError::Inconsistency(msg),
            _ => CliError::Usage(msg),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Inconsistency(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Parse a comma-separated list of unsigned coefficients, e.g. `1,1,1`.
pub fn parse_u64_list(text: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid coefficient `{part}`"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_lists() {
        assert_eq!(parse_u64_list("1,0,1").unwrap(), vec![1, 0, 1]);
        assert_eq!(parse_u64_list("3").unwrap(), vec![3]);
        assert!(parse_u64_list("1,x").is_err());
    }

    #[test]
    fn error_mapping_drives_exit_codes() {
        // parameter problems exit 1
        assert!(matches!(
            CliError::from(cyclotomy::Error::NotPrime { p: 4 }),
            CliError::Usage(_)
        ));
        assert!(matches!(
            CliError::from(cyclotomy::Error::NotAGenerator),
            CliError::Usage(_)
        ));
        // detected mathematical inconsistencies exit 2
        assert!(matches!(
            CliError::from(cyclotomy::Error::NotDivisibleByOrderSquared { a: 0, b: 1 }),
            CliError::Inconsistency(_)
        ));
        assert!(matches!(
            CliError::from(cyclotomy::Error::CensusMismatch { expected: 5 }),
            CliError::Inconsistency(_)
        ));
    }
}
