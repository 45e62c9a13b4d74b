//! Error type shared by every module.
//!
//! Variants split into two families matched by the binary's exit codes:
//! input/configuration problems (exit 2) and numeric/runtime failures
//! (exit 3).

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its admissible domain (non-positive rate,
    /// negative SNR in linear scale, probability outside `[0, 1]`, ...).
    #[error("invalid parameter {name}: {value} ({constraint})")]
    InvalidParameter {
        /// Parameter name as exposed on the API.
        name: &'static str,
        /// Offending value.
        value: f64,
        /// Constraint it violates.
        constraint: &'static str,
    },

    /// Copula arguments outside the unit square.
    #[error("copula argument outside [0,1]: ({a}, {b})")]
    CopulaDomain {
        /// First argument.
        a: f64,
        /// Second argument.
        b: f64,
    },

    /// Too few atoms to resolve a coupling.
    #[error("coupling needs at least {min} atoms, got {got}")]
    Resolution {
        /// Smallest accepted atom count.
        min: usize,
        /// Requested atom count.
        got: usize,
    },

    /// A request for zero items where at least one is needed.
    #[error("empty request: {0}")]
    EmptyRequest(&'static str),

    /// Monte Carlo sample budget below the accepted floor.
    #[error("sample size {got} below minimum {min}")]
    SampleSize {
        /// Smallest accepted sample count.
        min: u64,
        /// Requested sample count.
        got: u64,
    },

    /// Inconsistent or incomplete configuration of an operation.
    #[error("configuration error: {0}")]
    Config(String),

    /// A closed form was asked for a scenario it does not cover.
    #[error("scenario {0} has no closed form here; use the generic engine")]
    UnsupportedScenario(&'static str),

    /// Quadrature or root refinement failed to reach its tolerance.
    #[error("numeric failure in {context}: residual {residual:e}")]
    NumericFailure {
        /// Operation that failed.
        context: &'static str,
        /// Residual left when it gave up.
        residual: f64,
    },

    /// A regression fit has no identifiable slope (curve saturated or zero).
    #[error("diversity slope not identifiable: {0}")]
    NonIdentifiable(String),

    /// File I/O while writing sweep output.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the binary maps this error to.
    ///
    /// `2` for invalid input or configuration, `3` for numeric failures.
    #[must_use]
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter { .. }
            | Error::CopulaDomain { .. }
            | Error::Resolution { .. }
            | Error::EmptyRequest(_)
            | Error::SampleSize { .. }
            | Error::Config(_)
            | Error::UnsupportedScenario(_) => 2,
            Error::NumericFailure { .. } | Error::NonIdentifiable(_) | Error::Io(_) => 3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_split_input_and_numeric_families() {
        assert_eq!(
            Error::InvalidParameter {
                name: "rate_s",
                value: -1.0,
                constraint: "must be > 0"
            }
            .exit_code(),
            2
        );
        assert_eq!(Error::CopulaDomain { a: -0.1, b: 0.5 }.exit_code(), 2);
        assert_eq!(Error::Resolution { min: 100, got: 3 }.exit_code(), 2);
        assert_eq!(Error::EmptyRequest("samples").exit_code(), 2);
        assert_eq!(Error::SampleSize { min: 1000, got: 10 }.exit_code(), 2);
        assert_eq!(Error::Config("bad".into()).exit_code(), 2);
        assert_eq!(Error::UnsupportedScenario("alt-csit").exit_code(), 2);
        assert_eq!(
            Error::NumericFailure {
                context: "quadrature",
                residual: 1e-3
            }
            .exit_code(),
            3
        );
        assert_eq!(Error::NonIdentifiable("saturated".into()).exit_code(), 3);
        assert_eq!(
            Error::Io(std::io::Error::new(std::io::ErrorKind::Other, "x")).exit_code(),
            3
        );
    }

    #[test]
    fn messages_carry_the_offending_values() {
        let e = Error::Resolution { min: 100, got: 7 };
        let msg = e.to_string();
        assert!(msg.contains("100") && msg.contains('7'), "got: {msg}");
    }
}
