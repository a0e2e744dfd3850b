//! Error type shared by every numerical routine in the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the numerical routines.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain a routine supports.
    Domain {
        /// Name of the offending argument.
        what: &'static str,
        /// The rejected value.
        value: f64,
        /// Human-readable constraint, e.g. `"in [0, 1)"`.
        expected: &'static str,
    },
    /// Hypergeometric parameters are inadmissible (c zero or a negative
    /// integer) or a spec struct violates its own invariants.
    InvalidParams(&'static str),
    /// The series hit its term budget before meeting tolerance.
    NonConvergence {
        /// Terms consumed.
        terms: usize,
    },
    /// A quadrature engine exhausted its refinement budget.
    ToleranceNotMet {
        /// Best error estimate achieved.
        achieved: f64,
        /// Tolerance that was requested.
        requested: f64,
    },
    /// The integrand returned NaN or infinity away from the endpoints.
    NonFiniteValue {
        /// Abscissa at which the integrand misbehaved.
        x: f64,
    },
    /// Root finding hit its iteration budget.
    NoConvergence {
        /// Iterations consumed.
        iterations: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain {
                what,
                value,
                expected,
            } => write!(f, "{what} = {value} is out of domain (expected {expected})"),
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::NonConvergence { terms } => {
                write!(f, "series did not converge within {terms} terms")
            }
            Error::ToleranceNotMet {
                achieved,
                requested,
            } => write!(
                f,
                "quadrature tolerance not met: achieved {achieved:.3e}, requested {requested:.3e}"
            ),
            Error::NonFiniteValue { x } => {
                write!(f, "integrand returned a non-finite value at x = {x}")
            }
            Error::NoConvergence { iterations } => {
                write!(f, "root finding did not converge within {iterations} iterations")
            }
        }
    }
}

impl std::error::Error for Error {}
