use core::fmt;

/// Errors raised by state conversions, wave relations and the solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// Depth is zero or negative where a wet state is required.
    NonPositiveDepth { h: f64 },
    /// The recovered Reynolds stress tensor is not positive definite.
    NonSpdStress,
    /// A model or solver parameter is out of range.
    InvalidParameter(&'static str),
    /// A wave relation was evaluated outside its domain of definition.
    Domain { what: &'static str, value: f64 },
    /// The data violate the existence condition of a wet star region.
    VacuumFormation,
    /// Newton iteration did not reach the tolerance.
    NoConvergence { iterations: usize },
    /// A similarity coordinate lies outside a rarefaction fan.
    OutOfFan { xi: f64 },
    /// A linear system that should be regular turned out singular.
    SingularSystem,
    /// Estimated left and right speeds coincide.
    DegenerateSpeeds,
    /// A finite volume update produced an inadmissible cell.
    StateInvalid { cell: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveDepth { h } => write!(f, "non-positive depth h = {h}"),
            Error::NonSpdStress => f.write_str("stress tensor is not symmetric positive definite"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::Domain { what, value } => write!(f, "{what} out of domain: {value}"),
            Error::VacuumFormation => f.write_str("Riemann data produce an intermediate vacuum"),
            Error::NoConvergence { iterations } => {
                write!(f, "Newton iteration did not converge after {iterations} iterations")
            }
            Error::OutOfFan { xi } => write!(f, "xi = {xi} lies outside the rarefaction fan"),
            Error::SingularSystem => f.write_str("singular linear system"),
            Error::DegenerateSpeeds => f.write_str("left and right wave speeds coincide"),
            Error::StateInvalid { cell } => write!(f, "cell {cell} lost admissibility"),
        }
    }
}

impl core::error::Error for Error {}
