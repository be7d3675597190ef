use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the zero vector spans no ray")]
    ZeroVector,
    #[error("no multiple of the vector lies in the lattice")]
    NotInLattice,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported root system: {0}")]
    UnsupportedType(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid homogeneous spherical datum:\n{0}")]
    InvalidDatum(String),
    #[error("non-integral rho: {0}")]
    NonIntegralRho(String),
    #[error("unknown color: {0}")]
    UnknownColor(String),
    #[error("invalid colored cone:\n{0}")]
    InvalidColoredCone(String),
    #[error("cone(sigma) meets M0 in a non-simplicial cone: {0}")]
    NonSimplicialTrace(String),
    #[error("input combinatorics inconsistent: {0}")]
    TheoremViolation(String),
    #[error("colored cone is not a member of the fan: {0}")]
    NotInFan(String),
    #[error("color {0} lies in F, so its closure contains the orbit")]
    ColorInF(String),
    #[error("impossible for valid input: {0}")]
    ImpossibleForValidInput(String),
    #[error("document error: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Outcome of a validation pass. Collects every violated condition
/// instead of stopping at the first one.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<String>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, violation: impl Into<String>) {
        self.violations.push(violation.into());
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[String] {
        &self.violations
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.violations.is_empty() {
            write!(f, "all checks passed")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "- {v}")?;
            }
            Ok(())
        }
    }
}
