use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error("letter {0} has no operator in the realization")]
    UnknownLetter(u32),
    #[error("invalid realization: {0}")]
    InvalidRealization(String),
    #[error("operator is not Hermitian (max |A - A^dagger| = {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("operator is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },
    #[error("Gram matrix is not realizable (min eigenvalue {min_eigenvalue:e})")]
    NotRealizable { min_eigenvalue: f64 },
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("{name} = {value} is outside its domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("{what} requires {required}, above the cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        required: u128,
        cap: u128,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}
