use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("Cartan matrix is not square ({rows} rows, row {row} has {len} entries)")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("Cartan matrix has c_{i}{i} = {value}, expected 2", i = .index + 1)]
    DiagonalNotTwo { index: usize, value: i64 },
    #[error("Cartan matrix has positive off-diagonal entry c_{}{} = {value}", .i + 1, .j + 1)]
    PositivityViolation { i: usize, j: usize, value: i64 },
    #[error("Cartan matrix has c_{}{} = 0 but c_{}{} != 0", .i + 1, .j + 1, .j + 1, .i + 1)]
    AsymmetricZeroPattern { i: usize, j: usize },
    #[error("Cartan matrix is not symmetrizable (inconsistent ratios around a cycle through vertex {})", .vertex + 1)]
    NoSymmetrizer { vertex: usize },
    #[error("not a symmetrizer: {0}")]
    NotASymmetrizer(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("{what} exceeded cap {cap}")]
    CapExceeded { what: String, cap: usize },
    #[error("reduction divided by zero in characteristic {p}")]
    FieldDegenerate { p: u64 },

    #[error("not of Dynkin type: {0}")]
    NotDynkin(String),
    #[error("socle of e_{}Π is not simple (dimension {dim})", .vertex + 1)]
    SocleNotSimple { vertex: usize, dim: usize },
    #[error("radical of End unavailable over F_{p} for dimension {dim}; rerun over the rationals")]
    RadicalUnavailable { p: u64, dim: usize },
    #[error("module does not satisfy the algebra relations: {0}")]
    NotAModule(String),
    #[error("not mutable: {0}")]
    NotMutable(String),
    #[error("could not split an isotypic module into indecomposable summands")]
    DecompositionFailed,

    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("report failure: {}", .0.join("; "))]
    ReportFailure(Vec<String>),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("io error: {0}")]
    Io(String),
}
