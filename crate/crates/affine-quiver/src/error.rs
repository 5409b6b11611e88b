use thiserror::Error;

/// Errors produced anywhere in the pipeline.
///
/// The CLI maps these onto exit codes: input problems (parsing, ring
/// validation, size limits, I/O) are exit 2, a brute-force/closed-form
/// mismatch is exit 3, and internal invariant violations are exit 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring axiom `{axiom}` fails: {witness}")]
    AxiomViolation { axiom: String, witness: String },

    #[error("reducible polynomial: {0}")]
    ReduciblePolynomial(String),

    #[error("ring is not local: {0}")]
    NotLocal(String),

    #[error("not a field: {0}")]
    NotAField(String),

    #[error("element {0} is not a unit")]
    NonUnit(usize),

    #[error("subgroup containment violated: {0}")]
    Containment(String),

    #[error("monoid hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("brute-force check disagrees on {ring}\nclosed form: {closed}\nbrute force: {brute}")]
    OracleDisagreement {
        ring: String,
        closed: String,
        brute: String,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit code the CLI should terminate with for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::InvalidRing(_)
            | Error::AxiomViolation { .. }
            | Error::ReduciblePolynomial(_)
            | Error::NotLocal(_)
            | Error::NotAField(_)
            | Error::SizeLimit(_)
            | Error::Io { .. }
            | Error::Json(_) => 2,
            Error::OracleDisagreement { .. } => 3,
            Error::NonUnit(_)
            | Error::Containment(_)
            | Error::Hypothesis(_)
            | Error::Invariant(_) => 4,
        }
    }
}
