use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty clause")]
    EmptyClause,
    #[error("positive example not straight: {0}")]
    NotStraight(String),
    #[error("arity mismatch for relation {relation}: expected {expected}, found {found}")]
    ArityMismatch {
        relation: String,
        expected: usize,
        found: usize,
    },
    #[error("variable in ground example: {0}")]
    NonGroundExample(String),
    #[error("instance has no positive examples")]
    NoPositiveExamples,
    #[error("invalid hypothesis: {0}")]
    InvalidHypothesis(String),
    #[error("clause is not {k}-guarded by the given guard: {clause}")]
    NotGuarded { clause: String, k: usize },
    #[error("relation {relation} does not occur in clause {clause}")]
    MissingRelation { relation: String, clause: String },
    #[error("relation {0} occurs more than once in a straight clause")]
    AmbiguousOccurrence(String),
    #[error("invalid guard specification: {0}")]
    InvalidGuard(String),
    #[error("incoherent relative shield: {0}")]
    IncoherentShield(String),
    #[error("specialisation conflict: {0}")]
    SpecialisationConflict(String),
    #[error("positive example is not Horn: {0}")]
    NotHorn(String),
    #[error("guard width {k} exceeds probe clause size {size}")]
    GuardWidthTooLarge { k: usize, size: usize },
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("hypothesis is not a solution: {0}")]
    NotASolution(String),
    #[error("search space of {size} exceeds the configured ceiling of {ceiling}")]
    ResourceCap { size: u128, ceiling: u128 },
    #[error("invalid hitting-string instance: {0}")]
    InvalidHittingInstance(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
