use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is not a vertex of the graph")]
    VertexOutOfRange { vertex: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable X{var} is outside the universe X1..X{nvars}")]
    VariableOutOfRange { var: usize, nvars: usize },

    #[error("variable universes differ ({left} vs {right})")]
    ContextMismatch { left: usize, right: usize },

    #[error("the unit ideal is not supported here")]
    UnitIdeal,

    #[error("{0} is not a path of the graph")]
    NotAPath(String),

    #[error("the given weighted set is not a weighted path vertex cover")]
    NotACover,

    #[error("exponent overflow while combining weights {0} and {1}")]
    Overflow(u64, u64),

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no characterization available: {0}")]
    NoCharacterization(String),

    #[error("polarized ideal needs {vars} variables, above the size guard of {guard}")]
    SizeGuard { vars: usize, guard: usize },
}
