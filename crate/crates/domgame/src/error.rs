use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph construction: {0}")]
    Graph(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),

    #[error("illegal move: vertex {0} dominates no new vertex")]
    IllegalMove(usize),

    #[error("game is already over")]
    GameOver,

    #[error("solver cap exceeded: n = {n} > cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("memo budget exceeded ({0} entries)")]
    MemoBudgetExceeded(usize),

    #[error("search budget exceeded ({0} nodes)")]
    SearchBudgetExceeded(u64),

    #[error("value assignment stage inapplicable: {0}")]
    StageInapplicable(String),

    #[error("parameter domain: {0}")]
    ParamDomain(String),

    #[error("family precondition violated: {0}")]
    FamilyPrecondition(String),

    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),

    #[error("generator retry budget exhausted after {0} attempts")]
    RetriesExhausted(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
