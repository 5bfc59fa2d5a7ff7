use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex set indexes order {set} but the graph has order {graph}")]
    OrderMismatch { set: usize, graph: usize },

    #[error("graph order {n} exceeds the search limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("search budget of {budget} nodes exhausted; value lies in [{lower}, {upper}]")]
    BudgetExhausted {
        budget: u64,
        lower: usize,
        upper: usize,
    },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("no closed form is known for {0}")]
    NoClosedForm(String),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("{0}")]
    InvalidInput(String),

    #[error("input is not a tree")]
    NotATree,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
