use catg_core::BigCount;
use thiserror::Error;

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Group(#[from] catg_core::Error),

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid coset graph spec: {0}")]
    InvalidSpec(String),

    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),

    #[error("index {index} exceeds vertex cap {cap}")]
    IndexExceedsCap { index: BigCount, cap: u64 },

    #[error("{vertices} vertices exceed cap {cap}")]
    VertexCapExceeded { vertices: usize, cap: usize },

    #[error("generator {generator} does not preserve adjacency")]
    NonAutomorphismGroup { generator: usize },

    #[error("group acts on {group} points but the graph has {graph} vertices")]
    ActionDegree { group: usize, graph: usize },

    #[error("group is not arc-transitive on the graph")]
    NotArcTransitive,

    #[error("valency {0} is below 3")]
    ValencyTooSmall(usize),

    #[error("subgroup is not normal in the acting group")]
    NotNormal,

    #[error("{what} count {count} exceeds cap {cap}")]
    SearchCapExceeded { what: &'static str, count: u128, cap: u128 },
}
