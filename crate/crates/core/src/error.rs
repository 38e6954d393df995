use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse label {label:?} at position {position}: {message}")]
    Parse {
        label: String,
        position: usize,
        message: String,
    },

    #[error("symbol {symbol} is out of range for p = {p}")]
    SymbolOutOfRange { symbol: u32, p: u32 },

    #[error("a pair needs two distinct symbols, got {{{0},{0}}}")]
    DegeneratePair(u32),

    #[error("unknown graph family {0:?} (expected s, plus, pp or hat)")]
    UnknownFamily(String),

    #[error("unknown vertex label {0:?}")]
    UnknownVertex(String),

    #[error("edge {0:?}-{1:?} references an undeclared vertex")]
    UndeclaredEndpoint(String, String),

    #[error("self-loop on {0:?} is not allowed in a simple graph")]
    SelfLoop(String),

    #[error("contraction set is not a matching: vertex {0:?} is covered twice")]
    NotAMatching(String),

    #[error("set {words:?} is not pairable: head {head:?} {reason}")]
    NotPairable {
        words: Vec<String>,
        head: String,
        reason: String,
    },

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("induced subgraph on {what} contains a cycle: {cycle:?}")]
    CycleFound { what: String, cycle: Vec<String> },

    #[error("graph has {order} vertices, above the brute-force cap of {cap}")]
    TooLarge { order: usize, cap: usize },

    #[error("construction check failed: {0}")]
    Construction(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
