use thiserror::Error;

/// Errors raised while building posets or running enumerations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("poset has {size} elements, above the element cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("summing over S_{n} on a {size}-element base needs {cells} cells, above the brute-force cap of {cap}")]
    BruteForceCapExceeded { size: usize, n: usize, cells: usize, cap: usize },

    #[error("element {element} is out of range for a poset with {len} elements")]
    ElementOutOfRange { element: usize, len: usize },

    #[error("cover relations contain a cycle: {}", format_cycle(.0))]
    Cycle(Vec<usize>),

    #[error("cover ({0}, {1}) is listed more than once")]
    DuplicateCover(usize, usize),

    #[error("cover ({0}, {1}) is implied by transitivity of other covers")]
    RedundantCover(usize, usize),

    #[error("labeling {0:?} is not a bijection onto 1..={len}", len = .0.len())]
    InvalidLabeling(Vec<usize>),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("no inter-copy cover ({p},{j}) < ({p},{next}) to remove", next = .j + 1)]
    UnknownEdge { p: usize, j: usize },

    #[error("poset is not graded")]
    NotGraded,

    #[error("maximal chains of the labeled poset have unequal descent counts")]
    NonConstantDescents,

    #[error("order {0:?} is not a linear extension")]
    NotLinearExtension(Vec<usize>),

    #[error("invalid Dyck word: {0}")]
    InvalidDyckPath(String),

    #[error("invalid multiset word: {0}")]
    InvalidWord(String),

    #[error("poset does not have the expected shape: {0}")]
    WrongShape(String),

    #[error("two computations of {what} disagree: {lhs} vs {rhs}")]
    InternalMismatch { what: String, lhs: String, rhs: String },

    #[error("malformed poset file: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

fn format_cycle(cycle: &[usize]) -> String {
    let mut parts: Vec<String> = cycle.iter().map(|e| e.to_string()).collect();
    if let Some(first) = cycle.first() {
        parts.push(first.to_string());
    }
    parts.join(" -> ")
}
