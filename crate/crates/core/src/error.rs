use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {found:?} at position {position} in Dyck path")]
    DyckChar { position: usize, found: char },
    #[error("Dyck path goes below the diagonal at position {position}")]
    BelowDiagonal { position: usize },
    #[error("Dyck path is unbalanced ({north} N, {east} E)")]
    Unbalanced { north: usize, east: usize },

    #[error("invalid character {found:?} at position {position} in tree encoding")]
    TreeChar { position: usize, found: char },
    #[error("unbalanced parentheses at position {position} in tree encoding")]
    TreeUnbalanced { position: usize },
    #[error("tree encoding must be a single root, got trailing input at position {position}")]
    TreeTrailing { position: usize },

    #[error("area vector entry {index} (1-based) violates a_1 = 0, a_i <= a_(i-1) + 1")]
    AreaVector { index: usize },

    #[error("relation label ({i}, {j}) out of range for n = {n}")]
    LabelOutOfRange { i: usize, j: usize, n: usize },
    #[error("relation is not a strict partial order: {0}")]
    NotStrictOrder(String),
    #[error("poset is not a unit interval order (contains an induced {0})")]
    NotUnitInterval(&'static str),
    #[error("poset is not in canonical labeling: {0}")]
    NotCanonical(String),

    #[error("starting set is not strictly increasing at index {index}")]
    NotIncreasing { index: usize },
    #[error("starting set does not realize the given poset")]
    StartingSetMismatch,
    #[error("starting set meets its unit shift: x_{i} + 1 = x_{j}")]
    ShiftCollision { i: usize, j: usize },

    #[error("malformed poset JSON: {0}")]
    Json(String),
    #[error("unknown law {0:?}")]
    UnknownLaw(String),
}

pub type Result<T> = std::result::Result<T, Error>;
