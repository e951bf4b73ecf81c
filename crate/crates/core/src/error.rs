use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("relation has {got} entries, expected {expected}")]
    RelationShape { expected: usize, got: usize },

    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),

    #[error("relation is not transitive: `{0}` <= `{1}` <= `{2}`")]
    NotTransitive(String, String, String),

    #[error("assignment has {got} entries but the source has {expected} points")]
    NotTotal { expected: usize, got: usize },

    #[error("assignment sends a point to index {index}, target has {size} points")]
    OutOfRange { index: usize, size: usize },

    #[error("`{0}` is assigned twice")]
    AssignedTwice(String),

    #[error("map is not monotone: `{0}` <= `{1}` but `{2}` is not <= `{3}`")]
    NotMonotone(String, String, String, String),

    #[error("maps are not composable: target of the first differs from source of the second")]
    NotComposable,

    #[error("size bound {requested} exceeds the hard cap {cap}")]
    SizeCap { requested: usize, cap: usize },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("property `{property}` expects a {expected}")]
    ArgumentKind {
        property: String,
        expected: &'static str,
    },
}
