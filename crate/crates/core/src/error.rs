use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group table is empty")]
    EmptyTable,
    #[error("declared order {declared} does not match a table with {rows} rows")]
    OrderMismatch { declared: usize, rows: usize },
    #[error("table row {row} has {len} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("table entry {value} at ({row}, {col}) is not an element index below {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("product is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    InvalidPermutation { index: usize, degree: usize },
    #[error("generator {index} acts on {found} points, expected {expected}")]
    InconsistentDegree {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("group order exceeds the configured maximum of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("group document must contain either `table` or `degree` and `generators`")]
    UnrecognizedDocument,
    #[error("element index {index} is out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("the given elements do not form a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal in the ambient subgroup")]
    NotNormal,
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("connection set contains the identity")]
    ConnectionSetHasIdentity,
    #[error("connection set is not inverse-closed: contains {0} but not its inverse")]
    ConnectionSetNotInverseClosed(usize),
    #[error("transversal does not contain the identity")]
    TransversalMissingIdentity,
    #[error("transversal is not inverse-closed")]
    TransversalNotInverseClosed,
    #[error("representatives do not meet every right coset exactly once")]
    NotATransversal,
    #[error("the quotient criterion needs a 2-subgroup or a normal subgroup")]
    OmegaPrecondition,
    #[error("group does not have a unique central involution")]
    NoUniqueCentralInvolution,
    #[error("group is not extraspecial")]
    NotExtraspecial,
    #[error("Sylow 2-subgroup is not extraspecial")]
    SylowNotExtraspecial,
    #[error("commutator form is degenerate: rank {rank} < dimension {dimension}")]
    DegenerateForm { rank: usize, dimension: usize },
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("unsupported report format `{0}`")]
    UnsupportedFormat(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
