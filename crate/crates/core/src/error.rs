use thiserror::Error;

pub type Result<T> = std::result::Result<T, BraidError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count must be at least 1")]
    ZeroStrands,
    #[error("generator {generator} is invalid on {strands} strands")]
    GeneratorOutOfRange { generator: i32, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("cannot embed a {strands}-strand braid at offset {offset} into {target} strands")]
    EmbedTooSmall {
        strands: usize,
        offset: usize,
        target: usize,
    },
    #[error("braid on {0} strands has no derived braids: strand count must be even")]
    OddStrands(usize),
    #[error("block of widths {p}+{q} at {t} does not fit on {strands} strands")]
    BlockOutOfRange {
        t: usize,
        p: usize,
        q: usize,
        strands: usize,
    },
    #[error("width vector has {widths} entries but the braid has {strands} strands")]
    WidthMismatch { widths: usize, strands: usize },
    #[error("invalid width vector: {0}")]
    InvalidWidths(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("component index k={k} out of range for n={n} (max {max})")]
    ComponentOutOfRange { n: usize, k: usize, max: usize },
    #[error("invalid product indices: {0}")]
    InvalidProduct(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generators {a} and {b} do not commute and cannot share a row")]
    NonCommutingRow { a: i32, b: i32 },
    #[error("handle reduction exceeded its budget of {0} steps")]
    BudgetExceeded(u64),
    #[error("search exceeded its cap of {0} distinct elements")]
    SearchCapExceeded(usize),
    #[error("invalid render options: {0}")]
    RenderOptions(String),
}
