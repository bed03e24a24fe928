use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("element {0} occurs more than once")]
    DuplicateElement(u32),

    #[error("empty block")]
    EmptyBlock,

    #[error("element {0} cannot be written in compact notation (use the comma form)")]
    NotCompact(u32),

    #[error("set partition `{0}` is not standard (ground set is not [n])")]
    NotStandard(String),

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{0} is not contained in the ground set")]
    NotSubset(String),

    #[error("ground sets differ")]
    GroundSetMismatch,

    #[error("words `{0}` and `{1}` are not disjoint")]
    NotDisjoint(String, String),

    #[error("left quasi-shuffle needs nonempty operands")]
    EmptyOperand,

    #[error("`{word}` is not a left quasi-shuffle of `{left}` and `{right}`")]
    NotLeftQuasiShuffle {
        word: String,
        left: String,
        right: String,
    },

    #[error("word is not a set composition (letters overlap)")]
    NotComposition,

    #[error("invalid split (K, L) of [{r}]: {reason}")]
    InvalidSplit { r: usize, reason: String },

    #[error("word is empty")]
    EmptyWord,

    #[error("word is not Lyndon")]
    NotLyndon,

    #[error("word has a single letter")]
    SingleLetter,

    #[error("set partition `{0}` is not atomic")]
    NotAtomic(String),

    #[error("operation is undefined on the empty set partition")]
    EmptyPartition,

    #[error("counit is {0}, expected 0")]
    NonzeroCounit(String),

    #[error("{parts} parts exceeds the supported maximum of {max}")]
    TooManyParts { parts: usize, max: usize },

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
