use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown {kind} tag `{label}`")]
    TagParse { kind: &'static str, label: String },

    #[error("invalid tagged sentence: {0}")]
    InvalidSentence(String),

    #[error("sentence has no predicate frame")]
    NoPredicate,

    #[error("SR tag {tag} occurs {count} times (limit {limit}) in `{sequence}`")]
    Repetition {
        tag: String,
        count: usize,
        limit: usize,
        sequence: String,
    },

    #[error("meta sequence of length {len} exceeds the maximum of {max}")]
    TooLong { len: usize, max: usize },

    #[error("declarative meta sequence of length {len} is shorter than 3")]
    TooShort { len: usize },

    #[error("interrogative pronoun `{0}` inside a declarative meta sequence")]
    WhInDeclarative(String),

    #[error("invalid interrogative pronoun literal `{0}`")]
    InvalidWh(String),

    #[error("interrogative meta sequence `{0}` has no V unit")]
    MalformedInterrogative(String),

    #[error("MSDIP capacity of {0} pairs exceeded")]
    Capacity(usize),

    #[error("unsupported MSDIP version {0}")]
    Version(u32),

    #[error("malformed MSDIP record {index}: {message}")]
    Record { index: usize, message: String },

    #[error("question meta sequence `{0}` has no V unit")]
    DegenerateQuestion(String),

    #[error("no text for SSU {0}")]
    Unrealizable(String),

    #[error("no lemma for the main verb `{0}`")]
    MissingLemma(String),

    #[error("answer set is empty or unrealizable")]
    NoAnswer,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
