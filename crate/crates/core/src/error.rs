use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token `{token}`")]
    MalformedToken { token: String },

    #[error("chord {id} occurs {count} time(s); every chord must occur exactly twice")]
    ChordSeenOnceOrThrice { id: u32, count: usize },

    #[error("the two occurrences of chord {id} carry different signs")]
    SignMismatch { id: u32 },

    #[error("chord {id} has two occurrences with the same role")]
    DuplicateRole { id: u32 },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("diagram is already closed")]
    AlreadyClosed,

    #[error("operation requires a based (long) diagram")]
    RequiresBasePoint,

    #[error("operation requires a closed diagram")]
    NotClosed,

    #[error("no chord with id {id}")]
    NoSuchChord { id: u32 },

    #[error("{n} chords exceeds the limit of {limit}")]
    TooManyChords { n: usize, limit: usize },

    #[error("move does not apply at the given site")]
    InvalidSite,

    #[error("enumeration size {n} exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("cannot parse polynomial `{text}`: {reason}")]
    PolyParse { text: String, reason: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short name of the error class, stable across message wording.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedToken { .. } => "MalformedToken",
            Error::ChordSeenOnceOrThrice { .. } => "ChordSeenOnceOrThrice",
            Error::SignMismatch { .. } => "SignMismatch",
            Error::DuplicateRole { .. } => "DuplicateRole",
            Error::InvalidDiagram(_) => "InvalidDiagram",
            Error::AlreadyClosed => "AlreadyClosed",
            Error::RequiresBasePoint => "RequiresBasePoint",
            Error::NotClosed => "NotClosed",
            Error::NoSuchChord { .. } => "NoSuchChord",
            Error::TooManyChords { .. } => "TooManyChords",
            Error::InvalidSite => "InvalidSite",
            Error::TooLarge { .. } => "TooLarge",
            Error::PolyParse { .. } => "PolyParse",
            Error::Internal(_) => "Internal",
        }
    }
}
