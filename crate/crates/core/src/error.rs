use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown character {0:?} in word")]
    UnknownCharacter(char),
    #[error("letter '{letter}' is outside rank {rank}")]
    LetterOutOfRank { letter: char, rank: usize },
    #[error("rank {0} exceeds the maximum of 26")]
    RankTooLarge(usize),
    #[error("the trivial class is not allowed here")]
    TrivialClass,
    #[error("spelling is not cyclically reduced")]
    NotCyclicallyReduced,

    #[error("a surface needs rank at least 1")]
    ZeroRank,
    #[error("dart '{0}' appears more than once")]
    DuplicateDart(char),
    #[error("dart '{0}' is missing from the cyclic order")]
    MissingDart(char),
    #[error("dart order yields a non-integral genus")]
    NonIntegralGenus,
    #[error(
        "surface has Euler characteristic {0}; discs and annuli are excluded \
         (every homotopy equivalence between them is homotopic to a homeomorphism)"
    )]
    NotHyperbolic(i64),

    #[error("junction index {index} out of range for a word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
