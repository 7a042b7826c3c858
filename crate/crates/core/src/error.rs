use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("player outside universe: player {player} in a universe of {universe}")]
    PlayerOutsideUniverse { player: usize, universe: usize },

    #[error("universe too large: {size} players (limit {limit})")]
    UniverseTooLarge { size: usize, limit: usize },

    #[error("game not total: coalition with initial segment {0} is undetermined")]
    NotTotal(String),

    #[error("malformed prefix game: {0}")]
    MalformedPrefixGame(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("duplicate enumeration index {0}")]
    DuplicateIndex(usize),

    #[error("bound undefined: {0}")]
    BoundUndefined(String),

    #[error("no witness exists: {0}")]
    NoWitness(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("postcondition violated: {0}")]
    Postcondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown game name: {0}")]
    UnknownGame(String),

    #[error("invalid preference: {0}")]
    InvalidPreference(String),
}

impl Error {
    /// Errors caused by malformed or inconsistent input, as opposed to an
    /// analysis that cannot be carried out on a well-formed game.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::PlayerOutsideUniverse { .. }
                | Error::UniverseTooLarge { .. }
                | Error::MalformedPrefixGame(_)
                | Error::InvalidParameter(_)
                | Error::DuplicateIndex(_)
                | Error::Parse(_)
                | Error::UnknownGame(_)
                | Error::InvalidPreference(_)
        )
    }
}
