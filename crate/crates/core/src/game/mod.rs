//! Deterministic Codenames rules engine: board generation, clue validation,
//! guess resolution, and scoring for the single-team and two-team variants.

mod board;
mod event;
mod state;

pub use board::{
    generate_board, Board, Identity, Team, WordCard, BLUE_WORDS, BOARD_SIZE, CIVILIAN_WORDS,
    RED_WORDS,
};
pub use event::{ClueRejection, GameEvent, GuessRejection};
pub use state::{
    replay, substring_conflict, Clue, EndReason, GameMode, GameResult, GameState, GameStatus,
    GuessOutcome, Phase, LOSS_SCORE,
};

use thiserror::Error;

/// Rule violations and misuse of the engine API.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RulesError {
    #[error("wordlist has {got} unique words, need at least {needed}")]
    WordlistTooSmall { needed: usize, got: usize },
    #[error("board is malformed: {0}")]
    BadBoard(String),
    #[error("action not legal in phase {found:?} (expected {expected:?}, finished={finished})")]
    InvalidPhase {
        expected: Phase,
        found: Phase,
        finished: bool,
    },
    #[error("invalid clue: {0}")]
    InvalidClue(ClueRejection),
    #[error("word {0:?} is not on the board")]
    WordNotOnBoard(String),
    #[error("word {0:?} is already revealed")]
    AlreadyRevealed(String),
    #[error("cannot stop before the mandatory first guess")]
    StopBeforeFirstGuess,
    #[error("game is still ongoing")]
    GameStillOngoing,
    #[error("replay diverged from the logged game: {0}")]
    ReplayDivergence(String),
}
