//! Event log entries. Every action in a game, including rejected agent
//! responses and protocol fallbacks, is appended here; the log is what gets
//! persisted per match and what metrics are computed from.

use serde::{Deserialize, Serialize};

use crate::game::board::{Identity, Team};
use crate::game::state::{Clue, GuessOutcome};

/// Why a proposed clue was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ClueRejection {
    /// The response could not be read as a single clue word plus a number.
    Unparseable,
    /// The clue word contained whitespace.
    NotASingleWord,
    /// The clue contains, or is contained within, an unrevealed board word.
    SubstringConflict { board_word: String },
    /// The agent reported it could not produce a clue (e.g. vocabulary gap).
    AgentDeclined { message: String },
}

impl std::fmt::Display for ClueRejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClueRejection::Unparseable => {
                write!(f, "response was not a single clue word and a number")
            }
            ClueRejection::NotASingleWord => write!(f, "the clue must be a single word"),
            ClueRejection::SubstringConflict { board_word } => write!(
                f,
                "the clue shares a substring with the board word '{board_word}'"
            ),
            ClueRejection::AgentDeclined { message } => write!(f, "{message}"),
        }
    }
}

/// Why a proposed guess was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GuessRejection {
    /// The response did not name exactly one unrevealed board word.
    Unparseable,
    /// The named word is not on the board.
    NotOnBoard { word: String },
    /// The named word was already revealed.
    AlreadyRevealed { word: String },
    /// The agent reported it could not guess (e.g. clue out of vocabulary).
    AgentDeclined { message: String },
}

impl std::fmt::Display for GuessRejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GuessRejection::Unparseable => {
                write!(f, "response did not name exactly one available board word")
            }
            GuessRejection::NotOnBoard { word } => write!(f, "'{word}' is not on the board"),
            GuessRejection::AlreadyRevealed { word } => {
                write!(f, "'{word}' has already been revealed")
            }
            GuessRejection::AgentDeclined { message } => write!(f, "{message}"),
        }
    }
}

/// One entry in a game's history.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "event")]
pub enum GameEvent {
    /// A clue was accepted and the guess phase opened. `fallback` marks the
    /// empty clue substituted after ten invalid attempts.
    ClueGiven {
        team: Team,
        turn: u32,
        clue: Clue,
        fallback: bool,
    },
    /// A card was revealed. `fallback` marks a random word chosen after ten
    /// invalid guess attempts.
    GuessMade {
        team: Team,
        turn: u32,
        word: String,
        identity: Identity,
        outcome: GuessOutcome,
        fallback: bool,
    },
    /// The guesser voluntarily ended the turn.
    TurnStopped { team: Team, turn: u32 },
    /// A clue attempt was rejected; the raw response is preserved.
    InvalidClueAttempt {
        team: Team,
        turn: u32,
        attempt: u32,
        raw: String,
        reason: ClueRejection,
    },
    /// A guess attempt was rejected; the raw response is preserved.
    InvalidGuessAttempt {
        team: Team,
        turn: u32,
        attempt: u32,
        raw: String,
        reason: GuessRejection,
    },
    /// An answer to the continue question could not be read as yes or no.
    InvalidContinueAttempt {
        team: Team,
        turn: u32,
        attempt: u32,
        raw: String,
    },
}

impl GameEvent {
    /// Team the event belongs to.
    pub fn team(&self) -> Team {
        match self {
            GameEvent::ClueGiven { team, .. }
            | GameEvent::GuessMade { team, .. }
            | GameEvent::TurnStopped { team, .. }
            | GameEvent::InvalidClueAttempt { team, .. }
            | GameEvent::InvalidGuessAttempt { team, .. }
            | GameEvent::InvalidContinueAttempt { team, .. } => *team,
        }
    }

    /// Turn index the event occurred in.
    pub fn turn(&self) -> u32 {
        match self {
            GameEvent::ClueGiven { turn, .. }
            | GameEvent::GuessMade { turn, .. }
            | GameEvent::TurnStopped { turn, .. }
            | GameEvent::InvalidClueAttempt { turn, .. }
            | GameEvent::InvalidGuessAttempt { turn, .. }
            | GameEvent::InvalidContinueAttempt { turn, .. } => *turn,
        }
    }

    /// True for the events that advance the game position (as opposed to
    /// recording rejected attempts).
    pub fn is_action(&self) -> bool {
        matches!(
            self,
            GameEvent::ClueGiven { .. } | GameEvent::GuessMade { .. } | GameEvent::TurnStopped { .. }
        )
    }
}
