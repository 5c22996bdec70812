//! Turn state machine: clue validation, guess resolution, endings.

use serde::{Deserialize, Serialize};

use crate::game::board::{Board, Identity, Team};
use crate::game::event::{ClueRejection, GameEvent, GuessRejection};
use crate::game::RulesError;

/// Rule variant being played.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameMode {
    /// Red plays alone and is scored by turns taken (25 on a loss).
    SingleTeam,
    /// Full competitive rules, red moves first.
    TwoTeams,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    AwaitingClue,
    AwaitingGuess,
}

/// What a single guess revealed, or that the guesser stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GuessOutcome {
    OwnTeamWord,
    OpponentWord,
    CivilianWord,
    AssassinWord,
    VoluntaryStop,
}

/// Why a finished game ended.
///
/// `AllOwnWordsFound` means the guessing team revealed the last of its own
/// words; `AllOpponentWordsFound` means a team revealed the last word of the
/// other team's colour (losing on the spot); `AssassinSelected` is immediate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndReason {
    AllOwnWordsFound,
    AllOpponentWordsFound,
    AssassinSelected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "state")]
pub enum GameStatus {
    Ongoing,
    Finished {
        winner: Option<Team>,
        reason: EndReason,
    },
}

/// A codemaster's clue: a single word and a target count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clue {
    pub word: String,
    pub count: u32,
}

impl Clue {
    /// Lowercases the word; all engine comparisons are case-insensitive.
    pub fn new(word: &str, count: u32) -> Clue {
        Clue {
            word: word.to_lowercase(),
            count,
        }
    }

    /// The defined fallback after ten invalid clue attempts: empty word,
    /// count one.
    pub fn fallback() -> Clue {
        Clue {
            word: String::new(),
            count: 1,
        }
    }
}

impl std::fmt::Display for Clue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.word, self.count)
    }
}

/// Final outcome of a finished game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameResult {
    pub winner: Option<Team>,
    pub reason: EndReason,
    pub turns_taken: u32,
    /// Single-team mode only: turns taken on a win, 25 on any loss.
    pub single_team_score: Option<u32>,
}

/// Maximum single-team score, awarded on any loss.
pub const LOSS_SCORE: u32 = 25;

/// Returns the first unrevealed board word that shares a substring with the
/// clue word (either direction), if any. The empty fallback clue conflicts
/// with nothing.
pub fn substring_conflict<'a>(clue_word: &str, unrevealed: &[&'a str]) -> Option<&'a str> {
    if clue_word.is_empty() {
        return None;
    }
    let clue_word = clue_word.to_lowercase();
    unrevealed
        .iter()
        .copied()
        .find(|board_word| clue_word.contains(board_word) || board_word.contains(&clue_word))
}

/// Full state of one game; the single source of truth.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameState {
    board: Board,
    mode: GameMode,
    active_team: Team,
    turn_index: u32,
    phase: Phase,
    current_clue: Option<Clue>,
    guesses_this_turn: u32,
    unlimited_guesses: bool,
    history: Vec<GameEvent>,
    status: GameStatus,
}

impl GameState {
    /// Starts a game on a fresh board. Red always moves first.
    pub fn new(board: Board, mode: GameMode) -> GameState {
        GameState {
            board,
            mode,
            active_team: Team::Red,
            turn_index: 1,
            phase: Phase::AwaitingClue,
            current_clue: None,
            guesses_this_turn: 0,
            unlimited_guesses: false,
            history: Vec::new(),
            status: GameStatus::Ongoing,
        }
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn mode(&self) -> GameMode {
        self.mode
    }

    pub fn active_team(&self) -> Team {
        self.active_team
    }

    pub fn turn_index(&self) -> u32 {
        self.turn_index
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn current_clue(&self) -> Option<&Clue> {
        self.current_clue.as_ref()
    }

    pub fn guesses_this_turn(&self) -> u32 {
        self.guesses_this_turn
    }

    pub fn unlimited_guesses(&self) -> bool {
        self.unlimited_guesses
    }

    pub fn history(&self) -> &[GameEvent] {
        &self.history
    }

    pub fn status(&self) -> GameStatus {
        self.status
    }

    pub fn is_finished(&self) -> bool {
        matches!(self.status, GameStatus::Finished { .. })
    }

    /// Guesses still allowed this turn, `None` when unlimited.
    pub fn remaining_allowance(&self) -> Option<u32> {
        if self.unlimited_guesses {
            return None;
        }
        let clue = self.current_clue.as_ref()?;
        Some((clue.count + 1).saturating_sub(self.guesses_this_turn))
    }

    /// Checks a clue against the board without mutating anything.
    ///
    /// A clue is rejected when its word contains whitespace, or when it
    /// contains or is contained within any word still unrevealed on the
    /// board. Revealed words impose no constraint, and the empty fallback
    /// clue bypasses the substring rule.
    pub fn validate_clue(&self, clue: &Clue) -> Result<(), ClueRejection> {
        if clue.word.chars().any(char::is_whitespace) {
            return Err(ClueRejection::NotASingleWord);
        }
        let unrevealed = self.board.unrevealed_words();
        if let Some(board_word) = substring_conflict(&clue.word, &unrevealed) {
            return Err(ClueRejection::SubstringConflict {
                board_word: board_word.to_string(),
            });
        }
        Ok(())
    }

    /// Applies a validated clue, opening the guess phase with an allowance
    /// of `count + 1` guesses (unlimited when `count` is zero).
    pub fn apply_clue(&mut self, clue: Clue) -> Result<(), RulesError> {
        self.apply_clue_inner(clue, false)
    }

    /// As [`apply_clue`](Self::apply_clue), marking the clue as the
    /// ten-failures fallback in the event log.
    pub fn apply_fallback_clue(&mut self) -> Result<(), RulesError> {
        self.apply_clue_inner(Clue::fallback(), true)
    }

    fn apply_clue_inner(&mut self, clue: Clue, fallback: bool) -> Result<(), RulesError> {
        self.expect_phase(Phase::AwaitingClue)?;
        self.validate_clue(&clue)
            .map_err(RulesError::InvalidClue)?;
        self.unlimited_guesses = clue.count == 0;
        self.current_clue = Some(clue.clone());
        self.guesses_this_turn = 0;
        self.phase = Phase::AwaitingGuess;
        self.history.push(GameEvent::ClueGiven {
            team: self.active_team,
            turn: self.turn_index,
            clue,
            fallback,
        });
        Ok(())
    }

    /// Reveals the guessed word and resolves the consequences: continue,
    /// turn over, or game over.
    pub fn apply_guess(&mut self, word: &str) -> Result<GuessOutcome, RulesError> {
        self.apply_guess_inner(word, false)
    }

    /// As [`apply_guess`](Self::apply_guess), marking the guess as the
    /// ten-failures random fallback in the event log.
    pub fn apply_fallback_guess(&mut self, word: &str) -> Result<GuessOutcome, RulesError> {
        self.apply_guess_inner(word, true)
    }

    fn apply_guess_inner(&mut self, word: &str, fallback: bool) -> Result<GuessOutcome, RulesError> {
        self.expect_phase(Phase::AwaitingGuess)?;
        let index = self
            .board
            .position_of(word)
            .ok_or_else(|| RulesError::WordNotOnBoard(word.to_string()))?;
        if self.board.card(index).revealed {
            return Err(RulesError::AlreadyRevealed(word.to_string()));
        }

        self.board.reveal(index);
        self.guesses_this_turn += 1;
        let identity = self.board.card(index).identity;
        let canonical = self.board.card(index).word.clone();
        let team = self.active_team;
        let own = team.identity();

        let outcome = match identity {
            Identity::Assassin => GuessOutcome::AssassinWord,
            Identity::Civilian => GuessOutcome::CivilianWord,
            id if id == own => GuessOutcome::OwnTeamWord,
            _ => GuessOutcome::OpponentWord,
        };
        self.history.push(GameEvent::GuessMade {
            team,
            turn: self.turn_index,
            word: canonical,
            identity,
            outcome,
            fallback,
        });

        match outcome {
            GuessOutcome::AssassinWord => {
                let winner = match self.mode {
                    GameMode::SingleTeam => None,
                    GameMode::TwoTeams => Some(team.other()),
                };
                self.finish(winner, EndReason::AssassinSelected);
            }
            GuessOutcome::OwnTeamWord => {
                if self.board.remaining(own) == 0 {
                    self.finish(Some(team), EndReason::AllOwnWordsFound);
                } else if !self.unlimited_guesses
                    && self.guesses_this_turn
                        > self.current_clue.as_ref().map_or(0, |c| c.count)
                {
                    // The bonus guess was the last one allowed.
                    self.pass_turn();
                }
            }
            GuessOutcome::OpponentWord => {
                if self.board.remaining(identity) == 0 {
                    let winner = match self.mode {
                        GameMode::SingleTeam => None,
                        GameMode::TwoTeams => Some(team.other()),
                    };
                    self.finish(winner, EndReason::AllOpponentWordsFound);
                } else {
                    self.pass_turn();
                }
            }
            GuessOutcome::CivilianWord => self.pass_turn(),
            GuessOutcome::VoluntaryStop => unreachable!(),
        }
        Ok(outcome)
    }

    /// Voluntarily ends the turn. Legal only after the mandatory first
    /// guess.
    pub fn apply_stop(&mut self) -> Result<(), RulesError> {
        self.expect_phase(Phase::AwaitingGuess)?;
        if self.guesses_this_turn == 0 {
            return Err(RulesError::StopBeforeFirstGuess);
        }
        self.history.push(GameEvent::TurnStopped {
            team: self.active_team,
            turn: self.turn_index,
        });
        self.pass_turn();
        Ok(())
    }

    /// Records a rejected clue attempt without changing the game position.
    pub fn record_invalid_clue(
        &mut self,
        attempt: u32,
        raw: &str,
        reason: ClueRejection,
    ) -> Result<(), RulesError> {
        self.expect_phase(Phase::AwaitingClue)?;
        self.history.push(GameEvent::InvalidClueAttempt {
            team: self.active_team,
            turn: self.turn_index,
            attempt,
            raw: raw.to_string(),
            reason,
        });
        Ok(())
    }

    /// Records a rejected guess attempt without changing the game position.
    pub fn record_invalid_guess(
        &mut self,
        attempt: u32,
        raw: &str,
        reason: GuessRejection,
    ) -> Result<(), RulesError> {
        self.expect_phase(Phase::AwaitingGuess)?;
        self.history.push(GameEvent::InvalidGuessAttempt {
            team: self.active_team,
            turn: self.turn_index,
            attempt,
            raw: raw.to_string(),
            reason,
        });
        Ok(())
    }

    /// Records an unusable answer to the continue question.
    pub fn record_invalid_continue(&mut self, attempt: u32, raw: &str) -> Result<(), RulesError> {
        self.expect_phase(Phase::AwaitingGuess)?;
        self.history.push(GameEvent::InvalidContinueAttempt {
            team: self.active_team,
            turn: self.turn_index,
            attempt,
            raw: raw.to_string(),
        });
        Ok(())
    }

    /// Result of a finished game.
    pub fn game_result(&self) -> Result<GameResult, RulesError> {
        let GameStatus::Finished { winner, reason } = self.status else {
            return Err(RulesError::GameStillOngoing);
        };
        let turns_taken = self.turn_index;
        let single_team_score = match self.mode {
            GameMode::SingleTeam => Some(if winner == Some(Team::Red) {
                turns_taken
            } else {
                LOSS_SCORE
            }),
            GameMode::TwoTeams => None,
        };
        Ok(GameResult {
            winner,
            reason,
            turns_taken,
            single_team_score,
        })
    }

    /// Re-applies a logged event. Replaying a full history from the same
    /// starting board reconstructs the identical state; divergence from the
    /// logged outcome is reported as an error.
    pub fn apply_event(&mut self, event: &GameEvent) -> Result<(), RulesError> {
        match event {
            GameEvent::ClueGiven {
                team,
                turn,
                clue,
                fallback,
            } => {
                self.expect_cursor(*team, *turn)?;
                self.apply_clue_inner(clue.clone(), *fallback)
            }
            GameEvent::GuessMade {
                team,
                turn,
                word,
                identity,
                outcome,
                fallback,
            } => {
                self.expect_cursor(*team, *turn)?;
                let got = self.apply_guess_inner(word, *fallback)?;
                let Some(GameEvent::GuessMade {
                    identity: got_identity,
                    ..
                }) = self.history.last()
                else {
                    unreachable!()
                };
                if got != *outcome || got_identity != identity {
                    return Err(RulesError::ReplayDivergence(format!(
                        "guess {word:?} produced {got:?}/{got_identity:?}, log says {outcome:?}/{identity:?}"
                    )));
                }
                Ok(())
            }
            GameEvent::TurnStopped { team, turn } => {
                self.expect_cursor(*team, *turn)?;
                self.apply_stop()
            }
            GameEvent::InvalidClueAttempt {
                attempt,
                raw,
                reason,
                ..
            } => self.record_invalid_clue(*attempt, raw, reason.clone()),
            GameEvent::InvalidGuessAttempt {
                attempt,
                raw,
                reason,
                ..
            } => self.record_invalid_guess(*attempt, raw, reason.clone()),
            GameEvent::InvalidContinueAttempt { attempt, raw, .. } => {
                self.record_invalid_continue(*attempt, raw)
            }
        }
    }

    fn expect_cursor(&self, team: Team, turn: u32) -> Result<(), RulesError> {
        if team != self.active_team || turn != self.turn_index {
            return Err(RulesError::ReplayDivergence(format!(
                "event for {team} turn {turn}, state at {} turn {}",
                self.active_team, self.turn_index
            )));
        }
        Ok(())
    }

    fn expect_phase(&self, phase: Phase) -> Result<(), RulesError> {
        if self.is_finished() || self.phase != phase {
            return Err(RulesError::InvalidPhase {
                expected: phase,
                found: self.phase,
                finished: self.is_finished(),
            });
        }
        Ok(())
    }

    fn pass_turn(&mut self) {
        self.active_team = match self.mode {
            GameMode::SingleTeam => Team::Red,
            GameMode::TwoTeams => self.active_team.other(),
        };
        self.turn_index += 1;
        self.phase = Phase::AwaitingClue;
        self.current_clue = None;
        self.guesses_this_turn = 0;
        self.unlimited_guesses = false;
    }

    fn finish(&mut self, winner: Option<Team>, reason: EndReason) {
        self.status = GameStatus::Finished { winner, reason };
    }
}

/// Reconstructs a game by replaying events from a fresh board.
pub fn replay(board: Board, mode: GameMode, events: &[GameEvent]) -> Result<GameState, RulesError> {
    let mut state = GameState::new(board, mode);
    for event in events {
        state.apply_event(event)?;
    }
    Ok(state)
}
