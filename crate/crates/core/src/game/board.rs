//! Board construction: card identities and the seeded word draw.

use serde::{Deserialize, Serialize};

use crate::game::RulesError;
use crate::rng::SplitMix64;

/// Hidden identity of a board card.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    Red,
    Blue,
    Civilian,
    Assassin,
}

/// One of the two playing teams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Team {
    Red,
    Blue,
}

impl Team {
    pub fn other(self) -> Team {
        match self {
            Team::Red => Team::Blue,
            Team::Blue => Team::Red,
        }
    }

    pub fn identity(self) -> Identity {
        match self {
            Team::Red => Identity::Red,
            Team::Blue => Identity::Blue,
        }
    }
}

impl std::fmt::Display for Team {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Team::Red => write!(f, "red"),
            Team::Blue => write!(f, "blue"),
        }
    }
}

impl std::fmt::Display for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Identity::Red => write!(f, "red"),
            Identity::Blue => write!(f, "blue"),
            Identity::Civilian => write!(f, "civilian"),
            Identity::Assassin => write!(f, "assassin"),
        }
    }
}

/// A single word on the board together with its hidden identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordCard {
    pub word: String,
    pub identity: Identity,
    pub revealed: bool,
}

/// Standard board shape: 25 cards, red moves first and has the extra word.
pub const BOARD_SIZE: usize = 25;
pub const RED_WORDS: usize = 9;
pub const BLUE_WORDS: usize = 8;
pub const CIVILIAN_WORDS: usize = 7;

/// Ordered set of cards for one game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Board {
    cards: Vec<WordCard>,
}

impl Board {
    /// Builds a board from explicit cards. Any composition with at least one
    /// word per team and exactly one assassin is accepted, so tests can run
    /// reduced boards; [`generate_board`] always produces the standard 25.
    pub fn from_cards(cards: Vec<WordCard>) -> Result<Board, RulesError> {
        let mut seen = std::collections::HashSet::new();
        for card in &cards {
            if card.word.is_empty() || card.word.chars().any(char::is_whitespace) {
                return Err(RulesError::BadBoard(format!(
                    "board word {:?} must be a nonempty single token",
                    card.word
                )));
            }
            if card.word.to_lowercase() != card.word {
                return Err(RulesError::BadBoard(format!(
                    "board word {:?} must be lowercase",
                    card.word
                )));
            }
            if !seen.insert(card.word.clone()) {
                return Err(RulesError::BadBoard(format!(
                    "duplicate board word {:?}",
                    card.word
                )));
            }
        }
        let count = |id: Identity| cards.iter().filter(|c| c.identity == id).count();
        if count(Identity::Red) == 0 || count(Identity::Blue) == 0 {
            return Err(RulesError::BadBoard(
                "each team needs at least one word".into(),
            ));
        }
        if count(Identity::Assassin) != 1 {
            return Err(RulesError::BadBoard(
                "board needs exactly one assassin".into(),
            ));
        }
        Ok(Board { cards })
    }

    pub fn cards(&self) -> &[WordCard] {
        &self.cards
    }

    pub fn card(&self, index: usize) -> &WordCard {
        &self.cards[index]
    }

    /// Case-insensitive lookup by word.
    pub fn position_of(&self, word: &str) -> Option<usize> {
        let needle = word.to_lowercase();
        self.cards.iter().position(|c| c.word == needle)
    }

    pub(crate) fn reveal(&mut self, index: usize) {
        self.cards[index].revealed = true;
    }

    pub fn unrevealed_words(&self) -> Vec<&str> {
        self.cards
            .iter()
            .filter(|c| !c.revealed)
            .map(|c| c.word.as_str())
            .collect()
    }

    /// Unrevealed count for one identity.
    pub fn remaining(&self, identity: Identity) -> usize {
        self.cards
            .iter()
            .filter(|c| c.identity == identity && !c.revealed)
            .count()
    }

    pub fn revealed_count(&self) -> usize {
        self.cards.iter().filter(|c| c.revealed).count()
    }
}

/// Draws the standard 25-card board for a seed.
///
/// The derivation is fixed so any implementation can reproduce it:
/// 1. lowercase the wordlist, drop duplicates, sort lexicographically;
/// 2. Fisher-Yates shuffle with `SplitMix64(seed)` and keep the first 25;
/// 3. build the identity list (9 red, 8 blue, 7 civilian, 1 assassin) and
///    shuffle it with the same generator, continuing the stream;
/// 4. pair words and identities positionally; all cards start unrevealed.
pub fn generate_board(wordlist: &[String], seed: u64) -> Result<Board, RulesError> {
    let mut pool: Vec<String> = wordlist.iter().map(|w| w.to_lowercase()).collect();
    pool.sort();
    pool.dedup();
    if pool.len() < BOARD_SIZE {
        return Err(RulesError::WordlistTooSmall {
            needed: BOARD_SIZE,
            got: pool.len(),
        });
    }

    let mut rng = SplitMix64::new(seed);
    rng.shuffle(&mut pool);
    pool.truncate(BOARD_SIZE);

    let mut identities = Vec::with_capacity(BOARD_SIZE);
    identities.extend(std::iter::repeat(Identity::Red).take(RED_WORDS));
    identities.extend(std::iter::repeat(Identity::Blue).take(BLUE_WORDS));
    identities.extend(std::iter::repeat(Identity::Civilian).take(CIVILIAN_WORDS));
    identities.push(Identity::Assassin);
    rng.shuffle(&mut identities);

    let cards = pool
        .into_iter()
        .zip(identities)
        .map(|(word, identity)| WordCard {
            word,
            identity,
            revealed: false,
        })
        .collect();
    Board::from_cards(cards)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pool(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("word{i:03}")).collect()
    }

    #[test]
    fn standard_identity_counts() {
        let board = generate_board(&pool(60), 3).unwrap();
        assert_eq!(board.cards().len(), BOARD_SIZE);
        assert_eq!(board.remaining(Identity::Red), RED_WORDS);
        assert_eq!(board.remaining(Identity::Blue), BLUE_WORDS);
        assert_eq!(board.remaining(Identity::Civilian), CIVILIAN_WORDS);
        assert_eq!(board.remaining(Identity::Assassin), 1);
        assert!(board.cards().iter().all(|c| !c.revealed));
    }

    #[test]
    fn same_seed_same_board() {
        let words = pool(120);
        let a = generate_board(&words, 7).unwrap();
        let b = generate_board(&words, 7).unwrap();
        assert_eq!(a, b);
        let c = generate_board(&words, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn exact_25_word_list_uses_every_word() {
        let words = pool(25);
        let board = generate_board(&words, 999).unwrap();
        let mut on_board: Vec<&str> = board.cards().iter().map(|c| c.word.as_str()).collect();
        on_board.sort_unstable();
        let mut expected: Vec<&str> = words.iter().map(|s| s.as_str()).collect();
        expected.sort_unstable();
        assert_eq!(on_board, expected);
    }

    #[test]
    fn too_small_wordlist_is_rejected() {
        let err = generate_board(&pool(24), 0).unwrap_err();
        assert!(matches!(err, RulesError::WordlistTooSmall { got: 24, .. }));
        // Duplicates only count once.
        let mut dup = pool(24);
        dup.push("WORD000".into());
        let err = generate_board(&dup, 0).unwrap_err();
        assert!(matches!(err, RulesError::WordlistTooSmall { got: 24, .. }));
    }

    #[test]
    fn file_order_is_irrelevant() {
        let mut words = pool(40);
        let a = generate_board(&words, 5).unwrap();
        words.reverse();
        let b = generate_board(&words, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn custom_board_validation() {
        let card = |word: &str, identity| WordCard {
            word: word.into(),
            identity,
            revealed: false,
        };
        assert!(Board::from_cards(vec![
            card("ant", Identity::Red),
            card("bee", Identity::Blue),
            card("cow", Identity::Assassin),
        ])
        .is_ok());
        assert!(Board::from_cards(vec![
            card("ant", Identity::Red),
            card("ant", Identity::Blue),
            card("cow", Identity::Assassin),
        ])
        .is_err());
        assert!(Board::from_cards(vec![
            card("ant", Identity::Red),
            card("bee", Identity::Blue),
        ])
        .is_err());
    }
}
