//! Codenames benchmark harness: a full-rules engine for the word game, a
//! codemaster/guesser agent protocol with retry and fallback handling,
//! word-vector and chat-endpoint agents, and a seeded tournament runner with
//! the evaluation metrics.

pub mod game;
pub mod rng;
pub mod wordlist;
