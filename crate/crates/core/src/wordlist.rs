//! Wordlist files: one word per line, UTF-8, `#` starts a comment line.

use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum WordlistError {
    #[error("cannot read wordlist {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("wordlist {path} line {line}: {word:?} is not a single word")]
    NotAWord {
        path: String,
        line: usize,
        word: String,
    },
}

/// The 400-word pool shipped with the crate.
pub const STANDARD_POOL: &str = include_str!("../data/wordlist.txt");

/// Parses wordlist text. Words are lowercased; duplicates keep the first
/// occurrence; blank lines and `#` comments are skipped.
pub fn parse_wordlist(text: &str, path: &str) -> Result<Vec<String>, WordlistError> {
    let mut words = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.chars().any(char::is_whitespace) {
            return Err(WordlistError::NotAWord {
                path: path.to_string(),
                line: idx + 1,
                word: line.to_string(),
            });
        }
        let word = line.to_lowercase();
        if seen.insert(word.clone()) {
            words.push(word);
        }
    }
    Ok(words)
}

/// Loads a wordlist file.
pub fn load_wordlist(path: &Path) -> Result<Vec<String>, WordlistError> {
    let text = std::fs::read_to_string(path).map_err(|source| WordlistError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_wordlist(&text, &path.display().to_string())
}

/// The shipped standard pool, parsed.
pub fn standard_pool() -> Vec<String> {
    parse_wordlist(STANDARD_POOL, "<builtin>").expect("shipped wordlist is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_blanks_and_case() {
        let words = parse_wordlist("# header\nApple\n\nBANANA\napple\n", "t").unwrap();
        assert_eq!(words, vec!["apple", "banana"]);
    }

    #[test]
    fn rejects_multiword_lines() {
        let err = parse_wordlist("ice cream\n", "t").unwrap_err();
        assert!(matches!(err, WordlistError::NotAWord { line: 1, .. }));
    }

    #[test]
    fn standard_pool_is_400_unique_single_tokens() {
        let pool = standard_pool();
        assert_eq!(pool.len(), 400);
        let unique: std::collections::HashSet<_> = pool.iter().collect();
        assert_eq!(unique.len(), 400);
        assert!(pool
            .iter()
            .all(|w| !w.is_empty() && w.chars().all(|c| c.is_ascii_lowercase())));
    }
}
