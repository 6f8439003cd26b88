//! Fixed inputs shared by the benchmarks.

use kbgb_core::{Alphabet, Mode, MonomialOrder, RewriteSystem, Word};

/// Builds a shortlex system over single-letter generators.
pub fn system(letters: &str, mode: Mode, rules: &[(&str, &str)]) -> RewriteSystem {
    let alphabet = Alphabet::new(letters.chars().map(String::from)).unwrap();
    let parse = |s: &str| alphabet.parse_word(s).unwrap();
    let rules: Vec<(Word, Word)> = rules.iter().map(|(l, r)| (parse(l), parse(r))).collect();
    RewriteSystem::with_rules(alphabet.clone(), MonomialOrder::shortlex(letters.len()), mode, rules).unwrap()
}

/// The symmetric group on three points as a monoid.
pub fn s3() -> RewriteSystem {
    system("ab", Mode::Monoid, &[("aa", "1"), ("bbb", "1"), ("abab", "1")])
}

pub fn aba() -> RewriteSystem {
    system("ab", Mode::Semigroup, &[("aba", "b"), ("bb", "a")])
}

pub fn commute3() -> RewriteSystem {
    system("abc", Mode::Semigroup, &[("ba", "ab"), ("ca", "ac"), ("cb", "bc")])
}

/// Positive braid monoid on three strands; completion does not terminate.
pub fn braid() -> RewriteSystem {
    system("ab", Mode::Monoid, &[("bab", "aba")])
}

/// Every word over two letters of length 1 to `max_len`, in length order.
pub fn short_words(max_len: usize) -> Vec<Word> {
    kbgb_core::words::all_words(2, 1..=max_len)
}
