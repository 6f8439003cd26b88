use std::fmt;

/// Resource caps for a completion run. Completion need not terminate, so
/// every run is bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CompletionLimits {
    pub max_passes: usize,
    pub max_rules: usize,
    pub max_word_length: usize,
}

impl Default for CompletionLimits {
    fn default() -> Self {
        CompletionLimits { max_passes: 50, max_rules: 10_000, max_word_length: 256 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LimitKind {
    Passes,
    Rules,
    WordLength,
}

impl LimitKind {
    pub fn name(self) -> &'static str {
        match self {
            LimitKind::Passes => "max_passes",
            LimitKind::Rules => "max_rules",
            LimitKind::WordLength => "max_word_length",
        }
    }
}

impl fmt::Display for LimitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl CompletionLimits {
    pub fn new(max_passes: usize, max_rules: usize, max_word_length: usize) -> Self {
        CompletionLimits { max_passes, max_rules, max_word_length }
    }

    /// Checks a system produced by a pass: its size and the length of its
    /// longest word. Both engines share this test so they trip identically.
    pub fn check_growth(&self, rule_count: usize, longest_word: usize) -> Option<LimitKind> {
        if rule_count > self.max_rules {
            Some(LimitKind::Rules)
        } else if longest_word > self.max_word_length {
            Some(LimitKind::WordLength)
        } else {
            None
        }
    }
}
