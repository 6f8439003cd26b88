use std::cmp::Ordering;

use super::{Letter, Word};
use crate::error::WordError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Shorter words first, ties broken lexicographically by precedence.
    Shortlex,
    /// Lighter words first (sum of per-letter weights), ties broken
    /// lexicographically by precedence.
    WeightedShortlex { weights: Vec<u64> },
}

/// An admissible, well-founded total order on words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// `rank[letter]` is the letter's position in the precedence list.
    rank: Vec<u32>,
}

impl MonomialOrder {
    /// Shortlex with precedence equal to letter index order.
    pub fn shortlex(alphabet_size: usize) -> Self {
        MonomialOrder { kind: OrderKind::Shortlex, rank: (0..alphabet_size as u32).collect() }
    }

    /// `precedence` lists every letter once, smallest first.
    pub fn shortlex_with(precedence: &[Letter]) -> Result<Self, WordError> {
        Ok(MonomialOrder { kind: OrderKind::Shortlex, rank: ranks_from_precedence(precedence)? })
    }

    pub fn weighted_shortlex(precedence: &[Letter], weights: Vec<u64>) -> Result<Self, WordError> {
        let rank = ranks_from_precedence(precedence)?;
        if weights.len() != rank.len() {
            return Err(WordError::BadOrder(format!("{} weights for {} letters", weights.len(), rank.len())));
        }
        if weights.contains(&0) {
            return Err(WordError::BadOrder("weights must be positive".into()));
        }
        Ok(MonomialOrder { kind: OrderKind::WeightedShortlex { weights }, rank })
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn alphabet_size(&self) -> usize {
        self.rank.len()
    }

    /// Letters from smallest to largest.
    pub fn precedence(&self) -> Vec<Letter> {
        let mut letters: Vec<Letter> = (0..self.rank.len() as Letter).collect();
        letters.sort_by_key(|&l| self.rank[l as usize]);
        letters
    }

    pub fn weight(&self, word: &Word) -> u64 {
        match &self.kind {
            OrderKind::Shortlex => word.len() as u64,
            OrderKind::WeightedShortlex { weights } => word.letters().iter().map(|&l| weights[l as usize]).sum(),
        }
    }

    /// Largest weight of a single letter (1 for shortlex).
    pub fn max_letter_weight(&self) -> u64 {
        match &self.kind {
            OrderKind::Shortlex => 1,
            OrderKind::WeightedShortlex { weights } => weights.iter().copied().max().unwrap_or(1),
        }
    }

    pub fn min_letter_weight(&self) -> u64 {
        match &self.kind {
            OrderKind::Shortlex => 1,
            OrderKind::WeightedShortlex { weights } => weights.iter().copied().min().unwrap_or(1),
        }
    }

    /// Compares two words whose letters are known to be in range.
    pub fn compare(&self, w1: &Word, w2: &Word) -> Ordering {
        let primary = match &self.kind {
            OrderKind::Shortlex => w1.len().cmp(&w2.len()),
            OrderKind::WeightedShortlex { .. } => self.weight(w1).cmp(&self.weight(w2)),
        };
        primary.then_with(|| {
            let r1 = w1.letters().iter().map(|&l| self.rank[l as usize]);
            let r2 = w2.letters().iter().map(|&l| self.rank[l as usize]);
            r1.cmp(r2)
        })
    }

    pub fn try_compare(&self, w1: &Word, w2: &Word) -> Result<Ordering, WordError> {
        for w in [w1, w2] {
            if let Some(&l) = w.letters().iter().find(|&&l| l as usize >= self.rank.len()) {
                return Err(WordError::LetterOutOfRange { letter: l, size: self.rank.len() });
            }
        }
        Ok(self.compare(w1, w2))
    }

    pub fn greater(&self, w1: &Word, w2: &Word) -> bool {
        self.compare(w1, w2) == Ordering::Greater
    }

    pub fn sort(&self, words: &mut [Word]) {
        words.sort_by(|a, b| self.compare(a, b));
    }
}

fn ranks_from_precedence(precedence: &[Letter]) -> Result<Vec<u32>, WordError> {
    let n = precedence.len();
    if n == 0 {
        return Err(WordError::BadOrder("empty precedence".into()));
    }
    let mut rank = vec![u32::MAX; n];
    for (pos, &l) in precedence.iter().enumerate() {
        let slot = rank.get_mut(l as usize).ok_or(WordError::LetterOutOfRange { letter: l, size: n })?;
        if *slot != u32::MAX {
            return Err(WordError::BadOrder(format!("letter {l} listed twice")));
        }
        *slot = pos as u32;
    }
    Ok(rank)
}
