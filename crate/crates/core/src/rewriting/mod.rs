//! String rewriting systems and Knuth-Bendix completion.

mod completion;
mod critical;

use std::cmp::Ordering;

pub use completion::{render_pair, KbOutcome, KbPassRecord, KbTrace};
pub use critical::{CriticalPair, Disposition, KbPass};

use crate::error::RewriteError;
use crate::words::{Alphabet, Mode, MonomialOrder, Word};

/// Hard cap on single steps in one normal-form computation. Reaching it
/// means the ordering is not well-founded on the words involved.
pub const MAX_REDUCTION_STEPS: usize = 1_000_000;

/// An oriented rule `lhs -> rhs` with `lhs > rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Word,
}

impl Rule {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Rule { lhs, rhs }
    }

    pub fn longest_side(&self) -> usize {
        self.lhs.len().max(self.rhs.len())
    }
}

/// Where a single reduction step applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Redex {
    pub position: usize,
    pub rule: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    order: MonomialOrder,
    mode: Mode,
    rules: Vec<Rule>,
}

impl RewriteSystem {
    pub fn new(alphabet: Alphabet, order: MonomialOrder, mode: Mode) -> Result<Self, RewriteError> {
        if order.alphabet_size() != alphabet.len() {
            return Err(crate::error::WordError::BadOrder(format!(
                "order covers {} letters, alphabet has {}",
                order.alphabet_size(),
                alphabet.len()
            ))
            .into());
        }
        Ok(RewriteSystem { alphabet, order, mode, rules: Vec::new() })
    }

    /// Builds a system from already-oriented rules, validating each.
    pub fn with_rules<I>(alphabet: Alphabet, order: MonomialOrder, mode: Mode, rules: I) -> Result<Self, RewriteError>
    where
        I: IntoIterator<Item = (Word, Word)>,
    {
        let mut system = RewriteSystem::new(alphabet, order, mode)?;
        for (lhs, rhs) in rules {
            system.add_rule(lhs, rhs)?;
        }
        Ok(system)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn longest_word(&self) -> usize {
        self.rules.iter().map(Rule::longest_side).max().unwrap_or(0)
    }

    fn validate(&self, lhs: &Word, rhs: &Word) -> Result<(), RewriteError> {
        self.alphabet.check(lhs)?;
        self.alphabet.check(rhs)?;
        if lhs.is_empty() || (rhs.is_empty() && !self.mode.allows_empty()) {
            return Err(RewriteError::EmptySide);
        }
        if self.order.compare(lhs, rhs) != Ordering::Greater {
            return Err(RewriteError::Misoriented { lhs: self.alphabet.render(lhs), rhs: self.alphabet.render(rhs) });
        }
        Ok(())
    }

    /// Appends `lhs -> rhs` unless already present. Returns whether the rule
    /// was new.
    pub fn add_rule(&mut self, lhs: Word, rhs: Word) -> Result<bool, RewriteError> {
        self.validate(&lhs, &rhs)?;
        let rule = Rule { lhs, rhs };
        if self.rules.contains(&rule) {
            return Ok(false);
        }
        self.rules.push(rule);
        Ok(true)
    }

    /// Adds the equation `w1 = w2` oriented by the order. Equal words add
    /// nothing.
    pub fn add_equation(&mut self, w1: Word, w2: Word) -> Result<bool, RewriteError> {
        match self.order.compare(&w1, &w2) {
            Ordering::Greater => self.add_rule(w1, w2),
            Ordering::Less => self.add_rule(w2, w1),
            Ordering::Equal => Ok(false),
        }
    }

    /// The redex chosen for one step: leftmost occurrence, lowest rule index
    /// among rules matching there.
    pub fn find_redex(&self, w: &Word) -> Option<Redex> {
        let letters = w.letters();
        (0..letters.len()).find_map(|position| {
            self.rules
                .iter()
                .position(|r| letters[position..].starts_with(r.lhs.letters()))
                .map(|rule| Redex { position, rule })
        })
    }

    pub fn apply(&self, w: &Word, redex: Redex) -> Word {
        let rule = &self.rules[redex.rule];
        w.splice(redex.position, rule.lhs.len(), &rule.rhs)
    }

    /// One rewriting step `u·l·v -> u·r·v`, or `None` if `w` is irreducible.
    pub fn reduce_once(&self, w: &Word) -> Option<Word> {
        self.find_redex(w).map(|redex| self.apply(w, redex))
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    pub fn normal_form(&self, w: &Word) -> Result<Word, RewriteError> {
        let mut current = w.clone();
        for _ in 0..MAX_REDUCTION_STEPS {
            match self.reduce_once(&current) {
                Some(next) => current = next,
                None => return Ok(current),
            }
        }
        Err(RewriteError::StepBudget(MAX_REDUCTION_STEPS))
    }

    /// Decides `w1 =_R w2`. Only meaningful for a complete system.
    pub fn words_equal(&self, w1: &Word, w2: &Word) -> Result<bool, RewriteError> {
        Ok(self.normal_form(w1)? == self.normal_form(w2)?)
    }

    /// All irreducible words up to `max_len` letters (the empty word included
    /// in monoid mode), sorted by the order.
    pub fn enumerate_normal_forms(&self, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        if self.mode.allows_empty() {
            out.push(Word::empty());
        }
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for letter in 0..self.alphabet.len() as u32 {
                    let candidate = w.concat(&Word::from(vec![letter]));
                    // the prefix is irreducible, so only suffix occurrences matter
                    if !self.rules.iter().any(|r| candidate.ends_with(&r.lhs)) {
                        next.push(candidate);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        self.order.sort(&mut out);
        out
    }

    /// True iff every critical pair resolves.
    pub fn is_locally_confluent(&self) -> Result<bool, RewriteError> {
        Ok(self.critical_pairs()?.iter().all(|p| p.disposition == Disposition::Resolved))
    }

    /// Drops rules whose left side is reducible by another rule and
    /// normalizes the remaining right sides. Intended for complete systems;
    /// completion itself never calls this.
    pub fn interreduce(&self) -> Result<RewriteSystem, RewriteError> {
        let keep: Vec<Rule> = self
            .rules
            .iter()
            .enumerate()
            .filter(|(i, rule)| {
                !self
                    .rules
                    .iter()
                    .enumerate()
                    .any(|(j, other)| j != *i && rule.lhs.contains(&other.lhs) && (other.lhs != rule.lhs || j < *i))
            })
            .map(|(_, r)| r.clone())
            .collect();
        let mut reduced = RewriteSystem { rules: keep.clone(), ..self.clone() };
        for (i, rule) in keep.iter().enumerate() {
            let rhs = reduced.normal_form(&rule.rhs)?;
            reduced.rules[i].rhs = rhs;
        }
        let mut out = RewriteSystem { rules: Vec::new(), ..self.clone() };
        for rule in reduced.rules {
            out.add_rule(rule.lhs, rule.rhs)?;
        }
        Ok(out)
    }

    pub fn render_rule(&self, rule: &Rule) -> String {
        format!("{} -> {}", self.alphabet.render(&rule.lhs), self.alphabet.render(&rule.rhs))
    }

    /// Same rules regardless of order of insertion.
    pub fn same_rule_set(&self, other: &RewriteSystem) -> bool {
        let a: std::collections::HashSet<&Rule> = self.rules.iter().collect();
        let b: std::collections::HashSet<&Rule> = other.rules.iter().collect();
        a == b
    }
}
