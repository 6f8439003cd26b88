use std::cmp::Ordering;

use super::{RewriteSystem, Rule};
use crate::error::RewriteError;
use crate::words::{find_matches_between, MatchKind, OverlapMatch, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Disposition {
    Resolved,
    NewRule(Rule),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    /// Index of the rule playing `l1 -> r1`.
    pub first: usize,
    /// Index of the rule playing `l2 -> r2`.
    pub second: usize,
    pub overlap: OverlapMatch,
    pub raw: (Word, Word),
    pub reduced: (Word, Word),
    pub disposition: Disposition,
}

/// Result of one completion pass.
#[derive(Clone, Debug)]
pub struct KbPass {
    pub next: RewriteSystem,
    pub pairs: Vec<CriticalPair>,
    /// Rules appended to the input system, in insertion order.
    pub added: Vec<Rule>,
}

/// The two words obtained by rewriting the superposition with each rule:
///
/// * `Containment12`: `(r1, u2·r2·v2)`
/// * `Containment21`: `(u1·r1·v1, r2)`
/// * `SuffixPrefix`:  `(r1·v1, u2·r2)`
/// * `PrefixSuffix`:  `(u1·r1, r2·v2)`
pub fn raw_pair(first: &Rule, second: &Rule, m: &OverlapMatch) -> (Word, Word) {
    let (u, v) = (&m.left, &m.right);
    match m.kind {
        MatchKind::Containment12 => (first.rhs.clone(), second.rhs.sandwich(u, v)),
        MatchKind::Containment21 => (first.rhs.sandwich(u, v), second.rhs.clone()),
        MatchKind::SuffixPrefix => (first.rhs.concat(v), u.concat(&second.rhs)),
        MatchKind::PrefixSuffix => (u.concat(&first.rhs), second.rhs.concat(v)),
    }
}

impl RewriteSystem {
    /// Every critical pair of the system, for all ordered rule index pairs
    /// `(i, j)` including `i == j`, reduced against this system.
    pub fn critical_pairs(&self) -> Result<Vec<CriticalPair>, RewriteError> {
        let mut out = Vec::new();
        for (i, first) in self.rules.iter().enumerate() {
            for (j, second) in self.rules.iter().enumerate() {
                for overlap in find_matches_between(&first.lhs, &second.lhs, i != j) {
                    let raw = raw_pair(first, second, &overlap);
                    let reduced = (self.normal_form(&raw.0)?, self.normal_form(&raw.1)?);
                    let disposition = match self.order.compare(&reduced.0, &reduced.1) {
                        Ordering::Equal => Disposition::Resolved,
                        Ordering::Greater => Disposition::NewRule(Rule::new(reduced.0.clone(), reduced.1.clone())),
                        Ordering::Less => Disposition::NewRule(Rule::new(reduced.1.clone(), reduced.0.clone())),
                    };
                    out.push(CriticalPair { first: i, second: j, overlap, raw, reduced, disposition });
                }
            }
        }
        Ok(out)
    }

    /// One completion pass: all critical pairs are computed and reduced
    /// against this system, then every unresolved pair is appended as a new
    /// rule. Existing rules are untouched.
    pub fn kb_pass(&self) -> Result<KbPass, RewriteError> {
        let pairs = self.critical_pairs()?;
        let mut next = self.clone();
        let mut added = Vec::new();
        for pair in &pairs {
            if let Disposition::NewRule(rule) = &pair.disposition {
                if next.add_rule(rule.lhs.clone(), rule.rhs.clone())? {
                    added.push(rule.clone());
                }
            }
        }
        Ok(KbPass { next, pairs, added })
    }
}
