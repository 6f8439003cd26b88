//! The four ways two left-hand sides can interact.
//!
//! For a pair of words `l1`, `l2` the configurations are
//!
//! | kind            | equation          | `left` | `right` |
//! |-----------------|-------------------|--------|---------|
//! | `Containment12` | `l1 = u2·l2·v2`   | `u2`   | `v2`    |
//! | `Containment21` | `u1·l1·v1 = l2`   | `u1`   | `v1`    |
//! | `SuffixPrefix`  | `l1·v1 = u2·l2`   | `u2`   | `v1`    |
//! | `PrefixSuffix`  | `u1·l1 = l2·v2`   | `u1`   | `v2`    |
//!
//! In every row `left` is the prefix of the superposition in front of the
//! later-starting word and `right` is the suffix behind the earlier-ending one.

use std::fmt;

use super::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MatchKind {
    Containment12,
    Containment21,
    SuffixPrefix,
    PrefixSuffix,
}

impl MatchKind {
    pub const ALL: [MatchKind; 4] =
        [MatchKind::Containment12, MatchKind::Containment21, MatchKind::SuffixPrefix, MatchKind::PrefixSuffix];

    pub fn name(self) -> &'static str {
        match self {
            MatchKind::Containment12 => "Containment12",
            MatchKind::Containment21 => "Containment21",
            MatchKind::SuffixPrefix => "SuffixPrefix",
            MatchKind::PrefixSuffix => "PrefixSuffix",
        }
    }

    /// The kind seen from the other side when `l1` and `l2` swap roles.
    pub fn mirrored(self) -> MatchKind {
        match self {
            MatchKind::Containment12 => MatchKind::Containment21,
            MatchKind::Containment21 => MatchKind::Containment12,
            MatchKind::SuffixPrefix => MatchKind::PrefixSuffix,
            MatchKind::PrefixSuffix => MatchKind::SuffixPrefix,
        }
    }
}

impl fmt::Display for MatchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OverlapMatch {
    pub kind: MatchKind,
    pub left: Word,
    pub right: Word,
    /// Smallest word on which both left-hand sides occur as described.
    pub superposition: Word,
}

impl OverlapMatch {
    /// Checks the kind's defining equation against `l1`, `l2`.
    pub fn holds_for(&self, l1: &Word, l2: &Word) -> bool {
        let s = &self.superposition;
        match self.kind {
            MatchKind::Containment12 => l1 == s && l2.sandwich(&self.left, &self.right) == *s,
            MatchKind::Containment21 => l2 == s && l1.sandwich(&self.left, &self.right) == *s,
            MatchKind::SuffixPrefix => l1.concat(&self.right) == *s && self.left.concat(l2) == *s,
            MatchKind::PrefixSuffix => self.left.concat(l1) == *s && l2.concat(&self.right) == *s,
        }
    }

    /// Placements `((a1, b1), (a2, b2))` with
    /// `a1·l1·b1 = superposition = a2·l2·b2`.
    pub fn contexts(&self) -> ((Word, Word), (Word, Word)) {
        let e = Word::empty;
        let (u, v) = (self.left.clone(), self.right.clone());
        match self.kind {
            MatchKind::Containment12 => ((e(), e()), (u, v)),
            MatchKind::Containment21 => ((u, v), (e(), e())),
            MatchKind::SuffixPrefix => ((e(), v), (u, e())),
            MatchKind::PrefixSuffix => ((u, e()), (e(), v)),
        }
    }

    /// Key used to align matches across engines: kind plus witness lengths.
    pub fn shape(&self) -> (MatchKind, usize, usize) {
        (self.kind, self.left.len(), self.right.len())
    }
}

/// All proper matches of `l1` against `l2`, treating them as coming from the
/// same source: the trivial containment `l1 = l2` with empty witnesses is
/// excluded.
pub fn find_matches(l1: &Word, l2: &Word) -> Vec<OverlapMatch> {
    find_matches_between(l1, l2, false)
}

/// As [`find_matches`], but when `distinct_sources` is set and the two words
/// are identical, the boundary containment with empty witnesses is reported
/// as `Containment12`.
///
/// Order: by kind, then by `(|left|, |right|)`.
pub fn find_matches_between(l1: &Word, l2: &Word, distinct_sources: bool) -> Vec<OverlapMatch> {
    assert!(!l1.is_empty() && !l2.is_empty(), "matches are only defined for nonempty words");
    let mut out = Vec::new();

    // l1 = u2·l2·v2
    for pos in l1.positions_of(l2) {
        let right = l1.slice(pos + l2.len()..l1.len());
        if pos == 0 && right.is_empty() && !distinct_sources {
            continue;
        }
        out.push(OverlapMatch {
            kind: MatchKind::Containment12,
            left: l1.slice(0..pos),
            right,
            superposition: l1.clone(),
        });
    }

    // u1·l1·v1 = l2, strictly: equal words are covered above
    if l1.len() < l2.len() {
        for pos in l2.positions_of(l1) {
            out.push(OverlapMatch {
                kind: MatchKind::Containment21,
                left: l2.slice(0..pos),
                right: l2.slice(pos + l1.len()..l2.len()),
                superposition: l2.clone(),
            });
        }
    }

    let max_shared = l1.len().min(l2.len());
    // l1·v1 = u2·l2, shared segment of length k; larger k gives shorter u2
    let mut suffix_prefix: Vec<OverlapMatch> = (1..max_shared)
        .rev()
        .filter(|&k| l1.letters()[l1.len() - k..] == l2.letters()[..k])
        .map(|k| OverlapMatch {
            kind: MatchKind::SuffixPrefix,
            left: l1.slice(0..l1.len() - k),
            right: l2.slice(k..l2.len()),
            superposition: l1.concat(&l2.slice(k..l2.len())),
        })
        .collect();
    suffix_prefix.sort_by_key(|m| (m.left.len(), m.right.len()));
    out.extend(suffix_prefix);

    // u1·l1 = l2·v2
    let mut prefix_suffix: Vec<OverlapMatch> = (1..max_shared)
        .rev()
        .filter(|&k| l1.letters()[..k] == l2.letters()[l2.len() - k..])
        .map(|k| OverlapMatch {
            kind: MatchKind::PrefixSuffix,
            left: l2.slice(0..l2.len() - k),
            right: l1.slice(k..l1.len()),
            superposition: l2.concat(&l1.slice(k..l1.len())),
        })
        .collect();
    prefix_suffix.sort_by_key(|m| (m.left.len(), m.right.len()));
    out.extend(prefix_suffix);

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{all_words, Alphabet};
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Alphabet::new(["a", "b"]).unwrap().parse_word(s).unwrap()
    }

    /// Brute force: every candidate superposition up to |l1|+|l2|-1 letters,
    /// every factorization, both defining equations.
    fn oracle(l1: &Word, l2: &Word, alphabet: usize) -> Vec<OverlapMatch> {
        let mut found = Vec::new();
        let max = l1.len() + l2.len() - 1;
        for s in all_words(alphabet, 1..=max) {
            for i in 0..=s.len() {
                for j in i..=s.len() {
                    let left = s.slice(0..i);
                    let mid = s.slice(i..j);
                    let right = s.slice(j..s.len());
                    if s == *l1 && mid == *l2 && !(left.is_empty() && right.is_empty()) {
                        found.push(OverlapMatch {
                            kind: MatchKind::Containment12,
                            left: left.clone(),
                            right: right.clone(),
                            superposition: s.clone(),
                        });
                    }
                    if s == *l2 && mid == *l1 && l1.len() < l2.len() {
                        found.push(OverlapMatch {
                            kind: MatchKind::Containment21,
                            left: left.clone(),
                            right: right.clone(),
                            superposition: s.clone(),
                        });
                    }
                }
                // SuffixPrefix / PrefixSuffix: s = l1·v1 = u2·l2 with a proper shared part
                let proper = s.len() > l1.len() && s.len() > l2.len();
                if !proper {
                    continue;
                }
                let left = s.slice(0..i);
                if s.starts_with(l1) && s.ends_with(l2) && left.concat(l2) == s && i > 0 {
                    let right = s.slice(l1.len()..s.len());
                    if l1.concat(&right) == s {
                        found.push(OverlapMatch {
                            kind: MatchKind::SuffixPrefix,
                            left: left.clone(),
                            right,
                            superposition: s.clone(),
                        });
                    }
                }
                if s.starts_with(l2) && s.ends_with(l1) && left.concat(l1) == s && i > 0 {
                    let right = s.slice(l2.len()..s.len());
                    if l2.concat(&right) == s {
                        found.push(OverlapMatch {
                            kind: MatchKind::PrefixSuffix,
                            left,
                            right,
                            superposition: s.clone(),
                        });
                    }
                }
            }
        }
        found.sort_by_key(|m| (m.kind, m.left.len(), m.right.len()));
        found
    }

    #[test]
    fn containment_example() {
        let m = find_matches(&w("abba"), &w("bb"));
        assert_eq!(
            m,
            vec![OverlapMatch {
                kind: MatchKind::Containment12,
                left: w("a"),
                right: w("a"),
                superposition: w("abba"),
            }]
        );
    }

    #[test]
    fn self_overlap_example() {
        let m = find_matches(&w("aba"), &w("aba"));
        assert_eq!(m.len(), 2);
        assert_eq!(m[0].kind, MatchKind::SuffixPrefix);
        assert_eq!(m[0].right, w("ba"));
        assert_eq!(m[0].left, w("ab"));
        assert_eq!(m[0].superposition, w("ababa"));
        assert_eq!(m[1].kind, MatchKind::PrefixSuffix);
        assert_eq!(m[1].superposition, w("ababa"));
        assert_eq!(m, oracle(&w("aba"), &w("aba"), 2));
    }

    #[test]
    fn no_self_overlap() {
        assert!(find_matches(&w("ba"), &w("ba")).is_empty());
    }

    #[test]
    fn identical_lhs_from_distinct_rules() {
        let m = find_matches_between(&w("ba"), &w("ba"), true);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].kind, MatchKind::Containment12);
        assert!(m[0].left.is_empty() && m[0].right.is_empty());
    }

    #[test]
    fn overlaps_of_different_lengths() {
        // ab·b = a·bb and a·ab? no: prefix of "ab" vs suffix of "bb"
        let m = find_matches(&w("ab"), &w("bb"));
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].kind, MatchKind::SuffixPrefix);
        assert_eq!(m[0].superposition, w("abb"));
        assert_eq!(m, oracle(&w("ab"), &w("bb"), 2));
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        prop::collection::vec(0u32..2, 1..=4).prop_map(Word::from)
    }

    proptest! {
        #[test]
        fn agrees_with_oracle(l1 in word_strategy(), l2 in word_strategy()) {
            prop_assert_eq!(find_matches(&l1, &l2), oracle(&l1, &l2, 2));
        }

        #[test]
        fn every_match_satisfies_its_equation(l1 in word_strategy(), l2 in word_strategy()) {
            for m in find_matches_between(&l1, &l2, true) {
                prop_assert!(m.holds_for(&l1, &l2));
                let ((a1, b1), (a2, b2)) = m.contexts();
                prop_assert_eq!(l1.sandwich(&a1, &b1), m.superposition.clone());
                prop_assert_eq!(l2.sandwich(&a2, &b2), m.superposition.clone());
            }
        }

        #[test]
        fn mirror_symmetry(l1 in word_strategy(), l2 in word_strategy()) {
            let forward = find_matches(&l1, &l2);
            let backward = find_matches(&l2, &l1);
            for m in &forward {
                if matches!(m.kind, MatchKind::SuffixPrefix | MatchKind::PrefixSuffix) {
                    let mirrored = OverlapMatch {
                        kind: m.kind.mirrored(),
                        left: m.left.clone(),
                        right: m.right.clone(),
                        superposition: m.superposition.clone(),
                    };
                    prop_assert!(backward.contains(&mirrored));
                }
            }
            let count = |v: &[OverlapMatch], k| v.iter().filter(|m| m.kind == k).count();
            prop_assert_eq!(count(&forward, MatchKind::SuffixPrefix), count(&backward, MatchKind::PrefixSuffix));
        }
    }
}
