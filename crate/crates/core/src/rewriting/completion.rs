use std::fmt::Write as _;

use super::{CriticalPair, Disposition, RewriteSystem, Rule};
use crate::error::RewriteError;
use crate::limits::{CompletionLimits, LimitKind};
use crate::words::Alphabet;

#[derive(Clone, Debug)]
pub struct KbPassRecord {
    /// 1-based pass number.
    pub pass: usize,
    /// Number of rules in the system the pass ran on.
    pub input_rules: usize,
    pub pairs: Vec<CriticalPair>,
    pub added: Vec<Rule>,
}

#[derive(Clone, Debug, Default)]
pub struct KbTrace {
    pub passes: Vec<KbPassRecord>,
}

#[derive(Clone, Debug)]
pub enum KbOutcome {
    /// Every critical pair of `system` resolves.
    Complete { system: RewriteSystem, trace: KbTrace },
    /// `system` is the last system produced before the limit tripped.
    LimitExceeded { system: RewriteSystem, trace: KbTrace, limit: LimitKind },
}

impl KbOutcome {
    pub fn system(&self) -> &RewriteSystem {
        match self {
            KbOutcome::Complete { system, .. } | KbOutcome::LimitExceeded { system, .. } => system,
        }
    }

    pub fn trace(&self) -> &KbTrace {
        match self {
            KbOutcome::Complete { trace, .. } | KbOutcome::LimitExceeded { trace, .. } => trace,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, KbOutcome::Complete { .. })
    }
}

impl RewriteSystem {
    /// Runs passes until one adds no rule, or a limit trips.
    pub fn knuth_bendix(&self, limits: &CompletionLimits) -> Result<KbOutcome, RewriteError> {
        let mut current = self.clone();
        let mut trace = KbTrace::default();
        loop {
            let pass = trace.passes.len() + 1;
            if pass > limits.max_passes {
                return Ok(KbOutcome::LimitExceeded { system: current, trace, limit: LimitKind::Passes });
            }
            let step = current.kb_pass()?;
            let done = step.added.is_empty();
            trace.passes.push(KbPassRecord { pass, input_rules: current.len(), pairs: step.pairs, added: step.added });
            if done {
                return Ok(KbOutcome::Complete { system: current, trace });
            }
            current = step.next;
            if let Some(limit) = limits.check_growth(current.len(), current.longest_word()) {
                return Ok(KbOutcome::LimitExceeded { system: current, trace, limit });
            }
        }
    }
}

/// One trace line per critical pair.
pub fn render_pair(alphabet: &Alphabet, pass: usize, pair: &CriticalPair) -> String {
    let r = |w| alphabet.render(w);
    let disp = match &pair.disposition {
        Disposition::Resolved => "Resolved".to_string(),
        Disposition::NewRule(rule) => format!("Added:{}->{}", r(&rule.lhs), r(&rule.rhs)),
    };
    format!(
        "pass={} rules=({},{}) kind={} raw=({},{}) reduced=({},{}) disp={}",
        pass,
        pair.first,
        pair.second,
        pair.overlap.kind,
        r(&pair.raw.0),
        r(&pair.raw.1),
        r(&pair.reduced.0),
        r(&pair.reduced.1),
        disp
    )
}

impl KbPassRecord {
    pub fn render(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        for pair in &self.pairs {
            let _ = writeln!(out, "{}", render_pair(alphabet, self.pass, pair));
        }
        out
    }
}

impl KbTrace {
    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.passes.iter().map(|p| p.render(alphabet)).collect()
    }

    pub fn pass_count(&self) -> usize {
        self.passes.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewriting::tests::{reachable_normal_forms, system, w};
    use crate::words::all_words;

    /// Unique normal forms for every word up to `len` letters, by exhaustive
    /// exploration of all reduction sequences.
    fn confluent_up_to(r: &RewriteSystem, len: usize) -> bool {
        all_words(r.alphabet().len(), 1..=len).iter().all(|word| reachable_normal_forms(r, word).len() == 1)
    }

    #[test]
    fn commutation_completes_immediately() {
        let r = system(&[("ba", "ab")]);
        let out = r.knuth_bendix(&CompletionLimits::default()).unwrap();
        assert!(out.is_complete());
        assert_eq!(out.trace().pass_count(), 1);
        assert_eq!(out.system(), &r);
        assert!(confluent_up_to(out.system(), 6));
    }

    #[test]
    fn idempotent_completes() {
        let r = system(&[("aa", "a")]);
        let out = r.knuth_bendix(&CompletionLimits::default()).unwrap();
        assert!(out.is_complete());
        assert_eq!(out.system(), &r);
        assert!(confluent_up_to(out.system(), 6));
    }

    #[test]
    fn empty_system_is_complete() {
        let out = system(&[]).knuth_bendix(&CompletionLimits::default()).unwrap();
        assert!(out.is_complete());
        assert!(out.system().is_empty());
    }

    #[test]
    fn aba_to_b_completes_to_confluent_system() {
        let r = system(&[("aba", "b")]);
        let out = r.knuth_bendix(&CompletionLimits::default()).unwrap();
        assert!(out.is_complete(), "{:?}", out.trace().pass_count());
        assert!(out.system().rules().contains(&Rule::new(w("bba"), w("abb"))));
        assert!(confluent_up_to(out.system(), 6));
    }

    #[test]
    fn zero_passes_trips_immediately() {
        let out = system(&[("aba", "b")]).knuth_bendix(&CompletionLimits::new(0, 10, 10)).unwrap();
        assert!(matches!(out, KbOutcome::LimitExceeded { limit: LimitKind::Passes, .. }));
        assert_eq!(out.trace().pass_count(), 0);
    }

    #[test]
    fn rule_limit_trips_after_growth() {
        let out = system(&[("aba", "b")]).knuth_bendix(&CompletionLimits::new(10, 1, 10)).unwrap();
        match out {
            KbOutcome::LimitExceeded { limit, trace, system } => {
                assert_eq!(limit, LimitKind::Rules);
                assert_eq!(trace.pass_count(), 1);
                assert_eq!(system.len(), 2);
            }
            other => panic!("expected limit, got {other:?}"),
        }
    }

    #[test]
    fn trace_line_format() {
        let r = system(&[("aba", "b")]);
        let out = r.knuth_bendix(&CompletionLimits::new(1, 100, 100)).unwrap();
        let text = out.trace().render(r.alphabet());
        let first = text.lines().next().unwrap();
        assert_eq!(
            first,
            "pass=1 rules=(0,0) kind=SuffixPrefix raw=(b.b.a,a.b.b) reduced=(b.b.a,a.b.b) disp=Added:b.b.a->a.b.b"
        );
    }
}
