use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::rules_to_basis;
use crate::error::CorrespondenceError;
use crate::limits::{CompletionLimits, LimitKind};
use crate::ncpoly::{render_record, Basis, Field, NcPolynomial, SPolyDisposition, SPolyRecord};
use crate::rewriting::{render_pair, CriticalPair, Disposition, RewriteSystem};
use crate::words::{MatchKind, Word};

/// Structural alignment key: both source indices, the match kind and the
/// witness lengths.
pub type PairKey = (usize, usize, MatchKind, usize, usize);

fn pair_key(first: usize, second: usize, shape: (MatchKind, usize, usize)) -> PairKey {
    (first, second, shape.0, shape.1, shape.2)
}

#[derive(Clone, Debug)]
pub struct LockstepPass {
    pub pass: usize,
    /// `R_{i-1}` and `F_{i-1}`, the systems this pass ran on.
    pub rules: RewriteSystem,
    pub basis: Basis,
    pub pairs: Vec<CriticalPair>,
    pub records: Vec<SPolyRecord>,
    /// Overlap sources and match sources coincide.
    pub sources_agree: bool,
    /// Keys whose critical pair and S-polynomial disagree.
    pub misaligned: Vec<PairKey>,
    /// Every raw and intermediate S-polynomial had at most two terms with
    /// coefficients ±1.
    pub binomial_shape: bool,
    /// The next basis is `{ l - r : (l, r) in R_next }`.
    pub next_sets_agree: bool,
    pub rules_added: usize,
    pub polys_added: usize,
}

impl LockstepPass {
    pub fn holds(&self) -> bool {
        self.sources_agree && self.misaligned.is_empty() && self.binomial_shape && self.next_sets_agree
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Both procedures reached their fixpoint at the same pass and agreed at
    /// every step.
    Corresponds,
    /// Both procedures tripped the same limit after the same pass, having
    /// agreed until then.
    LimitExceeded {
        pass: usize,
        limit: LimitKind,
    },
    Divergence {
        pass: usize,
        detail: String,
    },
}

#[derive(Clone, Debug)]
pub struct CorrespondenceReport {
    pub field: Field,
    pub passes: Vec<LockstepPass>,
    pub final_rules: RewriteSystem,
    pub final_basis: Basis,
    pub verdict: Verdict,
}

impl CorrespondenceReport {
    /// Interleaved trace lines of both engines per pass, a summary line per
    /// pass, then the verdict.
    pub fn render(&self) -> String {
        let alphabet = self.final_rules.alphabet();
        let mut out = String::new();
        for p in &self.passes {
            for pair in &p.pairs {
                let _ = writeln!(out, "{}", render_pair(alphabet, p.pass, pair));
            }
            for record in &p.records {
                let _ = writeln!(out, "{}", render_record(&p.basis, p.pass, record));
            }
            let _ = writeln!(
                out,
                "pass={} R={} F={} sources={} pairs={} binomial={} sets={} added=({},{})",
                p.pass,
                p.rules.len(),
                p.basis.len(),
                ok(p.sources_agree),
                ok(p.misaligned.is_empty()),
                ok(p.binomial_shape),
                ok(p.next_sets_agree),
                p.rules_added,
                p.polys_added
            );
        }
        let _ = writeln!(out, "{}", self.verdict_line());
        out
    }

    pub fn verdict_line(&self) -> String {
        match &self.verdict {
            Verdict::Corresponds => format!("VERDICT: Corresponds passes={}", self.passes.len()),
            Verdict::LimitExceeded { pass, limit } => {
                format!("VERDICT: LimitExceeded pass={pass} limit={limit} (both engines)")
            }
            Verdict::Divergence { pass, detail } => format!("VERDICT: Divergence pass={pass} {detail}"),
        }
    }
}

fn ok(flag: bool) -> &'static str {
    if flag {
        "ok"
    } else {
        "FAIL"
    }
}

fn word_difference(field: Field, plus: &Word, minus: &Word) -> NcPolynomial {
    NcPolynomial::monomial(field, plus.clone()).sub(&NcPolynomial::monomial(field, minus.clone()))
}

fn binomial_shaped(p: &NcPolynomial) -> bool {
    p.len() <= 2 && p.terms().all(|(_, c)| c.is_unit_sign())
}

/// Whether a critical pair and an S-polynomial describe the same step:
/// raw S-polynomial = second - first of the raw pair, reduced likewise,
/// resolution matches reduction to zero, and the added polynomial is the
/// added rule.
fn aligned(field: Field, pair: &CriticalPair, record: &SPolyRecord) -> bool {
    if word_difference(field, &pair.raw.1, &pair.raw.0) != record.raw {
        return false;
    }
    if word_difference(field, &pair.reduced.1, &pair.reduced.0) != record.reduced {
        return false;
    }
    match (&pair.disposition, &record.disposition) {
        (Disposition::Resolved, SPolyDisposition::ReducedToZero) => true,
        (Disposition::NewRule(rule), SPolyDisposition::NewPoly(p)) => {
            *p == NcPolynomial::binomial(field, rule.lhs.clone(), rule.rhs.clone())
        }
        _ => false,
    }
}

/// Runs Knuth-Bendix passes on `system` and Buchberger passes on its
/// binomial basis in alternation, checking after every pass that the two
/// runs correspond.
pub fn lockstep_complete(
    system: &RewriteSystem,
    field: Field,
    limits: &CompletionLimits,
) -> Result<CorrespondenceReport, CorrespondenceError> {
    let mut rules = system.clone();
    let mut basis = rules_to_basis(system, field)?;
    let mut passes: Vec<LockstepPass> = Vec::new();

    let verdict = loop {
        let pass = passes.len() + 1;
        if pass > limits.max_passes {
            break Verdict::LimitExceeded { pass: passes.len(), limit: LimitKind::Passes };
        }

        let kb = rules.kb_pass()?;
        let bb = basis.buchberger_pass()?;

        let pair_map: BTreeMap<PairKey, &CriticalPair> =
            kb.pairs.iter().map(|p| (pair_key(p.first, p.second, p.overlap.shape()), p)).collect();
        let record_map: BTreeMap<PairKey, &SPolyRecord> =
            bb.records.iter().map(|r| (pair_key(r.first, r.second, r.overlap.shape()), r)).collect();
        let sources_agree = pair_map.len() == kb.pairs.len()
            && record_map.len() == bb.records.len()
            && pair_map.keys().eq(record_map.keys());

        let misaligned: Vec<PairKey> = pair_map
            .iter()
            .filter(|(key, pair)| match record_map.get(*key) {
                Some(record) => !aligned(field, pair, record),
                None => false,
            })
            .map(|(key, _)| *key)
            .collect();

        let binomial_shape = bb.records.iter().all(|r| r.intermediates(&basis).iter().all(binomial_shaped));

        let expected_next = rules_to_basis(&kb.next, field)?;
        let next_sets_agree = expected_next.same_poly_set(&bb.next);

        let record = LockstepPass {
            pass,
            rules: rules.clone(),
            basis: basis.clone(),
            pairs: kb.pairs,
            records: bb.records,
            sources_agree,
            misaligned,
            binomial_shape,
            next_sets_agree,
            rules_added: kb.added.len(),
            polys_added: bb.added.len(),
        };
        let holds = record.holds();
        let detail = if !record.sources_agree {
            Some("overlap and match sources differ".to_string())
        } else if let Some(key) = record.misaligned.first() {
            Some(format!("pair {key:?} disagrees"))
        } else if !record.binomial_shape {
            Some("S-polynomial left binomial shape".to_string())
        } else if !record.next_sets_agree {
            Some("next basis differs from translated rules".to_string())
        } else {
            None
        };
        passes.push(record);
        if !holds {
            break Verdict::Divergence { pass, detail: detail.unwrap_or_default() };
        }

        let kb_done = kb.added.is_empty();
        let bb_done = bb.added.is_empty();
        if kb_done != bb_done {
            break Verdict::Divergence {
                pass,
                detail: format!("fixpoint reached by only one engine (rewriting={kb_done}, buchberger={bb_done})"),
            };
        }
        if kb_done {
            break Verdict::Corresponds;
        }

        rules = kb.next;
        basis = bb.next;
        let kb_limit = limits.check_growth(rules.len(), rules.longest_word());
        let bb_limit = limits.check_growth(basis.len(), basis.max_degree());
        if kb_limit != bb_limit {
            break Verdict::Divergence {
                pass,
                detail: format!("limits differ (rewriting={kb_limit:?}, buchberger={bb_limit:?})"),
            };
        }
        if let Some(limit) = kb_limit {
            break Verdict::LimitExceeded { pass, limit };
        }
    };

    Ok(CorrespondenceReport { field, passes, final_rules: rules, final_basis: basis, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::basis_to_rules;
    use crate::correspondence::tests::sys;
    use crate::ncpoly::BuchbergerOutcome;
    use crate::rewriting::KbOutcome;
    use crate::words::Mode;

    fn run(r: &RewriteSystem, field: Field, limits: CompletionLimits) -> CorrespondenceReport {
        lockstep_complete(r, field, &limits).unwrap()
    }

    /// Runs both engines on their own and compares with the lockstep run.
    fn independent_replay(r: &RewriteSystem, field: Field, limits: CompletionLimits, report: &CorrespondenceReport) {
        let kb = r.knuth_bendix(&limits).unwrap();
        let bb = rules_to_basis(r, field).unwrap().buchberger(&limits).unwrap();
        assert_eq!(kb.trace().pass_count(), bb.trace().pass_count());
        assert_eq!(kb.trace().pass_count(), report.passes.len());
        match (&kb, &bb) {
            (KbOutcome::Complete { .. }, BuchbergerOutcome::GroebnerBasis { .. }) => {
                assert_eq!(report.verdict, Verdict::Corresponds)
            }
            (KbOutcome::LimitExceeded { limit: a, .. }, BuchbergerOutcome::LimitExceeded { limit: b, .. }) => {
                assert_eq!(a, b);
                assert!(matches!(report.verdict, Verdict::LimitExceeded { .. }));
            }
            _ => panic!("engines disagree on outcome"),
        }
        assert_eq!(basis_to_rules(bb.basis()).unwrap(), *kb.system());
        assert_eq!(&report.final_rules, kb.system());
        assert_eq!(&report.final_basis, bb.basis());
    }

    #[test]
    fn commutation() {
        let r = sys(&["a", "b"], Mode::Semigroup, &[("ba", "ab")]);
        let report = run(&r, Field::Rational, CompletionLimits::default());
        assert_eq!(report.verdict, Verdict::Corresponds);
        assert_eq!(report.passes.len(), 1);
        independent_replay(&r, Field::Rational, CompletionLimits::default(), &report);
    }

    #[test]
    fn aba_to_b() {
        let r = sys(&["a", "b"], Mode::Semigroup, &[("aba", "b")]);
        for field in [Field::Rational, Field::f3()] {
            let report = run(&r, field, CompletionLimits::default());
            assert_eq!(report.verdict, Verdict::Corresponds, "{}", report.render());
            assert_eq!(report.passes[0].rules_added, 1);
            independent_replay(&r, field, CompletionLimits::default(), &report);
        }
    }

    #[test]
    fn idempotent_resolves_and_reduces_to_zero() {
        let r = sys(&["a", "b"], Mode::Semigroup, &[("aa", "a")]);
        let report = run(&r, Field::f3(), CompletionLimits::default());
        assert_eq!(report.verdict, Verdict::Corresponds);
        let p = &report.passes[0];
        assert!(p.pairs.iter().all(|c| c.disposition == Disposition::Resolved));
        assert!(p.records.iter().all(|s| s.disposition == SPolyDisposition::ReducedToZero));
    }

    #[test]
    fn identical_truncation() {
        let r = sys(&["a", "b"], Mode::Semigroup, &[("aba", "b")]);
        let limits = CompletionLimits::new(50, 1, 256);
        let report = run(&r, Field::Rational, limits);
        assert_eq!(report.verdict, Verdict::LimitExceeded { pass: 1, limit: LimitKind::Rules });
        independent_replay(&r, Field::Rational, limits, &report);
    }

    #[test]
    fn zero_passes() {
        let r = sys(&["a", "b"], Mode::Semigroup, &[("aba", "b")]);
        let report = run(&r, Field::Rational, CompletionLimits::new(0, 10, 10));
        assert_eq!(report.verdict, Verdict::LimitExceeded { pass: 0, limit: LimitKind::Passes });
        assert!(report.passes.is_empty());
    }

    #[test]
    fn monoid_group_presentation() {
        // S3 = < a, b | a^2, b^3, (ab)^2 >
        let r = sys(&["a", "b"], Mode::Monoid, &[("aa", "1"), ("bbb", "1"), ("abab", "1")]);
        let report = run(&r, Field::Rational, CompletionLimits::new(10, 500, 30));
        assert_eq!(report.verdict, Verdict::Corresponds, "{}", report.render());
        let nfs = report.final_rules.enumerate_normal_forms(6);
        assert_eq!(nfs.len(), 6);
    }

    #[test]
    fn ideal_membership_of_every_remainder() {
        let r = sys(&["a", "b"], Mode::Semigroup, &[("aba", "b"), ("bb", "a")]);
        let report = run(&r, Field::Rational, CompletionLimits::new(4, 200, 20));
        for p in &report.passes {
            for rec in &p.records {
                assert_eq!(rec.raw_combination(&p.basis), rec.raw);
                let mut acc = rec.raw.clone();
                for s in &rec.steps {
                    acc = acc.sub(&p.basis.polys()[s.index].sandwich(&s.left, &s.right).scale(&s.coefficient));
                }
                assert_eq!(acc, rec.reduced);
            }
        }
    }

    #[test]
    fn report_rendering_ends_with_verdict() {
        let r = sys(&["a", "b"], Mode::Semigroup, &[("aa", "a")]);
        let text = run(&r, Field::Rational, CompletionLimits::default()).render();
        assert!(text.ends_with("VERDICT: Corresponds passes=1\n"));
        assert!(text.contains("pass=1 polys=(0,0) kind=SuffixPrefix raw=[0] reduced=[0] disp=ReducedToZero"));
        assert!(text.contains("pass=1 rules=(0,0) kind=SuffixPrefix raw=(a.a,a.a) reduced=(a,a) disp=Resolved"));
    }
}
