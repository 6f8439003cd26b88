//! Bounded check that `K[S]` and `K<X>/<F>` agree: the map sending a word
//! to its class is well defined and injective on monomial differences,
//! irreducible words represent congruence classes bijectively, and
//! multiplication of normal forms agrees in both models.
//!
//! Everything is restricted to words of bounded length; a passing report is
//! evidence, not a proof of the isomorphism.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::closure::congruence_classes;
use super::lockstep::{lockstep_complete, Verdict};
use crate::error::CorrespondenceError;
use crate::limits::CompletionLimits;
use crate::ncpoly::{Field, NcPolynomial};
use crate::rewriting::RewriteSystem;
use crate::words::{all_words, Word};

/// Largest number of words the congruence closure may enumerate.
const MAX_CLOSURE_WORDS: usize = 2_000_000;
const LINEARITY_SAMPLES: usize = 64;
const LINEARITY_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoCheck {
    Completion,
    Injectivity,
    Surjectivity,
    Multiplicativity,
    Linearity,
}

impl fmt::Display for IsoCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            IsoCheck::Completion => "completion",
            IsoCheck::Injectivity => "injectivity",
            IsoCheck::Surjectivity => "surjectivity",
            IsoCheck::Multiplicativity => "multiplicativity",
            IsoCheck::Linearity => "linearity",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Pass,
    Fail { check: IsoCheck, counterexample: String },
    Inconclusive(String),
}

#[derive(Clone, Debug)]
pub struct IsoCheckReport {
    pub bound: usize,
    pub field: Field,
    /// `normal_forms_per_length[n]` counts irreducible words of length `n`.
    pub normal_forms_per_length: Vec<usize>,
    pub classes: usize,
    pub word_pairs_checked: usize,
    pub products_checked: usize,
    pub linear_samples_checked: usize,
    pub verdict: IsoVerdict,
}

impl IsoCheckReport {
    fn new(bound: usize, field: Field) -> Self {
        IsoCheckReport {
            bound,
            field,
            normal_forms_per_length: Vec::new(),
            classes: 0,
            word_pairs_checked: 0,
            products_checked: 0,
            linear_samples_checked: 0,
            verdict: IsoVerdict::Pass,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == IsoVerdict::Pass
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "iso-check bound={} field={} (truncated: words of length <= {})",
            self.bound, self.field, self.bound
        );
        let counts: Vec<String> =
            self.normal_forms_per_length.iter().enumerate().map(|(len, n)| format!("{len}:{n}")).collect();
        let _ = writeln!(out, "normal forms per length: {}", counts.join(" "));
        let _ = writeln!(
            out,
            "classes={} word_pairs={} products={} linear_samples={}",
            self.classes, self.word_pairs_checked, self.products_checked, self.linear_samples_checked
        );
        let verdict = match &self.verdict {
            IsoVerdict::Pass => "VERDICT: Pass".to_string(),
            IsoVerdict::Fail { check, counterexample } => format!("VERDICT: Fail check={check} {counterexample}"),
            IsoVerdict::Inconclusive(why) => format!("VERDICT: Inconclusive {why}"),
        };
        let _ = writeln!(out, "{verdict}");
        out
    }
}

fn fail(mut report: IsoCheckReport, check: IsoCheck, counterexample: String) -> IsoCheckReport {
    report.verdict = IsoVerdict::Fail { check, counterexample };
    report
}

/// Completes `system` (rewriting and Buchberger in lockstep) and checks the
/// algebra isomorphism on words of at most `bound` letters.
pub fn verify_algebra_iso(
    system: &RewriteSystem,
    field: Field,
    bound: usize,
    limits: &CompletionLimits,
) -> Result<IsoCheckReport, CorrespondenceError> {
    let mut report = IsoCheckReport::new(bound, field);
    let lockstep = lockstep_complete(system, field, limits)?;
    match &lockstep.verdict {
        Verdict::Corresponds => {}
        Verdict::LimitExceeded { pass, limit } => {
            report.verdict = IsoVerdict::Inconclusive(format!("completion hit {limit} after pass {pass}"));
            return Ok(report);
        }
        Verdict::Divergence { pass, detail } => {
            return Ok(fail(report, IsoCheck::Completion, format!("pass {pass}: {detail}")));
        }
    }
    let complete = &lockstep.final_rules;
    let groebner = &lockstep.final_basis;
    let alphabet = system.alphabet();
    let order = system.order();
    let min_len = if system.mode().allows_empty() { 0 } else { 1 };

    let normal_forms = complete.enumerate_normal_forms(bound);
    report.normal_forms_per_length = vec![0; bound + 1];
    for w in &normal_forms {
        report.normal_forms_per_length[w.len()] += 1;
    }

    // injectivity on monomial differences
    let words = all_words(alphabet.len(), min_len..=bound);
    let mut rewrite_nf = Vec::with_capacity(words.len());
    for w in &words {
        rewrite_nf.push(complete.normal_form(w)?);
    }
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let by_rules = rewrite_nf[i] == rewrite_nf[j];
            let by_ideal = groebner.monomials_equal_mod_ideal(&words[i], &words[j])?;
            report.word_pairs_checked += 1;
            if by_rules != by_ideal {
                let example = format!(
                    "{} vs {}: rules say {}, ideal says {}",
                    alphabet.render(&words[i]),
                    alphabet.render(&words[j]),
                    by_rules,
                    by_ideal
                );
                return Ok(fail(report, IsoCheck::Injectivity, example));
            }
        }
    }

    // surjectivity: one irreducible word per class. The closure uses the
    // completed rules, which generate the same congruence as the original
    // ones; with them every word reaches its normal form without gaining
    // weight, so a closure over all words up to the heaviest bounded word's
    // weight joins every class it needs to.
    let closure_len = (bound as u64 * order.max_letter_weight()).div_ceil(order.min_letter_weight()) as usize;
    let closure_size: usize = (min_len..=closure_len)
        .map(|n| alphabet.len().saturating_pow(n as u32))
        .fold(0usize, |acc, x| acc.saturating_add(x));
    if closure_size > MAX_CLOSURE_WORDS {
        report.verdict =
            IsoVerdict::Inconclusive(format!("closure would enumerate {closure_size} words (cap {MAX_CLOSURE_WORDS})"));
        return Ok(report);
    }
    let classes = congruence_classes(complete, closure_len);
    for class in &classes {
        if !class.iter().any(|w| w.len() <= bound) {
            continue;
        }
        report.classes += 1;
        let irreducible: Vec<&Word> = class.iter().filter(|w| complete.is_irreducible(w)).collect();
        if irreducible.len() != 1 {
            let rendered: Vec<String> = irreducible.iter().map(|w| alphabet.render(w)).collect();
            let example = format!(
                "class of {} has {} irreducible words [{}]",
                alphabet.render(&class[0]),
                irreducible.len(),
                rendered.join(", ")
            );
            return Ok(fail(report, IsoCheck::Surjectivity, example));
        }
    }
    let short_irreducible =
        classes.iter().flat_map(|c| c.iter()).filter(|w| w.len() <= bound && complete.is_irreducible(w)).count();
    if short_irreducible != normal_forms.len() {
        let example = format!("{} irreducible words in classes, {} enumerated", short_irreducible, normal_forms.len());
        return Ok(fail(report, IsoCheck::Surjectivity, example));
    }

    // multiplicativity on products of normal forms
    for n1 in &normal_forms {
        for n2 in &normal_forms {
            let product = n1.concat(n2);
            if product.len() > bound {
                continue;
            }
            let by_rules = complete.normal_form(&product)?;
            let by_ideal = groebner.poly_normal_form(&NcPolynomial::monomial(field, product.clone()))?;
            report.products_checked += 1;
            if by_ideal != NcPolynomial::monomial(field, by_rules.clone()) {
                let example = format!(
                    "{}·{}: rules give {}, ideal gives {}",
                    alphabet.render(n1),
                    alphabet.render(n2),
                    alphabet.render(&by_rules),
                    groebner.render_poly(&by_ideal)
                );
                return Ok(fail(report, IsoCheck::Multiplicativity, example));
            }
        }
    }

    // linearity on random three-term combinations
    let nf_of: HashMap<&Word, &Word> = words.iter().zip(rewrite_nf.iter()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(LINEARITY_SEED);
    for _ in 0..LINEARITY_SAMPLES {
        let mut p = NcPolynomial::zero(field);
        let mut image = NcPolynomial::zero(field);
        for _ in 0..3 {
            let w = &words[rng.gen_range(0..words.len())];
            let k = field.from_int(rng.gen_range(-5..=5));
            p.add_term(w.clone(), k.clone());
            image.add_term(nf_of[w].clone(), k);
        }
        report.linear_samples_checked += 1;
        let reduced = groebner.poly_normal_form(&p)?;
        if reduced != image {
            let example = format!(
                "{}: ideal gives {}, classes give {}",
                groebner.render_poly(&p),
                groebner.render_poly(&reduced),
                groebner.render_poly(&image)
            );
            return Ok(fail(report, IsoCheck::Linearity, example));
        }
    }

    Ok(report)
}
