use std::cmp::Ordering;

use super::poly::NcPolynomial;
use super::scalar::{Field, Scalar};
use crate::error::PolyError;
use crate::rewriting::MAX_REDUCTION_STEPS;
use crate::words::{Alphabet, Mode, MonomialOrder, Word};

/// An ordered list of distinct monic polynomials generating a two-sided
/// ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    alphabet: Alphabet,
    order: MonomialOrder,
    mode: Mode,
    field: Field,
    polys: Vec<NcPolynomial>,
    /// `leads[i]` is the leading monomial of `polys[i]`.
    leads: Vec<Word>,
}

/// One reduction step `p -> p - coefficient · left · F[index] · right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub coefficient: Scalar,
    pub left: Word,
    pub index: usize,
    pub right: Word,
}

impl Basis {
    pub fn new(alphabet: Alphabet, order: MonomialOrder, mode: Mode, field: Field) -> Result<Self, PolyError> {
        if order.alphabet_size() != alphabet.len() {
            return Err(crate::error::WordError::BadOrder(format!(
                "order covers {} letters, alphabet has {}",
                order.alphabet_size(),
                alphabet.len()
            ))
            .into());
        }
        Ok(Basis { alphabet, order, mode, field, polys: Vec::new(), leads: Vec::new() })
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

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn polys(&self) -> &[NcPolynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> &[Word] {
        &self.leads
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.polys.iter().map(NcPolynomial::max_degree).max().unwrap_or(0)
    }

    /// Makes `p` monic and appends it unless already present. Returns whether
    /// it was new.
    pub fn insert(&mut self, p: &NcPolynomial) -> Result<bool, PolyError> {
        if p.field() != self.field {
            return Err(PolyError::FieldMismatch);
        }
        for (w, _) in p.terms() {
            self.alphabet.check(w)?;
            if w.is_empty() && !self.mode.allows_empty() {
                return Err(PolyError::EmptyMonomial);
            }
        }
        let monic = p.make_monic(&self.order)?;
        if self.polys.contains(&monic) {
            return Ok(false);
        }
        let (lead, _) = monic.leading_monomial(&self.order)?;
        self.polys.push(monic);
        self.leads.push(lead);
        Ok(true)
    }

    /// Leftmost occurrence of any leading monomial in `w`, lowest index on
    /// ties.
    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        // a nonzero constant in the basis divides every monomial
        if let Some(index) = self.leads.iter().position(Word::is_empty) {
            return Some((0, index));
        }
        let letters = w.letters();
        (0..letters.len()).find_map(|pos| {
            self.leads
                .iter()
                .position(|l| !l.is_empty() && letters[pos..].starts_with(l.letters()))
                .map(|index| (pos, index))
        })
    }

    /// Chooses the reduction step for `p`: its greatest reducible monomial,
    /// then the leftmost occurrence, then the lowest basis index.
    pub fn reduction_step(&self, p: &NcPolynomial) -> Option<ReductionStep> {
        let mut terms: Vec<(&Word, &Scalar)> = p.terms().collect();
        terms.sort_by(|a, b| self.order.compare(b.0, a.0));
        terms.into_iter().find_map(|(w, c)| {
            self.find_redex(w).map(|(pos, index)| ReductionStep {
                coefficient: c.clone(),
                left: w.slice(0..pos),
                index,
                right: w.slice(pos + self.leads[index].len()..w.len()),
            })
        })
    }

    pub fn apply(&self, p: &NcPolynomial, step: &ReductionStep) -> NcPolynomial {
        let multiple = self.polys[step.index].sandwich(&step.left, &step.right).scale(&step.coefficient);
        p.sub(&multiple)
    }

    /// One reduction step, replacing `k·u·l·v` by `k·u·(l - f)·v`.
    pub fn poly_reduce_once(&self, p: &NcPolynomial) -> Option<NcPolynomial> {
        self.reduction_step(p).map(|step| self.apply(p, &step))
    }

    /// Fully reduces `p`, returning the remainder and the steps taken.
    pub fn normal_form_with_steps(&self, p: &NcPolynomial) -> Result<(NcPolynomial, Vec<ReductionStep>), PolyError> {
        let mut current = p.clone();
        let mut steps = Vec::new();
        for _ in 0..MAX_REDUCTION_STEPS {
            match self.reduction_step(&current) {
                Some(step) => {
                    current = self.apply(&current, &step);
                    steps.push(step);
                }
                None => return Ok((current, steps)),
            }
        }
        Err(PolyError::StepBudget(MAX_REDUCTION_STEPS))
    }

    pub fn poly_normal_form(&self, p: &NcPolynomial) -> Result<NcPolynomial, PolyError> {
        self.normal_form_with_steps(p).map(|(nf, _)| nf)
    }

    /// Decides whether `m1 - m2` lies in the ideal. Only meaningful when the
    /// basis is a Gröbner basis.
    pub fn monomials_equal_mod_ideal(&self, m1: &Word, m2: &Word) -> Result<bool, PolyError> {
        let diff = NcPolynomial::binomial(self.field, m1.clone(), m2.clone());
        Ok(self.poly_normal_form(&diff)?.is_zero())
    }

    /// Same polynomials regardless of insertion order.
    pub fn same_poly_set(&self, other: &Basis) -> bool {
        let a: std::collections::HashSet<&NcPolynomial> = self.polys.iter().collect();
        let b: std::collections::HashSet<&NcPolynomial> = other.polys.iter().collect();
        a == b
    }

    pub fn render_poly(&self, p: &NcPolynomial) -> String {
        p.render(&self.alphabet, &self.order)
    }

    /// Compares two monomials under the basis order.
    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        self.order.compare(a, b)
    }
}
