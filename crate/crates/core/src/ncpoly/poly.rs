use std::collections::BTreeMap;

use super::scalar::{Field, Scalar};
use crate::error::PolyError;
use crate::words::{Alphabet, MonomialOrder, Word};

/// A finite linear combination of words with nonzero coefficients.
///
/// Terms are keyed by the word's structural order, so equality is
/// independent of how the polynomial was built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcPolynomial {
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl NcPolynomial {
    pub fn zero(field: Field) -> Self {
        NcPolynomial { field, terms: BTreeMap::new() }
    }

    pub fn monomial(field: Field, word: Word) -> Self {
        Self::term(word, field.one())
    }

    pub fn term(word: Word, coefficient: Scalar) -> Self {
        let mut p = NcPolynomial::zero(coefficient.field());
        p.add_term(word, coefficient);
        p
    }

    /// `l - r`
    pub fn binomial(field: Field, l: Word, r: Word) -> Self {
        let mut p = NcPolynomial::monomial(field, l);
        p.add_term(r, -field.one());
        p
    }

    pub fn from_terms<I>(field: Field, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut p = NcPolynomial::zero(field);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &Word) -> Option<&Scalar> {
        self.terms.get(word)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Adds `coefficient · word`, pruning a vanishing coefficient.
    pub fn add_term(&mut self, word: Word, coefficient: Scalar) {
        assert_eq!(coefficient.field(), self.field, "scalar from a different field");
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coefficient;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPolynomial) -> NcPolynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NcPolynomial {
        self.scale(&-self.field.one())
    }

    pub fn scale(&self, k: &Scalar) -> NcPolynomial {
        let mut out = NcPolynomial::zero(self.field);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), k * c);
        }
        out
    }

    /// `left · self · right`
    pub fn sandwich(&self, left: &Word, right: &Word) -> NcPolynomial {
        NcPolynomial {
            field: self.field,
            terms: self.terms.iter().map(|(w, c)| (w.sandwich(left, right), c.clone())).collect(),
        }
    }

    /// Product in the free algebra.
    pub fn mul(&self, other: &NcPolynomial) -> NcPolynomial {
        let mut out = NcPolynomial::zero(self.field);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Terms from the largest monomial down.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Word, &Scalar)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.compare(b.0, a.0));
        terms
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Word, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    /// The order-maximal monomial and its coefficient.
    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<(Word, Scalar), PolyError> {
        self.leading_term(order).map(|(w, c)| (w.clone(), c.clone())).ok_or(PolyError::ZeroPolynomial)
    }

    /// Scales so the leading coefficient is 1.
    pub fn make_monic(&self, order: &MonomialOrder) -> Result<NcPolynomial, PolyError> {
        let (_, lc) = self.leading_monomial(order)?;
        let inv = lc.inverse().ok_or(PolyError::ZeroPolynomial)?;
        Ok(self.scale(&inv))
    }

    /// `lm(self) - self` for a monic polynomial.
    pub fn tail(&self, order: &MonomialOrder) -> NcPolynomial {
        let mut tail = self.neg();
        if let Some((lm, _)) = self.leading_term(order) {
            tail.terms.remove(lm);
        }
        tail
    }

    /// `Some((l, r))` when `self` is exactly `l - r` with `l > r`.
    pub fn as_monic_binomial(&self, order: &MonomialOrder) -> Option<(Word, Word)> {
        if self.terms.len() != 2 {
            return None;
        }
        let sorted = self.sorted_terms(order);
        let (l, lc) = sorted[0];
        let (r, rc) = sorted[1];
        (lc.is_one() && (-rc.clone()).is_one()).then(|| (l.clone(), r.clone()))
    }

    /// Renders terms in decreasing order, e.g. `b.a - a.b` or `2*a - 1/2*b.b`.
    pub fn render(&self, alphabet: &Alphabet, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let negative = c.is_negative_display();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = c.magnitude_display();
            if w.is_empty() {
                out.push_str(&magnitude);
            } else {
                if magnitude != "1" {
                    out.push_str(&magnitude);
                    out.push('*');
                }
                out.push_str(&alphabet.render(w));
            }
        }
        out
    }
}
