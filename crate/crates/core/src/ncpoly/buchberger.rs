//! S-polynomials and the pass-structured Buchberger procedure.

use std::fmt::Write as _;

use super::basis::{Basis, ReductionStep};
use super::poly::NcPolynomial;
use crate::error::PolyError;
use crate::limits::{CompletionLimits, LimitKind};
use crate::words::{find_matches_between, OverlapMatch};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SPolyDisposition {
    ReducedToZero,
    /// The monic form of the nonzero remainder.
    NewPoly(NcPolynomial),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPolyRecord {
    pub first: usize,
    pub second: usize,
    pub overlap: OverlapMatch,
    /// `a2·t2·b2 - a1·t1·b1` where `ti` is the tail of the i-th polynomial
    /// and `(ai, bi)` places its leading monomial in the superposition.
    pub raw: NcPolynomial,
    pub reduced: NcPolynomial,
    /// Steps taking `raw` to `reduced`.
    pub steps: Vec<ReductionStep>,
    pub disposition: SPolyDisposition,
}

impl SPolyRecord {
    /// `raw` as a combination of basis elements: `+a1·F[first]·b1` and
    /// `-a2·F[second]·b2`.
    pub fn raw_combination(&self, basis: &Basis) -> NcPolynomial {
        let ((a1, b1), (a2, b2)) = self.overlap.contexts();
        basis.polys()[self.first].sandwich(&a1, &b1).sub(&basis.polys()[self.second].sandwich(&a2, &b2))
    }

    /// Every polynomial on the way from `raw` to `reduced`, both included.
    pub fn intermediates(&self, basis: &Basis) -> Vec<NcPolynomial> {
        let mut out = vec![self.raw.clone()];
        let mut current = self.raw.clone();
        for step in &self.steps {
            current = basis.apply(&current, step);
            out.push(current.clone());
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct BuchbergerPass {
    pub next: Basis,
    pub records: Vec<SPolyRecord>,
    pub added: Vec<NcPolynomial>,
}

#[derive(Clone, Debug)]
pub struct BbPassRecord {
    pub pass: usize,
    pub input_polys: usize,
    pub records: Vec<SPolyRecord>,
    pub added: Vec<NcPolynomial>,
}

#[derive(Clone, Debug, Default)]
pub struct BbTrace {
    pub passes: Vec<BbPassRecord>,
}

#[derive(Clone, Debug)]
pub enum BuchbergerOutcome {
    GroebnerBasis { basis: Basis, trace: BbTrace },
    LimitExceeded { basis: Basis, trace: BbTrace, limit: LimitKind },
}

impl BuchbergerOutcome {
    pub fn basis(&self) -> &Basis {
        match self {
            BuchbergerOutcome::GroebnerBasis { basis, .. } | BuchbergerOutcome::LimitExceeded { basis, .. } => basis,
        }
    }

    pub fn trace(&self) -> &BbTrace {
        match self {
            BuchbergerOutcome::GroebnerBasis { trace, .. } | BuchbergerOutcome::LimitExceeded { trace, .. } => trace,
        }
    }

    pub fn is_groebner(&self) -> bool {
        matches!(self, BuchbergerOutcome::GroebnerBasis { .. })
    }
}

impl Basis {
    /// S-polynomials of every ordered index pair `(i, j)`, `i == j`
    /// included, and every proper match of their leading monomials, each
    /// reduced against this basis.
    pub fn s_polynomials(&self) -> Result<Vec<SPolyRecord>, PolyError> {
        let order = self.order();
        let tails: Vec<NcPolynomial> = self.polys().iter().map(|p| p.tail(order)).collect();
        let leads = self.leading_monomials();
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if leads[i].is_empty() || leads[j].is_empty() {
                    continue;
                }
                for overlap in find_matches_between(&leads[i], &leads[j], i != j) {
                    let ((a1, b1), (a2, b2)) = overlap.contexts();
                    let raw = tails[j].sandwich(&a2, &b2).sub(&tails[i].sandwich(&a1, &b1));
                    let (reduced, steps) = self.normal_form_with_steps(&raw)?;
                    let disposition = if reduced.is_zero() {
                        SPolyDisposition::ReducedToZero
                    } else {
                        SPolyDisposition::NewPoly(reduced.make_monic(order)?)
                    };
                    out.push(SPolyRecord { first: i, second: j, overlap, raw, reduced, steps, disposition });
                }
            }
        }
        Ok(out)
    }

    /// One pass: all S-polynomials reduced against this basis, then every
    /// nonzero remainder appended in monic form.
    pub fn buchberger_pass(&self) -> Result<BuchbergerPass, PolyError> {
        let records = self.s_polynomials()?;
        let mut next = self.clone();
        let mut added = Vec::new();
        for record in &records {
            if let SPolyDisposition::NewPoly(p) = &record.disposition {
                if next.insert(p)? {
                    added.push(p.clone());
                }
            }
        }
        Ok(BuchbergerPass { next, records, added })
    }

    /// Runs passes until one adds nothing, or a limit trips.
    pub fn buchberger(&self, limits: &CompletionLimits) -> Result<BuchbergerOutcome, PolyError> {
        let mut current = self.clone();
        let mut trace = BbTrace::default();
        loop {
            let pass = trace.passes.len() + 1;
            if pass > limits.max_passes {
                return Ok(BuchbergerOutcome::LimitExceeded { basis: current, trace, limit: LimitKind::Passes });
            }
            let step = current.buchberger_pass()?;
            let done = step.added.is_empty();
            trace.passes.push(BbPassRecord {
                pass,
                input_polys: current.len(),
                records: step.records,
                added: step.added,
            });
            if done {
                return Ok(BuchbergerOutcome::GroebnerBasis { basis: current, trace });
            }
            current = step.next;
            if let Some(limit) = limits.check_growth(current.len(), current.max_degree()) {
                return Ok(BuchbergerOutcome::LimitExceeded { basis: current, trace, limit });
            }
        }
    }
}

/// One trace line per S-polynomial.
pub fn render_record(basis: &Basis, pass: usize, record: &SPolyRecord) -> String {
    let disp = match &record.disposition {
        SPolyDisposition::ReducedToZero => "ReducedToZero".to_string(),
        SPolyDisposition::NewPoly(p) => format!("Added:[{}]", basis.render_poly(p)),
    };
    format!(
        "pass={} polys=({},{}) kind={} raw=[{}] reduced=[{}] disp={}",
        pass,
        record.first,
        record.second,
        record.overlap.kind,
        basis.render_poly(&record.raw),
        basis.render_poly(&record.reduced),
        disp
    )
}

impl BbPassRecord {
    pub fn render(&self, basis: &Basis) -> String {
        let mut out = String::new();
        for record in &self.records {
            let _ = writeln!(out, "{}", render_record(basis, self.pass, record));
        }
        out
    }
}

impl BbTrace {
    pub fn render(&self, basis: &Basis) -> String {
        self.passes.iter().map(|p| p.render(basis)).collect()
    }

    pub fn pass_count(&self) -> usize {
        self.passes.len()
    }
}
