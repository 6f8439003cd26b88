//! Executable form of the rewriting/Gröbner correspondence: translation
//! between rule sets and binomial bases, a lockstep runner that checks the
//! two completions agree pass by pass, and a bounded check that the
//! semigroup algebra and the quotient algebra agree on small words.

mod closure;
mod iso;
mod lockstep;

pub use closure::congruence_classes;
pub use iso::{verify_algebra_iso, IsoCheck, IsoCheckReport, IsoVerdict};
pub use lockstep::{lockstep_complete, CorrespondenceReport, LockstepPass, PairKey, Verdict};

use crate::error::CorrespondenceError;
use crate::ncpoly::{Basis, Field, NcPolynomial};
use crate::rewriting::RewriteSystem;

/// `{ l - r : (l, r) in R }`, in rule order.
pub fn rules_to_basis(system: &RewriteSystem, field: Field) -> Result<Basis, CorrespondenceError> {
    let mut basis = Basis::new(system.alphabet().clone(), system.order().clone(), system.mode(), field)?;
    for rule in system.rules() {
        basis.insert(&NcPolynomial::binomial(field, rule.lhs.clone(), rule.rhs.clone()))?;
    }
    Ok(basis)
}

/// Inverse of [`rules_to_basis`]; every element must be a monic binomial.
pub fn basis_to_rules(basis: &Basis) -> Result<RewriteSystem, CorrespondenceError> {
    let mut system = RewriteSystem::new(basis.alphabet().clone(), basis.order().clone(), basis.mode())?;
    for p in basis.polys() {
        let (l, r) =
            p.as_monic_binomial(basis.order()).ok_or_else(|| CorrespondenceError::NonBinomial(basis.render_poly(p)))?;
        system.add_rule(l, r)?;
    }
    Ok(system)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::words::{Alphabet, Mode, MonomialOrder, Word};

    pub(crate) fn sys(letters: &[&str], mode: Mode, rules: &[(&str, &str)]) -> RewriteSystem {
        let alphabet = Alphabet::new(letters.iter().copied()).unwrap();
        let parsed: Vec<_> =
            rules.iter().map(|(l, r)| (alphabet.parse_word(l).unwrap(), alphabet.parse_word(r).unwrap())).collect();
        RewriteSystem::with_rules(alphabet, MonomialOrder::shortlex(letters.len()), mode, parsed).unwrap()
    }

    #[test]
    fn conversion_examples() {
        let r = sys(&["a", "b"], Mode::Semigroup, &[("ba", "ab")]);
        let f = rules_to_basis(&r, Field::Rational).unwrap();
        assert_eq!(f.render_poly(&f.polys()[0]), "b.a - a.b");
        assert_eq!(basis_to_rules(&f).unwrap(), r);

        let empty = sys(&["a", "b"], Mode::Semigroup, &[]);
        assert!(rules_to_basis(&empty, Field::Rational).unwrap().is_empty());

        let r = sys(&["a", "b"], Mode::Semigroup, &[("aa", "a"), ("ba", "ab")]);
        let f = rules_to_basis(&r, Field::f3()).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(basis_to_rules(&f).unwrap(), r);

        let r = sys(&["a", "b"], Mode::Monoid, &[("aa", "1")]);
        let f = rules_to_basis(&r, Field::Rational).unwrap();
        assert_eq!(f.render_poly(&f.polys()[0]), "a.a - 1");
        assert_eq!(basis_to_rules(&f).unwrap(), r);
    }

    #[test]
    fn non_binomial_rejected() {
        let r = sys(&["a", "b"], Mode::Semigroup, &[]);
        let mut f = rules_to_basis(&r, Field::Rational).unwrap();
        let w = |s: &str| r.alphabet().parse_word(s).unwrap();
        let one = Field::Rational.one();
        let p =
            NcPolynomial::from_terms(Field::Rational, [(w("ab"), one.clone()), (w("ba"), one.clone()), (w("a"), -one)]);
        f.insert(&p).unwrap();
        assert!(matches!(basis_to_rules(&f), Err(CorrespondenceError::NonBinomial(_))));

        // 2-term but not l - r
        let mut g = rules_to_basis(&r, Field::Rational).unwrap();
        g.insert(&NcPolynomial::from_terms(
            Field::Rational,
            [(w("ba"), Field::Rational.one()), (w("ab"), Field::Rational.from_int(2))],
        ))
        .unwrap();
        assert!(basis_to_rules(&g).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn random_system() -> impl Strategy<Value = RewriteSystem> {
            prop::collection::vec((prop::collection::vec(0u32..3, 1..=4), prop::collection::vec(0u32..3, 1..=4)), 0..=4)
                .prop_map(|pairs| {
                    let alphabet = Alphabet::new(["a", "b", "c"]).unwrap();
                    let mut r = RewriteSystem::new(alphabet, MonomialOrder::shortlex(3), Mode::Semigroup).unwrap();
                    for (l, rr) in pairs {
                        r.add_equation(Word::from(l), Word::from(rr)).unwrap();
                    }
                    r
                })
        }

        proptest! {
            #[test]
            fn round_trip(r in random_system()) {
                for field in [Field::Rational, Field::f3()] {
                    let f = rules_to_basis(&r, field).unwrap();
                    prop_assert_eq!(&basis_to_rules(&f).unwrap(), &r);
                    prop_assert_eq!(rules_to_basis(&basis_to_rules(&f).unwrap(), field).unwrap(), f);
                }
            }
        }
    }
}
