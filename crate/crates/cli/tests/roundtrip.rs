use kbgb_cli::{parse_presentation, Presentation, PresentationMode, Relations};
use kbgb_core::{Alphabet, Field, MonomialOrder, NcPolynomial, Word};
use proptest::prelude::*;

const NAMES: [&str; 4] = ["a", "b", "x1", "yy"];

fn order_strategy(n: usize) -> impl Strategy<Value = MonomialOrder> {
    let precedence = Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle();
    (precedence, prop::collection::vec(1u64..4, n), any::<bool>()).prop_map(|(prec, weights, weighted)| {
        if weighted {
            MonomialOrder::weighted_shortlex(&prec, weights).unwrap()
        } else {
            MonomialOrder::shortlex_with(&prec).unwrap()
        }
    })
}

fn word(n: usize, min: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..n as u32, min..=4).prop_map(Word::from)
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (1usize..=4, 0usize..3, prop_oneof![Just(Field::Rational), Just(Field::f3()), Just(Field::Prime(7))])
        .prop_flat_map(|(n, mode, field)| {
            let mode = [PresentationMode::Sgp, PresentationMode::Mon, PresentationMode::Alg][mode];
            let min = usize::from(mode == PresentationMode::Sgp);
            let pairs = prop::collection::vec((word(n, min), word(n, min)), 0..5);
            let polys = prop::collection::vec(prop::collection::vec((word(n, 0), -6i64..6), 1..4), 0..4);
            (Just(n), Just(mode), Just(field), order_strategy(n), pairs, polys)
        })
        .prop_map(|(n, mode, field, order, pairs, polys)| {
            let alphabet = Alphabet::new(NAMES.iter().take(n).copied()).unwrap();
            let relations = if mode == PresentationMode::Alg {
                let polys = polys
                    .into_iter()
                    .map(|terms| {
                        NcPolynomial::from_terms(field, terms.into_iter().map(|(w, k)| (w, field.from_int(k))))
                    })
                    .filter(|p| !p.is_zero())
                    .collect();
                Relations::Polys(polys)
            } else {
                let rules = pairs
                    .into_iter()
                    .filter(|(u, v)| u != v)
                    .map(|(u, v)| if order.greater(&u, &v) { (u, v) } else { (v, u) })
                    .collect();
                Relations::Rules(rules)
            };
            let field = if mode == PresentationMode::Alg { field } else { Field::Rational };
            Presentation { mode, field, alphabet, order, relations }
        })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(p in presentation()) {
        let text = p.render();
        let back = parse_presentation(&text);
        prop_assert_eq!(back, Ok(p), "{}", text);
    }
}
