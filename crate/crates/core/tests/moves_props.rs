mod common;

use common::{arb_word, arb_word_any, word};
use proptest::prelude::*;
use quasibraid::moves::is_exchange_form;
use quasibraid::{
    cone_contains, cone_points, destabilize, exchange_as_composite, exchange_move, homfly, jones_inequality_holds,
    self_linking, stabilize, words_equal, BraidWord, ConePoint,
};

/// `α x γ x⁻¹` with `x = σₙ₋₁`, or the sign-swapped form.
fn exchange_word(a: &BraidWord, g: &BraidWord, n: usize, neg: bool) -> BraidWord {
    let x = if neg { 1 - n as i32 } else { n as i32 - 1 };
    let mut l = a.letters().to_vec();
    l.push(x);
    l.extend_from_slice(g.letters());
    l.push(-x);
    word(n, &l)
}

/// Drops the letters that do not live on the first `n − 1` strands.
fn on_lower_strands(w: &BraidWord, n: usize) -> BraidWord {
    let l: Vec<i32> = w.letters().iter().copied().filter(|l| (l.unsigned_abs() as usize) < n - 1).collect();
    word(n, &l)
}

#[test]
fn cone_closed_form_matches_enumeration() {
    for n in 1..4 {
        for w in -3..=3 {
            let apex = ConePoint::new(w, n).unwrap();
            for depth in 0..=4 {
                let points = cone_points(apex, depth);
                assert_eq!(points.len(), (depth + 1) * (depth + 2) / 2);
                for p in &points {
                    assert!(cone_contains(apex, *p));
                }
                for dn in 0..=depth {
                    for dw in -(depth as i64)..=depth as i64 {
                        let p = ConePoint::new(w + dw, n + dn).unwrap();
                        assert_eq!(points.contains(&p), cone_contains(apex, p), "{apex:?} {p:?}");
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn destabilize_undoes_stabilize(b in arb_word_any(5, 12), positive in prop::bool::ANY) {
        let sign = if positive { 1 } else { -1 };
        let s = stabilize(&b, sign).unwrap();
        prop_assert_eq!(s.strands(), b.strands() + 1);
        prop_assert_eq!(self_linking(&s), self_linking(&b) + if positive { 0 } else { -2 });
        let (d, got) = destabilize(&s).unwrap();
        prop_assert_eq!(got, sign);
        prop_assert!(words_equal(&d, &b).unwrap());
    }

    #[test]
    fn stabilizations_stay_in_the_cone(b in arb_word_any(4, 8), signs in prop::collection::vec(prop::bool::ANY, 0..5)) {
        let apex = ConePoint::of(&b);
        let mut s = b.clone();
        for positive in signs {
            s = stabilize(&s, if positive { 1 } else { -1 }).unwrap();
            prop_assert!(cone_contains(apex, ConePoint::of(&s)));
            prop_assert!(jones_inequality_holds(&s, &b));
        }
    }

    #[test]
    fn exchange_keeps_writhe_strands_and_form(
        a in arb_word(5, 5), g in arb_word(5, 5), n in 2usize..7, neg in prop::bool::ANY,
    ) {
        let (a, g) = (on_lower_strands(&a, n), on_lower_strands(&g, n));
        let b = exchange_word(&a, &g, n, neg);
        prop_assert!(is_exchange_form(&b));
        let e = exchange_move(&b).unwrap();
        prop_assert_eq!(e.writhe(), b.writhe());
        prop_assert_eq!(e.strands(), b.strands());
        prop_assert!(is_exchange_form(&e));
        prop_assert_eq!(exchange_move(&e).unwrap(), b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn exchange_composite_replays_to_the_exchange(
        a in arb_word(5, 5), g in arb_word(5, 5), n in 2usize..7, neg in prop::bool::ANY,
    ) {
        let b = exchange_word(&on_lower_strands(&a, n), &on_lower_strands(&g, n), n, neg);
        let (seq, witness) = exchange_as_composite(&b).unwrap();
        let end = seq.replay().unwrap();
        let target = exchange_move(&b).unwrap();
        let conj = quasibraid::conjugate(&end, &witness).unwrap();
        prop_assert!(words_equal(&conj, &target).unwrap());
        let trace = seq.trace().unwrap();
        let p = homfly(&b).unwrap();
        for w in &trace {
            prop_assert_eq!(&homfly(w).unwrap(), &p);
        }
    }
}
