mod common;

use std::collections::BTreeSet;

use common::{arb_word_any, word};
use proptest::prelude::*;
use quasibraid::{
    explore, expand, find_minimal_representatives, homfly, random_qp, to_normal_form, verify_property_transport,
    words_equal, ConePoint, QPFactorization, SearchBudget, Status, TransportError,
};

fn small_budget() -> SearchBudget {
    SearchBudget { max_nodes: 300, max_strands: 4, max_word_length: 10, ..SearchBudget::default() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn states_are_distinct_and_paths_replay(b in arb_word_any(3, 6)) {
        let report = explore(&b, &small_budget());
        let p = homfly(&b).unwrap();
        // An unreduced input is kept as state 0, ahead of its reduction.
        let first = usize::from(b.free_reduce().len() != b.len());
        let mut forms = BTreeSet::new();
        for i in 0..report.state_count() {
            let w = report.word(i);
            if i >= first {
                prop_assert!(forms.insert((w.strands(), to_normal_form(w))), "duplicate state {w}");
            }
            prop_assert!(report.visited.contains(&ConePoint::of(w)));
            let end = report.path_to(i).replay().unwrap();
            prop_assert!(words_equal(&end, w).unwrap(), "path to {w} ends at {end}");
        }
        for i in (0..report.state_count()).step_by(7) {
            prop_assert_eq!(&homfly(report.word(i)).unwrap(), &p);
        }
        prop_assert!(report.visited.contains(&ConePoint::of(&b)));
        prop_assert!(report.min_strands <= b.strands());
    }

    #[test]
    fn exploration_is_deterministic(b in arb_word_any(3, 6)) {
        let x = explore(&b, &small_budget());
        let y = explore(&b, &small_budget());
        prop_assert_eq!(&x.visited, &y.visited);
        prop_assert_eq!(x.minimal_representatives(), y.minimal_representatives());
    }

    #[test]
    fn minimal_representatives_respect_mfw(b in arb_word_any(4, 7)) {
        let m = find_minimal_representatives(&b, &small_budget()).unwrap();
        prop_assert!(m.mfw_lower <= m.strands);
        prop_assert_eq!(m.certified, m.mfw_lower == m.strands);
        let w0 = m.words[0].writhe();
        for w in &m.words {
            prop_assert_eq!(w.strands(), m.strands);
            prop_assert_eq!(w.writhe(), w0);
        }
    }
}

#[test]
fn property_transport_finds_a_positive_representative() {
    // Positivity of the writhe is invariant under conjugation and positive
    // stabilization, so it must show up at minimal index.
    let positive_writhe = |w: &quasibraid::BraidWord| w.writhe() > 0;
    for seed in 0..20 {
        let q = random_qp(3, 3, 1, seed).unwrap();
        let rec = verify_property_transport(&q, &positive_writhe, &SearchBudget::default(), seed).unwrap();
        assert_eq!(rec.status, Status::Verified, "{q:?}: {:?}", rec.details.notes);
        let rep = rec.details.representative.unwrap();
        assert!(positive_writhe(&rep));
        assert_eq!(Some(rep.strands()), rec.details.b_upper);
    }
}

#[test]
fn property_transport_rejects_a_non_invariant_property() {
    // Word length is not invariant under conjugation.
    let short = |w: &quasibraid::BraidWord| w.len() <= 3;
    let q = QPFactorization::from_positive_word(&word(3, &[1, 2, 1])).unwrap();
    assert!(matches!(
        verify_property_transport(&q, &short, &SearchBudget::default(), 1),
        Err(TransportError::NotInvariant { .. })
    ));
}

#[test]
fn trefoil_on_three_strands_destabilizes_to_two() {
    let q = QPFactorization::from_positive_word(&word(3, &[1, 1, 1, 2])).unwrap();
    let m = find_minimal_representatives(&expand(&q), &SearchBudget::default()).unwrap();
    assert!(m.certified);
    assert_eq!(m.strands, 2);
    assert!(m.words.iter().all(|w| w.writhe() == 3));
}
