use std::collections::BTreeSet;

use proptest::prelude::*;

use cbrank_core::cb::{
    cb_char, equivalent, homeo_labels, metric_derivative_check, order_type, point_count, CBPair,
};
use cbrank_core::compactum::{embed, Compactum, Piece, Tail};
use cbrank_core::dyadic::Dyadic;
use cbrank_core::ordinal::{ordinal_cb, Ordinal, Split, Term};

fn ordinal_strategy() -> impl Strategy<Value = Ordinal> {
    let leaf = (0u64..20).prop_map(Ordinal::from);
    leaf.prop_recursive(3, 24, 4, |inner| {
        prop::collection::vec((inner, 1u32..10), 0..4).prop_map(|mut terms| {
            terms.sort_by(|a, b| b.0.cmp(&a.0));
            terms.dedup_by(|a, b| a.0 == b.0);
            let terms = terms.into_iter().map(|(e, c)| Term::new(e, c)).collect();
            Ordinal::from_terms(terms).expect("sorted and deduplicated")
        })
    })
}

fn limit_strategy() -> impl Strategy<Value = Ordinal> {
    ordinal_strategy().prop_filter("limit", Ordinal::is_limit)
}

/// Trees without fundamental-sequence tails.
fn tree_strategy() -> impl Strategy<Value = Compactum> {
    let leaf = (0usize..3).prop_map(Compactum::atoms);
    leaf.prop_recursive(3, 20, 3, |inner| {
        let tail = prop_oneof![
            Just(None),
            inner.clone().prop_map(Some),
        ];
        let piece = prop_oneof![
            Just(Piece::Atom),
            (prop::collection::vec(inner, 0..3), tail).prop_map(|(prefix, body)| {
                let tail = match body {
                    None => Tail::None,
                    Some(b) if b.is_empty() => Tail::Const { body: Box::new(Compactum::atoms(1)) },
                    Some(b) => Tail::Const { body: Box::new(b) },
                };
                Piece::omega(prefix, tail)
            }),
        ];
        prop::collection::vec(piece, 0..3).prop_map(|pieces| Compactum { pieces })
    })
}

fn by_iteration(k: &Compactum) -> CBPair {
    let mut cur = k.clone();
    let mut m = 0u64;
    while !cur.is_finite() {
        cur = cur.derive().unwrap();
        m += 1;
    }
    CBPair::new(Ordinal::from(m), point_count(&cur).unwrap())
}

fn unit() -> (Dyadic, Dyadic) {
    (Dyadic::zero(), Dyadic::integer(1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn addition_is_associative(a in ordinal_strategy(), b in ordinal_strategy(), c in ordinal_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn smaller_summands_are_absorbed(a in ordinal_strategy(), e in ordinal_strategy()) {
        let big = Ordinal::omega_pow(&e);
        if a < big {
            prop_assert_eq!(&a + &big, big);
        }
    }

    #[test]
    fn addition_is_strictly_monotone_on_the_right(
        a in ordinal_strategy(), b in ordinal_strategy(), c in ordinal_strategy()
    ) {
        if b < c {
            prop_assert!(&a + &b < &a + &c);
        }
        // only weakly monotone on the left
        if a <= b {
            prop_assert!(&a + &c <= &b + &c);
        }
    }

    #[test]
    fn results_stay_in_normal_form(a in ordinal_strategy(), b in ordinal_strategy(), k in 0u32..7) {
        prop_assert!((&a + &b).is_cnf());
        prop_assert!(a.mul_nat(&k.into()).is_cnf());
        prop_assert!(Ordinal::omega_pow(&a).is_cnf());
    }

    #[test]
    fn mul_nat_is_repeated_addition(a in ordinal_strategy(), k in 0u32..7) {
        let repeated = (0..k).fold(Ordinal::zero(), |acc, _| &acc + &a);
        prop_assert_eq!(a.mul_nat(&k.into()), repeated);
    }

    #[test]
    fn print_parse_round_trip(a in ordinal_strategy()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Ordinal>().unwrap(), a);
    }

    #[test]
    fn order_is_total_and_transitive(a in ordinal_strategy(), b in ordinal_strategy(), c in ordinal_strategy()) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
        prop_assert!(a < a.successor());
        prop_assert!(a <= &a + &b && b <= &a + &b);
    }

    #[test]
    fn split_matches_successor(a in ordinal_strategy()) {
        prop_assert_eq!(a.successor().split(), Split::Successor(a.clone()));
        match a.split() {
            Split::Zero => prop_assert!(a.is_zero()),
            Split::Successor(b) => prop_assert_eq!(b.successor(), a),
            Split::Limit => prop_assert!(a.is_limit()),
        }
    }

    #[test]
    fn fundamental_sequences_are_increasing_and_cofinal(lambda in limit_strategy(), beta in ordinal_strategy()) {
        let seq: Vec<Ordinal> = (0..=64).map(|n| lambda.fundamental(n).unwrap()).collect();
        for w in seq.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        prop_assert!(seq.iter().all(|x| x < &lambda));
        if beta < lambda {
            prop_assert!(seq.iter().any(|x| &beta < x), "{} not exceeded below {}", beta, lambda);
        }
    }

    #[test]
    fn ordinal_cb_inverts_leading_power(e in ordinal_strategy(), p in 1u32..10) {
        let tau = Ordinal::omega_pow(&e).mul_nat(&p.into());
        let expected = if e.is_zero() { CBPair::new(Ordinal::zero(), p + 1) } else { CBPair::new(e, p) };
        prop_assert_eq!(ordinal_cb(&tau), expected);
    }

    #[test]
    fn canonical_trees_have_their_characteristic(a in ordinal_strategy(), p in 1usize..5) {
        let c = cb_char(&Compactum::canonical(&a, p)).unwrap();
        prop_assert_eq!(c, CBPair::new(a, p as u32));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn characteristic_matches_iterated_derivative(k in tree_strategy()) {
        prop_assert_eq!(cb_char(&k).unwrap(), by_iteration(&k));
    }

    #[test]
    fn union_order_does_not_matter(k1 in tree_strategy(), k2 in tree_strategy()) {
        prop_assert!(equivalent(&k1.union(&k2), &k2.union(&k1)).unwrap());
    }

    #[test]
    fn truncation_only_adds_points(k in tree_strategy(), d in 0usize..4) {
        let small: BTreeSet<_> = k.truncate(d).points().unwrap().into_iter().collect();
        let big: BTreeSet<_> = k.truncate(d + 1).points().unwrap().into_iter().collect();
        prop_assert!(small.is_subset(&big));
    }

    #[test]
    fn embedding_is_injective_and_inside(k in tree_strategy(), d in 0usize..4) {
        let (a, b) = unit();
        let e = embed(&k.truncate(d), &a, &b).unwrap();
        let values: BTreeSet<&Dyadic> = e.values().collect();
        prop_assert_eq!(values.len(), e.points.len());
        prop_assert!(e.values().all(|v| v > &a && v <= &b));
    }

    #[test]
    fn json_round_trip(k in tree_strategy()) {
        let back = Compactum::from_json(&k.to_json()).unwrap();
        prop_assert_eq!(back, k.normalized());
    }

    #[test]
    fn labels_follow_the_line(k in tree_strategy(), d in 0usize..4) {
        let (a, b) = unit();
        let emb = embed(&k.truncate(d), &a, &b).unwrap();
        let labels = homeo_labels(&k, d).unwrap();
        prop_assert_eq!(labels.entries.len(), emb.points.len());
        let mut pairs: Vec<(&Dyadic, &Ordinal)> = labels
            .entries
            .iter()
            .map(|e| (emb.value_of(&e.address).unwrap(), &e.label))
            .collect();
        pairs.sort();
        for w in pairs.windows(2) {
            prop_assert!(w[0].1 < w[1].1);
        }
        if !k.is_empty() {
            prop_assert_eq!(labels.top.successor(), order_type(&k));
            prop_assert_eq!(ordinal_cb(&labels.top), cb_char(&k).unwrap());
        }
    }

    #[test]
    fn metric_derivative_agrees(k in tree_strategy(), d in 2usize..5) {
        let (a, b) = unit();
        let check = metric_derivative_check(&k, d, &a, &b).unwrap();
        prop_assert!(check.agrees(), "{:?}", check);
    }
}
