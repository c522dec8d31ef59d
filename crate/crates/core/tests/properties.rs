use proptest::prelude::*;
use symvertex::expr::{format_expression, parse_expression};
use symvertex::tableaux::{bounded_height_pairs, syt_count, syt_count_brute, CountMethod};
use symvertex::{basis_element, expand, BasisId, Partition, Scalar, SymFunc};

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn basis() -> impl Strategy<Value = BasisId> {
    prop::sample::select(BasisId::ALL.to_vec())
}

fn combination() -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((basis(), partition(3, 2), -5i64..=5), 0..4).prop_map(|terms| {
        let mut g = SymFunc::zero();
        for (b, l, c) in terms {
            g.add_scaled(&basis_element(b, &l), &Scalar::from_integer(c.into()));
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_is_an_involution(l in partition(12, 12)) {
        let c = l.conjugate();
        prop_assert_eq!(c.size(), l.size());
        prop_assert_eq!(c.len() as u32, l.first());
        prop_assert_eq!(c.conjugate(), l);
    }

    #[test]
    fn insert_then_remove(l in partition(6, 6), mu in partition(6, 4)) {
        let joined = l.insert_parts(&mu);
        prop_assert_eq!(joined.size(), l.size() + mu.size());
        prop_assert_eq!(joined.remove_parts(&mu), Some(l));
    }

    #[test]
    fn printed_expressions_parse_back(g in combination(), target in basis()) {
        let text = format_expression(&g, target);
        prop_assert_eq!(parse_expression(&text).unwrap(), g);
    }

    #[test]
    fn expansion_roundtrips(g in combination(), target in basis()) {
        prop_assert_eq!(expand(&g, target).to_symfunc(), g);
    }

    #[test]
    fn omega_is_an_involution(g in combination()) {
        prop_assert_eq!(g.omega().omega(), g);
    }

    #[test]
    fn hook_length_matches_corner_removal(l in partition(5, 5)) {
        prop_assert_eq!(syt_count(&l), Scalar::from_integer(syt_count_brute(&l).into()));
    }

    #[test]
    fn count_methods_agree(n in 0u32..=5, k in 1u32..=4) {
        let closed = bounded_height_pairs(n, k, CountMethod::Closed);
        prop_assert_eq!(&closed, &bounded_height_pairs(n, k, CountMethod::Det));
        prop_assert_eq!(&closed, &bounded_height_pairs(n, k, CountMethod::Brute));
    }
}
