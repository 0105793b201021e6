mod common;

use common::*;
use proptest::prelude::*;
use skeinlab::bigon;
use skeinlab::diagram::reduce;
use skeinlab::oracle::naive_reduce;
use skeinlab::sl2;
use skeinlab::{HalfLaurent, Specialization};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn printed_forms_read_back(p in printable()) {
        p.round_trips().map_err(TestCaseError::fail)?;
    }

    #[test]
    fn scalars_form_a_commutative_ring(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, HalfLaurent::zero());
        prop_assert_eq!(&x * &HalfLaurent::one(), x.clone());
    }

    #[test]
    fn specialization_is_a_ring_map(x in scalar(), y in scalar()) {
        for s0 in Specialization::defaults() {
            prop_assert_eq!(s0.eval(&(&x * &y)), s0.eval(&x) * s0.eval(&y));
            prop_assert_eq!(s0.eval(&(&x + &y)), s0.eval(&x) + s0.eval(&y));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_agrees_with_smoothing_oracle(d in stated_word()) {
        prop_assert_eq!(reduce(&d), naive_reduce(&d));
    }

    #[test]
    fn skein_product_is_associative(x in skein_element(), y in skein_element(), z in skein_element()) {
        let left = bigon::mul(&bigon::mul(&x, &y), &z);
        let right = bigon::mul(&x, &bigon::mul(&y, &z));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn transport_is_multiplicative(x in hopf_element(), y in hopf_element()) {
        let lhs = sl2::to_skein(&sl2::mul(&x, &y));
        let rhs = bigon::mul(&sl2::to_skein(&x), &sl2::to_skein(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transport_round_trips(x in hopf_element(), y in skein_element()) {
        prop_assert_eq!(sl2::from_skein(&sl2::to_skein(&x)), x);
        prop_assert_eq!(sl2::to_skein(&sl2::from_skein(&y)), y);
    }

    #[test]
    fn counit_is_multiplicative(x in skein_element(), y in skein_element()) {
        prop_assert_eq!(bigon::counit(&bigon::mul(&x, &y)), &bigon::counit(&x) * &bigon::counit(&y));
    }
}
