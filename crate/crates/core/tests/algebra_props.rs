//! Property-based checks of the algebraic laws of the sequence/matrix
//! calculus on randomly generated finite sequences.

use proptest::prelude::*;
use sscalc::seqmat::sequence::{seq_cone, seq_join, shift, shifting_matrix};
use sscalc::seqmat::{named, AugSequence};

fn small_seq() -> impl Strategy<Value = AugSequence> {
    prop::collection::vec(-6i64..=6, 0..6).prop_map(|v| AugSequence::from_ints(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn join_is_commutative(a in small_seq(), b in small_seq()) {
        let ab = seq_join(&a, &b).unwrap();
        let ba = seq_join(&b, &a).unwrap();
        prop_assert!(ab.try_eq(&ba).unwrap());
    }

    #[test]
    fn join_is_associative(a in small_seq(), b in small_seq(), c in small_seq()) {
        let l = seq_join(&seq_join(&a, &b).unwrap(), &c).unwrap();
        let r = seq_join(&a, &seq_join(&b, &c).unwrap()).unwrap();
        prop_assert!(l.try_eq(&r).unwrap());
    }

    #[test]
    fn unit_is_neutral_for_join(a in small_seq()) {
        let j = seq_join(&a, &AugSequence::unit()).unwrap();
        prop_assert!(j.try_eq(&a).unwrap());
    }

    #[test]
    fn cone_is_join_with_point(a in small_seq()) {
        let via_join = seq_join(&a, &AugSequence::point()).unwrap();
        prop_assert!(seq_cone(&a).try_eq(&via_join).unwrap());
    }

    #[test]
    fn shifting_matrix_computes_join(a in small_seq(), b in small_seq()) {
        let r = shifting_matrix(&b).unwrap();
        let via_matrix = r.dot(&a).unwrap();
        let direct = seq_join(&a, &b).unwrap();
        prop_assert!(via_matrix.try_eq(&direct).unwrap());
    }

    #[test]
    fn shift_round_trips(a in small_seq(), k in 0i64..4) {
        // shifting down pads with zeros, so shifting back up recovers a;
        // the opposite order would discard the low entries
        let back = shift(&shift(&a, -k), k);
        prop_assert!(back.try_eq(&a).unwrap());
    }

    #[test]
    fn triangle_action_on_bin_is_identity(a in small_seq()) {
        let acted = named::triangle_action(&a, &named::bin()).unwrap();
        prop_assert!(acted.try_eq(&a).unwrap());
    }

    #[test]
    fn cil_action_matches_breve_product(a in small_seq()) {
        let via_action = named::triangle_action(&a, &named::cil()).unwrap();
        let via_breve = named::breve_cil().dot(&a).unwrap();
        prop_assert!(via_action.try_eq(&via_breve).unwrap());
    }

    #[test]
    fn sd_action_matches_breve_product(a in small_seq()) {
        let via_action = named::triangle_action(&a, &named::cad_plus()).unwrap();
        let via_breve = named::seq_sd(&a).unwrap();
        prop_assert!(via_action.try_eq(&via_breve).unwrap());
    }

    #[test]
    fn cil0_iterates_scale_entries(a in small_seq(), k in 1i64..4) {
        // (cil0^k a)_m = a_m (m + 2)^k
        let mat = named::breve_cil0().iterate_operator(k).unwrap();
        let acted = mat.dot(&a).unwrap();
        let d = a.dim().unwrap().unwrap_or(-1);
        for m in -1..=d {
            let factor = sscalc::seqmat::sequence::scalar_int((m + 2).pow(k as u32));
            prop_assert_eq!(acted.entry(m), a.entry(m) * factor);
        }
    }
}
