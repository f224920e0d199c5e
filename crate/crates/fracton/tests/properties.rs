//! Randomized invariants, mostly over the exact-rational layer where a
//! counterexample would silently corrupt everything downstream.

mod common;

use common::{brute_force_farey, farey_size_from_totients};
use fracton::spectrum::{self, FillingFactor, FractalClass, HausdorffLabel};
use fracton::{entropy, statistics};
use fracton::{FareySequence, Fraction};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use proptest::prelude::*;

fn any_fraction() -> impl Strategy<Value = Fraction> {
    (-10_000i64..10_000, 1i64..400).prop_map(|(p, q)| Fraction::new(p, q).unwrap())
}

fn nonneg_fraction() -> impl Strategy<Value = Fraction> {
    (0i64..10_000, 1i64..400).prop_map(|(p, q)| Fraction::new(p, q).unwrap())
}

fn is_reduced(f: &Fraction) -> bool {
    f.denom() > &BigInt::from(0) && f.numer().gcd(f.denom()).is_one()
}

proptest! {
    #[test]
    fn arithmetic_keeps_fractions_reduced(a in any_fraction(), b in any_fraction()) {
        prop_assert!(is_reduced(&(&a + &b)));
        prop_assert!(is_reduced(&(&a - &b)));
        prop_assert!(is_reduced(&(&a * &b)));
        prop_assert!(is_reduced(&a.mediant(&b)));
        prop_assert!(is_reduced(&-&a));
    }

    #[test]
    fn mediant_lies_strictly_between(a in any_fraction(), b in any_fraction()) {
        prop_assume!(a < b);
        let m = a.mediant(&b);
        prop_assert!(a < m && m < b);
    }

    #[test]
    fn ordering_agrees_with_cross_multiplication(a in any_fraction(), b in any_fraction()) {
        let cross = (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()));
        prop_assert_eq!(a.cmp(&b), cross);
    }

    #[test]
    fn wire_form_round_trips(a in any_fraction()) {
        let rewired: Fraction = a.wire().parse().unwrap();
        prop_assert_eq!(&rewired, &a);
        let redisplayed: Fraction = a.to_string().parse().unwrap();
        prop_assert_eq!(&redisplayed, &a);
    }

    #[test]
    fn classification_stays_in_range_and_is_two_periodic(nu in nonneg_fraction()) {
        let filling = FillingFactor::new(nu.clone()).unwrap();
        let label = spectrum::classify(&filling).into_fraction();
        prop_assert!(label >= Fraction::one() && label <= Fraction::integer(2));
        if !nu.is_integer() {
            prop_assert!(label > Fraction::one() && label < Fraction::integer(2));
        }
        let shifted = FillingFactor::new(&nu + &Fraction::integer(2)).unwrap();
        prop_assert_eq!(spectrum::classify(&shifted).into_fraction(), label);
    }

    #[test]
    fn duality_is_involutive_and_compatible(nu in nonneg_fraction()) {
        let filling = FillingFactor::new(nu).unwrap();
        let dual = spectrum::dual_filling(&filling);
        prop_assert_eq!(&spectrum::dual_filling(&dual), &filling);
        let lhs = spectrum::classify(&dual).into_fraction();
        let rhs = Fraction::integer(3) - spectrum::classify(&filling).into_fraction();
        prop_assert_eq!(lhs, rhs);
        let label = spectrum::classify(&filling);
        prop_assert_eq!(spectrum::dual_label(&spectrum::dual_label(&label)), label);
    }

    #[test]
    fn class_members_sound_and_complete_to_a_bound(nu in nonneg_fraction()) {
        let label = spectrum::classify(&FillingFactor::new(nu).unwrap());
        let bound = Fraction::integer(12);

        let members: Vec<Fraction> = FractalClass::new(label.clone())
            .members()
            .take_while(|m| *m <= bound)
            .collect();
        for pair in members.windows(2) {
            prop_assert!(pair[0] < pair[1]);
        }
        for member in &members {
            let reclassified = spectrum::classify_fraction(member).unwrap();
            prop_assert_eq!(reclassified.fraction(), label.fraction());
        }

        // independent scan: everything with the same label and denominator
        // below the bound must already be in the stream
        let q: BigInt = label.fraction().denom().clone();
        let mut expected = Vec::new();
        let mut p = BigInt::from(0);
        let top: BigInt = &q * 12;
        while p <= top {
            let candidate = Fraction::new(p.clone(), q.clone()).unwrap();
            if spectrum::classify_fraction(&candidate).unwrap().fraction() == label.fraction() {
                expected.push(candidate);
            }
            p += 1;
        }
        prop_assert_eq!(members, expected);
    }

    #[test]
    fn farey_series_structure(order in 1u32..=60) {
        let seq = FareySequence::generate(order).unwrap();
        prop_assert_eq!(seq.len(), farey_size_from_totients(order as u64));
        prop_assert_eq!(seq.elements().first().unwrap(), &Fraction::zero());
        prop_assert_eq!(seq.elements().last().unwrap(), &Fraction::one());
        for f in seq.elements() {
            prop_assert!(is_reduced(f));
            prop_assert!(f.denom() <= &BigInt::from(order));
        }
        // mirror symmetry about 1/2
        let reflected: Vec<Fraction> = seq
            .elements()
            .iter()
            .rev()
            .map(|x| Fraction::one() - x.clone())
            .collect();
        prop_assert_eq!(seq.elements(), &reflected[..]);
    }

    #[test]
    fn farey_matches_brute_force(order in 1u32..=40) {
        let seq = FareySequence::generate(order).unwrap();
        prop_assert_eq!(seq.elements(), &brute_force_farey(order as u64)[..]);
    }

    #[test]
    fn solver_residual_and_exclusion_bound(h in 1.0f64..=2.0, exponent in -6.0f64..6.0) {
        let xi = 10.0f64.powf(exponent);
        prop_assume!(!(h == 2.0 && xi <= 1.0));
        let point = statistics::solve_point(h, xi).unwrap();
        prop_assert!(point.residual.abs() < 1e-12);
        prop_assert!(point.n > 0.0);
        prop_assert!(point.y >= 2.0);
        if h < 2.0 {
            prop_assert!(point.n <= 1.0 / (2.0 - h));
        }
    }

    #[test]
    fn occupation_strictly_decreases_in_weight(
        h in 1.0f64..=1.75,
        base in -1.0f64..2.0,
        factor in 1.001f64..10.0,
    ) {
        let xi = 10.0f64.powf(base);
        let lower = statistics::occupation(h, xi).unwrap();
        let higher = statistics::occupation(h, xi * factor).unwrap();
        prop_assert!(higher < lower, "n({}) = {higher} !< n({xi}) = {lower}", xi * factor);
    }

    #[test]
    fn entropy_nonnegative_inside_the_strip(h in 1.0f64..=2.0, fill in 0.02f64..0.98) {
        let top = if h < 2.0 { 1.0 / (2.0 - h) } else { 4.0 };
        let s = entropy::entropy_per_state(h, fill * top, 1.0).unwrap();
        prop_assert!(s >= 0.0);
    }

    #[test]
    fn equilibrium_residual_vanishes(h in 1.0f64..=2.0, y in 2.5f64..10.0) {
        let xi = ((h - 1.0) * (y - 1.0).ln() + (2.0 - h) * (y - 2.0).ln()).exp();
        let residual = entropy::equilibrium_residual(h, xi, 1.0).unwrap();
        prop_assert!(residual < 1e-6, "residual {residual} at h={h}, xi={xi}");
    }

    #[test]
    fn mediant_certificates_hold_for_random_neighbors(
        order in 1u32..=30,
        index in 0usize..200,
    ) {
        let seq = FareySequence::generate(order).unwrap();
        let index = index % (seq.len() - 1);
        let a = seq.elements()[index].clone();
        let b = seq.elements()[index + 1].clone();
        let cert = fracton::farey::certify_mediant_minimal(&seq, &a, &b).unwrap();
        prop_assert!(cert.holds());
        prop_assert_eq!(cert.mediant, a.mediant(&b));
    }
}

#[test]
fn theorem_entries_match_labels_exactly_at_a_larger_order() {
    let report = spectrum::check_second_member_theorem(60).unwrap();
    assert!(report.all_hold());
    // digits get large enough here that machine-word arithmetic would have
    // overflowed long ago if anything silently truncated
    let label = HausdorffLabel::new(Fraction::new(119, 60).unwrap()).unwrap();
    let members = spectrum::class_members(&label, 2);
    assert_eq!(members[1], Fraction::new(119, 60).unwrap());
}
