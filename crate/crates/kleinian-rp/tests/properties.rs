//! Property tests for the cross-module invariants.

use proptest::prelude::*;

use kleinian_rp::exponent::ExtExp;
use kleinian_rp::family::ClassificationResult;
use kleinian_rp::presentation::{build, Schema};
use kleinian_rp::table::{classify, two_elliptic_discreteness};
use kleinian_rp::trace::{
    beta_elliptic, classify_element, is_class_d, ElementClass, ElementType, Parameters,
};
use kleinian_rp::upoint::{upoint_from_beta, SlotCond, SlotMatch, UPoint};
use kleinian_rp::word::Word;
use kleinian_rp::Config;

fn cfg() -> Config {
    Config::default()
}

proptest! {
    // β ↦ u ↦ β is the identity on the half-length set
    #[test]
    fn upoint_beta_round_trip_angles(p in 2u32..=200) {
        let beta = 4.0 * UPoint::Angle(p).sinh_sq();
        prop_assert_eq!(
            upoint_from_beta(beta, SlotCond::any(2), 1e-9, 200),
            SlotMatch::Hit(UPoint::Angle(p))
        );
        // a primitive slot value classifies with one turn
        if p >= 2 {
            match classify_element(beta, &cfg()).unwrap() {
                ElementType::Admissible(ElementClass::Elliptic { order, turns }) => {
                    prop_assert_eq!((order, turns), (p, 1));
                }
                other => prop_assert!(false, "unexpected {:?}", other),
            }
        }
    }

    #[test]
    fn upoint_beta_round_trip_lengths(l in 1e-3f64..3.0) {
        let beta = 4.0 * UPoint::Len(l).sinh_sq();
        match upoint_from_beta(beta, SlotCond::any(2), 1e-9, 200) {
            SlotMatch::Hit(UPoint::Len(m)) => prop_assert!((l - m).abs() < 1e-12),
            other => prop_assert!(false, "expected a length, got {:?}", other),
        }
    }

    // the membership gate is symmetric in (β, β′)
    #[test]
    fn gate_swap_symmetric(b in -5.0f64..6.0, bp in -5.0f64..6.0, g in -6.0f64..6.0) {
        let p = Parameters::new(b, bp, g);
        prop_assert_eq!(is_class_d(p, &cfg()), is_class_d(p.swapped(), &cfg()));
    }

    // classify verdicts are invariant under swapping the generator roles
    #[test]
    fn classify_swap_verdict(n in 3u32..=9, m in 3u32..=9, k in 0u32..40) {
        let p = Parameters::new(
            beta_elliptic(n),
            beta_elliptic(m),
            -0.2 - 0.17 * f64::from(k),
        );
        let a = classify(p, &cfg());
        let b = classify(p.swapped(), &cfg());
        prop_assert_eq!(a.code(), b.code());
        prop_assert_eq!(a.matches().len(), b.matches().len());
    }

    // free reduction: no adjacent equal symbols, no zero exponents, and
    // w · w⁻¹ cancels completely
    #[test]
    fn word_inverse_cancels(raw in proptest::collection::vec((0usize..4, -3i32..=3), 0..24)) {
        let syms = ['f', 'g', 'x', 'y'];
        let w = Word::from_letters(raw.iter().map(|&(i, e)| (syms[i], e)));
        for pair in w.letters().windows(2) {
            prop_assert_ne!(pair[0].0, pair[1].0);
        }
        prop_assert!(w.letters().iter().all(|&(_, e)| e != 0));
        prop_assert!(w.concat(&w.inverse()).is_empty());
    }

    // abstract form drops exactly the ∞ relators and is idempotent
    #[test]
    fn abstract_idempotent(si in 0usize..11, raw in proptest::collection::vec(0u8..5, 4)) {
        let schema = Schema::ALL[si];
        let exps: Vec<ExtExp> = raw
            .iter()
            .take(schema.arity())
            .map(|&r| match r {
                0 => ExtExp::Inf,
                1 => ExtExp::BarInf,
                k => ExtExp::Fin(u32::from(k) + 1),
            })
            .collect();
        if exps.len() == schema.arity() {
            let p = build(schema, &exps).unwrap();
            let a = p.to_abstract();
            prop_assert_eq!(a.to_abstract(), a.clone());
            prop_assert!(a.relators.iter().all(|r| r.exponent != ExtExp::Inf));
            prop_assert!(p.relators.iter().all(|r| r.exponent != ExtExp::BarInf));
        }
    }

    // dense β round trip through the arcsin/arcsinh inversion arithmetic
    #[test]
    fn beta_half_length_arithmetic_round_trip(beta in -4.0f64..8.0) {
        let back = if beta >= 0.0 {
            let l = (beta.sqrt() / 2.0).asinh();
            4.0 * l.sinh() * l.sinh()
        } else {
            let theta = ((-beta).sqrt() / 2.0).min(1.0).asin();
            -4.0 * theta.sin() * theta.sin()
        };
        prop_assert!((back - beta).abs() <= 1e-12);
    }

    // rotation angle of the commutator root against γ, both ways
    #[test]
    fn gamma_angle_round_trip(phi in 1e-6f64..std::f64::consts::PI - 1e-6) {
        let gamma = kleinian_rp::realize::gamma_of_angle(phi).unwrap();
        prop_assert!((-4.0..0.0).contains(&gamma));
        let back = kleinian_rp::realize::angle_of_gamma(gamma).unwrap();
        prop_assert!((back - phi).abs() <= 1e-12);
    }

    // classification and realization are total on finite triples
    #[test]
    fn classify_and_realize_total(
        b in -10.0f64..20.0,
        bp in -10.0f64..20.0,
        g in -30.0f64..30.0,
    ) {
        let cfg = cfg();
        let p = Parameters::new(b, bp, g);
        let res = classify(p, &cfg);
        prop_assert!((0..=3).contains(&res.code()));
        let m = kleinian_rp::realize::realize(p, &cfg).measured_params();
        prop_assert!((m.beta - b).abs() <= 1e-8 * 1f64.max(b.abs()));
        prop_assert!((m.gamma - g).abs() <= 1e-8 * 1f64.max(g.abs()));
    }

    // extended exponents: division undoes multiplication, gcd convention
    #[test]
    fn exponent_conventions(k in 1u32..500, d in 1u32..16) {
        prop_assert_eq!(ExtExp::Fin(k * d).checked_div(d), Some(ExtExp::Fin(k)));
        prop_assert_eq!(ExtExp::Inf.checked_div(d), Some(ExtExp::Inf));
        prop_assert_eq!(ExtExp::Inf.gcd(d), d);
        prop_assert_eq!(ExtExp::BarInf.gcd(d), d);
        prop_assert!(ExtExp::BarInf > ExtExp::Inf && ExtExp::Inf > ExtExp::Fin(k));
    }
}

// the two-elliptic criterion agrees with the full table inversion on the
// gated region
#[test]
fn two_elliptic_matches_classify_on_gated_grid() {
    let cfg = cfg();
    for n in 3..=12u32 {
        for m in 3..=12u32 {
            let beta = beta_elliptic(n);
            let beta_prime = beta_elliptic(m);
            let cap = -beta * beta_prime / 4.0;
            let mut gamma = -7.9;
            while gamma < cap {
                if cap - gamma > 1e-6 {
                    let via_clauses = two_elliptic_discreteness(n, m, gamma, &cfg);
                    let via_table = classify(Parameters::new(beta, beta_prime, gamma), &cfg);
                    assert_eq!(
                        via_clauses.code(),
                        via_table.code(),
                        "(n={n}, m={m}, γ={gamma}): {via_clauses:?} vs {via_table:?}"
                    );
                }
                gamma += 0.19;
            }
        }
    }
}

// every finite-exponent census member of the two-elliptic-word families
// verifies its full relator list numerically
#[test]
fn census_gt_tet_relators_verify() {
    use kleinian_rp::census::{finite_volume_census, generating_instance, CensusFilter};
    use kleinian_rp::verify::verify_relators;

    let cfg = cfg();
    let mut verified = 0;
    for entry in finite_volume_census(CensusFilter::All, None, cfg.census_bound) {
        if !matches!(entry.schema, Schema::GT | Schema::Tet) {
            continue;
        }
        let inst = generating_instance(&entry, &cfg).unwrap();
        let report = verify_relators(&inst, &cfg).unwrap();
        assert!(!report.partial, "{}", entry.group_name());
        assert!(report.all_pass, "{}: {report:?}", entry.group_name());
        verified += 1;
    }
    assert_eq!(verified, 10); // 3 cusped GT + 3 compact Tet + 4 cusped Tet
}

// presentations survive a JSON round trip
#[test]
fn presentation_json_round_trip() {
    for schema in Schema::ALL {
        let exps: Vec<ExtExp> = (0..schema.arity())
            .map(|i| if i == 0 { ExtExp::Fin(5) } else { ExtExp::Inf })
            .collect();
        let p = build(schema, &exps).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        let back: kleinian_rp::Presentation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}

// classification results with matches serialize with their data intact
#[test]
fn classification_json_round_trip() {
    let cfg = cfg();
    let res = classify(Parameters::new(-3.0, -3.0, -4.0), &cfg);
    let json = serde_json::to_string(&res).unwrap();
    let back: ClassificationResult = serde_json::from_str(&json).unwrap();
    assert_eq!(back, res);
}
