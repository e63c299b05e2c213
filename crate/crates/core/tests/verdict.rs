use ellsurf::isotrivial::build_product_quotient;
use ellsurf::kodaira::{numerical_invariants, FiberConfiguration, FiberKind, FiberType, KodairaDim};
use ellsurf::orbifold::{qtilde_criterion, QTilde};
use ellsurf::verdict::{rules, MinimalModelClass, VerdictError};
use ellsurf::{evaluate, Rational, Status, SurfaceDescription};
use proptest::prelude::*;

fn fiber() -> impl Strategy<Value = FiberType> {
    prop_oneof![
        (1u32..=6).prop_map(|n| FiberType::simple(FiberKind::I(n))),
        (0u32..=3).prop_map(|n| FiberType::simple(FiberKind::IStar(n))),
        prop::sample::select(vec![FiberKind::II, FiberKind::III, FiberKind::IV, FiberKind::IVStar, FiberKind::IIStar])
            .prop_map(FiberType::simple),
        (2u32..=6).prop_map(|m| FiberType::multiple(m).unwrap()),
    ]
}

fn kappa_one() -> impl Strategy<Value = FiberConfiguration> {
    (0u32..=2, proptest::collection::vec(fiber(), 1..14)).prop_filter_map("kappa = 1", |(g, fibers)| {
        let c = FiberConfiguration::new(g, fibers);
        let inv = numerical_invariants(&c).ok()?;
        (inv.kappa == KodairaDim::One).then_some(c)
    })
}

#[test]
fn kappa_nonpositive_needs_a_class() {
    let c = FiberConfiguration::new(0, vec![FiberType::simple(FiberKind::I(1)); 12]);
    assert_eq!(numerical_invariants(&c).unwrap().kappa, KodairaDim::NegInfinity);
    assert_eq!(
        evaluate(&SurfaceDescription::new(c.clone())),
        Err(VerdictError::MissingMinimalModelClass(KodairaDim::NegInfinity))
    );
    let r = evaluate(&SurfaceDescription::new(c.clone()).with_class(MinimalModelClass::Rational)).unwrap();
    assert_eq!(r.answers(), [Status::No; 3]);
    let r = evaluate(&SurfaceDescription::new(c).with_class(MinimalModelClass::Ruled(1))).unwrap();
    assert_eq!(r.answers(), [Status::Yes; 3]);
}

#[test]
fn base_genus_must_match_the_action() {
    let pq = build_product_quotient(2).unwrap();
    let mut config = pq.config.clone();
    config.base_genus = 1;
    let err = evaluate(&SurfaceDescription::new(config).with_action(pq.action)).unwrap_err();
    assert!(matches!(err, VerdictError::BaseGenusMismatch { action: 0, config: 1 }));
}

#[test]
fn standard_isotrivial_family() {
    for g1 in 2..=6 {
        let pq = build_product_quotient(g1).unwrap();
        let r = evaluate(&SurfaceDescription::new(pq.config).with_action(pq.action)).unwrap();
        assert_eq!(r.answers(), [Status::No; 3], "g1 = {g1}");
        assert_eq!(r.pi1_finite, Status::Yes);
        assert!(r.cites(rules::STANDARD_ISOTRIVIAL) && r.cites(rules::FINITE_PI1));
    }
}

proptest! {
    #[test]
    fn non_isotrivial_answers_follow_the_base_twist(c in kappa_one()) {
        let r = evaluate(&SurfaceDescription::new(c.clone())).unwrap();
        let degree = Rational::from_integer((2 * i64::from(c.base_genus) - 2).into()) + &r.lambda;
        let expect = if c.euler() == 0 || degree >= Rational::from_integer(0.into()) { Status::Yes } else { Status::No };
        prop_assert_eq!(r.answers(), [expect; 3]);
        prop_assert_eq!(r.pi1_finite == Status::Yes, r.omega_pseff == Status::No);
        if qtilde_criterion(&c) == QTilde::Yes {
            prop_assert_eq!(r.qtilde_positive, Status::Yes);
            prop_assert!(r.cites(rules::QTILDE_CRITERION));
        }
        prop_assert!(!r.case_trace.is_empty());
        prop_assert_eq!(evaluate(&SurfaceDescription::new(c)).unwrap(), r);
    }

    #[test]
    fn standard_isotrivial_matches_non_isotrivial(c in kappa_one()) {
        let mut iso = c.clone().isotrivial(true);
        iso.assumptions.standard = Some(true);
        let a = evaluate(&SurfaceDescription::new(c)).unwrap();
        let b = evaluate(&SurfaceDescription::new(iso)).unwrap();
        prop_assert_eq!(a.answers(), b.answers());
        prop_assert_eq!(a.pi1_finite, b.pi1_finite);
    }

    #[test]
    fn non_standard_never_answers_no(c in kappa_one(), nef in any::<bool>(), pseff in any::<bool>()) {
        let mut iso = c.isotrivial(true);
        iso.assumptions.standard = Some(false);
        iso.assumptions.zeta_nef_codim_one = nef;
        iso.assumptions.zeta_pseudoeffective = pseff;
        let r = evaluate(&SurfaceDescription::new(iso)).unwrap();
        prop_assert!(r.answers().iter().all(|&s| s != Status::No));
        let [o, q, n] = r.answers();
        prop_assert!(o == q && q == n);
        if r.omega_pseff == Status::Unknown {
            prop_assert!(r.cites(rules::NON_STANDARD_OPEN));
            prop_assert_eq!(r.pi1_finite, Status::Unknown);
        }
    }
}
