//! Property tests for the exact group layer and the classical identities.

use galilei::group::{
    bargmann_loop, cocycle, cocycle_from_phases, Event, Event5, ExtendedGalileiElement,
    GalileiElement,
};
use galilei::mechanics::{inner_product5, lagrangian5, PhaseState};
use galilei::Vec3;
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

fn vec3() -> impl Strategy<Value = Vec3> {
    (coord(), coord(), coord()).prop_map(|(x, y, z)| Vec3::new(x, y, z))
}

fn plain() -> impl Strategy<Value = GalileiElement> {
    (coord(), vec3(), vec3()).prop_map(|(b, a, v)| GalileiElement::new(b, a, v))
}

fn extended() -> impl Strategy<Value = ExtendedGalileiElement> {
    (coord(), coord(), vec3(), vec3())
        .prop_map(|(bm, b, a, v)| ExtendedGalileiElement::new(bm, b, a, v))
}

fn event() -> impl Strategy<Value = Event> {
    (vec3(), coord()).prop_map(|(x, t)| Event::new(x, t))
}

fn event5() -> impl Strategy<Value = Event5> {
    (vec3(), coord(), coord()).prop_map(|(x, t, s)| Event5::new(x, t, s))
}

proptest! {
    #[test]
    fn plain_group_axioms(g in plain(), g2 in plain(), g3 in plain()) {
        let assoc = g.compose(&g2).compose(&g3).distance(&g.compose(&g2.compose(&g3)));
        prop_assert!(assoc <= 1e-12);
        prop_assert_eq!(g.compose(&GalileiElement::IDENTITY), g);
        prop_assert!(g.compose(&g.inverse()).distance(&GalileiElement::IDENTITY) <= 1e-12);
    }

    #[test]
    fn extended_group_axioms(g in extended(), g2 in extended(), g3 in extended()) {
        let assoc = g.compose(&g2).compose(&g3).distance(&g.compose(&g2.compose(&g3)));
        prop_assert!(assoc <= 1e-12);
        prop_assert_eq!(g.compose(&ExtendedGalileiElement::IDENTITY), g);
        prop_assert!(g.compose(&g.inverse()).distance(&ExtendedGalileiElement::IDENTITY) <= 1e-12);
        prop_assert!(g.inverse().inverse().distance(&g) <= 1e-12);
    }

    #[test]
    fn actions_are_left_actions(g in plain(), g2 in plain(), e in event()) {
        let chained = g.act_event(&g2.act_event(&e));
        let direct = g.compose(&g2).act_event(&e);
        prop_assert!((chained.x - direct.x).max_abs() <= 1e-12);
        prop_assert!((chained.t - direct.t).abs() <= 1e-12);
    }

    #[test]
    fn action5_is_left_action(g in extended(), g2 in extended(), e in event5()) {
        let chained = g.act_event5(&g2.act_event5(&e));
        let direct = g.compose(&g2).act_event5(&e);
        prop_assert!((chained.x - direct.x).max_abs() <= 1e-12);
        prop_assert!((chained.t - direct.t).abs() <= 1e-12);
        prop_assert!((chained.s - direct.s).abs() <= 1e-12);
    }

    #[test]
    fn erasure_is_homomorphism(g in extended(), g2 in extended()) {
        let lhs = g.compose(&g2).erase();
        let rhs = g.erase().compose(&g2.erase());
        prop_assert!(lhs.distance(&rhs) <= 1e-12);
    }

    #[test]
    fn projection_commutes_with_actions(g in extended(), e in event5()) {
        let via5 = g.act_event5(&e).project();
        let via4 = g.erase().act_event(&e.project());
        prop_assert!((via5.x - via4.x).max_abs() <= 1e-12);
        prop_assert!((via5.t - via4.t).abs() <= 1e-12);
    }

    #[test]
    fn loop_is_central_and_bilinear(a in vec3(), a2 in vec3(), v in vec3()) {
        let got = bargmann_loop(a, v);
        prop_assert_eq!(got.erase(), GalileiElement::IDENTITY);
        prop_assert!((got.bm - a.dot(v)).abs() <= 1e-12);
        let additive = bargmann_loop(a + a2, v).bm - bargmann_loop(a, v).bm - bargmann_loop(a2, v).bm;
        prop_assert!(additive.abs() <= 1e-10);
    }

    #[test]
    fn cocycle_is_event_independent(g in plain(), g2 in plain(), e in event(), e2 in event()) {
        let m = 1.3;
        let closed = cocycle(&g, &g2, m);
        prop_assert!((cocycle_from_phases(&g, &g2, m, &e) - closed).norm() <= 1e-12);
        prop_assert!((cocycle_from_phases(&g, &g2, m, &e2) - closed).norm() <= 1e-12);
    }

    #[test]
    fn cocycle_property_b(g in plain(), g2 in plain(), g3 in plain()) {
        let m = 1.3;
        let lhs = cocycle(&g, &g2, m) * cocycle(&g.compose(&g2), &g3, m);
        let rhs = cocycle(&g2, &g3, m) * cocycle(&g, &g2.compose(&g3), m);
        prop_assert!((lhs - rhs).norm() <= 1e-12);
    }

    #[test]
    fn composed_boost_preserves_shell(q in vec3(), p in vec3(), v in vec3(), m in 0.1..5.0f64) {
        let c = 10.0;
        let state = PhaseState::on_shell(q, p, m, 0.0, c);
        let out = state.composed_boost_map(v);
        prop_assert!(out.off_shell_error(c) <= 1e-12);
    }

    #[test]
    fn f3_after_f2_is_composed_map(
        q in vec3(), p in vec3(), v in vec3(),
        e in -100.0..100.0f64, m in 0.1..5.0f64, t in coord()
    ) {
        let state = PhaseState::new(q, p, e, m, t);
        let seq = state.f2_map(v).f3_map(v);
        let direct = state.composed_boost_map(v);
        prop_assert!((seq.energy - direct.energy).abs() <= 1e-12 * direct.energy.abs().max(1.0));
        prop_assert!((seq.p - direct.p).max_abs() <= 1e-12);
        prop_assert!((seq.q - direct.q).max_abs() <= 1e-12);
    }

    #[test]
    fn inner_product5_boost_invariant(x in event5(), y in event5(), v in vec3()) {
        let boost = ExtendedGalileiElement::boost(v);
        let before = inner_product5(&x, &y);
        let after = inner_product5(&boost.act_event5(&x), &boost.act_event5(&y));
        prop_assert!((before - after).abs() <= 1e-12 * before.abs().max(1.0));
    }

    #[test]
    fn lagrangian5_boost_invariant(
        xdot in vec3(), sdot in coord(), v in vec3(), m in 0.1..5.0f64
    ) {
        let c = 4.0;
        let before = lagrangian5(xdot, sdot, m, c);
        let after = lagrangian5(xdot - v, sdot - xdot.dot(v) + 0.5 * v.norm_sq(), m, c);
        prop_assert!((before - after).abs() <= 1e-12 * before.abs().max(1.0));
    }
}
