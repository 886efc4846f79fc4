use num_traits::Signed;
use openbook_core::curves::{enumerate_arcs, geometric_intersection, ClosedCurve, NormalCoordinates};
use openbook_core::fdtc::rational::{int, ratio};
use openbook_core::fdtc::{fdtc_exact, unique_bounded_denominator, BoundedDenominator, RationalInterval};
use openbook_core::foliation::bounds::Mode;
use openbook_core::mcg::{apply, Generator, MappingClassWord};
use openbook_core::surface::{Surface, SurfaceSpec};
use openbook_core::topology::{self, CoefficientAssignment, Conclusion};
use openbook_core::Rational;
use proptest::prelude::*;

fn torus() -> Surface {
    Surface::new(&SurfaceSpec::new(1, 1)).unwrap()
}

fn word(s: &Surface, code: &[(bool, i64)]) -> MappingClassWord {
    let gens = code
        .iter()
        .map(|&(a, p)| {
            let (n, w) = if a { ("a", "a1") } else { ("b", "b1") };
            Generator::twist(s, n, &s.parse_word(w).unwrap(), p).unwrap()
        })
        .collect();
    MappingClassWord::new(s, gens)
}

fn code(max: usize) -> impl Strategy<Value = Vec<(bool, i64)>> {
    prop::collection::vec((any::<bool>(), prop_oneof![Just(-1i64), Just(1i64), Just(2i64)]), 0..=max)
}

fn curve(s: &Surface, w: &str) -> NormalCoordinates {
    NormalCoordinates::Curve(ClosedCurve::new(s, &s.parse_word(w).unwrap()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn action_is_a_group_action(u in code(4), v in code(4)) {
        let s = torus();
        let (wu, wv) = (word(&s, &u), word(&s, &v));
        for x in [curve(&s, "a1"), curve(&s, "b1"), curve(&s, "a1 b1")] {
            let direct = apply(&s, &wu.compose(&wv), &x).unwrap();
            let stepwise = apply(&s, &wu, &apply(&s, &wv, &x).unwrap()).unwrap();
            prop_assert_eq!(direct, stepwise);
            let back = apply(&s, &wu.invert(), &apply(&s, &wu, &x).unwrap()).unwrap();
            prop_assert_eq!(back, x);
        }
        for a in enumerate_arcs(&s, 0, 2) {
            let x = NormalCoordinates::Arc(a);
            let direct = apply(&s, &wu.compose(&wv), &x).unwrap();
            let stepwise = apply(&s, &wu, &apply(&s, &wv, &x).unwrap()).unwrap();
            prop_assert_eq!(direct, stepwise);
        }
    }

    #[test]
    fn intersection_is_invariant(u in code(5)) {
        let s = torus();
        let w = word(&s, &u);
        let (x, y) = (curve(&s, "a1"), curve(&s, "a1 b1"));
        let (fx, fy) = (apply(&s, &w, &x).unwrap(), apply(&s, &w, &y).unwrap());
        prop_assert_eq!(geometric_intersection(&s, &fx, &fy), geometric_intersection(&s, &x, &y));
        prop_assert_eq!(geometric_intersection(&s, &fx, &fy), geometric_intersection(&s, &fy, &fx));
    }

    #[test]
    fn fdtc_is_homogeneous_and_shifts(u in code(4), k in 1i64..=3) {
        let s = torus();
        let w = word(&s, &u);
        let c = fdtc_exact(&s, &w, "C1").unwrap().value.unwrap();
        let ck = fdtc_exact(&s, &w.power(k), "C1").unwrap().value.unwrap();
        prop_assert_eq!(ck, &c * int(k));
        let t = MappingClassWord::single(&s, Generator::boundary(&s, "C1", k).unwrap());
        let shifted = fdtc_exact(&s, &t.compose(&w), "C1").unwrap().value.unwrap();
        prop_assert_eq!(shifted, c + int(k));
    }

    #[test]
    fn bounded_denominator_is_sound(p in -50i64..50, q in 1i64..=12, d in 1u64..=12, w in 0i64..100) {
        let x = ratio(p, q);
        let i = RationalInterval::closed(x.clone() - ratio(w, 1000), x.clone() + ratio(w, 1000));
        match unique_bounded_denominator(&i, d).unwrap() {
            BoundedDenominator::Unique(r) => {
                prop_assert!(i.contains(&r) && r.denom() <= &num_bigint::BigInt::from(d));
                if q as u64 <= d { prop_assert_eq!(r, x); }
            }
            BoundedDenominator::Ambiguous(v) => prop_assert!(v.len() > 1 && v.windows(2).all(|p| p[0] < p[1])),
            BoundedDenominator::Empty => prop_assert!(q as u64 > d),
        }
    }

    #[test]
    fn verdicts_are_monotone(cs in prop::collection::vec((-30i64..30, 1i64..6), 1..=3), extra in 0i64..10, connected in any::<bool>()) {
        let connected = connected && cs.len() == 1;
        let build = |bump: i64| {
            let pairs: Vec<(String, Rational)> = cs.iter().enumerate().map(|(j, &(p, q))| {
                let c = ratio(p, q);
                let c = if c.is_negative() { c - int(bump) } else { c + int(bump) };
                (format!("C{}", j + 1), c)
            }).collect();
            let refs: Vec<(&str, Rational)> = pairs.iter().map(|(l, c)| (l.as_str(), c.clone())).collect();
            CoefficientAssignment::from_pairs(&refs, Mode::Monodromy, connected).unwrap()
        };
        let (a, b) = (build(0), build(extra));
        let fired = |v: Conclusion| v != Conclusion::Inconclusive;
        if fired(topology::irreducibility_verdict(&a).conclusion) {
            prop_assert!(fired(topology::irreducibility_verdict(&b).conclusion));
        }
        if fired(topology::stabilization_obstruction(&a).unwrap().conclusion) {
            prop_assert!(fired(topology::stabilization_obstruction(&b).unwrap().conclusion));
        }
        for nt in [openbook_core::surface::NtType::PseudoAnosov, openbook_core::surface::NtType::Reducible] {
            if fired(topology::geometry_verdict(&a, nt).conclusion) {
                prop_assert_eq!(topology::geometry_verdict(&a, nt).conclusion, topology::geometry_verdict(&b, nt).conclusion);
            }
        }
    }
}
