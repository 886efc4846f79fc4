use super::*;
use crate::mcg::Generator;
use crate::surface::SurfaceSpec;

fn torus() -> Surface {
    Surface::new(&SurfaceSpec::new(1, 1)).unwrap()
}

fn tw(s: &Surface, name: &str, w: &str, p: i64) -> Generator {
    Generator::twist(s, name, &s.parse_word(w).unwrap(), p).unwrap()
}

fn value(r: &FdtcResult) -> Rational {
    r.value.clone().unwrap_or_else(|| panic!("unresolved: {r:?}"))
}

#[test]
fn boundary_twist_moves_arcs_right() {
    let s = torus();
    let c = Compiled::new(&s, &MappingClassWord::single(&s, Generator::boundary(&s, "C1", 1).unwrap())).unwrap();
    for a in enumerate_arcs(&s, 0, 3) {
        let img = apply_arc(&s, &c, &a);
        assert_eq!(compare_at_base(&s, &a, &img, 0).unwrap(), Side::RightOf);
    }
}

#[test]
fn positive_twists_are_right_veering() {
    let s = torus();
    for (n, w) in [("a", "a1"), ("b", "b1"), ("ab", "a1 b1")] {
        let c = Compiled::new(&s, &MappingClassWord::single(&s, tw(&s, n, w, 1))).unwrap();
        for a in enumerate_arcs(&s, 0, 3) {
            let img = apply_arc(&s, &c, &a);
            assert_ne!(compare_at_base(&s, &a, &img, 0).unwrap(), Side::LeftOf, "{n} {}", describe_arc(&s, &a));
        }
    }
}

#[test]
fn boundary_twist_powers() {
    let s = torus();
    for k in -3..=3 {
        let w = MappingClassWord::single(&s, Generator::boundary(&s, "C1", k).unwrap());
        assert_eq!(value(&fdtc_exact(&s, &w, "C1").unwrap()), int(k));
    }
}

#[test]
fn chain_relation_value() {
    let s = torus();
    let w = MappingClassWord::new(&s, vec![tw(&s, "a", "a1", 1), tw(&s, "b", "b1", 1)]);
    let r = fdtc_exact(&s, &w, "C1").unwrap();
    assert_eq!(value(&r), ratio(1, 6));
    assert_eq!((r.n, r.d, r.provenance), (Some(31), Some(6), Provenance::ExactTheorem));
    let g = default_probe(&s, 0, 4).unwrap();
    assert_eq!(key_lemma_interval(&s, &w, "C1", &g, 31).unwrap(), RationalInterval::closed(ratio(5, 31), ratio(6, 31)));
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["value"], "1/6");
    assert_eq!(json["N"], 31);
}

#[test]
fn torus_knot_braids() {
    let s = Surface::new(&SurfaceSpec::new(0, 1).with_punctures(2)).unwrap();
    for k in 1..=5 {
        let w = MappingClassWord::single(&s, Generator::braid(&s, 1, k).unwrap());
        assert_eq!(value(&braid_fdtc(&s, &w, "C1").unwrap()), ratio(k, 2), "k = {k}");
    }
}

#[test]
fn annulus_winding() {
    let s = Surface::new(&SurfaceSpec::new(0, 2)).unwrap();
    for k in -2..=2 {
        let w = MappingClassWord::single(&s, Generator::boundary(&s, "C1", k).unwrap());
        assert_eq!(value(&fdtc_exact(&s, &w, "C1").unwrap()), int(k));
        assert_eq!(value(&fdtc_exact(&s, &w, "C2").unwrap()), int(k));
    }
}

#[test]
fn pseudo_anosov_words_resolve() {
    let s = torus();
    let w = MappingClassWord::new(&s, vec![tw(&s, "a", "a1", 1), tw(&s, "b", "b1", -1)]);
    let r = fdtc_exact(&s, &w, "C1").unwrap();
    assert_eq!(value(&r), int(0));
    let w = MappingClassWord::new(&s, vec![tw(&s, "a", "a1", 2), tw(&s, "b", "b1", 1)]);
    let c = value(&fdtc_exact(&s, &w, "C1").unwrap());
    assert!(c > int(0) && c < int(1), "{c}");
}

