use super::*;
use crate::surface::SurfaceSpec;
use crate::word::Letter;

fn torus() -> Surface {
    Surface::new(&SurfaceSpec::new(1, 1)).unwrap()
}

fn tw(s: &Surface, name: &str, w: &str, p: i64) -> Generator {
    Generator::twist(s, name, &s.parse_word(w).unwrap(), p).unwrap()
}

fn lifted(s: &Surface, gens: Vec<Generator>) -> LiftedAction {
    Compiled::new(s, &MappingClassWord::new(s, gens)).unwrap().lifted(s)
}

#[test]
fn chain_relation_holds_exactly() {
    let s = torus();
    let mut gens = Vec::new();
    for _ in 0..6 {
        gens.push(tw(&s, "a", "a1", 1));
        gens.push(tw(&s, "b", "b1", 1));
    }
    let lhs = lifted(&s, gens);
    let rhs = lifted(&s, vec![Generator::boundary(&s, "C1", 1).unwrap()]);
    assert_eq!(lhs, rhs);
}

#[test]
fn braid_relation_holds_exactly() {
    let s = torus();
    let lhs = lifted(&s, vec![tw(&s, "a", "a1", 1), tw(&s, "b", "b1", 1), tw(&s, "a", "a1", 1)]);
    let rhs = lifted(&s, vec![tw(&s, "b", "b1", 1), tw(&s, "a", "a1", 1), tw(&s, "b", "b1", 1)]);
    assert_eq!(lhs, rhs);
}

#[test]
fn inverse_twist_cancels() {
    for spec in [SurfaceSpec::new(1, 1), SurfaceSpec::new(1, 2), SurfaceSpec::new(2, 1), SurfaceSpec::new(0, 1).with_punctures(3)] {
        let s = Surface::new(&spec).unwrap();
        let id = LiftedAction::identity(&s);
        let curves: Vec<Word> = match spec.genus {
            0 => vec![s.parse_word("p1 p2").unwrap(), s.parse_word("p2 p3").unwrap()],
            _ => vec![s.parse_word("a1").unwrap(), s.parse_word("b1").unwrap(), s.parse_word("a1 b1").unwrap()],
        };
        for c in curves {
            let g = Generator::twist(&s, "c", &c, 1).unwrap();
            let l = lifted(&s, vec![g.clone(), g.inverse()]);
            assert_eq!(l, id, "{spec} {}", s.format_word(&c));
        }
    }
}

#[test]
fn lifted_action_matches_direct_twist() {
    let s = Surface::new(&SurfaceSpec::new(1, 2)).unwrap();
    let c = s.parse_word("a1 b1").unwrap();
    let act = LiftedAction::twist(&s, &c, 1).unwrap();
    let c0 = s.base_corner(0);
    for a in crate::curves::enumerate_arcs(&s, 0, 4) {
        let direct = twist::twist_point(&s, c0, &a.end, &c, 1).unwrap();
        assert_eq!(act.apply_point(c0, &a.end), direct);
    }
}

#[test]
fn half_twist_squares_to_twist() {
    let s = Surface::new(&SurfaceSpec::new(0, 1).with_punctures(3)).unwrap();
    let sq = lifted(&s, vec![Generator::braid(&s, 1, 2).unwrap()]);
    let t = LiftedAction::twist(&s, &s.parse_word("p1 p2").unwrap(), 1).unwrap();
    assert_eq!(sq.gens, t.gens);
    let sqi = lifted(&s, vec![Generator::braid(&s, 1, -2).unwrap()]);
    let ti = LiftedAction::twist(&s, &s.parse_word("p1 p2").unwrap(), -1).unwrap();
    assert_eq!(sqi.gens, ti.gens);
    let _ = Letter::new(0, true);
}
