use super::examples::*;
use super::otdisc::*;
use super::*;
use crate::fdtc::rational::{int, ratio};
use bounds::{aggregate_bounds, elliptic_point_bounds, multi_point_bounds, Mode};

#[test]
fn examples_validate_and_corruptions_are_flagged() {
    for (name, g) in valid_graphs() {
        assert_eq!(g.validate(), Vec::<String>::new(), "{name}");
        for (what, h) in corruptions(&g) {
            assert!(!h.validate().is_empty(), "{name}: corrupting {what} went unnoticed");
        }
    }
}

#[test]
fn self_linking_values() {
    let c = |a, b, x, y| SingularityCounts { e_plus: a, e_minus: b, h_plus: x, h_minus: y };
    assert_eq!(self_linking(&c(2, 0, 1, 0), false).unwrap(), -1);
    assert_eq!(self_linking(&c(1, 0, 0, 0), false).unwrap(), -1);
    assert_eq!(self_linking(&c(3, 1, 4, 2), false).unwrap(), 0);
    assert!(self_linking(&c(1, 1, 0, 0), true).is_err());
    assert_eq!(self_linking(&unknot_disc().counts(), false).unwrap(), -1);
}

#[test]
fn euler_diagnostics() {
    let mut g = valid_graphs().into_iter().find(|(n, _)| *n == "torus").unwrap().1;
    g.elliptic.push(EllipticPoint {
        id: "v2".into(),
        sign: -1,
        binding: "C1".into(),
        essential: false,
        strongly_essential: false,
        a_arcs: false,
    });
    let d = g.validate().join("\n");
    assert!(d.contains("algebraic intersection nonzero"), "{d}");
}

fn point_graph(sign: i8, p: usize, n: usize) -> FoliationGraph {
    // a strongly essential point with p positive and n negative bb-neighbours
    let mut g = ot_disc(1);
    g.elliptic[0].sign = sign;
    g.hyperbolic.clear();
    g.incidence.clear();
    for i in 0..p + n {
        g.hyperbolic.push(HyperbolicPoint {
            id: format!("h{i}"),
            sign: if i < p { 1 } else { -1 },
            region: Region::Bb,
            degenerated: false,
        });
        g.incidence.push(("v".into(), format!("h{i}")));
    }
    g
}

#[test]
fn single_point_bounds() {
    let r = elliptic_point_bounds(&point_graph(1, 2, 1), "v", Mode::Monodromy).unwrap();
    assert_eq!((r.lower, r.upper), (Some(int(-1)), Some(int(2))));
    let r = elliptic_point_bounds(&point_graph(-1, 1, 3), "v", Mode::Monodromy).unwrap();
    assert_eq!((r.lower, r.upper), (Some(int(-1)), Some(int(3))));
    let r = elliptic_point_bounds(&point_graph(1, 0, 0), "v", Mode::Monodromy).unwrap();
    assert_eq!((r.lower, r.upper), (Some(int(0)), Some(int(0))));
    let mut g = point_graph(1, 1, 1);
    g.elliptic[0].strongly_essential = false;
    assert!(elliptic_point_bounds(&g, "v", Mode::Monodromy).is_err());
    assert!(elliptic_point_bounds(&g, "v", Mode::Braid).is_ok());
}

#[test]
fn multi_and_aggregate() {
    let mut g = point_graph(1, 3, 1);
    let mut u = g.elliptic[0].clone();
    u.id = "u".into();
    g.elliptic.push(u);
    for (i, s) in [(10, 1), (11, 1), (12, -1), (13, -1)] {
        g.hyperbolic.push(HyperbolicPoint { id: format!("h{i}"), sign: s, region: Region::Bb, degenerated: false });
        g.incidence.push(("u".into(), format!("h{i}")));
    }
    let ids = vec!["v".to_string(), "u".to_string()];
    let r = multi_point_bounds(&g, &ids, Mode::Monodromy).unwrap();
    assert_eq!((r.lower, r.upper), (Some(int(-1)), Some(int(2))));
    // n = 2 positive points, N = 3, P = 5
    let r = aggregate_bounds(&g, &ids, Mode::Monodromy).unwrap();
    assert_eq!((r.lower, r.upper), (Some(-ratio(3, 2)), Some(ratio(5, 2))));
    let one = vec!["v".to_string()];
    assert_eq!(
        aggregate_bounds(&g, &one, Mode::Monodromy).unwrap().upper,
        elliptic_point_bounds(&g, "v", Mode::Monodromy).unwrap().upper
    );
}

#[test]
fn single_point_estimates_always_contain_zero() {
    // Lower ends are -n or -p and upper ends p or n, so intersections are
    // never empty and the inconsistency guard cannot fire on valid counts.
    for sign in [1, -1] {
        for p in 0..4 {
            for n in 0..4 {
                let r = elliptic_point_bounds(&point_graph(sign, p, n), "v", Mode::Monodromy).unwrap();
                assert!(r.contains(&int(0)));
            }
        }
    }
}

#[test]
fn ot_disc_certificates() {
    for k in 1..=4 {
        let r = transverse_ot_disc_check(&ot_disc(k));
        assert!(r.valid && r.non_right_veering, "k = {k}: {r:?}");
    }
    let mut g = ot_disc(3);
    g.c_circles = true;
    let r = transverse_ot_disc_check(&g);
    assert!(!r.valid && r.violations.iter().any(|v| v == C_CIRCLE_CONDITION));
    let mut g = ot_disc(3);
    let i = g.incidence.iter().position(|(v, h)| v == "w1" && h == "h3").unwrap();
    g.incidence[i].0 = "w3".into();
    let r = transverse_ot_disc_check(&g);
    assert_eq!(r.violations, vec![CIRCLE_CONDITION.to_string()]);
    let mut g = ot_disc(3);
    g.hyperbolic[0].sign = -1;
    let r = transverse_ot_disc_check(&g);
    assert!(!r.valid && r.violations.iter().any(|v| v == TREE_CONDITION));
    assert!(!transverse_ot_disc_check(&unknot_disc()).valid);
}

#[test]
fn bc_witness_and_complexity() {
    let annulus = valid_graphs().into_iter().find(|(n, _)| n.starts_with("annulus")).unwrap().1;
    assert!(bc_annulus_witness(&annulus).is_some());
    let mut inessential = annulus.clone();
    inessential.c_circles_essential = false;
    assert!(bc_annulus_witness(&inessential).is_none());
    assert!(bc_annulus_witness(&unknot_disc()).is_none());
    assert_eq!(ot_complexity_interpret(0, false), "tight, right-veering");
    assert_eq!(ot_complexity_interpret(1, false), "overtwisted, not right-veering");
    assert_eq!(ot_complexity_interpret(2, false), "overtwisted, right-veering");
    assert_eq!(ot_complexity_interpret(7, false), "overtwisted, right-veering");
    assert!(ot_complexity_interpret(1, true).contains(" or "));
}
