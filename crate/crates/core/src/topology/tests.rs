use super::*;

fn assign(pairs: &[(&str, Rational)], connected: bool) -> CoefficientAssignment {
    CoefficientAssignment::from_pairs(pairs, Mode::Monodromy, connected).unwrap()
}

#[test]
fn irreducibility_examples() {
    let a = assign(&[("C1", ratio(7, 2)), ("C2", int(-4))], false);
    assert_eq!(irreducibility_verdict(&a).conclusion, Conclusion::Irreducible);
    let a = assign(&[("C1", ratio(5, 4))], true);
    assert_eq!(irreducibility_verdict(&a).criterion, "irreducibility/connected");
    let a = assign(&[("C1", int(3)), ("C2", int(5))], false);
    assert_eq!(irreducibility_verdict(&a).conclusion, Conclusion::Inconclusive);
    let a = assign(&[("C1", int(1))], true);
    assert_eq!(irreducibility_verdict(&a).conclusion, Conclusion::Inconclusive);
}

#[test]
fn atoroidality_examples() {
    let a = assign(&[("C1", ratio(9, 2)), ("C2", int(5))], false);
    assert_eq!(atoroidality_verdict(&a, NtType::PseudoAnosov, false).conclusion, Conclusion::IrreducibleAndAtoroidal);
    let a = assign(&[("C1", ratio(5, 2)), ("C2", int(3))], false);
    assert_eq!(atoroidality_verdict(&a, NtType::PseudoAnosov, false).conclusion, Conclusion::Inconclusive);
    let v = atoroidality_verdict(&a, NtType::PseudoAnosov, true);
    assert_eq!(v.conclusion, Conclusion::Atoroidal);
    assert_eq!(v.criterion, "atoroidality/tight");
    // Literal reading: negative coefficients do not satisfy c > 2.
    let a = assign(&[("C1", ratio(-5, 2)), ("C2", int(3))], false);
    assert_eq!(atoroidality_verdict(&a, NtType::PseudoAnosov, true).conclusion, Conclusion::Inconclusive);
    let a = assign(&[("C1", int(9))], false);
    assert_eq!(atoroidality_verdict(&a, NtType::Reducible, true).conclusion, Conclusion::Inconclusive);
}

#[test]
fn geometry_examples() {
    let a = assign(&[("C1", ratio(3, 2))], true);
    assert_eq!(geometry_verdict(&a, NtType::PseudoAnosov).conclusion, Conclusion::Hyperbolic);
    let a = assign(&[("C1", int(5)), ("C2", int(-6))], false);
    assert_eq!(geometry_verdict(&a, NtType::Reducible).conclusion, Conclusion::Toroidal);
    assert_eq!(geometry_verdict(&a, NtType::Unknown).conclusion, Conclusion::Inconclusive);
    let a = assign(&[("C1", ratio(1, 2))], false);
    let v = geometry_verdict(&a, NtType::Periodic);
    assert_eq!((v.conclusion, v.criterion.as_str()), (Conclusion::SeifertFibered, "geometry/periodic-nonzero"));
    let a = assign(&[("C1", int(0))], false);
    assert_eq!(geometry_verdict(&a, NtType::Periodic).conclusion, Conclusion::Inconclusive);
}

#[test]
fn stabilization_examples() {
    let a = assign(&[("C1", ratio(3, 4))], true);
    assert_eq!(stabilization_obstruction(&a).unwrap().conclusion, Conclusion::NotAStabilization);
    let a = assign(&[("C1", ratio(3, 4)), ("C2", int(2))], false);
    assert_eq!(stabilization_obstruction(&a).unwrap().conclusion, Conclusion::Inconclusive);
    let a = assign(&[("C1", ratio(3, 2)), ("C2", int(-2))], false);
    assert_eq!(stabilization_obstruction(&a).unwrap().conclusion, Conclusion::NotAStabilization);
    let b = CoefficientAssignment::from_pairs(&[("C1", int(5))], Mode::Braid, false).unwrap();
    assert!(stabilization_obstruction(&b).is_err());
}

#[test]
fn braid_mode_speaks_about_the_complement() {
    let b = CoefficientAssignment::from_pairs(&[("C1", int(5))], Mode::Braid, false).unwrap();
    let v = irreducibility_verdict(&b);
    assert!(v.criterion.starts_with("braid-complement/"));
    assert!(v.statement.starts_with("M - L"));
}

#[test]
fn closed_surface_bounds() {
    assert_eq!(closed_surface_fdtc_bound(0, 4, false).unwrap().bound, int(3));
    assert_eq!(closed_surface_fdtc_bound(2, 2, false).unwrap().bound, int(6));
    assert_eq!(closed_surface_fdtc_bound(3, 3, false).unwrap().bound, int(6));
    assert_eq!(closed_surface_fdtc_bound(0, 2, true).unwrap().bound, int(1));
    assert_eq!(closed_surface_fdtc_bound(1, 4, false).unwrap().bound, int(4));
    assert_eq!(closed_surface_fdtc_bound(0, 1, true).unwrap().bound, int(1));
    let b = closed_surface_fdtc_bound(3, 2, true).unwrap();
    assert!(b.bound <= int(3));
    assert!(closed_surface_fdtc_bound(1, 0, false).is_err());
    // Irreducibility is the contrapositive of the genus-0 bound.
    let a = assign(&[("C1", ratio(7, 2)), ("C2", int(-4))], false);
    let bound = closed_surface_fdtc_bound(0, 2, false).unwrap().bound;
    assert!(a.coeffs.values().all(|c| c.abs() > bound));
}

#[test]
fn braid_genus_examples() {
    let b = |chi, k, n, c| braid_genus_bounds(&BraidGenusInputs { chi, k, braid_index: n, connected_boundary: c }).unwrap();
    assert_eq!(b(-2, 4, 3, false).unwrap().bound, int(6));
    assert_eq!(b(-2, 1, 3, false).unwrap().bound, int(3));
    assert_eq!(b(1, 0, 2, false).unwrap().bound, int(3));
    assert_eq!(b(0, 0, 2, true).unwrap().bound, int(1));
    assert_eq!(b(-1, 2, 3, true).unwrap().bound, ratio(4, 3));
    assert!(b(0, 0, 2, false).is_none());
    assert!(braid_genus_bounds(&BraidGenusInputs { chi: -1, k: 0, braid_index: 2, connected_boundary: false }).is_err());
}

#[test]
fn genus_from_coefficients() {
    assert_eq!(genus_lower_bound(&int(9)), 3);
    assert_eq!(genus_lower_bound(&int(4)), 1);
    assert_eq!(genus_lower_bound(&ratio(1, 2)), 0);
    assert_eq!(genus_lower_bound(&ratio(7, 2)), 1);
    assert!(knot_fdtc_bound(0).strict);
    assert_eq!(knot_fdtc_bound(2).bound, int(4));
}

#[test]
fn assignment_json_roundtrip() {
    let a: CoefficientAssignment =
        serde_json::from_str(r#"{"coeffs":{"C1":"7/2","C2":-4},"mode":"monodromy"}"#).unwrap();
    assert_eq!(a.coeffs["C1"], ratio(7, 2));
    let s = serde_json::to_string(&a).unwrap();
    assert_eq!(s, r#"{"coeffs":{"C1":"7/2","C2":"-4"},"mode":"monodromy","connected_boundary":false}"#);
    assert!(serde_json::from_str::<CoefficientAssignment>(r#"{"coeffs":{"C1":1,"C2":2},"connected_boundary":true}"#).is_err());
}

#[test]
fn remaining_spec_examples() {
    let a = assign(&[("C1", int(2))], false);
    assert_eq!(irreducibility_verdict(&a).conclusion, Conclusion::Inconclusive);
    let a = assign(&[("C1", int(2)), ("C2", ratio(-3, 2))], false);
    assert_eq!(stabilization_obstruction(&a).unwrap().conclusion, Conclusion::NotAStabilization);
    let a = assign(&[("C1", ratio(1, 2))], true);
    assert_eq!(stabilization_obstruction(&a).unwrap().conclusion, Conclusion::Inconclusive);
}
