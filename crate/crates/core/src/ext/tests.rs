use std::sync::Arc;

use super::*;
use crate::algebra::GradedAlgebra;
use crate::corpus;
use crate::groebner::algebra_from_presentation;
use crate::presentation::QuiverPresentation;
use crate::resolution::{resolve_trivial, Resolution};

const P: u32 = 32003;

fn resolve(pres: QuiverPresentation, n: usize, d: usize) -> Resolution {
    let alg: Arc<GradedAlgebra> = Arc::new(algebra_from_presentation(&pres, d).unwrap());
    resolve_trivial(&alg, n, d).unwrap()
}

fn product(r: &Resolution, a: (usize, usize), b: (usize, usize)) -> ExtClass {
    yoneda_product(r, &ExtClass::dual(r, a.0, a.1), &ExtClass::dual(r, b.0, b.1)).unwrap()
}

#[test]
fn square_of_degree_one_class() {
    let r = resolve(corpus::truncated_loop(2, P), 4, 6);
    let sq = product(&r, (1, 0), (1, 0));
    assert_eq!((sq.degree, sq.shift), (2, 2));
    assert!(!sq.is_zero());

    let r = resolve(corpus::truncated_loop(3, P), 4, 8);
    assert!(product(&r, (1, 0), (1, 0)).is_zero());
    // Ext of k[x]/x^3 is exterior on ξ1 tensor polynomial on ξ2
    assert!(!product(&r, (1, 0), (2, 0)).is_zero());
    assert!(!product(&r, (2, 0), (1, 0)).is_zero());
    assert!(!product(&r, (2, 0), (2, 0)).is_zero());
}

#[test]
fn commuting_loops_give_exterior_algebra() {
    let r = resolve(corpus::commuting_loops(P), 3, 5);
    assert_eq!((0..=3).map(|n| r.module(n).rank()).collect::<Vec<_>>(), vec![1, 2, 1, 0]);
    for g in 0..2 {
        assert!(product(&r, (1, g), (1, g)).is_zero());
    }
    let xy = product(&r, (1, 0), (1, 1));
    let yx = product(&r, (1, 1), (1, 0));
    assert!(!xy.is_zero());
    let f = r.algebra().field();
    assert_eq!(xy.coeffs[0], f.neg(yx.coeffs[0]));
}

#[test]
fn unit_and_associativity() {
    for (pres, n, d) in [
        (corpus::truncated_loop(3, P), 6, 9),
        (corpus::commuting_loops(P), 3, 5),
        (corpus::five_vertex_staircase(P), 4, 6),
    ] {
        let r = resolve(pres, n, d);
        let top = r.certified_to().unwrap();
        let one = ExtClass { degree: 0, shift: 0, coeffs: vec![1; r.module(0).rank()] };
        for i in 0..=top {
            for xi in ext_basis(&r, i) {
                assert_eq!(yoneda_product(&r, &one, &xi).unwrap(), xi);
                assert_eq!(yoneda_product(&r, &xi, &one).unwrap(), xi);
            }
        }
        for a in 1..=top {
            for b in 1..=top - a {
                for c in 1..=top - a - b {
                    for x in ext_basis(&r, a) {
                        for y in ext_basis(&r, b) {
                            for z in ext_basis(&r, c) {
                                let left = yoneda_product(&r, &yoneda_product(&r, &x, &y).unwrap(), &z).unwrap();
                                let right = yoneda_product(&r, &x, &yoneda_product(&r, &y, &z).unwrap()).unwrap();
                                assert_eq!(left, right);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn product_does_not_depend_on_the_lift() {
    let r = resolve(corpus::truncated_loop(3, P), 5, 8);
    for n in 1..=2 {
        let xi = ExtClass::dual(&r, n, 0);
        let plain = lift_class(&r, &r, &xi, 3, false).unwrap();
        let bent = lift_class(&r, &r, &xi, 3, true).unwrap();
        for m in 0..=3 {
            for eta in ext_basis(&r, m) {
                assert_eq!(yoneda::compose(&r, &eta, &plain, &r), yoneda::compose(&r, &eta, &bent, &r));
            }
        }
    }
}

#[test]
fn generation_degrees_on_small_algebras() {
    let r = resolve(corpus::commuting_loops(P), 3, 5);
    assert_eq!(ext_generation_degrees(&r, 3).unwrap().generator_degrees, vec![0, 1]);

    let r = resolve(corpus::truncated_loop(3, P), 5, 9);
    let rep = ext_generation_degrees(&r, 5).unwrap();
    assert_eq!(rep.generator_degrees, vec![0, 1, 2]);
    assert_eq!(rep.rows[2].new_generators, vec![(3, 1)]);

    let r = resolve(corpus::five_vertex_staircase(P), 6, 8);
    let rep = ext_generation_degrees(&r, 6).unwrap();
    assert_eq!(rep.generator_degrees, vec![0, 1, 3]);
    assert_eq!(rep.rows[3].shifts, vec![4]);
    assert!(!rep.truncated);
}

#[test]
fn verdicts_agree_with_generation() {
    let cases = [
        (corpus::truncated_loop(2, P), 6, 8, Verdict::Koszul),
        (corpus::truncated_loop(3, P), 6, 10, Verdict::DKoszul(3)),
        (corpus::truncated_loop(4, P), 6, 13, Verdict::DKoszul(4)),
        (corpus::commuting_loops(P), 4, 6, Verdict::Koszul),
        (corpus::linear_path(3, P), 4, 4, Verdict::Koszul),
        (corpus::linear_cubes(P), 6, 8, Verdict::DKoszul(3)),
        (corpus::five_vertex_staircase(P), 6, 8, Verdict::PiecewiseKoszul(3, 4)),
    ];
    for (pres, n, d, expected) in cases {
        let r = resolve(pres, n, d);
        let c = classify(&r.betti_table());
        assert_eq!(c.verdict, expected);
        let rep = ext_generation_degrees(&r, n).unwrap();
        assert_eq!(generation_verdict(&rep, d), expected);
        let top = c.certified_to.unwrap();
        for p in 2..=top.max(2) {
            for dd in p..=d {
                assert_eq!(c.fits(p, dd), generation_criterion(&rep, p, dd), "{expected} at ({p},{dd})");
            }
        }
    }
}

#[test]
fn surjectivity_needs_additivity() {
    let r = resolve(corpus::five_vertex_staircase(P), 4, 6);
    let f = DeltaFunction::new(3, 4).unwrap();
    assert!(yoneda_surjectivity_check(&r, f, 1, 2).unwrap_err().is_refusal());
    let s = yoneda_surjectivity_check(&r, f, 1, 1).unwrap();
    assert!(s.surjective);
    assert_eq!(s.target_dim, 5);
}

#[test]
fn ek_of_small_algebras() {
    let r = resolve(corpus::commuting_loops(P), 4, 6);
    let e1 = ek_subalgebra(&r, DeltaFunction::new(2, 2).unwrap(), 1, 2).unwrap();
    assert_eq!(e1.dims(), vec![1, 1, 0]);

    // k[x]/x^2 has polynomial Ext, so E_1 is polynomial in one variable
    let r = resolve(corpus::truncated_loop(2, P), 6, 7);
    let e1 = ek_subalgebra(&r, DeltaFunction::new(2, 2).unwrap(), 1, 3).unwrap();
    assert_eq!(e1.dims(), vec![1, 1, 1, 1]);
    assert!(!e1.product(1, 0, 1, 0).is_empty());

    let r = resolve(corpus::five_vertex_staircase(P), 6, 8);
    let e1 = ek_subalgebra(&r, DeltaFunction::new(3, 4).unwrap(), 1, 2).unwrap();
    assert_eq!(e1.dims(), vec![5, 1, 0]);
    assert!(ek_subalgebra(&r, DeltaFunction::new(3, 4).unwrap(), 1, 3).unwrap_err().is_refusal());
}

#[test]
fn arity_sets() {
    let f = DeltaFunction::new(3, 6).unwrap();
    assert_eq!(closed_form_arities(f, 9), vec![2, 5, 8]);
    assert_eq!(closed_form_arities(DeltaFunction::new(3, 3).unwrap(), 9), vec![2]);

    let e = ExtTable::concentrated(f, 12);
    let rep = ainfty_feasible_arities(&e, f, 9);
    assert_eq!(rep.support, vec![2, 5, 8]);
    assert!(rep.consistent);

    let r = resolve(corpus::five_vertex_staircase(P), 6, 8);
    let e = ext_table(&r.betti_table());
    let rep = ainfty_feasible_arities(&e, DeltaFunction::new(3, 4).unwrap(), 6);
    assert!(rep.consistent);
    assert!(rep.support.contains(&2) && rep.support.contains(&3));
}

#[test]
fn reduced_structure_conditions() {
    let r = resolve(corpus::five_vertex_staircase(P), 6, 8);
    let rep = reduced_2l_check(&r, &ext_table(&r.betti_table()), 4).unwrap();
    assert_eq!(rep.condition1.status, Status::Pass);
    assert_eq!(rep.condition2.status, Status::Pass);

    let r = resolve(corpus::commuting_loops(P), 4, 6);
    let rep = reduced_2l_check(&r, &ext_table(&r.betti_table()), 4).unwrap();
    assert_eq!(rep.condition2.status, Status::Pass);

    let r = resolve(corpus::polynomial(3, P), 4, 6);
    let rep = reduced_2l_check(&r, &ext_table(&r.betti_table()), 4).unwrap();
    assert_eq!(rep.condition1.status, Status::Pass);
    assert_eq!(rep.condition2.status, Status::Fail);
}
