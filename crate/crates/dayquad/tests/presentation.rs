use dayquad::*;
use homspaces::{clc0, jac_space_cached, CatLieModule};

#[test]
fn c_side_quotient_matches_casimir_lie_dims() {
    for d in 0..=3 {
        for n in 0..=2 * d {
            let q = quadratic_quotient_dim(d, n).unwrap();
            let reference = clc0(n, d).unwrap().dim();
            assert_eq!(q, reference, "d={d} n={n}");
        }
    }
}

#[test]
fn relators_vanish_in_casimir_lie() {
    for d in 2..=3 {
        for n in 0..=2 * d {
            assert!(relators_vanish(d, n).unwrap(), "d={d} n={n}");
        }
    }
}

#[test]
fn a_side_quotient_matches_jacobi_diagrams() {
    for d in 0..=2 {
        for n in 0..=4 {
            let q = a_side_quadratic_dim(d, n).unwrap();
            let reference = jac_space_cached(d, 0, n).unwrap().dim();
            assert_eq!(q, reference, "d={d} n={n}");
        }
    }
}

#[test]
fn small_a_side_values() {
    assert_eq!(a_side_quadratic_dim(2, 1).unwrap(), 2);
    assert_eq!(a_side_quadratic_dim(2, 2).unwrap(), 9);
}

#[test]
fn iterated_day_powers_match_the_pair_model() {
    for d in 0..=3 {
        let power = tensor_power_c1(d).unwrap();
        for n in 0..=2 * d {
            assert_eq!(power.dim(n), free_power(d, n).unwrap().dim(), "d={d} n={n}");
        }
    }
}

#[test]
fn day_product_dims_are_symmetric_and_associative() {
    let a = CatLieModule::casimir_family(1).unwrap();
    let b = CatLieModule::specht(&symgrp::Partition::new(vec![2, 1]).unwrap()).unwrap();
    let c = CatLieModule::specht(&symgrp::Partition::new(vec![1]).unwrap()).unwrap();
    let ab = day_product(&a, &b).unwrap();
    let ba = day_product(&b, &a).unwrap();
    let ab_c = day_product(&ab, &c).unwrap();
    let a_bc = day_product(&a, &day_product(&b, &c).unwrap()).unwrap();
    for n in 0..=ab.max_arity() {
        assert_eq!(ab.dim(n), ba.dim(n), "n={n}");
    }
    for n in 0..=ab_c.max_arity() {
        assert_eq!(ab_c.dim(n), a_bc.dim(n), "n={n}");
    }
}

#[test]
fn report_cells_serialize() {
    let cells = presentation_report(1, 1, 2).unwrap();
    assert_eq!(cells.len(), 4 + 6);
    for c in &cells {
        assert!(c.equal(), "{c:?}");
        assert_eq!(c.to_json()["equal"], true);
    }
}
