use homspaces::{LieCCarrier, MixedCarrier};
use propdsl::{all_axioms, axiom_check, carrier_supports, compile_str, run, DslError};

#[test]
fn every_supported_identity_holds_on_jacobi_diagrams() {
    let c = MixedCarrier::default();
    let mut checked = 0;
    for a in all_axioms() {
        if !carrier_supports(&c, &a).unwrap() {
            assert_eq!(a.id, "adl_unit");
            continue;
        }
        let r = axiom_check(&a, &c).unwrap();
        assert!(r.holds(), "{r}: {:?}", r.cases.iter().find(|x| !x.equal));
        checked += 1;
    }
    assert_eq!(checked, all_axioms().len() - 1);
}

#[test]
fn lie_identities_hold_on_casimir_forests() {
    let c = LieCCarrier::default();
    let supported: Vec<_> = all_axioms().into_iter().filter(|a| carrier_supports(&c, a).unwrap()).map(|a| a.id).collect();
    assert_eq!(supported, vec!["lie_as", "lie_jacobi", "c_sym", "lie_cas", "adl_unit"]);
    for a in all_axioms().into_iter().filter(|a| supported.contains(&a.id)) {
        let r = axiom_check(&a, &c).unwrap();
        assert!(r.holds(), "{r}");
    }
}

#[test]
fn inclusion_is_rejected_on_casimir_forests() {
    let c = LieCCarrier::default();
    let p = compile_str("i").unwrap();
    let x = homspaces::LieCElem::single(vec![homspaces::Slot::Tree(diagrams::RootedTree::leaf(0))]);
    assert!(matches!(run(&c, &p, 0, &x), Err(DslError::Unsupported { .. })));
}
