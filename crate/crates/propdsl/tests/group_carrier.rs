//! The functor `n ↦ K[G^n]` for a finite group `G` is a module over the
//! Hopf generators: μ multiplies neighbours, Δ duplicates, S inverts.

use std::collections::BTreeMap;

use propdsl::{
    axiom_check, compile, compile_str, hopf_axioms, parse, run, typecheck, Carrier, DslError, Expr, Gen, ObjectWord, Prim,
};
use proptest::prelude::*;
use ratlin::Q;
use symgrp::Perm;

type Elem = BTreeMap<Vec<Perm>, Q>;

struct GroupCarrier {
    group: Vec<Perm>,
    max_arity: usize,
}

fn add(m: &mut Elem, k: Vec<Perm>, c: &Q) {
    let e = m.entry(k.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        m.remove(&k);
    }
}

impl Carrier for GroupCarrier {
    type Elem = Elem;

    fn name(&self) -> String {
        "K[S3^n]".into()
    }

    fn supports(&self, p: &Prim) -> bool {
        matches!(p, Prim::Mu | Prim::Eta | Prim::Delta | Prim::Eps | Prim::Antipode | Prim::Perm(_))
    }

    fn apply(&self, p: &Prim, o: usize, x: &Elem) -> Result<Elem, DslError> {
        let mut out = Elem::new();
        for (t, c) in x {
            let mut t = t.clone();
            match p {
                Prim::Mu => {
                    let b = t.remove(o + 1);
                    t[o] = t[o].compose(&b);
                }
                Prim::Eta => t.insert(o, Perm::identity(3)),
                Prim::Delta => {
                    let g = t[o].clone();
                    t.insert(o, g);
                }
                Prim::Eps => {
                    t.remove(o);
                }
                Prim::Antipode => t[o] = t[o].inverse(),
                Prim::Perm(s) => {
                    let old = t[o..o + s.degree()].to_vec();
                    for (j, g) in old.into_iter().enumerate() {
                        t[o + s.image(j)] = g;
                    }
                }
                _ => unreachable!(),
            }
            add(&mut out, t, c);
        }
        Ok(out)
    }

    fn combine(&self, terms: &[(Q, Elem)]) -> Result<Elem, DslError> {
        let mut out = Elem::new();
        for (k, x) in terms {
            for (t, c) in x {
                add(&mut out, t.clone(), &(k * c));
            }
        }
        Ok(out)
    }

    fn equal(&self, a: &Elem, b: &Elem) -> Result<bool, DslError> {
        Ok(a == b)
    }

    fn inputs(&self, source: &ObjectWord) -> Result<Vec<(String, Elem, usize)>, DslError> {
        let k = source.len();
        let mut out = Vec::new();
        for n in k..=self.max_arity {
            for idx in 0..self.group.len() {
                let t: Vec<Perm> = (0..n).map(|j| self.group[(idx + 2 * j) % self.group.len()].clone()).collect();
                for off in 0..=(n - k) {
                    out.push((format!("n={n}"), [(t.clone(), Q::one())].into_iter().collect(), off));
                }
            }
        }
        Ok(out)
    }

    fn describe(&self, x: &Elem) -> String {
        format!("{} terms", x.len())
    }
}

fn carrier() -> GroupCarrier {
    GroupCarrier { group: Perm::all(3), max_arity: 3 }
}

#[test]
fn hopf_identities_hold_on_group_algebra() {
    let c = carrier();
    for a in hopf_axioms() {
        let r = axiom_check(&a, &c).unwrap();
        assert!(r.holds(), "{r}");
        assert!(!r.cases.is_empty());
    }
}

#[test]
fn a_false_identity_is_detected() {
    let c = carrier();
    let bogus = propdsl::Axiom { id: "bogus", anchor: "", lhs: vec![(1, "S")], rhs: vec![(1, "id(H)")] };
    let r = axiom_check(&bogus, &c).unwrap();
    assert!(!r.holds());
    assert!(r.cases.iter().any(|x| x.witness.is_some()));
}

#[test]
fn unsupported_generators_are_rejected() {
    let c = carrier();
    let p = compile_str("i").unwrap();
    let x: Elem = [(vec![Perm::identity(3)], Q::one())].into_iter().collect();
    assert!(matches!(run(&c, &p, 0, &x), Err(DslError::Unsupported { .. })));
}

fn hopf_term() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(Expr::Gen(Gen::Mu(vec![2]))),
        Just(Expr::Gen(Gen::Eta)),
        Just(Expr::Gen(Gen::Delta(vec![2]))),
        Just(Expr::Gen(Gen::Eps)),
        Just(Expr::Gen(Gen::Antipode)),
        Just(Expr::Gen(Gen::Id(ObjectWord::h(1)))),
        Just(Expr::Gen(Gen::Cas)),
        Just(Expr::Gen(Gen::Mu(vec![0, 2, 1]))),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| prop::collection::vec(inner, 2..3).prop_map(Expr::tensor))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn print_parse_round_trip(e in hopf_term()) {
        let again = parse(&e.to_string()).unwrap();
        prop_assert_eq!(&again, &e);
        prop_assert_eq!(typecheck(&again).unwrap(), typecheck(&e).unwrap());
    }

    #[test]
    fn degrees_add(f in hopf_term(), g in hopf_term()) {
        let (tf, tg) = (typecheck(&f).unwrap(), typecheck(&g).unwrap());
        let t = typecheck(&Expr::tensor(vec![f.clone(), g.clone()])).unwrap();
        prop_assert_eq!(t.degree, tf.degree + tg.degree);
        if tf.source.len() == tg.target.len() {
            let h = typecheck(&Expr::compose(vec![f, g])).unwrap();
            prop_assert_eq!(h.degree, tf.degree + tg.degree);
        }
    }

    #[test]
    fn compiled_actions_are_functorial(seed in 0usize..6, n in 2usize..4) {
        // (μ⊗S)∘(Δ⊗id) versus the two pipelines run in sequence.
        let c = carrier();
        let f = parse("mu * S").unwrap();
        let g = parse("delta * id(H)").unwrap();
        let fg = compile(&Expr::compose(vec![f.clone(), g.clone()])).unwrap();
        let (pf, pg) = (compile(&f).unwrap(), compile(&g).unwrap());
        let t: Vec<Perm> = (0..n).map(|j| c.group[(seed + j) % 6].clone()).collect();
        let x: Elem = [(t, Q::one())].into_iter().collect();
        for off in 0..n - 1 {
            let a = run(&c, &fg, off, &x).unwrap();
            let b = run(&c, &pf, off, &run(&c, &pg, off, &x).unwrap()).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
