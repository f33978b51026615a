//! Type inference and compilation to primitive action pipelines.

use std::fmt;

use symgrp::Perm;

use crate::expr::{Expr, Gen, Letter, ObjectWord};
use crate::parse::parse;
use crate::DslError;

/// A letter of an inferred word: concrete or a type variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sym {
    H,
    L,
    Var(usize),
}

/// An inferred word, possibly with unresolved letters (printed `?k`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TypeWord(pub Vec<Sym>);

impl TypeWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The concrete word, if no variables remain.
    pub fn concrete(&self) -> Option<ObjectWord> {
        self.0
            .iter()
            .map(|s| match s {
                Sym::H => Some(Letter::H),
                Sym::L => Some(Letter::L),
                Sym::Var(_) => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(ObjectWord)
    }
}

impl From<&ObjectWord> for TypeWord {
    fn from(w: &ObjectWord) -> Self {
        TypeWord(w.0.iter().map(|l| if *l == Letter::H { Sym::H } else { Sym::L }).collect())
    }
}

impl fmt::Display for TypeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "I");
        }
        for s in &self.0 {
            match s {
                Sym::H => write!(f, "H")?,
                Sym::L => write!(f, "L")?,
                Sym::Var(k) => write!(f, "?{k}")?,
            }
        }
        Ok(())
    }
}

/// A primitive generator action on a single position (or adjacent pair) of
/// the output word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Prim {
    Mu,
    Eta,
    Delta,
    Eps,
    Antipode,
    Perm(Perm),
    Cas,
    Bracket,
    LieCas,
    Incl,
    AdL,
}

impl fmt::Display for Prim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prim::Mu => write!(f, "mu"),
            Prim::Eta => write!(f, "eta"),
            Prim::Delta => write!(f, "delta"),
            Prim::Eps => write!(f, "eps"),
            Prim::Antipode => write!(f, "S"),
            Prim::Perm(p) => write!(f, "P{p}"),
            Prim::Cas => write!(f, "cas"),
            Prim::Bracket => write!(f, "br"),
            Prim::LieCas => write!(f, "c"),
            Prim::Incl => write!(f, "i"),
            Prim::AdL => write!(f, "adL"),
        }
    }
}

/// One step of a pipeline: `prim` acting at position `offset`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step {
    pub prim: Prim,
    pub offset: usize,
}

/// A compiled morphism: steps in application order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ActionPipeline {
    pub source: TypeWord,
    pub target: TypeWord,
    pub degree: usize,
    pub steps: Vec<Step>,
}

/// The principal typing of an expression.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Typing {
    pub source: TypeWord,
    pub target: TypeWord,
    pub degree: usize,
}

struct Typed {
    src: Vec<Sym>,
    tgt: Vec<Sym>,
    deg: usize,
    steps: Vec<Step>,
}

#[derive(Default)]
struct Unifier {
    parent: Vec<usize>,
    value: Vec<Option<Sym>>,
}

impl Unifier {
    fn fresh(&mut self) -> Sym {
        let k = self.parent.len();
        self.parent.push(k);
        self.value.push(None);
        Sym::Var(k)
    }

    fn root(&mut self, k: usize) -> usize {
        let p = self.parent[k];
        if p == k {
            return k;
        }
        let r = self.root(p);
        self.parent[k] = r;
        r
    }

    fn resolve(&mut self, s: Sym) -> Sym {
        match s {
            Sym::Var(k) => {
                let r = self.root(k);
                self.value[r].unwrap_or(Sym::Var(r))
            }
            c => c,
        }
    }

    fn unify(&mut self, a: Sym, b: Sym) -> bool {
        match (self.resolve(a), self.resolve(b)) {
            (Sym::Var(x), Sym::Var(y)) => {
                if x != y {
                    self.parent[x] = y;
                }
                true
            }
            (Sym::Var(x), c) | (c, Sym::Var(x)) => {
                self.value[x] = Some(c);
                true
            }
            (c, d) => c == d,
        }
    }

    fn word(&mut self, w: &[Sym]) -> TypeWord {
        TypeWord(w.iter().map(|s| self.resolve(*s)).collect())
    }

    /// Renumbers remaining variables from 1 in order of appearance.
    fn finish(&mut self, words: [&[Sym]; 2]) -> [TypeWord; 2] {
        let mut names: Vec<usize> = Vec::new();
        let mut out = [TypeWord(Vec::new()), TypeWord(Vec::new())];
        for (slot, w) in words.iter().enumerate() {
            for s in w.iter() {
                let r = self.resolve(*s);
                out[slot].0.push(match r {
                    Sym::Var(k) => {
                        let pos = names.iter().position(|x| *x == k).unwrap_or_else(|| {
                            names.push(k);
                            names.len() - 1
                        });
                        Sym::Var(pos + 1)
                    }
                    c => c,
                });
            }
        }
        out
    }
}

fn h(n: usize) -> Vec<Sym> {
    vec![Sym::H; n]
}

fn single(prim: Prim) -> Vec<Step> {
    vec![Step { prim, offset: 0 }]
}

fn gen_type(g: &Gen, u: &mut Unifier) -> Result<Typed, DslError> {
    let t = |src: Vec<Sym>, tgt: Vec<Sym>, deg: usize, steps: Vec<Step>| Ok(Typed { src, tgt, deg, steps });
    match g {
        Gen::Mu(p) => {
            let mut steps = Vec::new();
            for (j, &pj) in p.iter().enumerate() {
                if pj == 0 {
                    steps.push(Step { prim: Prim::Eta, offset: j });
                } else {
                    for _ in 1..pj {
                        steps.push(Step { prim: Prim::Mu, offset: j });
                    }
                }
            }
            t(h(p.iter().sum()), h(p.len()), 0, steps)
        }
        Gen::Delta(q) => {
            let mut steps = Vec::new();
            let mut cur = 0;
            for &qj in q {
                if qj == 0 {
                    steps.push(Step { prim: Prim::Eps, offset: cur });
                } else {
                    for _ in 1..qj {
                        steps.push(Step { prim: Prim::Delta, offset: cur });
                    }
                    cur += qj;
                }
            }
            t(h(q.len()), h(q.iter().sum()), 0, steps)
        }
        Gen::Eta => t(h(0), h(1), 0, single(Prim::Eta)),
        Gen::Eps => t(h(1), h(0), 0, single(Prim::Eps)),
        Gen::Antipode => t(h(1), h(1), 0, single(Prim::Antipode)),
        Gen::Cas => t(h(0), h(2), 1, single(Prim::Cas)),
        Gen::Br => t(vec![Sym::L; 2], vec![Sym::L], 0, single(Prim::Bracket)),
        Gen::C => t(Vec::new(), vec![Sym::L; 2], 1, single(Prim::LieCas)),
        Gen::I => t(vec![Sym::L], h(1), 0, single(Prim::Incl)),
        Gen::AdL => t(vec![Sym::H, Sym::L], vec![Sym::L], 0, single(Prim::AdL)),
        Gen::Ad => infer(&parse(AD_EXPANSION).expect("built-in expansion parses"), u),
        Gen::Id(w) => {
            let s = TypeWord::from(w).0;
            t(s.clone(), s, 0, Vec::new())
        }
        Gen::P(s) => perm_type(s, s.degree(), u),
    }
}

/// `ad = μ^{[3]}(id_{HH}⊗S)(id_H⊗P_{H,H})(Δ⊗id_H)`.
pub const AD_EXPANSION: &str = "mu[3] . (id(HH) * S) . (id(H) * P(1 2)) . (delta * id(H))";

fn perm_type(s: &Perm, len: usize, u: &mut Unifier) -> Result<Typed, DslError> {
    if len < s.degree() {
        return Err(DslError::ArityMismatch(format!(
            "P{} needs at least {} slots but the context provides {}",
            s,
            s.degree(),
            len
        )));
    }
    let mut imgs: Vec<usize> = s.images().to_vec();
    imgs.extend(s.degree()..len);
    let full = Perm::from_images(imgs).expect("extension by fixed points");
    let src: Vec<Sym> = (0..len).map(|_| u.fresh()).collect();
    let mut tgt = src.clone();
    for (j, x) in src.iter().enumerate() {
        tgt[full.image(j)] = *x;
    }
    let steps = if full.is_identity() { Vec::new() } else { vec![Step { prim: Prim::Perm(full), offset: 0 }] };
    Ok(Typed { src, tgt, deg: 0, steps })
}

fn infer(e: &Expr, u: &mut Unifier) -> Result<Typed, DslError> {
    match e {
        Expr::Gen(g) => gen_type(g, u),
        Expr::Tensor(items) => {
            let typed: Vec<Typed> = items.iter().map(|x| infer(x, u)).collect::<Result<_, _>>()?;
            let mut src = Vec::new();
            let mut tgt = Vec::new();
            let mut deg = 0;
            let mut offsets = Vec::with_capacity(typed.len());
            for t in &typed {
                offsets.push(src.len());
                src.extend(&t.src);
                tgt.extend(&t.tgt);
                deg += t.deg;
            }
            let mut steps = Vec::new();
            for (t, off) in typed.iter().zip(offsets).rev() {
                steps.extend(t.steps.iter().map(|s| Step { prim: s.prim.clone(), offset: s.offset + off }));
            }
            Ok(Typed { src, tgt, deg, steps })
        }
        Expr::Compose(items) => {
            let n = items.len();
            let mut typed: Vec<Option<Typed>> = Vec::with_capacity(n);
            for x in items {
                typed.push(match x {
                    Expr::Gen(Gen::P(_)) => None,
                    other => Some(infer(other, u)?),
                });
            }
            // Flexible permutations take their length from a neighbour.
            while typed.iter().any(|t| t.is_none()) {
                let mut progress = false;
                for i in 0..n {
                    if typed[i].is_some() {
                        continue;
                    }
                    let len = if i + 1 < n && typed[i + 1].is_some() {
                        Some(typed[i + 1].as_ref().unwrap().tgt.len())
                    } else if i > 0 && typed[i - 1].is_some() {
                        Some(typed[i - 1].as_ref().unwrap().src.len())
                    } else {
                        None
                    };
                    if let (Some(len), Expr::Gen(Gen::P(s))) = (len, &items[i]) {
                        typed[i] = Some(perm_type(s, len, u)?);
                        progress = true;
                    }
                }
                if !progress {
                    let i = typed.iter().position(|t| t.is_none()).unwrap();
                    if let Expr::Gen(Gen::P(s)) = &items[i] {
                        typed[i] = Some(perm_type(s, s.degree(), u)?);
                    }
                }
            }
            let typed: Vec<Typed> = typed.into_iter().map(|t| t.unwrap()).collect();
            for i in (1..n).rev() {
                let (outer, inner) = (&typed[i - 1], &typed[i]);
                let ok = outer.src.len() == inner.tgt.len()
                    && outer.src.iter().zip(&inner.tgt).all(|(a, b)| u.unify(*a, *b));
                if !ok {
                    return Err(DslError::CompositionMismatch {
                        outer: items[i - 1].to_string(),
                        expects: u.word(&outer.src).to_string(),
                        inner: items[i].to_string(),
                        gives: u.word(&inner.tgt).to_string(),
                    });
                }
            }
            let mut steps = Vec::new();
            for t in typed.iter().rev() {
                steps.extend(t.steps.iter().cloned());
            }
            Ok(Typed {
                src: typed[n - 1].src.clone(),
                tgt: typed[0].tgt.clone(),
                deg: typed.iter().map(|t| t.deg).sum(),
                steps,
            })
        }
    }
}

/// Principal typing `(source, target, degree)`.
pub fn typecheck(e: &Expr) -> Result<Typing, DslError> {
    let p = compile(e)?;
    Ok(Typing { source: p.source, target: p.target, degree: p.degree })
}

/// Compiles an expression to a pipeline of primitive steps.
pub fn compile(e: &Expr) -> Result<ActionPipeline, DslError> {
    let mut u = Unifier::default();
    let t = infer(e, &mut u)?;
    let [source, target] = u.finish([&t.src, &t.tgt]);
    Ok(ActionPipeline { source, target, degree: t.deg, steps: t.steps })
}

/// Parses and compiles.
pub fn compile_str(text: &str) -> Result<ActionPipeline, DslError> {
    compile(&parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> (String, String, usize) {
        let t = typecheck(&parse(s).unwrap()).unwrap();
        (t.source.to_string(), t.target.to_string(), t.degree)
    }

    #[test]
    fn generator_types() {
        assert_eq!(ty("mu"), ("HH".into(), "H".into(), 0));
        assert_eq!(ty("i"), ("L".into(), "H".into(), 0));
        assert_eq!(ty("c"), ("I".into(), "LL".into(), 1));
        assert_eq!(ty("mu . (id(H) * S) . delta"), ("H".into(), "H".into(), 0));
        assert_eq!(ty("i*i . c"), ("I".into(), "HH".into(), 1));
        assert_eq!(ty("ad"), ("HH".into(), "H".into(), 0));
        assert_eq!(ty("mu[2,1] . P(1 2) . i*i*i . (id(L) * c)"), ("L".into(), "HH".into(), 1));
    }

    #[test]
    fn permutation_letters_and_lengths() {
        assert_eq!(ty("P(1 2)"), ("?1?2".into(), "?2?1".into(), 0));
        assert_eq!(ty("P(1 2) . (i * id(H))"), ("LH".into(), "HH".into(), 0));
        assert_eq!(ty("P(1 2) . (id(H) * c)"), ("H".into(), "LHL".into(), 1));
        let p = compile_str("mu[3] . P(1 2)").unwrap();
        assert_eq!(p.steps[0].prim, Prim::Perm(Perm::from_cycles(3, &[&[1, 2]]).unwrap()));
    }

    #[test]
    fn type_errors() {
        assert!(matches!(compile_str("mu . mu . c"), Err(DslError::CompositionMismatch { .. })));
        assert!(matches!(compile_str("mu . P(1 3)"), Err(DslError::ArityMismatch(_))));
    }

    #[test]
    fn multi_indices_expand() {
        let p = compile_str("mu[0,3]").unwrap();
        let prims: Vec<(String, usize)> = p.steps.iter().map(|s| (s.prim.to_string(), s.offset)).collect();
        assert_eq!(prims, vec![("eta".into(), 0), ("mu".into(), 1), ("mu".into(), 1)]);
        let p = compile_str("delta[2,0,1]").unwrap();
        let prims: Vec<(String, usize)> = p.steps.iter().map(|s| (s.prim.to_string(), s.offset)).collect();
        assert_eq!(prims, vec![("delta".into(), 0), ("eps".into(), 2)]);
    }

    #[test]
    fn tensor_steps_apply_right_factor_first() {
        let p = compile_str("S * delta").unwrap();
        assert_eq!(p.steps[0], Step { prim: Prim::Delta, offset: 1 });
        assert_eq!(p.steps[1], Step { prim: Prim::Antipode, offset: 0 });
    }
}
