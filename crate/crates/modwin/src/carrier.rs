//! A window module as a carrier for the morphism language, so that the
//! defining identities can be checked as operator identities on it.

use propdsl::{axiom_check, compile_str, ActionPipeline, Axiom, AxiomReport, Carrier, DslError, Letter, ObjectWord, Prim};
use ratlin::Q;
use symgrp::Perm;

use crate::window::{Element, Gen, WindowModule};
use crate::WinError;

/// Acts on `M(0..N)`; `None` stands for zero. Test inputs are all basis
/// vectors whose arity leaves room for `headroom` extra strands.
pub struct WindowCarrier<'a> {
    pub module: &'a WindowModule,
    pub headroom: usize,
}

fn dsl(e: WinError) -> DslError {
    DslError::Carrier(e.to_string())
}

/// `σ` acting on positions `o..o+k` of `n` strands.
fn embed(sigma: &Perm, o: usize, n: usize) -> Result<Perm, DslError> {
    let k = sigma.degree();
    if o + k > n {
        return Err(DslError::Carrier(format!("permutation at {o} exceeds arity {n}")));
    }
    let images = (0..n).map(|j| if j >= o && j < o + k { o + sigma.image(j - o) } else { j }).collect();
    Perm::from_images(images).map_err(|e| DslError::Carrier(e.to_string()))
}

impl WindowCarrier<'_> {
    fn gen_for(&self, p: &Prim, o: usize, n: usize) -> Result<Gen, DslError> {
        Ok(match p {
            Prim::Mu => Gen::Mu(o),
            Prim::Eta => Gen::Eta(o),
            Prim::Delta => Gen::Delta(o),
            Prim::Eps => Gen::Eps(o),
            Prim::Antipode => Gen::S(o),
            Prim::Perm(s) => Gen::Perm(embed(s, o, n)?),
            Prim::Cas => Gen::Cas(o),
            _ => return Err(DslError::Unsupported { prim: p.to_string(), carrier: self.name() }),
        })
    }
}

impl Carrier for WindowCarrier<'_> {
    type Elem = Option<Element>;

    fn name(&self) -> String {
        format!("{} window N={}", self.module.spec(), self.module.window())
    }

    fn supports(&self, p: &Prim) -> bool {
        matches!(p, Prim::Mu | Prim::Eta | Prim::Delta | Prim::Eps | Prim::Antipode | Prim::Perm(_) | Prim::Cas)
    }

    fn apply(&self, p: &Prim, o: usize, x: &Option<Element>) -> Result<Option<Element>, DslError> {
        let Some(x) = x else { return Ok(None) };
        let g = self.gen_for(p, o, x.n)?;
        self.module.act_gen(&g, x).map(Some).map_err(dsl)
    }

    fn combine(&self, terms: &[(Q, Option<Element>)]) -> Result<Option<Element>, DslError> {
        let mut out: Option<Element> = None;
        for (c, x) in terms {
            let Some(x) = x else { continue };
            out = Some(match out {
                None => x.scale(c),
                Some(acc) => acc.add_scaled(c, x).map_err(dsl)?,
            });
        }
        Ok(out)
    }

    fn equal(&self, a: &Option<Element>, b: &Option<Element>) -> Result<bool, DslError> {
        let diff = self.combine(&[(Q::one(), a.clone()), (-Q::one(), b.clone())])?;
        Ok(diff.is_none_or(|d| d.is_zero()))
    }

    fn inputs(&self, source: &ObjectWord) -> Result<Vec<(String, Option<Element>, usize)>, DslError> {
        if source.count(Letter::L) > 0 {
            return Err(DslError::Carrier("window modules carry H-strands only".into()));
        }
        let s = source.len();
        let top = self.module.window().saturating_sub(self.headroom);
        let mut out = Vec::new();
        for n in s..=top {
            for i in 0..self.module.dim(n) {
                for off in 0..=n - s {
                    out.push((format!("M({n})[{i}]@{off}"), Some(self.module.basis_element(n, i)), off));
                }
            }
        }
        Ok(out)
    }

    fn describe(&self, x: &Option<Element>) -> String {
        x.as_ref().map_or_else(|| "0".to_string(), |x| self.module.describe(x))
    }
}

/// The largest arity increase along any step of the pipeline.
fn headroom(p: &ActionPipeline) -> usize {
    let mut cur = 0i64;
    let mut top = 0i64;
    for s in &p.steps {
        cur += match s.prim {
            Prim::Eta | Prim::Delta => 1,
            Prim::Cas => 2,
            Prim::Mu | Prim::Eps => -1,
            _ => 0,
        };
        top = top.max(cur);
    }
    top as usize
}

/// Checks an identity of H-strand morphisms on every basis vector of the
/// window at which both sides stay inside it.
pub fn window_axiom_check(m: &WindowModule, a: &Axiom) -> Result<AxiomReport, WinError> {
    let to_win = |e: DslError| WinError::Axiom(format!("{}: {e}", a.id));
    let mut room = 0;
    for (_, s) in a.lhs.iter().chain(&a.rhs) {
        room = room.max(headroom(&compile_str(s).map_err(to_win)?));
    }
    let c = WindowCarrier { module: m, headroom: room };
    axiom_check(a, &c).map_err(to_win)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_permutation_fixes_outside_positions() {
        let s = Perm::transposition(2, 0, 1);
        let p = embed(&s, 1, 4).unwrap();
        assert_eq!(p.images(), &[0, 2, 1, 3]);
        assert!(embed(&s, 3, 4).is_err());
    }
}
