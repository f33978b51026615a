//! Object words and morphism expressions.

use std::fmt;

use symgrp::Perm;

/// A letter of an object word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    H,
    L,
}

/// A word over `{H, L}`; the empty word is the unit object `I`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct ObjectWord(pub Vec<Letter>);

impl ObjectWord {
    pub fn unit() -> Self {
        ObjectWord(Vec::new())
    }

    pub fn h(n: usize) -> Self {
        ObjectWord(vec![Letter::H; n])
    }

    pub fn l(n: usize) -> Self {
        ObjectWord(vec![Letter::L; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &ObjectWord) -> ObjectWord {
        let mut v = self.0.clone();
        v.extend(&other.0);
        ObjectWord(v)
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|x| **x == l).count()
    }
}

impl fmt::Display for ObjectWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "I");
        }
        for l in &self.0 {
            write!(f, "{}", if *l == Letter::H { "H" } else { "L" })?;
        }
        Ok(())
    }
}

/// A generating morphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Gen {
    /// `μ^{[p₁,…,p_n]}`; plain `mu` is `[2]`.
    Mu(Vec<usize>),
    Eta,
    /// `Δ^{[q₁,…,q_m]}`; plain `delta` is `[2]`.
    Delta(Vec<usize>),
    Eps,
    Antipode,
    /// `P_σ` on as many slots as the context demands (at least `deg σ`).
    P(Perm),
    /// `c̃ : I → HH`.
    Cas,
    /// `[,] : LL → L`.
    Br,
    /// `c : I → LL`.
    C,
    /// `i : L → H`.
    I,
    /// `ad : HH → H`, expanded on compilation.
    Ad,
    /// `ad_L : HL → L`.
    AdL,
    Id(ObjectWord),
}

/// A morphism expression; composition lists are in application order from
/// right to left, as written.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Gen(Gen),
    Compose(Vec<Expr>),
    Tensor(Vec<Expr>),
}

impl Expr {
    pub fn gen(g: Gen) -> Self {
        Expr::Gen(g)
    }

    /// `items[0] ∘ items[1] ∘ …`, flattening nested compositions.
    pub fn compose(items: Vec<Expr>) -> Self {
        let mut flat = Vec::new();
        for e in items {
            match e {
                Expr::Compose(v) => flat.extend(v),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            Expr::Compose(flat)
        }
    }

    /// `items[0] ⊗ items[1] ⊗ …`, flattening nested tensors.
    pub fn tensor(items: Vec<Expr>) -> Self {
        let mut flat = Vec::new();
        for e in items {
            match e {
                Expr::Tensor(v) => flat.extend(v),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            Expr::Tensor(flat)
        }
    }
}

fn list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Mu(p) if p == &[2] => write!(f, "mu"),
            Gen::Mu(p) => write!(f, "mu[{}]", list(p)),
            Gen::Eta => write!(f, "eta"),
            Gen::Delta(q) if q == &[2] => write!(f, "delta"),
            Gen::Delta(q) => write!(f, "delta[{}]", list(q)),
            Gen::Eps => write!(f, "eps"),
            Gen::Antipode => write!(f, "S"),
            Gen::P(s) => {
                write!(f, "P")?;
                let k = s.degree();
                let cycles: Vec<Vec<usize>> = s.cycles().into_iter().filter(|c| c.len() > 1).collect();
                for c in &cycles {
                    let t: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                    write!(f, "({})", t.join(" "))?;
                }
                if k > 0 && s.image(k - 1) == k - 1 {
                    write!(f, "({k})")?;
                } else if cycles.is_empty() {
                    write!(f, "()")?;
                }
                Ok(())
            }
            Gen::Cas => write!(f, "cas"),
            Gen::Br => write!(f, "br"),
            Gen::C => write!(f, "c"),
            Gen::I => write!(f, "i"),
            Gen::Ad => write!(f, "ad"),
            Gen::AdL => write!(f, "adL"),
            Gen::Id(w) => write!(f, "id({w})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Gen(g) => write!(f, "{g}"),
            Expr::Compose(items) => {
                let parts: Vec<String> = items.iter().map(|e| e.to_string()).collect();
                write!(f, "{}", parts.join(" . "))
            }
            Expr::Tensor(items) => {
                let parts: Vec<String> = items
                    .iter()
                    .map(|e| match e {
                        Expr::Compose(_) => format!("({e})"),
                        _ => e.to_string(),
                    })
                    .collect();
                write!(f, "{}", parts.join(" * "))
            }
        }
    }
}
