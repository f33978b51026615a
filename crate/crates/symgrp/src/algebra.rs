//! The rational group algebra of `S_n` and Young symmetrizers.

use std::collections::BTreeMap;
use std::fmt;

use ratlin::Q;

use crate::partition::Partition;
use crate::perm::Perm;

/// A finite linear combination of permutations of a fixed degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Perm, Q>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement { degree, terms: BTreeMap::new() }
    }

    pub fn identity(degree: usize) -> Self {
        Self::from_perm(Perm::identity(degree))
    }

    pub fn from_perm(p: Perm) -> Self {
        let degree = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, Q::one());
        GroupAlgebraElement { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Perm, Q> {
        &self.terms
    }

    pub fn coeff(&self, p: &Perm) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Perm, c: &Q) {
        assert_eq!(p.degree(), self.degree);
        let e = self.terms.entry(p.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn scale(&self, a: &Q) -> Self {
        let mut out = Self::zero(self.degree);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &(c * a));
        }
        out
    }

    /// Product `self · other`, with permutations multiplied as `σ ∘ τ`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), &(a * b));
            }
        }
        out
    }

    /// If `self · self = λ · self`, returns `λ`.
    pub fn quasi_idempotent_scalar(&self) -> Option<Q> {
        let sq = self.mul(self);
        let (p, c) = self.terms.iter().next()?;
        let lambda = &sq.coeff(p) / c;
        (sq == self.scale(&lambda)).then_some(lambda)
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // By number of moved points, then by cycle notation.
        let mut items: Vec<(&Perm, &Q)> = self.terms.iter().collect();
        items.sort_by_key(|(p, _)| (p.images().iter().enumerate().filter(|(i, x)| i != *x).count(), p.to_string()));
        let mut first = true;
        for (p, c) in items {
            let label = if p.is_identity() { "1".to_string() } else { p.to_string() };
            let neg = c.signum() < 0;
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            if mag.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}{label}")?;
            }
            first = false;
        }
        Ok(())
    }
}

fn subgroup_of_blocks(n: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
    let mut group = vec![Perm::identity(n)];
    for block in blocks {
        let k = block.len();
        let mut next = Vec::with_capacity(group.len());
        for local in Perm::all(k) {
            let mut img: Vec<usize> = (0..n).collect();
            for (a, &x) in block.iter().enumerate() {
                img[x] = block[local.image(a)];
            }
            let p = Perm::from_images(img).expect("block permutation");
            for g in &group {
                next.push(g.compose(&p));
            }
        }
        group = next;
    }
    group
}

/// `c_λ = (Σ_{σ ∈ R_λ} σ)(Σ_{τ ∈ C_λ} sgn(τ) τ)` for the row-major canonical
/// tableau of `λ`.
pub fn young_symmetrizer(lambda: &Partition) -> GroupAlgebraElement {
    let n = lambda.size();
    let mut label = vec![Vec::new(); lambda.len()];
    let mut next = 0;
    for (i, &p) in lambda.parts().iter().enumerate() {
        for _ in 0..p {
            label[i].push(next);
            next += 1;
        }
    }
    let rows = label.clone();
    let cols: Vec<Vec<usize>> = (0..lambda.parts().first().copied().unwrap_or(0))
        .map(|j| label.iter().filter(|r| r.len() > j).map(|r| r[j]).collect())
        .collect();
    let mut a = GroupAlgebraElement::zero(n);
    for p in subgroup_of_blocks(n, &rows) {
        a.add_term(p, &Q::one());
    }
    let mut b = GroupAlgebraElement::zero(n);
    for p in subgroup_of_blocks(n, &cols) {
        let s = Q::from_int(p.sign());
        b.add_term(p, &s);
    }
    a.mul(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_symmetrizers() {
        assert_eq!(young_symmetrizer(&p("(1)")).to_string(), "1");
        assert_eq!(young_symmetrizer(&p("(2)")).to_string(), "1+(1 2)");
        assert_eq!(young_symmetrizer(&p("(1,1)")).to_string(), "1-(1 2)");
        assert_eq!(young_symmetrizer(&p("(2,1)")).to_string(), "1+(1 2)-(1 3)-(1 3 2)");
    }
}
