//! Submodules of a window: generation by saturation and the trivalent
//! vertex filtration.

use std::collections::{HashMap, VecDeque};

use diagrams::enumerate_jacobi;
use ratlin::{Accumulator, Echelon, SparseVec, Subspace};

use crate::window::{Element, Gen, WindowModule};
use crate::WinError;

/// One subspace of `M(n)` per arity `n ≤ N`, in flattened coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WindowSubmodule {
    pub parts: Vec<Subspace>,
}

impl WindowSubmodule {
    pub fn zero(m: &WindowModule) -> Self {
        WindowSubmodule { parts: m.dims().iter().map(|&d| Subspace::zero(d)).collect() }
    }

    pub fn full(m: &WindowModule) -> Self {
        WindowSubmodule { parts: m.dims().iter().map(|&d| Subspace::full(d)).collect() }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(|s| s.dim()).collect()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.parts.get(x.n).is_some_and(|s| s.contains(&x.v))
    }

    pub fn contains_submodule(&self, other: &WindowSubmodule) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| a.contains_subspace(b))
    }

    pub fn sum(&self, other: &WindowSubmodule) -> Result<WindowSubmodule, WinError> {
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| a.sum(b)).collect::<Result<_, _>>()?;
        Ok(WindowSubmodule { parts })
    }

    pub fn intersection(&self, other: &WindowSubmodule) -> Result<WindowSubmodule, WinError> {
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| a.intersection(b)).collect::<Result<_, _>>()?;
        Ok(WindowSubmodule { parts })
    }

    /// Whether every primitive generator maps the subspaces into each other.
    pub fn is_closed(&self, m: &WindowModule) -> Result<bool, WinError> {
        for n in 0..=m.window() {
            for g in Gen::all_at(n, m.window(), m.casimir_acts()) {
                for v in self.parts[n].basis() {
                    let y = m.act_gen(&g, &Element { n, v: v.clone() })?;
                    if !self.contains(&y) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// The least action-closed family of subspaces containing `elements`,
/// found by saturating with every primitive generator.
pub fn generated_submodule(m: &WindowModule, elements: &[Element]) -> Result<WindowSubmodule, WinError> {
    let mut starts = Vec::new();
    for x in elements {
        if x.n > m.window() {
            return Err(WinError::OutOfWindow(x.n));
        }
        let parts: Vec<usize> = m.degrees().filter(|&k| !m.part(x.n, k, &x.v).is_zero()).collect();
        match parts.as_slice() {
            [] => {}
            [k] => starts.push((x.n, *k, m.part(x.n, *k, &x.v))),
            _ => return generated_flat(m, elements),
        }
    }
    generated_graded(m, &starts)
}

/// Saturation block by block, for homogeneous generators. Full blocks are
/// skipped.
fn generated_graded(m: &WindowModule, starts: &[(usize, usize, SparseVec)]) -> Result<WindowSubmodule, WinError> {
    let mut ech: HashMap<(usize, usize), Echelon> = HashMap::new();
    let mut queue = VecDeque::new();
    let insert = |ech: &mut HashMap<(usize, usize), Echelon>, n: usize, k: usize, v: &SparseVec| -> Result<bool, WinError> {
        let e = ech.entry((n, k)).or_insert_with(|| Echelon::new(m.block_dim(n, k)));
        Ok(e.rank() < e.ambient() && e.insert(v)?)
    };
    for (n, k, v) in starts {
        if insert(&mut ech, *n, *k, v)? {
            queue.push_back((*n, *k, v.clone()));
        }
    }
    let gens: Vec<Vec<Gen>> = (0..=m.window()).map(|n| Gen::all_at(n, m.window(), m.casimir_acts())).collect();
    while let Some((n, k, v)) = queue.pop_front() {
        for g in &gens[n] {
            let Some(f) = m.block_map(g, n, k)? else { continue };
            let (t, kt) = (g.target(n).expect("generator defined"), k + g.degree_shift());
            let u = f.apply(&v);
            if !u.is_zero() && insert(&mut ech, t, kt, &u)? {
                queue.push_back((t, kt, u));
            }
        }
    }
    let mut parts = Vec::with_capacity(m.window() + 1);
    for n in 0..=m.window() {
        let mut gens = Vec::new();
        for k in m.degrees() {
            if let Some(e) = ech.remove(&(n, k)) {
                gens.extend(e.into_subspace().basis().iter().map(|b| m.place(n, k, b)));
            }
        }
        parts.push(Subspace::span(m.dim(n), &gens)?);
    }
    Ok(WindowSubmodule { parts })
}

fn generated_flat(m: &WindowModule, elements: &[Element]) -> Result<WindowSubmodule, WinError> {
    let mut ech: Vec<Echelon> = m.dims().iter().map(|&d| Echelon::new(d)).collect();
    let mut queue = VecDeque::new();
    for x in elements {
        if x.n > m.window() {
            return Err(WinError::OutOfWindow(x.n));
        }
        if ech[x.n].insert(&x.v)? {
            queue.push_back(x.clone());
        }
    }
    let gens: Vec<Vec<Gen>> = (0..=m.window()).map(|n| Gen::all_at(n, m.window(), m.casimir_acts())).collect();
    while let Some(x) = queue.pop_front() {
        for g in &gens[x.n] {
            let y = m.act_gen(g, &x)?;
            if !y.is_zero() && ech[y.n].insert(&y.v)? {
                queue.push_back(y);
            }
        }
    }
    Ok(WindowSubmodule { parts: ech.into_iter().map(Echelon::into_subspace).collect() })
}

/// `M_{≥d,≥k}`: at each degree `≥ d`, the span of the normal forms of all
/// Jacobi diagrams with at least `k` trivalent vertices. For `k ≥ 1` the
/// diagrams with exactly `k` vertices suffice, since STU at a vertex next
/// to a leg writes a diagram with `t+1` vertices through ones with `t`.
pub fn filtration_subspace(m: &WindowModule, d: usize, k: usize) -> Result<WindowSubmodule, WinError> {
    let mut parts = Vec::with_capacity(m.window() + 1);
    for n in 0..=m.window() {
        let mut gens = Vec::new();
        for deg in m.degrees().filter(|&deg| deg >= d) {
            let b = m.block(n, deg);
            if k == 0 {
                gens.extend((0..b.dim()).map(|i| m.place(n, deg, &SparseVec::unit(i))));
                continue;
            }
            for j in enumerate_jacobi(deg, n, m.upper(), k, false) {
                let x = j.stu_normalize().map_err(homspaces::HomError::from)?;
                let mut acc = Accumulator::new();
                for (c, a) in x.iter() {
                    let i = b.index_of(c).ok_or_else(|| WinError::Invalid("normal form outside the spanning set".into()))?;
                    acc.add_vec(a, &b.nf_index(i));
                }
                let v = acc.finish();
                if !v.is_zero() {
                    gens.push(m.place(n, deg, &v));
                }
            }
        }
        parts.push(Subspace::span(m.dim(n), &gens)?);
    }
    Ok(WindowSubmodule { parts })
}

/// The closure of `seeds` under sums and intersections, with `0` and the
/// whole window added. Every member is checked to be action-closed.
pub fn submodule_lattice(m: &WindowModule, seeds: &[WindowSubmodule]) -> Result<Vec<WindowSubmodule>, WinError> {
    let mut all: Vec<WindowSubmodule> = Vec::new();
    let push = |all: &mut Vec<WindowSubmodule>, s: WindowSubmodule| {
        if !all.contains(&s) {
            all.push(s);
            true
        } else {
            false
        }
    };
    push(&mut all, WindowSubmodule::zero(m));
    push(&mut all, WindowSubmodule::full(m));
    for s in seeds {
        if !s.is_closed(m)? {
            return Err(WinError::Invalid("a seed is not a submodule".into()));
        }
        push(&mut all, s.clone());
    }
    let mut done = 0;
    while done < all.len() {
        let a = all[done].clone();
        for j in 0..=done {
            let b = all[j].clone();
            for c in [a.sum(&b)?, a.intersection(&b)?] {
                push(&mut all, c);
            }
        }
        done += 1;
    }
    Ok(all)
}
