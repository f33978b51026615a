//! Window modules: the spaces `M(0..N)` and exact generator actions.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use diagrams::{ChordDiagram, DiagramVector, Tok};
use homspaces::{jac_space_cached, HomSpaceModel};
use ratlin::{Accumulator, LinearMap, SparseVec, Subspace, Q};
use rayon::prelude::*;
use symgrp::Perm;

use crate::generators::{p_d, p_l, q_d, q_double_prime, q_prime, x0};
use crate::spec::WindowSpec;
use crate::submodule::WindowSubmodule;
use crate::WinError;

/// A primitive generator acting at strand positions of `M(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    /// Merges strands `i, i+1`.
    Mu(usize),
    /// Inserts an empty strand at `i`.
    Eta(usize),
    /// Cables strand `i`.
    Delta(usize),
    /// Deletes strand `i` (zero unless it is empty).
    Eps(usize),
    /// Reverses strand `i`.
    S(usize),
    /// Moves strand `j` to `σ(j)`; `σ` has degree `n`.
    Perm(Perm),
    /// Inserts `c̃` on two new strands at `i, i+1`.
    Cas(usize),
}

impl Gen {
    /// The target arity when `self` is defined on `M(n)`.
    pub fn target(&self, n: usize) -> Option<usize> {
        match self {
            Gen::Mu(i) => (i + 1 < n).then(|| n - 1),
            Gen::Eta(i) => (*i <= n).then_some(n + 1),
            Gen::Delta(i) => (*i < n).then_some(n + 1),
            Gen::Eps(i) => (*i < n).then(|| n - 1),
            Gen::S(i) => (*i < n).then_some(n),
            Gen::Perm(p) => (p.degree() == n).then_some(n),
            Gen::Cas(i) => (*i <= n).then_some(n + 2),
        }
    }

    /// The increase of internal degree.
    pub fn degree_shift(&self) -> usize {
        usize::from(matches!(self, Gen::Cas(_)))
    }

    /// The image of a single diagram as a signed list of diagrams.
    pub fn on_diagram(&self, d: &ChordDiagram) -> Vec<(i64, ChordDiagram)> {
        match self {
            Gen::Mu(i) => vec![(1, d.merge(*i))],
            Gen::Eta(i) => vec![(1, d.insert_empty(*i))],
            Gen::Delta(i) => d.cable(*i).into_iter().map(|x| (1, x)).collect(),
            Gen::Eps(i) => d.delete(*i).into_iter().map(|x| (1, x)).collect(),
            Gen::S(i) => vec![d.reverse(*i)],
            Gen::Perm(p) => vec![(1, d.permute(p))],
            Gen::Cas(i) => vec![(1, d.insert_chord_pair(*i))],
        }
    }

    /// The generators used for submodule saturation and commutants at
    /// arity `n`, with targets at most `n_max`. `c̃` is only included when
    /// `casimir` holds.
    pub fn all_at(n: usize, n_max: usize, casimir: bool) -> Vec<Gen> {
        let mut out = Vec::new();
        for i in 0..n {
            out.push(Gen::S(i));
            out.push(Gen::Eps(i));
            if i + 1 < n {
                out.push(Gen::Mu(i));
                out.push(Gen::Perm(Perm::transposition(n, i, i + 1)));
            }
        }
        if n < n_max {
            out.extend((0..n).map(Gen::Delta));
            out.extend((0..=n).map(Gen::Eta));
        }
        if casimir && n + 2 <= n_max {
            out.push(Gen::Cas(0));
        }
        out
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Mu(i) => write!(f, "mu@{i}"),
            Gen::Eta(i) => write!(f, "eta@{i}"),
            Gen::Delta(i) => write!(f, "delta@{i}"),
            Gen::Eps(i) => write!(f, "eps@{i}"),
            Gen::S(i) => write!(f, "S@{i}"),
            Gen::Perm(p) => write!(f, "P{p}"),
            Gen::Cas(i) => write!(f, "cas@{i}"),
        }
    }
}

/// A vector of `M(n)` in the flattened coordinates of its degree blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub n: usize,
    pub v: SparseVec,
}

impl Element {
    pub fn zero(n: usize) -> Self {
        Element { n, v: SparseVec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn add_scaled(&self, a: &Q, other: &Element) -> Result<Element, WinError> {
        if self.n != other.n {
            return Err(WinError::Invalid(format!("adding elements of arities {} and {}", self.n, other.n)));
        }
        Ok(Element { n: self.n, v: self.v.add_scaled(a, &other.v) })
    }

    pub fn scale(&self, a: &Q) -> Element {
        Element { n: self.n, v: self.v.scale(a) }
    }
}

type MapKey = (Gen, usize, usize);

/// The spaces `M(n)`, `n ≤ N`, of a built-in module with exact actions.
///
/// `M(n) = ⊕_{lo ≤ k < hi} 𝒜^L_k(L^m, H^n)`, each block a chord diagram
/// space modulo 4T. For modules that are not the whole ambient family the
/// generators span a submodule; see [`crate::generated_submodule`].
pub struct WindowModule {
    spec: WindowSpec,
    n_max: usize,
    m: usize,
    lo: usize,
    hi: usize,
    blocks: Vec<Vec<Arc<HomSpaceModel<ChordDiagram>>>>,
    offsets: Vec<Vec<usize>>,
    dims: Vec<usize>,
    generators: Vec<Element>,
    maps: Mutex<HashMap<MapKey, Option<Arc<LinearMap>>>>,
}

impl fmt::Debug for WindowModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WindowModule({} N={} dims={:?})", self.spec, self.n_max, self.dims)
    }
}

/// Builds the window `M(0..=n_max)` of a built-in module.
pub fn build_window(spec: WindowSpec, n_max: usize) -> Result<WindowModule, WinError> {
    let (m, lo, hi) = spec.ambient();
    if spec != WindowSpec::Zero && n_max < 2 * spec.top_degree() + m {
        return Err(WinError::Invalid(format!("window {n_max} is too small for {spec}: need N ≥ {}", 2 * spec.top_degree() + m)));
    }
    let keys: Vec<(usize, usize)> = (0..=n_max).flat_map(|n| (lo..hi).map(move |k| (n, k))).collect();
    let built = keys.par_iter().map(|&(n, k)| jac_space_cached(k, m, n)).collect::<Result<Vec<_>, _>>()?;
    let width = hi - lo;
    let mut blocks = Vec::with_capacity(n_max + 1);
    let mut offsets = Vec::with_capacity(n_max + 1);
    let mut dims = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let row: Vec<_> = built[n * width..(n + 1) * width].to_vec();
        let mut off = Vec::with_capacity(width);
        let mut total = 0;
        for b in &row {
            off.push(total);
            total += b.dim();
        }
        blocks.push(row);
        offsets.push(off);
        dims.push(total);
    }
    let mut w = WindowModule { spec, n_max, m, lo, hi, blocks, offsets, dims, generators: Vec::new(), maps: Mutex::new(HashMap::new()) };
    w.generators = w.spec_generators()?;
    Ok(w)
}

impl WindowModule {
    pub fn spec(&self) -> WindowSpec {
        self.spec
    }

    pub fn window(&self) -> usize {
        self.n_max
    }

    pub fn upper(&self) -> usize {
        self.m
    }

    /// The degrees `lo..hi` present.
    pub fn degrees(&self) -> std::ops::Range<usize> {
        self.lo..self.hi
    }

    /// Dimensions of the ambient spaces `M(0..=N)`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn block(&self, n: usize, k: usize) -> &HomSpaceModel<ChordDiagram> {
        &self.blocks[n][k - self.lo]
    }

    pub fn block_dim(&self, n: usize, k: usize) -> usize {
        if n > self.n_max || !self.degrees().contains(&k) {
            return 0;
        }
        self.blocks[n][k - self.lo].dim()
    }

    pub fn offset(&self, n: usize, k: usize) -> usize {
        self.offsets[n][k - self.lo]
    }

    /// The generating elements of the module.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Whether `c̃` can act without leaving the degree range.
    pub fn casimir_acts(&self) -> bool {
        self.hi > self.lo + 1
    }

    fn spec_generators(&self) -> Result<Vec<Element>, WinError> {
        let vecs = match self.spec {
            WindowSpec::Band { lo, .. } => vec![DiagramVector::single(x0(lo, 0))],
            WindowSpec::Lie { d } => vec![DiagramVector::single(x0(d, 1))],
            WindowSpec::QBand { .. } => vec![q_d(2)?],
            WindowSpec::P { d } => vec![p_d(d)],
            WindowSpec::Q { d } => vec![q_d(d)?],
            WindowSpec::LieP { d } => vec![p_l(d)],
            WindowSpec::LieQ { d } => {
                let mut v = vec![q_prime(d)?];
                if d >= 2 {
                    v.push(q_double_prime(d)?);
                }
                v
            }
            WindowSpec::Zero => vec![],
        };
        vecs.iter().map(|v| self.element_of(v)).collect()
    }

    /// Restricts a flattened vector of `M(n)` to the block of degree `k`.
    pub fn part(&self, n: usize, k: usize, v: &SparseVec) -> SparseVec {
        let (a, b) = (self.offset(n, k), self.offset(n, k) + self.block_dim(n, k));
        SparseVec::from_sorted_unchecked(v.iter().filter(|(i, _)| *i >= a && *i < b).map(|(i, x)| (i - a, x.clone())).collect())
    }

    /// Embeds a block vector of degree `k` into `M(n)`.
    pub fn place(&self, n: usize, k: usize, v: &SparseVec) -> SparseVec {
        let a = self.offset(n, k);
        SparseVec::from_sorted_unchecked(v.iter().map(|(i, x)| (i + a, x.clone())).collect())
    }

    /// The element of `M(n)` represented by a combination of diagrams;
    /// diagrams of degree `≥ hi` vanish.
    pub fn element_of(&self, x: &DiagramVector) -> Result<Element, WinError> {
        let mut n = None;
        let mut acc = Accumulator::new();
        for (d, c) in x.iter() {
            if *n.get_or_insert(d.n_strands()) != d.n_strands() {
                return Err(WinError::Invalid("diagrams on different numbers of strands".into()));
            }
            if d.n_upper() != self.m {
                return Err(WinError::Invalid(format!("diagram with {} upper legs in a module with {}", d.n_upper(), self.m)));
            }
            let k = d.degree();
            if d.n_strands() > self.n_max {
                return Err(WinError::OutOfWindow(d.n_strands()));
            }
            if k >= self.hi {
                continue;
            }
            if k < self.lo {
                return Err(WinError::Invalid(format!("degree {k} below the window degrees {:?}", self.degrees())));
            }
            let b = self.block(d.n_strands(), k);
            let i = b.index_of(d).ok_or_else(|| WinError::Invalid("diagram outside the spanning set".into()))?;
            acc.add_vec(c, &self.place(d.n_strands(), k, &b.nf_index(i)));
        }
        let n = n.ok_or_else(|| WinError::Invalid("empty combination has no arity".into()))?;
        Ok(Element { n, v: acc.finish() })
    }

    /// A combination of basis diagrams representing `x`.
    pub fn lift(&self, x: &Element) -> DiagramVector {
        let mut out = DiagramVector::new();
        for k in self.degrees() {
            out = out.plus(&self.block(x.n, k).lift(&self.part(x.n, k, &x.v)));
        }
        out
    }

    /// The block map of `g` on degree `k` of `M(n)`. `None` means the
    /// image lies in a truncated degree and is zero.
    pub fn block_map(&self, g: &Gen, n: usize, k: usize) -> Result<Option<Arc<LinearMap>>, WinError> {
        let key = (g.clone(), n, k);
        if let Some(x) = self.maps.lock().expect("map cache").get(&key) {
            return Ok(x.clone());
        }
        let built = self.compute_block_map(g, n, k)?.map(Arc::new);
        Ok(self.maps.lock().expect("map cache").entry(key).or_insert(built).clone())
    }

    fn target_of(&self, g: &Gen, n: usize) -> Result<usize, WinError> {
        if n > self.n_max {
            return Err(WinError::OutOfWindow(n));
        }
        let t = g.target(n).ok_or_else(|| WinError::Invalid(format!("{g} is not defined on arity {n}")))?;
        if t > self.n_max {
            return Err(WinError::OutOfWindow(t));
        }
        Ok(t)
    }

    fn compute_block_map(&self, g: &Gen, n: usize, k: usize) -> Result<Option<LinearMap>, WinError> {
        let t = self.target_of(g, n)?;
        let k2 = k + g.degree_shift();
        if k2 >= self.hi {
            return Ok(None);
        }
        let (src, dst) = (self.block(n, k), self.block(t, k2));
        let images = src
            .quotient()
            .basis_cols()
            .par_iter()
            .map(|&c| {
                let mut acc = Accumulator::new();
                for (s, d) in g.on_diagram(&src.spanning()[c]) {
                    let j = dst.index_of(&d).ok_or_else(|| WinError::Invalid(format!("{g} leaves the spanning set")))?;
                    acc.add_vec(&Q::from_int(s), &dst.nf_index(j));
                }
                Ok(acc.finish())
            })
            .collect::<Result<Vec<_>, WinError>>()?;
        Ok(Some(LinearMap::new(src.dim(), dst.dim(), images)))
    }

    /// Checks that `g` sends every 4T relation of degree `k` at arity `n`
    /// to zero, so that the block map is well defined.
    pub fn check_well_defined(&self, g: &Gen, n: usize, k: usize) -> Result<(), WinError> {
        let t = self.target_of(g, n)?;
        let k2 = k + g.degree_shift();
        if k2 >= self.hi {
            return Ok(());
        }
        let (src, dst) = (self.block(n, k), self.block(t, k2));
        for row in src.quotient().relations().basis() {
            let mut acc = Accumulator::new();
            for (c, a) in row.iter() {
                for (s, d) in g.on_diagram(&src.spanning()[c]) {
                    let j = dst.index_of(&d).ok_or_else(|| WinError::Invalid(format!("{g} leaves the spanning set")))?;
                    acc.add_vec(&(a * &Q::from_int(s)), &dst.nf_index(j));
                }
            }
            if !acc.finish().is_zero() {
                return Err(WinError::NotWellDefined(format!("{g} at arity {n}, degree {k}")));
            }
        }
        Ok(())
    }

    /// The action of a primitive generator on an element.
    pub fn act_gen(&self, g: &Gen, x: &Element) -> Result<Element, WinError> {
        let t = self.target_of(g, x.n)?;
        let mut out = SparseVec::new();
        for k in self.degrees() {
            let p = self.part(x.n, k, &x.v);
            if p.is_zero() {
                continue;
            }
            if let Some(map) = self.block_map(g, x.n, k)? {
                out = out.add(&self.place(t, k + g.degree_shift(), &map.apply(&p)));
            }
        }
        Ok(Element { n: t, v: out })
    }

    /// The flattened matrix of `g` on `M(n)`.
    pub fn gen_matrix(&self, g: &Gen, n: usize) -> Result<LinearMap, WinError> {
        let t = self.target_of(g, n)?;
        let images = (0..self.dim(n)).map(|i| Ok(self.act_gen(g, &self.basis_element(n, i))?.v)).collect::<Result<Vec<_>, WinError>>()?;
        Ok(LinearMap::new(self.dim(n), self.dim(t), images))
    }

    pub fn basis_element(&self, n: usize, i: usize) -> Element {
        Element { n, v: SparseVec::unit(i) }
    }

    /// The degree of a basis index of `M(n)`.
    pub fn degree_of(&self, n: usize, i: usize) -> usize {
        self.degrees().rev().find(|&k| self.offset(n, k) <= i).expect("index inside M(n)")
    }

    /// A short rendering of an element by its basis diagrams.
    pub fn describe(&self, x: &Element) -> String {
        let terms: Vec<String> = self
            .lift(x)
            .iter()
            .take(6)
            .map(|(d, c)| format!("{c}·{}", render(d)))
            .collect();
        let more = if x.v.nnz() > 6 { " + …" } else { "" };
        format!("M({})∋{}{more}", x.n, if terms.is_empty() { "0".to_string() } else { terms.join(" + ") })
    }
}

/// Renders a diagram strand by strand: chords by label, upper legs as `u`.
pub fn render(d: &ChordDiagram) -> String {
    let strands: Vec<String> = d
        .strands()
        .iter()
        .map(|s| {
            s.iter()
                .map(|t| match t {
                    Tok::Ch(k) => format!("{k}"),
                    Tok::Up(j) => format!("u{j}"),
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    format!("[{}]", strands.join("|"))
}

/// A family of linear maps `M(n) → M(n)`, `n ≤ N`, in flattened coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowMap {
    pub maps: Vec<LinearMap>,
}

impl WindowMap {
    pub fn identity(m: &WindowModule) -> Self {
        WindowMap { maps: m.dims().iter().map(|&d| LinearMap::identity(d)).collect() }
    }

    pub fn apply(&self, x: &Element) -> Result<Element, WinError> {
        let f = self.maps.get(x.n).ok_or(WinError::OutOfWindow(x.n))?;
        Ok(Element { n: x.n, v: f.apply(&x.v) })
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &WindowMap) -> WindowMap {
        WindowMap { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.after(b)).collect() }
    }

    pub fn is_idempotent(&self) -> bool {
        self.after(self) == *self
    }

    /// Checks `g ∘ φ = φ ∘ g` for every primitive generator of the module.
    pub fn commutes_with_actions(&self, m: &WindowModule) -> Result<bool, WinError> {
        for n in 0..=m.window() {
            for g in Gen::all_at(n, m.window(), m.casimir_acts()) {
                for i in 0..m.dim(n) {
                    let x = m.basis_element(n, i);
                    if m.act_gen(&g, &self.apply(&x)?)? != self.apply(&m.act_gen(&g, &x)?)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn image(&self) -> Result<WindowSubmodule, WinError> {
        let parts = self.maps.iter().map(|f| Subspace::span(f.dst_dim, &f.images)).collect::<Result<_, _>>()?;
        Ok(WindowSubmodule { parts })
    }

    pub fn kernel(&self) -> WindowSubmodule {
        WindowSubmodule { parts: self.maps.iter().map(|f| ratlin::kernel(&f.to_matrix())).collect() }
    }

    /// Ranks of the maps per arity.
    pub fn ranks(&self) -> Vec<usize> {
        self.maps
            .iter()
            .map(|f| {
                let mut e = ratlin::Echelon::new(f.dst_dim);
                for v in &f.images {
                    e.insert(v).expect("image inside the target");
                }
                e.rank()
            })
            .collect()
    }
}
