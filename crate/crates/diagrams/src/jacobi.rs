//! Uni-trivalent graphs attached to strands, free bottom outputs and the
//! upper line, with STU normalization to chord diagrams.

use ratlin::Q;
use symgrp::Perm;

use crate::chord::{ChordDiagram, DiagramVector, Tok};
use crate::trees::RootedTree;
use crate::DiagramError;

/// One end of an edge: slot `slot` of node `node`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Half {
    pub node: usize,
    pub slot: usize,
}

/// A vertex: univalent with its edge mate, or trivalent with the mates of
/// its three slots in cyclic order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Node {
    Uni(Half),
    Tri([Half; 3]),
    Dead,
}

/// A bottom output: an H-strand carrying univalent vertices in order, or an
/// L-output given by a single univalent vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Site {
    Strand(Vec<usize>),
    Root(usize),
}

/// A Jacobi diagram from `L^{upper}` to a word of strands and L-outputs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JacobiDiagram {
    nodes: Vec<Node>,
    upper: Vec<usize>,
    bottom: Vec<Site>,
}

/// A candidate STU move: trivalent vertex `tri` adjacent to the univalent
/// vertex at `pos` on bottom site `site`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StuSite {
    pub tri: usize,
    pub site: usize,
    pub pos: usize,
}

const UNSET: Half = Half { node: usize::MAX, slot: 0 };

impl JacobiDiagram {
    /// The diagram with `n` empty strands.
    pub fn empty(n: usize) -> Self {
        JacobiDiagram { nodes: Vec::new(), upper: Vec::new(), bottom: vec![Site::Strand(Vec::new()); n] }
    }

    /// `n_upper` straight L-lines from the upper line to L-outputs.
    pub fn identity_l(n_upper: usize) -> Self {
        let mut j = JacobiDiagram { nodes: Vec::new(), upper: Vec::new(), bottom: Vec::new() };
        for _ in 0..n_upper {
            let a = j.add_uni();
            let b = j.add_uni();
            j.connect(Half { node: a, slot: 0 }, Half { node: b, slot: 0 });
            j.upper.push(a);
            j.bottom.push(Site::Root(b));
        }
        j
    }

    pub fn from_chord(d: &ChordDiagram) -> Self {
        let mut j = JacobiDiagram { nodes: Vec::new(), upper: Vec::new(), bottom: Vec::new() };
        for _ in 0..d.n_upper() {
            let u = j.add_uni();
            j.upper.push(u);
        }
        let mut first: Vec<Option<usize>> = vec![None; d.n_chords()];
        for s in d.strands() {
            let mut ids = Vec::with_capacity(s.len());
            for t in s {
                let u = j.add_uni();
                ids.push(u);
                match *t {
                    Tok::Up(k) => j.connect(Half { node: u, slot: 0 }, Half { node: j.upper[k as usize], slot: 0 }),
                    Tok::Ch(k) => match first[k as usize].take() {
                        Some(v) => j.connect(Half { node: u, slot: 0 }, Half { node: v, slot: 0 }),
                        None => first[k as usize] = Some(u),
                    },
                }
            }
            j.bottom.push(Site::Strand(ids));
        }
        j
    }

    pub fn add_uni(&mut self) -> usize {
        self.nodes.push(Node::Uni(UNSET));
        self.nodes.len() - 1
    }

    pub fn add_tri(&mut self) -> usize {
        self.nodes.push(Node::Tri([UNSET; 3]));
        self.nodes.len() - 1
    }

    fn set(&mut self, h: Half, to: Half) {
        match &mut self.nodes[h.node] {
            Node::Uni(m) => *m = to,
            Node::Tri(ms) => ms[h.slot] = to,
            Node::Dead => panic!("edge to a removed vertex"),
        }
    }

    pub fn mate(&self, h: Half) -> Half {
        match &self.nodes[h.node] {
            Node::Uni(m) => *m,
            Node::Tri(ms) => ms[h.slot],
            Node::Dead => panic!("edge to a removed vertex"),
        }
    }

    pub fn connect(&mut self, a: Half, b: Half) {
        self.set(a, b);
        self.set(b, a);
    }

    /// Moves the edge ending at `old` so that it ends at `new` instead.
    fn redirect(&mut self, old: Half, new: Half) {
        let m = self.mate(old);
        self.connect(new, m);
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn upper(&self) -> &[usize] {
        &self.upper
    }

    pub fn bottom(&self) -> &[Site] {
        &self.bottom
    }

    pub fn n_upper(&self) -> usize {
        self.upper.len()
    }

    pub fn set_upper(&mut self, upper: Vec<usize>) {
        self.upper = upper;
    }

    pub fn set_bottom(&mut self, bottom: Vec<Site>) {
        self.bottom = bottom;
    }

    pub fn n_trivalent(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, Node::Tri(_))).count()
    }

    /// `½#vertices − #upper vertices`.
    pub fn degree(&self) -> usize {
        let v = self.nodes.iter().filter(|n| !matches!(n, Node::Dead)).count();
        v / 2 - self.upper.len()
    }

    fn strand_mut(&mut self, site: usize) -> Result<&mut Vec<usize>, DiagramError> {
        match self.bottom.get_mut(site) {
            Some(Site::Strand(v)) => Ok(v),
            _ => Err(DiagramError::Invalid(format!("bottom site {site} is not a strand"))),
        }
    }

    fn root_at(&self, site: usize) -> Result<usize, DiagramError> {
        match self.bottom.get(site) {
            Some(Site::Root(u)) => Ok(*u),
            _ => Err(DiagramError::Invalid(format!("bottom site {site} is not an L-output"))),
        }
    }

    fn check_site(&self, site: usize, len: usize) -> Result<(), DiagramError> {
        if site + len > self.bottom.len() {
            return Err(DiagramError::Invalid(format!("bottom sites {site}..{} out of range", site + len)));
        }
        Ok(())
    }

    /// Concatenates strands `i` and `i+1`.
    pub fn mu(&mut self, i: usize) -> Result<(), DiagramError> {
        self.check_site(i, 2)?;
        let b = std::mem::take(self.strand_mut(i + 1)?);
        self.strand_mut(i)?.extend(b);
        self.bottom.remove(i + 1);
        Ok(())
    }

    /// Inserts an empty strand at `i`.
    pub fn eta(&mut self, i: usize) -> Result<(), DiagramError> {
        self.check_site(i, 0)?;
        self.bottom.insert(i, Site::Strand(Vec::new()));
        Ok(())
    }

    /// Deletes strand `i`; returns `false` when the result vanishes.
    pub fn eps(&mut self, i: usize) -> Result<bool, DiagramError> {
        self.check_site(i, 1)?;
        if !self.strand_mut(i)?.is_empty() {
            return Ok(false);
        }
        self.bottom.remove(i);
        Ok(true)
    }

    /// Reverses strand `i`; returns the sign `(−1)^{#vertices}`.
    pub fn antipode(&mut self, i: usize) -> Result<i64, DiagramError> {
        self.check_site(i, 1)?;
        let s = self.strand_mut(i)?;
        s.reverse();
        Ok(if s.len() % 2 == 0 { 1 } else { -1 })
    }

    /// Doubles strand `i`: all distributions of its vertices over two copies
    /// in binary-counter order.
    pub fn delta(&self, i: usize) -> Result<Vec<JacobiDiagram>, DiagramError> {
        self.check_site(i, 1)?;
        let pts = match &self.bottom[i] {
            Site::Strand(v) => v.clone(),
            Site::Root(_) => return Err(DiagramError::Invalid(format!("bottom site {i} is not a strand"))),
        };
        let mut out = Vec::with_capacity(1 << pts.len());
        for mask in 0u64..(1u64 << pts.len()) {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for (j, &u) in pts.iter().enumerate() {
                if mask >> j & 1 == 0 {
                    a.push(u);
                } else {
                    b.push(u);
                }
            }
            let mut d = self.clone();
            d.bottom[i] = Site::Strand(a);
            d.bottom.insert(i + 1, Site::Strand(b));
            out.push(d);
        }
        Ok(out)
    }

    /// Applies `P_σ` to the bottom sites `off..off+deg σ`: the site at
    /// relative position `j` moves to `σ(j)`.
    pub fn permute(&mut self, off: usize, sigma: &Perm) -> Result<(), DiagramError> {
        let k = sigma.degree();
        self.check_site(off, k)?;
        let old: Vec<Site> = self.bottom[off..off + k].to_vec();
        for (j, s) in old.into_iter().enumerate() {
            self.bottom[off + sigma.image(j)] = s;
        }
        Ok(())
    }

    /// Inserts two strands at `i, i+1` joined by a chord.
    pub fn casimir(&mut self, i: usize) -> Result<(), DiagramError> {
        self.check_site(i, 0)?;
        let a = self.add_uni();
        let b = self.add_uni();
        self.connect(Half { node: a, slot: 0 }, Half { node: b, slot: 0 });
        self.bottom.insert(i, Site::Strand(vec![a]));
        self.bottom.insert(i + 1, Site::Strand(vec![b]));
        Ok(())
    }

    /// Inserts two L-outputs at `i, i+1` joined by an edge.
    pub fn lie_casimir(&mut self, i: usize) -> Result<(), DiagramError> {
        self.check_site(i, 0)?;
        let a = self.add_uni();
        let b = self.add_uni();
        self.connect(Half { node: a, slot: 0 }, Half { node: b, slot: 0 });
        self.bottom.insert(i, Site::Root(a));
        self.bottom.insert(i + 1, Site::Root(b));
        Ok(())
    }

    /// Attaches the L-output at `i` to a new strand.
    pub fn inclusion(&mut self, i: usize) -> Result<(), DiagramError> {
        self.check_site(i, 1)?;
        let u = self.root_at(i)?;
        self.bottom[i] = Site::Strand(vec![u]);
        Ok(())
    }

    /// Joins the L-outputs at `i, i+1` by a trivalent vertex with cyclic
    /// order (new output, left, right).
    pub fn bracket(&mut self, i: usize) -> Result<(), DiagramError> {
        self.check_site(i, 2)?;
        let a = self.root_at(i)?;
        let b = self.root_at(i + 1)?;
        let t = self.add_tri();
        let r = self.add_uni();
        self.connect(Half { node: r, slot: 0 }, Half { node: t, slot: 0 });
        self.redirect(Half { node: a, slot: 0 }, Half { node: t, slot: 1 });
        self.nodes[a] = Node::Dead;
        self.redirect(Half { node: b, slot: 0 }, Half { node: t, slot: 2 });
        self.nodes[b] = Node::Dead;
        self.bottom[i] = Site::Root(r);
        self.bottom.remove(i + 1);
        Ok(())
    }

    /// Places `other` to the right of `self`.
    pub fn tensor(&self, other: &JacobiDiagram) -> JacobiDiagram {
        let shift = self.nodes.len();
        let sh = |h: Half| Half { node: h.node + shift, slot: h.slot };
        let mut out = self.clone();
        for n in &other.nodes {
            out.nodes.push(match *n {
                Node::Uni(h) => Node::Uni(sh(h)),
                Node::Tri(hs) => Node::Tri([sh(hs[0]), sh(hs[1]), sh(hs[2])]),
                Node::Dead => Node::Dead,
            });
        }
        out.upper.extend(other.upper.iter().map(|u| u + shift));
        for s in &other.bottom {
            out.bottom.push(match s {
                Site::Strand(v) => Site::Strand(v.iter().map(|u| u + shift).collect()),
                Site::Root(u) => Site::Root(u + shift),
            });
        }
        out
    }

    /// Replaces upper leg `j` by the root of `trees[j]`; tree leaf `l`
    /// becomes upper point `l`, so the new upper line has `n_new` points.
    pub fn substitute_upper(&self, trees: &[RootedTree], n_new: usize) -> Result<JacobiDiagram, DiagramError> {
        if trees.len() != self.upper.len() {
            return Err(DiagramError::Invalid(format!(
                "{} trees for {} upper points",
                trees.len(),
                self.upper.len()
            )));
        }
        let mut out = self.clone();
        let mut new_upper: Vec<Option<usize>> = vec![None; n_new];
        for (j, tree) in trees.iter().enumerate() {
            let old = self.upper[j];
            let top = out.build_tree(tree, &mut new_upper)?;
            out.redirect(Half { node: old, slot: 0 }, top);
            out.nodes[old] = Node::Dead;
        }
        out.upper = new_upper
            .into_iter()
            .enumerate()
            .map(|(l, u)| u.ok_or_else(|| DiagramError::Invalid(format!("upper point {} unused", l + 1))))
            .collect::<Result<_, _>>()?;
        Ok(out)
    }

    fn build_tree(&mut self, t: &RootedTree, leaves: &mut [Option<usize>]) -> Result<Half, DiagramError> {
        match t {
            RootedTree::Leaf(l) => {
                let l = *l;
                if l >= leaves.len() || leaves[l].is_some() {
                    return Err(DiagramError::Invalid(format!("leaf {} out of range or repeated", l + 1)));
                }
                let u = self.add_uni();
                leaves[l] = Some(u);
                Ok(Half { node: u, slot: 0 })
            }
            RootedTree::Node(a, b) => {
                let v = self.add_tri();
                let ha = self.build_tree(a, leaves)?;
                let hb = self.build_tree(b, leaves)?;
                self.connect(Half { node: v, slot: 1 }, ha);
                self.connect(Half { node: v, slot: 2 }, hb);
                Ok(Half { node: v, slot: 0 })
            }
        }
    }

    /// All available STU moves.
    pub fn stu_sites(&self) -> Vec<StuSite> {
        let mut out = Vec::new();
        for (si, s) in self.bottom.iter().enumerate() {
            if let Site::Strand(v) = s {
                for (p, &u) in v.iter().enumerate() {
                    if let Node::Uni(m) = self.nodes[u] {
                        if matches!(self.nodes[m.node], Node::Tri(_)) {
                            out.push(StuSite { tri: m.node, site: si, pos: p });
                        }
                    }
                }
            }
        }
        out
    }

    /// One STU move: returns `(D₁, D₂)` with the diagram equal to `D₁ − D₂`,
    /// or `None` when the vertex carries a self-loop (the diagram vanishes).
    pub fn stu_step(&self, at: StuSite) -> Option<(JacobiDiagram, JacobiDiagram)> {
        let u = match &self.bottom[at.site] {
            Site::Strand(v) => v[at.pos],
            Site::Root(_) => unreachable!("STU sites lie on strands"),
        };
        let h0 = match self.nodes[u] {
            Node::Uni(m) => m,
            _ => unreachable!(),
        };
        let v = h0.node;
        let h1 = Half { node: v, slot: (h0.slot + 1) % 3 };
        let h2 = Half { node: v, slot: (h0.slot + 2) % 3 };
        let (m1, m2) = (self.mate(h1), self.mate(h2));
        if m1 == h2 {
            return None;
        }
        let make = |first: Half, second: Half| {
            let mut d = self.clone();
            d.nodes[u] = Node::Dead;
            d.nodes[v] = Node::Dead;
            let a = d.add_uni();
            let b = d.add_uni();
            d.connect(Half { node: a, slot: 0 }, first);
            d.connect(Half { node: b, slot: 0 }, second);
            if let Site::Strand(s) = &mut d.bottom[at.site] {
                s[at.pos] = a;
                s.insert(at.pos + 1, b);
            }
            d
        };
        Some((make(m2, m1), make(m1, m2)))
    }

    /// Converts a diagram without trivalent vertices or L-outputs.
    pub fn to_chord(&self) -> Result<ChordDiagram, DiagramError> {
        let mut strands = Vec::with_capacity(self.bottom.len());
        let mut label = vec![None; self.nodes.len()];
        let mut up_index = vec![None; self.nodes.len()];
        for (j, &u) in self.upper.iter().enumerate() {
            up_index[u] = Some(j as u16);
        }
        let mut next = 0u16;
        for s in &self.bottom {
            let v = match s {
                Site::Strand(v) => v,
                Site::Root(_) => return Err(DiagramError::NotChord("L-output present".into())),
            };
            let mut toks = Vec::with_capacity(v.len());
            for &u in v {
                let m = match self.nodes[u] {
                    Node::Uni(m) => m,
                    _ => return Err(DiagramError::NotChord("strand vertex is not univalent".into())),
                };
                if matches!(self.nodes[m.node], Node::Tri(_)) {
                    return Err(DiagramError::NotChord("trivalent vertex present".into()));
                }
                if let Some(j) = up_index[m.node] {
                    toks.push(Tok::Up(j));
                } else if let Some(k) = label[m.node] {
                    toks.push(Tok::Ch(k));
                } else {
                    label[u] = Some(next);
                    toks.push(Tok::Ch(next));
                    next += 1;
                }
            }
            strands.push(toks);
        }
        if self.n_trivalent() > 0 {
            return Err(DiagramError::NotChord("trivalent vertex away from strands".into()));
        }
        for &u in &self.upper {
            if let Node::Uni(m) = self.nodes[u] {
                if up_index[m.node].is_some() {
                    return Err(DiagramError::NotChord("edge joins two upper points".into()));
                }
            }
        }
        ChordDiagram::new(self.upper.len(), strands)
    }

    /// STU-normalizes using the vertex next to the smallest strand position.
    pub fn stu_normalize(&self) -> Result<DiagramVector, DiagramError> {
        self.stu_normalize_with(&mut |_: &[StuSite]| 0)
    }

    /// STU-normalizes; `choose` picks the move among the available ones.
    pub fn stu_normalize_with(&self, choose: &mut dyn FnMut(&[StuSite]) -> usize) -> Result<DiagramVector, DiagramError> {
        let mut out = DiagramVector::new();
        let mut stack: Vec<(i64, JacobiDiagram)> = vec![(1, self.clone())];
        while let Some((c, d)) = stack.pop() {
            if d.n_trivalent() == 0 {
                out.add_term(d.to_chord()?, &Q::from_int(c));
                continue;
            }
            let sites = d.stu_sites();
            if sites.is_empty() {
                return Err(DiagramError::Disconnected);
            }
            let k = choose(&sites).min(sites.len() - 1);
            if let Some((a, b)) = d.stu_step(sites[k]) {
                stack.push((c, a));
                stack.push((-c, b));
            }
        }
        Ok(out)
    }
}

/// STU-normalizes a signed list of Jacobi diagrams.
pub fn normalize_all(terms: &[(Q, JacobiDiagram)]) -> Result<DiagramVector, DiagramError> {
    let mut out = DiagramVector::new();
    for (c, j) in terms {
        out.add_scaled(c, &j.stu_normalize()?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::enumerate_chords;

    fn tripod_on_strand() -> JacobiDiagram {
        // Two upper legs bracketed, then attached to one strand.
        let mut j = JacobiDiagram::identity_l(2);
        j.bracket(0).unwrap();
        j.inclusion(0).unwrap();
        j
    }

    #[test]
    fn chord_round_trip() {
        for d in enumerate_chords(2, 2, 1) {
            let j = JacobiDiagram::from_chord(&d);
            assert_eq!(j.to_chord().unwrap(), d);
            let v = j.stu_normalize().unwrap();
            assert_eq!(v.len(), 1);
            assert!(v.coeff(&d).is_one());
        }
    }

    #[test]
    fn tripod_gives_commutator() {
        let v = tripod_on_strand().stu_normalize().unwrap();
        let ab = ChordDiagram::new(2, vec![vec![Tok::Up(0), Tok::Up(1)]]).unwrap();
        let ba = ChordDiagram::new(2, vec![vec![Tok::Up(1), Tok::Up(0)]]).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v.coeff(&ba), Q::one());
        assert_eq!(v.coeff(&ab), -Q::one());
    }

    #[test]
    fn bracket_of_casimir_vanishes() {
        let mut j = JacobiDiagram::empty(0);
        j.lie_casimir(0).unwrap();
        j.bracket(0).unwrap();
        j.inclusion(0).unwrap();
        assert!(j.stu_normalize().unwrap().is_zero());
    }

    #[test]
    fn two_vertex_tree_orders_agree() {
        let mut j = JacobiDiagram::identity_l(3);
        j.bracket(0).unwrap();
        j.bracket(0).unwrap();
        j.inclusion(0).unwrap();
        let a = j.stu_normalize().unwrap();
        assert_eq!(a.len(), 4);
        let b = j.stu_normalize_with(&mut |s: &[StuSite]| s.len() - 1).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn disconnected_component_is_an_error() {
        let mut j = JacobiDiagram::identity_l(2);
        j.bracket(0).unwrap();
        j.casimir(1).unwrap();
        assert!(j.stu_normalize().is_err());
    }
}
