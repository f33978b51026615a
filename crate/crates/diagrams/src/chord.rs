//! Chord diagrams on ordered strands with optional legs to an upper line.

use std::collections::BTreeMap;

use ratlin::Q;
use serde_json::{json, Value};
use symgrp::Perm;

use crate::lincomb::LinComb;
use crate::DiagramError;

/// One attachment point on a strand: a leg to upper point `j` or one end of
/// chord `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Tok {
    Up(u16),
    Ch(u16),
}

/// A chord diagram: every strand is an ordered list of endpoints.
///
/// Chords are labeled by order of first appearance (strand by strand, left to
/// right), which makes the representation canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ChordDiagram {
    n_upper: usize,
    strands: Vec<Vec<Tok>>,
}

/// A 1-based endpoint used by the external representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Endpoint {
    Upper(usize),
    Strand(usize, usize),
}

/// A linear combination of chord diagrams.
pub type DiagramVector = LinComb<ChordDiagram>;

impl ChordDiagram {
    /// The diagram with `n` empty strands and no upper points.
    pub fn empty(n: usize) -> Self {
        ChordDiagram { n_upper: 0, strands: vec![Vec::new(); n] }
    }

    /// Validates and canonicalizes token sequences.
    pub fn new(n_upper: usize, strands: Vec<Vec<Tok>>) -> Result<Self, DiagramError> {
        let mut up_seen = vec![false; n_upper];
        let mut ch_count: BTreeMap<u16, usize> = BTreeMap::new();
        for t in strands.iter().flatten() {
            match *t {
                Tok::Up(j) => {
                    let j = j as usize;
                    if j >= n_upper || up_seen[j] {
                        return Err(DiagramError::Invalid(format!("upper point {} used incorrectly", j + 1)));
                    }
                    up_seen[j] = true;
                }
                Tok::Ch(k) => *ch_count.entry(k).or_default() += 1,
            }
        }
        if up_seen.iter().any(|s| !s) {
            return Err(DiagramError::Invalid("upper point without a leg".into()));
        }
        if ch_count.values().any(|&c| c != 2) {
            return Err(DiagramError::Invalid("chord label not used exactly twice".into()));
        }
        Ok(Self::relabel(n_upper, strands))
    }

    /// Relabels chords by first appearance; input must be structurally valid.
    pub(crate) fn relabel(n_upper: usize, mut strands: Vec<Vec<Tok>>) -> Self {
        let mut map: BTreeMap<u16, u16> = BTreeMap::new();
        for t in strands.iter_mut().flatten() {
            if let Tok::Ch(k) = *t {
                let next = map.len() as u16;
                *t = Tok::Ch(*map.entry(k).or_insert(next));
            }
        }
        ChordDiagram { n_upper, strands }
    }

    pub fn n_strands(&self) -> usize {
        self.strands.len()
    }

    pub fn n_upper(&self) -> usize {
        self.n_upper
    }

    pub fn strands(&self) -> &[Vec<Tok>] {
        &self.strands
    }

    pub fn strand(&self, i: usize) -> &[Tok] {
        &self.strands[i]
    }

    /// Number of strand-strand chords.
    pub fn n_chords(&self) -> usize {
        self.strands.iter().flatten().filter(|t| matches!(t, Tok::Ch(_))).count() / 2
    }

    /// Degree: the number of chords (upper legs have degree zero).
    pub fn degree(&self) -> usize {
        self.n_chords()
    }

    /// Number of endpoints on each strand.
    pub fn strand_counts(&self) -> Vec<usize> {
        self.strands.iter().map(|s| s.len()).collect()
    }

    /// Locations `(strand, index)` of the two ends of chord `k`.
    pub fn chord_ends(&self, k: u16) -> [(usize, usize); 2] {
        let mut out = Vec::with_capacity(2);
        for (i, s) in self.strands.iter().enumerate() {
            for (p, t) in s.iter().enumerate() {
                if *t == Tok::Ch(k) {
                    out.push((i, p));
                }
            }
        }
        [out[0], out[1]]
    }

    /// Location of the strand end of the leg to upper point `j`.
    pub fn upper_end(&self, j: usize) -> (usize, usize) {
        for (i, s) in self.strands.iter().enumerate() {
            if let Some(p) = s.iter().position(|t| *t == Tok::Up(j as u16)) {
                return (i, p);
            }
        }
        unreachable!("every upper point has a leg")
    }

    /// Edges as pairs of 1-based endpoints, sorted canonically.
    pub fn edges(&self) -> Vec<(Endpoint, Endpoint)> {
        let mut first: BTreeMap<u16, Endpoint> = BTreeMap::new();
        let mut out = Vec::new();
        for (i, s) in self.strands.iter().enumerate() {
            for (p, t) in s.iter().enumerate() {
                let e = Endpoint::Strand(i + 1, p + 1);
                match *t {
                    Tok::Up(j) => out.push((Endpoint::Upper(j as usize + 1), e)),
                    Tok::Ch(k) => match first.remove(&k) {
                        Some(a) => out.push((a, e)),
                        None => {
                            first.insert(k, e);
                        }
                    },
                }
            }
        }
        out.sort();
        out
    }

    /// Builds a diagram from 1-based endpoint pairs.
    pub fn from_edges(n_strands: usize, n_upper: usize, edges: &[(Endpoint, Endpoint)]) -> Result<Self, DiagramError> {
        let mut slots: Vec<BTreeMap<usize, Tok>> = vec![BTreeMap::new(); n_strands];
        let mut put = |e: Endpoint, t: Tok| -> Result<(), DiagramError> {
            match e {
                Endpoint::Strand(i, p) if i >= 1 && i <= n_strands && p >= 1 => {
                    if slots[i - 1].insert(p, t).is_some() {
                        return Err(DiagramError::Invalid(format!("endpoint ({i},{p}) used twice")));
                    }
                    Ok(())
                }
                _ => Err(DiagramError::Invalid(format!("bad strand endpoint {e:?}"))),
            }
        };
        let mut next_chord = 0u16;
        for &(a, b) in edges {
            match (a, b) {
                (Endpoint::Upper(_), Endpoint::Upper(_)) => {
                    return Err(DiagramError::Invalid("edge joins two upper points".into()))
                }
                (Endpoint::Upper(j), s) | (s, Endpoint::Upper(j)) => {
                    if j == 0 || j > n_upper {
                        return Err(DiagramError::Invalid(format!("bad upper point {j}")));
                    }
                    put(s, Tok::Up((j - 1) as u16))?;
                }
                (s, t) => {
                    put(s, Tok::Ch(next_chord))?;
                    put(t, Tok::Ch(next_chord))?;
                    next_chord += 1;
                }
            }
        }
        let mut strands = Vec::with_capacity(n_strands);
        for (i, m) in slots.into_iter().enumerate() {
            if m.keys().copied().ne(1..=m.len()) {
                return Err(DiagramError::Invalid(format!("positions on strand {} have gaps", i + 1)));
            }
            strands.push(m.into_values().collect());
        }
        ChordDiagram::new(n_upper, strands)
    }

    pub fn to_json(&self) -> Value {
        let enc = |e: Endpoint| match e {
            Endpoint::Upper(j) => json!(["u", j]),
            Endpoint::Strand(i, p) => json!(["s", i, p]),
        };
        let pairs: Vec<Value> = self.edges().into_iter().map(|(a, b)| json!([enc(a), enc(b)])).collect();
        json!({"strands": self.n_strands(), "upper": self.n_upper, "pairs": pairs})
    }

    pub fn from_json(v: &Value) -> Result<Self, DiagramError> {
        let bad = |m: &str| DiagramError::Invalid(format!("diagram JSON: {m}"));
        let n = v["strands"].as_u64().ok_or_else(|| bad("missing strands"))? as usize;
        let m = v["upper"].as_u64().ok_or_else(|| bad("missing upper"))? as usize;
        let dec = |e: &Value| -> Result<Endpoint, DiagramError> {
            let a = e.as_array().ok_or_else(|| bad("endpoint not an array"))?;
            let num = |x: &Value| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("bad index"));
            match (a.first().and_then(|x| x.as_str()), a.len()) {
                (Some("u"), 2) => Ok(Endpoint::Upper(num(&a[1])?)),
                (Some("s"), 3) => Ok(Endpoint::Strand(num(&a[1])?, num(&a[2])?)),
                _ => Err(bad("unknown endpoint")),
            }
        };
        let mut edges = Vec::new();
        for p in v["pairs"].as_array().ok_or_else(|| bad("missing pairs"))? {
            let p = p.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("pair must have two endpoints"))?;
            edges.push((dec(&p[0])?, dec(&p[1])?));
        }
        Self::from_edges(n, m, &edges)
    }

    /// Concatenates strands `i` and `i+1`.
    pub fn merge(&self, i: usize) -> ChordDiagram {
        let mut s = self.strands.clone();
        let b = s.remove(i + 1);
        s[i].extend(b);
        Self::relabel(self.n_upper, s)
    }

    /// Inserts an empty strand at index `i`.
    pub fn insert_empty(&self, i: usize) -> ChordDiagram {
        let mut s = self.strands.clone();
        s.insert(i, Vec::new());
        ChordDiagram { n_upper: self.n_upper, strands: s }
    }

    /// Deletes strand `i` when it carries no endpoints.
    pub fn delete(&self, i: usize) -> Option<ChordDiagram> {
        if !self.strands[i].is_empty() {
            return None;
        }
        let mut s = self.strands.clone();
        s.remove(i);
        Some(ChordDiagram { n_upper: self.n_upper, strands: s })
    }

    /// Doubles strand `i`: the sum over all ways of distributing its
    /// endpoints between two parallel copies, in binary-counter order.
    pub fn cable(&self, i: usize) -> Vec<ChordDiagram> {
        let pts = &self.strands[i];
        let k = pts.len();
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0u64..(1u64 << k) {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for (j, t) in pts.iter().enumerate() {
                if mask >> j & 1 == 0 {
                    a.push(*t);
                } else {
                    b.push(*t);
                }
            }
            let mut s = self.strands.clone();
            s[i] = a;
            s.insert(i + 1, b);
            out.push(Self::relabel(self.n_upper, s));
        }
        out
    }

    /// Reverses strand `i`, returning the sign `(−1)^{#endpoints}`.
    pub fn reverse(&self, i: usize) -> (i64, ChordDiagram) {
        let mut s = self.strands.clone();
        s[i].reverse();
        let sign = if s[i].len().is_multiple_of(2) { 1 } else { -1 };
        (sign, Self::relabel(self.n_upper, s))
    }

    /// Moves strand `j` to position `σ(j)`.
    pub fn permute(&self, sigma: &Perm) -> ChordDiagram {
        let mut s = vec![Vec::new(); self.strands.len()];
        for (j, st) in self.strands.iter().enumerate() {
            s[sigma.image(j)] = st.clone();
        }
        Self::relabel(self.n_upper, s)
    }

    /// Inserts two new strands at `i, i+1` joined by a chord.
    pub fn insert_chord_pair(&self, i: usize) -> ChordDiagram {
        let fresh = self.n_chords() as u16;
        let mut s = self.strands.clone();
        s.insert(i, vec![Tok::Ch(fresh)]);
        s.insert(i + 1, vec![Tok::Ch(fresh)]);
        Self::relabel(self.n_upper, s)
    }

    /// Places `other` to the right of `self` (tensor product of diagrams).
    pub fn tensor(&self, other: &ChordDiagram) -> ChordDiagram {
        let shift = self.n_chords() as u16;
        let ushift = self.n_upper as u16;
        let mut s = self.strands.clone();
        for st in &other.strands {
            s.push(
                st.iter()
                    .map(|t| match *t {
                        Tok::Ch(k) => Tok::Ch(k + shift),
                        Tok::Up(j) => Tok::Up(j + ushift),
                    })
                    .collect(),
            );
        }
        Self::relabel(self.n_upper + other.n_upper, s)
    }

    /// Renames upper points: the leg to old point `j` goes to `f(j)`.
    pub fn rename_upper(&self, f: &Perm) -> ChordDiagram {
        let s = self
            .strands
            .iter()
            .map(|st| {
                st.iter()
                    .map(|t| match *t {
                        Tok::Up(j) => Tok::Up(f.image(j as usize) as u16),
                        c => c,
                    })
                    .collect()
            })
            .collect();
        ChordDiagram { n_upper: self.n_upper, strands: s }
    }
}

fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(left - x, parts - 1, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// All weak compositions of `total` into `parts` parts, lexicographically.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    weak_compositions(total, parts)
}

/// All perfect matchings of `items` (even length), each as a list of pairs.
pub fn perfect_matchings<T: Copy>(items: &[T]) -> Vec<Vec<(T, T)>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let first = items[0];
    let mut out = Vec::new();
    for j in 1..items.len() {
        let rest: Vec<T> = items[1..].iter().enumerate().filter(|(i, _)| i + 1 != j).map(|(_, x)| *x).collect();
        for mut m in perfect_matchings(&rest) {
            m.insert(0, (first, items[j]));
            out.push(m);
        }
    }
    out
}

/// Every chord diagram on `n` strands with `d` chords and `m` upper legs,
/// sorted in canonical order.
pub fn enumerate_chords(d: usize, n: usize, m: usize) -> Vec<ChordDiagram> {
    let total = 2 * d + m;
    let mut out = Vec::new();
    // Injective placements of the upper legs into the global slot order.
    fn placements(m: usize, total: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut used = vec![false; total];
        fn rec(m: usize, total: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == m {
                out.push(cur.clone());
                return;
            }
            for s in 0..total {
                if !used[s] {
                    used[s] = true;
                    cur.push(s);
                    rec(m, total, cur, used, out);
                    cur.pop();
                    used[s] = false;
                }
            }
        }
        rec(m, total, &mut cur, &mut used, &mut out);
        out
    }
    let legs = placements(m, total);
    for comp in weak_compositions(total, n) {
        for place in &legs {
            let mut slot_tok: Vec<Option<Tok>> = vec![None; total];
            for (j, &s) in place.iter().enumerate() {
                slot_tok[s] = Some(Tok::Up(j as u16));
            }
            let free: Vec<usize> = (0..total).filter(|&s| slot_tok[s].is_none()).collect();
            for matching in perfect_matchings(&free) {
                let mut toks = slot_tok.clone();
                for (k, (a, b)) in matching.iter().enumerate() {
                    toks[*a] = Some(Tok::Ch(k as u16));
                    toks[*b] = Some(Tok::Ch(k as u16));
                }
                let mut strands = Vec::with_capacity(n);
                let mut pos = 0;
                for &c in &comp {
                    strands.push(toks[pos..pos + c].iter().map(|t| t.unwrap()).collect());
                    pos += c;
                }
                out.push(ChordDiagram::relabel(m, strands));
            }
        }
    }
    out.sort();
    out
}

/// The diagram vector `Σ_k c_k D_k` with integer coefficients.
pub fn vector_of(terms: &[(i64, ChordDiagram)]) -> DiagramVector {
    terms.iter().map(|(c, d)| (d.clone(), Q::from_int(*c))).collect()
}
