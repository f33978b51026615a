//! Relation generators among chord diagrams and enumeration of Jacobi
//! diagrams by matching ports.

use ratlin::Q;

use crate::chord::{compositions, enumerate_chords, ChordDiagram, DiagramVector, Tok};
use crate::jacobi::{Half, JacobiDiagram, Site};
use crate::DiagramError;

fn with_token(strands: &[Vec<Tok>], at: (usize, usize), t: Tok) -> Vec<Vec<Tok>> {
    let mut s = strands.to_vec();
    s[at.0].insert(at.1, t);
    s
}

/// 4T relators for diagrams with `d` chords on `n` strands and `m` upper legs.
///
/// Each relator is generated once, from the diagram in which the moving
/// endpoint sits immediately after the first end of the fixed chord.
pub fn four_t_relators(d: usize, n: usize, m: usize) -> Vec<DiagramVector> {
    let mut out = Vec::new();
    for diag in enumerate_chords(d, n, m) {
        for a in 0..diag.n_chords() as u16 {
            let [e1, _] = diag.chord_ends(a);
            let s = diag.strand(e1.0);
            let Some(&x) = s.get(e1.1 + 1) else { continue };
            if x == Tok::Ch(a) {
                continue;
            }
            let mut base: Vec<Vec<Tok>> = diag.strands().to_vec();
            base[e1.0].remove(e1.1 + 1);
            let mut rel = DiagramVector::new();
            let ends: Vec<(usize, usize)> = base
                .iter()
                .enumerate()
                .flat_map(|(i, st)| st.iter().enumerate().filter(|(_, t)| **t == Tok::Ch(a)).map(move |(p, _)| (i, p)))
                .collect();
            for e in ends {
                let after = ChordDiagram::relabel(m, with_token(&base, (e.0, e.1 + 1), x));
                let before = ChordDiagram::relabel(m, with_token(&base, e, x));
                rel.add_term(after, &Q::one());
                rel.add_term(before, &-Q::one());
            }
            if !rel.is_zero() {
                out.push(rel);
            }
        }
    }
    out
}

/// Differences `D − D'` where `D'` swaps two adjacent endpoints of distinct
/// edges on one strand.
pub fn commutator_relators(d: usize, n: usize, m: usize) -> Vec<DiagramVector> {
    let mut out = Vec::new();
    for diag in enumerate_chords(d, n, m) {
        for (i, s) in diag.strands().iter().enumerate() {
            for p in 0..s.len().saturating_sub(1) {
                if s[p] == s[p + 1] {
                    continue;
                }
                let mut t = diag.strands().to_vec();
                t[i].swap(p, p + 1);
                let other = ChordDiagram::relabel(m, t);
                if other > diag {
                    let mut rel = DiagramVector::single(diag.clone());
                    rel.add_term(other, &-Q::one());
                    out.push(rel);
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Port {
    Leg(usize),
    Upper(usize),
    Tri(usize, usize),
}

fn matchings_rec(ports: &mut Vec<Port>, cur: &mut Vec<(Port, Port)>, out: &mut Vec<Vec<(Port, Port)>>) {
    if ports.is_empty() {
        out.push(cur.clone());
        return;
    }
    let first = ports.remove(0);
    for j in 0..ports.len() {
        let other = ports[j];
        let skip = match (first, other) {
            (Port::Upper(_), Port::Upper(_)) => true,
            (Port::Tri(a, _), Port::Tri(b, _)) => a == b,
            _ => false,
        };
        if skip {
            continue;
        }
        ports.remove(j);
        cur.push((first, other));
        matchings_rec(ports, cur, out);
        cur.pop();
        ports.insert(j, other);
    }
    ports.insert(0, first);
}

/// Jacobi diagrams of degree `d` with exactly `t` trivalent vertices on `n`
/// strands with `m` upper legs, every component touching a strand and no
/// vertex carrying a self-loop. With `one_leg_per_strand`, there are exactly
/// `2d + m − t` strands, each carrying one leg, and `n` is ignored.
pub fn enumerate_jacobi(d: usize, n: usize, m: usize, t: usize, one_leg_per_strand: bool) -> Vec<JacobiDiagram> {
    if 2 * d + m < t {
        return Vec::new();
    }
    let s = 2 * d + m - t;
    if !(s + m + 3 * t).is_multiple_of(2) {
        return Vec::new();
    }
    let comps = if one_leg_per_strand { vec![vec![1; s]] } else { compositions(s, n) };
    let mut ports: Vec<Port> = (0..s).map(Port::Leg).chain((0..m).map(Port::Upper)).collect();
    for v in 0..t {
        for k in 0..3 {
            ports.push(Port::Tri(v, k));
        }
    }
    let mut matchings = Vec::new();
    matchings_rec(&mut ports, &mut Vec::new(), &mut matchings);
    let mut out = Vec::new();
    for comp in &comps {
        for mt in &matchings {
            let mut j = JacobiDiagram::empty(0);
            let legs: Vec<usize> = (0..s).map(|_| j.add_uni()).collect();
            let ups: Vec<usize> = (0..m).map(|_| j.add_uni()).collect();
            let tris: Vec<usize> = (0..t).map(|_| j.add_tri()).collect();
            let half = |p: Port| match p {
                Port::Leg(i) => Half { node: legs[i], slot: 0 },
                Port::Upper(i) => Half { node: ups[i], slot: 0 },
                Port::Tri(v, k) => Half { node: tris[v], slot: k },
            };
            for &(a, b) in mt {
                j.connect(half(a), half(b));
            }
            let mut bottom = Vec::with_capacity(comp.len());
            let mut pos = 0;
            for &c in comp {
                bottom.push(Site::Strand(legs[pos..pos + c].to_vec()));
                pos += c;
            }
            j.set_bottom(bottom);
            j.set_upper(ups.clone());
            if components_touch_strands(&j, &legs) {
                out.push(j);
            }
        }
    }
    out
}

fn components_touch_strands(j: &JacobiDiagram, legs: &[usize]) -> bool {
    use crate::jacobi::Node;
    let nodes = j.nodes();
    let mut seen = vec![false; nodes.len()];
    let mut stack: Vec<usize> = legs.to_vec();
    for &l in legs {
        seen[l] = true;
    }
    while let Some(v) = stack.pop() {
        let nbrs: Vec<usize> = match nodes[v] {
            Node::Uni(h) => vec![h.node],
            Node::Tri(hs) => hs.iter().map(|h| h.node).collect(),
            Node::Dead => vec![],
        };
        for w in nbrs {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    nodes.iter().enumerate().all(|(i, n)| matches!(n, Node::Dead) || seen[i])
}

fn resolve_first(j: &JacobiDiagram, k: usize) -> Result<DiagramVector, DiagramError> {
    let sites = j.stu_sites();
    match j.stu_step(sites[k]) {
        None => Ok(DiagramVector::new()),
        Some((a, b)) => Ok(a.stu_normalize()?.minus(&b.stu_normalize()?)),
    }
}

/// Relations among chord diagrams forced by STU: for every Jacobi diagram
/// with `1..=max_t` trivalent vertices, the differences between the chord
/// expansions obtained by starting the resolution at different vertices.
pub fn stu_closure_relators(d: usize, n: usize, m: usize, max_t: usize) -> Result<Vec<DiagramVector>, DiagramError> {
    let mut out = Vec::new();
    for t in 1..=max_t {
        for j in enumerate_jacobi(d, n, m, t, false) {
            let k = j.stu_sites().len();
            if k < 2 {
                continue;
            }
            let base = resolve_first(&j, 0)?;
            for i in 1..k {
                let rel = resolve_first(&j, i)?.minus(&base);
                if !rel.is_zero() {
                    out.push(rel);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_four_t_in_degree_one() {
        for n in 1..4 {
            assert!(four_t_relators(1, n, 0).is_empty());
        }
    }

    #[test]
    fn four_t_on_one_strand_degree_two() {
        // 1122 and 1221 are rotations of each other on the circle; on an
        // interval the single relation identifies 1212 with neither.
        let rels = four_t_relators(2, 1, 0);
        assert!(!rels.is_empty());
        for r in &rels {
            let s: Q = r.iter().map(|(_, c)| c.clone()).fold(Q::zero(), |a, b| &a + &b);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn jacobi_tripods_on_one_strand() {
        let js = enumerate_jacobi(2, 1, 0, 1, false);
        assert!(!js.is_empty());
        for j in &js {
            assert_eq!(j.degree(), 2);
            assert_eq!(j.n_trivalent(), 1);
        }
    }

    #[test]
    fn one_leg_per_strand_shapes() {
        let js = enumerate_jacobi(1, 0, 0, 0, true);
        assert_eq!(js.len(), 1);
        let js = enumerate_jacobi(2, 0, 0, 2, true);
        for j in &js {
            assert_eq!(j.bottom().len(), 2);
        }
    }
}
