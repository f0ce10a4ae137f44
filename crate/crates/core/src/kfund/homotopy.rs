//! Bounded semi-decision of k-homotopy between walks.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::cover::{CoverLine, CoverVertex};
use super::moves::{apply_move, KHomotopyMove, MoveScript};
use crate::complex::{build_x_k, DEFAULT_CELL_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{Graph, Walk};
use crate::homology::CellularChains;

/// Length parity of a walk: the class of a closed walk in `Z/2`.
pub fn parity(w: &Walk) -> usize {
    w.len() % 2
}

/// An invariant of k-homotopy that takes different values on two walks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantCertificate {
    Parity {
        first: usize,
        second: usize,
    },
    /// Lifts from the same cover vertex end at different points.
    Winding {
        first: CoverVertex,
        second: CoverVertex,
    },
    /// `first · second⁻¹` has nonzero class in `H1(X_k; Z2)`.
    Z2Class {
        loop_length: usize,
    },
    /// For `k = 1` only backtracks can change, and reduced forms differ.
    ReducedForm {
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

impl fmt::Display for InvariantCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantCertificate::Parity { first, second } => write!(f, "length parity {first} vs {second}"),
            InvariantCertificate::Winding { first, second } => write!(f, "lifts end at {first} vs {second}"),
            InvariantCertificate::Z2Class { loop_length } => {
                write!(f, "the loop of length {loop_length} through both walks is nonzero in H1(X_k; Z2)")
            }
            InvariantCertificate::ReducedForm { first, second } => {
                write!(f, "reduced forms {first:?} vs {second:?}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KHomotopy {
    Yes(MoveScript),
    No(InvariantCertificate),
    /// Neither a certificate nor a separating invariant was found.
    Unknown {
        explored: usize,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct HomotopyOptions {
    /// Extra length allowed during search: walks up to `max(len) + 2 * budget`.
    pub budget: usize,
    /// Maximum number of walks stored by the search.
    pub state_cap: usize,
    /// Enables the winding invariant when the graph is this cover's base.
    pub cover: Option<CoverLine>,
    /// Cell budget for building `X_k` for the `Z2` invariant; 0 disables it.
    pub cell_budget: usize,
}

impl Default for HomotopyOptions {
    fn default() -> Self {
        HomotopyOptions { budget: 2, state_cap: 200_000, cover: None, cell_budget: DEFAULT_CELL_BUDGET }
    }
}

/// Deletes backtracks until none remain; returns the reduced walk and the
/// deletions used, in order.
pub fn free_reduction(w: &Walk) -> (Vec<usize>, Vec<KHomotopyMove>) {
    let mut stack: Vec<usize> = Vec::with_capacity(w.vertices().len());
    let mut moves = Vec::new();
    for &v in w.vertices() {
        let l = stack.len();
        if l >= 2 && stack[l - 2] == v {
            moves.push(KHomotopyMove::Delete { pos: l - 2 });
            stack.pop();
        } else {
            stack.push(v);
        }
    }
    (stack, moves)
}

/// Moves contracting a closed walk of length `2i <= 2k` to its basepoint:
/// reflect the second half onto the first, then delete the backtracks.
pub fn contraction_moves(w: &[usize], k: usize) -> Option<Vec<KHomotopyMove>> {
    let len = w.len().checked_sub(1)?;
    if w[0] != w[len] || len % 2 == 1 || len > 2 * k {
        return None;
    }
    let i = len / 2;
    let mut moves = Vec::new();
    if i >= 2 {
        let reflected: Vec<usize> = (1..i).rev().map(|t| w[t]).collect();
        if reflected != w[i + 1..len] {
            moves.push(KHomotopyMove::Substitute { pos: i + 1, vertices: reflected });
        }
    }
    moves.extend((0..i).rev().map(|pos| KHomotopyMove::Delete { pos }));
    Some(moves)
}

fn script(g: &Graph, k: usize, start: &Walk, moves: Vec<KHomotopyMove>) -> Result<MoveScript> {
    let mut w = start.clone();
    for mv in &moves {
        w = apply_move(g, &w, mv, k)?;
    }
    Ok(MoveScript { k, start: start.vertices().to_vec(), target: w.into_vertices(), moves })
}

/// Joins `a: w1 -> x` with the reverse of `b: w2 -> x`.
fn join(g: &Graph, a: MoveScript, b: MoveScript) -> Result<MoveScript> {
    debug_assert_eq!(a.target, b.target);
    let back = b.reversed(g)?;
    let mut moves = a.moves;
    moves.extend(back.moves);
    Ok(MoveScript { k: a.k, start: a.start, target: back.target, moves })
}

/// Decides `w1 ≃_k w2` where possible. `Yes` carries a replayable script,
/// `No` a separating invariant; otherwise `Unknown`.
pub fn k_homotopic(g: &Graph, w1: &Walk, w2: &Walk, k: usize, opts: &HomotopyOptions) -> Result<KHomotopy> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    Walk::new(g, w1.vertices().to_vec())?;
    Walk::new(g, w2.vertices().to_vec())?;
    if w1.start() != w2.start() || w1.end() != w2.end() {
        return Err(Error::input(format!("walks {w1} and {w2} have different endpoints")));
    }
    if parity(w1) != parity(w2) {
        return Ok(KHomotopy::No(InvariantCertificate::Parity { first: parity(w1), second: parity(w2) }));
    }

    let (r1, d1) = free_reduction(w1);
    let (r2, d2) = free_reduction(w2);
    if r1 == r2 {
        return Ok(KHomotopy::Yes(join(g, script(g, k, w1, d1)?, script(g, k, w2, d2)?)?));
    }
    if k == 1 {
        return Ok(KHomotopy::No(InvariantCertificate::ReducedForm { first: r1, second: r2 }));
    }
    if let (Some(c1), Some(c2)) = (contraction_moves(&r1, k), contraction_moves(&r2, k)) {
        let mut m1 = d1;
        m1.extend(c1);
        let mut m2 = d2;
        m2.extend(c2);
        return Ok(KHomotopy::Yes(join(g, script(g, k, w1, m1)?, script(g, k, w2, m2)?)?));
    }

    if let Some(cert) = winding_certificate(g, w1, w2, k, opts)? {
        return Ok(KHomotopy::No(cert));
    }
    if let Some(cert) = z2_certificate(g, w1, w2, k, opts)? {
        return Ok(KHomotopy::No(cert));
    }

    let max_len = w1.len().max(w2.len()) + 2 * opts.budget;
    match bidirectional_search(g, w1, w2, k, max_len, opts.state_cap)? {
        Search::Found(moves) => Ok(KHomotopy::Yes(script(g, k, w1, moves)?)),
        Search::Exhausted(explored) => Ok(KHomotopy::Unknown { explored }),
    }
}

fn winding_certificate(
    g: &Graph,
    w1: &Walk,
    w2: &Walk,
    k: usize,
    opts: &HomotopyOptions,
) -> Result<Option<InvariantCertificate>> {
    let Some(cover) = opts.cover else { return Ok(None) };
    if cover.base_graph() != *g || cover.verified_covering_order(k)? < k {
        return Ok(None);
    }
    let start = cover.canonical_lift(w1.start());
    let e1 = *cover.lift_walk(w1, start)?.last().expect("nonempty");
    let e2 = *cover.lift_walk(w2, start)?.last().expect("nonempty");
    Ok((e1 != e2).then_some(InvariantCertificate::Winding { first: e1, second: e2 }))
}

fn z2_certificate(
    g: &Graph,
    w1: &Walk,
    w2: &Walk,
    k: usize,
    opts: &HomotopyOptions,
) -> Result<Option<InvariantCertificate>> {
    if opts.cell_budget == 0 || k < 2 {
        return Ok(None);
    }
    let x = match build_x_k(g, k, opts.cell_budget) {
        Ok(x) => x,
        Err(Error::Resource { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let gamma = w1.concat(&w2.reversed())?;
    let nonzero = CellularChains::new(&x)?.z2_class_nonzero(&gamma)?;
    Ok(nonzero.then_some(InvariantCertificate::Z2Class { loop_length: gamma.len() }))
}

enum Search {
    Found(Vec<KHomotopyMove>),
    Exhausted(usize),
}

/// Every walk one legal move away from `w` and at most `max_len` long.
fn successors(
    g: &Graph,
    dist: &[Vec<usize>],
    w: &[usize],
    k: usize,
    max_len: usize,
) -> Vec<(KHomotopyMove, Vec<usize>)> {
    let len = w.len() - 1;
    let mut out = Vec::new();
    for pos in 0..len.saturating_sub(1) {
        if w[pos] == w[pos + 2] {
            let mut v = w[..=pos].to_vec();
            v.extend_from_slice(&w[pos + 3..]);
            out.push((KHomotopyMove::Delete { pos }, v));
        }
    }
    if len + 2 <= max_len {
        for pos in 0..=len {
            for &y in g.neighbors(w[pos]) {
                let mut v = w[..=pos].to_vec();
                v.push(y);
                v.extend_from_slice(&w[pos..]);
                out.push((KHomotopyMove::Insert { pos, vertex: y }, v));
            }
        }
    }
    for pos in 1..len {
        for j in 1..k.min(len - pos + 1) {
            let (a, b) = (w[pos - 1], w[pos + j]);
            let mut seq = Vec::with_capacity(j);
            fill(g, dist, a, b, j, &mut seq, &mut |rep: &[usize]| {
                // windows whose end positions are unchanged are covered by shorter ones
                if rep[0] != w[pos] && rep[j - 1] != w[pos + j - 1] {
                    let mut v = w.to_vec();
                    v[pos..pos + j].copy_from_slice(rep);
                    out.push((KHomotopyMove::Substitute { pos, vertices: rep.to_vec() }, v));
                }
            });
        }
    }
    out
}

/// All vertex sequences `s` of length `j` with `from ~ s_1 ~ ... ~ s_j ~ to`.
fn fill(
    g: &Graph,
    dist: &[Vec<usize>],
    from: usize,
    to: usize,
    j: usize,
    seq: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if seq.len() == j {
        if g.has_edge(*seq.last().unwrap_or(&from), to) {
            emit(seq);
        }
        return;
    }
    let cur = *seq.last().unwrap_or(&from);
    let remaining = j - seq.len();
    for &y in g.neighbors(cur) {
        if dist[y][to] <= remaining {
            seq.push(y);
            fill(g, dist, from, to, j, seq, emit);
            seq.pop();
        }
    }
}

fn bidirectional_search(g: &Graph, w1: &Walk, w2: &Walk, k: usize, max_len: usize, cap: usize) -> Result<Search> {
    let n = g.vertex_count();
    let dist: Vec<Vec<usize>> =
        (0..n).map(|s| g.distances_from(s).into_iter().map(|d| d.unwrap_or(usize::MAX)).collect()).collect();
    type Parents = HashMap<Vec<usize>, Option<(Vec<usize>, KHomotopyMove)>>;
    let a0 = w1.vertices().to_vec();
    let b0 = w2.vertices().to_vec();
    let mut parents: [Parents; 2] = [HashMap::new(), HashMap::new()];
    parents[0].insert(a0.clone(), None);
    parents[1].insert(b0.clone(), None);
    let mut frontier: [VecDeque<Vec<usize>>; 2] = [VecDeque::from([a0]), VecDeque::from([b0])];

    let meet = loop {
        let side = match (frontier[0].is_empty(), frontier[1].is_empty()) {
            (true, true) => return Ok(Search::Exhausted(parents[0].len() + parents[1].len())),
            (false, true) => 0,
            (true, false) => 1,
            _ => usize::from(frontier[1].len() < frontier[0].len()),
        };
        let layer: Vec<Vec<usize>> = frontier[side].drain(..).collect();
        let mut found = None;
        'layer: for w in layer {
            for (mv, next) in successors(g, &dist, &w, k, max_len) {
                if parents[side].contains_key(&next) {
                    continue;
                }
                parents[side].insert(next.clone(), Some((w.clone(), mv)));
                if parents[1 - side].contains_key(&next) {
                    found = Some(next);
                    break 'layer;
                }
                frontier[side].push_back(next);
                if parents[0].len() + parents[1].len() > cap {
                    return Ok(Search::Exhausted(parents[0].len() + parents[1].len()));
                }
            }
        }
        if let Some(m) = found {
            break m;
        }
    };

    // forward half: w1 -> meet
    let mut forward = Vec::new();
    let mut cur = meet.clone();
    while let Some(Some((prev, mv))) = parents[0].get(&cur) {
        forward.push(mv.clone());
        cur = prev.clone();
    }
    forward.reverse();
    // backward half: meet -> w2, inverting moves made from w2's side
    let mut cur = meet;
    while let Some(Some((prev, mv))) = parents[1].get(&cur) {
        forward.push(mv.inverse(prev));
        cur = prev.clone();
    }
    Ok(Search::Found(forward))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    fn walk(g: &Graph, v: &[usize]) -> Walk {
        Walk::new(g, v.to_vec()).unwrap()
    }

    fn yes(r: KHomotopy, g: &Graph, target: &Walk) -> MoveScript {
        match r {
            KHomotopy::Yes(s) => {
                assert_eq!(&s.replay(g).unwrap(), target);
                s
            }
            other => panic!("expected Yes, got {other:?}"),
        }
    }

    #[test]
    fn square_contracts() {
        let g = GraphFamily::Cycle(4).build().unwrap();
        let sq = walk(&g, &[0, 1, 2, 3, 0]);
        let triv = Walk::trivial(0);
        let s = yes(k_homotopic(&g, &sq, &triv, 2, &HomotopyOptions::default()).unwrap(), &g, &triv);
        assert!(s.moves.len() <= 4);
    }

    #[test]
    fn pentagon_cases() {
        let g = GraphFamily::Cycle(5).build().unwrap();
        let p = walk(&g, &[0, 1, 2, 3, 4, 0]);
        for k in 1..6 {
            let r = k_homotopic(&g, &p, &Walk::trivial(0), k, &HomotopyOptions::default()).unwrap();
            assert!(matches!(r, KHomotopy::No(InvariantCertificate::Parity { .. })));
        }
        let opts = HomotopyOptions { budget: 1, state_cap: 5_000, ..Default::default() };
        let r = k_homotopic(&g, &p, &p.reversed(), 2, &opts).unwrap();
        assert!(!matches!(r, KHomotopy::No(_)), "{r:?}");
    }

    #[test]
    fn winding_separates_with_cover() {
        let cover = CoverLine::new(5, 2).unwrap();
        let g = cover.base_graph();
        let p = walk(&g, &[0, 2, 4, 1, 3, 0]);
        let opts = HomotopyOptions { cover: Some(cover), ..Default::default() };
        let r = k_homotopic(&g, &p, &p.reversed(), 2, &opts).unwrap();
        assert!(matches!(r, KHomotopy::No(InvariantCertificate::Winding { .. })));
    }

    #[test]
    fn z2_invariant_in_torus_like_graph() {
        // C_6 with k = 2: the hexagon is essential, and its square has even length
        let g = GraphFamily::Cycle(6).build().unwrap();
        let h = walk(&g, &[0, 1, 2, 3, 4, 5, 0]);
        let r = k_homotopic(&g, &h, &Walk::trivial(0), 2, &HomotopyOptions::default()).unwrap();
        assert!(matches!(r, KHomotopy::No(InvariantCertificate::Z2Class { .. })), "{r:?}");
        // with k = 3 the hexagon contracts
        yes(k_homotopic(&g, &h, &Walk::trivial(0), 3, &HomotopyOptions::default()).unwrap(), &g, &Walk::trivial(0));
    }

    #[test]
    fn search_finds_substitution_paths() {
        let g = GraphFamily::Cycle(4).build().unwrap();
        let a = walk(&g, &[0, 1, 2, 1, 2]);
        let b = walk(&g, &[0, 3, 2, 3, 2]);
        yes(k_homotopic(&g, &a, &b, 2, &HomotopyOptions::default()).unwrap(), &g, &b);
        let a = walk(&g, &[0, 1, 2]);
        let b = walk(&g, &[0, 3, 2]);
        yes(k_homotopic(&g, &a, &b, 2, &HomotopyOptions::default()).unwrap(), &g, &b);
        // k = 1 forbids substitutions entirely
        assert!(matches!(
            k_homotopic(&g, &a, &b, 1, &HomotopyOptions::default()).unwrap(),
            KHomotopy::No(InvariantCertificate::ReducedForm { .. })
        ));
    }

    #[test]
    fn endpoint_mismatch() {
        let g = GraphFamily::Cycle(4).build().unwrap();
        assert!(k_homotopic(&g, &walk(&g, &[0, 1]), &walk(&g, &[0, 3]), 2, &HomotopyOptions::default()).is_err());
    }

    #[test]
    fn reduction_script() {
        let g = GraphFamily::Cycle(4).build().unwrap();
        let w = walk(&g, &[0, 1, 2, 1, 0, 3, 0, 1]);
        let (r, moves) = free_reduction(&w);
        assert_eq!(r, vec![0, 1]);
        let s = script(&g, 2, &w, moves).unwrap();
        assert_eq!(s.target, r);
    }
}
