//! Circular chromatic number by fraction scanning, and the lower bound from
//! torsion odd walks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

use super::chromatic::chromatic_number;
use super::hom::{find_homomorphism, HomOptions, HomOutcome};
use super::RationalBound;
use crate::complex::EvenComplex;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily, VertexMap, Walk};
use crate::homology::CellularChains;

pub const DEFAULT_HOM_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircularChromatic {
    /// `witness` maps the graph into `K_{p/q}` with `p/q = value`.
    Exact {
        value: Ratio<u64>,
        witness: VertexMap,
    },
    Bracket {
        lower: RationalBound,
        upper: RationalBound,
        witness: VertexMap,
    },
}

impl CircularChromatic {
    pub fn exact(&self) -> Option<Ratio<u64>> {
        match self {
            CircularChromatic::Exact { value, .. } => Some(*value),
            CircularChromatic::Bracket { .. } => None,
        }
    }

    pub fn lower(&self) -> RationalBound {
        match self {
            CircularChromatic::Exact { value, .. } => RationalBound::exact(*value),
            CircularChromatic::Bracket { lower, .. } => *lower,
        }
    }

    pub fn upper(&self) -> RationalBound {
        match self {
            CircularChromatic::Exact { value, .. } => RationalBound::exact(*value),
            CircularChromatic::Bracket { upper, .. } => *upper,
        }
    }

    pub fn witness(&self) -> &VertexMap {
        match self {
            CircularChromatic::Exact { witness, .. } | CircularChromatic::Bracket { witness, .. } => witness,
        }
    }
}

/// Circular chromatic number. Fractions `p/q` in `(2, chi]` with `q <= max_den`
/// and `p <= |V|` are tried in increasing order; the first one admitting a
/// homomorphism into `K_{p/q}` is the value when every smaller candidate was
/// refuted exhaustively and the candidate list is complete. Anything short
/// of that yields a bracket.
pub fn circular_chromatic(g: &Graph, max_den: u64, hom_budget: u64) -> Result<CircularChromatic> {
    let n = g.vertex_count() as u64;
    if g.edge_count() == 0 {
        let witness = VertexMap::new(vec![0; g.vertex_count()]);
        let value = Ratio::from_integer(u64::from(n > 0));
        return Ok(CircularChromatic::Exact { value, witness });
    }
    if g.is_bipartite() {
        let chi = chromatic_number(g, None)?;
        return Ok(CircularChromatic::Exact { value: Ratio::from_integer(2), witness: chi.certificate.coloring });
    }
    if max_den == 0 {
        return Err(Error::input("max denominator must be positive"));
    }
    let chi = chromatic_number(g, None)?;
    let chi_val = chi.chi as u64;

    let mut fractions: BTreeMap<Ratio<u64>, (u64, u64)> = BTreeMap::new();
    for q in 1..=max_den {
        for p in 2 * q + 1..=n.min(chi_val * q) {
            if p.gcd(&q) == 1 {
                fractions.insert(Ratio::new(p, q), (p, q));
            }
        }
    }
    let complete = max_den >= (n - 1) / 2;
    let mut all_refuted = true;
    let mut lower = RationalBound::lower(Ratio::from_integer(2), true);
    for (value, (p, q)) in fractions {
        let outcome = if q == 1 && p == chi_val {
            HomOutcome::Found(chi.certificate.coloring.clone())
        } else {
            let target = GraphFamily::Circular { n: p as usize, m: q as usize }.build()?;
            let opts = HomOptions { node_budget: hom_budget, target_vertex_transitive: true };
            find_homomorphism(g, &target, opts)
        };
        match outcome {
            HomOutcome::Found(witness) => {
                return Ok(if all_refuted && complete {
                    CircularChromatic::Exact { value, witness }
                } else {
                    CircularChromatic::Bracket { lower, upper: RationalBound::upper(value), witness }
                });
            }
            HomOutcome::NoneExists => lower = RationalBound::lower(value, true),
            HomOutcome::Indeterminate { .. } => all_refuted = false,
        }
    }
    // chi/1 is always scanned, so the loop returns
    Err(Error::internal("fraction scan ended without reaching chi"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremABound {
    /// `2k/(k-1)` for `k` the largest cell half-length.
    pub bound: RationalBound,
    pub k: usize,
    /// An odd closed walk whose homology class is torsion.
    pub witness: Walk,
}

/// The lower bound `2 + 2/(k-1)` on the circular chromatic number of the
/// skeleton, valid when some odd closed walk is a torsion class. Returns
/// `None` when no such walk exists.
pub fn theorem_a_bound(x: &EvenComplex) -> Result<Option<TheoremABound>> {
    let chains = CellularChains::new(x)?;
    let Some(k) = x.max_half_length() else { return Ok(None) };
    let g = x.skeleton();
    let comp = g.components();
    for b in chains.torsion_cycle_lattice() {
        // split into skeleton components; each piece stays in the lattice
        let mut pieces: BTreeMap<usize, Vec<BigInt>> = BTreeMap::new();
        for (e, c) in b.iter().enumerate() {
            if !c.is_zero() {
                let piece = pieces.entry(comp[g.edges()[e].0]).or_insert_with(|| vec![BigInt::zero(); b.len()]);
                piece[e] = c.clone();
            }
        }
        for piece in pieces.into_values() {
            let weight: BigInt = piece.iter().map(|c| c.abs()).sum();
            if weight.is_even() {
                continue;
            }
            let walk = realize_cycle(g, &piece)?;
            if walk.len() % 2 == 0 || !chains.is_torsion_class(&walk)? {
                return Err(Error::internal("lattice witness failed its own check"));
            }
            let bound = RationalBound::lower(Ratio::new(2 * k as u64, k as u64 - 1), false);
            return Ok(Some(TheoremABound { bound, k, witness: walk }));
        }
    }
    Ok(None)
}

/// A closed walk whose signed edge traversal vector is `chain`, which must be
/// a cycle supported in one component of `g`.
pub(crate) fn realize_cycle(g: &Graph, chain: &[BigInt]) -> Result<Walk> {
    let n = g.vertex_count();
    // directed multigraph: |c| arcs per edge, oriented by sign
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, c) in chain.iter().enumerate() {
        let (u, v) = g.edges()[e];
        let count = c.abs().to_usize().ok_or_else(|| Error::input("chain coefficient too large"))?;
        let (from, to) = if c.is_positive() { (u, v) } else { (v, u) };
        out[from].extend(std::iter::repeat_n(to, count));
    }
    for arcs in &mut out {
        arcs.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut remaining = out;
    let start = match (0..n).find(|&v| !remaining[v].is_empty()) {
        Some(s) => s,
        None => return Err(Error::input("zero chain has no walk")),
    };
    // Hierholzer from start, then splice any untouched pieces through
    // back-and-forth paths, which add nothing to the chain.
    let mut walk = euler_circuit(&mut remaining, start);
    while let Some(v) = (0..n).find(|&v| !remaining[v].is_empty()) {
        let circuit = euler_circuit(&mut remaining, v);
        let (pos, path) = shortest_path_from_walk(g, &walk, v)
            .ok_or_else(|| Error::input("cycle support is not connected in the graph"))?;
        let mut spliced = walk[..=pos].to_vec();
        spliced.extend(&path[1..]);
        spliced.extend(&circuit[1..]);
        spliced.extend(path.iter().rev().skip(1));
        spliced.extend(&walk[pos + 1..]);
        walk = spliced;
    }
    Walk::new(g, walk)
}

fn euler_circuit(out: &mut [Vec<usize>], start: usize) -> Vec<usize> {
    let mut stack = vec![start];
    let mut circuit = Vec::new();
    while let Some(&v) = stack.last() {
        match out[v].pop() {
            Some(w) => stack.push(w),
            None => circuit.push(stack.pop().expect("nonempty")),
        }
    }
    circuit.reverse();
    circuit
}

/// Shortest path from some vertex of `walk` to `target`, with the walk
/// position it starts from.
fn shortest_path_from_walk(g: &Graph, walk: &[usize], target: usize) -> Option<(usize, Vec<usize>)> {
    let dist = g.distances_from(target);
    let (pos, &from) = walk.iter().enumerate().filter(|(_, &v)| dist[v].is_some()).min_by_key(|(_, &v)| dist[v])?;
    let mut path = vec![from];
    let mut cur = from;
    while cur != target {
        let d = dist[cur].expect("reachable");
        cur = *g.neighbors(cur).iter().find(|&&u| dist[u] == Some(d - 1)).expect("BFS parent");
        path.push(cur);
    }
    Some((pos, path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{generate, ComplexFamily};
    use crate::homology::{walk_chain, Ring};

    fn r(p: u64, q: u64) -> Ratio<u64> {
        Ratio::new(p, q)
    }

    fn cycle(n: usize) -> Graph {
        GraphFamily::Cycle(n).build().unwrap()
    }

    #[test]
    fn odd_cycles_and_complete() {
        for t in 1..=4u64 {
            let g = cycle(2 * t as usize + 1);
            let c = circular_chromatic(&g, 8, DEFAULT_HOM_BUDGET).unwrap();
            assert_eq!(c.exact(), Some(r(2 * t + 1, t)));
        }
        let k4 = GraphFamily::Complete(4).build().unwrap();
        assert_eq!(circular_chromatic(&k4, 8, DEFAULT_HOM_BUDGET).unwrap().exact(), Some(r(4, 1)));
        assert_eq!(circular_chromatic(&cycle(6), 8, DEFAULT_HOM_BUDGET).unwrap().exact(), Some(r(2, 1)));
        assert_eq!(circular_chromatic(&Graph::empty(3), 8, DEFAULT_HOM_BUDGET).unwrap().exact(), Some(r(1, 1)));
    }

    #[test]
    fn circular_complete_graphs_are_their_own_value() {
        for (p, q) in [(7u64, 2u64), (8, 3), (9, 4), (7, 3)] {
            let g = GraphFamily::Circular { n: p as usize, m: q as usize }.build().unwrap();
            assert_eq!(circular_chromatic(&g, 8, DEFAULT_HOM_BUDGET).unwrap().exact(), Some(r(p, q)));
        }
    }

    #[test]
    fn short_scan_brackets() {
        // C_7 has value 7/3; with denominators up to 2 the candidate list is incomplete
        let c = circular_chromatic(&cycle(7), 2, DEFAULT_HOM_BUDGET).unwrap();
        assert_eq!(c.exact(), None);
        assert_eq!(c.upper().value, r(5, 2));
        assert!(c.lower().strict);
        assert_eq!(c.lower().value, r(2, 1));
        // a starved search can never report an exact value
        let c = circular_chromatic(&cycle(9), 8, 1).unwrap();
        assert_eq!(c.exact(), None);
    }

    #[test]
    fn bound_examples() {
        let rp = generate(ComplexFamily::K4Projective).unwrap();
        let b = theorem_a_bound(&rp).unwrap().unwrap();
        assert_eq!(b.bound.value, r(4, 1));
        assert_eq!(b.witness.len() % 2, 1);

        let c3 = cycle(3);
        let x = EvenComplex::new(c3, vec![vec![0, 1, 2, 0, 1, 2, 0]]);
        let b = theorem_a_bound(&x).unwrap().unwrap();
        assert_eq!((b.k, b.bound.value), (3, r(3, 1)));

        let sphere = generate(ComplexFamily::SphereGrid { m: 3, n: 3 }).unwrap();
        assert_eq!(theorem_a_bound(&sphere).unwrap(), None);
        let torus = generate(ComplexFamily::TorusGrid { m: 3, n: 3 }).unwrap();
        assert_eq!(theorem_a_bound(&torus).unwrap(), None);
    }

    #[test]
    fn tight_family() {
        for t in 1..=4usize {
            let n = 2 * t + 1;
            let mut cell: Vec<usize> = (0..n).chain(0..n).collect();
            cell.push(0);
            let x = EvenComplex::new(cycle(n), vec![cell]);
            let b = theorem_a_bound(&x).unwrap().unwrap();
            let value = circular_chromatic(x.skeleton(), 8, DEFAULT_HOM_BUDGET).unwrap().exact().unwrap();
            assert_eq!(b.bound.value, value);
            assert_eq!(value, r(2 * t as u64 + 1, t as u64));
        }
    }

    #[test]
    fn realized_cycles_reproduce_chain() {
        // two triangles joined by a path: the walk must splice them
        let g = Graph::new(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]).unwrap();
        let a = Walk::new(&g, vec![0, 1, 2, 0]).unwrap();
        let b = Walk::new(&g, vec![4, 6, 5, 4]).unwrap();
        let mut chain = walk_chain(&g, &a, Ring::Integers).unwrap();
        for (x, y) in chain.iter_mut().zip(walk_chain(&g, &b, Ring::Integers).unwrap()) {
            *x += y;
        }
        let w = realize_cycle(&g, &chain).unwrap();
        assert!(w.is_closed());
        assert_eq!(walk_chain(&g, &w, Ring::Integers).unwrap(), chain);
    }
}
