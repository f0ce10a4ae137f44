//! Exact chromatic number by DSatur-style branch and bound.

use super::refutation::{Refutation, TraceStep};
use super::ColoringCertificate;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};

#[derive(Clone, Debug)]
pub struct ChromaticResult {
    pub chi: usize,
    pub certificate: ColoringCertificate,
    /// Proof that `chi - 1` colors do not suffice (absent when `chi == 0`).
    pub refutation: Option<Refutation>,
    pub nodes: u64,
}

/// A maximal clique grown greedily from every start vertex; the largest one
/// wins, the earliest start on ties. Members are listed in insertion order.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for s in 0..g.vertex_count() {
        let mut clique = vec![s];
        let mut cand: Vec<usize> = g.neighbors(s).to_vec();
        while !cand.is_empty() {
            let &v = cand
                .iter()
                .max_by_key(|&&v| (cand.iter().filter(|&&u| g.has_edge(u, v)).count(), std::cmp::Reverse(v)))
                .expect("nonempty");
            clique.push(v);
            cand.retain(|&u| u != v && g.has_edge(u, v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// DSatur greedy coloring: most saturated vertex first, then highest degree,
/// then lowest id; smallest free color.
pub fn greedy_coloring(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let sat = |v: usize| {
            let mut cs: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).filter(|&c| c != usize::MAX).collect();
            cs.sort_unstable();
            cs.dedup();
            cs.len()
        };
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (sat(v), g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (0..).find(|&c| g.neighbors(v).iter().all(|&u| color[u] != c)).expect("unbounded");
        color[v] = c;
        used = used.max(c + 1);
    }
    (color, used)
}

enum Outcome {
    Found,
    Exhausted,
    Budget,
}

struct Search<'a> {
    g: &'a Graph,
    c: usize,
    color: Vec<Option<usize>>,
    // forbid[v * c + col]: number of neighbors of v colored col
    forbid: Vec<u32>,
    nodes: u64,
    budget: u64,
    trace: Vec<TraceStep>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, c: usize, nodes: u64, budget: u64) -> Self {
        Search {
            g,
            c,
            color: vec![None; g.vertex_count()],
            forbid: vec![0; g.vertex_count() * c],
            nodes,
            budget,
            trace: Vec::new(),
        }
    }

    fn assign(&mut self, v: usize, col: usize) {
        self.color[v] = Some(col);
        for &u in self.g.neighbors(v) {
            self.forbid[u * self.c + col] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let col = self.color[v].take().expect("assigned");
        for &u in self.g.neighbors(v) {
            self.forbid[u * self.c + col] -= 1;
        }
    }

    fn free(&self, v: usize, col: usize) -> bool {
        self.forbid[v * self.c + col] == 0
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.vertex_count() {
            if self.color[v].is_some() {
                continue;
            }
            let dom = (0..self.c).filter(|&col| self.free(v, col)).count();
            let deg = self.g.neighbors(v).iter().filter(|&&u| self.color[u].is_none()).count();
            let better = match best {
                None => true,
                Some((_, d, e)) => dom < d || (dom == d && deg > e),
            };
            if better {
                best = Some((v, dom, deg));
                if dom == 0 {
                    break;
                }
            }
        }
        best.map(|b| b.0)
    }

    fn run(&mut self) -> Outcome {
        let Some(v) = self.pick() else { return Outcome::Found };
        self.nodes += 1;
        if self.nodes > self.budget {
            return Outcome::Budget;
        }
        self.trace.push(TraceStep::Push(v));
        let mut used = vec![false; self.c];
        for col in self.color.iter().flatten() {
            used[*col] = true;
        }
        let mut tried_unused = false;
        for (col, &in_use) in used.iter().enumerate() {
            if !self.free(v, col) {
                continue;
            }
            if !in_use {
                // all unused colors are interchangeable here
                if tried_unused {
                    continue;
                }
                tried_unused = true;
            }
            self.trace.push(TraceStep::Try(col));
            self.assign(v, col);
            match self.run() {
                Outcome::Exhausted => self.unassign(v),
                other => return other,
            }
        }
        self.trace.push(TraceStep::Pop);
        Outcome::Exhausted
    }
}

enum Decision {
    Colorable(Vec<usize>),
    Refuted(Refutation),
}

fn decide(g: &Graph, clique: &[usize], c: usize, nodes: &mut u64, budget: u64) -> Option<Decision> {
    let n = g.vertex_count();
    if clique.len() > c {
        return Some(Decision::Refuted(Refutation {
            colors: c,
            vertex_count: n,
            steps: vec![TraceStep::Clique(clique.to_vec())],
        }));
    }
    let mut s = Search::new(g, c, *nodes, budget);
    for (i, &v) in clique.iter().enumerate() {
        s.assign(v, i);
        s.trace.push(TraceStep::Fix { vertex: v, color: i });
    }
    let out = s.run();
    *nodes = s.nodes;
    match out {
        Outcome::Found => Some(Decision::Colorable(s.color.iter().map(|c| c.expect("complete")).collect())),
        Outcome::Exhausted => Some(Decision::Refuted(Refutation { colors: c, vertex_count: n, steps: s.trace })),
        Outcome::Budget => None,
    }
}

/// Exact chromatic number with a proper coloring and a refutation trace for
/// one color fewer. `node_limit` bounds the total number of search nodes.
pub fn chromatic_number(g: &Graph, node_limit: Option<u64>) -> Result<ChromaticResult> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            certificate: ColoringCertificate { coloring: VertexMap::new(vec![]), colors: 0 },
            refutation: None,
            nodes: 0,
        });
    }
    let budget = node_limit.unwrap_or(u64::MAX);
    let clique = greedy_clique(g);
    let (greedy, upper) = greedy_coloring(g);
    if upper > 64 {
        return Err(Error::input("chromatic search supports at most 64 colors"));
    }
    let mut nodes = 0;
    let mut last_refutation = None;
    let mut colors = clique.len().saturating_sub(1);
    // colors <= clique.len() - 1 is refuted by the clique alone
    while colors < upper {
        match decide(g, &clique, colors, &mut nodes, budget) {
            Some(Decision::Refuted(r)) => last_refutation = Some(r),
            Some(Decision::Colorable(col)) => {
                let certificate = ColoringCertificate { coloring: VertexMap::new(col), colors };
                debug_assert!(certificate.check(g).is_ok());
                return Ok(ChromaticResult { chi: colors, certificate, refutation: last_refutation, nodes });
            }
            None => return Err(Error::ChromaticBudget { lower: colors, upper, nodes }),
        }
        colors += 1;
    }
    Ok(ChromaticResult {
        chi: upper,
        certificate: ColoringCertificate { coloring: VertexMap::new(greedy), colors: upper },
        refutation: last_refutation,
        nodes,
    })
}
