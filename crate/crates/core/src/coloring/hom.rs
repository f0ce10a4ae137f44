//! Graph homomorphism search with forward checking.

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, VertexMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomOutcome {
    Found(VertexMap),
    /// The search tree was fully explored.
    NoneExists,
    /// The node budget ran out first.
    Indeterminate {
        nodes: u64,
    },
}

impl HomOutcome {
    pub fn map(&self) -> Option<&VertexMap> {
        match self {
            HomOutcome::Found(f) => Some(f),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct HomOptions {
    pub node_budget: u64,
    /// Map the first branched vertex of each component of the source to
    /// target vertex 0. Sound only for vertex-transitive targets.
    pub target_vertex_transitive: bool,
}

impl Default for HomOptions {
    fn default() -> Self {
        HomOptions { node_budget: 10_000_000, target_vertex_transitive: false }
    }
}

struct HomSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    h_adj: Vec<FixedBitSet>,
    image: Vec<Option<usize>>,
    component: Vec<usize>,
    component_started: Vec<bool>,
    options: HomOptions,
    nodes: u64,
}

enum Step {
    Found,
    Exhausted,
    Budget,
}

impl HomSearch<'_> {
    fn run(&mut self, domains: &[FixedBitSet]) -> Step {
        // smallest domain first, lowest id on ties
        let pick = (0..self.g.vertex_count())
            .filter(|&v| self.image[v].is_none())
            .min_by_key(|&v| (domains[v].count_ones(..), v));
        let Some(v) = pick else { return Step::Found };
        self.nodes += 1;
        if self.nodes > self.options.node_budget {
            return Step::Budget;
        }
        let comp = self.component[v];
        let pin = self.options.target_vertex_transitive && !self.component_started[comp];
        let values: Vec<usize> =
            if pin { domains[v].contains(0).then_some(0).into_iter().collect() } else { domains[v].ones().collect() };
        if pin {
            self.component_started[comp] = true;
        }
        let mut result = Step::Exhausted;
        for a in values {
            let mut next = domains.to_vec();
            let mut wiped = false;
            for &u in self.g.neighbors(v) {
                if self.image[u].is_none() {
                    next[u].intersect_with(&self.h_adj[a]);
                    if next[u].is_clear() {
                        wiped = true;
                        break;
                    }
                }
            }
            if wiped {
                continue;
            }
            self.image[v] = Some(a);
            match self.run(&next) {
                Step::Exhausted => self.image[v] = None,
                other => {
                    result = other;
                    break;
                }
            }
        }
        if pin && matches!(result, Step::Exhausted) {
            self.component_started[comp] = false;
        }
        result
    }
}

/// Searches for a homomorphism `g -> h`. Variables are chosen smallest
/// domain first and values in increasing id, so the result is the first map
/// in that canonical order.
pub fn find_homomorphism(g: &Graph, h: &Graph, options: HomOptions) -> HomOutcome {
    let n = g.vertex_count();
    let t = h.vertex_count();
    if n == 0 {
        return HomOutcome::Found(VertexMap::new(vec![]));
    }
    if t == 0 {
        return HomOutcome::NoneExists;
    }
    let h_adj: Vec<FixedBitSet> = (0..t)
        .map(|a| {
            let mut b = FixedBitSet::with_capacity(t);
            h.neighbors(a).iter().for_each(|&x| b.insert(x));
            b
        })
        .collect();
    let mut full = FixedBitSet::with_capacity(t);
    full.insert_range(..);
    // vertices with an edge need a target vertex of positive degree
    let mut nonisolated = FixedBitSet::with_capacity(t);
    (0..t).filter(|&a| h.degree(a) > 0).for_each(|a| nonisolated.insert(a));
    let domains: Vec<FixedBitSet> =
        (0..n).map(|v| if g.degree(v) > 0 { nonisolated.clone() } else { full.clone() }).collect();
    if domains.iter().any(FixedBitSet::is_clear) {
        return HomOutcome::NoneExists;
    }
    let component = g.components();
    let count = component.iter().max().map_or(0, |m| m + 1);
    let mut s = HomSearch {
        g,
        h,
        h_adj,
        image: vec![None; n],
        component,
        component_started: vec![false; count],
        options,
        nodes: 0,
    };
    match s.run(&domains) {
        Step::Found => {
            let f = VertexMap::new(s.image.iter().map(|x| x.expect("complete")).collect());
            debug_assert!(crate::graph::is_homomorphism(&f, s.g, s.h).unwrap_or(false));
            HomOutcome::Found(f)
        }
        Step::Exhausted => HomOutcome::NoneExists,
        Step::Budget => HomOutcome::Indeterminate { nodes: s.nodes },
    }
}
