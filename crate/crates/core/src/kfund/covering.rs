//! Checking whether a graph map is a k-covering.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{is_homomorphism, Graph, VertexMap};

/// Why a map fails to be a k-covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoveringFailure {
    /// `p(N(vertex))` misses the neighbor `missing` of `p(vertex)`.
    NotSurjective { vertex: usize, missing: usize },
    /// Two distinct vertices of `N^radius(vertex)` share an image.
    Collision { vertex: usize, radius: usize, a: usize, b: usize },
}

impl fmt::Display for CoveringFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoveringFailure::NotSurjective { vertex, missing } => {
                write!(f, "neighbors of {vertex} miss base vertex {missing}")
            }
            CoveringFailure::Collision { vertex, radius, a, b } => {
                write!(f, "N^{radius}({vertex}) contains {a} and {b} with the same image")
            }
        }
    }
}

/// Checks the k-covering condition at every vertex of `g`.
pub fn is_k_covering(p: &VertexMap, g: &Graph, h: &Graph, k: usize) -> Result<Option<CoveringFailure>> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    is_k_covering_at(p, g, h, k, &all)
}

/// Checks, at each listed vertex `x`, that `p` maps `N(x)` onto `N(p(x))`
/// and is injective on `N^i(x)` for every `i <= k`. Returns the first
/// failure, or `None` when every listed vertex passes.
pub fn is_k_covering_at(
    p: &VertexMap,
    g: &Graph,
    h: &Graph,
    k: usize,
    vertices: &[usize],
) -> Result<Option<CoveringFailure>> {
    if !is_homomorphism(p, g, h)? {
        return Err(Error::input("the map is not a graph homomorphism"));
    }
    let n = g.vertex_count();
    for &x in vertices {
        if x >= n {
            return Err(Error::input(format!("vertex {x} out of range")));
        }
        let images: Vec<usize> = g.neighbors(x).iter().map(|&u| p.apply(u)).collect();
        if let Some(&missing) = h.neighbors(p.apply(x)).iter().find(|b| !images.contains(b)) {
            return Ok(Some(CoveringFailure::NotSurjective { vertex: x, missing }));
        }
        let mut layer = FixedBitSet::with_capacity(n);
        layer.insert(x);
        for radius in 1..=k {
            let mut next = FixedBitSet::with_capacity(n);
            for u in layer.ones() {
                g.neighbors(u).iter().for_each(|&w| next.insert(w));
            }
            let mut seen: Vec<Option<usize>> = vec![None; h.vertex_count()];
            for u in next.ones() {
                let img = p.apply(u);
                if let Some(a) = seen[img] {
                    return Ok(Some(CoveringFailure::Collision { vertex: x, radius, a, b: u }));
                }
                seen[img] = Some(u);
            }
            layer = next;
        }
    }
    Ok(None)
}
