use fixedbitset::FixedBitSet;

use super::{Graph, VertexMap, Walk};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// A proper 2-coloring; each component's smallest vertex gets color 0.
    Bipartite(VertexMap),
    /// An odd closed walk proving some component is not bipartite.
    OddWalk(Walk),
}

pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        if color[s] != usize::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == usize::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    let walk = find_odd_closed_walk(g, s).expect("a monochromatic edge implies an odd closed walk");
                    return Bipartition::OddWalk(walk);
                }
            }
        }
    }
    Bipartition::Bipartite(VertexMap::new(color))
}

/// Shortest odd closed walk through `base`, or `None` when the component of
/// `base` is bipartite.
///
/// Every same-layer edge `{u, w}` of the breadth-first layering from `base`
/// closes an odd walk `base .. u, w .. base` of length `2 d + 1`. Paths follow
/// the smallest-id parent in the previous layer, and among the candidates in
/// the lowest such layer the lexicographically least walk is returned.
pub fn find_odd_closed_walk(g: &Graph, base: usize) -> Option<Walk> {
    if base >= g.vertex_count() {
        return None;
    }
    let dist = g.distances_from(base);
    let parent: Vec<Option<usize>> = (0..g.vertex_count())
        .map(|v| match dist[v] {
            Some(d) if d > 0 => g.neighbors(v).iter().copied().find(|&p| dist[p] == Some(d - 1)),
            _ => None,
        })
        .collect();
    let path_to = |mut v: usize| {
        let mut path = vec![v];
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path.reverse();
        path
    };

    let mut best_layer = None;
    for &(u, w) in g.edges() {
        if let (Some(du), Some(dw)) = (dist[u], dist[w]) {
            if du == dw && best_layer.is_none_or(|b| du < b) {
                best_layer = Some(du);
            }
        }
    }
    let layer = best_layer?;
    g.edges()
        .iter()
        .filter(|&&(u, w)| dist[u] == Some(layer) && dist[w] == Some(layer))
        .flat_map(|&(u, w)| [(u, w), (w, u)])
        .map(|(u, w)| {
            let mut seq = path_to(u);
            let mut back = path_to(w);
            back.reverse();
            seq.extend(back);
            seq
        })
        .min()
        .map(Walk::from_vec_unchecked)
}

/// `N^j(v)`: the vertices reachable from `v` by a walk of length exactly `j`.
pub fn neighborhood(g: &Graph, v: usize, j: usize) -> Result<Vec<usize>> {
    if v >= g.vertex_count() {
        return Err(Error::input(format!("vertex {v} out of range")));
    }
    if j == 0 {
        return Err(Error::input("neighborhood order must be at least 1"));
    }
    let n = g.vertex_count();
    let mut current = FixedBitSet::with_capacity(n);
    current.insert(v);
    for _ in 0..j {
        let mut next = FixedBitSet::with_capacity(n);
        for u in current.ones() {
            for &w in g.neighbors(u) {
                next.insert(w);
            }
        }
        current = next;
    }
    Ok(current.ones().collect())
}
