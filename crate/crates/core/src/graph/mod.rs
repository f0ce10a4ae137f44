//! Finite simple graphs, walks and vertex maps.
//!
//! Vertices are dense ids `0..vertex_count`. Edges are stored once as
//! `(low, high)` pairs in lexicographic order; adjacency lists are sorted.

mod families;
mod search;

pub use families::{build_family, circular_distance, BuiltFamily, GraphFamily};
pub use search::{bipartition, find_odd_closed_walk, neighborhood, Bipartition};

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge;
    /// loops and out-of-range endpoints are rejected.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::input(format!("edge [{u},{v}] has an endpoint outside 0..{vertex_count}")));
            }
            if u == v {
                return Err(Error::input(format!("edge [{u},{v}] is a loop")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph { vertex_count, edges: list, adjacency })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph { vertex_count, edges: Vec::new(), adjacency: vec![Vec::new(); vertex_count] }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(low, high)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && v < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Connected component label per vertex, labels numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.vertex_count {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = std::collections::VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(bipartition(self), Bipartition::Bipartite(_))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={}, E={})", self.vertex_count, self.edges.len())
    }
}

/// A walk: a vertex sequence whose consecutive entries are adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    /// Checks adjacency of every step against `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::input("a walk needs at least one vertex"));
        }
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(Error::input(format!("walk vertex {v} out of range")));
            }
        }
        for (i, pair) in vertices.windows(2).enumerate() {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(Error::input(format!("walk step {i}: {{{}, {}}} is not an edge", pair[0], pair[1])));
            }
        }
        Ok(Walk { vertices })
    }

    pub fn trivial(v: usize) -> Self {
        Walk { vertices: vec![v] }
    }

    /// Caller guarantees consecutive adjacency.
    pub(crate) fn from_vec_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty());
        Walk { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    /// Number of steps; see [`Walk::is_trivial`] for the zero case.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("walk is non-empty")
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    pub fn concat(&self, other: &Walk) -> Result<Walk> {
        if self.end() != other.start() {
            return Err(Error::input(format!(
                "cannot concatenate: walk ends at {} but next starts at {}",
                self.end(),
                other.start()
            )));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Ok(Walk { vertices })
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Walk { vertices }
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A total map from the vertices of one graph to the vertices of another.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMap {
    image: Vec<usize>,
}

impl VertexMap {
    pub fn new(image: Vec<usize>) -> Self {
        VertexMap { image }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap { image: (0..n).collect() }
    }

    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &VertexMap) -> VertexMap {
        VertexMap { image: self.image.iter().map(|&v| other.image[v]).collect() }
    }
}

/// True iff every edge of `g` maps to an edge of `h` under `f`.
pub fn is_homomorphism(f: &VertexMap, g: &Graph, h: &Graph) -> Result<bool> {
    if f.domain_size() != g.vertex_count() {
        return Err(Error::input(format!(
            "map has {} entries but the domain graph has {} vertices",
            f.domain_size(),
            g.vertex_count()
        )));
    }
    if let Some(&bad) = f.image().iter().find(|&&c| c >= h.vertex_count()) {
        return Err(Error::input(format!("map image {bad} is outside the codomain (size {})", h.vertex_count())));
    }
    Ok(g.edges().iter().all(|&(u, v)| h.has_edge(f.apply(u), f.apply(v))))
}
