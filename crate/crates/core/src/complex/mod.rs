//! CW complexes whose 2-cells are attached along even closed walks.

mod generate;
mod xk;

pub use generate::{generate, ComplexFamily};
pub use xk::{build_x_k, closed_walk_classes, DEFAULT_CELL_BUDGET};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A simple graph (the 1-skeleton) together with 2-cells, each stored as a
/// closed vertex sequence `v0, v1, ..., v_{2r-1}, v0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenComplex {
    skeleton: Graph,
    cells: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OpenCell { cell: usize },
    OddLength { cell: usize, length: usize },
    TooShort { cell: usize, length: usize },
    VertexOutOfRange { cell: usize, vertex: usize },
    NotAnEdge { cell: usize, step: usize, u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::OpenCell { cell } => write!(f, "cell {cell}: attaching walk is not closed"),
            Violation::OddLength { cell, length } => {
                write!(f, "cell {cell}: odd cell length {length}")
            }
            Violation::TooShort { cell, length } => {
                write!(f, "cell {cell}: length {length} is below 4")
            }
            Violation::VertexOutOfRange { cell, vertex } => {
                write!(f, "cell {cell}: vertex {vertex} is not in the skeleton")
            }
            Violation::NotAnEdge { cell, step, u, v } => {
                write!(f, "cell {cell}: step {step} uses {{{u}, {v}}}, which is not an edge")
            }
        }
    }
}

impl EvenComplex {
    /// Assembles a complex without checking it; see [`EvenComplex::validate`].
    pub fn new(skeleton: Graph, cells: Vec<Vec<usize>>) -> Self {
        EvenComplex { skeleton, cells }
    }

    /// Builds a complex from faces given as vertex cycles (not closed up).
    /// The skeleton consists of exactly the consecutive pairs of the faces.
    pub fn from_faces(vertex_count: usize, faces: &[Vec<usize>]) -> Result<Self> {
        Self::from_faces_with_edges(vertex_count, faces, &[])
    }

    /// As [`EvenComplex::from_faces`], with extra skeleton edges that bound no face.
    pub fn from_faces_with_edges(
        vertex_count: usize,
        faces: &[Vec<usize>],
        extra_edges: &[(usize, usize)],
    ) -> Result<Self> {
        let mut edges = extra_edges.to_vec();
        let mut cells = Vec::with_capacity(faces.len());
        for (i, face) in faces.iter().enumerate() {
            let len = face.len();
            if len < 4 || len % 2 == 1 {
                return Err(Error::input(format!("face {i} has length {len}; faces need even length at least 4")));
            }
            for j in 0..len {
                let (u, v) = (face[j], face[(j + 1) % len]);
                if u == v {
                    return Err(Error::input(format!("face {i} repeats vertex {u} consecutively (would need a loop)")));
                }
                edges.push((u, v));
            }
            let mut cell = face.clone();
            cell.push(face[0]);
            cells.push(cell);
        }
        let skeleton = Graph::new(vertex_count, edges)?;
        Ok(EvenComplex { skeleton, cells })
    }

    pub fn skeleton(&self) -> &Graph {
        &self.skeleton
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn vertex_count(&self) -> usize {
        self.skeleton.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.skeleton.edge_count()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.cell_count() as i64
    }

    /// Cell length (number of steps of the attaching walk).
    pub fn cell_length(&self, cell: usize) -> usize {
        self.cells[cell].len().saturating_sub(1)
    }

    pub fn is_quadrangulated(&self) -> bool {
        (0..self.cells.len()).all(|c| self.cell_length(c) == 4)
    }

    /// Largest `r` such that some cell has length `2r`.
    pub fn max_half_length(&self) -> Option<usize> {
        (0..self.cells.len()).map(|c| self.cell_length(c) / 2).max()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (ci, cell) in self.cells.iter().enumerate() {
            if cell.is_empty() || cell.first() != cell.last() || cell.len() == 1 {
                out.push(Violation::OpenCell { cell: ci });
                continue;
            }
            let length = cell.len() - 1;
            if length % 2 == 1 {
                out.push(Violation::OddLength { cell: ci, length });
            } else if length < 4 {
                out.push(Violation::TooShort { cell: ci, length });
            }
            if let Some(&vertex) = cell.iter().find(|&&v| v >= self.vertex_count()) {
                out.push(Violation::VertexOutOfRange { cell: ci, vertex });
                continue;
            }
            for (step, pair) in cell.windows(2).enumerate() {
                if !self.skeleton.has_edge(pair[0], pair[1]) {
                    out.push(Violation::NotAnEdge { cell: ci, step, u: pair[0], v: pair[1] });
                }
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate().first() {
            None => Ok(()),
            Some(v) => Err(Error::input(format!("invalid complex: {v}"))),
        }
    }

    /// Same complex with cells replaced by canonical class representatives,
    /// sorted. Duplicates are kept.
    pub fn canonicalized(&self) -> EvenComplex {
        let mut classes: Vec<CellClass> = self.cells.iter().map(|c| CellClass::of_closed(c)).collect();
        classes.sort();
        EvenComplex { skeleton: self.skeleton.clone(), cells: classes.into_iter().map(|c| c.closed_walk()).collect() }
    }

    /// Drops all but one cell from each class.
    pub fn deduplicated(&self) -> EvenComplex {
        let mut classes: Vec<CellClass> = self.cells.iter().map(|c| CellClass::of_closed(c)).collect();
        classes.sort();
        classes.dedup();
        EvenComplex { skeleton: self.skeleton.clone(), cells: classes.into_iter().map(|c| c.closed_walk()).collect() }
    }
}

/// A cyclic vertex sequence up to rotation and reversal, stored as its
/// lexicographically least representative (without the repeated endpoint).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellClass(Vec<usize>);

impl CellClass {
    /// From a cyclic sequence `v0..v_{L-1}`.
    pub fn of_cycle(cycle: &[usize]) -> Self {
        CellClass(canonical_rotation(cycle))
    }

    /// From a closed walk `v0..v_{L-1}, v0`.
    pub fn of_closed(walk: &[usize]) -> Self {
        let body = if walk.len() > 1 { &walk[..walk.len() - 1] } else { walk };
        Self::of_cycle(body)
    }

    pub fn cycle(&self) -> &[usize] {
        &self.0
    }

    pub fn closed_walk(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        if let Some(&first) = w.first() {
            w.push(first);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub(crate) fn canonical_rotation(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    if len == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<usize>> = None;
    let mut consider = |candidate: Vec<usize>| {
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    };
    let min = *cycle.iter().min().expect("non-empty");
    for start in 0..len {
        if cycle[start] != min {
            continue;
        }
        consider((0..len).map(|i| cycle[(start + i) % len]).collect());
        consider((0..len).map(|i| cycle[(start + len - i) % len]).collect());
    }
    best.expect("minimum occurs")
}
