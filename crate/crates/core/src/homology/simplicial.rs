//! Two-dimensional simplicial complexes, used for neighborhood complexes.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::chain::{lattice_basis, H1Summary, Ring};
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};
use crate::graph::neighborhood;
use crate::graph::Graph;

/// Vertices, edges `(a, b)` with `a < b`, and triangles `(a, b, c)` with
/// `a < b < c`; every face of a triangle is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex2 {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    triangles: Vec<(usize, usize, usize)>,
}

impl SimplicialComplex2 {
    /// The 2-skeleton of the complex generated by the given vertex sets.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut edges = BTreeSet::new();
        let mut triangles = BTreeSet::new();
        for facet in facets {
            let mut s: Vec<usize> = facet.clone();
            s.sort_unstable();
            s.dedup();
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::input(format!("vertex {v} out of range")));
            }
            for (i, &a) in s.iter().enumerate() {
                for (j, &b) in s.iter().enumerate().skip(i + 1) {
                    edges.insert((a, b));
                    for &c in &s[j + 1..] {
                        triangles.insert((a, b, c));
                    }
                }
            }
        }
        Ok(SimplicialComplex2 {
            vertex_count,
            edges: edges.into_iter().collect(),
            triangles: triangles.into_iter().collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn triangles(&self) -> &[(usize, usize, usize)] {
        &self.triangles
    }

    pub fn skeleton(&self) -> Graph {
        Graph::new(self.vertex_count, self.edges.iter().copied()).expect("simplicial edges are simple")
    }

    fn edge(&self, a: usize, b: usize) -> usize {
        self.edges.binary_search(&(a, b)).expect("face of a triangle is present")
    }

    /// `∂2` over the integers with edges oriented upward.
    pub fn boundary_2(&self) -> IntMatrix {
        let mut d2 = IntMatrix::zeros(self.edges.len(), self.triangles.len());
        for (t, &(a, b, c)) in self.triangles.iter().enumerate() {
            d2.set(self.edge(b, c), t, 1);
            d2.set(self.edge(a, c), t, -1);
            d2.set(self.edge(a, b), t, 1);
        }
        d2
    }

    pub fn h1(&self, ring: Ring) -> H1Summary {
        let e = self.edges.len();
        let rank_d1 = self.vertex_count - self.skeleton().component_count();
        let d2 = self.boundary_2();
        match ring {
            Ring::Integers => {
                let basis = lattice_basis(e, d2.columns());
                let snf = smith_normal_form(&IntMatrix::from_columns(e, &basis));
                H1Summary { ring, free_rank: e - rank_d1 - basis.len(), torsion: snf.torsion() }
            }
            Ring::Z2 => {
                let mut b = super::gf2::Gf2Basis::new(e);
                for col in d2.columns() {
                    let mut bits = fixedbitset::FixedBitSet::with_capacity(e);
                    for (i, x) in col.iter().enumerate() {
                        if x != &BigInt::from(0) {
                            bits.insert(i);
                        }
                    }
                    b.insert(bits);
                }
                H1Summary { ring, free_rank: e - rank_d1 - b.dim(), torsion: Vec::new() }
            }
        }
    }
}

/// 2-skeleton of the complex whose simplices are the vertex sets contained in
/// `N^j(x)` for some vertex `x`.
pub fn neighborhood_complex(g: &Graph, j: usize) -> Result<SimplicialComplex2> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(Error::input(format!("vertex {v} is isolated")));
    }
    let facets = (0..g.vertex_count()).map(|x| neighborhood(g, x, j)).collect::<Result<Vec<_>>>()?;
    SimplicialComplex2::from_facets(g.vertex_count(), &facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    fn z(free: usize) -> (usize, Vec<BigInt>) {
        (free, vec![])
    }

    fn h(c: &SimplicialComplex2) -> (usize, Vec<BigInt>) {
        let s = c.h1(Ring::Integers);
        (s.free_rank, s.torsion)
    }

    #[test]
    fn c5_neighborhood_complexes() {
        let c5 = GraphFamily::Cycle(5).build().unwrap();
        let n1 = neighborhood_complex(&c5, 1).unwrap();
        assert_eq!(n1.edges(), &[(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        assert!(n1.triangles().is_empty());
        assert_eq!(h(&n1), z(1));
        assert_eq!(h(&neighborhood_complex(&c5, 2).unwrap()), z(1));
        let n3 = neighborhood_complex(&c5, 3).unwrap();
        assert_eq!(n3.edges().len(), 10);
        assert_eq!(n3.triangles().len(), 10);
        assert_eq!(h(&n3), z(0));
    }

    #[test]
    fn k4_neighborhood_is_tetrahedron_boundary() {
        let k4 = GraphFamily::Complete(4).build().unwrap();
        let n1 = neighborhood_complex(&k4, 1).unwrap();
        assert_eq!(n1.triangles().len(), 4);
        assert_eq!(h(&n1), z(0));
        assert_eq!(n1.h1(Ring::Z2).free_rank, 0);
    }

    #[test]
    fn isolated_vertex_rejected() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(neighborhood_complex(&g, 1).is_err());
    }

    #[test]
    fn boundary_of_boundary() {
        let c = SimplicialComplex2::from_facets(4, &[vec![0, 1, 2, 3]]).unwrap();
        let d2 = c.boundary_2();
        for col in d2.columns() {
            let mut d1 = vec![0i64; 4];
            for (e, x) in col.iter().enumerate() {
                let (a, b) = c.edges()[e];
                let x: i64 = x.try_into().unwrap();
                d1[a] -= x;
                d1[b] += x;
            }
            assert_eq!(d1, vec![0; 4]);
        }
    }
}
