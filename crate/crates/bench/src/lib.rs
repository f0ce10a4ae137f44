//! Fixed instances shared by the benchmarks.

use youngs_core::complex::{generate, ComplexFamily};
use youngs_core::{EvenComplex, Graph, GraphFamily};

pub fn complex(family: ComplexFamily) -> EvenComplex {
    generate(family).expect("benchmark family generates")
}

pub fn circular(n: usize, m: usize) -> Graph {
    GraphFamily::Circular { n, m }.build().expect("valid circular graph")
}

pub fn cycle(n: usize) -> Graph {
    GraphFamily::Cycle(n).build().expect("valid cycle")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(complex(ComplexFamily::K4Projective).vertex_count(), 4);
        assert_eq!(circular(7, 3).edge_count(), 7);
        assert_eq!(cycle(9).vertex_count(), 9);
    }
}
