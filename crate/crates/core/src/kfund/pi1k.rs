//! Abelianized k-fundamental groups through the complexes `X_k(G)`.

use num_bigint::BigInt;

use crate::complex::build_x_k;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{CellularChains, H1Summary, Ring};

/// `H1(X_k(G); Z)`, the abelianization of the k-fundamental group.
pub fn pi1k_abelianization(g: &Graph, k: usize, basepoint: usize, cell_budget: usize) -> Result<H1Summary> {
    if basepoint >= g.vertex_count() {
        return Err(Error::input(format!("basepoint {basepoint} out of range")));
    }
    if !g.is_connected() {
        return Err(Error::input("the graph must be connected"));
    }
    if k < 2 {
        return Err(Error::input("k must be at least 2"));
    }
    let x = build_x_k(g, k, cell_budget)?;
    Ok(CellularChains::new(&x)?.h1(Ring::Integers))
}

/// The group predicted for `K_{n/m}` with `2 < n/m < 4`: `Z` up to
/// `k* = ceil(2m / (n - 2m))`, `Z/2` beyond.
pub fn expected_circular_pi1k(n: usize, m: usize, k: usize) -> Result<H1Summary> {
    if m == 0 || n <= 2 * m || n >= 4 * m {
        return Err(Error::input(format!("the prediction needs 2 < n/m < 4, got {n}/{m}")));
    }
    if k < 2 {
        return Err(Error::input("k must be at least 2"));
    }
    let threshold = (2 * m).div_ceil(n - 2 * m);
    Ok(if k <= threshold {
        H1Summary { ring: Ring::Integers, free_rank: 1, torsion: vec![] }
    } else {
        H1Summary { ring: Ring::Integers, free_rank: 0, torsion: vec![BigInt::from(2)] }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::DEFAULT_CELL_BUDGET;
    use crate::graph::GraphFamily;

    fn pi(g: &Graph, k: usize) -> String {
        pi1k_abelianization(g, k, 0, DEFAULT_CELL_BUDGET).unwrap().group()
    }

    #[test]
    fn five_cycle() {
        let g = GraphFamily::Circular { n: 5, m: 2 }.build().unwrap();
        for k in 2..=6 {
            assert_eq!(pi(&g, k), expected_circular_pi1k(5, 2, k).unwrap().group(), "k = {k}");
        }
        assert_eq!(pi(&g, 4), "Z");
        assert_eq!(pi(&g, 5), "Z/2");
    }

    #[test]
    fn trees_and_errors() {
        let tree = GraphFamily::Path(4).build().unwrap();
        for k in 2..5 {
            assert_eq!(pi(&tree, k), "0");
        }
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(pi1k_abelianization(&two, 2, 0, DEFAULT_CELL_BUDGET).is_err());
        assert!(pi1k_abelianization(&tree, 1, 0, DEFAULT_CELL_BUDGET).is_err());
        assert!(expected_circular_pi1k(8, 2, 3).is_err());
    }
}
