//! Rainbow faces and exhaustive enumeration of colorings up to renaming.

use std::ops::ControlFlow;

use super::chromatic::greedy_clique;
use super::ColoringCertificate;
use crate::complex::EvenComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Indices of the 4-cells whose corners receive four distinct colors.
pub fn rainbow_faces(x: &EvenComplex, c: &ColoringCertificate) -> Result<Vec<usize>> {
    if !x.is_quadrangulated() {
        return Err(Error::input("rainbow faces need every cell to have length 4"));
    }
    c.check(x.skeleton())?;
    Ok(x.cells()
        .iter()
        .enumerate()
        .filter(|(_, cell)| {
            let mut colors: Vec<usize> = cell[..4].iter().map(|&v| c.coloring.apply(v)).collect();
            colors.sort_unstable();
            colors.dedup();
            colors.len() == 4
        })
        .map(|(i, _)| i)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSummary {
    /// Colorings handed to the visitor.
    pub visited: u64,
    pub nodes: u64,
    /// The visitor asked to stop early.
    pub stopped: bool,
}

/// Order used for enumeration: a greedy clique, then repeatedly the vertex
/// with the most already ordered neighbors (lowest id on ties).
fn enumeration_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = greedy_clique(g);
    let mut placed = vec![false; n];
    order.iter().for_each(|&v| placed[v] = true);
    let mut weight = vec![0usize; n];
    for &v in &order {
        g.neighbors(v).iter().for_each(|&u| weight[u] += 1);
    }
    while order.len() < n {
        let v =
            (0..n).filter(|&v| !placed[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        g.neighbors(v).iter().for_each(|&u| weight[u] += 1);
    }
    order
}

/// Visits every proper coloring with at most `colors` colors exactly once up
/// to renaming of the colors. Colors are assigned as restricted growth
/// strings along a fixed vertex order, so each partition of the vertices into
/// independent sets appears once. The visitor sees colorings indexed by
/// vertex id.
pub fn enumerate_colorings<F>(
    g: &Graph,
    colors: usize,
    node_budget: Option<u64>,
    mut visitor: F,
) -> Result<EnumerationSummary>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let order = enumeration_order(g);
    let mut state = Enum {
        g,
        order: &order,
        colors,
        color: vec![usize::MAX; g.vertex_count()],
        summary: EnumerationSummary { visited: 0, nodes: 0, stopped: false },
        budget: node_budget.unwrap_or(u64::MAX),
    };
    state.run(0, 0, &mut visitor)?;
    Ok(state.summary)
}

struct Enum<'a> {
    g: &'a Graph,
    order: &'a [usize],
    colors: usize,
    color: Vec<usize>,
    summary: EnumerationSummary,
    budget: u64,
}

impl Enum<'_> {
    fn run<F>(&mut self, i: usize, used: usize, visitor: &mut F) -> Result<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if i == self.order.len() {
            self.summary.visited += 1;
            if visitor(&self.color).is_break() {
                self.summary.stopped = true;
            }
            return Ok(());
        }
        self.summary.nodes += 1;
        if self.summary.nodes > self.budget {
            return Err(Error::Resource {
                what: format!("coloring enumeration nodes after {} colorings", self.summary.visited),
                reached: self.summary.nodes,
            });
        }
        let v = self.order[i];
        for c in 0..self.colors.min(used + 1) {
            if self.g.neighbors(v).iter().any(|&u| self.color[u] == c) {
                continue;
            }
            self.color[v] = c;
            self.run(i + 1, used.max(c + 1), visitor)?;
            self.color[v] = usize::MAX;
            if self.summary.stopped {
                break;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{generate, ComplexFamily};
    use crate::graph::{GraphFamily, VertexMap};
    use std::collections::BTreeSet;

    fn count(g: &Graph, c: usize) -> u64 {
        enumerate_colorings(g, c, None, |_| ControlFlow::Continue(())).unwrap().visited
    }

    /// Brute-force oracle: proper colorings with values in 0..c, normalized
    /// by first-occurrence relabeling, collected as a set.
    fn brute_classes(g: &Graph, c: usize) -> BTreeSet<Vec<usize>> {
        let n = g.vertex_count();
        let mut out = BTreeSet::new();
        for mut code in 0..(c as u64).pow(n as u32) {
            let col: Vec<usize> = (0..n)
                .map(|_| {
                    let x = (code % c as u64) as usize;
                    code /= c as u64;
                    x
                })
                .collect();
            if g.edges().iter().any(|&(u, v)| col[u] == col[v]) {
                continue;
            }
            let mut rename = vec![usize::MAX; c];
            let mut next = 0;
            let norm = col
                .iter()
                .map(|&x| {
                    if rename[x] == usize::MAX {
                        rename[x] = next;
                        next += 1;
                    }
                    rename[x]
                })
                .collect();
            out.insert(norm);
        }
        out
    }

    #[test]
    fn counts() {
        let k4 = GraphFamily::Complete(4).build().unwrap();
        assert_eq!(count(&k4, 4), 1);
        let c5 = GraphFamily::Cycle(5).build().unwrap();
        assert_eq!(count(&c5, 3), 5);
        assert_eq!(brute_classes(&c5, 3).len(), 5);
        let c4 = GraphFamily::Cycle(4).build().unwrap();
        assert_eq!(count(&c4, 2), 1);
    }

    #[test]
    fn each_class_exactly_once() {
        let graphs = [
            GraphFamily::Cycle(6).build().unwrap(),
            GraphFamily::Circular { n: 7, m: 2 }.build().unwrap(),
            generate(ComplexFamily::K4Projective).unwrap().skeleton().clone(),
        ];
        for g in &graphs {
            for c in 1..=4 {
                let mut seen = BTreeSet::new();
                enumerate_colorings(g, c, None, |col| {
                    assert!(g.edges().iter().all(|&(u, v)| col[u] != col[v]));
                    let mut rename = vec![usize::MAX; c];
                    let mut next = 0;
                    let norm: Vec<usize> = col
                        .iter()
                        .map(|&x| {
                            if rename[x] == usize::MAX {
                                rename[x] = next;
                                next += 1;
                            }
                            rename[x]
                        })
                        .collect();
                    assert!(seen.insert(norm));
                    ControlFlow::Continue(())
                })
                .unwrap();
                assert_eq!(seen, brute_classes(g, c));
            }
        }
    }

    #[test]
    fn budget_and_stop() {
        let g = GraphFamily::Cycle(8).build().unwrap();
        assert!(matches!(
            enumerate_colorings(&g, 3, Some(5), |_| ControlFlow::Continue(())),
            Err(Error::Resource { .. })
        ));
        let s = enumerate_colorings(&g, 3, None, |_| ControlFlow::Break(())).unwrap();
        assert!(s.stopped);
        assert_eq!(s.visited, 1);
    }

    #[test]
    fn rainbow_examples() {
        let rp = generate(ComplexFamily::K4Projective).unwrap();
        let c = ColoringCertificate::new(rp.skeleton(), VertexMap::new(vec![0, 1, 2, 3]), 4).unwrap();
        assert_eq!(rainbow_faces(&rp, &c).unwrap(), vec![0, 1, 2]);

        let torus = generate(ComplexFamily::TorusGrid { m: 4, n: 4 }).unwrap();
        let parts = match crate::graph::bipartition(torus.skeleton()) {
            crate::graph::Bipartition::Bipartite(p) => p,
            other => panic!("{other:?}"),
        };
        let c = ColoringCertificate::new(torus.skeleton(), parts, 2).unwrap();
        assert!(rainbow_faces(&torus, &c).unwrap().is_empty());

        let x = EvenComplex::new(GraphFamily::Cycle(6).build().unwrap(), vec![vec![0, 1, 2, 3, 4, 5, 0]]);
        let c = ColoringCertificate::new(x.skeleton(), VertexMap::new(vec![0, 1, 0, 1, 0, 1]), 2).unwrap();
        assert!(rainbow_faces(&x, &c).is_err());
    }

    #[test]
    fn projective_grid_always_has_rainbow_face() {
        let x = generate(ComplexFamily::ProjectiveGrid { m: 3, n: 4 }).unwrap();
        let mut colorings = 0;
        enumerate_colorings(x.skeleton(), 4, None, |col| {
            colorings += 1;
            let c = ColoringCertificate { coloring: VertexMap::new(col.to_vec()), colors: 4 };
            assert!(!rainbow_faces(&x, &c).unwrap().is_empty());
            ControlFlow::Continue(())
        })
        .unwrap();
        assert!(colorings > 0);
    }
}
