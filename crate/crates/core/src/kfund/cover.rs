//! The unrolled line cover of a circular complete graph, walk lifting and
//! winding numbers.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily, VertexMap, Walk};

/// A cover vertex: position `q / (2n)` on the line and a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverVertex {
    pub q: i64,
    pub positive: bool,
}

impl fmt::Display for CoverVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q, if self.positive { '+' } else { '-' })
    }
}

/// Cover of `K_{n/m}` by the line: `(q, e) ~ (q', -e)` iff `|q - q'| <= n - 2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverLine {
    n: i64,
    m: i64,
}

impl CoverLine {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m == 0 || n <= 2 * m {
            return Err(Error::input(format!("the line cover needs n > 2m, got n = {n}, m = {m}")));
        }
        Ok(CoverLine { n: n as i64, m: m as i64 })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    /// Largest numerator step along an edge.
    pub fn reach(&self) -> i64 {
        self.n - 2 * self.m
    }

    pub fn base_graph(&self) -> Graph {
        GraphFamily::Circular { n: self.n(), m: self.m() }.build().expect("n > 2m is a valid circular graph")
    }

    fn residue(&self, v: CoverVertex) -> i64 {
        if v.positive {
            v.q
        } else {
            v.q + self.n
        }
    }

    pub fn is_vertex(&self, v: CoverVertex) -> bool {
        self.residue(v).rem_euclid(2) == 0
    }

    /// Base vertex under `v`, or `None` if `v` is not a cover vertex.
    pub fn project(&self, v: CoverVertex) -> Option<usize> {
        let r = self.residue(v).rem_euclid(2 * self.n);
        (r % 2 == 0).then_some((r / 2) as usize)
    }

    /// The deck transformation `(q, e) -> (q + n, -e)`, applied `times` times.
    pub fn deck(&self, v: CoverVertex, times: i64) -> CoverVertex {
        CoverVertex { q: v.q + times * self.n, positive: v.positive == (times % 2 == 0) }
    }

    pub fn adjacent(&self, a: CoverVertex, b: CoverVertex) -> bool {
        a.positive != b.positive && (a.q - b.q).abs() <= self.reach()
    }

    /// The lift start `(2v, +)` over base vertex `v`.
    pub fn canonical_lift(&self, v: usize) -> CoverVertex {
        CoverVertex { q: 2 * v as i64, positive: true }
    }

    /// The unique lift of `base` starting at `start`.
    pub fn lift_walk(&self, base: &Walk, start: CoverVertex) -> Result<Vec<CoverVertex>> {
        let g = self.base_graph();
        Walk::new(&g, base.vertices().to_vec())?;
        if self.project(start) != Some(base.start()) {
            return Err(Error::input(format!("{start} does not lie over vertex {}", base.start())));
        }
        let two_n = 2 * self.n;
        let mut out = vec![start];
        let mut cur = start;
        for &v in &base.vertices()[1..] {
            let positive = !cur.positive;
            let target = if positive { 2 * v as i64 } else { 2 * v as i64 - self.n };
            let r = (target - cur.q).rem_euclid(two_n);
            let step = if r <= self.reach() {
                r
            } else if r >= two_n - self.reach() {
                r - two_n
            } else {
                return Err(Error::internal(format!("no lift of the step to {v} from {cur}")));
            };
            cur = CoverVertex { q: cur.q + step, positive };
            out.push(cur);
        }
        Ok(out)
    }

    /// Winding number: the deck power carrying the lift's start to its end.
    pub fn winding(&self, gamma: &Walk) -> Result<i64> {
        if !gamma.is_closed() {
            return Err(Error::input(format!("walk {gamma} is not closed")));
        }
        let lift = self.lift_walk(gamma, self.canonical_lift(gamma.start()))?;
        let delta = lift.last().expect("nonempty").q - lift[0].q;
        if delta % self.n != 0 {
            return Err(Error::internal(format!("displacement {delta} is not a multiple of {}", self.n)));
        }
        Ok(delta / self.n)
    }

    /// The covering order `ceil(2m / (n - 2m))` for ratios in `(2, 4)`;
    /// beyond that range the cover still exists but this closed form is the
    /// one verified by [`CoverLine::verified_covering_order`].
    pub fn predicted_covering_order(&self) -> usize {
        ((2 * self.m + self.reach() - 1) / self.reach()) as usize
    }

    /// Largest `k <= cap` for which the window check confirms a k-covering.
    pub fn verified_covering_order(&self, cap: usize) -> Result<usize> {
        let mut best = 0;
        for k in 1..=cap {
            let window = self.window(k)?;
            if window.check_interior(k)?.is_none() {
                best = k;
            } else {
                break;
            }
        }
        Ok(best)
    }

    /// A finite piece of the cover wide enough that the `k`-neighborhoods of
    /// its interior vertices lie inside it.
    pub fn window(&self, k: usize) -> Result<CoverWindow> {
        let margin = (k as i64 + 1) * self.reach().max(1);
        let half = 2 * self.n + margin + 1;
        let mut vertices = Vec::new();
        for q in -half..=half {
            for positive in [true, false] {
                let v = CoverVertex { q, positive };
                if self.is_vertex(v) {
                    vertices.push(v);
                }
            }
        }
        let index: BTreeMap<CoverVertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &a) in vertices.iter().enumerate() {
            for d in -self.reach()..=self.reach() {
                let b = CoverVertex { q: a.q + d, positive: !a.positive };
                if let Some(&j) = index.get(&b) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let graph = Graph::new(vertices.len(), edges)?;
        let projection = VertexMap::new(vertices.iter().map(|&v| self.project(v).expect("cover vertex")).collect());
        let interior =
            (0..vertices.len()).filter(|&i| vertices[i].q.abs() < half - k as i64 * self.reach().max(1)).collect();
        Ok(CoverWindow { cover: *self, vertices, graph, projection, interior })
    }
}

/// A finite window of a [`CoverLine`] with its projection to the base.
#[derive(Clone, Debug)]
pub struct CoverWindow {
    pub cover: CoverLine,
    pub vertices: Vec<CoverVertex>,
    pub graph: Graph,
    pub projection: VertexMap,
    /// Window vertices whose `k`-neighborhoods are complete.
    pub interior: Vec<usize>,
}

impl CoverWindow {
    /// Runs the k-covering check on the interior vertices.
    pub fn check_interior(&self, k: usize) -> Result<Option<super::CoveringFailure>> {
        super::is_k_covering_at(&self.projection, &self.graph, &self.cover.base_graph(), k, &self.interior)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k52() -> CoverLine {
        CoverLine::new(5, 2).unwrap()
    }

    #[test]
    fn projection_and_deck() {
        let c = k52();
        let v = CoverVertex { q: -1, positive: false };
        assert_eq!(c.project(v), Some(2));
        assert_eq!(c.project(CoverVertex { q: 1, positive: true }), None);
        for t in -3..=3 {
            assert_eq!(c.project(c.deck(v, t)), Some(2));
        }
        assert_eq!(c.deck(c.deck(v, 2), -2), v);
    }

    #[test]
    fn lift_examples() {
        let c = k52();
        let g = c.base_graph();
        let w = Walk::new(&g, vec![0, 2, 4, 1, 3, 0]).unwrap();
        let lift = c.lift_walk(&w, c.canonical_lift(0)).unwrap();
        let qs: Vec<i64> = lift.iter().map(|v| v.q).collect();
        assert_eq!(qs, vec![0, -1, -2, -3, -4, -5]);
        assert_eq!(c.winding(&w).unwrap(), -1);
        let double = w.concat(&w).unwrap();
        assert_eq!(c.lift_walk(&double, c.canonical_lift(0)).unwrap().last().unwrap().q, -10);
        assert_eq!(c.winding(&double).unwrap(), -2);
        assert_eq!(c.winding(&w.reversed()).unwrap(), 1);
        assert_eq!(c.winding(&Walk::trivial(3)).unwrap(), 0);
        assert_eq!(c.lift_walk(&Walk::trivial(3), c.canonical_lift(3)).unwrap().len(), 1);
    }

    #[test]
    fn lifts_are_cover_walks() {
        let c = CoverLine::new(8, 3).unwrap();
        let g = c.base_graph();
        let w = Walk::new(&g, vec![0, 3, 6, 1, 4, 7, 2, 5, 0]).unwrap();
        let lift = c.lift_walk(&w, c.canonical_lift(0)).unwrap();
        for pair in lift.windows(2) {
            assert!(c.adjacent(pair[0], pair[1]));
        }
        for (v, b) in lift.iter().zip(w.vertices()) {
            assert_eq!(c.project(*v), Some(*b));
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(CoverLine::new(4, 2).is_err());
        assert!(CoverLine::new(5, 0).is_err());
        let c = k52();
        let g = c.base_graph();
        let w = Walk::new(&g, vec![0, 2]).unwrap();
        assert!(c.lift_walk(&w, c.canonical_lift(1)).is_err());
        assert!(c.winding(&w).is_err());
    }

    #[test]
    fn covering_orders() {
        for ((n, m), k) in [((5, 2), 4), ((7, 3), 6), ((8, 3), 3)] {
            let c = CoverLine::new(n, m).unwrap();
            assert_eq!(c.predicted_covering_order(), k);
            assert_eq!(c.verified_covering_order(k + 3).unwrap(), k);
        }
    }
}
