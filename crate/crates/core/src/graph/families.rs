use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Standard graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    /// `K_n`.
    Complete(usize),
    /// `C_n`, vertices `Z/n`, requires `n >= 3`.
    Cycle(usize),
    /// `P_n`: `n + 1` vertices `0..=n` joined consecutively.
    Path(usize),
    /// `K_{n/m}`: vertices `Z/n`, `x ~ y` iff the circular distance is at least `m`.
    Circular { n: usize, m: usize },
}

#[derive(Clone, Debug)]
pub struct BuiltFamily {
    pub graph: Graph,
    /// Set for `K_{n/m}` with `n < 2m`, whose edge set is empty.
    pub degenerate: bool,
}

/// Distance in `Z/n` measured the short way round.
pub fn circular_distance(x: usize, y: usize, n: usize) -> usize {
    let d = x.abs_diff(y) % n;
    d.min(n - d)
}

impl GraphFamily {
    pub fn build(&self) -> Result<Graph> {
        build_family(*self).map(|b| b.graph)
    }
}

pub fn build_family(family: GraphFamily) -> Result<BuiltFamily> {
    let plain = |graph| Ok(BuiltFamily { graph, degenerate: false });
    match family {
        GraphFamily::Complete(n) => {
            if n == 0 {
                return Err(Error::input("K_n needs n >= 1"));
            }
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            plain(Graph::new(n, edges)?)
        }
        GraphFamily::Cycle(n) => {
            if n < 3 {
                return Err(Error::input(format!("C_n needs n >= 3, got {n}")));
            }
            plain(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?)
        }
        GraphFamily::Path(n) => plain(Graph::new(n + 1, (0..n).map(|i| (i, i + 1)))?),
        GraphFamily::Circular { n, m } => {
            if n == 0 || m == 0 {
                return Err(Error::input(format!("K_{{n/m}} needs n, m >= 1, got {n}/{m}")));
            }
            let edges =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| circular_distance(u, v, n) >= m);
            Ok(BuiltFamily { graph: Graph::new(n, edges)?, degenerate: n < 2 * m })
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Complete(n) => write!(f, "complete {n}"),
            GraphFamily::Cycle(n) => write!(f, "cycle {n}"),
            GraphFamily::Path(n) => write!(f, "path {n}"),
            GraphFamily::Circular { n, m } => write!(f, "circular {n} {m}"),
        }
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    /// Parses `complete N`, `cycle N`, `path N` or `circular N M`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .ok_or_else(|| Error::input(format!("family `{s}` is missing a parameter")))?
                .parse()
                .map_err(|_| Error::input(format!("family `{s}`: bad number")))
        };
        let family = match parts.first().copied() {
            Some("complete") => GraphFamily::Complete(num(1)?),
            Some("cycle") => GraphFamily::Cycle(num(1)?),
            Some("path") => GraphFamily::Path(num(1)?),
            Some("circular") => GraphFamily::Circular { n: num(1)?, m: num(2)? },
            _ => return Err(Error::input(format!("unknown graph family `{s}`"))),
        };
        let expected = if matches!(family, GraphFamily::Circular { .. }) { 3 } else { 2 };
        if parts.len() != expected {
            return Err(Error::input(format!("family `{s}` has the wrong number of parameters")));
        }
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_homomorphism, VertexMap};

    #[test]
    fn k_n_over_1_is_complete() {
        for n in 1..7 {
            let a = GraphFamily::Circular { n, m: 1 }.build().unwrap();
            let b = GraphFamily::Complete(n).build().unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn k_5_2_is_the_pentagram_cycle() {
        let g = GraphFamily::Circular { n: 5, m: 2 }.build().unwrap();
        let mut expected = Vec::new();
        for u in 0..5usize {
            for v in u + 1..5 {
                let d = (v - u).min(5 - (v - u));
                if d >= 2 {
                    expected.push((u, v));
                }
            }
        }
        assert_eq!(g.edges(), expected.as_slice());
        // 0-2-4-1-3-0
        let order = [0, 2, 4, 1, 3];
        for i in 0..5 {
            assert!(g.has_edge(order[i], order[(i + 1) % 5]));
        }
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn k_7_3_adjacent_to_plus_minus_three() {
        let g = GraphFamily::Circular { n: 7, m: 3 }.build().unwrap();
        for x in 0..7 {
            assert_eq!(g.neighbors(x).len(), 2);
            let mut expect = vec![(x + 3) % 7, (x + 4) % 7];
            expect.sort();
            assert_eq!(g.neighbors(x), expect.as_slice());
        }
        // isomorphic to C7 via i -> 3i
        let c7 = GraphFamily::Cycle(7).build().unwrap();
        let f = VertexMap::new((0..7).map(|i| (3 * i) % 7).collect());
        assert!(is_homomorphism(&f, &c7, &g).unwrap());
    }

    #[test]
    fn degenerate_circular_is_flagged() {
        let b = build_family(GraphFamily::Circular { n: 5, m: 3 }).unwrap();
        assert!(b.degenerate);
        assert_eq!(b.graph.edge_count(), 0);
    }

    #[test]
    fn nonsense_parameters_rejected() {
        assert!(build_family(GraphFamily::Circular { n: 0, m: 1 }).is_err());
        assert!(build_family(GraphFamily::Cycle(2)).is_err());
        assert!(build_family(GraphFamily::Complete(0)).is_err());
    }

    #[test]
    fn family_parse_round_trip() {
        for f in [
            GraphFamily::Cycle(7),
            GraphFamily::Circular { n: 5, m: 2 },
            GraphFamily::Path(3),
            GraphFamily::Complete(4),
        ] {
            assert_eq!(f.to_string().parse::<GraphFamily>().unwrap(), f);
        }
        assert!("circular 5".parse::<GraphFamily>().is_err());
    }
}
