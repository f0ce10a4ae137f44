#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use youngs_core::complex::{generate, ComplexFamily};
use youngs_core::{EvenComplex, Graph, Walk};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Seed for randomized suites; override with `YOUNGS_SEED`.
pub fn seed() -> u64 {
    std::env::var("YOUNGS_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// A uniformly stepped random walk of `len` steps from `start`.
pub fn random_walk(rng: &mut impl Rng, g: &Graph, start: usize, len: usize) -> Option<Vec<usize>> {
    let mut w = vec![start];
    for _ in 0..len {
        let &next = g.neighbors(*w.last().unwrap()).choose(rng)?;
        w.push(next);
    }
    Some(w)
}

/// A closed walk of exactly `len` steps, found by rejection.
pub fn random_closed_walk(rng: &mut impl Rng, g: &Graph, len: usize) -> Option<Vec<usize>> {
    if g.edge_count() == 0 || len < 2 {
        return None;
    }
    for _ in 0..200 {
        let start = rng.gen_range(0..g.vertex_count());
        let mut w = random_walk(rng, g, start, len - 1)?;
        if g.has_edge(*w.last().unwrap(), start) {
            w.push(start);
            return Some(w);
        }
    }
    None
}

pub fn odd_closed_walks(rng: &mut impl Rng, g: &Graph, count: usize, max_len: usize) -> Vec<Walk> {
    let mut out = Vec::new();
    for _ in 0..count * 4 {
        if out.len() == count {
            break;
        }
        let len = 2 * rng.gen_range(1..=max_len / 2) + 1;
        if let Some(w) = random_closed_walk(rng, g, len) {
            out.push(Walk::new(g, w).unwrap());
        }
    }
    out
}

pub fn relabel(x: &EvenComplex, perm: &[usize]) -> EvenComplex {
    let g = x.skeleton();
    let skeleton = Graph::new(g.vertex_count(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
    let cells = x.cells().iter().map(|c| c.iter().map(|&v| perm[v]).collect()).collect();
    EvenComplex::new(skeleton, cells)
}

/// Adds edges between existing vertices; cells are kept.
pub fn with_extra_edges(x: &EvenComplex, extra: &[(usize, usize)]) -> EvenComplex {
    let g = x.skeleton();
    let edges = g.edges().iter().copied().chain(extra.iter().copied().filter(|&(u, v)| u != v));
    let mut all: Vec<(usize, usize)> = edges.map(|(u, v)| (u.min(v), u.max(v))).collect();
    all.sort_unstable();
    all.dedup();
    EvenComplex::new(Graph::new(g.vertex_count(), all).unwrap(), x.cells().to_vec())
}

/// A random valid complex on at most `max_vertices` vertices. Cells are
/// random even closed walks, doubled odd closed walks, or (when `quad`)
/// closed walks of length 4 only. Some instances start from a small
/// projective quadrangulation so that torsion occurs regularly.
pub fn random_complex(rng: &mut impl Rng, max_vertices: usize, quad: bool) -> EvenComplex {
    let seeded = rng.gen_bool(0.35);
    let base = if seeded {
        let family = *[
            ComplexFamily::K4Projective,
            ComplexFamily::ProjectiveGrid { m: 2, n: 3 },
            ComplexFamily::ProjectiveGrid { m: 3, n: 2 },
            ComplexFamily::ProjectiveGrid { m: 3, n: 3 },
            ComplexFamily::TorusGrid { m: 3, n: 3 },
        ]
        .choose(rng)
        .unwrap();
        let x = generate(family).unwrap();
        if x.vertex_count() > max_vertices {
            generate(ComplexFamily::K4Projective).unwrap()
        } else {
            x
        }
    } else {
        let n = rng.gen_range(3..=max_vertices);
        let p = rng.gen_range(0.25..0.7);
        EvenComplex::new(random_graph(rng, n, p), Vec::new())
    };
    let n = base.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let extra: Vec<(usize, usize)> =
        (0..rng.gen_range(0..3)).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    let x = with_extra_edges(&relabel(&base, &perm), &extra);
    let g = x.skeleton().clone();
    let mut cells = x.cells().to_vec();
    for _ in 0..rng.gen_range(0..5) {
        let cell = if quad {
            random_closed_walk(rng, &g, 4)
        } else if rng.gen_bool(0.3) {
            let len = 2 * rng.gen_range(1..=3) + 1;
            random_closed_walk(rng, &g, len).map(|w| {
                let mut doubled = w[..len].to_vec();
                doubled.extend_from_slice(&w[..len]);
                doubled.push(w[0]);
                doubled
            })
        } else {
            let len = 2 * rng.gen_range(2..=4);
            random_closed_walk(rng, &g, len)
        };
        cells.extend(cell);
    }
    let x = EvenComplex::new(g, cells);
    assert!(x.validate().is_empty(), "generator produced an invalid complex");
    x
}
