//! Generators for quadrangulated 2-skeleta of standard spaces.
//!
//! Each generator lists raw grid points, glues them with a union-find, and
//! emits every geometric edge and square exactly once. Gluings that would
//! create a loop or a second edge between the same two vertices are refused.

use std::collections::BTreeMap;
use std::fmt;

use super::EvenComplex;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexFamily {
    /// Two `m x n` grids glued along their boundary (a pillow). Simple for
    /// `m, n >= 2` and for `1 x 1`.
    SphereGrid { m: usize, n: usize },
    /// `Z/m x Z/n` grid. Simple for `m, n >= 3`.
    TorusGrid { m: usize, n: usize },
    /// Grid with `(x, y + n) ~ (-x, y)` and `(x + m, y) ~ (x, y)`. Simple for `m, n >= 3`.
    KleinGrid { m: usize, n: usize },
    /// `m x n` square with antipodal boundary gluing; `m*n + 1` vertices,
    /// bipartite iff `m + n` is even. Simple for `m, n >= 3`, and for
    /// `2 x n` / `n x 2` with `n` odd.
    ProjectiveGrid { m: usize, n: usize },
    /// `K_4` with the three 4-cycles as faces.
    K4Projective,
    /// Unit-grid subdivision of the boundary of `[-1,1]^{d+1}`, `1 <= d <= 4`.
    CubeBoundary { d: usize },
    /// Antipodal quotient of `CubeBoundary`, an `RP^d` 2-skeleton, `1 <= d <= 4`.
    CubicalRp { d: usize },
}

impl fmt::Display for ComplexFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ComplexFamily::SphereGrid { m, n } => write!(f, "sphere-grid {m} {n}"),
            ComplexFamily::TorusGrid { m, n } => write!(f, "torus-grid {m} {n}"),
            ComplexFamily::KleinGrid { m, n } => write!(f, "klein-grid {m} {n}"),
            ComplexFamily::ProjectiveGrid { m, n } => write!(f, "projective-grid {m} {n}"),
            ComplexFamily::K4Projective => write!(f, "k4-projective"),
            ComplexFamily::CubeBoundary { d } => write!(f, "cube-boundary {d}"),
            ComplexFamily::CubicalRp { d } => write!(f, "cubical-rp {d}"),
        }
    }
}

pub fn generate(family: ComplexFamily) -> Result<EvenComplex> {
    let x = match family {
        ComplexFamily::SphereGrid { m, n } => {
            check_grid(m, n, 1)?;
            sphere_grid(m, n)
        }
        ComplexFamily::TorusGrid { m, n } => {
            check_grid(m, n, 1)?;
            square_quotient(m, n, |x, y| {
                let mut pairs = Vec::new();
                if y == 0 {
                    pairs.push((x, n));
                }
                if x == 0 {
                    pairs.push((m, y));
                }
                pairs
            })
        }
        ComplexFamily::KleinGrid { m, n } => {
            check_grid(m, n, 1)?;
            square_quotient(m, n, |x, y| {
                let mut pairs = Vec::new();
                if y == 0 {
                    pairs.push((m - x, n));
                }
                if x == 0 {
                    pairs.push((m, y));
                }
                pairs
            })
        }
        ComplexFamily::ProjectiveGrid { m, n } => {
            check_grid(m, n, 1)?;
            square_quotient(m, n, |x, y| {
                let mut pairs = Vec::new();
                if y == 0 {
                    pairs.push((m - x, n));
                }
                if x == 0 {
                    pairs.push((m, n - y));
                }
                pairs
            })
        }
        ComplexFamily::K4Projective => {
            EvenComplex::from_faces(4, &[vec![0, 1, 2, 3], vec![0, 1, 3, 2], vec![0, 2, 1, 3]])
        }
        ComplexFamily::CubeBoundary { d } => {
            check_dimension(d)?;
            cube_boundary(d + 1, 1, false)
        }
        ComplexFamily::CubicalRp { d } => {
            check_dimension(d)?;
            match cube_boundary(d + 1, 1, true) {
                Ok(x) if x.validate().is_empty() => Ok(x),
                _ => cube_boundary(d + 1, 2, true),
            }
        }
    }?;
    if let Some(v) = x.validate().first() {
        return Err(Error::Generation(format!("{family}: generated complex is invalid: {v}")));
    }
    Ok(x)
}

fn check_grid(m: usize, n: usize, min: usize) -> Result<()> {
    if m < min || n < min {
        return Err(Error::input(format!("grid parameters must be at least {min}, got {m} x {n}")));
    }
    Ok(())
}

fn check_dimension(d: usize) -> Result<()> {
    if !(1..=4).contains(&d) {
        return Err(Error::input(format!("cube dimension d must be in 1..=4, got {d}")));
    }
    Ok(())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

/// Raw points, gluings, one raw edge per geometric edge, and raw squares.
struct QuotientBuilder {
    uf: UnionFind,
    present: Vec<bool>,
    edges: Vec<(usize, usize)>,
    faces: Vec<[usize; 4]>,
}

impl QuotientBuilder {
    fn new(raw_points: usize) -> Self {
        QuotientBuilder {
            uf: UnionFind::new(raw_points),
            present: vec![true; raw_points],
            edges: Vec::new(),
            faces: Vec::new(),
        }
    }

    fn finish(mut self) -> Result<EvenComplex> {
        let raw = self.present.len();
        let mut ids = BTreeMap::new();
        let mut vertex_of = vec![usize::MAX; raw];
        for (p, slot) in vertex_of.iter_mut().enumerate() {
            if !self.present[p] {
                continue;
            }
            let root = self.uf.find(p);
            let next = ids.len();
            *slot = *ids.entry(root).or_insert(next);
        }
        let faces: Vec<Vec<usize>> = self.faces.iter().map(|f| f.iter().map(|&p| vertex_of[p]).collect()).collect();
        let cells_with = |u: usize, v: usize| -> Vec<usize> {
            faces
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    (0..4).any(|i| {
                        let (a, b) = (f[i], f[(i + 1) % 4]);
                        (a, b) == (u, v) || (a, b) == (v, u)
                    })
                })
                .map(|(i, _)| i)
                .collect()
        };
        let mut seen = BTreeMap::new();
        for &(a, b) in &self.edges {
            let (u, v) = (vertex_of[a], vertex_of[b]);
            if u == v {
                return Err(Error::Generation(format!(
                    "gluing collapses an edge to a loop at vertex {u}; colliding cells {:?}",
                    cells_with(u, u)
                )));
            }
            let key = (u.min(v), u.max(v));
            if seen.insert(key, ()).is_some() {
                return Err(Error::Generation(format!(
                    "gluing creates a multi-edge between {} and {}; colliding cells {:?}",
                    key.0,
                    key.1,
                    cells_with(key.0, key.1)
                )));
            }
        }
        EvenComplex::from_faces_with_edges(
            ids.len(),
            &faces,
            &self.edges.iter().map(|&(a, b)| (vertex_of[a], vertex_of[b])).collect::<Vec<_>>(),
        )
        .map_err(|e| Error::Generation(e.to_string()))
    }
}

/// The `[0,m] x [0,n]` grid with boundary gluings given by `partners(x, y)`.
/// The top row and right column are covered by the gluings, so their edges
/// are not emitted separately.
fn square_quotient(m: usize, n: usize, partners: impl Fn(usize, usize) -> Vec<(usize, usize)>) -> Result<EvenComplex> {
    let id = |x: usize, y: usize| x * (n + 1) + y;
    let mut b = QuotientBuilder::new((m + 1) * (n + 1));
    for x in 0..=m {
        for y in 0..=n {
            for (px, py) in partners(x, y) {
                b.uf.union(id(x, y), id(px, py));
            }
        }
    }
    for x in 0..m {
        for y in 0..n {
            b.edges.push((id(x, y), id(x + 1, y)));
            b.edges.push((id(x, y), id(x, y + 1)));
            b.faces.push([id(x, y), id(x + 1, y), id(x + 1, y + 1), id(x, y + 1)]);
        }
    }
    b.finish()
}

fn sphere_grid(m: usize, n: usize) -> Result<EvenComplex> {
    let plane = (m + 1) * (n + 1);
    let id = |c: usize, x: usize, y: usize| c * plane + x * (n + 1) + y;
    let on_boundary = |x: usize, y: usize| x == 0 || x == m || y == 0 || y == n;
    let mut b = QuotientBuilder::new(2 * plane);
    for x in 0..=m {
        for y in 0..=n {
            if on_boundary(x, y) {
                b.uf.union(id(0, x, y), id(1, x, y));
            }
        }
    }
    for c in 0..2 {
        for x in 0..=m {
            for y in 0..=n {
                if x < m && (c == 0 || (y != 0 && y != n)) {
                    b.edges.push((id(c, x, y), id(c, x + 1, y)));
                }
                if y < n && (c == 0 || (x != 0 && x != m)) {
                    b.edges.push((id(c, x, y), id(c, x, y + 1)));
                }
                if x < m && y < n {
                    b.faces.push([id(c, x, y), id(c, x + 1, y), id(c, x + 1, y + 1), id(c, x, y + 1)]);
                }
            }
        }
    }
    b.finish()
}

/// Boundary of `[-h, h]^dim` subdivided into unit cubes, 2-skeleton only;
/// optionally glued by `p ~ -p`.
fn cube_boundary(dim: usize, h: i64, antipodal: bool) -> Result<EvenComplex> {
    let side = (2 * h + 1) as usize;
    let total = side.pow(dim as u32);
    let coords = |mut idx: usize| -> Vec<i64> {
        let mut c = vec![0; dim];
        for slot in c.iter_mut() {
            *slot = (idx % side) as i64 - h;
            idx /= side;
        }
        c
    };
    let index = |c: &[i64]| -> usize { c.iter().rev().fold(0, |acc, &v| acc * side + (v + h) as usize) };
    let on_boundary = |c: &[i64]| c.iter().any(|v| v.abs() == h);
    let mut b = QuotientBuilder::new(total);
    for p in 0..total {
        let c = coords(p);
        b.present[p] = on_boundary(&c);
        if antipodal && b.present[p] {
            let neg: Vec<i64> = c.iter().map(|v| -v).collect();
            b.uf.union(p, index(&neg));
        }
    }
    let negate = |c: &[i64]| -> Vec<i64> { c.iter().map(|v| -v).collect() };
    let sorted_ids = |pts: &[Vec<i64>]| -> Vec<usize> {
        let mut ids: Vec<usize> = pts.iter().map(|c| index(c)).collect();
        ids.sort_unstable();
        ids
    };
    // keep one representative per antipodal orbit
    let keep = |pts: &[Vec<i64>]| -> bool {
        !antipodal || {
            let neg: Vec<Vec<i64>> = pts.iter().map(|c| negate(c)).collect();
            sorted_ids(pts) <= sorted_ids(&neg)
        }
    };
    for p in 0..total {
        if !b.present[p] {
            continue;
        }
        let c = coords(p);
        for i in 0..dim {
            if c[i] >= h {
                continue;
            }
            let mut q = c.clone();
            q[i] += 1;
            let fixed_on_face = (0..dim).any(|k| k != i && c[k].abs() == h);
            if fixed_on_face && keep(&[c.clone(), q.clone()]) {
                b.edges.push((p, index(&q)));
            }
            for j in i + 1..dim {
                if c[j] >= h {
                    continue;
                }
                if !(0..dim).any(|k| k != i && k != j && c[k].abs() == h) {
                    continue;
                }
                let mut r = c.clone();
                r[j] += 1;
                let mut s = q.clone();
                s[j] += 1;
                if keep(&[c.clone(), q.clone(), s.clone(), r.clone()]) {
                    b.faces.push([p, index(&q), index(&s), index(&r)]);
                }
            }
        }
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(x: &EvenComplex) -> (usize, usize, usize, i64) {
        (x.vertex_count(), x.edge_count(), x.cell_count(), x.euler_characteristic())
    }

    #[test]
    fn torus_3x3() {
        let x = generate(ComplexFamily::TorusGrid { m: 3, n: 3 }).unwrap();
        assert_eq!(counts(&x), (9, 18, 9, 0));
        assert!(x.is_quadrangulated());
    }

    #[test]
    fn k4_projective_matches_faces() {
        let x = generate(ComplexFamily::K4Projective).unwrap();
        assert_eq!(counts(&x), (4, 6, 3, 1));
        // every edge of K4 is used by exactly two faces
        let mut uses = BTreeMap::new();
        for cell in x.cells() {
            for w in cell.windows(2) {
                *uses.entry((w[0].min(w[1]), w[0].max(w[1]))).or_insert(0) += 1;
            }
        }
        assert_eq!(uses.len(), 6);
        assert!(uses.values().all(|&c| c == 2));
    }

    #[test]
    fn surface_euler_counts() {
        for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 3)] {
            let s = generate(ComplexFamily::SphereGrid { m, n }).unwrap();
            assert_eq!(s.euler_characteristic(), 2, "sphere {m}x{n}");
        }
        for (m, n) in [(3, 3), (4, 5)] {
            assert_eq!(generate(ComplexFamily::TorusGrid { m, n }).unwrap().euler_characteristic(), 0);
            assert_eq!(generate(ComplexFamily::KleinGrid { m, n }).unwrap().euler_characteristic(), 0);
        }
        for (m, n) in [(2, 3), (3, 2), (2, 5), (3, 3), (3, 4), (4, 4)] {
            let p = generate(ComplexFamily::ProjectiveGrid { m, n }).unwrap();
            assert_eq!(counts(&p), (m * n + 1, 2 * m * n, m * n, 1), "projective {m}x{n}");
        }
    }

    #[test]
    fn projective_grid_parity() {
        let odd = generate(ComplexFamily::ProjectiveGrid { m: 3, n: 4 }).unwrap();
        assert!(!odd.skeleton().is_bipartite());
        let even = generate(ComplexFamily::ProjectiveGrid { m: 3, n: 3 }).unwrap();
        assert!(even.skeleton().is_bipartite());
    }

    #[test]
    fn cubes() {
        let s2 = generate(ComplexFamily::CubeBoundary { d: 2 }).unwrap();
        assert_eq!(counts(&s2), (26, 48, 24, 2));
        let rp2 = generate(ComplexFamily::CubicalRp { d: 2 }).unwrap();
        assert_eq!(counts(&rp2), (13, 24, 12, 1));
        let rp3 = generate(ComplexFamily::CubicalRp { d: 3 }).unwrap();
        assert!(rp3.is_quadrangulated());
        assert_eq!(rp3.vertex_count(), 40);
        let c8 = generate(ComplexFamily::CubeBoundary { d: 1 }).unwrap();
        assert_eq!(counts(&c8), (8, 8, 0, 0));
    }

    #[test]
    fn small_grids_are_refused() {
        for family in [
            ComplexFamily::TorusGrid { m: 2, n: 3 },
            ComplexFamily::KleinGrid { m: 3, n: 1 },
            ComplexFamily::ProjectiveGrid { m: 1, n: 1 },
            ComplexFamily::ProjectiveGrid { m: 2, n: 4 },
            ComplexFamily::SphereGrid { m: 1, n: 2 },
        ] {
            match generate(family) {
                Err(Error::Generation(msg)) => assert!(msg.contains("cells"), "{msg}"),
                other => panic!("{family}: {other:?}"),
            }
        }
        assert!(generate(ComplexFamily::TorusGrid { m: 0, n: 3 }).is_err());
        assert!(generate(ComplexFamily::CubicalRp { d: 5 }).is_err());
    }
}
