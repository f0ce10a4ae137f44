//! Line-oriented text formats for graphs, complexes and colorings.
//!
//! Each file is a list of `key: value` lines; values are integers or JSON
//! arrays. Blank lines and lines starting with `#` are ignored.

use std::collections::{BTreeMap, BTreeSet};

use crate::coloring::ColoringCertificate;
use crate::complex::{CellClass, EvenComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};

struct Fields<'a> {
    values: BTreeMap<&'a str, (usize, &'a str)>,
}

impl<'a> Fields<'a> {
    fn parse(text: &'a str, allowed: &[&str]) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse { line: i + 1, msg: format!("expected `key: value`, found `{line}`") })?;
            let key = key.trim();
            if !allowed.contains(&key) {
                return Err(Error::Parse { line: i + 1, msg: format!("unknown field `{key}`") });
            }
            if values.insert(key, (i + 1, value.trim())).is_some() {
                return Err(Error::Parse { line: i + 1, msg: format!("field `{key}` repeated") });
            }
        }
        Ok(Fields { values })
    }

    fn last_line(text: &str) -> usize {
        text.lines().count().max(1)
    }

    fn required(&self, key: &str, text: &str) -> Result<(usize, &'a str)> {
        self.values
            .get(key)
            .copied()
            .ok_or_else(|| Error::Parse { line: Self::last_line(text), msg: format!("missing field `{key}`") })
    }

    fn count(&self, key: &str, text: &str) -> Result<usize> {
        let (line, v) = self.required(key, text)?;
        v.parse().map_err(|_| Error::Parse { line, msg: format!("`{key}` must be a nonnegative integer") })
    }

    fn list(&self, key: &str, text: &str) -> Result<Vec<usize>> {
        let (line, v) = self.required(key, text)?;
        serde_json::from_str(v).map_err(|e| Error::Parse { line, msg: format!("`{key}`: {e}") })
    }

    fn lists(&self, key: &str, text: &str) -> Result<Vec<Vec<usize>>> {
        let (line, v) = self.required(key, text)?;
        serde_json::from_str(v).map_err(|e| Error::Parse { line, msg: format!("`{key}`: {e}") })
    }

    fn pairs(&self, key: &str, text: &str) -> Result<Vec<(usize, usize)>> {
        self.lists(key, text)?
            .into_iter()
            .map(|p| match p.as_slice() {
                &[u, v] => Ok((u, v)),
                _ => Err(Error::Parse { line: self.line_of(key), msg: format!("`{key}` entries must be pairs") }),
            })
            .collect()
    }

    fn line_of(&self, key: &str) -> usize {
        self.values.get(key).map_or(1, |v| v.0)
    }
}

fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", items.join(","))
}

fn lists<'a>(vs: impl IntoIterator<Item = &'a [usize]>) -> String {
    let items: Vec<String> = vs.into_iter().map(list).collect();
    format!("[{}]", items.join(","))
}

fn pairs(es: &[(usize, usize)]) -> String {
    lists(es.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>().iter().map(|p| &p[..]))
}

pub fn write_graph(g: &Graph) -> String {
    format!("vertices: {}\nedges: {}\n", g.vertex_count(), pairs(g.edges()))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let f = Fields::parse(text, &["vertices", "edges"])?;
    let n = f.count("vertices", text)?;
    let edges = f.pairs("edges", text)?;
    Graph::new(n, edges).map_err(|e| Error::Parse { line: f.line_of("edges"), msg: e.to_string() })
}

/// Cells as canonical cycles in sorted order; edges bounding no cell go on
/// an extra `edges:` line.
pub fn write_complex(x: &EvenComplex) -> String {
    let mut cells: Vec<CellClass> = x.cells().iter().map(|c| CellClass::of_closed(c)).collect();
    cells.sort();
    let mut out = format!("vertices: {}\ncells: {}\n", x.vertex_count(), lists(cells.iter().map(CellClass::cycle)));
    let mut on_cells = BTreeSet::new();
    for c in x.cells() {
        for w in c.windows(2) {
            on_cells.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    let loose: Vec<(usize, usize)> = x.skeleton().edges().iter().filter(|e| !on_cells.contains(e)).copied().collect();
    if !loose.is_empty() {
        out.push_str(&format!("edges: {}\n", pairs(&loose)));
    }
    out
}

/// Parses a complex file. The skeleton consists of the consecutive pairs of
/// the cells plus any listed edges; the result is not validated.
pub fn parse_complex(text: &str) -> Result<EvenComplex> {
    let f = Fields::parse(text, &["vertices", "cells", "edges"])?;
    let n = f.count("vertices", text)?;
    let cells = f.lists("cells", text)?;
    let extra = if f.values.contains_key("edges") { f.pairs("edges", text)? } else { Vec::new() };
    let mut edges: BTreeSet<(usize, usize)> = extra.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut closed = Vec::with_capacity(cells.len());
    for (i, cell) in cells.iter().enumerate() {
        if cell.is_empty() {
            return Err(Error::Parse { line: f.line_of("cells"), msg: format!("cell {i} is empty") });
        }
        for j in 0..cell.len() {
            let (u, v) = (cell[j], cell[(j + 1) % cell.len()]);
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
        let mut c = cell.clone();
        c.push(cell[0]);
        closed.push(c);
    }
    let g = Graph::new(n, edges).map_err(|e| Error::Parse { line: f.line_of("cells"), msg: e.to_string() })?;
    Ok(EvenComplex::new(g, closed))
}

pub fn write_coloring(c: &ColoringCertificate) -> String {
    format!("colors: {}\nassignment: {}\n", c.colors, list(c.coloring.image()))
}

/// Parses a coloring file; properness is checked separately against a graph.
pub fn parse_coloring(text: &str) -> Result<ColoringCertificate> {
    let f = Fields::parse(text, &["colors", "assignment"])?;
    let colors = f.count("colors", text)?;
    let assignment = f.list("assignment", text)?;
    if let Some(&c) = assignment.iter().find(|&&c| c >= colors) {
        return Err(Error::Parse { line: f.line_of("assignment"), msg: format!("color {c} is not below {colors}") });
    }
    Ok(ColoringCertificate { coloring: VertexMap::new(assignment), colors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{generate, ComplexFamily};
    use crate::graph::GraphFamily;

    #[test]
    fn graph_round_trip() {
        let g = GraphFamily::Circular { n: 5, m: 2 }.build().unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "vertices: 5\nedges: [[0,2],[0,3],[1,3],[1,4],[2,4]]\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
        let messy = "# a pentagon\nedges: [[4, 2], [0,2], [3,0],[1,3],[4,1]]\n\nvertices: 5\n";
        assert_eq!(parse_graph(messy).unwrap(), g);
    }

    #[test]
    fn complex_round_trip_is_byte_identical() {
        for f in [
            ComplexFamily::K4Projective,
            ComplexFamily::TorusGrid { m: 3, n: 4 },
            ComplexFamily::CubicalRp { d: 2 },
            ComplexFamily::SphereGrid { m: 2, n: 2 },
        ] {
            let x = generate(f).unwrap();
            let text = write_complex(&x);
            let y = parse_complex(&text).unwrap();
            assert!(y.validate().is_empty());
            assert_eq!(write_complex(&y), text, "{f}");
            assert_eq!(y.skeleton(), x.skeleton());
        }
    }

    #[test]
    fn k4_projective_file() {
        let text = write_complex(&generate(ComplexFamily::K4Projective).unwrap());
        assert_eq!(text, "vertices: 4\ncells: [[0,1,2,3],[0,1,3,2],[0,2,1,3]]\n");
    }

    #[test]
    fn loose_edges_kept() {
        let x = EvenComplex::from_faces_with_edges(6, &[vec![0, 1, 2, 3]], &[(3, 4), (4, 5)]).unwrap();
        let text = write_complex(&x);
        assert!(text.ends_with("edges: [[3,4],[4,5]]\n"));
        assert_eq!(parse_complex(&text).unwrap().skeleton(), x.skeleton());
    }

    #[test]
    fn lenient_complex_parse_reports_violations() {
        let x = parse_complex("vertices: 3\ncells: [[0,1,2]]\n").unwrap();
        assert_eq!(x.validate().len(), 1);
        assert_eq!(x.validate()[0].to_string(), "cell 0: odd cell length 3");
    }

    #[test]
    fn coloring_round_trip() {
        let text = "colors: 3\nassignment: [0,1,2,0,1]\n";
        let c = parse_coloring(text).unwrap();
        assert_eq!(write_coloring(&c), text);
        c.check(&GraphFamily::Cycle(5).build().unwrap()).unwrap();
        parse_coloring("colors: 3\nassignment: [0,1,2,0,0]\n")
            .unwrap()
            .check(&GraphFamily::Cycle(5).build().unwrap())
            .unwrap_err();
        assert!(parse_coloring("colors: 2\nassignment: [0,2]\n").is_err());
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert!(matches!(parse_graph("vertices: 2\nedges: [[0,1]\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("vertices: 2\nedges: [[0,1,1]]\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("vertices: x\nedges: []"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("vertices: 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("vertices: 2\ncolour: 3\nedges: []"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("vertices: 2\nedges: [[0,0]]"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_complex("vertices: 2\ncells: [[]]"), Err(Error::Parse { .. })));
    }
}
