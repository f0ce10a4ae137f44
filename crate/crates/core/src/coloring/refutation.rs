//! Line-oriented traces proving that a graph has no coloring with a given
//! number of colors, and an independent replaying verifier.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    /// These vertices are pairwise adjacent and outnumber the colors.
    Clique(Vec<usize>),
    /// Preassigned color on a clique vertex (color symmetry breaking).
    Fix { vertex: usize, color: usize },
    /// Branch on an uncolored vertex.
    Push(usize),
    /// Try a color on the vertex of the innermost open branch.
    Try(usize),
    /// Every color of the innermost branch is closed.
    Pop,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::Clique(vs) => {
                f.write_str("clique")?;
                for v in vs {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            TraceStep::Fix { vertex, color } => write!(f, "fix {vertex} {color}"),
            TraceStep::Push(v) => write!(f, "push {v}"),
            TraceStep::Try(c) => write!(f, "try {c}"),
            TraceStep::Pop => f.write_str("pop"),
        }
    }
}

/// A claim that the graph has no proper coloring with `colors` colors,
/// backed by a complete search trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub colors: usize,
    pub vertex_count: usize,
    pub steps: Vec<TraceStep>,
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "refute colors {} vertices {}", self.colors, self.vertex_count)?;
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        writeln!(f, "end")
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn nums(line: usize, parts: &[&str]) -> Result<Vec<usize>> {
    parts
        .iter()
        .map(|p| p.parse::<usize>().map_err(|_| parse_err(line, format!("expected an integer, found `{p}`"))))
        .collect()
}

impl FromStr for Refutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines =
            s.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (n, header) = lines.next().ok_or_else(|| parse_err(1, "empty refutation"))?;
        let h: Vec<&str> = header.split_whitespace().collect();
        let (colors, vertex_count) = match h.as_slice() {
            ["refute", "colors", c, "vertices", v] => {
                let x = nums(n, &[c, v])?;
                (x[0], x[1])
            }
            _ => return Err(parse_err(n, "expected `refute colors <c> vertices <n>`")),
        };
        let mut steps = Vec::new();
        let mut ended = false;
        for (n, line) in lines {
            if ended {
                return Err(parse_err(n, "content after `end`"));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let step = match (parts[0], &parts[1..]) {
                ("clique", rest) => TraceStep::Clique(nums(n, rest)?),
                ("fix", rest @ [_, _]) => {
                    let x = nums(n, rest)?;
                    TraceStep::Fix { vertex: x[0], color: x[1] }
                }
                ("push", rest @ [_]) => TraceStep::Push(nums(n, rest)?[0]),
                ("try", rest @ [_]) => TraceStep::Try(nums(n, rest)?[0]),
                ("pop", []) => TraceStep::Pop,
                ("end", []) => {
                    ended = true;
                    continue;
                }
                _ => return Err(parse_err(n, format!("unrecognized trace line `{line}`"))),
            };
            steps.push(step);
        }
        if !ended {
            return Err(parse_err(s.lines().count(), "missing `end`"));
        }
        Ok(Refutation { colors, vertex_count, steps })
    }
}

struct Frame {
    vertex: usize,
    closed: u64,
    current: Option<usize>,
}

/// Replays a refutation against `g`. Accepts only if the trace closes every
/// branch: each color of a popped vertex was tried and closed, conflicts with
/// a colored neighbor, or is an unused color interchangeable with a closed
/// unused one.
pub fn verify_refutation(g: &Graph, r: &Refutation) -> Result<()> {
    let n = g.vertex_count();
    let c = r.colors;
    let reject = |i: usize, msg: String| Err(Error::input(format!("refutation rejected at step {}: {msg}", i + 1)));
    if r.vertex_count != n {
        return Err(Error::input(format!("refutation is for {} vertices, graph has {n}", r.vertex_count)));
    }
    if c > 64 {
        return Err(Error::input("refutations support at most 64 colors"));
    }
    if let [TraceStep::Clique(vs)] = r.steps.as_slice() {
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() || vs.iter().any(|&v| v >= n) {
            return reject(0, "clique vertices must be distinct and in range".into());
        }
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if !g.has_edge(a, b) {
                    return reject(0, format!("{a} and {b} are not adjacent"));
                }
            }
        }
        if vs.len() <= c {
            return reject(0, format!("a clique of size {} fits in {c} colors", vs.len()));
        }
        return Ok(());
    }

    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut fixed: Vec<(usize, usize)> = Vec::new();
    let mut stack: Vec<Frame> = Vec::new();
    let mut root_done = false;
    let conflicts =
        |color: &[Option<usize>], v: usize, col: usize| g.neighbors(v).iter().any(|&u| color[u] == Some(col));

    for (i, step) in r.steps.iter().enumerate() {
        if root_done {
            return reject(i, "steps after the root branch closed".into());
        }
        match *step {
            TraceStep::Clique(_) => return reject(i, "a clique step must stand alone".into()),
            TraceStep::Fix { vertex, color: col } => {
                if !stack.is_empty() || vertex >= n || col >= c || color[vertex].is_some() {
                    return reject(i, "fix must precede branching and name a fresh vertex and valid color".into());
                }
                for &(u, cu) in &fixed {
                    if !g.has_edge(u, vertex) || cu == col {
                        return reject(i, "fixed vertices must form a clique with distinct colors".into());
                    }
                }
                fixed.push((vertex, col));
                color[vertex] = Some(col);
            }
            TraceStep::Push(v) => {
                if v >= n || color[v].is_some() {
                    return reject(i, format!("cannot branch on vertex {v}"));
                }
                match stack.last() {
                    None => {}
                    Some(top) if top.current.is_some() => {}
                    Some(_) => return reject(i, "push must follow a try".into()),
                }
                stack.push(Frame { vertex: v, closed: 0, current: None });
            }
            TraceStep::Try(col) => {
                let Some(top) = stack.last_mut() else {
                    return reject(i, "try outside a branch".into());
                };
                if top.current.is_some() || col >= c || top.closed >> col & 1 == 1 {
                    return reject(i, format!("color {col} cannot be tried here"));
                }
                let v = top.vertex;
                if conflicts(&color, v, col) {
                    return reject(i, format!("color {col} conflicts at vertex {v}"));
                }
                top.current = Some(col);
                color[v] = Some(col);
                if color.iter().all(Option::is_some) {
                    return reject(i, "the trace reaches a proper coloring".into());
                }
            }
            TraceStep::Pop => {
                let Some(top) = stack.pop() else {
                    return reject(i, "pop without a branch".into());
                };
                if top.current.is_some() {
                    return reject(i, "pop while a color is still open".into());
                }
                let v = top.vertex;
                let used: u64 = color.iter().flatten().fold(0, |m, &x| m | 1 << x);
                let closed_unused = top.closed & !used != 0;
                for col in 0..c {
                    let ok = top.closed >> col & 1 == 1
                        || conflicts(&color, v, col)
                        || (used >> col & 1 == 0 && closed_unused);
                    if !ok {
                        return reject(i, format!("color {col} of vertex {v} was never closed"));
                    }
                }
                match stack.last_mut() {
                    Some(parent) => {
                        let col = parent.current.take().expect("child frames follow a try");
                        parent.closed |= 1 << col;
                        color[parent.vertex] = None;
                    }
                    None => root_done = true,
                }
            }
        }
    }
    if !root_done {
        // all vertices fixed without conflict means a coloring exists
        return Err(Error::input("refutation rejected: the root branch is never closed"));
    }
    Ok(())
}
