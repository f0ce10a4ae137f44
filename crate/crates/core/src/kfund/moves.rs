//! Elementary k-homotopy moves on walks and replayable move scripts.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Walk};

/// One elementary move. Positions index the vertex sequence `x_0 .. x_len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KHomotopyMove {
    /// `(.., x_p, ..)` becomes `(.., x_p, y, x_p, ..)`.
    Insert { pos: usize, vertex: usize },
    /// `(.., x_p, y, x_p, ..)` becomes `(.., x_p, ..)`.
    Delete { pos: usize },
    /// Overwrites `x_pos .. x_{pos+j-1}` with the given vertices; endpoints
    /// stay fixed and fewer than `k` positions may change.
    Substitute { pos: usize, vertices: Vec<usize> },
}

impl fmt::Display for KHomotopyMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KHomotopyMove::Insert { pos, vertex } => write!(f, "A+ {pos} {vertex}"),
            KHomotopyMove::Delete { pos } => write!(f, "A- {pos}"),
            KHomotopyMove::Substitute { pos, vertices } => {
                write!(f, "B {pos}")?;
                for v in vertices {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

impl KHomotopyMove {
    /// The move undoing `self` when `self` is applied to `before`.
    pub fn inverse(&self, before: &[usize]) -> KHomotopyMove {
        match self {
            KHomotopyMove::Insert { pos, .. } => KHomotopyMove::Delete { pos: *pos },
            KHomotopyMove::Delete { pos } => KHomotopyMove::Insert { pos: *pos, vertex: before[pos + 1] },
            KHomotopyMove::Substitute { pos, vertices } => {
                KHomotopyMove::Substitute { pos: *pos, vertices: before[*pos..pos + vertices.len()].to_vec() }
            }
        }
    }
}

fn illegal(msg: String) -> Error {
    Error::input(format!("illegal move: {msg}"))
}

/// Applies a move, checking the clause it relies on and re-verifying that
/// the result is a walk with the same endpoints.
pub fn apply_move(g: &Graph, w: &Walk, mv: &KHomotopyMove, k: usize) -> Result<Walk> {
    let x = w.vertices();
    let len = w.len();
    let out = match mv {
        KHomotopyMove::Insert { pos, vertex } => {
            if *pos > len {
                return Err(illegal(format!("insertion position {pos} beyond walk length {len}")));
            }
            if !g.has_edge(x[*pos], *vertex) {
                return Err(illegal(format!("{vertex} is not a neighbor of {}", x[*pos])));
            }
            let mut v = x[..=*pos].to_vec();
            v.push(*vertex);
            v.extend_from_slice(&x[*pos..]);
            v
        }
        KHomotopyMove::Delete { pos } => {
            if pos + 2 > len {
                return Err(illegal(format!("deletion at {pos} needs two further steps")));
            }
            if x[*pos] != x[pos + 2] {
                return Err(illegal(format!("positions {pos} and {} differ, not a backtrack", pos + 2)));
            }
            let mut v = x[..=*pos].to_vec();
            v.extend_from_slice(&x[pos + 3..]);
            v
        }
        KHomotopyMove::Substitute { pos, vertices } => {
            let j = vertices.len();
            if *pos == 0 || j == 0 || pos + j > len {
                return Err(illegal(format!("substitution window {pos}..{} must avoid both endpoints", pos + j)));
            }
            let changed = (0..j).filter(|&i| x[pos + i] != vertices[i]).count();
            if changed >= k {
                return Err(illegal(format!("substitution changes {changed} positions, needs fewer than {k}")));
            }
            let mut v = x.to_vec();
            v[*pos..pos + j].copy_from_slice(vertices);
            v
        }
    };
    Walk::new(g, out).map_err(|e| illegal(format!("result is not a walk ({e})")))
}

/// A move sequence claimed to carry `start` to `target` under parameter `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveScript {
    pub k: usize,
    pub start: Vec<usize>,
    pub target: Vec<usize>,
    pub moves: Vec<KHomotopyMove>,
}

impl MoveScript {
    /// Replays every move and checks that the final walk equals the target.
    pub fn replay(&self, g: &Graph) -> Result<Walk> {
        let mut w = Walk::new(g, self.start.clone())?;
        for (i, mv) in self.moves.iter().enumerate() {
            w = apply_move(g, &w, mv, self.k).map_err(|e| Error::input(format!("move {} `{mv}`: {e}", i + 1)))?;
        }
        if w.vertices() != self.target.as_slice() {
            return Err(Error::input(format!("script ends at {w}, not at the target")));
        }
        Ok(w)
    }

    /// The reverse script, carrying `target` back to `start`.
    pub fn reversed(&self, g: &Graph) -> Result<MoveScript> {
        let mut w = Walk::new(g, self.start.clone())?;
        let mut inverses = Vec::with_capacity(self.moves.len());
        for mv in &self.moves {
            inverses.push(mv.inverse(w.vertices()));
            w = apply_move(g, &w, mv, self.k)?;
        }
        inverses.reverse();
        Ok(MoveScript { k: self.k, start: self.target.clone(), target: self.start.clone(), moves: inverses })
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for MoveScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k {}", self.k)?;
        writeln!(f, "start {}", join(&self.start))?;
        writeln!(f, "target {}", join(&self.target))?;
        for mv in &self.moves {
            writeln!(f, "{mv}")?;
        }
        Ok(())
    }
}

impl FromStr for MoveScript {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let perr = |line: usize, msg: String| Error::Parse { line, msg };
        let mut k = None;
        let mut start = None;
        let mut target = None;
        let mut moves = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let head = parts.next().unwrap_or_default();
            let nums = parts
                .map(|p| p.parse::<usize>().map_err(|_| perr(i + 1, format!("expected an integer, found `{p}`"))))
                .collect::<Result<Vec<_>>>()?;
            match (head, nums.as_slice()) {
                ("k", [x]) => k = Some(*x),
                ("start", v) if !v.is_empty() => start = Some(v.to_vec()),
                ("target", v) if !v.is_empty() => target = Some(v.to_vec()),
                ("A+", [pos, vertex]) => moves.push(KHomotopyMove::Insert { pos: *pos, vertex: *vertex }),
                ("A-", [pos]) => moves.push(KHomotopyMove::Delete { pos: *pos }),
                ("B", [pos, rest @ ..]) if !rest.is_empty() => {
                    moves.push(KHomotopyMove::Substitute { pos: *pos, vertices: rest.to_vec() })
                }
                _ => return Err(perr(i + 1, format!("unrecognized script line `{line}`"))),
            }
        }
        let missing = |what: &str| perr(s.lines().count(), format!("missing `{what}` line"));
        Ok(MoveScript {
            k: k.ok_or_else(|| missing("k"))?,
            start: start.ok_or_else(|| missing("start"))?,
            target: target.ok_or_else(|| missing("target"))?,
            moves,
        })
    }
}
