use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{CellClass, EvenComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the number of distinct cell classes `build_x_k` will hold.
pub const DEFAULT_CELL_BUDGET: usize = 2_000_000;

/// `X_k(G)`: the skeleton `g` with one 2-cell per class (up to rotation,
/// reversal and basepoint) of closed walks of length `2i`, `2 <= i <= k`.
pub fn build_x_k(g: &Graph, k: usize, cell_budget: usize) -> Result<EvenComplex> {
    if k < 2 {
        return Err(Error::input(format!("X_k needs k >= 2, got {k}")));
    }
    let classes = closed_walk_classes(g, 2, k, cell_budget)?;
    Ok(EvenComplex::new(g.clone(), classes.into_iter().map(|c| c.closed_walk()).collect()))
}

/// Classes of closed walks of length `2i` for `min_half <= i <= max_half`,
/// sorted.
///
/// Walks are generated depth-first from each basepoint `b` through vertices
/// `>= b` only, so every class is produced from its smallest vertex. Basepoints
/// run in parallel; the merge is ordered and does not depend on scheduling.
pub fn closed_walk_classes(g: &Graph, min_half: usize, max_half: usize, cell_budget: usize) -> Result<Vec<CellClass>> {
    let per_base: Vec<Result<BTreeSet<CellClass>>> = (0..g.vertex_count())
        .into_par_iter()
        .map(|b| classes_from(g, b, 2 * min_half, 2 * max_half, cell_budget))
        .collect();
    let mut all = BTreeSet::new();
    for set in per_base {
        all.extend(set?);
        if all.len() > cell_budget {
            return Err(Error::Resource {
                what: format!("cell budget {cell_budget} for closed-walk enumeration"),
                reached: all.len() as u64,
            });
        }
    }
    Ok(all.into_iter().collect())
}

fn classes_from(g: &Graph, base: usize, min_len: usize, max_len: usize, budget: usize) -> Result<BTreeSet<CellClass>> {
    // distances back to `base` inside the subgraph on vertices >= base
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    dist[base] = 0;
    queue.push_back(base);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if w >= base && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }

    let mut out = BTreeSet::new();
    let mut walk = vec![base];
    // stack of (vertex, index of next neighbor to try)
    let mut stack: Vec<(usize, usize)> = vec![(base, 0)];
    while let Some(&mut (u, ref mut next)) = stack.last_mut() {
        let depth = walk.len() - 1;
        let nbrs = g.neighbors(u);
        let mut advanced = false;
        while *next < nbrs.len() {
            let w = nbrs[*next];
            *next += 1;
            if w < base || dist[w] == usize::MAX || dist[w] > max_len - depth - 1 {
                continue;
            }
            walk.push(w);
            let d = depth + 1;
            if w == base && d >= min_len && d % 2 == 0 {
                out.insert(CellClass::of_closed(&walk));
                if out.len() > budget {
                    return Err(Error::Resource {
                        what: format!("cell budget {budget} for closed-walk enumeration"),
                        reached: out.len() as u64,
                    });
                }
            }
            if d < max_len {
                stack.push((w, 0));
                advanced = true;
                break;
            }
            walk.pop();
        }
        if !advanced {
            stack.pop();
            if !stack.is_empty() {
                walk.pop();
            }
        }
    }
    Ok(out)
}
