use std::path::Path;

use anyhow::{bail, Result};
use youngs_core::kfund::{k_homotopic, CoverLine, CoverVertex, CoveringFailure, HomotopyOptions, KHomotopy};
use youngs_core::Walk;

use crate::input::{parse_walk, write_output, GraphInput};
use crate::report::RunReport;

#[allow(clippy::too_many_arguments)]
pub fn reduce(
    input: &GraphInput,
    walk: &str,
    target: Option<&str>,
    k: usize,
    budget: usize,
    state_cap: usize,
    cover: Option<&[usize]>,
    script_out: Option<&Path>,
    report: &mut RunReport,
) -> Result<()> {
    let g = input.load(report)?;
    let w1 = parse_walk(&g, walk)?;
    let w2 = match target {
        Some(t) => parse_walk(&g, t)?,
        None => Walk::trivial(w1.start()),
    };
    let cover = match cover {
        Some(&[n, m]) => Some(CoverLine::new(n, m)?),
        Some(_) => bail!("--cover takes N M"),
        None => None,
    };
    let opts = HomotopyOptions { budget, state_cap, cover, ..HomotopyOptions::default() };
    report.set("walk", &w1);
    report.set("target", &w2);
    report.set("k", k);
    match k_homotopic(&g, &w1, &w2, k, &opts)? {
        KHomotopy::Yes(script) => {
            script.replay(&g)?;
            report.set("k_homotopic", "yes");
            report.set("moves", script.moves.len());
            let moves: Vec<String> = script.moves.iter().map(ToString::to_string).collect();
            report.set("script", moves.join("; "));
            if let Some(p) = script_out {
                write_output(p, &script.to_string())?;
            }
        }
        KHomotopy::No(cert) => {
            report.set("k_homotopic", "no");
            report.set("invariant", cert);
        }
        KHomotopy::Unknown { explored } => {
            report.set("k_homotopic", "unknown");
            report.set("explored", explored);
        }
    }
    Ok(())
}

pub fn lift(n: usize, m: usize, walk: &str, start: Option<i64>, report: &mut RunReport) -> Result<()> {
    let cover = CoverLine::new(n, m)?;
    let g = cover.base_graph();
    let w = parse_walk(&g, walk)?;
    let start = match start {
        None => cover.canonical_lift(w.start()),
        Some(q) => [true, false]
            .into_iter()
            .map(|positive| CoverVertex { q, positive })
            .find(|&v| cover.project(v) == Some(w.start()))
            .ok_or_else(|| anyhow::anyhow!("no cover vertex with numerator {q} lies over {}", w.start()))?,
    };
    let lifted = cover.lift_walk(&w, start)?;
    let numerators: Vec<String> = lifted.iter().map(|v| v.q.to_string()).collect();
    report.set("walk", &w);
    report.set("lift", numerators.join(","));
    report.set("start", start);
    report.set("end", lifted.last().expect("nonempty lift"));
    if w.is_closed() {
        let delta = lifted.last().expect("nonempty lift").q - start.q;
        report.set("winding", delta / n as i64);
    }
    Ok(())
}

pub fn covering(n: usize, m: usize, k: usize, report: &mut RunReport) -> Result<()> {
    let cover = CoverLine::new(n, m)?;
    if n < 4 * m {
        report.set("predicted_order", cover.predicted_covering_order());
    }
    let window = cover.window(k)?;
    report.set("window_vertices", window.vertices.len());
    match window.check_interior(k)? {
        None => report.set("k_covering", "yes"),
        Some(failure) => {
            report.set("k_covering", "no");
            let at = |i: usize| window.vertices[i].to_string();
            let text = match failure {
                CoveringFailure::NotSurjective { vertex, missing } => {
                    format!("neighbors of {} miss base vertex {missing}", at(vertex))
                }
                CoveringFailure::Collision { vertex, radius, a, b } => {
                    format!("N^{radius}({}) contains {} and {} with the same image", at(vertex), at(a), at(b))
                }
            };
            report.set("failure", text);
        }
    }
    Ok(())
}
