use std::path::Path;

use anyhow::{bail, Context, Result};
use youngs_core::coloring::{
    chromatic_number, circular_chromatic, find_homomorphism, format_ratio, verify_refutation, CircularChromatic,
    HomOptions, HomOutcome, Refutation,
};
use youngs_core::format::write_coloring;
use youngs_core::homology::neighborhood_complex;
use youngs_core::kfund::{expected_circular_pi1k, pi1k_abelianization, MoveScript};
use youngs_core::{is_homomorphism, Ring};

use crate::input::{load_graph, parse_range, read, write_output, GraphInput};
use crate::report::{RunReport, Verdict};

fn list(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn chi(
    input: &GraphInput,
    limit: Option<u64>,
    refutation_out: Option<&Path>,
    coloring_out: Option<&Path>,
    report: &mut RunReport,
) -> Result<()> {
    let g = input.load(report)?;
    let res = chromatic_number(&g, limit)?;
    res.certificate.check(&g)?;
    report.set("chi", res.chi);
    report.set("nodes", res.nodes);
    report.set("coloring", list(res.certificate.coloring.image()));
    match &res.refutation {
        Some(r) => {
            verify_refutation(&g, r).context("own refutation failed verification")?;
            report.set("refutation", format!("{} colors impossible, {} steps, verified", r.colors, r.steps.len()));
            if let Some(p) = refutation_out {
                write_output(p, &r.to_string())?;
            }
        }
        None => report.set("refutation", "not needed"),
    }
    if let Some(p) = coloring_out {
        write_output(p, &write_coloring(&res.certificate))?;
    }
    Ok(())
}

pub fn chic(input: &GraphInput, max_den: Option<u64>, budget: u64, report: &mut RunReport) -> Result<()> {
    let g = input.load(report)?;
    let max_den = max_den.unwrap_or_else(|| (g.vertex_count().saturating_sub(1) / 2).max(1) as u64);
    report.set("max_den", max_den);
    let res = circular_chromatic(&g, max_den, budget)?;
    match &res {
        CircularChromatic::Exact { value, .. } => {
            report.set("chi_c", format_ratio(value));
            report.set("status", "exact");
        }
        CircularChromatic::Bracket { lower, upper, .. } => {
            report.set("chi_c.lower", lower);
            report.set("chi_c.upper", upper);
            report.set("status", "bracket");
        }
    }
    report.set("witness", list(res.witness().image()));
    Ok(())
}

type GraphSource<'a> = (Option<&'a Path>, Option<&'a [String]>);

pub fn hom(
    source: GraphSource<'_>,
    target: GraphSource<'_>,
    budget: u64,
    vertex_transitive: bool,
    report: &mut RunReport,
) -> Result<()> {
    let g = load_graph(source.0, source.1, report).context("source graph")?;
    let h = load_graph(target.0, target.1, report).context("target graph")?;
    let opts = HomOptions { node_budget: budget, target_vertex_transitive: vertex_transitive };
    match find_homomorphism(&g, &h, opts) {
        HomOutcome::Found(f) => {
            if !is_homomorphism(&f, &g, &h)? {
                bail!("search returned a map that is not a homomorphism");
            }
            report.set("homomorphism", "found");
            report.set("map", list(f.image()));
        }
        HomOutcome::NoneExists => report.set("homomorphism", "none"),
        HomOutcome::Indeterminate { nodes } => {
            report.set("homomorphism", "indeterminate");
            report.set("nodes", nodes);
        }
    }
    Ok(())
}

pub fn nbhd(input: &GraphInput, j: &str, report: &mut RunReport) -> Result<()> {
    let g = input.load(report)?;
    for j in parse_range(j)? {
        let n = neighborhood_complex(&g, j)?;
        report.set(format!("nbhd.j{j}.edges"), n.edges().len());
        report.set(format!("nbhd.j{j}.triangles"), n.triangles().len());
        report.set(format!("nbhd.j{j}.h1"), n.h1(Ring::Integers).group());
    }
    Ok(())
}

pub fn pi1k(
    input: &GraphInput,
    k: &str,
    basepoint: usize,
    expect: Option<&[String]>,
    cell_budget: usize,
    report: &mut RunReport,
) -> Result<()> {
    let g = input.load(report)?;
    if !g.is_connected() {
        bail!("pi1k needs a connected graph");
    }
    let expect = match expect {
        None => None,
        Some([kind, n, m]) if kind == "circular" => Some((
            n.parse::<usize>().context("--expect circular N M")?,
            m.parse::<usize>().context("--expect circular N M")?,
        )),
        Some(other) => bail!("unknown expectation `{}` (use `circular N M`)", other.join(" ")),
    };
    let mut mismatches = Vec::new();
    for k in parse_range(k)? {
        let got = pi1k_abelianization(&g, k, basepoint, cell_budget)?;
        report.set(format!("pi1k.k{k}"), got.group());
        if let Some((n, m)) = expect {
            let want = expected_circular_pi1k(n, m, k)?;
            if want != got {
                mismatches.push(format!("k={k}: expected {}, got {}", want.group(), got.group()));
            }
        }
    }
    if let Some((n, m)) = expect {
        report.verdict(
            "expect",
            if mismatches.is_empty() {
                Verdict::Pass(format!("matches the circular {n}/{m} pattern"))
            } else {
                Verdict::Violation(mismatches.join("; "))
            },
        );
    }
    Ok(())
}

pub fn replay(
    input: &GraphInput,
    script: Option<&Path>,
    refutation: Option<&Path>,
    report: &mut RunReport,
) -> Result<()> {
    let g = input.load(report)?;
    match (script, refutation) {
        (Some(p), _) => {
            let s: MoveScript = read(p, report)?.parse().with_context(|| format!("reading {}", p.display()))?;
            let end = s.replay(&g)?;
            report.set("moves", s.moves.len());
            report.set("k", s.k);
            report.set("end", end);
            report.set("script", "valid");
        }
        (None, Some(p)) => {
            let r: Refutation = read(p, report)?.parse().with_context(|| format!("reading {}", p.display()))?;
            verify_refutation(&g, &r)?;
            report.set("colors", r.colors);
            report.set("steps", r.steps.len());
            report.set("refutation", "valid");
        }
        (None, None) => bail!("give --script FILE or --refutation FILE"),
    }
    Ok(())
}
