//! Reading inputs named on the command line.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use youngs_core::format::{parse_complex, parse_graph};
use youngs_core::{EvenComplex, Graph, GraphFamily, Walk};

use crate::report::RunReport;

/// A graph given as a file (graph or complex format) or as a family.
#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Graph file, or complex file whose skeleton is used.
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    /// Named family: `complete N`, `cycle N`, `path N` or `circular N M`.
    #[arg(long, num_args = 1..=3, value_name = "WORDS")]
    pub family: Option<Vec<String>>,
}

impl GraphInput {
    pub fn load(&self, report: &mut RunReport) -> Result<Graph> {
        load_graph(self.graph.as_deref(), self.family.as_deref(), report)
    }
}

pub fn load_graph(path: Option<&Path>, family: Option<&[String]>, report: &mut RunReport) -> Result<Graph> {
    match (path, family) {
        (Some(p), _) => {
            let text = read(p, report)?;
            let parsed = if text.lines().any(|l| l.trim_start().starts_with("cells:")) {
                parse_complex(&text).map(|x| x.skeleton().clone())
            } else {
                parse_graph(&text)
            };
            parsed.with_context(|| format!("reading {}", p.display()))
        }
        (None, Some(words)) => {
            let fam: GraphFamily = words.join(" ").parse()?;
            report.set("family", fam);
            Ok(fam.build()?)
        }
        (None, None) => bail!("give a graph with --graph FILE or --family ..."),
    }
}

pub fn read(path: &Path, report: &mut RunReport) -> Result<String> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    report.input(&path.display().to_string(), &bytes);
    String::from_utf8(bytes).map_err(|_| anyhow!("{} is not UTF-8 text", path.display()))
}

pub fn load_complex(path: &Path, report: &mut RunReport) -> Result<EvenComplex> {
    let text = read(path, report)?;
    parse_complex(&text).with_context(|| format!("reading {}", path.display()))
}

/// A valid complex, or an error listing its violations.
pub fn load_valid_complex(path: &Path, report: &mut RunReport) -> Result<EvenComplex> {
    let x = load_complex(path, report)?;
    let violations = x.validate();
    if !violations.is_empty() {
        let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
        bail!("{} is not a valid complex: {}", path.display(), list.join("; "));
    }
    Ok(x)
}

/// `0,2,4,1,3,0` (commas or spaces).
pub fn parse_vertices(s: &str) -> Result<Vec<usize>> {
    let v: Vec<usize> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse().map_err(|_| anyhow!("bad vertex `{p}` in `{s}`")))
        .collect::<Result<_>>()?;
    if v.is_empty() {
        bail!("empty walk");
    }
    Ok(v)
}

pub fn parse_walk(g: &Graph, s: &str) -> Result<Walk> {
    Ok(Walk::new(g, parse_vertices(s)?)?)
}

/// `3`, or the inclusive range `2..6`.
pub fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let num = |p: &str| p.trim().parse::<usize>().map_err(|_| anyhow!("bad number `{p}` in range `{s}`"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                bail!("empty range `{s}`");
            }
            Ok(a..=b)
        }
        None => {
            let a = num(s)?;
            Ok(a..=a)
        }
    }
}

pub fn write_output(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_walks() {
        assert_eq!(parse_range("2..6").unwrap(), 2..=6);
        assert_eq!(parse_range("2..=6").unwrap(), 2..=6);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("6..2").is_err());
        assert_eq!(parse_vertices("0,2, 4 1").unwrap(), vec![0, 2, 4, 1]);
        assert!(parse_vertices(",").is_err());
    }
}
