use std::ops::ControlFlow;
use std::path::Path;

use anyhow::{bail, Context, Result};
use youngs_core::coloring::{
    chromatic_number, enumerate_colorings, format_ratio, rainbow_faces, theorem_a_bound, verify_refutation,
    TheoremABound,
};
use youngs_core::format::{parse_coloring, write_complex};
use youngs_core::graph::{bipartition, Bipartition};
use youngs_core::homology::{boundary_matrices, CellularChains};
use youngs_core::{ColoringCertificate, ComplexFamily, Error, EvenComplex, Ring, VertexMap};

use crate::input::{load_complex, load_valid_complex, parse_walk, read, write_output};
use crate::report::{RunReport, Verdict};
use crate::{Check, FamilyName, RingChoice};

fn family_of(name: FamilyName, m: Option<usize>, n: Option<usize>, d: Option<usize>) -> Result<ComplexFamily> {
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("{name:?} needs --{flag}"));
    Ok(match name {
        FamilyName::SphereGrid => ComplexFamily::SphereGrid { m: need(m, "m")?, n: need(n, "n")? },
        FamilyName::TorusGrid => ComplexFamily::TorusGrid { m: need(m, "m")?, n: need(n, "n")? },
        FamilyName::KleinGrid => ComplexFamily::KleinGrid { m: need(m, "m")?, n: need(n, "n")? },
        FamilyName::ProjectiveGrid => ComplexFamily::ProjectiveGrid { m: need(m, "m")?, n: need(n, "n")? },
        FamilyName::K4Projective => ComplexFamily::K4Projective,
        FamilyName::CubeBoundary => ComplexFamily::CubeBoundary { d: need(d, "d")? },
        FamilyName::CubicalRp => ComplexFamily::CubicalRp { d: need(d, "d")? },
    })
}

fn set_counts(x: &EvenComplex, report: &mut RunReport) {
    report.set("vertices", x.vertex_count());
    report.set("edges", x.edge_count());
    report.set("cells", x.cell_count());
    report.set("euler", x.euler_characteristic());
}

pub fn gen(
    name: FamilyName,
    m: Option<usize>,
    n: Option<usize>,
    d: Option<usize>,
    out: Option<&Path>,
    report: &mut RunReport,
) -> Result<()> {
    let family = family_of(name, m, n, d)?;
    report.set("family", family);
    let x = youngs_core::complex::generate(family)?;
    set_counts(&x, report);
    let text = write_complex(&x);
    report.set("sha256", crate::report::sha256_hex(text.as_bytes()));
    match out {
        Some(path) => {
            write_output(path, &text)?;
            report.set("out", path.display());
        }
        None => report.payload = Some(text),
    }
    Ok(())
}

pub fn validate(path: &Path, report: &mut RunReport) -> Result<()> {
    let x = load_complex(path, report)?;
    set_counts(&x, report);
    let violations = x.validate();
    report.set("violations", violations.len());
    for (i, v) in violations.iter().enumerate() {
        report.set(format!("violation.{i}"), v);
    }
    if !violations.is_empty() {
        bail!("{} is not a valid complex", path.display());
    }
    report.set("quadrangulated", x.is_quadrangulated());
    Ok(())
}

pub fn homology(path: &Path, ring: RingChoice, export: Option<&Path>, report: &mut RunReport) -> Result<()> {
    let x = load_valid_complex(path, report)?;
    set_counts(&x, report);
    let chains = CellularChains::new(&x)?;
    if matches!(ring, RingChoice::Z | RingChoice::Both) {
        report.set("h1.z", chains.h1(Ring::Integers).group());
    }
    if matches!(ring, RingChoice::Z2 | RingChoice::Both) {
        report.set("h1.z2", chains.h1(Ring::Z2).group());
    }
    if let Some(prefix) = export {
        let (d1, d2) = boundary_matrices(&x, Ring::Integers)?;
        for (name, m) in [("d1", d1), ("d2", d2)] {
            let file = format!("{}.{name}.txt", prefix.display());
            write_output(Path::new(&file), &m.to_triplets())?;
            report.set(format!("export.{name}"), file);
        }
    }
    Ok(())
}

/// Facts shared by the torsion, youngs, rainbow and bound checks.
struct Analysis {
    x: EvenComplex,
    chains: CellularChains,
    odd: Option<youngs_core::Walk>,
    torsion_odd: Option<TheoremABound>,
}

impl Analysis {
    fn new(x: EvenComplex) -> Result<Self> {
        let chains = CellularChains::new(&x)?;
        let odd = match bipartition(x.skeleton()) {
            Bipartition::Bipartite(_) => None,
            Bipartition::OddWalk(w) => Some(w),
        };
        let torsion_odd = theorem_a_bound(&x)?;
        Ok(Analysis { x, chains, odd, torsion_odd })
    }

    /// Hypotheses shared by the chromatic and rainbow predictions.
    fn why_inapplicable(&self) -> Option<&'static str> {
        if self.torsion_odd.is_none() {
            Some("no odd closed walk with torsion class")
        } else if !self.x.is_quadrangulated() {
            Some("not quadrangulated")
        } else {
            None
        }
    }

    fn report_torsion(&self, report: &mut RunReport) -> Result<()> {
        let Some(w) = &self.odd else {
            report.set("torsion.odd_walk", "none");
            report.verdict("torsion", Verdict::Pass("no odd walk".into()));
            return Ok(());
        };
        report.set("torsion.odd_walk", w);
        report.set("torsion.odd_walk_is_torsion", yes_no(self.chains.is_torsion_class(w)?));
        match &self.torsion_odd {
            Some(t) => report.set("torsion.torsion_odd_walk", &t.witness),
            None => report.set("torsion.torsion_odd_walk", "none"),
        }
        let nonzero = self.chains.z2_class_nonzero(w)?;
        report.set("torsion.odd_walk_z2_nonzero", yes_no(nonzero));
        report.verdict(
            "torsion",
            if nonzero {
                Verdict::Pass("odd walk has nonzero Z2 class".into())
            } else {
                Verdict::Violation(format!("odd walk {w} is zero in H1(X; Z2)"))
            },
        );
        Ok(())
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn torsion(path: &Path, walk: Option<&str>, report: &mut RunReport) -> Result<()> {
    let x = load_valid_complex(path, report)?;
    match walk {
        Some(s) => {
            let chains = CellularChains::new(&x)?;
            let w = parse_walk(x.skeleton(), s)?;
            if !w.is_closed() {
                bail!("walk {w} is not closed");
            }
            let odd = w.len() % 2 == 1;
            report.set("walk", &w);
            report.set("odd", yes_no(odd));
            report.set("torsion", yes_no(chains.is_torsion_class(&w)?));
            let nonzero = chains.z2_class_nonzero(&w)?;
            report.set("z2_nonzero", yes_no(nonzero));
            if odd {
                report.verdict(
                    "torsion",
                    if nonzero {
                        Verdict::Pass("odd walk has nonzero Z2 class".into())
                    } else {
                        Verdict::Violation(format!("odd walk {w} is zero in H1(X; Z2)"))
                    },
                );
            }
        }
        None => Analysis::new(x)?.report_torsion(report)?,
    }
    Ok(())
}

pub fn verify(path: &Path, checks: &[Check], max_colors: usize, budget: u64, report: &mut RunReport) -> Result<()> {
    let all = [Check::Homology, Check::Torsion, Check::Youngs, Check::Rainbow, Check::Bound];
    let checks = if checks.is_empty() { &all[..] } else { checks };
    let wants = |c: Check| checks.contains(&c);
    let x = load_valid_complex(path, report)?;
    set_counts(&x, report);
    report.set("quadrangulated", yes_no(x.is_quadrangulated()));
    let a = Analysis::new(x)?;
    let g = a.x.skeleton();

    if wants(Check::Homology) {
        let hz2 = a.chains.h1(Ring::Z2);
        report.set("h1.z", a.chains.h1(Ring::Integers).group());
        report.set("h1.z2", hz2.group());
        let bipartite = a.odd.is_none();
        report.verdict(
            "homology",
            if hz2.is_trivial() && !bipartite {
                Verdict::Violation("H1(X; Z2) = 0 but the skeleton is not bipartite".into())
            } else {
                Verdict::Pass(format!("bipartite: {}", yes_no(bipartite)))
            },
        );
    }
    if wants(Check::Torsion) {
        a.report_torsion(report)?;
    }

    // (lower, upper) bounds on the chromatic number
    let mut chi_bounds = None;
    if wants(Check::Youngs) || wants(Check::Bound) {
        chi_bounds = Some(match chromatic_number(g, Some(budget)) {
            Ok(res) => {
                if let Some(r) = &res.refutation {
                    verify_refutation(g, r).context("own refutation failed verification")?;
                    report.set("youngs.refutation", format!("verified, {} steps", r.steps.len()));
                }
                res.certificate.check(g)?;
                report.set("youngs.chi", res.chi);
                report.set("youngs.coloring", list(res.certificate.coloring.image()));
                (res.chi, res.chi)
            }
            Err(Error::ChromaticBudget { lower, upper, nodes }) => {
                report.set("youngs.chi", format!("between {lower} and {upper} ({nodes} nodes)"));
                (lower, upper)
            }
            Err(e) => return Err(e.into()),
        });
    }
    if wants(Check::Youngs) {
        let (lower, upper) = chi_bounds.expect("computed above");
        let v = match a.why_inapplicable() {
            Some(why) => Verdict::Skipped(why.into()),
            None if lower >= 4 => Verdict::Pass(format!("chi {lower} >= 4")),
            None if upper < 4 => Verdict::Violation(format!("chi {upper} < 4")),
            None => Verdict::Skipped(format!("budget exhausted with chi in [{lower}, {upper}]")),
        };
        report.verdict("youngs", v);
    }
    if wants(Check::Rainbow) {
        let v = match a.why_inapplicable() {
            Some(why) => Verdict::Skipped(why.into()),
            None => exhaustive_rainbow(&a.x, max_colors, budget, report)?,
        };
        report.verdict("rainbow", v);
    }
    if wants(Check::Bound) {
        let v = match &a.torsion_odd {
            None => {
                report.set("bound", "inapplicable");
                Verdict::Skipped("inapplicable: no odd closed walk with torsion class".into())
            }
            Some(t) => {
                report.set("bound", t.bound);
                report.set("bound.k", t.k);
                report.set("bound.witness", &t.witness);
                let (_, upper) = chi_bounds.expect("computed above");
                let value = format_ratio(&t.bound.value);
                if t.bound.value > num_rational::Ratio::from_integer(upper as u64) {
                    Verdict::Violation(format!("bound {value} exceeds chi {upper}"))
                } else {
                    Verdict::Pass(format!("bound {value} <= chi {upper}"))
                }
            }
        };
        report.verdict("bound", v);
    }
    Ok(())
}

fn list(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Every proper coloring with at most `max_colors` colors must leave some face
/// rainbow. Budget exhaustion downgrades the verdict to skipped.
fn exhaustive_rainbow(x: &EvenComplex, max_colors: usize, budget: u64, report: &mut RunReport) -> Result<Verdict> {
    let g = x.skeleton();
    let mut min_rainbow = usize::MAX;
    let mut counterexample = None;
    let mut failure = None;
    let summary = enumerate_colorings(g, max_colors, Some(budget), |c| {
        let cert = ColoringCertificate { coloring: VertexMap::new(c.to_vec()), colors: max_colors };
        match rainbow_faces(x, &cert) {
            Ok(faces) => {
                min_rainbow = min_rainbow.min(faces.len());
                if faces.is_empty() {
                    counterexample = Some(c.to_vec());
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            }
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = failure {
        return Err(e.into());
    }
    let summary = match summary {
        Ok(s) => s,
        Err(Error::Resource { reached, .. }) => {
            return Ok(Verdict::Skipped(format!("budget exhausted after {reached} nodes")));
        }
        Err(e) => return Err(e.into()),
    };
    report.set("rainbow.faces", x.cell_count());
    report.set("rainbow.colorings", summary.visited);
    if summary.visited > 0 {
        report.set("rainbow.min_rainbow_faces", min_rainbow);
    }
    Ok(match counterexample {
        Some(c) => Verdict::Violation(format!("coloring {} has no rainbow face", list(&c))),
        None => Verdict::Pass(format!(
            "{} colorings with at most {max_colors} colors, each with a rainbow face",
            summary.visited
        )),
    })
}

pub fn rainbow(
    path: &Path,
    coloring: Option<&Path>,
    max_colors: usize,
    budget: u64,
    report: &mut RunReport,
) -> Result<()> {
    let x = load_valid_complex(path, report)?;
    let a = Analysis::new(x)?;
    match coloring {
        Some(cpath) => {
            let cert = parse_coloring(&read(cpath, report)?).with_context(|| format!("reading {}", cpath.display()))?;
            cert.check(a.x.skeleton())?;
            let faces = rainbow_faces(&a.x, &cert)?;
            report.set("rainbow.count", faces.len());
            report.set("rainbow.faces", list(&faces));
            let v = match a.why_inapplicable() {
                Some(why) => Verdict::Skipped(why.into()),
                None if faces.is_empty() => Verdict::Violation("no rainbow face".into()),
                None => Verdict::Pass(format!("{} rainbow faces", faces.len())),
            };
            report.verdict("rainbow", v);
        }
        None => {
            let v = match a.why_inapplicable() {
                Some(why) => Verdict::Skipped(why.into()),
                None => exhaustive_rainbow(&a.x, max_colors, budget, report)?,
            };
            report.verdict("rainbow", v);
        }
    }
    Ok(())
}
