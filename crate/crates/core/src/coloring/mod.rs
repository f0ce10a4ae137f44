//! Chromatic numbers, homomorphism search, circular chromatic bounds and
//! rainbow faces.

mod chromatic;
mod circular;
mod hom;
mod rainbow;
mod refutation;

pub use chromatic::{chromatic_number, greedy_clique, greedy_coloring, ChromaticResult};
pub use circular::{circular_chromatic, theorem_a_bound, CircularChromatic, TheoremABound, DEFAULT_HOM_BUDGET};
pub use hom::{find_homomorphism, HomOptions, HomOutcome};
pub use rainbow::{enumerate_colorings, rainbow_faces, EnumerationSummary};
pub use refutation::{verify_refutation, Refutation, TraceStep};

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};

/// A proper coloring with colors `0..colors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringCertificate {
    pub coloring: VertexMap,
    pub colors: usize,
}

impl ColoringCertificate {
    pub fn new(g: &Graph, coloring: VertexMap, colors: usize) -> Result<Self> {
        let cert = ColoringCertificate { coloring, colors };
        cert.check(g)?;
        Ok(cert)
    }

    /// Checks that the coloring covers `g`, stays in range and is proper.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.coloring.domain_size() != g.vertex_count() {
            return Err(Error::input(format!(
                "coloring has {} entries for {} vertices",
                self.coloring.domain_size(),
                g.vertex_count()
            )));
        }
        if let Some((v, &c)) = self.coloring.image().iter().enumerate().find(|(_, &c)| c >= self.colors) {
            return Err(Error::input(format!("vertex {v} has color {c} outside 0..{}", self.colors)));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| self.coloring.apply(u) == self.coloring.apply(v)) {
            return Err(Error::input(format!("edge {{{u}, {v}}} is monochromatic")));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::Exact => "exact",
        })
    }
}

/// A rational value with its role; `strict` marks a lower bound that the
/// true value exceeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalBound {
    pub value: Ratio<u64>,
    pub kind: BoundKind,
    pub strict: bool,
}

impl RationalBound {
    pub fn exact(value: Ratio<u64>) -> Self {
        RationalBound { value, kind: BoundKind::Exact, strict: false }
    }

    pub fn lower(value: Ratio<u64>, strict: bool) -> Self {
        RationalBound { value, kind: BoundKind::Lower, strict }
    }

    pub fn upper(value: Ratio<u64>) -> Self {
        RationalBound { value, kind: BoundKind::Upper, strict: false }
    }
}

/// `5/2`, or `4` for integers.
pub fn format_ratio(r: &Ratio<u64>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for RationalBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = format_ratio(&self.value);
        match (self.kind, self.strict) {
            (BoundKind::Exact, _) => write!(f, "= {v}"),
            (BoundKind::Lower, true) => write!(f, "> {v}"),
            (BoundKind::Lower, false) => write!(f, ">= {v}"),
            (BoundKind::Upper, _) => write!(f, "<= {v}"),
        }
    }
}
