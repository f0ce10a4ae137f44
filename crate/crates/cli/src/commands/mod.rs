//! Subcommand implementations. Each one fills a [`RunReport`](crate::report::RunReport).

mod complex;
mod graph;
mod walks;

pub use complex::{gen, homology, rainbow, torsion, validate, verify};
pub use graph::{chi, chic, hom, nbhd, pi1k, replay};
pub use walks::{covering, lift, reduce};
