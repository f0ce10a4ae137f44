//! Exact computations on CW complexes whose 2-cells are attached along even
//! closed walks: cellular homology over `Z` and `Z/2`, chromatic and circular
//! chromatic numbers, rainbow faces, k-homotopy of walks and k-coverings of
//! circular complete graphs.

pub mod error;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{is_homomorphism, Graph, GraphFamily, VertexMap, Walk};
pub mod complex;

pub use complex::{CellClass, ComplexFamily, EvenComplex};
pub mod homology;

pub use homology::{H1Summary, IntMatrix, Ring};
pub mod coloring;

pub use coloring::{ColoringCertificate, RationalBound};
pub mod format;
pub mod kfund;
