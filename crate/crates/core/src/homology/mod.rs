//! Cellular chain complexes, Smith normal form and first homology.

mod chain;
mod gf2;
mod matrix;
mod simplicial;
mod snf;

pub use chain::{
    boundary_matrices, h1, h1_snf, is_torsion_class, is_torsion_class_snf, lattice_basis, torsion_cycle_lattice,
    walk_chain, z2_class_nonzero, CellularChains, H1Summary, Ring,
};
pub use gf2::{gf2_rank, Gf2Basis};
pub use matrix::IntMatrix;
pub use simplicial::{neighborhood_complex, SimplicialComplex2};
pub use snf::{smith_normal_form, SnfResult};
