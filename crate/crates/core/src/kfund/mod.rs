//! k-homotopy of walks, abelianized k-fundamental groups, k-coverings and
//! the line cover of circular complete graphs.

mod cover;
mod covering;
mod homotopy;
mod moves;
mod pi1k;

pub use cover::{CoverLine, CoverVertex, CoverWindow};
pub use covering::{is_k_covering, is_k_covering_at, CoveringFailure};
pub use homotopy::{
    contraction_moves, free_reduction, k_homotopic, parity, HomotopyOptions, InvariantCertificate, KHomotopy,
};
pub use moves::{apply_move, KHomotopyMove, MoveScript};
pub use pi1k::{expected_circular_pi1k, pi1k_abelianization};
