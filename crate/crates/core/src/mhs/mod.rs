//! Exact monodromy and filtration data on the dual solution space, and the
//! limits of algebraic families of functionals.
//!
//! All matrices live over Q[tau] with `tau = 2 pi i` kept formal. Filtrations
//! are coordinate subspaces in the dual standard basis.

mod checks;
mod filtration;
mod functional;
mod matrix;
mod monodromy;

pub use checks::{mhs_checks, rescaled_monodromy, MhsReport};
pub use filtration::{
    coordinate_image, limiting_hodge_filtration, span_dim, weight_filtration, Direction, Filtration, FiltrationStep,
};
pub use functional::{
    functional_at_z, limit_functional, twisted_functional_at_z, twisted_functional_routes, DualVector, SymbolM,
    TwistedRoutes,
};
pub use matrix::FormalMatrix;
pub use monodromy::{is_maximally_unipotent, log_monodromy, monodromy_matrix};
