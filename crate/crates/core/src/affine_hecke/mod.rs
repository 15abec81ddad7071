//! The affine Hecke algebra `Ĥ_ℓ(q²)` and its finite-dimensional right modules.

mod constructions;
mod elt;
mod module;

pub use constructions::{
    cherednik_pullback, one_dim_affine, one_dim_finite, regular_module, universal_module,
    zelevinsky_induce, PermBasis,
};
pub use elt::{AffHeckeElt, AffineHecke, Mono};
pub use module::{HeckeKind, RightModule};
