//! Exact computations with affine Hecke algebra modules and their images
//! under Schur–Weyl type functors into quantum affine algebra modules.

pub mod affine_hecke;
pub mod affinization;
pub mod checks;
pub mod classification;
pub mod descriptor;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod modtools;
pub mod par;
pub mod report;
pub mod scalars;
pub mod symgroup;
pub mod uqrep;

pub use error::{Error, Result};
