//! Special functions, quadrature, root finding and derivative-free
//! minimization used by the state families and the Bell optimizer.
//!
//! Everything here is a pure function of its inputs.

mod faddeeva;
mod quadrature;
mod roots;
mod simplex;

pub(crate) use faddeeva::w;
pub use faddeeva::{erf_c, erfi_c, faddeeva};
pub use quadrature::{gauss_hermite, QuadratureRule};
pub use roots::bisect;
pub use simplex::{minimize_simplex, minimize_simplex_with, SimplexOptions, SimplexResult};

/// Complex scalar used throughout the crate.
pub type ComplexValue = num_complex::Complex64;
