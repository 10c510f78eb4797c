//! Simulation of CHSH Bell tests with lossy multi-photon entangled optical
//! states: polarization states `(|n_H, n_V> + |n_V, n_H>)/sqrt(2)`, entangled
//! coherent states and entangled thermal states.
//!
//! Each state family provides a correlation function `E(theta_a, theta_b)` for
//! local rotations followed by dichotomic measurements, under photon loss
//! before (`eta1`) and after (`eta2`) the rotations. The [`bell`] module
//! maximizes the CHSH combination over the four angles and searches for the
//! detection-efficiency threshold at which violation disappears.

pub mod bell;
pub mod catstates;
pub mod error;
pub mod fockspace;
pub mod numerics;
pub mod thermal;

pub use error::{Error, Result};
pub use fockspace::{LossPlacement, Side};
pub use numerics::ComplexValue;
