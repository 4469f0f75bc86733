//! Structure-preserving finite element discretization of thin-plate and
//! beam bending as finite-dimensional port-Hamiltonian systems.
//!
//! The crate assembles block mass matrices, a skew interconnection and
//! boundary/dissipation/load ports for the Euler-Bernoulli beam (cubic
//! Hermite elements) and the Kirchhoff-Love plate (Bogner-Fox-Schmit
//! rectangles), simulates them with energy-consistent integrators and
//! numerically verifies the underlying operator identities.
//!
//! All numerical code is generic over the scalar type through
//! [`scalar::Real`]; concrete `f64` aliases live at the crate root.

pub mod beam;
pub mod error;
pub mod export;
pub mod hermite;
pub mod integrate;
pub mod model;
pub mod phsys;
pub mod plate;
pub mod quadrature;
pub mod reference;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

/// Double-precision aliases for the main entry types.
pub type MaterialParamsF64 = model::MaterialParams<f64>;
pub type Mesh1DF64 = beam::Mesh1D<f64>;
pub type Mesh2DF64 = plate::Mesh2D<f64>;
pub type BeamPhSystemF64 = beam::BeamPhSystem<f64>;
pub type PlatePhSystemF64 = plate::PlatePhSystem<f64>;
pub type AssembledPhSystemF64 = phsys::AssembledPhSystem<f64>;
pub type SimulationTraceF64 = integrate::SimulationTrace<f64>;
