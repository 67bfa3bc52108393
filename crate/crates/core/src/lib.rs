//! Bound states of the Manning-Rosen potential
//!
//! ```text
//! V(r) = ħ²/(2μb²) · [ α(α−1) e^{−2r/b} / (1−e^{−r/b})²  −  A e^{−r/b} / (1−e^{−r/b}) ]
//! ```
//!
//! The crate provides
//!
//! - [`potential`]: the potential, its minimum and curvature, and the
//!   centrifugal-term approximations (exact `1/r²`, Greene-Aldrich, shifted);
//! - [`spectrum`]: the closed-form energy levels under the Greene-Aldrich
//!   approximation, critical couplings and the Hulthén/Coulomb limits;
//! - [`wavefunction`]: Jacobi polynomials, normalized radial wavefunctions and
//!   the Beta-function integrals behind the normalization constant;
//! - [`oracle`]: an independent finite-difference eigensolver for the radial
//!   equation, used to cross-check the closed form;
//! - [`units`]: atomic units, the eV/pm molecular preset and the diatomic
//!   molecule registry;
//! - [`cli`]: table, figure and comparison generators behind the `mrspec`
//!   binary.

pub mod cli;
pub mod error;
pub mod oracle;
pub mod potential;
pub mod quadrature;
pub mod spectrum;
pub mod units;
pub mod wavefunction;

pub use error::{Error, Result};
pub use potential::{CdForm, CentrifugalScheme, PotentialParams};
pub use spectrum::{NuSolution, QuantumState};
pub use units::{Molecule, MoleculeRegistry, UnitSystem};
pub use wavefunction::RadialWavefunction;
