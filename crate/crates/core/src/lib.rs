//! Numerical workbench for the modular theory of real standard subspaces.
//!
//! The crate works entirely in finite dimension. Standard subspaces of `C^n`
//! come with their Tomita operator, modular conjugation and modular operator;
//! wedge geometry is handled through `SL(2,C)` and its covering map onto the
//! proper orthochronous Lorentz group; finite orbit models on mass shells carry
//! discretized scalar representations on which the modularity condition
//! (membership of the wedge reflection in the bicommutant of the wedge
//! stabilizer) can be decided numerically.
//!
//! Module map:
//!
//! - [`linalg`]: dense complex operators, antilinear operators, Hermitian
//!   spectral calculus, nullspaces and commutants.
//! - [`subspace`]: real subspaces, standard subspaces and their modular data.
//! - [`lorentz`]: Minkowski space, `SL(2,C)`, boosts, rotations and wedges.
//! - [`momentum`]: mass shells, orbit models and the modularity check.
//! - [`spin`]: spin matrices, Wigner `D` matrices and Clebsch-Gordan counting.
//! - [`net`]: covariant nets of standard subspaces built on finite models.
//! - [`split`]: spectral diagnostics of modular operators.
//! - [`io`]: the JSON file formats shared by the command-line tool.

pub mod error;
pub mod io;
pub mod linalg;
pub mod lorentz;
pub mod momentum;
pub mod net;
pub mod random;
pub mod spin;
pub mod split;
pub mod subspace;

pub use error::{Error, Result};
pub use linalg::{AntilinearOperator, ComplexOperator, C64, DEFAULT_TOL};
