//! Covariant nets of standard subspaces on finite models.
//!
//! A net is built from a finite [`ActionTable`] (registered group elements,
//! diagonal translations and the `W₃` boost generator `K`) and a conjugation
//! `J` with `JKJ = −K`. The wedge subspace is `H(W₃) = ker(1 − J e^{−πK})`, so
//! its modular operator is `Δ = e^{−2πK}` and `Δ^{−it} = U(λ₃(2πt))`; every
//! other wedge of the registered family is a transported copy.
//!
//! Finite dimension imposes one hard limit worth knowing before reading a
//! report. Two standard subspaces `K ⊆ H` of `C^n` both have real dimension
//! `n`, so `K = H`. A half-sided inclusion `U(t·v₊)H ⊆ H` therefore forces
//! `U(t·v₊)` to fix `H`, hence to commute with `Δ`, and the Borchers relation
//! `Δ^{is}U(t·v₊)Δ^{−is} = U(e^{−2πs}t·v₊)` then forces `U(t·v₊) = 1`. On any
//! model whose light-ray translations act nontrivially, the `borchers` check
//! and `isotony` for proper wedge inclusions fail; the report says so instead
//! of hiding it.
//!
//! ```
//! use std::f64::consts::PI;
//! use modnet::momentum::{GroupElement, ModelSpec, OrbitModel, OrbitSpec};
//! use modnet::net::{bgl_construct, scalar_conjugation, verify_axioms, ActionTable, Axiom};
//!
//! let mut spec = ModelSpec::single(
//!     1.0,
//!     vec![OrbitSpec { r: 1.0, rapidity_n: 3, angle_n: 2 }],
//!     vec![GroupElement::R1Pi, GroupElement::Boost { t: 2.0 * PI }],
//! );
//! spec.rapidity_step = 2.0 * PI;
//! let model = OrbitModel::build(&spec).unwrap();
//! let table = ActionTable::from_model(&model).unwrap();
//! let net = bgl_construct(&scalar_conjugation(&model).unwrap(), &table, false, 1e-9).unwrap();
//! let report = verify_axioms(&net, &[Axiom::BisognanoWichmann, Axiom::Duality], 1e-9);
//! assert!(report.all_pass());
//! ```

mod action;
mod axioms;
mod demonstrator;
mod model;

pub use action::{scalar_conjugation, spin_half_conjugation, tensor_conjugation, ActionTable};
pub use axioms::{verify_axioms, Axiom, AxiomReport, AxiomResult, HALF_SIDED_SAMPLES, Z_SAMPLES};
pub use demonstrator::{
    tensor_demonstrator, DemonstratorReport, InternalAction, MismatchRow, UniquenessRow, ZPhaseRow, DEMO_MISMATCH_TIMES,
    DEMO_Z_TIMES,
};
pub use model::{
    bgl_construct, compare_tomita, fixes_w3, light_ray, tomita_quotient, wedge_included, CovariancePair, LocalRegion,
    LocalSubspace, NetModel, NetWedge, TomitaComparison,
};

use crate::error::Result;
use crate::momentum::{GroupElement, ModelSpec, OrbitModel, OrbitSpec};

/// The reference scalar model for nets: mass 1, one orbit with three rapidity
/// samples spaced by `2π` and four angles, with `r₁(π)`, `λ₃(2π)`, `R₃(π)`,
/// the `2π` rotation and a transverse translation registered. No registered
/// element moves `W₃` into a proper sub-wedge of itself.
pub fn canonical_model_spec() -> ModelSpec {
    let mut spec = ModelSpec::single(
        1.0,
        vec![OrbitSpec { r: 1.0, rapidity_n: 3, angle_n: 4 }],
        vec![
            GroupElement::R1Pi,
            GroupElement::Boost { t: 2.0 * std::f64::consts::PI },
            GroupElement::Rotation { theta: std::f64::consts::PI },
            GroupElement::TwoPi,
            GroupElement::Translation { a: [0.0, 0.31, 0.0, 0.0] },
        ],
    );
    spec.rapidity_step = 2.0 * std::f64::consts::PI;
    spec
}

/// The BGL net of [`canonical_model_spec`] with the scalar conjugation.
pub fn canonical_scalar_net(tol: f64) -> Result<NetModel> {
    let model = OrbitModel::build(&canonical_model_spec())?;
    bgl_construct(&scalar_conjugation(&model)?, &ActionTable::from_model(&model)?, false, tol)
}
