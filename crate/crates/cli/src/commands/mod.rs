pub mod geometry;
pub mod net;
pub mod split;
pub mod spin;
pub mod subspace;
pub mod suite;
