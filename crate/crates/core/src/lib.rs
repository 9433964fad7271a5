//! Equivariant Schubert calculus on flag varieties `G/B` and Peterson
//! Schubert calculus on Peterson varieties, computed exactly by localization
//! at torus-fixed points.

pub mod poly;
pub mod rootsys;
pub mod gkm;
pub mod peterson;
pub mod verify;
