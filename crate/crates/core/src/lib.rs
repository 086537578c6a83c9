//! Polynomials over generalized quaternion algebras.
//!
//! The crate covers exact arithmetic in `(a, b / Q)`, the ring of
//! polynomials with a central variable (right division, GCRD, right
//! evaluation), the `c * G * H` factorization through coordinate
//! polynomials, and a classifier that sorts the roots of a polynomial into
//! central, isolated and spherical conjugacy classes. A floating-point
//! backend over the Hamilton quaternions mirrors the classifier and is
//! cross-checked against the exact one.

pub mod central;
pub mod decompose;
pub mod error;
mod linalg;
pub mod numeric;
pub mod qpoly;
pub mod quat;
pub mod rational;
pub mod roots;
pub mod sample;

pub use central::{CentralPoly, Degree};
pub use decompose::{BeckFactorization, CenterCoords, SubfieldCoords};
pub use error::{Error, Result};
pub use qpoly::QPoly;
pub use quat::{Algebra, ConjClass, Quaternion};
pub use rational::Rational;
pub use roots::{ClassEntry, ClassStatus, Provenance, RootReport};
