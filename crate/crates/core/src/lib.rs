//! Affine Dynkin combinatorics of 3-fold flopping contractions.
//!
//! Starting from an ADE Dynkin diagram and a choice of vertices, the crate
//! runs the iterated-involution wall-crossing walk, builds the matching
//! periodic hyperplane arrangement independently from restricted roots, and
//! derives the punctured-sphere quotient, the simples helix, the monodromy
//! words of the fundamental group, and the Gopakumar–Vafa lower bounds.

pub mod arrangement;
pub mod error;
pub mod gv;
pub mod helix;
pub mod length;
pub mod pi1;
pub mod rootsys;
pub mod topology;
pub mod walk;

pub use error::{Error, Result};
pub use length::Length;
