//! Eigenspinors of charge conjugation: construction, symmetry operators,
//! coupled dynamics, spin-1 analogues and a numerical verification suite.

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod gamma;
pub mod golden;
pub mod kinematics;
pub mod matrix;
pub mod sampling;
pub mod spin_one;
pub mod spinors;
pub mod suite;
pub mod symmetry;
pub mod tolerance;

pub use error::{Error, Result};
