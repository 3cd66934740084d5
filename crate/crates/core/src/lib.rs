//! Exact invariants of the golden tetrahedra and the inflation matrices
//! they determine.
//!
//! Everything here is computed in exact arithmetic over Q[τ] and the
//! tower Q[τ, ρ, √3] (ρ = √(τ+2)); floating evaluation only screens
//! candidates and renders decimals.

pub mod angles;
pub mod crs;
pub mod error;
pub mod exactnum;
pub mod inflation;
pub mod mosseri_sadoc;
pub mod polyhedra;

pub use error::{Error, Result};
pub use exactnum::numeric::NumCtx;
pub use exactnum::{GoldenMatrix, GoldenNumber, Matrix, Rational, RationalMatrix, TowerElement};
