//! Exact arithmetic over Q, Q[τ] and the tower Q[τ, ρ, √3], plus dense
//! linear algebra over any of them.

pub mod fields;
mod golden;
mod matrix;
pub mod numeric;
mod rational;
mod tower;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use golden::{is_square_in_qtau, GoldenNumber};
pub use matrix::{solve_exact, GoldenMatrix, Matrix, RationalMatrix};
pub use rational::Rational;
pub use tower::{sqrt_in_tower, TowerElement, TOWER_BASIS};

/// A field element usable as a matrix entry.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + From<Rational>
{
    fn inverse(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
}

/// Owned-operand forwarding for types that implement the reference ops.
macro_rules! owned_ops {
    ($t:ty) => {
        impl ::std::ops::Add<$t> for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl ::std::ops::Add<&$t> for $t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                &self + rhs
            }
        }
        impl ::std::ops::Sub<$t> for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl ::std::ops::Sub<&$t> for $t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                &self - rhs
            }
        }
        impl ::std::ops::Mul<$t> for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl ::std::ops::Mul<&$t> for $t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                &self * rhs
            }
        }
        impl ::std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use owned_ops;
