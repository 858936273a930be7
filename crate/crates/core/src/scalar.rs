//! Floating-point scalar abstraction: f32 or f64.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps, ToPrimitive};

/// Real scalar type underlying all complex arithmetic in this crate.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssignOps
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Converts an `f64` constant into the working scalar type.
pub fn real<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("finite f64 constant")
}
