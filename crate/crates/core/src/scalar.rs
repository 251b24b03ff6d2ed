//! Scalar abstractions and numeric helpers.
//!
//! The counting kernels are generic over [`Count`] so that small exhaustive
//! checks can run on machine integers while the census entry points use
//! [`crate::BigCount`]. Root finding is generic over [`RealScalar`]
//! (f32 or f64).

use num_traits::{Float, FromPrimitive, Num, NumRef, ToPrimitive, Zero};

use crate::{BigCount, Exact};

/// Exact counting scalar: ring operations plus ordering and cloning.
///
/// Implemented by the unsigned machine integers and by [`crate::BigCount`].
/// The kernels only ever subtract smaller from larger, so unsigned types are
/// fine; a caller picking a fixed-width scalar is responsible for choosing
/// one wide enough for its run.
pub trait Count: Num + NumRef + PartialOrd + Clone {}
impl<T> Count for T where T: Num + NumRef + PartialOrd + Clone {}

/// Floating-point scalar for root finding.
pub trait RealScalar: Float + FromPrimitive {}
impl<T> RealScalar for T where T: Float + FromPrimitive {}

/// Base-2 logarithm of an exact count.
///
/// Computed from the bit length plus a fractional correction on the top 53
/// bits, never by a lossy whole-value float conversion, so the result is
/// accurate to well under 1e-12 relative error at any magnitude.
/// Returns negative infinity for zero.
pub fn log2_count(x: &BigCount) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    let shift = bits.saturating_sub(53);
    let top = (x >> shift).to_f64().expect("53-bit value fits in f64");
    top.log2() + shift as f64
}

/// `num / den` as f64 via an integer division scaled by 10^15.
///
/// Exact-ratio helper for convergence checks on huge counts whose quotient is
/// moderate: the scaled quotient is itself exact, so the only rounding is the
/// final 10^-15 quantization.
pub fn ratio_f64(num: &BigCount, den: &BigCount) -> f64 {
    assert!(!den.is_zero(), "ratio_f64: zero denominator");
    let scale = BigCount::from(10u64.pow(15));
    let scaled = num * &scale / den;
    scaled.to_f64().expect("scaled ratio fits in f64") / 1e15
}

/// An exact count as an exact rational, for comparisons against rational
/// bounds.
pub fn exact_from_count(x: &BigCount) -> Exact {
    Exact::from_integer(x.clone().into())
}
