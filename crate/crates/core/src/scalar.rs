//! Scalar abstraction for the simulator's continuous math.
//!
//! Channel attenuation, metric values, positions and statistics are generic
//! over [`Scalar`] so the whole pipeline can be instantiated for `f32` or
//! `f64`. Simulation time is deliberately *not* a `Scalar`; it is fixed-point
//! microseconds (see [`crate::time::SimTime`]) so event ordering stays
//! platform-stable. The crate root exports `f64` aliases, which is what the
//! CLI and the experiment suite use; raw-unit metric round-trips need the
//! 53-bit mantissa.

use rand::distr::uniform::SampleUniform;
use rand::Rng;
use rand_distr::{Distribution, Gamma};
use std::fmt;

/// Floating-point scalar usable throughout the simulator: `f32` or `f64`.
pub trait Scalar:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + SampleUniform
    + fmt::Debug
    + fmt::Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Draws a unit-mean gamma multiplier with the given shape `m`
    /// (variance `1/m`). Used for Nakagami-m power fading.
    fn gamma_unit_mean<R: Rng + ?Sized>(shape: Self, rng: &mut R) -> Self;
}

impl Scalar for f32 {
    fn gamma_unit_mean<R: Rng + ?Sized>(shape: Self, rng: &mut R) -> Self {
        Gamma::<f32>::new(shape, 1.0 / shape)
            .expect("gamma shape must be positive")
            .sample(rng)
    }
}

impl Scalar for f64 {
    fn gamma_unit_mean<R: Rng + ?Sized>(shape: Self, rng: &mut R) -> Self {
        Gamma::<f64>::new(shape, 1.0 / shape)
            .expect("gamma shape must be positive")
            .sample(rng)
    }
}

/// Converts an `f64` constant into the active scalar type.
pub fn cast<T: Scalar>(value: f64) -> T {
    T::from_f64(value).expect("literal must be representable")
}
