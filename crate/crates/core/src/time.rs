//! Fixed-point simulation time.
//!
//! Time is an integer count of microseconds. Floating-point timestamps would
//! make tie-breaking (and therefore the whole event trace) depend on platform
//! rounding; integer microseconds keep traces bit-identical across machines.

use std::fmt;
use std::ops::{Add, AddAssign, Sub};

/// A non-negative instant (or duration) in whole microseconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SimTime(u64);

impl SimTime {
    pub const ZERO: SimTime = SimTime(0);

    pub const fn from_micros(us: u64) -> Self {
        SimTime(us)
    }

    pub const fn from_millis(ms: u64) -> Self {
        SimTime(ms * 1_000)
    }

    pub const fn from_secs(s: u64) -> Self {
        SimTime(s * 1_000_000)
    }

    /// Rounds to the nearest microsecond. Negative inputs clamp to zero.
    pub fn from_secs_f64(s: f64) -> Self {
        if s <= 0.0 {
            return SimTime(0);
        }
        SimTime((s * 1e6).round() as u64)
    }

    pub const fn as_micros(self) -> u64 {
        self.0
    }

    pub fn as_secs_f64(self) -> f64 {
        self.0 as f64 / 1e6
    }

    pub fn saturating_sub(self, rhs: SimTime) -> SimTime {
        SimTime(self.0.saturating_sub(rhs.0))
    }
}

impl Add for SimTime {
    type Output = SimTime;
    fn add(self, rhs: SimTime) -> SimTime {
        SimTime(self.0 + rhs.0)
    }
}

impl AddAssign for SimTime {
    fn add_assign(&mut self, rhs: SimTime) {
        self.0 += rhs.0;
    }
}

impl Sub for SimTime {
    type Output = SimTime;
    fn sub(self, rhs: SimTime) -> SimTime {
        SimTime(self.0.checked_sub(rhs.0).expect("time went backwards"))
    }
}

impl fmt::Display for SimTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_secs_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_conversions_are_exact_at_microsecond_grid() {
        assert_eq!(SimTime::from_secs_f64(0.33).as_micros(), 330_000);
        assert_eq!(SimTime::from_secs_f64(0.2).as_micros(), 200_000);
        assert_eq!(SimTime::from_secs(300).as_secs_f64(), 300.0);
    }

    #[test]
    fn negative_seconds_clamp_to_zero() {
        assert_eq!(SimTime::from_secs_f64(-1.0), SimTime::ZERO);
    }

    #[test]
    fn ordering_follows_micros() {
        assert!(SimTime::from_micros(5) < SimTime::from_micros(6));
        assert_eq!(
            SimTime::from_micros(7) - SimTime::from_micros(5),
            SimTime::from_micros(2)
        );
    }
}
