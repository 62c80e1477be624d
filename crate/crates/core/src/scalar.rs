//! Scalar abstractions.
//!
//! Floating routines are written against [`Real`] (implemented for `f32` and
//! `f64`); exact routines only need `num_traits::Num`, so they run over
//! machine integers, `BigInt` or `BigRational` alike.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};
use serde::Serialize;

/// Floating point scalar used by the eigensolver and every numeric check.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Sum + Default + Send + Sync + 'static
{
    /// Relative off-diagonal convergence threshold of the eigensolver.
    const SOLVE_TOL: f64;
    /// Relative gap below which neighbouring eigenvalues are one cluster.
    const GROUP_TOL: f64;
    /// Relative threshold below which an eigenvalue counts as zero.
    const ZERO_TOL: f64;

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }

    fn from_count(x: usize) -> Self {
        Self::from_usize(x).expect("count representable")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const SOLVE_TOL: f64 = 1e-12;
    const GROUP_TOL: f64 = 1e-8;
    const ZERO_TOL: f64 = 1e-8;
}

impl Real for f32 {
    const SOLVE_TOL: f64 = 1e-6;
    const GROUP_TOL: f64 = 1e-4;
    const ZERO_TOL: f64 = 1e-4;
}

/// Tolerance settings. `group` and `zero` are relative: the absolute
/// thresholds are `group * max(1, rho)` and `zero * max(1, rho)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances<T> {
    pub solve: T,
    pub group: T,
    pub zero: T,
    pub max_sweeps: usize,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            solve: T::lit(T::SOLVE_TOL),
            group: T::lit(T::GROUP_TOL),
            zero: T::lit(T::ZERO_TOL),
            max_sweeps: 100,
        }
    }
}

impl<T: Real> Tolerances<T> {
    pub fn with_zero(mut self, zero: T) -> Self {
        self.zero = zero;
        self
    }

    pub fn with_group(mut self, group: T) -> Self {
        self.group = group;
        self
    }

    /// Absolute thresholds for a spectrum whose largest modulus is `rho`.
    pub fn resolve(&self, rho: T) -> ResolvedTolerances<T> {
        let scale = rho.abs().max(T::one());
        ResolvedTolerances {
            solve: self.solve,
            group: self.group * scale,
            zero: self.zero * scale,
        }
    }
}

/// Absolute thresholds actually applied to one spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResolvedTolerances<T> {
    pub solve: T,
    pub group: T,
    pub zero: T,
}
