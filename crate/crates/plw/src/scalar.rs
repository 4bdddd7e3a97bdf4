//! Scalar abstraction for the numerical core.
//!
//! Everything downstream (grids, operators, iterations) is generic over a
//! floating-point scalar so the same code runs in `f32` and `f64`. Concrete
//! `f64` aliases for the main types live at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssignOps};

/// Floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + NumAssignOps + Sum + Debug + Display + Send + Sync + 'static
{
    /// Lift an `f64` constant (tolerances, quadrature weights, ...) into `Self`.
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("constant representable in scalar type")
    }

    /// Relative tolerance target for the sparse linear solves.
    ///
    /// `f64` reaches 1e-12 comfortably; `f32` is floored well above its
    /// epsilon so CG terminates.
    fn solver_tol() -> Self {
        let floor = Self::epsilon() * Self::c(500.0);
        let target = Self::c(1e-12);
        if target > floor {
            target
        } else {
            floor
        }
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
