use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Floating-point type the spectral routines run on.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Sum + Send + Sync + 'static {
    /// Default eigen-residual tolerance: `1e-12`, or 64 ulps of one when the
    /// type cannot resolve that.
    fn default_tolerance() -> Self {
        let floor = Self::from_f64(1e-12).expect("representable");
        floor.max(Self::epsilon() * Self::from_f64(64.0).expect("representable"))
    }

    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite constants are representable")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
