//! Scalar abstraction: all assembly and simulation code is generic over the
//! floating-point type.

use num_traits::FromPrimitive;

/// Floating-point scalar usable for assembly and simulation: `f32` or `f64`.
pub trait Real: nalgebra::RealField + FromPrimitive + Copy {
    /// Machine epsilon of the concrete type.
    fn eps() -> Self;
}

macro_rules! impl_real {
    ($t:ty) => {
        impl Real for $t {
            fn eps() -> Self {
                <$t>::EPSILON
            }
        }
    };
}

impl_real!(f32);
impl_real!(f64);

/// Converts an `f64` constant into the working scalar type.
#[inline]
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant not representable")
}
