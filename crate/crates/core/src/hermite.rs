//! Cubic Hermite shape functions on the reference interval `[0, 1]`.
//!
//! Degree-of-freedom order is `[value(0), slope(0), value(1), slope(1)]`
//! with slopes taken with respect to the reference coordinate. On an element
//! of length `h` the slope functions must be scaled by `h` and derivatives
//! chain-ruled by `1/h` per order.

use crate::scalar::{real, Real};

pub const NDOF: usize = 4;

pub fn eval<T: Real>(t: T) -> [T; 4] {
    let t2 = t * t;
    let t3 = t2 * t;
    let c2 = real::<T>(2.0);
    let c3 = real::<T>(3.0);
    [
        T::one() - c3 * t2 + c2 * t3,
        t - c2 * t2 + t3,
        c3 * t2 - c2 * t3,
        -t2 + t3,
    ]
}

pub fn deriv<T: Real>(t: T) -> [T; 4] {
    let t2 = t * t;
    let c2 = real::<T>(2.0);
    let c3 = real::<T>(3.0);
    let c4 = real::<T>(4.0);
    let c6 = real::<T>(6.0);
    [
        -c6 * t + c6 * t2,
        T::one() - c4 * t + c3 * t2,
        c6 * t - c6 * t2,
        -c2 * t + c3 * t2,
    ]
}

pub fn deriv2<T: Real>(t: T) -> [T; 4] {
    let c2 = real::<T>(2.0);
    let c3 = real::<T>(3.0);
    let c4 = real::<T>(4.0);
    let c6 = real::<T>(6.0);
    let c12 = real::<T>(12.0);
    [
        -c6 + c12 * t,
        -c4 + c6 * t,
        c6 - c12 * t,
        -c2 + c6 * t,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodal_values_and_slopes() {
        let at0 = eval::<f64>(0.0);
        let at1 = eval::<f64>(1.0);
        assert_eq!(at0, [1.0, 0.0, 0.0, 0.0]);
        assert_eq!(at1, [0.0, 0.0, 1.0, 0.0]);
        let d0 = deriv::<f64>(0.0);
        let d1 = deriv::<f64>(1.0);
        assert_eq!(d0, [0.0, 1.0, 0.0, 0.0]);
        assert_eq!(d1, [0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn partition_of_unity_for_value_functions() {
        for &t in &[0.1, 0.37, 0.5, 0.9] {
            let v = eval::<f64>(t);
            assert!((v[0] + v[2] - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn reproduces_cubic_exactly() {
        // Interpolate p(t) = t^3 - 2t^2 + 0.5 by nodal values/slopes.
        let p = |t: f64| t.powi(3) - 2.0 * t * t + 0.5;
        let dp = |t: f64| 3.0 * t * t - 4.0 * t;
        let ddp = |t: f64| 6.0 * t - 4.0;
        let dofs = [p(0.0), dp(0.0), p(1.0), dp(1.0)];
        for &t in &[0.2, 0.55, 0.83] {
            let (v, d, dd) = (eval::<f64>(t), deriv::<f64>(t), deriv2::<f64>(t));
            let interp: f64 = (0..4).map(|i| dofs[i] * v[i]).sum();
            let dinterp: f64 = (0..4).map(|i| dofs[i] * d[i]).sum();
            let ddinterp: f64 = (0..4).map(|i| dofs[i] * dd[i]).sum();
            assert!((interp - p(t)).abs() < 1e-14);
            assert!((dinterp - dp(t)).abs() < 1e-14);
            assert!((ddinterp - ddp(t)).abs() < 1e-13);
        }
    }
}
