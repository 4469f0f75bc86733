//! Gauss-Legendre quadrature rules.
//!
//! Nodes are computed by Newton iteration on the Legendre recurrence, so
//! rules of arbitrary order are available for the verification routines.

use crate::scalar::{real, Real};

/// A Gauss-Legendre rule on the reference interval `[0, 1]`.
#[derive(Debug, Clone)]
pub struct GaussRule<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Real> GaussRule<T> {
    /// An `n`-point rule, exact for polynomials of degree `2n - 1`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "quadrature rule needs at least one point");
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let half = real::<T>(0.5);
        for i in 0..n {
            let (x, w) = legendre_root::<T>(n, i);
            // Map from [-1, 1] to [0, 1].
            nodes.push(half * (x + T::one()));
            weights.push(half * w);
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights mapped to the interval `[a, b]`.
    pub fn mapped(&self, a: T, b: T) -> impl Iterator<Item = (T, T)> + '_ {
        let h = b - a;
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (a + h * x, h * w))
    }

    /// Integrates `f` over `[a, b]`.
    pub fn integrate(&self, a: T, b: T, mut f: impl FnMut(T) -> T) -> T {
        let mut acc = T::zero();
        for (x, w) in self.mapped(a, b) {
            acc += w * f(x);
        }
        acc
    }
}

/// The `i`-th root (ascending) of the Legendre polynomial `P_n` on `[-1, 1]`
/// with its Gauss weight.
fn legendre_root<T: Real>(n: usize, i: usize) -> (T, T) {
    let nf = real::<T>(n as f64);
    // Chebyshev-like initial guess, then Newton.
    let guess = (T::pi() * real::<T>(i as f64 + 0.75) / (nf + real::<T>(0.5))).cos();
    let mut x = -guess;
    let tol = T::eps() * real::<T>(4.0);
    for _ in 0..100 {
        let (p, dp) = legendre_eval(n, x);
        let dx = p / dp;
        x -= dx;
        if dx.abs() <= tol {
            break;
        }
    }
    let (_, dp) = legendre_eval(n, x);
    let w = real::<T>(2.0) / ((T::one() - x * x) * dp * dp);
    (x, w)
}

/// Evaluates `P_n` and its derivative by the three-term recurrence.
fn legendre_eval<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    if n == 0 {
        return (p0, T::zero());
    }
    for k in 2..=n {
        let kf = real::<T>(k as f64);
        let p2 = ((real::<T>(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = real::<T>(n as f64);
    let dp = nf * (x * p1 - p0) / (x * x - T::one());
    (p1, dp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_monomials_exactly() {
        let rule = GaussRule::<f64>::new(4);
        // Exact for degree 7 on [0, 1]: integral of x^k is 1/(k+1).
        for k in 0..=7 {
            let val = rule.integrate(0.0, 1.0, |x| x.powi(k));
            assert!((val - 1.0 / (k as f64 + 1.0)).abs() < 1e-14, "degree {k}");
        }
    }

    #[test]
    fn high_order_rule_is_accurate() {
        let rule = GaussRule::<f64>::new(30);
        let val = rule.integrate(0.0, std::f64::consts::PI, |x| x.sin());
        assert!((val - 2.0).abs() < 1e-13);
    }

    #[test]
    fn mapped_interval_weights_sum_to_length() {
        let rule = GaussRule::<f64>::new(6);
        let total: f64 = rule.mapped(-2.0, 3.0).map(|(_, w)| w).sum();
        assert!((total - 5.0).abs() < 1e-13);
    }

    #[test]
    fn works_in_single_precision() {
        let rule = GaussRule::<f32>::new(5);
        let val = rule.integrate(0.0f32, 1.0, |x| x * x);
        assert!((val - 1.0 / 3.0).abs() < 1e-6);
    }
}
