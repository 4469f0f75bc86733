//! Classical closed-form modal references used to judge discretization error.
//!
//! Everything here is double precision; the transcendental roots are pinned
//! to 1e-12 by bisection, far below any mesh error they are compared against.

/// Root `beta_n L` of `cosh(x) cos(x) = -1`, the clamped-free frequency
/// equation, found by bisection.
pub fn cantilever_beta_l(mode: usize) -> f64 {
    assert!(mode >= 1, "modes are 1-based");
    let f = |x: f64| x.cosh() * x.cos() + 1.0;
    // The n-th root lies near (n - 1/2) pi; the bracket below always
    // straddles it because the cosine factor dominates.
    let center = (mode as f64 - 0.5) * std::f64::consts::PI;
    let (mut lo, mut hi) = (center - 0.7, center + 0.7);
    assert!(
        f(lo) * f(hi) < 0.0,
        "bracket does not straddle root for mode {mode}"
    );
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if f(lo) * f(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Angular frequency of a clamped-free uniform beam,
/// `omega_n = (beta_n L)^2 sqrt(EI / rho) / L^2`.
pub fn cantilever_beam_omega(mode: usize, ei: f64, rho: f64, length: f64) -> f64 {
    let bl = cantilever_beta_l(mode);
    bl * bl * (ei / rho).sqrt() / (length * length)
}

/// Angular frequency of a simply supported uniform beam,
/// `omega_n = (n pi / L)^2 sqrt(EI / rho)`.
pub fn simply_supported_beam_omega(mode: usize, ei: f64, rho: f64, length: f64) -> f64 {
    let k = mode as f64 * std::f64::consts::PI / length;
    k * k * (ei / rho).sqrt()
}

/// Angular frequency of the `(m, n)` mode of a simply supported rectangular
/// plate, `omega_mn = pi^2 (m^2/a^2 + n^2/b^2) sqrt(D / mu)`.
pub fn simply_supported_plate_omega(m: usize, n: usize, a: f64, b: f64, d: f64, mu: f64) -> f64 {
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    pi2 * ((m * m) as f64 / (a * a) + (n * n) as f64 / (b * b)) * (d / mu).sqrt()
}
