//! Numerical verification (placeholder).
