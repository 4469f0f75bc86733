//! Trace and field export (placeholder).
