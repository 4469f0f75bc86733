//! Kirchhoff plate PFEM assembly (placeholder).

pub struct Mesh2D<T> { _m: std::marker::PhantomData<T> }
pub struct PlatePhSystem<T: crate::scalar::Real> { _m: std::marker::PhantomData<T> }
