//! Time integration (placeholder).

pub struct SimulationTrace<T> { _m: std::marker::PhantomData<T> }
