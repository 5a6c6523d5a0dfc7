//! Levi-method construction of `p^A`: placeholder during bring-up.

use crate::scalar::Real;

#[derive(Debug, Clone)]
pub struct QuadratureScheme<T> {
    pub _marker: std::marker::PhantomData<T>,
}

#[derive(Debug, Clone)]
pub struct ParametrixTable<T> {
    pub _marker: std::marker::PhantomData<T>,
}

impl<T: Real> QuadratureScheme<T> {}
