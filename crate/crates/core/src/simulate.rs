//! Monte Carlo simulation: placeholder during bring-up.

use crate::scalar::Real;

#[derive(Debug, Clone)]
pub struct PathEnsemble<T> {
    pub _marker: std::marker::PhantomData<T>,
}

impl<T: Real> PathEnsemble<T> {}
