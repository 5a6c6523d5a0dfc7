//! Estimate checks: placeholder during bring-up.

use crate::scalar::Real;

#[derive(Debug, Clone)]
pub struct CheckReport<T> {
    pub _marker: std::marker::PhantomData<T>,
}

impl<T: Real> CheckReport<T> {}
