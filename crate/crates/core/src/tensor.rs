//! Dense row-major tensors.
//!
//! Values are immutable after construction and shared by reference count, so
//! clips, latents and parameters can be handed to parallel evaluation workers
//! without copies. Mutation happens on plain `Vec<T>` buffers that are frozen
//! into tensors.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone)]
pub struct Tensor<T> {
    shape: Arc<[usize]>,
    data: Arc<[T]>,
}

impl<T: Scalar> Tensor<T> {
    pub fn new(shape: &[usize], data: Vec<T>) -> Result<Self> {
        let numel: usize = shape.iter().product();
        if numel != data.len() {
            return Err(Error::shape(alloc::format!(
                "tensor data length {} does not match shape {:?}",
                data.len(),
                shape
            )));
        }
        Ok(Tensor {
            shape: shape.into(),
            data: data.into(),
        })
    }

    /// Like [`Tensor::new`] but panics; for shapes known correct by construction.
    pub fn from_vec(shape: &[usize], data: Vec<T>) -> Self {
        Self::new(shape, data).expect("constructed shape matches data")
    }

    pub fn zeros(shape: &[usize]) -> Self {
        let numel: usize = shape.iter().product();
        Self::from_vec(shape, alloc::vec![T::zero(); numel])
    }

    pub fn full(shape: &[usize], value: T) -> Self {
        let numel: usize = shape.iter().product();
        Self::from_vec(shape, alloc::vec![value; numel])
    }

    pub fn scalar(value: T) -> Self {
        Self::from_vec(&[1], alloc::vec![value])
    }

    pub fn from_fn(shape: &[usize], mut f: impl FnMut(usize) -> T) -> Self {
        let numel: usize = shape.iter().product();
        Self::from_vec(shape, (0..numel).map(&mut f).collect())
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    /// Size of dimension `i`.
    pub fn dim(&self, i: usize) -> usize {
        self.shape[i]
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn to_vec(&self) -> Vec<T> {
        self.data.to_vec()
    }

    /// Flat index of a multi-index (row-major).
    pub fn flat(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.shape.len());
        let mut off = 0;
        for (i, &ix) in index.iter().enumerate() {
            debug_assert!(ix < self.shape[i]);
            off = off * self.shape[i] + ix;
        }
        off
    }

    pub fn at(&self, index: &[usize]) -> T {
        self.data[self.flat(index)]
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Self::from_vec(&self.shape, self.data.iter().map(|&x| f(x)).collect())
    }

    /// Same buffer reinterpreted under a new shape with equal element count.
    pub fn reshaped(&self, shape: &[usize]) -> Result<Self> {
        let numel: usize = shape.iter().product();
        if numel != self.numel() {
            return Err(Error::shape(alloc::format!(
                "cannot reshape {:?} into {:?}",
                self.shape(),
                shape
            )));
        }
        Ok(Tensor {
            shape: shape.into(),
            data: self.data.clone(),
        })
    }

    pub fn cast<U: Scalar>(&self) -> Tensor<U> {
        Tensor::from_vec(
            &self.shape,
            self.data.iter().map(|&x| U::from_f64(x.to_f64_exact())).collect(),
        )
    }

    /// Largest absolute element-wise difference; shapes must match.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.shape(), other.shape());
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(&a, &b)| (a.to_f64_exact() - b.to_f64_exact()).abs())
            .fold(0.0, f64::max)
    }

    /// True when every element is bit-identical.
    pub fn bit_eq(&self, other: &Self) -> bool {
        self.shape() == other.shape()
            && self
                .data
                .iter()
                .zip(other.data.iter())
                .all(|(a, b)| a.to_f64_exact().to_bits() == b.to_f64_exact().to_bits())
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }
}

impl<T: Scalar> core::fmt::Debug for Tensor<T> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Tensor{:?}", self.shape())?;
        if self.numel() <= 8 {
            write!(f, " {:?}", self.data())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_indexing_row_major() {
        let t = Tensor::<f64>::from_fn(&[2, 3, 4], |i| i as f64);
        assert_eq!(t.at(&[0, 0, 0]), 0.0);
        assert_eq!(t.at(&[0, 2, 3]), 11.0);
        assert_eq!(t.at(&[1, 0, 0]), 12.0);
    }

    #[test]
    fn new_rejects_mismatched_length() {
        assert!(Tensor::<f32>::new(&[2, 2], alloc::vec![0.0; 3]).is_err());
    }

    #[test]
    fn reshape_preserves_data() {
        let t = Tensor::<f32>::from_fn(&[2, 6], |i| i as f32);
        let r = t.reshaped(&[3, 4]).unwrap();
        assert_eq!(r.data(), t.data());
        assert!(t.reshaped(&[5, 5]).is_err());
    }
}
