use crate::error::{Error, Result};
use crate::MAX_TOTAL_DIM;

/// Tensor-factor structure of a finite-dimensional Hilbert space: an ordered
/// list of subsystem dimensions and their product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dim {
    dims: Vec<usize>,
    total: usize,
}

impl Dim {
    /// Builds a factorization from subsystem dimensions. The total dimension
    /// is capped at [`MAX_TOTAL_DIM`]; zero-dimensional factors are rejected.
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Structural("empty subsystem dimension list".into()));
        }
        if let Some(&d) = dims.iter().find(|&&d| d == 0) {
            return Err(Error::Structural(format!(
                "subsystem dimension must be positive, got {d}"
            )));
        }
        let mut total = 1usize;
        for &d in &dims {
            total = total
                .checked_mul(d)
                .filter(|&t| t <= MAX_TOTAL_DIM)
                .ok_or_else(|| {
                    Error::DimensionCap(format!(
                        "total dimension of {dims:?} exceeds the dense-storage cap {MAX_TOTAL_DIM}"
                    ))
                })?;
        }
        Ok(Self { dims, total })
    }

    /// Single-subsystem space of dimension `d`.
    pub fn single(d: usize) -> Result<Self> {
        Self::new(vec![d])
    }

    /// `n` identical subsystems of dimension `d`.
    pub fn uniform(d: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Structural("subsystem count must be positive".into()));
        }
        Self::new(vec![d; n])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// Number of tensor slots.
    pub fn n_slots(&self) -> usize {
        self.dims.len()
    }

    /// Concatenation `self ⊗ other` (slot lists appended).
    pub fn concat(&self, other: &Dim) -> Result<Dim> {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        Dim::new(dims)
    }

    /// Row-major stride of `slot`: the index step of one unit in that digit.
    pub fn stride(&self, slot: usize) -> usize {
        self.dims[slot + 1..].iter().product()
    }

    /// Digit of a composite basis `index` at `slot`.
    pub fn digit(&self, index: usize, slot: usize) -> usize {
        (index / self.stride(slot)) % self.dims[slot]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_is_product() {
        let d = Dim::new(vec![2, 3, 4]).unwrap();
        assert_eq!(d.total(), 24);
        assert_eq!(d.n_slots(), 3);
    }

    #[test]
    fn rejects_empty_and_zero() {
        assert!(matches!(Dim::new(vec![]), Err(Error::Structural(_))));
        assert!(matches!(Dim::new(vec![2, 0]), Err(Error::Structural(_))));
    }

    #[test]
    fn enforces_cap() {
        // 2^13 = 8192 > 4096
        assert!(matches!(
            Dim::uniform(2, 13),
            Err(Error::DimensionCap(_))
        ));
        // exactly at the cap is allowed
        assert_eq!(Dim::uniform(2, 12).unwrap().total(), 4096);
    }

    #[test]
    fn strides_and_digits() {
        let d = Dim::new(vec![2, 3, 4]).unwrap();
        assert_eq!(d.stride(0), 12);
        assert_eq!(d.stride(1), 4);
        assert_eq!(d.stride(2), 1);
        let idx = 1 * 12 + 2 * 4 + 3;
        assert_eq!(d.digit(idx, 0), 1);
        assert_eq!(d.digit(idx, 1), 2);
        assert_eq!(d.digit(idx, 2), 3);
    }

    #[test]
    fn trivial_one_dimensional_slot_allowed() {
        let d = Dim::new(vec![2, 1, 3]).unwrap();
        assert_eq!(d.total(), 6);
    }
}
