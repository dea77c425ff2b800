use super::{C64, Dim};
use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};

/// Precomputed index tables for an operator acting on a subset of tensor
/// slots of a larger space.
///
/// A full basis index decomposes as `rest_offset + slot_offset`, where the
/// slot offset enumerates the operator's own sub-space (in the given slot
/// order) and the rest offset enumerates every configuration of the untouched
/// slots.
pub(crate) struct SlotEmbedding {
    pub sub_total: usize,
    pub slot_offsets: Vec<usize>,
    pub rest_offsets: Vec<usize>,
}

impl SlotEmbedding {
    /// `slots` are positions in `dims`, in the operator's own slot order.
    pub fn new(dims: &Dim, slots: &[usize]) -> Result<Self> {
        if slots.is_empty() {
            return Err(Error::Structural("empty slot list".into()));
        }
        let n = dims.n_slots();
        let mut seen = vec![false; n];
        for &s in slots {
            if s >= n {
                return Err(Error::Structural(format!(
                    "slot {s} out of range for {n} subsystems"
                )));
            }
            if seen[s] {
                return Err(Error::Structural(format!("slot {s} repeated")));
            }
            seen[s] = true;
        }

        let sub_dims: Vec<usize> = slots.iter().map(|&s| dims.dims()[s]).collect();
        let sub_total: usize = sub_dims.iter().product();
        let full_strides: Vec<usize> = slots.iter().map(|&s| dims.stride(s)).collect();

        let mut slot_offsets = vec![0usize; sub_total];
        for (sub, offset) in slot_offsets.iter_mut().enumerate() {
            let mut rem = sub;
            let mut acc = 0usize;
            for k in (0..slots.len()).rev() {
                acc += (rem % sub_dims[k]) * full_strides[k];
                rem /= sub_dims[k];
            }
            *offset = acc;
        }

        let rest_slots: Vec<usize> = (0..n).filter(|s| !seen[*s]).collect();
        let rest_dims: Vec<usize> = rest_slots.iter().map(|&s| dims.dims()[s]).collect();
        let rest_total: usize = rest_dims.iter().product();
        let rest_strides: Vec<usize> = rest_slots.iter().map(|&s| dims.stride(s)).collect();

        let mut rest_offsets = vec![0usize; rest_total];
        for (rest, offset) in rest_offsets.iter_mut().enumerate() {
            let mut rem = rest;
            let mut acc = 0usize;
            for k in (0..rest_slots.len()).rev() {
                acc += (rem % rest_dims[k]) * rest_strides[k];
                rem /= rest_dims[k];
            }
            *offset = acc;
        }

        Ok(Self {
            sub_total,
            slot_offsets,
            rest_offsets,
        })
    }

    /// Applies `mat` (of size `sub_total`) on the embedded slots of `v`,
    /// leaving the remaining slots untouched. O(total · sub_total).
    pub fn apply(&self, mat: &DMatrix<C64>, v: &DVector<C64>) -> DVector<C64> {
        debug_assert_eq!(mat.nrows(), self.sub_total);
        debug_assert_eq!(v.len(), self.sub_total * self.rest_offsets.len());
        let mut out = DVector::from_element(v.len(), C64::new(0.0, 0.0));
        for &base in &self.rest_offsets {
            for si in 0..self.sub_total {
                let mut acc = C64::new(0.0, 0.0);
                for sj in 0..self.sub_total {
                    acc += mat[(si, sj)] * v[base + self.slot_offsets[sj]];
                }
                out[base + self.slot_offsets[si]] = acc;
            }
        }
        out
    }

    /// Lookup table mapping every full basis index to its sub-space index;
    /// used for building permuted Kronecker products entry by entry.
    pub fn extraction_table(&self, total: usize) -> Vec<u32> {
        let mut table = vec![0u32; total];
        for (rest_pos, &base) in self.rest_offsets.iter().enumerate() {
            let _ = rest_pos;
            for (sub, &off) in self.slot_offsets.iter().enumerate() {
                table[base + off] = sub as u32;
            }
        }
        table
    }
}
