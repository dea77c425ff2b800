use super::{C64, Dim, SlotEmbedding, StateVector};
use crate::error::{Error, Result};
use crate::HERMITICITY_TOL;
use nalgebra::{DMatrix, DVector};

/// Dense operator on a tensor-factored space, with a cached hermiticity flag.
#[derive(Clone, Debug)]
pub struct Operator {
    dim: Dim,
    mat: DMatrix<C64>,
    hermitian: bool,
}

impl Operator {
    pub fn new(dim: Dim, mat: DMatrix<C64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::Structural(format!(
                "operator matrix must be square, got {}x{}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        if mat.nrows() != dim.total() {
            return Err(Error::Structural(format!(
                "operator size {} does not match dimension {}",
                mat.nrows(),
                dim.total()
            )));
        }
        let hermitian = hermiticity_defect(&mat) <= HERMITICITY_TOL;
        Ok(Self { dim, mat, hermitian })
    }

    pub fn from_fn(dim: Dim, f: impl FnMut(usize, usize) -> C64) -> Result<Self> {
        let n = dim.total();
        let mut f = f;
        // DMatrix::from_fn iterates in column-major order; keep (row, col) args.
        let mat = DMatrix::from_fn(n, n, |i, j| f(i, j));
        Self::new(dim, mat)
    }

    pub fn identity(dim: Dim) -> Self {
        let n = dim.total();
        Self {
            dim,
            mat: DMatrix::identity(n, n),
            hermitian: true,
        }
    }

    pub fn zero(dim: Dim) -> Self {
        let n = dim.total();
        Self {
            dim,
            mat: DMatrix::from_element(n, n, C64::new(0.0, 0.0)),
            hermitian: true,
        }
    }

    pub fn dim(&self) -> &Dim {
        &self.dim
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.mat
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn adjoint(&self) -> Operator {
        Operator {
            dim: self.dim.clone(),
            mat: self.mat.adjoint(),
            hermitian: self.hermitian,
        }
    }

    pub fn scaled(&self, c: C64) -> Operator {
        // the combination may gain or lose hermiticity, so the flag is
        // recomputed from the entries
        Operator::new(self.dim.clone(), &self.mat * c).expect("same shape")
    }

    /// Checked sum; dimensions must match exactly.
    pub fn add(&self, other: &Operator) -> Result<Operator> {
        self.require_same_dim(other)?;
        Operator::new(self.dim.clone(), &self.mat + &other.mat)
    }

    /// Checked difference.
    pub fn sub(&self, other: &Operator) -> Result<Operator> {
        self.require_same_dim(other)?;
        Operator::new(self.dim.clone(), &self.mat - &other.mat)
    }

    /// Checked matrix product (not hermiticity-preserving in general).
    pub fn mul(&self, other: &Operator) -> Result<Operator> {
        self.require_same_dim(other)?;
        Operator::new(self.dim.clone(), &self.mat * &other.mat)
    }

    pub fn apply(&self, v: &DVector<C64>) -> DVector<C64> {
        &self.mat * v
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.mat.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn require_same_dim(&self, other: &Operator) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Structural(format!(
                "operator dimensions differ: {:?} vs {:?}",
                self.dim.dims(),
                other.dim.dims()
            )));
        }
        Ok(())
    }
}

pub(crate) fn hermiticity_defect(mat: &DMatrix<C64>) -> f64 {
    let n = mat.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (mat[(i, j)] - mat[(j, i)].conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

/// Kronecker product of the factors, in the given order. The result's
/// dimension list is the concatenation of the factors' lists.
pub fn tensor(factors: &[&Operator]) -> Result<Operator> {
    let first = factors
        .first()
        .ok_or_else(|| Error::Structural("tensor of an empty factor list".into()))?;
    let mut dim = first.dim.clone();
    let mut mat = first.mat.clone();
    for op in &factors[1..] {
        dim = dim.concat(&op.dim)?;
        mat = mat.kronecker(&op.mat);
    }
    Operator::new(dim, mat)
}

/// Lifts `op` into `dims` with identities everywhere except `slot`:
/// `I ⊗ … ⊗ op ⊗ … ⊗ I`.
pub fn embed(op: &Operator, slot: usize, dims: &Dim) -> Result<Operator> {
    if slot >= dims.n_slots() {
        return Err(Error::Structural(format!(
            "slot {slot} out of range for {} subsystems",
            dims.n_slots()
        )));
    }
    if op.dim.total() != dims.dims()[slot] {
        return Err(Error::Structural(format!(
            "operator dimension {} does not match subsystem {} of size {}",
            op.dim.total(),
            slot,
            dims.dims()[slot]
        )));
    }
    embed_on_slots(op, &[slot], dims)
}

/// Lifts an operator whose own slots map onto `slots` of `dims` (identity on
/// every other slot). `slots` follow the operator's internal ordering and
/// need not be contiguous.
pub fn embed_on_slots(op: &Operator, slots: &[usize], dims: &Dim) -> Result<Operator> {
    let emb = SlotEmbedding::new(dims, slots)?;
    if emb.sub_total != op.dim.total() {
        return Err(Error::Structural(format!(
            "operator dimension {} does not match product of target slots {}",
            op.dim.total(),
            emb.sub_total
        )));
    }
    let n = dims.total();
    let mut mat = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
    for &base in &emb.rest_offsets {
        for si in 0..emb.sub_total {
            for sj in 0..emb.sub_total {
                mat[(base + emb.slot_offsets[si], base + emb.slot_offsets[sj])] =
                    op.mat[(si, sj)];
            }
        }
    }
    Operator::new(dims.clone(), mat)
}

/// `ab - ba`.
pub fn commutator(a: &Operator, b: &Operator) -> Result<Operator> {
    if a.dim != b.dim {
        return Err(Error::Structural(format!(
            "commutator of mismatched dimensions {:?} vs {:?}",
            a.dim.dims(),
            b.dim.dims()
        )));
    }
    let mat = &a.mat * &b.mat - &b.mat * &a.mat;
    Operator::new(a.dim.clone(), mat)
}

/// `⟨psi|op|psi⟩`.
pub fn expectation(op: &Operator, psi: &StateVector) -> Result<C64> {
    if op.dim != *psi.dim() {
        return Err(Error::Structural(format!(
            "expectation dimension mismatch: operator {:?}, state {:?}",
            op.dim.dims(),
            psi.dim().dims()
        )));
    }
    let w = op.apply(psi.amplitudes());
    Ok(psi.amplitudes().dotc(&w))
}

/// `sqrt(⟨op²⟩ - ⟨op⟩²)` for a Hermitian operator; negative round-off is
/// clamped to zero.
pub fn std_dev(op: &Operator, psi: &StateVector) -> Result<f64> {
    if !op.is_hermitian() {
        return Err(Error::Contract(
            "standard deviation requires a Hermitian operator".into(),
        ));
    }
    if op.dim != *psi.dim() {
        return Err(Error::Structural(format!(
            "std_dev dimension mismatch: operator {:?}, state {:?}",
            op.dim.dims(),
            psi.dim().dims()
        )));
    }
    let w = op.apply(psi.amplitudes());
    // ⟨op²⟩ = ‖op ψ‖² for Hermitian op
    let second = w.norm_squared();
    let mean = psi.amplitudes().dotc(&w).re;
    Ok((second - mean * mean).max(0.0).sqrt())
}
