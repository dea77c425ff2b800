use super::{hermitian_eigen, C64, Dim, SlotEmbedding};
use crate::error::{Error, Result};
use crate::{DENSITY_POSITIVITY_TOL, ENTROPY_EIGENVALUE_CUTOFF, HERMITICITY_TOL};
use nalgebra::{DMatrix, DVector};

/// Normalized pure state over a tensor-factored space.
#[derive(Clone, Debug)]
pub struct StateVector {
    dim: Dim,
    amp: DVector<C64>,
}

impl StateVector {
    /// Builds a state from amplitudes, normalizing them. A (numerically)
    /// zero vector is rejected.
    pub fn new(dim: Dim, amplitudes: Vec<C64>) -> Result<Self> {
        Self::from_dvector(dim, DVector::from_vec(amplitudes))
    }

    pub fn from_dvector(dim: Dim, amp: DVector<C64>) -> Result<Self> {
        if amp.len() != dim.total() {
            return Err(Error::Structural(format!(
                "amplitude length {} does not match dimension {}",
                amp.len(),
                dim.total()
            )));
        }
        let norm = amp.norm();
        if norm < 1e-15 {
            return Err(Error::Structural("state vector has zero norm".into()));
        }
        Ok(Self {
            dim,
            amp: amp / C64::new(norm, 0.0),
        })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(dim: Dim, index: usize) -> Result<Self> {
        if index >= dim.total() {
            return Err(Error::Structural(format!(
                "basis index {index} out of range for dimension {}",
                dim.total()
            )));
        }
        let mut amp = DVector::from_element(dim.total(), C64::new(0.0, 0.0));
        amp[index] = C64::new(1.0, 0.0);
        Ok(Self { dim, amp })
    }

    pub fn dim(&self) -> &Dim {
        &self.dim
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amp
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        if self.dim != other.dim {
            return Err(Error::Structural("inner product dimension mismatch".into()));
        }
        Ok(self.amp.dotc(&other.amp))
    }
}

/// Hermitian, unit-trace, positive-semidefinite matrix. Validated at
/// construction; eigenvalues are cached for entropy evaluation.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    dim: Dim,
    mat: DMatrix<C64>,
    eigenvalues: Vec<f64>,
}

impl DensityMatrix {
    pub fn new(dim: Dim, mat: DMatrix<C64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() || mat.nrows() != dim.total() {
            return Err(Error::Structural(format!(
                "density matrix size {}x{} does not match dimension {}",
                mat.nrows(),
                mat.ncols(),
                dim.total()
            )));
        }
        if super::operator::hermiticity_defect(&mat) > HERMITICITY_TOL {
            return Err(Error::Contract("density matrix is not Hermitian".into()));
        }
        let trace: C64 = (0..mat.nrows()).map(|i| mat[(i, i)]).sum();
        if (trace.re - 1.0).abs() > 1e-12 || trace.im.abs() > 1e-12 {
            return Err(Error::Contract(format!(
                "density matrix trace {trace} is not 1"
            )));
        }
        let (eigenvalues, _) = hermitian_eigen(&mat);
        let mut eigenvalues: Vec<f64> = eigenvalues.iter().copied().collect();
        eigenvalues.sort_by(f64::total_cmp);
        if eigenvalues.first().copied().unwrap_or(0.0) < -DENSITY_POSITIVITY_TOL {
            return Err(Error::Contract(format!(
                "density matrix has negative eigenvalue {}",
                eigenvalues[0]
            )));
        }
        Ok(Self {
            dim,
            mat,
            eigenvalues,
        })
    }

    pub fn dim(&self) -> &Dim {
        &self.dim
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.mat
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }
}

fn validate_keep(dim: &Dim, keep: &[usize]) -> Result<Vec<usize>> {
    if keep.is_empty() {
        return Err(Error::Structural("partial trace with empty keep set".into()));
    }
    let mut keep: Vec<usize> = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if let Some(&bad) = keep.iter().find(|&&s| s >= dim.n_slots()) {
        return Err(Error::Structural(format!(
            "keep slot {bad} out of range for {} subsystems",
            dim.n_slots()
        )));
    }
    Ok(keep)
}

/// Reduced density matrix of a pure state over the kept subsystems.
pub fn partial_trace_state(psi: &StateVector, keep: &[usize]) -> Result<DensityMatrix> {
    let keep = validate_keep(psi.dim(), &keep)?;
    let emb = SlotEmbedding::new(psi.dim(), &keep)?;
    let kept_dims: Vec<usize> = keep.iter().map(|&s| psi.dim().dims()[s]).collect();
    let d = emb.sub_total;
    let mut mat = DMatrix::from_element(d, d, C64::new(0.0, 0.0));
    for &base in &emb.rest_offsets {
        for a in 0..d {
            let va = psi.amplitudes()[base + emb.slot_offsets[a]];
            if va == C64::new(0.0, 0.0) {
                continue;
            }
            for b in 0..d {
                let vb = psi.amplitudes()[base + emb.slot_offsets[b]];
                mat[(a, b)] += va * vb.conj();
            }
        }
    }
    DensityMatrix::new(Dim::new(kept_dims)?, mat)
}

/// Reduced density matrix of a mixed state over the kept subsystems.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let keep = validate_keep(rho.dim(), &keep)?;
    let emb = SlotEmbedding::new(rho.dim(), &keep)?;
    let kept_dims: Vec<usize> = keep.iter().map(|&s| rho.dim().dims()[s]).collect();
    let d = emb.sub_total;
    let mut mat = DMatrix::from_element(d, d, C64::new(0.0, 0.0));
    for &base in &emb.rest_offsets {
        for a in 0..d {
            for b in 0..d {
                mat[(a, b)] += rho.matrix()[(
                    base + emb.slot_offsets[a],
                    base + emb.slot_offsets[b],
                )];
            }
        }
    }
    DensityMatrix::new(Dim::new(kept_dims)?, mat)
}

/// Von Neumann entropy `-Σ λ ln λ` over eigenvalues above the cutoff.
pub fn vn_entropy(rho: &DensityMatrix) -> f64 {
    let s: f64 = rho
        .eigenvalues()
        .iter()
        .filter(|&&l| l > ENTROPY_EIGENVALUE_CUTOFF)
        .map(|&l| -l * l.ln())
        .sum();
    s.max(0.0)
}
