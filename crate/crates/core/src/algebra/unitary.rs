use super::{C64, Dim, Operator};
use crate::error::{Error, Result};
use crate::UNITARITY_TOL;
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

/// Above this size, unitarity of an explicit matrix is checked with random
/// probe vectors instead of the full O(n³) product.
const FULL_UNITARITY_CHECK_LIMIT: usize = 512;

/// Internal representation. Evolutions generated by a product `A ⊗ B` of
/// Hermitian factors keep the factored spectral form, so application costs
/// O(n·(da+db)) instead of O(n²) and no large eigendecomposition is needed.
#[derive(Clone, Debug)]
enum Repr {
    Dense(DMatrix<C64>),
    ProductSpectral {
        va: DMatrix<C64>,
        lam_a: DVector<f64>,
        vb: DMatrix<C64>,
        lam_b: DVector<f64>,
        t: f64,
    },
}

/// Unitary matrix on a tensor-factored space.
///
/// Constructed either from an explicit matrix (validated against
/// [`UNITARITY_TOL`]) or from a Hermitian generator, in which case it is
/// unitary by construction.
#[derive(Debug)]
pub struct Unitary {
    dim: Dim,
    repr: Repr,
    dense: OnceLock<DMatrix<C64>>,
}

impl Clone for Unitary {
    fn clone(&self) -> Self {
        let dense = OnceLock::new();
        if let Some(m) = self.dense.get() {
            let _ = dense.set(m.clone());
        }
        Self {
            dim: self.dim.clone(),
            repr: self.repr.clone(),
            dense,
        }
    }
}

impl Unitary {
    pub fn new(dim: Dim, mat: DMatrix<C64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() || mat.nrows() != dim.total() {
            return Err(Error::Structural(format!(
                "unitary size {}x{} does not match dimension {}",
                mat.nrows(),
                mat.ncols(),
                dim.total()
            )));
        }
        let n = mat.nrows();
        if n <= FULL_UNITARITY_CHECK_LIMIT {
            let defect = (mat.adjoint() * &mat - DMatrix::<C64>::identity(n, n))
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            if defect > UNITARITY_TOL {
                return Err(Error::Contract(format!(
                    "matrix is not unitary (max |U†U - I| = {defect:.3e})"
                )));
            }
        } else {
            // sample ‖U†(Uv) − v‖∞ on seeded random unit vectors
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..4 {
                let v = DVector::from_fn(n, |_, _| {
                    C64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
                });
                let nv = v.norm();
                let v = v / C64::new(nv, 0.0);
                let w = mat.ad_mul(&(&mat * &v)) - &v;
                let defect = w.iter().map(|z| z.norm()).fold(0.0, f64::max);
                if defect > UNITARITY_TOL {
                    return Err(Error::Contract(format!(
                        "matrix is not unitary (probe defect {defect:.3e})"
                    )));
                }
            }
        }
        Ok(Self {
            dim,
            repr: Repr::Dense(mat),
            dense: OnceLock::new(),
        })
    }

    pub fn identity(dim: Dim) -> Self {
        let n = dim.total();
        Self {
            dim,
            repr: Repr::Dense(DMatrix::identity(n, n)),
            dense: OnceLock::new(),
        }
    }

    /// `exp(-i t (a ⊗ b))` for Hermitian factors, kept in factored spectral
    /// form. The composite dimension list is the concatenation of the
    /// factors' lists.
    pub fn from_product_generator(a: &Operator, b: &Operator, t: f64) -> Result<Self> {
        if !a.is_hermitian() || !b.is_hermitian() {
            return Err(Error::Contract(
                "product-generator factors must be Hermitian".into(),
            ));
        }
        let dim = a.dim().concat(b.dim())?;
        let (lam_a, va) = hermitian_eigen(a.matrix());
        let (lam_b, vb) = hermitian_eigen(b.matrix());
        Ok(Self {
            dim,
            repr: Repr::ProductSpectral {
                va,
                lam_a,
                vb,
                lam_b,
                t,
            },
        dense: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> &Dim {
        &self.dim
    }

    /// Dense entries; materialized on first use for factored representations.
    pub fn matrix(&self) -> &DMatrix<C64> {
        match &self.repr {
            Repr::Dense(m) => m,
            Repr::ProductSpectral { .. } => self.dense.get_or_init(|| {
                let n = self.dim.total();
                let mut m = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
                for j in 0..n {
                    let mut e = DVector::from_element(n, C64::new(0.0, 0.0));
                    e[j] = C64::new(1.0, 0.0);
                    let col = self.apply(&e);
                    for i in 0..n {
                        m[(i, j)] = col[i];
                    }
                }
                m
            }),
        }
    }

    /// `U v`.
    pub fn apply(&self, v: &DVector<C64>) -> DVector<C64> {
        match &self.repr {
            Repr::Dense(m) => m * v,
            Repr::ProductSpectral {
                va,
                lam_a,
                vb,
                lam_b,
                t,
            } => apply_product_spectral(va, lam_a, vb, lam_b, *t, v),
        }
    }

    /// `U† v` without materializing the adjoint.
    pub fn apply_adjoint(&self, v: &DVector<C64>) -> DVector<C64> {
        match &self.repr {
            Repr::Dense(m) => m.ad_mul(v),
            Repr::ProductSpectral {
                va,
                lam_a,
                vb,
                lam_b,
                t,
            } => apply_product_spectral(va, lam_a, vb, lam_b, -*t, v),
        }
    }
}

/// `(Va ⊗ Vb) · exp(-i t λa⊗λb) · (Va ⊗ Vb)† · v` via the row-major
/// reshape `vec(M)`: `(A ⊗ B) vec(M) = vec(A M Bᵀ)`.
fn apply_product_spectral(
    va: &DMatrix<C64>,
    lam_a: &DVector<f64>,
    vb: &DMatrix<C64>,
    lam_b: &DVector<f64>,
    t: f64,
    v: &DVector<C64>,
) -> DVector<C64> {
    let da = va.nrows();
    let db = vb.nrows();
    debug_assert_eq!(v.len(), da * db);
    // reshape row-major: M[i, j] = v[i*db + j]
    let m = DMatrix::from_fn(da, db, |i, j| v[i * db + j]);
    // (Va† ⊗ Vb†) v  =  Va† M conj(Vb)
    let mut w = va.ad_mul(&m) * vb.conjugate();
    for i in 0..da {
        for j in 0..db {
            w[(i, j)] *= C64::new(0.0, -t * lam_a[i] * lam_b[j]).exp();
        }
    }
    // (Va ⊗ Vb) w = Va w Vbᵀ
    let out = va * w * vb.transpose();
    DVector::from_fn(da * db, |k, _| out[(k / db, k % db)])
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues and the
/// matching unitary eigenvector matrix.
pub(crate) fn hermitian_eigen(mat: &DMatrix<C64>) -> (DVector<f64>, DMatrix<C64>) {
    let eig = mat.clone().symmetric_eigen();
    (eig.eigenvalues, eig.eigenvectors)
}

/// `exp(-i h t)` via spectral decomposition of the Hermitian generator, so the
/// result is unitary to round-off.
pub fn unitary_from_generator(h: &Operator, t: f64) -> Result<Unitary> {
    if !h.is_hermitian() {
        return Err(Error::Contract(
            "evolution generator must be Hermitian".into(),
        ));
    }
    let (eigenvalues, vectors) = hermitian_eigen(h.matrix());
    let n = h.dim().total();
    // columns of V scaled by the phases, then times V†
    let mut scaled = vectors.clone();
    for (j, lambda) in eigenvalues.iter().enumerate() {
        let phase = C64::new(0.0, -lambda * t).exp();
        for i in 0..n {
            scaled[(i, j)] *= phase;
        }
    }
    let mat = &scaled * vectors.adjoint();
    Ok(Unitary {
        dim: h.dim().clone(),
        repr: Repr::Dense(mat),
        dense: OnceLock::new(),
    })
}
