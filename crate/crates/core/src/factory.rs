//! Constructors for the physical systems, observables, and states used by the
//! experiments: spins, truncated oscillators, composite observables,
//! perfectly correlated (entangled) states, product states, and probe states.

use crate::algebra::{embed_on_slots, C64, Dim, Operator, StateVector};
use crate::error::{Error, Result};
use crate::INTERIOR_SUPPORT_TOL;
use nalgebra::{DMatrix, DVector};
use serde::Deserialize;

/// Kind of single-particle system a scenario can ask for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemKind {
    Qubit,
    SpinJ,
    TruncatedOscillator,
    Grid,
}

/// Single-particle system description. `grid_spacing` is only meaningful for
/// the `Grid` kind, which provides a position observable but no momentum.
#[derive(Clone, Debug)]
pub struct SystemSpec {
    pub kind: SystemKind,
    pub levels: usize,
    pub hbar: f64,
    pub grid_spacing: f64,
}

impl SystemSpec {
    pub fn new(kind: SystemKind, levels: usize, hbar: f64) -> Result<Self> {
        let spec = Self {
            kind,
            levels,
            hbar,
            grid_spacing: 1.0,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.levels < 2 {
            return Err(Error::Structural(format!(
                "system must have at least 2 levels, got {}",
                self.levels
            )));
        }
        if self.kind == SystemKind::Qubit && self.levels != 2 {
            return Err(Error::Structural("qubit systems have exactly 2 levels".into()));
        }
        if !(self.hbar > 0.0) {
            return Err(Error::Structural(format!("hbar must be positive, got {}", self.hbar)));
        }
        if self.kind == SystemKind::Grid && !(self.grid_spacing > 0.0) {
            return Err(Error::Structural("grid spacing must be positive".into()));
        }
        Ok(())
    }
}

/// Conjugate position/momentum-like observable pair on one particle.
#[derive(Clone, Debug)]
pub struct ObservablePair {
    pub q: Operator,
    pub p: Operator,
    pub hbar: f64,
}

/// Angular momentum matrices with `[jx, jy] = i jz` (hbar absorbed).
#[derive(Clone, Debug)]
pub struct SpinOps {
    pub jx: Operator,
    pub jy: Operator,
    pub jz: Operator,
}

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Pauli X on a single qubit.
pub fn sigma_x() -> Operator {
    let m = DMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]);
    Operator::new(Dim::single(2).unwrap(), m).unwrap()
}

/// Pauli Y on a single qubit.
pub fn sigma_y() -> Operator {
    let m = DMatrix::from_row_slice(
        2,
        2,
        &[c(0.0), C64::new(0.0, -1.0), C64::new(0.0, 1.0), c(0.0)],
    );
    Operator::new(Dim::single(2).unwrap(), m).unwrap()
}

/// Pauli Z on a single qubit.
pub fn sigma_z() -> Operator {
    let m = DMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]);
    Operator::new(Dim::single(2).unwrap(), m).unwrap()
}

/// Annihilation operator of the `levels`-dimensional truncated ladder:
/// `a|n⟩ = √n |n-1⟩`.
pub fn ladder(levels: usize) -> Result<Operator> {
    if levels < 2 {
        return Err(Error::Structural(format!(
            "ladder needs at least 2 levels, got {levels}"
        )));
    }
    Operator::from_fn(Dim::single(levels)?, |i, j| {
        if j == i + 1 {
            c((j as f64).sqrt())
        } else {
            c(0.0)
        }
    })
}

/// Standard angular momentum matrices for half-integer `j`, in the basis
/// `m = j, j-1, …, -j`.
pub fn spin_ops(j: f64) -> Result<SpinOps> {
    let two_j = 2.0 * j;
    if (two_j - two_j.round()).abs() > 1e-9 || two_j.round() < 1.0 {
        return Err(Error::Structural(format!(
            "spin quantum number must be a positive half-integer, got {j}"
        )));
    }
    let dim_n = two_j.round() as usize + 1;
    let dim = Dim::single(dim_n)?;
    let m_of = |k: usize| j - k as f64;

    let jz = Operator::from_fn(dim.clone(), |i, jj| {
        if i == jj {
            c(m_of(i))
        } else {
            c(0.0)
        }
    })?;
    // J+ raises m, which lowers the basis index: (J+)[k-1, k]
    let jp = Operator::from_fn(dim.clone(), |i, jj| {
        if jj == i + 1 {
            let m = m_of(jj);
            c((j * (j + 1.0) - m * (m + 1.0)).sqrt())
        } else {
            c(0.0)
        }
    })?;
    let jm = jp.adjoint();
    let jx = jp.add(&jm)?.scaled(c(0.5));
    let jy = jp.sub(&jm)?.scaled(C64::new(0.0, -0.5));
    Ok(SpinOps { jx, jy, jz })
}

/// Truncated-oscillator conjugate pair: `q = sqrt(hbar/2)(a + a†)`,
/// `p = i sqrt(hbar/2)(a† - a)`. The commutator `[q, p] = i hbar` holds on
/// every Fock level except the truncation edge.
pub fn truncated_oscillator(levels: usize, hbar: f64) -> Result<ObservablePair> {
    if !(hbar > 0.0) {
        return Err(Error::Structural(format!("hbar must be positive, got {hbar}")));
    }
    let a = ladder(levels)?;
    let ad = a.adjoint();
    let s = c((hbar / 2.0).sqrt());
    let q = a.add(&ad)?.scaled(s);
    let p = ad.sub(&a)?.scaled(C64::new(0.0, (hbar / 2.0).sqrt()));
    Ok(ObservablePair { q, p, hbar })
}

/// Diagonal position observable on a uniform grid centered at zero.
pub fn grid_position(levels: usize, spacing: f64) -> Result<Operator> {
    if levels < 2 {
        return Err(Error::Structural("grid needs at least 2 points".into()));
    }
    if !(spacing > 0.0) {
        return Err(Error::Structural("grid spacing must be positive".into()));
    }
    let mid = (levels as f64 - 1.0) / 2.0;
    Operator::from_fn(Dim::single(levels)?, |i, j| {
        if i == j {
            c((i as f64 - mid) * spacing)
        } else {
            c(0.0)
        }
    })
}

/// Sum of single-particle copies lifted to the `n`-particle space:
/// `Σ_k I ⊗ … ⊗ op ⊗ … ⊗ I`.
pub fn composite_observable(op: &Operator, n: usize) -> Result<Operator> {
    if n == 0 {
        return Err(Error::Structural("particle count must be positive".into()));
    }
    if n == 1 {
        return Ok(op.clone());
    }
    let m = op.dim().n_slots();
    let mut dims = Vec::with_capacity(m * n);
    for _ in 0..n {
        dims.extend_from_slice(op.dim().dims());
    }
    let dims = Dim::new(dims)?;
    let mut acc = Operator::zero(dims.clone());
    for k in 0..n {
        let slots: Vec<usize> = (k * m..(k + 1) * m).collect();
        acc = acc.add(&embed_on_slots(op, &slots, &dims)?)?;
    }
    Ok(acc)
}

/// Perfectly correlated `n`-particle state `Σ_x sqrt(w_x) |x…x⟩`, normalized.
/// For `n = 1` this is an ordinary superposition over the levels.
pub fn correlated_state(weights: &[f64], n: usize) -> Result<StateVector> {
    if n == 0 {
        return Err(Error::Structural("particle count must be positive".into()));
    }
    if weights.is_empty() {
        return Err(Error::Structural("empty weight vector".into()));
    }
    if weights.iter().any(|&w| w < 0.0) {
        return Err(Error::Structural("weights must be non-negative".into()));
    }
    if weights.iter().all(|&w| w == 0.0) {
        return Err(Error::Structural("weights must not all be zero".into()));
    }
    let d = weights.len();
    let dim = Dim::uniform(d, n)?;
    let mut amp = DVector::from_element(dim.total(), c(0.0));
    for (x, &w) in weights.iter().enumerate() {
        // index of |x…x⟩
        let mut idx = 0usize;
        for _ in 0..n {
            idx = idx * d + x;
        }
        amp[idx] = c(w.sqrt());
    }
    StateVector::from_dvector(dim, amp)
}

/// Kronecker product of the parts, renormalized.
pub fn product_state(parts: &[&StateVector]) -> Result<StateVector> {
    let first = parts
        .first()
        .ok_or_else(|| Error::Structural("product of an empty state list".into()))?;
    let mut dim = first.dim().clone();
    let mut amp = first.amplitudes().clone();
    for part in &parts[1..] {
        dim = dim.concat(part.dim())?;
        amp = amp.kronecker(part.amplitudes());
    }
    StateVector::from_dvector(dim, amp)
}

/// Ground (|0⟩ Fock) state of an `levels`-dimensional oscillator probe.
pub fn oscillator_ground_probe(levels: usize, hbar: f64) -> Result<StateVector> {
    if levels < 2 {
        return Err(Error::Structural(format!(
            "probe needs at least 2 levels, got {levels}"
        )));
    }
    if !(hbar > 0.0) {
        return Err(Error::Structural(format!("hbar must be positive, got {hbar}")));
    }
    StateVector::basis(Dim::single(levels)?, 0)
}

/// Total probability carried by basis states where any subsystem sits on one
/// of its top two levels.
pub fn edge_probability(psi: &StateVector) -> f64 {
    let dim = psi.dim();
    let mut p = 0.0;
    for (idx, amp) in psi.amplitudes().iter().enumerate() {
        let pr = amp.norm_sqr();
        if pr == 0.0 {
            continue;
        }
        let on_edge = (0..dim.n_slots())
            .any(|s| dim.digit(idx, s) + 2 >= dim.dims()[s]);
        if on_edge {
            p += pr;
        }
    }
    p
}

/// Truncation-edge predicate: commutator identities are asserted only on
/// states whose edge probability stays below [`INTERIOR_SUPPORT_TOL`].
pub fn is_interior_supported(psi: &StateVector) -> bool {
    edge_probability(psi) < INTERIOR_SUPPORT_TOL
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        commutator, expectation, partial_trace_state, std_dev, tensor, vn_entropy,
    };

    #[test]
    fn spin_half_is_half_pauli() {
        let s = spin_ops(0.5).unwrap();
        for (got, want) in [
            (&s.jx, sigma_x().scaled(c(0.5))),
            (&s.jy, sigma_y().scaled(c(0.5))),
            (&s.jz, sigma_z().scaled(c(0.5))),
        ] {
            let diff = (got.matrix() - want.matrix()).map(|z| z.norm()).max();
            assert!(diff <= 1e-12);
        }
        let comm = commutator(&s.jx, &s.jy).unwrap();
        let diff = comm.sub(&s.jz.scaled(C64::new(0.0, 1.0))).unwrap().max_abs();
        assert!(diff <= 1e-12);
    }

    #[test]
    fn spin_one_jz_spectrum() {
        let s = spin_ops(1.0).unwrap();
        let mut ev: Vec<f64> = s
            .jz
            .matrix()
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        for (a, b) in ev.iter().zip([-1.0, 0.0, 1.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn casimir_identity() {
        for j in [0.5, 1.0, 1.5, 2.0] {
            let s = spin_ops(j).unwrap();
            let sum = s
                .jx
                .mul(&s.jx)
                .unwrap()
                .add(&s.jy.mul(&s.jy).unwrap())
                .unwrap()
                .add(&s.jz.mul(&s.jz).unwrap())
                .unwrap();
            let expect =
                Operator::identity(s.jz.dim().clone()).scaled(c(j * (j + 1.0)));
            let diff = sum.sub(&expect).unwrap().max_abs();
            assert!(diff <= 1e-10, "j={j}: {diff}");
        }
    }

    #[test]
    fn non_half_integer_spin_rejected() {
        assert!(matches!(spin_ops(0.7), Err(Error::Structural(_))));
    }

    #[test]
    fn two_level_oscillator_is_scaled_paulis() {
        // N=2, hbar=1: q = σx/√2, p = σy/√2
        let pair = truncated_oscillator(2, 1.0).unwrap();
        let s = c(1.0 / 2.0f64.sqrt());
        assert!(pair.q.sub(&sigma_x().scaled(s)).unwrap().max_abs() <= 1e-12);
        assert!(pair.p.sub(&sigma_y().scaled(s)).unwrap().max_abs() <= 1e-12);
    }

    #[test]
    fn oscillator_commutator_interior_and_edge() {
        // independent oracle: build the ladder by hand and multiply directly
        let n = 8;
        let hbar = 1.0;
        let pair = truncated_oscillator(n, hbar).unwrap();
        let comm = commutator(&pair.q, &pair.p).unwrap();
        // ⟨0|[q,p]|0⟩ = i hbar
        let e00 = comm.matrix()[(0, 0)];
        assert!((e00 - C64::new(0.0, hbar)).norm() <= 1e-12);
        // ⟨7|[q,p]|7⟩ = -7 i hbar (truncation edge)
        let e77 = comm.matrix()[(n - 1, n - 1)];
        assert!((e77 - C64::new(0.0, -(n as f64 - 1.0) * hbar)).norm() <= 1e-12);
    }

    #[test]
    fn composite_observable_small_cases() {
        // n=1 returns the operator itself
        let single = composite_observable(&sigma_z(), 1).unwrap();
        assert!(single.sub(&sigma_z()).unwrap().max_abs() == 0.0);

        // n=2, σz: eigenvalues {2, 0, 0, -2}
        let two = composite_observable(&sigma_z(), 2).unwrap();
        let mut ev: Vec<f64> = two
            .matrix()
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        for (a, b) in ev.iter().zip([-2.0, 0.0, 0.0, 2.0]) {
            assert!((a - b).abs() < 1e-12);
        }

        // matches the manual Q⊗I + I⊗Q construction entrywise
        let id = Operator::identity(Dim::single(2).unwrap());
        let manual = tensor(&[&sigma_z(), &id])
            .unwrap()
            .add(&tensor(&[&id, &sigma_z()]).unwrap())
            .unwrap();
        assert!(two.sub(&manual).unwrap().max_abs() <= 1e-15);
    }

    #[test]
    fn correlated_equal_weights_is_bell() {
        let psi = correlated_state(&[1.0, 1.0], 2).unwrap();
        let r = 1.0 / 2.0f64.sqrt();
        assert!((psi.amplitudes()[0] - c(r)).norm() < 1e-12);
        assert!((psi.amplitudes()[3] - c(r)).norm() < 1e-12);
        assert!(psi.amplitudes()[1].norm() < 1e-15);
    }

    #[test]
    fn correlated_covariance_matches_scalar_variance() {
        // covariance of σz⊗I, I⊗σz on the correlated state equals the
        // weight-distribution variance of the σz eigenvalues
        let weights = [0.2, 0.8];
        let psi = correlated_state(&weights, 2).unwrap();
        let dims = psi.dim().clone();
        let z1 = crate::algebra::embed(&sigma_z(), 0, &dims).unwrap();
        let z2 = crate::algebra::embed(&sigma_z(), 1, &dims).unwrap();
        let cov = crate::relations::covariance(&z1, &z2, &psi).unwrap();

        // scalar oracle: eigenvalues {+1, -1} with normalized weights
        let wsum: f64 = weights.iter().sum();
        let evs = [1.0, -1.0];
        let mean: f64 = weights
            .iter()
            .zip(evs)
            .map(|(w, e)| w / wsum * e)
            .sum();
        let var: f64 = weights
            .iter()
            .zip(evs)
            .map(|(w, e)| w / wsum * (e - mean) * (e - mean))
            .sum();
        assert!((cov - var).abs() < 1e-12, "cov {cov} vs {var}");
    }

    #[test]
    fn correlated_reduction_entropy_is_weight_entropy() {
        let weights = [0.5, 0.3, 0.2];
        let psi = correlated_state(&weights, 2).unwrap();
        let rho = partial_trace_state(&psi, &[0]).unwrap();
        let wsum: f64 = weights.iter().sum();
        let expect: f64 = weights
            .iter()
            .map(|&w| {
                let p = w / wsum;
                -p * p.ln()
            })
            .sum();
        assert!((vn_entropy(&rho) - expect).abs() < 1e-10);
    }

    #[test]
    fn correlated_rejects_bad_weights() {
        assert!(matches!(
            correlated_state(&[0.0, 0.0], 2),
            Err(Error::Structural(_))
        ));
        assert!(matches!(
            correlated_state(&[-1.0, 2.0], 2),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn product_state_basics() {
        let zero = StateVector::basis(Dim::single(2).unwrap(), 0).unwrap();
        let prod = product_state(&[&zero, &zero]).unwrap();
        assert!((prod.amplitudes()[0] - c(1.0)).norm() < 1e-15);

        // entropy of any one-party reduction vanishes
        let plus = StateVector::new(
            Dim::single(2).unwrap(),
            vec![c(1.0), c(1.0)],
        )
        .unwrap();
        let prod = product_state(&[&plus, &zero]).unwrap();
        for keep in [0usize, 1] {
            let rho = partial_trace_state(&prod, &[keep]).unwrap();
            assert!(vn_entropy(&rho) < 1e-10);
        }
        assert!(matches!(product_state(&[]), Err(Error::Structural(_))));
    }

    #[test]
    fn product_state_composite_expectation_is_additive() {
        // ⟨Q(1,2)⟩ on ψ1⊗ψ2 equals ⟨Q⟩1 + ⟨Q⟩2
        let pair = truncated_oscillator(5, 1.0).unwrap();
        let psi1 = StateVector::new(
            Dim::single(5).unwrap(),
            vec![c(0.8), c(0.5), c(0.2), c(0.1), c(0.0)],
        )
        .unwrap();
        let psi2 = StateVector::new(
            Dim::single(5).unwrap(),
            vec![c(0.3), c(0.9), c(0.1), c(0.0), c(0.0)],
        )
        .unwrap();
        let prod = product_state(&[&psi1, &psi2]).unwrap();
        let q12 = composite_observable(&pair.q, 2).unwrap();
        let total = expectation(&q12, &prod).unwrap().re;
        let singles = expectation(&pair.q, &psi1).unwrap().re
            + expectation(&pair.q, &psi2).unwrap().re;
        assert!((total - singles).abs() < 1e-10);
    }

    #[test]
    fn ground_probe_moments() {
        let pair = truncated_oscillator(16, 1.0).unwrap();
        let zeta = oscillator_ground_probe(16, 1.0).unwrap();
        assert!(expectation(&pair.q, &zeta).unwrap().norm() < 1e-14);
        assert!(expectation(&pair.p, &zeta).unwrap().norm() < 1e-14);
        // ⟨q²⟩ = hbar/2
        let q2 = pair.q.mul(&pair.q).unwrap();
        assert!((expectation(&q2, &zeta).unwrap().re - 0.5).abs() < 1e-12);
        // minimum uncertainty product
        let prod = std_dev(&pair.q, &zeta).unwrap() * std_dev(&pair.p, &zeta).unwrap();
        assert!((prod - 0.5).abs() < 1e-9);
    }

    #[test]
    fn interior_support_predicate() {
        // support on the bottom of a 6-level pair: interior
        let dim = Dim::uniform(6, 2).unwrap();
        let interior = StateVector::basis(dim.clone(), 0).unwrap();
        assert!(is_interior_supported(&interior));
        // any amplitude on the top two levels breaks it
        let edge = StateVector::basis(dim, 5).unwrap();
        assert!(!is_interior_supported(&edge));
        // a bare qubit is always on its own truncation edge
        let qubit = StateVector::basis(Dim::single(2).unwrap(), 0).unwrap();
        assert!(!is_interior_supported(&qubit));
    }
}
