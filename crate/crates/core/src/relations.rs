//! Evaluation and reporting of the four uncertainty relations (Robertson,
//! naive noise-disturbance product, Ozawa, Fujikawa), the quantum covariance
//! function, and the entanglement-scaling experiment in which identical
//! measurements act on perfectly correlated n-particle states and the
//! per-particle bound contracts from hbar/2 to hbar/(2n).

use crate::algebra::{
    commutator, embed, expectation, partial_trace_state, std_dev, vn_entropy, C64, Operator,
    StateVector,
};
use crate::error::{Error, Result};
use crate::factory::{
    composite_observable, correlated_state, is_interior_supported, oscillator_ground_probe,
    truncated_oscillator, SystemKind, SystemSpec,
};
use crate::measure::{composite_model, von_neumann_model, MeasurementModel};
use crate::MAX_TOTAL_DIM;
use nalgebra::DVector;
use serde::Serialize;

/// Probe size used by the scaling experiment. Two-level probes keep the full
/// composite within the dense-storage cap at n = 4 with 4-level particles.
pub const SCALING_PROBE_LEVELS: usize = 2;

/// Which inequality a report refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Robertson,
    NaiveProduct,
    Ozawa,
    Fujikawa,
}

impl Relation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Relation::Robertson => "robertson",
            Relation::NaiveProduct => "naive_product",
            Relation::Ozawa => "ozawa",
            Relation::Fujikawa => "fujikawa",
        }
    }

    /// Relations whose violation is an error rather than an expected outcome.
    pub fn must_hold(&self) -> bool {
        !matches!(self, Relation::NaiveProduct)
    }
}

/// Outcome of one inequality check: left side, right side, and whether
/// `lhs - rhs ≥ -tolerance` (a tie at the tolerance boundary counts as
/// satisfied).
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub relation: Relation,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub satisfied: bool,
    pub tolerance: f64,
    pub context: String,
}

impl RelationReport {
    pub fn evaluate(
        relation: Relation,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        context: impl Into<String>,
    ) -> Self {
        let margin = lhs - rhs;
        Self {
            relation,
            lhs,
            rhs,
            margin,
            satisfied: margin >= -tolerance,
            tolerance,
            context: context.into(),
        }
    }
}

fn commutator_bound(a: &Operator, b: &Operator, psi: &StateVector) -> Result<f64> {
    let comm = commutator(a, b)?;
    Ok(expectation(&comm, psi)?.norm() / 2.0)
}

/// Robertson preparation bound: `σ(A)σ(B) ≥ |⟨[A,B]⟩|/2`.
pub fn robertson_check(
    a: &Operator,
    b: &Operator,
    psi: &StateVector,
    tol: f64,
) -> Result<RelationReport> {
    let lhs = std_dev(a, psi)? * std_dev(b, psi)?;
    let rhs = commutator_bound(a, b, psi)?;
    Ok(RelationReport::evaluate(
        Relation::Robertson,
        lhs,
        rhs,
        tol,
        "robertson",
    ))
}

/// Naive noise-disturbance product `ε(A)η(B) ≥ |⟨[A,B]⟩|/2`; not universally
/// valid, and reported as such.
pub fn naive_product_check(
    model: &MeasurementModel,
    b: &Operator,
    psi: &StateVector,
    tol: f64,
) -> Result<RelationReport> {
    let report = model.noise_report(b, psi)?;
    let rhs = commutator_bound(model.measured(), b, psi)?;
    Ok(RelationReport::evaluate(
        Relation::NaiveProduct,
        report.epsilon * report.eta,
        rhs,
        tol,
        model.label(),
    ))
}

/// Ozawa relation: `εη + εσ(B) + σ(A)η ≥ |⟨[A,B]⟩|/2`.
pub fn ozawa_check(
    model: &MeasurementModel,
    b: &Operator,
    psi: &StateVector,
    tol: f64,
) -> Result<RelationReport> {
    let r = model.noise_report(b, psi)?;
    let lhs = r.epsilon * r.eta + r.epsilon * r.sigma_b + r.sigma_a * r.eta;
    let rhs = commutator_bound(model.measured(), b, psi)?;
    Ok(RelationReport::evaluate(
        Relation::Ozawa,
        lhs,
        rhs,
        tol,
        model.label(),
    ))
}

/// Fujikawa strengthening: adds `σ(A)σ(B)` to the Ozawa left side.
pub fn fujikawa_check(
    model: &MeasurementModel,
    b: &Operator,
    psi: &StateVector,
    tol: f64,
) -> Result<RelationReport> {
    let r = model.noise_report(b, psi)?;
    let lhs = r.epsilon * r.eta
        + r.epsilon * r.sigma_b
        + r.sigma_a * r.eta
        + r.sigma_a * r.sigma_b;
    let rhs = commutator_bound(model.measured(), b, psi)?;
    Ok(RelationReport::evaluate(
        Relation::Fujikawa,
        lhs,
        rhs,
        tol,
        model.label(),
    ))
}

/// Quantum covariance `Re⟨q1 q2⟩ − ⟨q1⟩⟨q2⟩` of two embedded (commuting)
/// observables on the same space.
pub fn covariance(q1: &Operator, q2: &Operator, psi: &StateVector) -> Result<f64> {
    if !q1.is_hermitian() || !q2.is_hermitian() {
        return Err(Error::Contract("covariance requires Hermitian operators".into()));
    }
    if q1.dim() != psi.dim() || q2.dim() != psi.dim() {
        return Err(Error::Structural("covariance dimension mismatch".into()));
    }
    let w1 = q1.apply(psi.amplitudes());
    let w2 = q2.apply(psi.amplitudes());
    // ⟨ψ| q1 q2 |ψ⟩ = ⟨q1 ψ | q2 ψ⟩ for Hermitian q1
    let prod = w1.dotc(&w2).re;
    let e1 = expectation(q1, psi)?.re;
    let e2 = expectation(q2, psi)?.re;
    Ok(prod - e1 * e2)
}

/// Standard deviation of the n-particle composite observable `Σ_k op_k` on
/// `psi`.
pub fn sigma_composite(op: &Operator, n: usize, psi: &StateVector) -> Result<f64> {
    let comp = composite_observable(op, n)?;
    if comp.dim() != psi.dim() {
        return Err(Error::Structural(format!(
            "state dimension {:?} does not match {n} copies of the observable",
            psi.dim().dims()
        )));
    }
    std_dev(&comp, psi)
}

/// One row of the entanglement-scaling experiment.
///
/// Direct columns (`sigma_q`, `epsilon`, …) come from evaluating the full
/// composite; `*1` columns are those divided by n. The `*_factored` columns
/// carry the factorized per-particle values instead: marginal single-particle
/// deviations for sigma, and the per-device noise/disturbance rms within the
/// composite for epsilon/eta. Comparing `epsilon` against
/// `n * eps1_factored` exposes how far the mean-factorization assumption is
/// from the directly computed composite value.
#[derive(Clone, Debug, Serialize)]
pub struct ScalingRow {
    pub n: usize,
    pub g: f64,
    pub hbar: f64,
    pub sigma_q: f64,
    pub sigma_p: f64,
    pub epsilon: f64,
    pub eta: f64,
    pub sigma_q1: f64,
    pub sigma_p1: f64,
    pub eps1: f64,
    pub eta1: f64,
    pub sigma_q1_factored: f64,
    pub sigma_p1_factored: f64,
    pub eps1_factored: f64,
    pub eta1_factored: f64,
    pub commutator_mag: f64,
    pub ozawa_pp_lhs: f64,
    pub ozawa_pp_bound: f64,
    pub ozawa_pp_satisfied: bool,
    pub fujikawa_pp_lhs: f64,
    pub fujikawa_pp_bound: f64,
    pub fujikawa_pp_satisfied: bool,
    pub entropy: f64,
    pub interior_ok: bool,
}

impl ScalingRow {
    /// Whether the row passes the checks the scale command gates its exit
    /// code on: interior support, the composite commutator identity, and the
    /// per-particle bounds.
    pub fn passes(&self, commutator_tol: f64) -> bool {
        self.interior_ok
            && (self.commutator_mag - self.n as f64 * self.hbar).abs() <= commutator_tol
            && self.ozawa_pp_satisfied
            && self.fujikawa_pp_satisfied
    }
}

/// Runs the scaling experiment: for each n in `1..=n_max`, prepares the
/// perfectly correlated state over `weights` (zero-padded to the system
/// levels), measures every particle with an identical von Neumann device, and
/// records composite and per-particle noise, disturbance, deviations,
/// commutator expectation, per-particle bounds, and entanglement entropy.
pub fn scaling_experiment(
    spec: &SystemSpec,
    weights: &[f64],
    n_max: usize,
    g: f64,
    tol: f64,
) -> Result<Vec<ScalingRow>> {
    spec.validate()?;
    if spec.kind != SystemKind::TruncatedOscillator {
        return Err(Error::Structural(
            "scaling experiment requires truncated_oscillator systems (the only kind with a conjugate q,p pair)".into(),
        ));
    }
    if n_max == 0 {
        return Err(Error::Structural("n_max must be at least 1".into()));
    }
    if weights.len() > spec.levels {
        return Err(Error::Structural(format!(
            "weights cover {} levels but the system has only {}",
            weights.len(),
            spec.levels
        )));
    }

    let per_particle = spec.levels * SCALING_PROBE_LEVELS;
    let mut feasible = 0usize;
    let mut t = 1usize;
    for n in 1..=n_max {
        match t.checked_mul(per_particle) {
            Some(v) if v <= MAX_TOTAL_DIM => {
                t = v;
                feasible = n;
            }
            _ => break,
        }
    }
    if feasible < n_max {
        return Err(Error::DimensionCap(format!(
            "n = {} needs total dimension {per_particle}^{} > {MAX_TOTAL_DIM}; \
             lower levels or n_max (largest feasible n here is {feasible})",
            feasible + 1,
            feasible + 1
        )));
    }

    let mut padded = weights.to_vec();
    padded.resize(spec.levels, 0.0);

    let pair = truncated_oscillator(spec.levels, spec.hbar)?;
    let probe_pair = truncated_oscillator(SCALING_PROBE_LEVELS, spec.hbar)?;
    let probe_ground = oscillator_ground_probe(SCALING_PROBE_LEVELS, spec.hbar)?;
    let single = von_neumann_model(&pair.q, &probe_pair, &probe_ground, g)?;

    let mut rows = Vec::with_capacity(n_max);
    let mut model = single.clone();
    for n in 1..=n_max {
        if n > 1 {
            model = composite_model(&model, &single)?;
        }
        let psi = correlated_state(&padded, n)?;

        let q_comp = composite_observable(&pair.q, n)?;
        let p_comp = composite_observable(&pair.p, n)?;
        let sigma_q = std_dev(&q_comp, &psi)?;
        let sigma_p = std_dev(&p_comp, &psi)?;

        // one evolution, then per-device noise and disturbance vectors;
        // their sums are exactly the composite Eq.-style evaluations
        let eval = model.evaluation(&psi)?;
        let zero = DVector::from_element(eval.phi.len(), C64::new(0.0, 0.0));
        let mut noise_sum = zero.clone();
        let mut disturb_sum = zero;
        let mut eps1_factored = 0.0;
        let mut eta1_factored = 0.0;
        for k in 0..n {
            let nv = model.part_noise_vector(&eval, k)?;
            let dv = model.part_disturbance_vector(&eval, k, &pair.p)?;
            if k == 0 {
                eps1_factored = nv.norm();
                eta1_factored = dv.norm();
            }
            noise_sum += nv;
            disturb_sum += dv;
        }
        let epsilon = noise_sum.norm();
        let eta = disturb_sum.norm();

        let comm = commutator(&q_comp, &p_comp)?;
        let commutator_mag = expectation(&comm, &psi)?.norm();

        let nf = n as f64;
        let sigma_q1 = sigma_q / nf;
        let sigma_p1 = sigma_p / nf;
        let eps1 = epsilon / nf;
        let eta1 = eta / nf;

        let q1 = embed(&pair.q, 0, psi.dim())?;
        let p1 = embed(&pair.p, 0, psi.dim())?;
        let sigma_q1_factored = std_dev(&q1, &psi)?;
        let sigma_p1_factored = std_dev(&p1, &psi)?;

        let ozawa_pp_lhs = eps1 * eta1 + eps1 * sigma_p1 + sigma_q1 * eta1;
        let ozawa_pp_bound = spec.hbar / (2.0 * nf);
        let fujikawa_pp_lhs = ozawa_pp_lhs + sigma_q1 * sigma_p1;
        let fujikawa_pp_bound = spec.hbar / nf;

        let entropy = vn_entropy(&partial_trace_state(&psi, &[0])?);

        rows.push(ScalingRow {
            n,
            g,
            hbar: spec.hbar,
            sigma_q,
            sigma_p,
            epsilon,
            eta,
            sigma_q1,
            sigma_p1,
            eps1,
            eta1,
            sigma_q1_factored,
            sigma_p1_factored,
            eps1_factored,
            eta1_factored,
            commutator_mag,
            ozawa_pp_lhs,
            ozawa_pp_bound,
            ozawa_pp_satisfied: ozawa_pp_lhs - ozawa_pp_bound >= -tol,
            fujikawa_pp_lhs,
            fujikawa_pp_bound,
            fujikawa_pp_satisfied: fujikawa_pp_lhs - fujikawa_pp_bound >= -tol,
            entropy,
            interior_ok: is_interior_supported(&psi),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Dim, tensor};
    use crate::factory::{product_state, sigma_x, sigma_y, sigma_z};
    use crate::measure::cnot_model;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn circular_qubit() -> StateVector {
        StateVector::new(Dim::single(2).unwrap(), vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap()
    }

    #[test]
    fn robertson_saturated_pauli_case() {
        let zero = StateVector::basis(Dim::single(2).unwrap(), 0).unwrap();
        let r = robertson_check(&sigma_x(), &sigma_y(), &zero, 1e-9).unwrap();
        assert!((r.lhs - 1.0).abs() < 1e-12);
        assert!((r.rhs - 1.0).abs() < 1e-12);
        assert!(r.satisfied);
    }

    #[test]
    fn robertson_commuting_pair_trivially_holds() {
        let zero = StateVector::basis(Dim::single(2).unwrap(), 0).unwrap();
        let r = robertson_check(&sigma_z(), &sigma_z(), &zero, 1e-9).unwrap();
        assert!(r.rhs.abs() < 1e-14);
        assert!(r.satisfied);
    }

    #[test]
    fn cnot_violates_naive_but_not_ozawa() {
        let model = cnot_model();
        let psi = circular_qubit();
        let naive = naive_product_check(&model, &sigma_x(), &psi, 1e-9).unwrap();
        assert!(!naive.satisfied);
        assert!(naive.lhs.abs() < 1e-12);
        assert!((naive.rhs - 1.0).abs() < 1e-12);

        let ozawa = ozawa_check(&model, &sigma_x(), &psi, 1e-9).unwrap();
        assert!((ozawa.lhs - 2.0f64.sqrt()).abs() < 1e-12);
        assert!(ozawa.satisfied);

        let fuji = fujikawa_check(&model, &sigma_x(), &psi, 1e-9).unwrap();
        // adds σ(σz)σ(σx) = 1·1 on this state
        assert!((fuji.lhs - (2.0f64.sqrt() + 1.0)).abs() < 1e-12);
        assert!(fuji.satisfied);
    }

    #[test]
    fn fujikawa_minus_ozawa_is_sigma_product() {
        let model = cnot_model();
        let psi = StateVector::new(
            Dim::single(2).unwrap(),
            vec![c(0.8, 0.1), c(0.2, -0.5)],
        )
        .unwrap();
        let o = ozawa_check(&model, &sigma_x(), &psi, 1e-9).unwrap();
        let f = fujikawa_check(&model, &sigma_x(), &psi, 1e-9).unwrap();
        let r = model.noise_report(&sigma_x(), &psi).unwrap();
        assert!((f.lhs - o.lhs - r.sigma_a * r.sigma_b).abs() <= 1e-12);
    }

    #[test]
    fn noiseless_case_reduces_to_robertson() {
        // A = B = σz on the CNOT model: ε = η = 0, so the Fujikawa report
        // degenerates to the Robertson one field for field
        let model = cnot_model();
        let psi = circular_qubit();
        let f = fujikawa_check(&model, &sigma_z(), &psi, 1e-9).unwrap();
        let r = robertson_check(&sigma_z(), &sigma_z(), &psi, 1e-9).unwrap();
        assert!((f.lhs - r.lhs).abs() <= 1e-12);
        assert!((f.rhs - r.rhs).abs() <= 1e-12);
        assert_eq!(f.satisfied, r.satisfied);

        // and the Ozawa left side collapses to zero with zero bound
        let o = ozawa_check(&model, &sigma_z(), &psi, 1e-9).unwrap();
        assert!(o.lhs.abs() <= 1e-12);
        assert!(o.rhs.abs() <= 1e-12);
        assert!(o.satisfied);
    }

    #[test]
    fn covariance_product_and_bell() {
        let zero = StateVector::basis(Dim::single(2).unwrap(), 0).unwrap();
        let plus =
            StateVector::new(Dim::single(2).unwrap(), vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        let prod = product_state(&[&zero, &plus]).unwrap();
        let dims = prod.dim().clone();
        let z1 = embed(&sigma_z(), 0, &dims).unwrap();
        let z2 = embed(&sigma_z(), 1, &dims).unwrap();
        assert!(covariance(&z1, &z2, &prod).unwrap().abs() < 1e-10);

        let bell = correlated_state(&[1.0, 1.0], 2).unwrap();
        assert!((covariance(&z1, &z2, &bell).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn covariance_saturates_for_full_support_correlation() {
        // equal weights over every oscillator level: cov(Q1, Q2) = ΔQ1·ΔQ2
        let levels = 6;
        let pair = truncated_oscillator(levels, 1.0).unwrap();
        let psi = correlated_state(&vec![1.0; levels], 2).unwrap();
        let dims = psi.dim().clone();
        let q1 = embed(&pair.q, 0, &dims).unwrap();
        let q2 = embed(&pair.q, 1, &dims).unwrap();
        let cov = covariance(&q1, &q2, &psi).unwrap();
        let d1 = std_dev(&q1, &psi).unwrap();
        let d2 = std_dev(&q2, &psi).unwrap();
        assert!((cov - d1 * d2).abs() < 1e-9, "cov {cov} vs {}", d1 * d2);
    }

    #[test]
    fn sigma_composite_cases() {
        // diagonal observable on the Bell-type state: σ(Z(1,2)) = 2σ(Z)₁
        let bell = correlated_state(&[1.0, 1.0], 2).unwrap();
        let s2 = sigma_composite(&sigma_z(), 2, &bell).unwrap();
        let single = correlated_state(&[1.0, 1.0], 1).unwrap();
        let s1 = std_dev(&sigma_z(), &single).unwrap();
        assert!((s2 - 2.0 * s1).abs() < 1e-10, "{s2} vs {}", 2.0 * s1);

        // product of identical parts: √2 scaling (zero covariance)
        let plus =
            StateVector::new(Dim::single(2).unwrap(), vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        let zero = StateVector::basis(Dim::single(2).unwrap(), 0).unwrap();
        let both = product_state(&[&zero, &zero]).unwrap();
        let _ = plus;
        let sz_prod = sigma_composite(&sigma_x(), 2, &both).unwrap();
        let sz_one = std_dev(&sigma_x(), &zero).unwrap();
        assert!((sz_prod - 2.0f64.sqrt() * sz_one).abs() < 1e-10);

        // n = 1 is the plain standard deviation
        let s = sigma_composite(&sigma_x(), 1, &zero).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_state_variances_add() {
        // σ(Q(1,2))² = ΔQ1² + ΔQ2² for product states
        let pair = truncated_oscillator(5, 1.0).unwrap();
        let a = StateVector::new(
            Dim::single(5).unwrap(),
            vec![c(0.7, 0.0), c(0.5, 0.1), c(0.2, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let b = StateVector::new(
            Dim::single(5).unwrap(),
            vec![c(0.2, 0.0), c(0.8, 0.0), c(0.3, -0.2), c(0.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let prod = product_state(&[&a, &b]).unwrap();
        let total = sigma_composite(&pair.q, 2, &prod).unwrap();
        let d1 = std_dev(&pair.q, &a).unwrap();
        let d2 = std_dev(&pair.q, &b).unwrap();
        assert!((total * total - d1 * d1 - d2 * d2).abs() < 1e-10);
    }

    #[test]
    fn composite_commutator_generalizes() {
        // ⟨[Q(1..n), P(1..n)]⟩ = n·i·hbar on interior-supported states
        let levels = 5;
        let pair = truncated_oscillator(levels, 1.0).unwrap();
        for n in 1..=3usize {
            let q = composite_observable(&pair.q, n).unwrap();
            let p = composite_observable(&pair.p, n).unwrap();
            let comm = commutator(&q, &p).unwrap();
            let psi = correlated_state(&[1.0, 1.0, 0.0, 0.0, 0.0], n).unwrap();
            assert!(is_interior_supported(&psi));
            let e = expectation(&comm, &psi).unwrap();
            assert!((e - c(0.0, n as f64)).norm() < 1e-8, "n={n}: {e}");
        }
    }

    #[test]
    fn scaling_two_particles_emits_halved_bounds() {
        for hbar in [1.0, 2.0] {
            let spec = SystemSpec::new(SystemKind::TruncatedOscillator, 4, hbar).unwrap();
            let rows = scaling_experiment(&spec, &[1.0, 1.0], 2, 1.0, 1e-6).unwrap();
            assert_eq!(rows.len(), 2);
            let r1 = &rows[0];
            assert_eq!(r1.ozawa_pp_bound, hbar / 2.0);
            let r2 = &rows[1];
            assert_eq!(r2.ozawa_pp_bound, hbar / 4.0);
            assert_eq!(r2.fujikawa_pp_bound, hbar / 2.0);
            assert!(r2.ozawa_pp_satisfied && r2.fujikawa_pp_satisfied);
            assert!((r2.commutator_mag - 2.0 * hbar).abs() < 1e-8);
            assert!((r2.entropy - 2.0f64.ln()).abs() < 1e-9);
            assert!(r2.interior_ok);
            // division bookkeeping of the per-particle columns
            assert!((r2.sigma_q - 2.0 * r2.sigma_q1).abs() < 1e-12);
            assert!(r1.entropy.abs() < 1e-12);
        }
    }

    #[test]
    fn scaling_rejects_oversized_requests() {
        let spec = SystemSpec::new(SystemKind::TruncatedOscillator, 4, 1.0).unwrap();
        let err = scaling_experiment(&spec, &[1.0, 1.0], 5, 1.0, 1e-6).unwrap_err();
        match err {
            Error::DimensionCap(msg) => assert!(msg.contains("4"), "msg: {msg}"),
            other => panic!("expected DimensionCap, got {other:?}"),
        }
    }

    #[test]
    fn scaling_requires_oscillator_kind() {
        let spec = SystemSpec::new(SystemKind::Qubit, 2, 1.0).unwrap();
        assert!(matches!(
            scaling_experiment(&spec, &[1.0, 1.0], 1, 1.0, 1e-6),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn robertson_holds_on_composite_operators() {
        // cross-check on a 2x3 space with generic Hermitian operators
        let d2 = Dim::single(2).unwrap();
        let d3 = Dim::single(3).unwrap();
        let s = crate::factory::spin_ops(1.0).unwrap();
        let a = tensor(&[&sigma_x(), &Operator::identity(d3.clone())]).unwrap();
        let b = tensor(&[&Operator::identity(d2), &s.jy]).unwrap();
        let psi = StateVector::new(
            Dim::new(vec![2, 3]).unwrap(),
            vec![
                c(0.5, 0.1),
                c(0.2, 0.0),
                c(0.1, -0.3),
                c(0.4, 0.0),
                c(0.0, 0.2),
                c(0.6, 0.0),
            ],
        )
        .unwrap();
        let r = robertson_check(&a, &b, &psi, 1e-9).unwrap();
        assert!(r.satisfied);
    }
}
