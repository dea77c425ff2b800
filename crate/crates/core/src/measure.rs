//! Indirect measurement models (system ⊗ probe, interaction unitary, pointer
//! observable) and the noise/disturbance functionals evaluated on them.
//!
//! The rms noise of a device measuring A is
//! `ε(A)² = ⟨(U†(I⊗M)U − A⊗I)²⟩` and the rms disturbance of B is
//! `η(B)² = ⟨(U†(B⊗I)U − B⊗I)²⟩`, both taken in the joint state ψ ⊗ ζ.
//! Composite two-device models expose the per-device noise pieces so the
//! additive-plus-cross-term decomposition can be audited rather than assumed.

use crate::algebra::{
    embed_on_slots, C64, Dim, Operator, SlotEmbedding, StateVector, Unitary,
};
use crate::error::{Error, Result};
use crate::factory::{product_state, sigma_z, ObservablePair};
use nalgebra::{DMatrix, DVector};

/// One constituent device of a (possibly composite) model: which system and
/// probe slots it owns, plus its own pointer and measured observable.
#[derive(Clone, Debug)]
struct ModelPart {
    sys_slots: Vec<usize>,
    probe_slots: Vec<usize>,
    pointer: Operator,
    measured: Operator,
}

/// Indirect measurement model: probe state ζ, interaction unitary U on
/// system ⊗ probe, pointer observable M on the probe, measured observable A
/// on the system.
#[derive(Clone, Debug)]
pub struct MeasurementModel {
    label: String,
    system_dim: Dim,
    probe_dim: Dim,
    probe_state: StateVector,
    interaction: Unitary,
    pointer: Operator,
    measured: Operator,
    parts: Vec<ModelPart>,
}

/// Noise/disturbance summary for one (model, B, ψ) evaluation.
#[derive(Clone, Copy, Debug)]
pub struct NoiseReport {
    pub epsilon: f64,
    pub mean_noise: f64,
    pub eta: f64,
    pub sigma_a: f64,
    pub sigma_b: f64,
}

/// One side (noise or disturbance) of the composite decomposition audit.
///
/// `lhs_sq` is the directly evaluated composite square; `additive` is the sum
/// of the per-device squares; `cross_true = lhs_sq - additive` is the actual
/// cross term; `cross_paper = 2·mean₁·mean₂` is the mean-factorized form the
/// two-device rearrangement predicts; `residual` is their difference.
/// `variance_k = rms² - mean²` audits the separable-state assumption that the
/// noise operator has zero variance.
#[derive(Clone, Copy, Debug)]
pub struct DecompositionBlock {
    pub lhs_sq: f64,
    pub part1_sq: f64,
    pub part2_sq: f64,
    pub additive: f64,
    pub cross_true: f64,
    pub cross_paper: f64,
    pub residual: f64,
    pub mean1: f64,
    pub mean2: f64,
    pub variance1: f64,
    pub variance2: f64,
}

/// Decomposition audit record for a two-device composite measurement.
#[derive(Clone, Copy, Debug)]
pub struct DecompositionAudit {
    pub noise: DecompositionBlock,
    pub disturbance: DecompositionBlock,
}

/// Joint state ψ⊗ζ together with its image under the interaction. Shared by
/// every noise/disturbance evaluation of the same (model, ψ).
pub(crate) struct Evaluation {
    pub phi: DVector<C64>,
    pub evolved: DVector<C64>,
}

impl MeasurementModel {
    /// Builds a single-device model; composite models come from
    /// [`composite_model`].
    pub fn new(
        label: impl Into<String>,
        probe_state: StateVector,
        interaction: Unitary,
        pointer: Operator,
        measured: Operator,
    ) -> Result<Self> {
        let system_dim = measured.dim().clone();
        let probe_dim = pointer.dim().clone();
        if probe_state.dim() != &probe_dim {
            return Err(Error::Structural(
                "probe state dimension does not match pointer".into(),
            ));
        }
        let full = system_dim.concat(&probe_dim)?;
        if interaction.dim().total() != full.total() {
            return Err(Error::Structural(format!(
                "interaction dimension {} does not match system × probe = {}",
                interaction.dim().total(),
                full.total()
            )));
        }
        if !pointer.is_hermitian() || !measured.is_hermitian() {
            return Err(Error::Contract(
                "pointer and measured observables must be Hermitian".into(),
            ));
        }
        let parts = vec![ModelPart {
            sys_slots: (0..system_dim.n_slots()).collect(),
            probe_slots: (0..probe_dim.n_slots()).collect(),
            pointer: pointer.clone(),
            measured: measured.clone(),
        }];
        Ok(Self {
            label: label.into(),
            system_dim,
            probe_dim,
            probe_state,
            interaction,
            pointer,
            measured,
            parts,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn system_dim(&self) -> &Dim {
        &self.system_dim
    }

    pub fn probe_dim(&self) -> &Dim {
        &self.probe_dim
    }

    pub fn probe_state(&self) -> &StateVector {
        &self.probe_state
    }

    pub fn interaction(&self) -> &Unitary {
        &self.interaction
    }

    pub fn pointer(&self) -> &Operator {
        &self.pointer
    }

    pub fn measured(&self) -> &Operator {
        &self.measured
    }

    /// Number of constituent devices.
    pub fn n_parts(&self) -> usize {
        self.parts.len()
    }

    fn full_dim(&self) -> Dim {
        self.system_dim.concat(&self.probe_dim).expect("validated at construction")
    }

    /// Full-space slot indices of the probe slots in `probe_dim` order.
    fn probe_slot_ids(&self, probe_slots: &[usize]) -> Vec<usize> {
        let off = self.system_dim.n_slots();
        probe_slots.iter().map(|&s| off + s).collect()
    }

    pub(crate) fn evaluation(&self, psi: &StateVector) -> Result<Evaluation> {
        if psi.dim() != &self.system_dim {
            return Err(Error::Structural(format!(
                "state dimension {:?} does not match model system {:?}",
                psi.dim().dims(),
                self.system_dim.dims()
            )));
        }
        let phi = psi.amplitudes().kronecker(self.probe_state.amplitudes());
        let evolved = self.interaction.apply(&phi);
        Ok(Evaluation { phi, evolved })
    }

    /// `(U†(I⊗M)U − A⊗I) |ψ⊗ζ⟩` for the given pointer/measured pieces.
    fn noise_vector_for(
        &self,
        eval: &Evaluation,
        pointer: &Operator,
        probe_slots: &[usize],
        measured: &Operator,
        sys_slots: &[usize],
    ) -> Result<DVector<C64>> {
        let full = self.full_dim();
        let m_emb = SlotEmbedding::new(&full, &self.probe_slot_ids(probe_slots))?;
        let w = m_emb.apply(pointer.matrix(), &eval.evolved);
        let x = self.interaction.apply_adjoint(&w);
        let a_emb = SlotEmbedding::new(&full, sys_slots)?;
        let y = a_emb.apply(measured.matrix(), &eval.phi);
        Ok(x - y)
    }

    /// `(U†(B⊗I)U − B⊗I) |ψ⊗ζ⟩` for a system observable on the given slots.
    fn disturbance_vector_for(
        &self,
        eval: &Evaluation,
        b: &Operator,
        sys_slots: &[usize],
    ) -> Result<DVector<C64>> {
        if !b.is_hermitian() {
            return Err(Error::Contract(
                "disturbance observable must be Hermitian".into(),
            ));
        }
        let full = self.full_dim();
        let emb = SlotEmbedding::new(&full, sys_slots)?;
        let w = emb.apply(b.matrix(), &eval.evolved);
        let x = self.interaction.apply_adjoint(&w);
        let y = emb.apply(b.matrix(), &eval.phi);
        Ok(x - y)
    }

    /// Noise vector of constituent device `k`, evaluated in the composite.
    pub(crate) fn part_noise_vector(
        &self,
        eval: &Evaluation,
        k: usize,
    ) -> Result<DVector<C64>> {
        let part = &self.parts[k];
        self.noise_vector_for(
            eval,
            &part.pointer,
            &part.probe_slots,
            &part.measured,
            &part.sys_slots,
        )
    }

    /// Disturbance vector of `b` acting on device `k`'s system slots.
    pub(crate) fn part_disturbance_vector(
        &self,
        eval: &Evaluation,
        k: usize,
        b: &Operator,
    ) -> Result<DVector<C64>> {
        let part = &self.parts[k];
        if b.dim().total()
            != part
                .sys_slots
                .iter()
                .map(|&s| self.system_dim.dims()[s])
                .product::<usize>()
        {
            return Err(Error::Structural(
                "disturbance observable does not match the device's particle".into(),
            ));
        }
        self.disturbance_vector_for(eval, b, &part.sys_slots)
    }

    /// Root-mean-square noise `ε(A)` in the system state `psi`.
    pub fn rms_noise(&self, psi: &StateVector) -> Result<f64> {
        let eval = self.evaluation(psi)?;
        let all_sys: Vec<usize> = (0..self.system_dim.n_slots()).collect();
        let all_probe: Vec<usize> = (0..self.probe_dim.n_slots()).collect();
        let n = self.noise_vector_for(&eval, &self.pointer, &all_probe, &self.measured, &all_sys)?;
        Ok(n.norm())
    }

    /// First-moment noise `⟨U†(I⊗M)U − A⊗I⟩`; may be negative.
    pub fn mean_noise(&self, psi: &StateVector) -> Result<f64> {
        let eval = self.evaluation(psi)?;
        let all_sys: Vec<usize> = (0..self.system_dim.n_slots()).collect();
        let all_probe: Vec<usize> = (0..self.probe_dim.n_slots()).collect();
        let n = self.noise_vector_for(&eval, &self.pointer, &all_probe, &self.measured, &all_sys)?;
        Ok(eval.phi.dotc(&n).re)
    }

    /// Root-mean-square disturbance `η(B)` inflicted on the system observable
    /// `b` by the measurement interaction.
    pub fn rms_disturbance(&self, b: &Operator, psi: &StateVector) -> Result<f64> {
        if b.dim() != &self.system_dim {
            return Err(Error::Structural(format!(
                "disturbance observable dimension {:?} does not match system {:?}",
                b.dim().dims(),
                self.system_dim.dims()
            )));
        }
        let eval = self.evaluation(psi)?;
        let all_sys: Vec<usize> = (0..self.system_dim.n_slots()).collect();
        let d = self.disturbance_vector_for(&eval, b, &all_sys)?;
        Ok(d.norm())
    }

    /// Full noise/disturbance summary for a relation check: ε(A), mean noise,
    /// η(B), and the preparation deviations σ(A), σ(B).
    pub fn noise_report(&self, b: &Operator, psi: &StateVector) -> Result<NoiseReport> {
        if b.dim() != &self.system_dim {
            return Err(Error::Structural(
                "disturbance observable dimension does not match system".into(),
            ));
        }
        let eval = self.evaluation(psi)?;
        let all_sys: Vec<usize> = (0..self.system_dim.n_slots()).collect();
        let all_probe: Vec<usize> = (0..self.probe_dim.n_slots()).collect();
        let n = self.noise_vector_for(&eval, &self.pointer, &all_probe, &self.measured, &all_sys)?;
        let d = self.disturbance_vector_for(&eval, b, &all_sys)?;
        Ok(NoiseReport {
            epsilon: n.norm(),
            mean_noise: eval.phi.dotc(&n).re,
            eta: d.norm(),
            sigma_a: crate::algebra::std_dev(&self.measured, psi)?,
            sigma_b: crate::algebra::std_dev(b, psi)?,
        })
    }
}

/// Canonical continuous model: interaction `exp(-i (g/hbar) A ⊗ P_probe)`
/// shifts the probe position by `g·A`; the pointer is `X_probe / g` so its
/// readout estimates A directly.
pub fn von_neumann_model(
    a_sys: &Operator,
    probe: &ObservablePair,
    probe_state: &StateVector,
    g: f64,
) -> Result<MeasurementModel> {
    if g == 0.0 {
        return Err(Error::Structural("coupling g must be nonzero".into()));
    }
    if !a_sys.is_hermitian() {
        return Err(Error::Contract("measured observable must be Hermitian".into()));
    }
    if probe_state.dim() != probe.q.dim() {
        return Err(Error::Structural(
            "probe state dimension does not match probe observables".into(),
        ));
    }
    // the A ⊗ P generator evolves in factored spectral form: two small
    // eigendecompositions instead of one on the joint space
    let interaction = Unitary::from_product_generator(a_sys, &probe.p, g / probe.hbar)?;
    let pointer = probe.q.scaled(C64::new(1.0 / g, 0.0));
    MeasurementModel::new(
        format!("von_neumann(g={g})"),
        probe_state.clone(),
        interaction,
        pointer,
        a_sys.clone(),
    )
}

/// Minimal exactly solvable discrete model: a qubit system controls a CNOT
/// onto a qubit probe prepared in |0⟩; pointer and measured observable are
/// both σz. The readout is noiseless while σx is maximally disturbed.
pub fn cnot_model() -> MeasurementModel {
    let dim2 = Dim::single(2).unwrap();
    let probe_state = StateVector::basis(dim2.clone(), 0).unwrap();
    let full = Dim::new(vec![2, 2]).unwrap();
    let zero = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let mut m = DMatrix::from_element(4, 4, zero);
    for s in 0..2 {
        for p in 0..2 {
            // |s, p⟩ -> |s, p ⊕ s⟩
            m[(2 * s + (p ^ s), 2 * s + p)] = one;
        }
    }
    let interaction = Unitary::new(full, m).unwrap();
    MeasurementModel::new("cnot", probe_state, interaction, sigma_z(), sigma_z()).unwrap()
}

/// `Σ_k I ⊗ … ⊗ pointer_k ⊗ … ⊗ I` over the probe slots; one pointer per
/// slot.
pub fn composite_probe_observable(
    pointers: &[&Operator],
    probe_dims: &Dim,
) -> Result<Operator> {
    if pointers.len() != probe_dims.n_slots() {
        return Err(Error::Structural(format!(
            "{} pointers supplied for {} probe slots",
            pointers.len(),
            probe_dims.n_slots()
        )));
    }
    let mut acc = Operator::zero(probe_dims.clone());
    for (k, pointer) in pointers.iter().enumerate() {
        acc = acc.add(&crate::algebra::embed(pointer, k, probe_dims)?)?;
    }
    Ok(acc)
}

/// Combines two devices acting on distinct particles into one model on
/// `(sys₁ ⊗ sys₂) ⊗ (probe₁ ⊗ probe₂)`. The embedded interactions commute, so
/// the combined interaction is their permuted Kronecker product; pointer and
/// measured observables are the sums of the embedded parts.
pub fn composite_model(
    m1: &MeasurementModel,
    m2: &MeasurementModel,
) -> Result<MeasurementModel> {
    let system_dim = m1.system_dim.concat(&m2.system_dim)?;
    let probe_dim = m1.probe_dim.concat(&m2.probe_dim)?;
    let full = system_dim.concat(&probe_dim)?;

    let n1s = m1.system_dim.n_slots();
    let n2s = m2.system_dim.n_slots();
    let n1p = m1.probe_dim.n_slots();
    let n2p = m2.probe_dim.n_slots();

    // slot layout: [sys1][sys2][probe1][probe2]
    let u1_slots: Vec<usize> = (0..n1s).chain(n1s + n2s..n1s + n2s + n1p).collect();
    let u2_slots: Vec<usize> = (n1s..n1s + n2s)
        .chain(n1s + n2s + n1p..n1s + n2s + n1p + n2p)
        .collect();

    let total = full.total();
    let ext1 = SlotEmbedding::new(&full, &u1_slots)?.extraction_table(total);
    let ext2 = SlotEmbedding::new(&full, &u2_slots)?.extraction_table(total);
    let u1 = m1.interaction.matrix();
    let u2 = m2.interaction.matrix();
    let mut mat = DMatrix::from_element(total, total, C64::new(0.0, 0.0));
    for j in 0..total {
        let e1j = ext1[j] as usize;
        let e2j = ext2[j] as usize;
        for i in 0..total {
            mat[(i, j)] =
                u1[(ext1[i] as usize, e1j)] * u2[(ext2[i] as usize, e2j)];
        }
    }
    let interaction = Unitary::new(full, mat)?;

    let pointer = embed_on_slots(&m1.pointer, &(0..n1p).collect::<Vec<_>>(), &probe_dim)?
        .add(&embed_on_slots(
            &m2.pointer,
            &(n1p..n1p + n2p).collect::<Vec<_>>(),
            &probe_dim,
        )?)?;
    let measured = embed_on_slots(&m1.measured, &(0..n1s).collect::<Vec<_>>(), &system_dim)?
        .add(&embed_on_slots(
            &m2.measured,
            &(n1s..n1s + n2s).collect::<Vec<_>>(),
            &system_dim,
        )?)?;
    let probe_state = product_state(&[&m1.probe_state, &m2.probe_state])?;

    let mut parts = Vec::with_capacity(m1.parts.len() + m2.parts.len());
    for part in &m1.parts {
        parts.push(part.clone());
    }
    for part in &m2.parts {
        parts.push(ModelPart {
            sys_slots: part.sys_slots.iter().map(|&s| s + n1s).collect(),
            probe_slots: part.probe_slots.iter().map(|&s| s + n1p).collect(),
            pointer: part.pointer.clone(),
            measured: part.measured.clone(),
        });
    }

    Ok(MeasurementModel {
        label: format!("{}+{}", m1.label, m2.label),
        system_dim,
        probe_dim,
        probe_state,
        interaction,
        pointer,
        measured,
        parts,
    })
}

/// Audits the composite-noise decomposition
/// `ε(A(1,2))² = ε₁² + ε₂² + cross` (and the analogous disturbance identity
/// for `b1`, `b2`) on `psi12`, reporting both the true cross term and the
/// mean-factorized form instead of assuming either.
pub fn decomposition_audit(
    m1: &MeasurementModel,
    m2: &MeasurementModel,
    b1: &Operator,
    b2: &Operator,
    psi12: &StateVector,
) -> Result<DecompositionAudit> {
    let comp = composite_model(m1, m2)?;
    let eval = comp.evaluation(psi12)?;

    let block = |v1: DVector<C64>, v2: DVector<C64>| -> DecompositionBlock {
        let part1_sq = v1.norm_squared();
        let part2_sq = v2.norm_squared();
        let mean1 = eval.phi.dotc(&v1).re;
        let mean2 = eval.phi.dotc(&v2).re;
        let lhs_sq = (v1 + v2).norm_squared();
        let additive = part1_sq + part2_sq;
        let cross_true = lhs_sq - additive;
        let cross_paper = 2.0 * mean1 * mean2;
        DecompositionBlock {
            lhs_sq,
            part1_sq,
            part2_sq,
            additive,
            cross_true,
            cross_paper,
            residual: cross_true - cross_paper,
            mean1,
            mean2,
            variance1: part1_sq - mean1 * mean1,
            variance2: part2_sq - mean2 * mean2,
        }
    };

    let n1 = comp.part_noise_vector(&eval, 0)?;
    let n2 = comp.part_noise_vector(&eval, 1)?;
    let noise = block(n1, n2);

    let d1 = comp.part_disturbance_vector(&eval, 0, b1)?;
    let d2 = comp.part_disturbance_vector(&eval, 1, b2)?;
    let disturbance = block(d1, d2);

    Ok(DecompositionAudit {
        noise,
        disturbance,
    })
}
