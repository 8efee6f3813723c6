//! Berry phases of the subsystem bands, the `(α, β)` Bloch-sphere picture of
//! the spin-½ doublet, and its spin-coherent-state form.
//!
//! The numeric phase is the gauge-invariant overlap product
//! `γ = −arg Π_j ⟨ψ_j|ψ_{j+1}⟩` around one period of the subsystem. The
//! direct integral `i∮⟨ψ|ψ̇⟩dt` in a fixed gauge is kept as a cross-check.
//! All phases are reported in `(−π, π]`.

use std::f64::consts::{PI, SQRT_2, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dynamics::{
    band_index, block_basis, block_diagonalize, build_h, closed_form_spectrum, from_new_basis, numeric_eigenstate,
    subsystem_block, Band, HamiltonianSpec, DEGENERACY_THRESHOLD,
};
use crate::tensor::{c, eig_hermitian, expm, inner, ComplexMatrix, I, ONE, ZERO};
use crate::{Error, Result};

/// Target for the step-doubling error estimate of [`berry_numeric`].
pub const BERRY_TARGET: f64 = 1e-4;
/// Largest loop discretization [`berry_numeric`] will try.
pub const MAX_STEPS: usize = 65_536;
/// Smallest loop discretization accepted.
pub const MIN_STEPS: usize = 16;

/// Reduces an angle into `(−π, π]`.
pub fn wrap_phase(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Distance between two phases on the circle.
pub fn phase_distance(a: f64, b: f64) -> f64 {
    wrap_phase(a - b).abs()
}

/// `γ₊ = −2π(1/2 − (√2/3) sin θ)`, `γ₋ = −γ₊`, `γ₀ = 0`, wrapped into `(−π, π]`.
pub fn berry_analytic(theta: f64, band: Band) -> f64 {
    let g = -TAU * (0.5 - SQRT_2 / 3.0 * theta.sin());
    match band {
        Band::Plus => wrap_phase(g),
        Band::Minus => wrap_phase(-g),
        Band::Zero => 0.0,
    }
}

/// `α = arccos((2√2/3) sin θ)` and `β ∈ [0, 2π)` with
/// `sinα cosβ ∝ −sinθ cosΩt + 3 cosθ sinΩt`,
/// `sinα sinβ ∝ sinθ sinΩt + 3 cosθ cosΩt`.
pub fn alpha_beta(theta: f64, omega_t: f64) -> (f64, f64) {
    let (st, ct) = theta.sin_cos();
    let (sw, cw) = omega_t.sin_cos();
    let alpha = (2.0 * SQRT_2 / 3.0 * st).clamp(-1.0, 1.0).acos();
    let beta = (st * sw + 3.0 * ct * cw)
        .atan2(-st * cw + 3.0 * ct * sw)
        .rem_euclid(TAU);
    (alpha, beta)
}

/// `Ω(C) = 2π(1 − cos α)`.
pub fn solid_angle(alpha: f64) -> f64 {
    TAU * (1.0 - alpha.cos())
}

/// Spin-½ operators `(S₁, S₂, S₃)` on the doublet `(|1⟩, |2⟩)`, with `|1⟩` the
/// `S₃ = +½` state.
pub fn spin_half_ops() -> [ComplexMatrix; 3] {
    let s1 = ComplexMatrix::from_vec(2, 2, vec![ZERO, c(0.5, 0.0), c(0.5, 0.0), ZERO]).expect("2x2");
    let s2 = ComplexMatrix::from_vec(2, 2, vec![ZERO, c(0.0, -0.5), c(0.0, 0.5), ZERO]).expect("2x2");
    let s3 = ComplexMatrix::diag_real(&[0.5, -0.5]);
    [s1, s2, s3]
}

/// `C(1)(sinα cosβ S₁ + sinα sinβ S₂ + cosα S₃)` on the subsystem-1 doublet.
pub fn doublet_from_angles(s: &HamiltonianSpec, t: f64) -> ComplexMatrix {
    let (alpha, beta) = alpha_beta(s.theta, s.big_omega() * t);
    let [s1, s2, s3] = spin_half_ops();
    let ck = s.prefactor(1).expect("k = 1 is valid");
    let field = &(&s1.scale_real(alpha.sin() * beta.cos()) + &s2.scale_real(alpha.sin() * beta.sin()))
        + &s3.scale_real(alpha.cos());
    field.scale_real(ck)
}

/// Distance between [`doublet_from_angles`] and the `(|1⟩, |2⟩)` block of `O H Oᵀ`.
pub fn alpha_beta_residual(s: &HamiltonianSpec, t: f64) -> f64 {
    let ht = block_diagonalize(&build_h(s, t)).expect("9x9");
    ht.submatrix(&[0, 1]).dist(&doublet_from_angles(s, t))
}

/// One adiabatic loop: subsystem `k`, a band, and `N` time steps over one
/// period `T⁽ᵏ⁾`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LoopSpec {
    pub spec: HamiltonianSpec,
    pub subsystem: usize,
    pub band: Band,
    pub steps: usize,
}

impl LoopSpec {
    pub fn new(spec: HamiltonianSpec, subsystem: usize, band: Band, steps: usize) -> Self {
        Self {
            spec,
            subsystem,
            band,
            steps,
        }
    }

    /// `T⁽ᵏ⁾ = 2π/|ω(k)|`.
    pub fn period(&self) -> Result<f64> {
        let w = self.spec.omega(self.subsystem)?;
        if w == 0.0 {
            return Err(Error::ZeroFrequency("ω(k) = 0: the loop never closes"));
        }
        Ok(TAU / w.abs())
    }

    /// Closed-form phase for this loop. A negative `ω(k)` runs the loop
    /// backwards and flips the sign.
    pub fn analytic_phase(&self) -> Result<f64> {
        let w = self.spec.omega(self.subsystem)?;
        Ok(wrap_phase(w.signum() * berry_analytic(self.spec.theta, self.band)))
    }

    fn validate(&self) -> Result<()> {
        self.spec.validate()?;
        block_basis(self.subsystem)?;
        if self.steps < MIN_STEPS {
            return Err(Error::InvalidParameter(format!(
                "at least {MIN_STEPS} loop steps are required, got {}",
                self.steps
            )));
        }
        let st = self.spec.theta.sin();
        if st.abs() <= DEGENERACY_THRESHOLD {
            return Err(Error::DegenerateSpectrum { sin_theta: st });
        }
        self.period().map(|_| ())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BerryResult {
    pub subsystem: usize,
    pub band: Band,
    pub theta: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub numeric_phase: f64,
    pub analytic_phase: f64,
    pub steps: usize,
    pub richardson_estimate: f64,
}

impl BerryResult {
    pub fn error(&self) -> f64 {
        phase_distance(self.numeric_phase, self.analytic_phase)
    }
}

/// `−arg Π_j ⟨ψ_j|ψ_{j+1}⟩` for a closed loop, `ψ_N ≡ ψ_0`, wrapped into `(−π, π]`.
pub fn overlap_product_phase(states: &[Vec<Complex64>]) -> f64 {
    let n = states.len();
    let prod = (0..n).fold(ONE, |acc, j| acc * inner(&states[j], &states[(j + 1) % n]));
    wrap_phase(-prod.arg())
}

/// Block eigenvectors of one band at `t_j = jT/N`, `j = 0..N`.
pub fn loop_states(l: &LoopSpec) -> Result<Vec<Vec<Complex64>>> {
    l.validate()?;
    sample_loop(l)
}

fn sample_loop(l: &LoopSpec) -> Result<Vec<Vec<Complex64>>> {
    let period = l.period()?;
    let k = l.subsystem;
    let idx = band_index(&l.spec, k, l.band)?;
    let mut expected = closed_form_spectrum(&l.spec, k)?;
    expected.sort_by(f64::total_cmp);
    let scale = expected[2].abs().max(1.0);
    (0..l.steps)
        .map(|j| {
            let t = j as f64 * period / l.steps as f64;
            let block = subsystem_block(&build_h(&l.spec, t), k)?;
            let es = eig_hermitian(&block.h)?;
            // Ordering by eigenvalue is only sound while the spectrum stays put.
            let drift = es
                .values
                .iter()
                .zip(&expected)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            if drift > 1e-8 * scale {
                return Err(Error::InvalidParameter(format!(
                    "block spectrum drifted by {drift:e} at t = {t}; band tracking by order is invalid"
                )));
            }
            Ok(es.vectors[idx].clone())
        })
        .collect()
}

/// Overlap-product phase of one loop at a fixed `N`.
pub fn overlap_phase(l: &LoopSpec) -> Result<f64> {
    Ok(overlap_product_phase(&loop_states(l)?))
}

/// Numeric Berry phase with step doubling.
///
/// Starts at `l.steps` and doubles `N` until `|γ_N − γ_{N/2}|/3 ≤ 1e-4`.
/// Fails with `NotConverged` if that has not happened by [`MAX_STEPS`].
pub fn berry_numeric(l: &LoopSpec) -> Result<BerryResult> {
    l.validate()?;
    let mut n = l.steps;
    let mut coarse = overlap_product_phase(&sample_loop(&LoopSpec { steps: n / 2, ..*l })?);
    loop {
        let fine = overlap_phase(&LoopSpec { steps: n, ..*l })?;
        let estimate = phase_distance(fine, coarse) / 3.0;
        if estimate <= BERRY_TARGET {
            return Ok(BerryResult {
                subsystem: l.subsystem,
                band: l.band,
                theta: l.spec.theta,
                omega1: l.spec.omega1,
                omega2: l.spec.omega2,
                numeric_phase: fine,
                analytic_phase: l.analytic_phase()?,
                steps: n,
                richardson_estimate: estimate,
            });
        }
        if n * 2 > MAX_STEPS {
            return Err(Error::NotConverged { estimate, steps: n });
        }
        coarse = fine;
        n *= 2;
    }
}

/// Rotates `v` so its largest-modulus component is real and positive.
/// Ties go to the lowest index.
pub fn fix_gauge(v: &[Complex64]) -> Vec<Complex64> {
    let mut best = 0;
    for (i, z) in v.iter().enumerate() {
        if z.norm() > v[best].norm() * (1.0 + 1e-9) {
            best = i;
        }
    }
    let phase = v[best].conj() / v[best].norm();
    v.iter().map(|z| z * phase).collect()
}

/// `i∮⟨ψ|ψ̇⟩dt` in the gauge of [`fix_gauge`], with a central-difference
/// derivative on the periodic grid.
pub fn berry_direct_integral(l: &LoopSpec) -> Result<f64> {
    let states: Vec<_> = loop_states(l)?.iter().map(|v| fix_gauge(v)).collect();
    let n = states.len();
    let mut acc = 0.0;
    for j in 0..n {
        let next = &states[(j + 1) % n];
        let prev = &states[(j + n - 1) % n];
        let diff: Vec<_> = next.iter().zip(prev).map(|(a, b)| a - b).collect();
        // i⟨ψ|ψ̇⟩dt with ψ̇dt ≈ (ψ_{j+1} − ψ_{j−1})/2
        acc += (I * inner(&states[j], &diff) * 0.5).re;
    }
    Ok(wrap_phase(acc))
}

/// Sign convention for `ζ` in the coherent-state generator `exp[ζS̃₊ − ζ*S̃₋]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZetaConvention {
    /// `ζ = e^{−iβ}α/2`, read literally.
    AsPrinted,
    /// `ζ = −e^{−iβ}α/2`, which rotates `|2⟩` onto the band-`+` eigenvector.
    SignCorrected,
}

impl ZetaConvention {
    pub fn zeta(self, alpha: f64, beta: f64) -> Complex64 {
        let z = Complex64::from_polar(alpha / 2.0, -beta);
        match self {
            ZetaConvention::AsPrinted => z,
            ZetaConvention::SignCorrected => -z,
        }
    }
}

/// `S̃₊⁽¹⁾ = |1⟩⟨2|` in new-basis coordinates.
fn s_tilde_plus() -> ComplexMatrix {
    ComplexMatrix::unit(9, 0, 1)
}

/// `exp[ζS̃₊ − ζ*S̃₋]|2⟩` (band `+`) or `… |1⟩` (band `−`), returned in the
/// old two-qutrit basis (lex order).
pub fn coherent_state(s: &HamiltonianSpec, t: f64, band: Band, convention: ZetaConvention) -> Result<Vec<Complex64>> {
    let start = match band {
        Band::Plus => 1,
        Band::Minus => 0,
        Band::Zero => {
            return Err(Error::InvalidParameter(
                "the singlet band has no coherent-state form".into(),
            ))
        }
    };
    let (alpha, beta) = alpha_beta(s.theta, s.big_omega() * t);
    let zeta = convention.zeta(alpha, beta);
    let sp = s_tilde_plus();
    let generator = &sp.scale(zeta) - &sp.dagger().scale(zeta.conj());
    let v = expm(&generator).column(start);
    Ok(from_new_basis(&v))
}

/// `1 − |⟨formula|numeric⟩|` for band `+` or `−` of subsystem 1.
pub fn coherent_state_mismatch(s: &HamiltonianSpec, t: f64, band: Band, convention: ZetaConvention) -> Result<f64> {
    let formula = coherent_state(s, t, band, convention)?;
    let numeric = numeric_eigenstate(s, 1, band, t)?;
    Ok(1.0 - inner(&formula, &numeric).norm())
}

/// Max over bands `±` of the phase-free mismatch of the coherent-state form
/// with `ζ = −e^{−iβ}α/2`.
pub fn coherent_state_check(s: &HamiltonianSpec, t: f64) -> Result<f64> {
    let st = s.theta.sin();
    if st.abs() <= DEGENERACY_THRESHOLD {
        return Err(Error::DegenerateSpectrum { sin_theta: st });
    }
    Ok(
        coherent_state_mismatch(s, t, Band::Plus, ZetaConvention::SignCorrected)?.max(coherent_state_mismatch(
            s,
            t,
            Band::Minus,
            ZetaConvention::SignCorrected,
        )?),
    )
}

/// `−e^{−iβ}sin(α/2)|1⟩ + cos(α/2)|2⟩` (band `+`) and
/// `cos(α/2)|1⟩ + e^{iβ}sin(α/2)|2⟩` (band `−`), lex order.
pub fn explicit_spin_state(s: &HamiltonianSpec, t: f64, band: Band) -> Result<Vec<Complex64>> {
    let (alpha, beta) = alpha_beta(s.theta, s.big_omega() * t);
    let (sh, ch) = (alpha / 2.0).sin_cos();
    let mut v = vec![ZERO; 9];
    match band {
        Band::Plus => {
            v[0] = -Complex64::from_polar(sh, -beta);
            v[1] = c(ch, 0.0);
        }
        Band::Minus => {
            v[0] = c(ch, 0.0);
            v[1] = Complex64::from_polar(sh, beta);
        }
        Band::Zero => return Err(Error::InvalidParameter("the singlet band has no spin-½ form".into())),
    }
    Ok(from_new_basis(&v))
}

/// `|1⟩ = O(|10⟩+|01⟩)/√2` and `|2⟩ = O|−1−1⟩`, written back in the old basis.
pub fn doublet_states() -> [Vec<Complex64>; 2] {
    [
        from_new_basis(&crate::tensor::basis_vector(9, 0)),
        from_new_basis(&crate::tensor::basis_vector(9, 1)),
    ]
}
