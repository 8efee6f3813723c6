//! The unitary Yang-Baxter matrix `R̆(θ, φ₁, φ₂) = ρ(x)[I + F(x)M]` with
//! `x = e^{iθ}`, the two-qutrit states it generates, and their negativity.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{build_m, on_sites_12, on_sites_23, su3_realization, HeckeParams, Label, QutritBasisMap};
use crate::tensor::{eig_hermitian, norm, partial_transpose, ComplexMatrix, Subsystem, ONE};
use crate::{Error, Result};

/// Reduces an angle into `[0, 2π)`.
pub fn canonical_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Spectral angle `θ` (`x = e^{iθ}`) and the two Hecke phases.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RParams {
    pub theta: f64,
    pub phi1: f64,
    pub phi2: f64,
}

impl RParams {
    /// Angles are canonicalized into `[0, 2π)`.
    pub fn new(theta: f64, phi1: f64, phi2: f64) -> Self {
        Self {
            theta: canonical_angle(theta),
            phi1: canonical_angle(phi1),
            phi2: canonical_angle(phi2),
        }
    }

    pub fn x(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }

    pub fn hecke(&self) -> HeckeParams {
        HeckeParams::new(self.phi1, self.phi2)
    }
}

/// `ρ(x)`, `F(x)` and the matrix-entry shorthands `a = x⁻¹ − x`,
/// `b = 2x + x⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightPair {
    pub rho: Complex64,
    pub f: Complex64,
    pub a: Complex64,
    pub b: Complex64,
}

fn weights_at(x: Complex64) -> WeightPair {
    let xi = x.inv();
    let a = xi - x;
    let b = 2.0 * x + xi;
    WeightPair {
        rho: b / 3.0,
        f: -(x - xi) / b,
        a,
        b,
    }
}

/// Weights on the unit circle. `b` never vanishes there since `|2x| ≠ |x⁻¹|`.
pub fn weights(theta: f64) -> WeightPair {
    weights_at(Complex64::from_polar(1.0, theta))
}

/// `F(x)` for an arbitrary nonzero spectral parameter.
pub fn f_of(x: Complex64) -> Complex64 {
    weights_at(x).f
}

/// `ρ(x)ρ(x⁻¹)[1 + 2F(x)F(x⁻¹)]`; equals 1 for the unitary solution.
pub fn unitarity_product(theta: f64) -> Complex64 {
    let w = weights(theta);
    let wi = weights(-theta);
    w.rho * wi.rho * (ONE + 2.0 * w.f * wi.f)
}

/// `F(x) + F(x⁻¹) + F(x)F(x⁻¹)`; vanishes for the unitary solution.
pub fn unitarity_sum(theta: f64) -> Complex64 {
    let f = weights(theta).f;
    let fi = weights(-theta).f;
    f + fi + f * fi
}

/// `R̆ = (1/3)(bI + aM)` in lex order.
pub fn build_r(p: &RParams) -> ComplexMatrix {
    r_from_weights(&weights(p.theta), &p.hecke())
}

fn r_from_weights(w: &WeightPair, h: &HeckeParams) -> ComplexMatrix {
    let id = ComplexMatrix::identity(9).scale(w.b / 3.0);
    &id + &build_m(h).scale(w.a / 3.0)
}

/// `R̆` in display order, for comparison with the printed 9×9 matrix.
pub fn build_r_display(p: &RParams) -> ComplexMatrix {
    QutritBasisMap::to_display(&build_r(p))
}

/// `‖R̆₁₂(x)R̆₂₃(xy)R̆₁₂(y) − R̆₂₃(y)R̆₁₂(xy)R̆₂₃(x)‖` on three qutrits.
pub fn ybe_residual(theta_x: f64, theta_y: f64, phi1: f64, phi2: f64) -> f64 {
    ybe_residual_perturbed(theta_x, theta_y, phi1, phi2, 0.0)
}

/// Same as [`ybe_residual`] with the middle spectral parameter replaced by
/// `xy·e^{iε}`; any `ε ≠ 0` should break the identity.
pub fn ybe_residual_perturbed(theta_x: f64, theta_y: f64, phi1: f64, phi2: f64, epsilon: f64) -> f64 {
    let h = HeckeParams::new(phi1, phi2);
    let r = |theta: f64| r_from_weights(&weights(theta), &h);
    let rx = r(theta_x);
    let ry = r(theta_y);
    let rxy = r(theta_x + theta_y + epsilon);
    let lhs = on_sites_12(&rx).matmul(&on_sites_23(&rxy)).matmul(&on_sites_12(&ry));
    let rhs = on_sites_23(&ry).matmul(&on_sites_12(&rxy)).matmul(&on_sites_23(&rx));
    lhs.dist(&rhs)
}

/// The state `R̆|mn⟩` (column `(m, n)` of `R̆`), lex order.
pub fn act_on_basis(p: &RParams, m: i32, n: i32) -> Result<Vec<Complex64>> {
    let col = QutritBasisMap::lex(Label::from_value(m)?, Label::from_value(n)?);
    Ok(build_r(p).column(col))
}

/// Both negativity routes for a pure state: `(‖ρ^{T_A}‖₁ − 1)/2` and the
/// absolute sum of the negative eigenvalues of `ρ^{T_A}`.
pub fn negativity_routes(state: &[Complex64]) -> Result<(f64, f64)> {
    if state.len() != 9 {
        return Err(Error::BadShape {
            expected: "9-vector".into(),
            found: format!("{}-vector", state.len()),
        });
    }
    let nrm = norm(state);
    if (nrm - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized { norm: nrm });
    }
    let rho = ComplexMatrix::outer(state, state);
    let pt = partial_transpose(&rho, Subsystem::A)?;
    let values = eig_hermitian(&pt)?.values;
    let trace_norm: f64 = values.iter().map(|v| v.abs()).sum();
    let negative: f64 = values.iter().filter(|&&v| v < 0.0).map(|v| -v).sum();
    Ok(((trace_norm - 1.0) / 2.0, negative))
}

/// Negativity `N = (‖ρ^{T_A}‖₁ − 1)/2` of a normalized two-qutrit pure state.
pub fn negativity(state: &[Complex64]) -> Result<f64> {
    let (trace_route, eigen_route) = negativity_routes(state)?;
    debug_assert!(
        (trace_route - eigen_route).abs() < 1e-10,
        "negativity routes disagree: {trace_route} vs {eigen_route}"
    );
    Ok(trace_route)
}

/// Closed form `N(θ) = (4/9)(sin²θ + |sinθ|·√(1 + 8cos²θ))`.
pub fn negativity_closed(theta: f64) -> f64 {
    let (s, co) = theta.sin_cos();
    4.0 / 9.0 * (s * s + s.abs() * (1.0 + 8.0 * co * co).sqrt())
}

/// Terms `(coefficient, operator)` of the SU(3)-realization expansion of
/// `R̆`; the final term is the identity with coefficient `b/3`.
pub fn su3_expansion_terms(p: &RParams) -> Vec<(Complex64, ComplexMatrix)> {
    let w = weights(p.theta);
    let h = p.hecke();
    let (q1, q2, big_q) = (h.q1(), h.q2(), h.big_q());
    let a3 = w.a / 3.0;
    let r = |k| su3_realization(k).expect("k in 1..=3");
    let (r1, r2, r3) = (r(1), r(2), r(3));
    vec![
        (a3, r1.i_plus.clone()),
        (a3, r1.i_minus.clone()),
        (a3 * big_q, &r1.v_minus + &r1.u_plus),
        (a3 / big_q, &r1.u_minus + &r1.v_plus),
        (a3, r2.i_plus.clone()),
        (a3, r2.i_minus.clone()),
        (a3 * q1, &r2.v_plus + &r2.u_minus),
        (a3 / q1, &r2.v_minus + &r2.u_plus),
        (a3, r3.i_plus.clone()),
        (a3, r3.i_minus.clone()),
        (a3 * q2, &r3.v_plus + &r3.u_minus),
        (a3 / q2, &r3.v_minus + &r3.u_plus),
        (w.b / 3.0, ComplexMatrix::identity(9)),
    ]
}

pub fn sum_terms(terms: &[(Complex64, ComplexMatrix)]) -> ComplexMatrix {
    terms
        .iter()
        .fold(ComplexMatrix::zeros(9, 9), |acc, (coef, op)| &acc + &op.scale(*coef))
}

/// `‖Σ terms − R̆‖` for the SU(3)-realization expansion.
pub fn rebuild_from_su3(p: &RParams) -> f64 {
    sum_terms(&su3_expansion_terms(p)).dist(&build_r(p))
}
