//! The full verification suite as a list of [`CheckRecord`]s.
//!
//! Deterministic checks always run. Randomized checks draw from a
//! `ChaCha8Rng` seeded with [`VerifyConfig::seed`] and run only when
//! `trials > 0`, so a report is reproducible from `(seed, trials)`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    braid_generator, build_m, far_commutativity_residual, gellmann, hecke_residual, hecke_residual_with_g,
    quadratic_residual, structure_constants, su2_realization, su3_commutator_residual, su3_formula_mismatch,
    su3_realization, HeckeParams,
};
use crate::dynamics::{
    b_list_report, b_reconstruction_residual, b_vector, block_diagonalize, block_eigensystem, block_pattern_residual,
    build_h, build_h_fd, casimir_block_residual, closed_form_spectrum, eigenstate_report, new_basis_report, o_matrix,
    off_block_norm, periods, printed_form_report, subsystem_block, Band, HamiltonianSpec,
};
use crate::geometric::{
    alpha_beta_residual, berry_direct_integral, berry_numeric, coherent_state_check, coherent_state_mismatch,
    overlap_phase, phase_distance, LoopSpec, ZetaConvention,
};
use crate::report::CheckRecord;
use crate::tensor::{c, eig_hermitian, inner, ComplexMatrix, ONE};
use crate::yangbaxter::{
    act_on_basis, build_r, f_of, negativity, negativity_closed, rebuild_from_su3, unitarity_product, unitarity_sum,
    ybe_residual_perturbed, RParams,
};

/// Size of the spectral-parameter perturbation used by the YBE negative
/// control and by `self_test_negative`.
pub const YBE_PERTURBATION: f64 = 0.1;
/// Residual a negative control must exceed.
pub const NEGATIVE_CONTROL_FLOOR: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Number of random parameter points per randomized check.
    pub trials: usize,
    /// Algebraic tolerance.
    pub tol: f64,
    /// Berry numeric-vs-analytic tolerance.
    pub berry_tol: f64,
    /// Replace the YBE check by one with a perturbed `F(xy)`; the run must fail.
    pub self_test_negative: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            trials: 20,
            tol: 1e-10,
            berry_tol: 1e-5,
            self_test_negative: false,
        }
    }
}

/// True when no assertion failed.
pub fn all_pass(records: &[CheckRecord]) -> bool {
    records.iter().all(CheckRecord::ok)
}

struct Suite {
    cfg: VerifyConfig,
    rng: ChaCha8Rng,
    out: Vec<CheckRecord>,
}

impl Suite {
    fn assert(&mut self, name: &str, residual: f64, tol: f64, anchor: &str) {
        self.out.push(CheckRecord::assertion(name, residual, tol, anchor));
    }

    fn random_theta(&mut self) -> f64 {
        // stay clear of sinθ = 0 where H and the band gaps vanish
        loop {
            let th: f64 = self.rng.gen_range(0.0..2.0 * PI);
            if th.sin().abs() > 0.05 {
                return th;
            }
        }
    }

    fn random_phase(&mut self) -> f64 {
        self.rng.gen_range(0.0..2.0 * PI)
    }

    fn random_spec(&mut self) -> (HamiltonianSpec, f64) {
        let theta = self.random_theta();
        let w1 = self.rng.gen_range(0.2..3.0);
        let w2 = self.rng.gen_range(0.2..3.0);
        let t = self.rng.gen_range(0.0..10.0);
        (HamiltonianSpec::new(theta, w1, w2), t)
    }

    fn trials(&self) -> usize {
        self.cfg.trials
    }
}

fn max_over<T>(items: impl IntoIterator<Item = T>, f: impl FnMut(T) -> f64) -> f64 {
    items.into_iter().map(f).fold(0.0, f64::max)
}

/// Runs every check and returns one record per check.
pub fn run_checks(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let mut s = Suite {
        cfg: *cfg,
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        out: Vec::new(),
    };
    algebra_checks(&mut s);
    hecke_checks(&mut s);
    rmatrix_checks(&mut s);
    negativity_checks(&mut s);
    hamiltonian_checks(&mut s);
    block_diagonalization_checks(&mut s);
    berry_checks(&mut s);
    discrepancy_reports(&mut s);
    s.out
}

fn algebra_checks(s: &mut Suite) {
    let tol = 1e-12;
    let g = gellmann();
    let norm_res = max_over(0..8, |a| {
        max_over(0..8, |b| {
            let expected = if a == b { 2.0 } else { 0.0 };
            (g[a].matmul(&g[b]).trace() - c(expected, 0.0)).norm()
        })
    });
    s.assert(
        "gellmann_normalization",
        norm_res,
        tol,
        "Gell-Mann matrices tr(λaλb) = 2δab",
    );
    let f = structure_constants();
    let anti = max_over(0..512, |i| {
        let (a, b, cc) = (i / 64, (i / 8) % 8, i % 8);
        (f[a][b][cc] + f[b][a][cc]).abs() + (f[a][b][cc] - f[b][cc][a]).abs()
    });
    s.assert(
        "structure_constants_antisymmetric",
        anti,
        tol,
        "SU(3) structure constants",
    );

    for k in 1..=3 {
        let r = su3_realization(k).expect("k in range");
        s.assert(
            &format!("su3_commutators_k{k}"),
            su3_commutator_residual(&r),
            tol,
            "SU(3) realizations satisfy [I_a, I_b] = i f_abc I_c",
        );
        s.assert(
            &format!("su3_formulas_k{k}"),
            su3_formula_mismatch(k).expect("k in range"),
            tol,
            "SU(3) realization product formulas",
        );
    }
    let inter = max_over([(1, 2), (1, 3), (2, 3)], |(i, j)| {
        let gi = su3_realization(i).expect("k").generators();
        let gj = su3_realization(j).expect("k").generators();
        max_over(gi.iter(), |a| max_over(gj.iter(), |b| a.commutator(b).frobenius_norm()))
    });
    s.assert(
        "su3_inter_subsystem_commute",
        inter,
        tol,
        "realizations for different k commute",
    );

    for k in 1..=3 {
        let r = su2_realization(k).expect("k in range");
        let comm = r.s_plus.commutator(&r.s_minus).dist(&r.s3.scale_real(2.0));
        let raise = r.s3.commutator(&r.s_plus).dist(&r.s_plus);
        let lower = r.s3.commutator(&r.s_minus).dist(&r.s_minus.scale_real(-1.0));
        let nil = r.s_plus.matmul(&r.s_plus).frobenius_norm() + r.s_minus.matmul(&r.s_minus).frobenius_norm();
        s.assert(
            &format!("su2_relations_k{k}"),
            comm.max(raise).max(lower).max(nil),
            tol,
            "SU(2) realizations [S+,S-] = 2S3, (S±)² = 0",
        );
        let values = eig_hermitian(&r.casimir).expect("hermitian").values;
        let casimir = max_over(values, |v| v.abs().min((v - 0.75).abs()));
        s.assert(
            &format!("casimir_spectrum_k{k}"),
            casimir,
            s.cfg.tol,
            "Casimir eigenvalues 3/4 and 0",
        );
    }
}

fn hecke_checks(s: &mut Suite) {
    let tol = s.cfg.tol;
    let h0 = HeckeParams::new(0.0, 0.0);
    let m0 = build_m(&h0);
    s.assert(
        "m_hermitian_and_quadratic",
        m0.hermiticity_residual().max(quadratic_residual(&h0)),
        tol,
        "M² = M + 2I",
    );
    let h = HeckeParams::new(0.7, -1.3);
    let values = eig_hermitian(&build_m(&h)).expect("hermitian").values;
    let twos = values.iter().filter(|v| (*v - 2.0).abs() < 1e-8).count();
    let minus = values.iter().filter(|v| (*v + 1.0).abs() < 1e-8).count();
    s.assert(
        "m_spectrum_multiplicities",
        if twos == 3 && minus == 6 { 0.0 } else { 1.0 },
        0.0,
        "M has eigenvalue 2 three times and -1 six times",
    );
    s.assert(
        "hecke_relation",
        hecke_residual(&h),
        tol,
        "Hecke algebra relation with g = 2",
    );
    s.assert(
        "braid_limit",
        crate::algebra::braid_limit_residual(&h),
        tol,
        "braid relation for the asymptotic limit of R",
    );
    let b = braid_generator(&h);
    s.assert(
        "braid_generator_projector",
        b.matmul(&b).dist(&b).max(b.hermiticity_residual()),
        tol,
        "braid generator B = (2I - M)/3",
    );
    s.assert(
        "far_commutativity",
        far_commutativity_residual(&h),
        tol,
        "b1 b3 = b3 b1 on four qutrits",
    );
    if s.trials() > 0 {
        let n = s.trials() * 5;
        let mut worst: f64 = 0.0;
        let mut worst_braid: f64 = 0.0;
        for _ in 0..n {
            let p = HeckeParams::new(s.random_phase(), s.random_phase());
            worst = worst.max(quadratic_residual(&p)).max(hecke_residual(&p));
            worst_braid = worst_braid.max(crate::algebra::braid_limit_residual(&p));
        }
        s.assert(
            "hecke_relation_random_phases",
            worst,
            tol,
            "Hecke algebra relation with g = 2",
        );
        s.assert(
            "braid_limit_random_phases",
            worst_braid,
            tol,
            "braid relation for the asymptotic limit of R",
        );
    }
    s.out.push(CheckRecord::exceeds(
        "negative_control_hecke_g3",
        hecke_residual_with_g(&h, 3.0),
        NEGATIVE_CONTROL_FLOOR,
        "Hecke algebra relation with g = 2",
    ));
}

fn rmatrix_checks(s: &mut Suite) {
    let tol = s.cfg.tol;
    let eps = if s.cfg.self_test_negative {
        YBE_PERTURBATION
    } else {
        0.0
    };
    let ybe = |tx, ty, p1, p2| ybe_residual_perturbed(tx, ty, p1, p2, eps);
    let mut grid = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            let tx = PI * (i as f64 + 0.5) / 4.0;
            let ty = PI * (j as f64 + 0.5) / 4.0;
            grid = grid.max(ybe(tx, ty, 0.4, 1.1));
        }
    }
    let mut rec = CheckRecord::assertion("ybe_grid", grid, tol, "Yang-Baxter equation for R(x)");
    if s.cfg.self_test_negative {
        rec = rec.with_note("self-test: F(xy) perturbed on purpose, this check must fail");
    }
    s.out.push(rec);
    if s.trials() > 0 {
        let mut worst = 0.0f64;
        for _ in 0..s.trials() {
            let (tx, ty) = (s.rng.gen_range(0.0..PI), s.rng.gen_range(0.0..PI));
            let (p1, p2) = (s.random_phase(), s.random_phase());
            worst = worst.max(ybe(tx, ty, p1, p2));
        }
        s.assert("ybe_random", worst, tol, "Yang-Baxter equation for R(x)");
    }
    s.out.push(CheckRecord::exceeds(
        "negative_control_ybe_perturbed",
        ybe_residual_perturbed(0.7, 1.1, 0.4, 1.1, YBE_PERTURBATION),
        NEGATIVE_CONTROL_FLOOR,
        "Yang-Baxter equation for R(x)",
    ));

    let thetas: Vec<f64> = (0..12).map(|i| -PI + 2.0 * PI * i as f64 / 12.0 + 0.1).collect();
    let unit = max_over(thetas.iter(), |&th| {
        build_r(&RParams::new(th, 0.3, -0.8)).unitarity_residual()
    });
    s.assert("r_unitary", unit, 1e-12, "R is unitary for x = e^{iθ}");
    let inv = max_over(thetas.iter(), |&th| {
        build_r(&RParams::new(th, 0.3, -0.8))
            .matmul(&build_r(&RParams::new(-th, 0.3, -0.8)))
            .dist(&ComplexMatrix::identity(9))
    });
    s.assert("r_inverse", inv, 1e-12, "R(x)R(1/x) = I");
    let prod = max_over(thetas.iter(), |&th| (unitarity_product(th) - ONE).norm());
    s.assert(
        "unitarity_product_equals_one",
        prod,
        1e-12,
        "ρ(x)ρ(1/x)[1 + 2F(x)F(1/x)] = 1",
    );
    let sum = max_over(thetas.iter(), |&th| unitarity_sum(th).norm());
    s.assert("unitarity_sum_vanishes", sum, 1e-12, "F(x) + F(1/x) + F(x)F(1/x) = 0");
    s.assert(
        "initial_condition",
        build_r(&RParams::new(0.0, 0.9, 0.2)).dist(&ComplexMatrix::identity(9)),
        1e-15,
        "R(x = 1) = I",
    );
    let functional = max_over(thetas.iter(), |&tx| {
        max_over(thetas.iter(), |&ty| {
            let (x, y) = (c(tx.cos(), tx.sin()), c(ty.cos(), ty.sin()));
            let (fx, fy) = (f_of(x), f_of(y));
            (fx + fy + fx * fy - (ONE + 2.0 * fx * fy) * f_of(x * y)).norm()
        })
    });
    s.assert(
        "f_functional_identity",
        functional,
        1e-12,
        "F(x)+F(y)+F(x)F(y) = [1+2F(x)F(y)]F(xy)",
    );
    let su3 = max_over(thetas.iter(), |&th| rebuild_from_su3(&RParams::new(th, 0.3, -0.8)));
    s.assert("r_su3_expansion", su3, tol, "R in terms of SU(3) realization operators");
}

fn negativity_checks(s: &mut Suite) {
    let tol = s.cfg.tol;
    let labels = [1, 0, -1];
    let grid: Vec<f64> = (0..50).map(|i| PI * i as f64 / 49.0).collect();
    let columns = max_over(grid.iter(), |&th| {
        let p = RParams::new(th, 0.0, 0.0);
        max_over(labels.iter(), |&m| {
            max_over(labels.iter(), |&n| {
                let v = act_on_basis(&p, m, n).expect("labels valid");
                (negativity(&v).expect("normalized") - negativity_closed(th)).abs()
            })
        })
    });
    s.assert(
        "negativity_closed_form_all_columns",
        columns,
        tol,
        "closed-form negativity N(θ)",
    );
    let at = |th: f64| negativity(&act_on_basis(&RParams::new(th, 0.0, 0.0), 1, 1).expect("valid")).expect("norm");
    s.assert(
        "negativity_maximal_at_pi_over_3",
        (at(FRAC_PI_3) - 1.0).abs().max((at(2.0 * FRAC_PI_3) - 1.0).abs()),
        tol,
        "maximally entangled states at θ = π/3",
    );
    s.assert(
        "negativity_at_pi_over_2",
        (at(FRAC_PI_2) - 8.0 / 9.0).abs(),
        tol,
        "closed-form negativity N(θ)",
    );
    let fine: Vec<f64> = (0..=360)
        .map(|i| PI * i as f64 / 360.0)
        .map(negativity_closed)
        .collect();
    let peak = fine.iter().cloned().fold(0.0, f64::max);
    let non_monotone = fine.windows(2).any(|w| w[1] < w[0]) && fine.windows(2).any(|w| w[1] > w[0]);
    s.assert(
        "negativity_range_and_non_monotone",
        (peak - 1.0).abs().max(if non_monotone { 0.0 } else { 1.0 }),
        1e-6,
        "negativity is not monotone in θ and peaks at 1",
    );
    let r = build_r(&RParams::new(FRAC_PI_3, 0.5, 1.5));
    s.assert(
        "maximally_entangled_basis_orthonormal",
        r.dagger().matmul(&r).dist(&ComplexMatrix::identity(9)),
        1e-12,
        "nine orthogonal maximally entangled states",
    );
    if s.trials() > 0 {
        let mut worst = 0.0f64;
        for _ in 0..s.trials() {
            let th = s.rng.gen_range(0.0..PI);
            let (p1, p2) = (s.random_phase(), s.random_phase());
            let m = labels[s.rng.gen_range(0..3)];
            let n = labels[s.rng.gen_range(0..3)];
            let v = act_on_basis(&RParams::new(th, p1, p2), m, n).expect("valid");
            worst = worst.max((negativity(&v).expect("norm") - negativity_closed(th)).abs());
        }
        s.assert(
            "negativity_phase_independent",
            worst,
            tol,
            "negativity does not depend on φ1, φ2",
        );
    }
}

fn hamiltonian_checks(s: &mut Suite) {
    let tol = s.cfg.tol;
    let base = HamiltonianSpec::new(FRAC_PI_2, 1.0, 2.0);
    let h = build_h(&base, 0.0);
    s.assert(
        "h_hermitian",
        h.hermiticity_residual(),
        tol,
        "Yang-Baxter Hamiltonian H = iħ ∂R/∂t R†",
    );
    s.assert(
        "h_block_leakage",
        off_block_norm(&h),
        1e-12,
        "H splits into three subsystems",
    );
    let blk = subsystem_block(&h, 1).expect("block");
    let values = eig_hermitian(&blk.h).expect("hermitian").values;
    let e = 2.0 * 2f64.sqrt();
    s.assert(
        "h_block_spectrum_example",
        max_over(values.iter().zip([-e, 0.0, e]), |(a, b)| (a - b).abs()),
        tol,
        "eigenvalues 0 and ±(2√2/3)ħω(k)sinθ",
    );
    let fd = build_h_fd(&base, 0.37, 1e-5).expect("dt > 0");
    s.assert(
        "h_finite_difference",
        fd.dist(&build_h(&base, 0.37)),
        1e-6,
        "H = iħ ∂R/∂t R†",
    );
    let p = periods(&base).expect("nonzero frequencies");
    let per = max_over(1..=3, |k| {
        let a = subsystem_block(&build_h(&base, 0.4), k).expect("block").h;
        let b = subsystem_block(&build_h(&base, 0.4 + p[k - 1]), k).expect("block").h;
        a.dist(&b)
    });
    s.assert("subsystem_periods", per, tol, "subsystem k has period 2π/ω(k)");
    let j = max_over(1..=3, |k| {
        su2_realization(k).expect("k").casimir.commutator(&h).frobenius_norm()
    });
    s.assert("casimir_commutes_with_h", j, 1e-12, "J(k) is conserved");
    let b_rec = max_over(1..=3, |k| {
        let b = b_vector(&base, k, 0.7).expect("nondegenerate");
        b_reconstruction_residual(&base, k, 0.7, &b).expect("k")
    });
    s.assert("b_vector_reconstruction", b_rec, tol, "H(k) = C(k) Σ B_λ I_λ");
    s.assert(
        "alpha_beta_reconstruction",
        max_over(0..10, |i| {
            alpha_beta_residual(&HamiltonianSpec::new(0.8, 0.6, 1.1), 0.5 * i as f64)
        }),
        tol,
        "(α, β) parametrization of the spin-1/2 block",
    );

    if s.trials() > 0 {
        let mut spec_err = 0.0f64;
        let mut t_dep = 0.0f64;
        let mut leak = 0.0f64;
        let mut herm = 0.0f64;
        let mut fd_err = 0.0f64;
        let mut coherent = 0.0f64;
        for _ in 0..s.trials() {
            let (hs, t) = s.random_spec();
            let h = build_h(&hs, t);
            herm = herm.max(h.hermiticity_residual());
            leak = leak.max(off_block_norm(&h));
            fd_err = fd_err.max(h.dist(&build_h_fd(&hs, t, 1e-5).expect("dt")));
            for k in 1..=3 {
                let mut expected = closed_form_spectrum(&hs, k).expect("k");
                expected.sort_by(f64::total_cmp);
                let now = block_eigensystem(&hs, k, t).expect("block").values;
                let later = block_eigensystem(&hs, k, t + 1.234).expect("block").values;
                spec_err = spec_err.max(max_over(now.iter().zip(&expected), |(a, b)| (a - b).abs()));
                t_dep = t_dep.max(max_over(now.iter().zip(&later), |(a, b)| (a - b).abs()));
            }
            coherent = coherent.max(coherent_state_check(&hs, t).expect("nondegenerate"));
        }
        s.assert(
            "h_hermitian_random",
            herm,
            tol,
            "Yang-Baxter Hamiltonian H = iħ ∂R/∂t R†",
        );
        s.assert("h_block_leakage_random", leak, 1e-12, "H splits into three subsystems");
        s.assert("h_finite_difference_random", fd_err, 1e-6, "H = iħ ∂R/∂t R†");
        s.assert(
            "subsystem_spectra",
            spec_err,
            tol,
            "eigenvalues 0 and ±(2√2/3)ħω(k)sinθ",
        );
        s.assert("spectra_time_independent", t_dep, tol, "eigenvalues do not depend on t");
        s.assert(
            "coherent_states",
            coherent,
            1e-8,
            "spin coherent states exp[ζS+ - ζ*S-]",
        );
    }
}

fn block_diagonalization_checks(s: &mut Suite) {
    let o = o_matrix();
    s.assert(
        "o_orthogonal",
        o.matmul(&o.transpose()).dist(&ComplexMatrix::identity(9)),
        1e-15,
        "orthogonal matrix O",
    );
    let hs = HamiltonianSpec::new(1.1, 0.7, 1.9);
    let pattern = max_over([0.0, 0.8, 2.3], |t| {
        block_pattern_residual(&block_diagonalize(&build_h(&hs, t)).expect("9x9"))
    });
    s.assert(
        "o_block_pattern",
        pattern,
        1e-12,
        "O H Oᵀ is block diagonal with 2x2 and zero 1x1 blocks",
    );
    for k in 1..=3 {
        s.assert(
            &format!("o_casimir_block_k{k}"),
            casimir_block_residual(k).expect("k"),
            1e-12,
            "O J(k) Oᵀ = (3/4) on the doublet",
        );
    }
}

fn berry_checks(s: &mut Suite) {
    let tol = s.cfg.berry_tol;
    let points = [(FRAC_PI_6, 1usize), (FRAC_PI_4, 2), (FRAC_PI_2, 3)];
    for (theta, k) in points {
        let l = LoopSpec::new(HamiltonianSpec::new(theta, 1.0, 2.0), k, Band::Plus, 2048);
        let (residual, note) = match berry_numeric(&l) {
            Ok(r) => (
                r.error(),
                format!(
                    "numeric {:.8}, analytic {:.8}, N = {}",
                    r.numeric_phase, r.analytic_phase, r.steps
                ),
            ),
            Err(e) => (f64::INFINITY, e.to_string()),
        };
        s.out.push(
            CheckRecord::assertion(
                format!("berry_phase_k{k}_theta{:.4}", theta),
                residual,
                tol,
                "Berry phase γ+ = -2π(1/2 - (√2/3)sinθ)",
            )
            .with_note(note),
        );
    }
    let spec = HamiltonianSpec::new(0.9, 1.0, 2.0);
    let zero = max_over(1..=3, |k| {
        overlap_phase(&LoopSpec::new(spec, k, Band::Zero, 64)).map_or(f64::INFINITY, f64::abs)
    });
    s.assert("berry_phase_zero_band", zero, 1e-8, "γ0 = 0");
    let sum = max_over(1..=3, |k| {
        let p = overlap_phase(&LoopSpec::new(spec, k, Band::Plus, 2048));
        let m = overlap_phase(&LoopSpec::new(spec, k, Band::Minus, 2048));
        match (p, m) {
            (Ok(p), Ok(m)) => phase_distance(p + m, 0.0),
            _ => f64::INFINITY,
        }
    });
    s.assert("berry_sum_rule", sum, 2.0 * tol, "γ+ + γ- = 0 mod 2π");
    let l = LoopSpec::new(spec, 1, Band::Plus, 1024);
    let direct = match (berry_direct_integral(&l), overlap_phase(&l)) {
        (Ok(a), Ok(b)) => phase_distance(a, b),
        _ => f64::INFINITY,
    };
    s.assert("berry_direct_integral", direct, 1e-4, "γ = i∮⟨E|∂t|E⟩dt");
    let coherent = max_over([0.0, 0.6, 1.7], |t| {
        coherent_state_check(&spec, t).unwrap_or(f64::INFINITY)
    });
    s.assert(
        "coherent_states_fixed",
        coherent,
        1e-8,
        "spin coherent states exp[ζS+ - ζ*S-]",
    );
}

fn discrepancy_reports(s: &mut Suite) {
    let spec = HamiltonianSpec::new(0.8, 1.0, 2.0);
    let t = 0.6;
    for k in 1..=3 {
        if let Ok(recs) = b_list_report(&spec, k, t) {
            s.out.extend(recs);
        }
        if let Ok(recs) = eigenstate_report(&spec, k, t) {
            s.out.extend(recs);
        }
    }
    if let Ok(recs) = printed_form_report(&spec, t) {
        s.out.extend(recs);
    }
    if let Ok(recs) = new_basis_report() {
        s.out.extend(recs);
    }
    if let Ok(m) = coherent_state_mismatch(&spec, t, Band::Plus, ZetaConvention::AsPrinted) {
        s.out.push(
            CheckRecord::informational(
                "coherent_state_zeta_as_printed",
                m,
                1e-8,
                "spin coherent states exp[ζS+ - ζ*S-]",
            )
            .with_note("ζ = e^{-iβ}α/2 read literally; ζ = -e^{-iβ}α/2 reproduces the eigenvector"),
        );
    }
    s.out.push(
        CheckRecord::informational(
            "unitarity_product_printed_as_zero",
            unitarity_product(0.8).norm(),
            1e-12,
            "ρ(x)ρ(1/x)[1 + 2F(x)F(1/x)]",
        )
        .with_note("printed right-hand side is 0; the product equals 1"),
    );
    let v = act_on_basis(&RParams::new(0.8, 0.0, 0.0), 1, 0).expect("valid");
    let w = act_on_basis(&RParams::new(0.8, 0.0, 0.0), 0, 1).expect("valid");
    s.out.push(CheckRecord::informational(
        "rmatrix_columns_orthogonal_example",
        inner(&v, &w).norm(),
        1e-12,
        "columns of R are orthonormal",
    ));
}
