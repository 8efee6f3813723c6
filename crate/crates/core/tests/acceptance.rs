//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the summary lines are
//! printed on every `cargo test` run. Exits non-zero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI, SQRT_2};
use std::process::ExitCode;
use std::time::Instant;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ybe_core::algebra::{
    build_m, hecke_residual, hecke_residual_with_g, quadratic_residual, structure_constants, su2_realization,
    su3_commutator_residual, su3_realization, HeckeParams,
};
use ybe_core::dynamics::{
    b_list_report, block_diagonalize, block_eigensystem, block_pattern_residual, build_h, casimir_blocks,
    doublet_slots, eigenstate_report, o_matrix, off_block_norm, printed_form_report, subsystem_block, Band,
    HamiltonianSpec,
};
use ybe_core::geometric::{
    berry_analytic, coherent_state_check, coherent_state_mismatch, overlap_phase, phase_distance, LoopSpec,
    ZetaConvention,
};
use ybe_core::report::CheckKind;
use ybe_core::tensor::{eig_hermitian, ComplexMatrix};
use ybe_core::yangbaxter::{
    act_on_basis, build_r, negativity, negativity_closed, unitarity_product, unitarity_sum, ybe_residual,
    ybe_residual_perturbed, RParams,
};
use ybe_core::Complex64;

const SEED: u64 = 20_240_601;

/// One measured quantity of a criterion.
struct Part {
    what: String,
    value: f64,
    limit: f64,
    /// `true` when the value must exceed the limit (negative controls).
    above: bool,
    /// Printed for context only; never fails.
    info: bool,
}

impl Part {
    fn below(what: impl Into<String>, value: f64, limit: f64) -> Self {
        Self {
            what: what.into(),
            value,
            limit,
            above: false,
            info: false,
        }
    }

    fn above(what: impl Into<String>, value: f64, limit: f64) -> Self {
        Self {
            above: true,
            ..Self::below(what, value, limit)
        }
    }

    fn info(what: impl Into<String>, value: f64) -> Self {
        Self {
            info: true,
            ..Self::below(what, value, 0.0)
        }
    }

    fn ok(&self) -> bool {
        if self.info {
            true
        } else if self.above {
            self.value > self.limit
        } else {
            self.value <= self.limit
        }
    }
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

fn random_theta(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let th: f64 = rng.gen_range(0.0..2.0 * PI);
        if th.sin().abs() > 0.05 {
            return th;
        }
    }
}

fn random_spec(rng: &mut ChaCha8Rng) -> (HamiltonianSpec, f64) {
    let theta = random_theta(rng);
    let spec = HamiltonianSpec::new(theta, rng.gen_range(0.2..3.0), rng.gen_range(0.2..3.0));
    (spec, rng.gen_range(0.0..10.0))
}

/// Eigenvalues from nalgebra's Hermitian solver, ascending.
fn nalgebra_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.rows();
    let dm = DMatrix::<Complex64>::from_fn(n, n, |i, j| m[(i, j)]);
    let mut v: Vec<f64> = SymmetricEigen::new(dm).eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

fn theta_grid_open(n: usize) -> Vec<f64> {
    (0..n).map(|i| PI * (i as f64 + 0.5) / n as f64).collect()
}

fn c1_ybe() -> Vec<Part> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let phases: Vec<(f64, f64)> = (0..20)
        .map(|_| (rng.gen_range(0.0..2.0 * PI), rng.gen_range(0.0..2.0 * PI)))
        .collect();
    let grid = theta_grid_open(10);
    let mut worst = 0.0f64;
    for &tx in &grid {
        for &ty in &grid {
            for &(p1, p2) in &phases {
                worst = worst.max(ybe_residual(tx, ty, p1, p2));
            }
        }
    }
    vec![Part::below(
        "max YBE residual, 10x10 θ grid x 20 phase pairs",
        worst,
        1e-10,
    )]
}

fn c2_hecke() -> Vec<Part> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut quad = 0.0f64;
    let mut hecke = 0.0f64;
    let mut multiplicity_miss = 0.0f64;
    let mut oracle_gap = 0.0f64;
    for _ in 0..100 {
        let p = HeckeParams::new(rng.gen_range(0.0..2.0 * PI), rng.gen_range(0.0..2.0 * PI));
        quad = quad.max(quadratic_residual(&p));
        hecke = hecke.max(hecke_residual(&p));
        let m = build_m(&p);
        let ours = eig_hermitian(&m).expect("Hermitian").values;
        let theirs = nalgebra_eigenvalues(&m);
        oracle_gap = oracle_gap.max(max_of(ours.iter().zip(&theirs).map(|(a, b)| (a - b).abs())));
        let twos = theirs.iter().filter(|v| (*v - 2.0).abs() < 1e-8).count();
        let minus = theirs.iter().filter(|v| (*v + 1.0).abs() < 1e-8).count();
        if (twos, minus) != (3, 6) {
            multiplicity_miss = 1.0;
        }
    }
    vec![
        Part::below("max ‖M² − M − 2I‖, 100 phase pairs", quad, 1e-10),
        Part::below("max three-site Hecke residual", hecke, 1e-10),
        Part::below("multiplicity mismatch count {2:3, -1:6}", multiplicity_miss, 0.0),
        Part::below("eigensolver vs nalgebra", oracle_gap, 1e-10),
    ]
}

fn c3_unitarity() -> Vec<Part> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut unit = 0.0f64;
    let mut inverse = 0.0f64;
    let mut product = 0.0f64;
    let mut sum = 0.0f64;
    let id = ComplexMatrix::identity(9);
    for theta in (0..50).map(|i| -PI + 2.0 * PI * (i as f64 + 0.5) / 50.0) {
        let (p1, p2) = (rng.gen_range(0.0..2.0 * PI), rng.gen_range(0.0..2.0 * PI));
        let r = build_r(&RParams::new(theta, p1, p2));
        unit = unit.max(r.unitarity_residual());
        inverse = inverse.max(r.matmul(&build_r(&RParams::new(-theta, p1, p2))).dist(&id));
        product = product.max((unitarity_product(theta) - Complex64::new(1.0, 0.0)).norm());
        sum = sum.max(unitarity_sum(theta).norm());
    }
    vec![
        Part::below("max ‖R†R − I‖", unit, 1e-12),
        Part::below("max ‖R(θ)R(−θ) − I‖", inverse, 1e-12),
        Part::below("max |ρ(x)ρ(1/x)[1+2F(x)F(1/x)] − 1|", product, 1e-12),
        Part::below("max |F(x)+F(1/x)+F(x)F(1/x)|", sum, 1e-12),
    ]
}

fn c4_negativity() -> Vec<Part> {
    let labels = [1, 0, -1];
    let grid: Vec<f64> = (0..50).map(|i| PI * i as f64 / 49.0).collect();
    let mut columns = 0.0f64;
    for &theta in &grid {
        let p = RParams::new(theta, 0.0, 0.0);
        for m in labels {
            for n in labels {
                let v = act_on_basis(&p, m, n).expect("valid labels");
                columns = columns.max((negativity(&v).expect("normalized") - negativity_closed(theta)).abs());
            }
        }
    }
    let at = |theta: f64, p1: f64, p2: f64, m: i32, n: i32| {
        negativity(&act_on_basis(&RParams::new(theta, p1, p2), m, n).expect("valid")).expect("normalized")
    };
    let scan: Vec<f64> = (0..=600).map(|i| at(PI * i as f64 / 600.0, 0.0, 0.0, 1, 1)).collect();
    let (imax, vmax) = scan.iter().enumerate().fold(
        (0, f64::MIN),
        |acc, (i, &v)| if v > acc.1 + 1e-12 { (i, v) } else { acc },
    );
    let argmax_miss = (PI * imax as f64 / 600.0 - FRAC_PI_3).abs();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let mut phase_dep = 0.0f64;
    for _ in 0..20 {
        let theta = rng.gen_range(0.0..PI);
        for m in labels {
            for n in labels {
                let base = at(theta, 0.0, 0.0, m, n);
                let moved = at(theta, rng.gen_range(0.0..2.0 * PI), rng.gen_range(0.0..2.0 * PI), m, n);
                phase_dep = phase_dep.max((base - moved).abs());
            }
        }
    }
    vec![
        Part::below("max |N_numeric − N(θ)|, nine columns x 50 θ", columns, 1e-10),
        Part::below("|N(π/3) − 1|", (at(FRAC_PI_3, 0.0, 0.0, 1, 1) - 1.0).abs(), 1e-10),
        Part::below("|max over θ scan − 1|", (vmax - 1.0).abs(), 1e-10),
        Part::below("first maximizer distance from π/3", argmax_miss, 1e-12),
        Part::below(
            "|N(π/2) − 8/9|",
            (at(FRAC_PI_2, 0.0, 0.0, 1, 1) - 8.0 / 9.0).abs(),
            1e-10,
        ),
        Part::below("max φ-dependence", phase_dep, 1e-10),
    ]
}

fn c5_spectra() -> Vec<Part> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let mut spec_err = 0.0f64;
    let mut t_dep = 0.0f64;
    let mut leak = 0.0f64;
    let mut oracle_gap = 0.0f64;
    for _ in 0..20 {
        let (s, t) = random_spec(&mut rng);
        let h = build_h(&s, t);
        leak = leak.max(off_block_norm(&h));
        for k in 1..=3 {
            let e = 2.0 * SQRT_2 / 3.0 * s.hbar * s.omega(k).unwrap() * s.theta.sin();
            let mut expected = [-e, 0.0, e];
            expected.sort_by(f64::total_cmp);
            let ours = block_eigensystem(&s, k, t).unwrap().values;
            let theirs = nalgebra_eigenvalues(&subsystem_block(&h, k).unwrap().h);
            let later = block_eigensystem(&s, k, t + rng.gen_range(0.1..5.0)).unwrap().values;
            spec_err = spec_err.max(max_of(ours.iter().zip(&expected).map(|(a, b)| (a - b).abs())));
            oracle_gap = oracle_gap.max(max_of(theirs.iter().zip(&expected).map(|(a, b)| (a - b).abs())));
            t_dep = t_dep.max(max_of(ours.iter().zip(&later).map(|(a, b)| (a - b).abs())));
        }
    }
    vec![
        Part::below("max |eigenvalue − {0, ±(2√2/3)ħω(k)sinθ}|", spec_err, 1e-10),
        Part::below("same, nalgebra eigensolver", oracle_gap, 1e-10),
        Part::below("max spectrum change in t", t_dep, 1e-10),
        Part::below("max off-block leakage", leak, 1e-12),
    ]
}

fn c6_block_diagonalization() -> Vec<Part> {
    let o = o_matrix();
    let orth = o.matmul(&o.transpose()).dist(&ComplexMatrix::identity(9));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let pattern = max_of((0..20).map(|_| {
        let (s, t) = random_spec(&mut rng);
        block_pattern_residual(&block_diagonalize(&build_h(&s, t)).unwrap())
    }));
    let casimir = max_of((1..=3).map(|k| {
        let [a, b] = doublet_slots(k).unwrap();
        let mut expected = ComplexMatrix::zeros(9, 9);
        expected[(a, a)] = Complex64::new(0.75, 0.0);
        expected[(b, b)] = Complex64::new(0.75, 0.0);
        casimir_blocks(k).unwrap().dist(&expected)
    }));
    vec![
        Part::below("‖OOᵀ − I‖", orth, 1e-15),
        Part::below("max norm outside the 2+1 block pattern of OHOᵀ", pattern, 1e-12),
        Part::below("max ‖OJ(k)Oᵀ − (3/4)P‖", casimir, 1e-12),
    ]
}

fn c7_berry() -> Vec<Part> {
    let mut worst = 0.0f64;
    let mut zero = 0.0f64;
    let mut sum_rule = 0.0f64;
    for theta in [FRAC_PI_6, FRAC_PI_4, FRAC_PI_2] {
        let spec = HamiltonianSpec::new(theta, 1.0, 2.0);
        for k in 1..=3 {
            let plus = overlap_phase(&LoopSpec::new(spec, k, Band::Plus, 2048)).unwrap();
            let minus = overlap_phase(&LoopSpec::new(spec, k, Band::Minus, 2048)).unwrap();
            let z = overlap_phase(&LoopSpec::new(spec, k, Band::Zero, 2048)).unwrap();
            worst = worst.max(phase_distance(plus, berry_analytic(theta, Band::Plus)));
            zero = zero.max(z.abs());
            sum_rule = sum_rule.max(phase_distance(plus + minus, 0.0));
        }
    }
    // step doubling at θ = π/6, k = 1: errors 64 → 128 → 256 → 512
    let spec = HamiltonianSpec::new(FRAC_PI_6, 1.0, 2.0);
    let errs: Vec<f64> = [64, 128, 256, 512]
        .iter()
        .map(|&n| {
            let g = overlap_phase(&LoopSpec::new(spec, 1, Band::Plus, n)).unwrap();
            phase_distance(g, berry_analytic(FRAC_PI_6, Band::Plus))
        })
        .collect();
    let ratios: Vec<f64> = errs.windows(2).filter(|w| w[0] < 1e-2).map(|w| w[0] / w[1]).collect();
    let ratio_miss = max_of(ratios.iter().map(|r| (3.0 - r).max(r - 5.0).max(0.0)));
    let ratio_miss = if ratios.is_empty() { f64::INFINITY } else { ratio_miss };
    let shown = ratios.iter().map(|r| format!("{r:.4}")).collect::<Vec<_>>().join(", ");
    vec![
        Part::below("max |γ+ numeric − analytic|, N=2048, 3 θ x 3 k", worst, 1e-5),
        Part::below("max |γ0|", zero, 1e-8),
        Part::below("max |γ+ + γ- mod 2π|", sum_rule, 2e-5),
        Part::below(
            format!("distance of doubling ratios ({shown}) from [3, 5]"),
            ratio_miss,
            0.0,
        ),
    ]
}

fn c8_algebra() -> Vec<Part> {
    let mut su3 = 0.0f64;
    let mut su2 = 0.0f64;
    let mut casimir = 0.0f64;
    for k in 1..=3 {
        su3 = su3.max(su3_commutator_residual(&su3_realization(k).unwrap()));
        let r = su2_realization(k).unwrap();
        su2 = su2
            .max(r.s_plus.commutator(&r.s_minus).dist(&r.s3.scale_real(2.0)))
            .max(r.s_plus.matmul(&r.s_plus).frobenius_norm())
            .max(r.s_minus.matmul(&r.s_minus).frobenius_norm())
            .max(r.s3.commutator(&r.s_plus).dist(&r.s_plus));
        for v in nalgebra_eigenvalues(&r.casimir) {
            casimir = casimir.max(v.abs().min((v - 0.75).abs()));
        }
    }
    let mut inter = 0.0f64;
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        let gi = su3_realization(i).unwrap().generators();
        let gj = su3_realization(j).unwrap().generators();
        for a in &gi {
            for b in &gj {
                inter = inter.max(a.commutator(b).frobenius_norm());
            }
        }
    }
    let f = structure_constants();
    let f123_miss = (f[0][1][2] - 1.0).abs() + (f[3][4][7] - 3f64.sqrt() / 2.0).abs();
    vec![
        Part::below("max SU(3) commutator residual", su3, 1e-12),
        Part::below("max SU(2) relation residual", su2, 1e-12),
        Part::below("max inter-subsystem commutator", inter, 1e-12),
        Part::below("structure constants f123 = 1, f458 = √3/2", f123_miss, 1e-12),
        Part::below("max Casimir eigenvalue distance from {3/4, 0}", casimir, 1e-10),
    ]
}

fn c9_coherent() -> Vec<Part> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let mut worst = 0.0f64;
    let mut literal = 0.0f64;
    for _ in 0..20 {
        let (s, t) = random_spec(&mut rng);
        worst = worst.max(coherent_state_check(&s, t).unwrap());
        literal = literal.max(coherent_state_mismatch(&s, t, Band::Plus, ZetaConvention::AsPrinted).unwrap());
    }
    vec![
        Part::below("max 1 − |⟨coherent|eigenvector⟩|, ζ = −e^(−iβ)α/2", worst, 1e-8),
        Part::info(
            "max 1 − |⟨coherent|eigenvector⟩| with ζ = e^(−iβ)α/2 read literally",
            literal,
        ),
    ]
}

fn c10_discrepancies() -> Vec<Part> {
    let mut records = Vec::new();
    let mut failures = 0usize;
    for (theta, w1, w2, t) in [(0.8, 1.0, 2.0, 0.6), (2.2, 0.4, 1.3, 3.1), (-1.0, 2.5, 0.7, 1.7)] {
        let s = HamiltonianSpec::new(theta, w1, w2);
        for k in 1..=3 {
            match (b_list_report(&s, k, t), eigenstate_report(&s, k, t)) {
                (Ok(a), Ok(b)) => {
                    records.extend(a);
                    records.extend(b);
                }
                _ => failures += 1,
            }
        }
        match printed_form_report(&s, t) {
            Ok(r) => records.extend(r),
            Err(_) => failures += 1,
        }
    }
    let non_info = records.iter().filter(|r| r.kind != CheckKind::Informational).count();
    let mismatched: Vec<&str> = records.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
    let mut distinct = mismatched.clone();
    distinct.sort();
    distinct.dedup();
    vec![
        Part::info(
            format!("records flagging a printed-formula mismatch ({})", distinct.join(", ")),
            mismatched.len() as f64,
        ),
        Part::below("reports that aborted", failures as f64, 0.0),
        Part::below("records not marked informational", non_info as f64, 0.0),
        Part::above("records emitted", records.len() as f64, 0.0),
    ]
}

fn c11_negative_controls() -> Vec<Part> {
    let p = HeckeParams::new(0.7, -1.3);
    vec![
        Part::above(
            "YBE residual with F(xy) perturbed by ε = 0.1",
            ybe_residual_perturbed(0.7, 1.1, 0.4, 1.1, 0.1),
            1e-3,
        ),
        Part::above("Hecke residual with g = 3", hecke_residual_with_g(&p, 3.0), 1e-3),
    ]
}

type Criterion = (&'static str, fn() -> Vec<Part>);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Yang-Baxter identity", c1_ybe),
        ("Hecke relations", c2_hecke),
        ("unitarity and inverse", c3_unitarity),
        ("negativity closed form", c4_negativity),
        ("subsystem spectra", c5_spectra),
        ("orthogonal block diagonalization", c6_block_diagonalization),
        ("Berry phase", c7_berry),
        ("SU(3)/SU(2) algebra", c8_algebra),
        ("spin coherent states", c9_coherent),
        ("discrepancy reporting", c10_discrepancies),
        ("negative controls", c11_negative_controls),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let parts = run();
        let ok = parts.iter().all(Part::ok);
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {:>2}: {title} ({:.2}s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            t0.elapsed().as_secs_f64()
        );
        for p in &parts {
            if p.info {
                println!("    [info] {}: {:.3e}", p.what, p.value);
                continue;
            }
            println!(
                "    [{}] {}: {:.3e} {} {:.1e}",
                if p.ok() { "ok" } else { "!!" },
                p.what,
                p.value,
                if p.above { ">" } else { "<=" },
                p.limit
            );
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
