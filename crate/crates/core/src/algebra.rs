//! Gell-Mann basis, SU(3)/SU(2) realizations on two qutrits, and the Hecke
//! matrix `M(φ₁, φ₂)`.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::tensor::{c, kron, ComplexMatrix, I, ONE, ZERO};
use crate::{Error, Result};

/// Hecke quadratic relation `M² = αM + βI` and the braid-type coupling `g`
/// are fixed at `(α, β, g) = (1, 2, 2)`.
pub const HECKE_ALPHA: f64 = 1.0;
pub const HECKE_BETA: f64 = 2.0;
pub const HECKE_G: f64 = 2.0;

/// Single-qutrit label `m ∈ {1, 0, −1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Plus,
    Zero,
    Minus,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::Plus, Label::Zero, Label::Minus];

    /// Row index in the single-qutrit basis: `1 → 0`, `0 → 1`, `−1 → 2`.
    pub fn index(self) -> usize {
        match self {
            Label::Plus => 0,
            Label::Zero => 1,
            Label::Minus => 2,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Label::Plus => 1,
            Label::Zero => 0,
            Label::Minus => -1,
        }
    }

    pub fn from_value(v: i32) -> Result<Self> {
        match v {
            1 => Ok(Label::Plus),
            0 => Ok(Label::Zero),
            -1 => Ok(Label::Minus),
            other => Err(Error::BadLabel(other)),
        }
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }
}

/// Conversions between lexicographic Kronecker order and the display order
/// `{|11⟩,|10⟩,|01⟩,|1−1⟩,|00⟩,|−11⟩,|0−1⟩,|−10⟩,|−1−1⟩}`.
///
/// The two orders differ by the transpositions (2 3)(5 6).
pub struct QutritBasisMap;

impl QutritBasisMap {
    /// `DISPLAY_TO_LEX[p]` is the lex index of the `p`-th display state.
    /// The permutation is an involution, so it also maps lex to display.
    pub const DISPLAY_TO_LEX: [usize; 9] = [0, 1, 3, 2, 4, 6, 5, 7, 8];

    pub fn lex(a: Label, b: Label) -> usize {
        3 * a.index() + b.index()
    }

    pub fn lex_from_values(a: i32, b: i32) -> Result<usize> {
        Ok(Self::lex(Label::from_value(a)?, Label::from_value(b)?))
    }

    pub fn labels(lex: usize) -> (Label, Label) {
        (Label::from_index(lex / 3), Label::from_index(lex % 3))
    }

    /// `P[display, lex] = 1`.
    pub fn permutation_matrix() -> ComplexMatrix {
        let mut p = ComplexMatrix::zeros(9, 9);
        for (d, &l) in Self::DISPLAY_TO_LEX.iter().enumerate() {
            p[(d, l)] = ONE;
        }
        p
    }

    /// Re-expresses a lex-order operator in display order (`P A Pᵀ`).
    pub fn to_display(m: &ComplexMatrix) -> ComplexMatrix {
        m.permute(&Self::DISPLAY_TO_LEX)
    }

    pub fn from_display(m: &ComplexMatrix) -> ComplexMatrix {
        m.permute(&Self::DISPLAY_TO_LEX)
    }

    pub fn vec_to_display(v: &[Complex64]) -> Vec<Complex64> {
        Self::DISPLAY_TO_LEX.iter().map(|&l| v[l]).collect()
    }

    /// Ket label such as `|1,-1>` for a lex index.
    pub fn ket_name(lex: usize) -> String {
        let (a, b) = Self::labels(lex);
        format!("|{},{}>", a.value(), b.value())
    }
}

/// Basis ket `|ab⟩` in lex order.
pub fn ket(a: Label, b: Label) -> Vec<Complex64> {
    crate::tensor::basis_vector(9, QutritBasisMap::lex(a, b))
}

// ---------------------------------------------------------------------------
// Gell-Mann basis

/// The eight Gell-Mann matrices `λ₁ … λ₈`.
pub fn gellmann() -> [ComplexMatrix; 8] {
    let z = ZERO;
    let o = ONE;
    let i = I;
    let m = |rows: [[Complex64; 3]; 3]| {
        ComplexMatrix::from_vec(3, 3, rows.iter().flatten().copied().collect()).expect("3x3")
    };
    let s3 = 1.0 / 3f64.sqrt();
    [
        m([[z, o, z], [o, z, z], [z, z, z]]),
        m([[z, -i, z], [i, z, z], [z, z, z]]),
        m([[o, z, z], [z, -o, z], [z, z, z]]),
        m([[z, z, o], [z, z, z], [o, z, z]]),
        m([[z, z, -i], [z, z, z], [i, z, z]]),
        m([[z, z, z], [z, z, o], [z, o, z]]),
        m([[z, z, z], [z, z, -i], [z, i, z]]),
        m([[c(s3, 0.0), z, z], [z, c(s3, 0.0), z], [z, z, c(-2.0 * s3, 0.0)]]),
    ]
}

/// Structure constants `f_abc` from `[λ_a, λ_b] = 2i f_abc λ_c`, computed as
/// `f_abc = −(i/4) tr([λ_a, λ_b] λ_c)`.
pub fn structure_constants() -> [[[f64; 8]; 8]; 8] {
    let l = gellmann();
    let mut f = [[[0.0; 8]; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let comm = l[a].commutator(&l[b]);
            for (cc, lc) in l.iter().enumerate() {
                let v = comm.matmul(lc).trace() * c(0.0, -0.25);
                f[a][b][cc] = v.re;
            }
        }
    }
    f
}

/// Ladder and diagonal operators of one qutrit.
#[derive(Clone, Debug)]
pub struct SiteOps {
    pub i_plus: ComplexMatrix,
    pub i_minus: ComplexMatrix,
    pub u_plus: ComplexMatrix,
    pub u_minus: ComplexMatrix,
    pub v_plus: ComplexMatrix,
    pub v_minus: ComplexMatrix,
    pub i3: ComplexMatrix,
    pub y: ComplexMatrix,
}

impl SiteOps {
    /// `I± = I₁ ± iI₂`, `U± = I₆ ± iI₇`, `V± = I₄ ∓ iI₅`, `Y = (2/√3) I₈`
    /// with `I_μ = λ_μ / 2`.
    pub fn new() -> Self {
        let l = gellmann();
        let half = |m: &ComplexMatrix| m.scale_real(0.5);
        let (i1, i2, i3, i4, i5, i6, i7, i8) = (
            half(&l[0]),
            half(&l[1]),
            half(&l[2]),
            half(&l[3]),
            half(&l[4]),
            half(&l[5]),
            half(&l[6]),
            half(&l[7]),
        );
        Self {
            i_plus: &i1 + &i2.scale(I),
            i_minus: &i1 - &i2.scale(I),
            u_plus: &i6 + &i7.scale(I),
            u_minus: &i6 - &i7.scale(I),
            v_plus: &i4 - &i5.scale(I),
            v_minus: &i4 + &i5.scale(I),
            i3,
            y: i8.scale_real(2.0 / 3f64.sqrt()),
        }
    }
}

impl Default for SiteOps {
    fn default() -> Self {
        Self::new()
    }
}

fn check_k(k: usize) -> Result<()> {
    if (1..=3).contains(&k) {
        Ok(())
    } else {
        Err(Error::BadSubsystem(k))
    }
}

/// Lex indices `(s₁, s₂, s₃)` carrying the fundamental representation of the
/// `k`-th SU(3) realization: `I₊` sends `s₂ → s₁`, `U₊` sends `s₃ → s₂`,
/// `V₊` sends `s₁ → s₃`.
pub fn realization_basis(k: usize) -> Result<[usize; 3]> {
    check_k(k)?;
    use Label::*;
    let l = QutritBasisMap::lex;
    Ok(match k {
        1 => [l(Plus, Zero), l(Zero, Plus), l(Minus, Minus)],
        2 => [l(Zero, Minus), l(Minus, Zero), l(Plus, Plus)],
        _ => [l(Minus, Plus), l(Plus, Minus), l(Zero, Zero)],
    })
}

/// Projector onto the span of subsystem `k`.
pub fn subsystem_projector(k: usize) -> Result<ComplexMatrix> {
    let mut p = ComplexMatrix::zeros(9, 9);
    for i in realization_basis(k)? {
        p[(i, i)] = ONE;
    }
    Ok(p)
}

/// One of the three SU(3) realizations on `C³⊗C³`, lex order.
#[derive(Clone, Debug)]
pub struct Su3Realization {
    pub k: usize,
    pub i_plus: ComplexMatrix,
    pub i_minus: ComplexMatrix,
    pub u_plus: ComplexMatrix,
    pub u_minus: ComplexMatrix,
    pub v_plus: ComplexMatrix,
    pub v_minus: ComplexMatrix,
    pub i3: ComplexMatrix,
    pub y: ComplexMatrix,
}

impl Su3Realization {
    /// Cartesian generators `I₁ … I₈` recovered from the ladder combinations.
    pub fn generators(&self) -> [ComplexMatrix; 8] {
        let two_i = c(0.0, 2.0);
        let div = |m: ComplexMatrix, d: Complex64| m.scale(ONE / d);
        [
            (&self.i_plus + &self.i_minus).scale_real(0.5),
            div(&self.i_plus - &self.i_minus, two_i),
            self.i3.clone(),
            (&self.v_plus + &self.v_minus).scale_real(0.5),
            div(&self.v_minus - &self.v_plus, two_i),
            (&self.u_plus + &self.u_minus).scale_real(0.5),
            div(&self.u_plus - &self.u_minus, two_i),
            self.y.scale_real(3f64.sqrt() / 2.0),
        ]
    }

    pub fn ops(&self) -> [&ComplexMatrix; 8] {
        [
            &self.i_plus,
            &self.i_minus,
            &self.u_plus,
            &self.u_minus,
            &self.v_plus,
            &self.v_minus,
            &self.i3,
            &self.y,
        ]
    }
}

/// Builds the `k`-th SU(3) realization from products of single-site
/// operators (subscripts 1, 2 denote the two qutrits).
pub fn su3_realization(k: usize) -> Result<Su3Realization> {
    check_k(k)?;
    let s = SiteOps::new();
    let id = ComplexMatrix::identity(3);
    let first = |m: &ComplexMatrix| kron(m, &id);
    let second = |m: &ComplexMatrix| kron(&id, m);
    let pair = |a: &ComplexMatrix, b: &ComplexMatrix| kron(a, b);

    let i31 = first(&s.i3);
    let i32 = second(&s.i3);
    let y1 = first(&s.y);
    let y2 = second(&s.y);
    let i31i32 = i31.matmul(&i32);
    let y1y2 = y1.matmul(&y2);
    let cross = &i31.matmul(&y2) - &y1.matmul(&i32);

    let (ip, im, up, um, vp, vm, i3, y) = match k {
        1 => (
            pair(&s.i_plus, &s.i_minus),
            pair(&s.i_minus, &s.i_plus),
            pair(&s.u_plus, &s.v_minus),
            pair(&s.u_minus, &s.v_plus),
            pair(&s.v_plus, &s.u_minus),
            pair(&s.v_minus, &s.u_plus),
            // (1/3)(I³₁ − I³₂) + (1/2)(I³₁Y₂ − Y₁I³₂)
            &(&i31 - &i32).scale_real(1.0 / 3.0) + &cross.scale_real(0.5),
            // (1/3)(Y₁ + Y₂) − (2/3)I³₁I³₂ − (1/2)Y₁Y₂
            &(&(&y1 + &y2).scale_real(1.0 / 3.0) - &i31i32.scale_real(2.0 / 3.0)) - &y1y2.scale_real(0.5),
        ),
        2 => (
            pair(&s.u_plus, &s.u_minus),
            pair(&s.u_minus, &s.u_plus),
            pair(&s.v_plus, &s.i_minus),
            pair(&s.v_minus, &s.i_plus),
            pair(&s.i_plus, &s.v_minus),
            pair(&s.i_minus, &s.v_plus),
            // (1/2)[−(1/3)(I³₁ − I³₂) + (1/2)(Y₁ − Y₂) + I³₁Y₂ − Y₁I³₂]
            (&(&(&i31 - &i32).scale_real(-1.0 / 3.0) + &(&y1 - &y2).scale_real(0.5)) + &cross).scale_real(0.5),
            // −[(1/3)(I³₁ + I³₂) + (1/6)(Y₁ + Y₂) + (2/3)I³₁I³₂ + (1/2)Y₁Y₂]
            -(&(&(&(&i31 + &i32).scale_real(1.0 / 3.0) + &(&y1 + &y2).scale_real(1.0 / 6.0))
                + &i31i32.scale_real(2.0 / 3.0))
                + &y1y2.scale_real(0.5)),
        ),
        _ => (
            pair(&s.v_plus, &s.v_minus),
            pair(&s.v_minus, &s.v_plus),
            pair(&s.i_plus, &s.u_minus),
            pair(&s.i_minus, &s.u_plus),
            pair(&s.u_plus, &s.i_minus),
            pair(&s.u_minus, &s.i_plus),
            // (1/2)[−(1/3)(I³₁ − I³₂) − (1/2)(Y₁ − Y₂) + I³₁Y₂ − Y₁I³₂]
            (&(&(&i31 - &i32).scale_real(-1.0 / 3.0) - &(&y1 - &y2).scale_real(0.5)) + &cross).scale_real(0.5),
            // (1/3)(I³₁ + I³₂) − (1/6)(Y₁ + Y₂) − (2/3)I³₁I³₂ − (1/2)Y₁Y₂
            &(&(&(&i31 + &i32).scale_real(1.0 / 3.0) - &(&y1 + &y2).scale_real(1.0 / 6.0))
                - &i31i32.scale_real(2.0 / 3.0))
                - &y1y2.scale_real(0.5),
        ),
    };
    Ok(Su3Realization {
        k,
        i_plus: ip,
        i_minus: im,
        u_plus: up,
        u_minus: um,
        v_plus: vp,
        v_minus: vm,
        i3,
        y,
    })
}

/// The fundamental representation placed on [`realization_basis`]`(k)`;
/// independent of the product formulas in [`su3_realization`].
pub fn embedded_fundamental(k: usize) -> Result<Su3Realization> {
    let basis = realization_basis(k)?;
    let s = SiteOps::new();
    let embed = |m: &ComplexMatrix| {
        let mut out = ComplexMatrix::zeros(9, 9);
        for (i, &bi) in basis.iter().enumerate() {
            for (j, &bj) in basis.iter().enumerate() {
                out[(bi, bj)] = m[(i, j)];
            }
        }
        out
    };
    Ok(Su3Realization {
        k,
        i_plus: embed(&s.i_plus),
        i_minus: embed(&s.i_minus),
        u_plus: embed(&s.u_plus),
        u_minus: embed(&s.u_minus),
        v_plus: embed(&s.v_plus),
        v_minus: embed(&s.v_minus),
        i3: embed(&s.i3),
        y: embed(&s.y),
    })
}

/// Largest distance between the product-formula operators and the embedded
/// fundamental representation.
pub fn su3_formula_mismatch(k: usize) -> Result<f64> {
    let built = su3_realization(k)?;
    let reference = embedded_fundamental(k)?;
    Ok(built
        .ops()
        .iter()
        .zip(reference.ops())
        .map(|(a, b)| a.dist(b))
        .fold(0.0, f64::max))
}

/// Largest residual of `[I_λ, I_μ] − i f_λμν I_ν` over all `λ, μ`.
pub fn su3_commutator_residual(r: &Su3Realization) -> f64 {
    let g = r.generators();
    let f = structure_constants();
    let mut worst: f64 = 0.0;
    for a in 0..8 {
        for b in 0..8 {
            let lhs = g[a].commutator(&g[b]);
            let mut rhs = ComplexMatrix::zeros(9, 9);
            for (cc, gc) in g.iter().enumerate() {
                if f[a][b][cc] != 0.0 {
                    rhs = &rhs + &gc.scale(c(0.0, f[a][b][cc]));
                }
            }
            worst = worst.max(lhs.dist(&rhs));
        }
    }
    worst
}

/// SU(2) realization `S± , S₃` built from the `k`-th SU(3) realization.
#[derive(Clone, Debug)]
pub struct Su2Realization {
    pub k: usize,
    pub s_plus: ComplexMatrix,
    pub s_minus: ComplexMatrix,
    pub s3: ComplexMatrix,
    pub casimir: ComplexMatrix,
}

impl Su2Realization {
    /// `S₁ = (S₊ + S₋)/2`.
    pub fn s1(&self) -> ComplexMatrix {
        (&self.s_plus + &self.s_minus).scale_real(0.5)
    }

    /// `S₂ = (S₊ − S₋)/(2i)`.
    pub fn s2(&self) -> ComplexMatrix {
        (&self.s_plus - &self.s_minus).scale(c(0.0, -0.5))
    }
}

/// `S₊ = (V₋ + U₊)/√2`, `S₋ = (V₊ + U₋)/√2`, `S₃ = (3/4)Y + (1/4)(I₊ + I₋)`,
/// with Casimir `J = (1/2)(S₊S₋ + S₋S₊) + S₃²`.
pub fn su2_realization(k: usize) -> Result<Su2Realization> {
    let r = su3_realization(k)?;
    let s_plus = (&r.v_minus + &r.u_plus).scale_real(FRAC_1_SQRT_2);
    let s_minus = (&r.v_plus + &r.u_minus).scale_real(FRAC_1_SQRT_2);
    let s3 = &r.y.scale_real(0.75) + &(&r.i_plus + &r.i_minus).scale_real(0.25);
    let casimir = &s_plus.anticommutator(&s_minus).scale_real(0.5) + &s3.matmul(&s3);
    Ok(Su2Realization {
        k,
        s_plus,
        s_minus,
        s3,
        casimir,
    })
}

// ---------------------------------------------------------------------------
// Hecke matrix

/// Phases `q₁ = e^{iφ₁}`, `q₂ = e^{iφ₂}`, `Q = q₁q₂`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeckeParams {
    pub phi1: f64,
    pub phi2: f64,
}

impl HeckeParams {
    pub fn new(phi1: f64, phi2: f64) -> Self {
        Self { phi1, phi2 }
    }

    pub fn q1(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.phi1)
    }

    pub fn q2(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.phi2)
    }

    pub fn big_q(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.phi1 + self.phi2)
    }

    pub fn value(&self, entry: MEntry) -> Complex64 {
        match entry {
            MEntry::Q1 => self.q1(),
            MEntry::Q1Inv => self.q1().conj(),
            MEntry::Q2 => self.q2(),
            MEntry::Q2Inv => self.q2().conj(),
            MEntry::QProd => self.big_q(),
            MEntry::QProdInv => self.big_q().conj(),
            MEntry::Swap => ONE,
        }
    }
}

/// Which phase sits in a nonzero entry of `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MEntry {
    Q1,
    Q1Inv,
    Q2,
    Q2Inv,
    QProd,
    QProdInv,
    Swap,
}

/// Nonzero pattern of `M` as `(row, col, entry)` in lex order.
///
/// Row `(a,b)`, column `(c,d)`:
/// * `a = b = 1`, `(c,d)` a permutation of `{0,−1}` → `q₁`; `a = b = 0` → `q₂`;
///   `a = b = −1` → `Q⁻¹`;
/// * `c = d = 1`, `(a,b)` a permutation of `{0,−1}` → `q₁⁻¹`; `c = d = 0` →
///   `q₂⁻¹`; `c = d = −1` → `Q`;
/// * `(c,d) = (b,a)` with `a ≠ b` → 1.
pub fn m_pattern() -> Vec<(usize, usize, MEntry)> {
    use Label::*;
    let mut out = Vec::new();
    for a in Label::ALL {
        for b in Label::ALL {
            for cl in Label::ALL {
                for d in Label::ALL {
                    let row = QutritBasisMap::lex(a, b);
                    let col = QutritBasisMap::lex(cl, d);
                    if a == b && cl != d && cl != a && d != a {
                        out.push((
                            row,
                            col,
                            match a {
                                Plus => MEntry::Q1,
                                Zero => MEntry::Q2,
                                Minus => MEntry::QProdInv,
                            },
                        ));
                    }
                    if cl == d && a != b && a != cl && b != cl {
                        out.push((
                            row,
                            col,
                            match cl {
                                Plus => MEntry::Q1Inv,
                                Zero => MEntry::Q2Inv,
                                Minus => MEntry::QProd,
                            },
                        ));
                    }
                    if a != b && cl == b && d == a {
                        out.push((row, col, MEntry::Swap));
                    }
                }
            }
        }
    }
    out
}

/// Assembles a 9×9 matrix on the `M` pattern with a caller-chosen value per
/// entry kind.
pub fn assemble_on_m_pattern(mut value: impl FnMut(MEntry) -> Complex64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(9, 9);
    for (r, col, e) in m_pattern() {
        m[(r, col)] += value(e);
    }
    m
}

/// The Hermitian Hecke matrix `M(φ₁, φ₂)`, lex order.
pub fn build_m(p: &HeckeParams) -> ComplexMatrix {
    assemble_on_m_pattern(|e| p.value(e))
}

/// `A ⊗ I₃` on three qutrits.
pub fn on_sites_12(op: &ComplexMatrix) -> ComplexMatrix {
    kron(op, &ComplexMatrix::identity(3))
}

/// `I₃ ⊗ A` on three qutrits.
pub fn on_sites_23(op: &ComplexMatrix) -> ComplexMatrix {
    kron(&ComplexMatrix::identity(3), op)
}

/// `‖M² − αM − βI‖` with the fixed `(α, β) = (1, 2)`.
pub fn quadratic_residual(p: &HeckeParams) -> f64 {
    let m = build_m(p);
    let rhs = &m.scale_real(HECKE_ALPHA) + &ComplexMatrix::identity(9).scale_real(HECKE_BETA);
    m.matmul(&m).dist(&rhs)
}

/// `‖M₁₂M₂₃M₁₂ + gM₁₂ − M₂₃M₁₂M₂₃ − gM₂₃‖` on 27 dimensions with `g = 2`.
pub fn hecke_residual(p: &HeckeParams) -> f64 {
    hecke_residual_with_g(p, HECKE_G)
}

/// [`hecke_residual`] with an arbitrary coupling; `g ≠ 2` is a negative
/// control.
pub fn hecke_residual_with_g(p: &HeckeParams, g: f64) -> f64 {
    let m = build_m(p);
    let m12 = on_sites_12(&m);
    let m23 = on_sites_23(&m);
    let lhs = &m12.matmul(&m23).matmul(&m12) + &m12.scale_real(g);
    let rhs = &m23.matmul(&m12).matmul(&m23) + &m23.scale_real(g);
    lhs.dist(&rhs)
}

/// `B = (2I − M)/3`, the `x → ∞` limit of `R̆(x)/x`.
pub fn braid_generator(p: &HeckeParams) -> ComplexMatrix {
    (&ComplexMatrix::identity(9).scale_real(2.0) - &build_m(p)).scale_real(1.0 / 3.0)
}

/// `‖B₁₂B₂₃B₁₂ − B₂₃B₁₂B₂₃‖`.
pub fn braid_limit_residual(p: &HeckeParams) -> f64 {
    let b = braid_generator(p);
    let b12 = on_sites_12(&b);
    let b23 = on_sites_23(&b);
    b12.matmul(&b23).matmul(&b12).dist(&b23.matmul(&b12).matmul(&b23))
}

/// `‖b₁b₃ − b₃b₁‖` for `b₁ = B⊗I⊗I`, `b₃ = I⊗I⊗B` on four qutrits (81 dims).
pub fn far_commutativity_residual(p: &HeckeParams) -> f64 {
    let b = braid_generator(p);
    let id9 = ComplexMatrix::identity(9);
    let b1 = kron(&b, &id9);
    let b3 = kron(&id9, &b);
    b1.commutator(&b3).frobenius_norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{eig_hermitian, inner, vec_dist};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn basis_map_is_involutive_permutation() {
        let p = QutritBasisMap::permutation_matrix();
        assert_eq!(p.matmul(&p.transpose()).dist(&ComplexMatrix::identity(9)), 0.0);
        let swapped: Vec<usize> = (0..9).filter(|&i| QutritBasisMap::DISPLAY_TO_LEX[i] != i).collect();
        assert_eq!(swapped, vec![2, 3, 5, 6]);
        assert_eq!(QutritBasisMap::ket_name(QutritBasisMap::DISPLAY_TO_LEX[3]), "|1,-1>");
        assert_eq!(QutritBasisMap::ket_name(QutritBasisMap::DISPLAY_TO_LEX[6]), "|0,-1>");
    }

    #[test]
    fn gellmann_normalization() {
        let l = gellmann();
        for a in 0..8 {
            for b in 0..8 {
                let t = l[a].matmul(&l[b]).trace();
                let expected = if a == b { 2.0 } else { 0.0 };
                assert!((t - c(expected, 0.0)).norm() < 1e-14);
            }
            assert!(l[a].is_hermitian(0.0));
        }
    }

    #[test]
    fn site_operators_match_matrix_units() {
        let s = SiteOps::new();
        assert!(s.i_plus.dist(&ComplexMatrix::unit(3, 0, 1)) < 1e-15);
        assert!(s.u_plus.dist(&ComplexMatrix::unit(3, 1, 2)) < 1e-15);
        assert!(s.v_plus.dist(&ComplexMatrix::unit(3, 2, 0)) < 1e-15);
        assert!(s.y.dist(&ComplexMatrix::diag_real(&[1.0 / 3.0, 1.0 / 3.0, -2.0 / 3.0])) < 1e-15);
        // V₊|1⟩ = |−1⟩
        let out = s.v_plus.mul_vec(&crate::tensor::basis_vector(3, 0));
        assert!(vec_dist(&out, &crate::tensor::basis_vector(3, 2)) < 1e-15);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn structure_constant_values() {
        let f = structure_constants();
        assert!((f[0][1][2] - 1.0).abs() < 1e-14);
        assert!((f[3][4][7] - 3f64.sqrt() / 2.0).abs() < 1e-14);
        assert!((f[5][6][7] - 3f64.sqrt() / 2.0).abs() < 1e-14);
        assert!((f[0][3][6] - 0.5).abs() < 1e-14);
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(f[a][a][b], 0.0);
                for cc in 0..8 {
                    assert!((f[a][b][cc] + f[b][a][cc]).abs() < 1e-12);
                    assert!((f[a][b][cc] - f[b][cc][a]).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn su3_first_realization_raises() {
        use Label::*;
        let r = su3_realization(1).unwrap();
        let out = r.i_plus.mul_vec(&ket(Zero, Plus));
        assert!(vec_dist(&out, &ket(Plus, Zero)) < 1e-15);
        let out = r.y.mul_vec(&ket(Minus, Minus));
        let expected: Vec<_> = ket(Minus, Minus).iter().map(|z| z * (-2.0 / 3.0)).collect();
        assert!(vec_dist(&out, &expected) < 1e-15);
    }

    #[test]
    fn su3_realizations_match_embedded_fundamental() {
        for k in 1..=3 {
            assert!(su3_formula_mismatch(k).unwrap() < 1e-14, "k = {k}");
        }
    }

    #[test]
    fn su3_invariants() {
        let reals: Vec<_> = (1..=3).map(|k| su3_realization(k).unwrap()).collect();
        for r in &reals {
            assert!(r.i_minus.dist(&r.i_plus.dagger()) < 1e-15);
            assert!(r.u_minus.dist(&r.u_plus.dagger()) < 1e-15);
            assert!(r.v_minus.dist(&r.v_plus.dagger()) < 1e-15);
            assert!(r.i3.is_hermitian(1e-15) && r.y.is_hermitian(1e-15));
            assert!(su3_commutator_residual(r) < 1e-12);
            let q = &ComplexMatrix::identity(9) - &subsystem_projector(r.k).unwrap();
            for op in r.ops() {
                assert!(q.matmul(op).matmul(&q).frobenius_norm() < 1e-15);
                assert!(q.matmul(op).frobenius_norm() < 1e-15);
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                for a in reals[i].ops() {
                    for b in reals[j].ops() {
                        assert!(a.commutator(b).frobenius_norm() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn bad_subsystem() {
        assert!(matches!(su3_realization(0), Err(Error::BadSubsystem(0))));
        assert!(matches!(su2_realization(4), Err(Error::BadSubsystem(4))));
    }

    #[test]
    fn su2_relations() {
        let reals: Vec<_> = (1..=3).map(|k| su2_realization(k).unwrap()).collect();
        for s in &reals {
            let comm = s.s_plus.commutator(&s.s_minus);
            assert!(comm.dist(&s.s3.scale_real(2.0)) < 1e-12);
            assert!(s.s3.commutator(&s.s_plus).dist(&s.s_plus) < 1e-12);
            assert!(s.s3.commutator(&s.s_minus).dist(&(-&s.s_minus)) < 1e-12);
            assert!(s.s_plus.matmul(&s.s_plus).max_abs() < 1e-14);
            assert!(s.s_minus.matmul(&s.s_minus).max_abs() < 1e-14);
            let es = eig_hermitian(&s.casimir).unwrap();
            let n34 = es.values.iter().filter(|v| (*v - 0.75).abs() < 1e-10).count();
            let n0 = es.values.iter().filter(|v| v.abs() < 1e-10).count();
            assert_eq!((n34, n0), (2, 7));
        }
        assert!(reals[0].s_plus.commutator(&reals[1].s_minus).frobenius_norm() < 1e-12);
        let total = &(&reals[0].casimir + &reals[1].casimir) + &reals[2].casimir;
        assert!((total.trace() - c(4.5, 0.0)).norm() < 1e-10);
        let rank = eig_hermitian(&total)
            .unwrap()
            .values
            .iter()
            .filter(|v| v.abs() > 1e-10)
            .count();
        assert_eq!(rank, 6);
    }

    #[test]
    fn m_entries() {
        use Label::*;
        let p = HeckeParams::new(0.37, -1.2);
        let m = build_m(&p);
        let l = QutritBasisMap::lex;
        assert!((m[(l(Plus, Plus), l(Zero, Minus))] - p.q1()).norm() < 1e-15);
        assert!((m[(l(Zero, Minus), l(Plus, Plus))] - p.q1().inv()).norm() < 1e-15);
        assert_eq!(m[(l(Plus, Zero), l(Zero, Plus))], ONE);
        for i in 0..9 {
            assert_eq!(m[(i, i)], ZERO);
        }
        assert!(m.is_hermitian(1e-15));
        assert!((p.q1().norm() - 1.0).abs() < 1e-14 && (p.big_q().norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn m_quadratic_and_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let p = HeckeParams::new(rng.gen_range(0.0..6.3), rng.gen_range(0.0..6.3));
            assert!(quadratic_residual(&p) < 1e-12);
            let es = eig_hermitian(&build_m(&p)).unwrap();
            let n2 = es.values.iter().filter(|v| (*v - 2.0).abs() < 1e-10).count();
            let nm1 = es.values.iter().filter(|v| (*v + 1.0).abs() < 1e-10).count();
            assert_eq!((n2, nm1), (3, 6));
        }
    }

    #[test]
    fn hecke_and_braid_residuals() {
        let p0 = HeckeParams::new(0.0, 0.0);
        assert!(hecke_residual(&p0) < 1e-12);
        assert!(braid_limit_residual(&p0) < 1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..100 {
            let p = HeckeParams::new(rng.gen_range(0.0..6.3), rng.gen_range(0.0..6.3));
            assert!(hecke_residual(&p) < 1e-10);
            assert!(braid_limit_residual(&p) < 1e-10);
        }
        assert!(hecke_residual_with_g(&p0, 3.0) > 0.1);
        let b = braid_generator(&HeckeParams::new(0.4, 1.9));
        assert!(b.matmul(&b).dist(&b) < 1e-12);
    }

    #[test]
    fn far_commutativity_four_sites() {
        assert!(far_commutativity_residual(&HeckeParams::new(0.8, 2.1)) < 1e-12);
    }

    #[test]
    fn realization_bases_are_orthogonal_and_cover() {
        let mut all: Vec<usize> = (1..=3).flat_map(|k| realization_basis(k).unwrap()).collect();
        all.sort();
        assert_eq!(all, (0..9).collect::<Vec<_>>());
        let e = ket(Label::Plus, Label::Plus);
        assert_eq!(inner(&e, &e), ONE);
    }
}
