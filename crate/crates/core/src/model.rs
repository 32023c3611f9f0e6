//! Domain types and the steady state of the driven three-level system.
//!
//! Level order throughout is `(g, 0, 1)`: the cold bath couples `g ↔ 0` with
//! rate `Γc` and occupation `n_c`, the hot bath couples `g ↔ 1` with rate
//! `Γh` and occupation `n_h`, and a resonant classical drive couples `0 ↔ 1`
//! with matter-field coupling `λ`. Natural units `ħ = k_B = 1`; all rates and
//! frequencies share one arbitrary unit.
//!
//! The steady state is provided by three routes of increasing brute force:
//!
//! 1. [`coherence_closed_form`] — the literal closed form of the coherence,
//! 2. [`steady_state`] — a 4×4 linear solve in `(p_g, p_0, p_1, Im ρ₁₀)`,
//! 3. [`liouvillian_steady_state`] — the null space of the full generator on
//!    all nine density-matrix components, kept as an 18-dimensional real
//!    linear map so that Hermiticity and `Re ρ₁₀ = 0` are proved, not assumed.

use nalgebra::{DMatrix, Matrix3, Matrix4, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Lower sanity bound for rates, frequencies, temperatures and couplings.
pub const PARAM_MIN: f64 = 1e-12;
/// Upper sanity bound for rates, frequencies, temperatures and couplings.
pub const PARAM_MAX: f64 = 1e12;

pub(crate) fn check_bounded(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && (PARAM_MIN..=PARAM_MAX).contains(&value) {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            constraint: "within [1e-12, 1e12]",
        })
    }
}

/// Mean thermal photon number `n(ω, T) = 1/(e^{ω/T} − 1)`; zero at `T = 0`.
pub fn bose_occupation(omega: f64, temperature: f64) -> Result<f64> {
    check_bounded("omega", omega)?;
    if !temperature.is_finite() || !(0.0..=PARAM_MAX).contains(&temperature) {
        return Err(Error::InvalidParameter {
            name: "temperature",
            value: temperature,
            constraint: "within [0, 1e12]",
        });
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    // exp_m1 keeps full precision in the classical limit ω ≪ T,
    // where n → T/ω − 1/2.
    Ok(1.0 / (omega / temperature).exp_m1())
}

/// Reservoir occupations, accepted directly so that regime limits
/// (`n = T/ω`, `n = e^{−ω/T}`) can be injected exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Occupations {
    n_c: f64,
    n_h: f64,
}

impl Occupations {
    pub fn new(n_c: f64, n_h: f64) -> Result<Self> {
        for (name, value) in [("n_c", n_c), ("n_h", n_h)] {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidParameter {
                    name: if name == "n_c" { "n_c" } else { "n_h" },
                    value,
                    constraint: "finite and non-negative",
                });
            }
        }
        Ok(Self { n_c, n_h })
    }

    /// Thermal occupations of both reservoirs at the drive transition
    /// frequencies.
    pub fn thermal(baths: &BathSpec, drive: &DriveSpec) -> Result<Self> {
        Ok(Self {
            n_c: bose_occupation(drive.omega_c, baths.t_c)?,
            n_h: bose_occupation(drive.omega_h, baths.t_h)?,
        })
    }

    pub fn n_c(&self) -> f64 {
        self.n_c
    }

    pub fn n_h(&self) -> f64 {
        self.n_h
    }
}

/// Reservoir temperatures and system-bath decay rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSpec {
    t_c: f64,
    t_h: f64,
    gamma_c: f64,
    gamma_h: f64,
}

impl BathSpec {
    pub fn new(t_c: f64, t_h: f64, gamma_c: f64, gamma_h: f64) -> Result<Self> {
        check_bounded("t_c", t_c)?;
        check_bounded("t_h", t_h)?;
        check_bounded("gamma_c", gamma_c)?;
        check_bounded("gamma_h", gamma_h)?;
        if t_c >= t_h {
            return Err(Error::InvalidParameter {
                name: "t_c",
                value: t_c,
                constraint: "strictly below t_h",
            });
        }
        Ok(Self {
            t_c,
            t_h,
            gamma_c,
            gamma_h,
        })
    }

    pub fn t_c(&self) -> f64 {
        self.t_c
    }

    pub fn t_h(&self) -> f64 {
        self.t_h
    }

    pub fn gamma_c(&self) -> f64 {
        self.gamma_c
    }

    pub fn gamma_h(&self) -> f64 {
        self.gamma_h
    }

    /// Temperature ratio `τ = Tc/Th ∈ (0, 1)`.
    pub fn tau(&self) -> f64 {
        self.t_c / self.t_h
    }

    /// Carnot COP `ζ_C = Tc/(Th − Tc)`.
    pub fn zeta_c(&self) -> f64 {
        self.t_c / (self.t_h - self.t_c)
    }

    /// Dissipation asymmetry `γ = Γh/Γc`.
    pub fn gamma_ratio(&self) -> f64 {
        self.gamma_h / self.gamma_c
    }
}

/// Transition frequencies and matter-field coupling of the drive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveSpec {
    omega_c: f64,
    omega_h: f64,
    lambda: f64,
}

impl DriveSpec {
    pub fn new(omega_c: f64, omega_h: f64, lambda: f64) -> Result<Self> {
        check_bounded("omega_c", omega_c)?;
        check_bounded("omega_h", omega_h)?;
        check_bounded("lambda", lambda)?;
        if omega_h <= omega_c {
            return Err(Error::InvalidParameter {
                name: "omega_h",
                value: omega_h,
                constraint: "strictly above omega_c",
            });
        }
        Ok(Self {
            omega_c,
            omega_h,
            lambda,
        })
    }

    pub fn omega_c(&self) -> f64 {
        self.omega_c
    }

    pub fn omega_h(&self) -> f64 {
        self.omega_h
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Resonant field frequency `ω = ωh − ωc` (ground-level offset set to 0).
    pub fn field_frequency(&self) -> f64 {
        self.omega_h - self.omega_c
    }
}

/// Steady state: three populations and the single relevant coherence
/// `ρ₁₀ = ⟨1|ρ|0⟩`, which is purely imaginary in steady state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    p_g: f64,
    p_0: f64,
    p_1: f64,
    rho10: Complex64,
}

impl SteadyState {
    pub fn p_g(&self) -> f64 {
        self.p_g
    }

    pub fn p_0(&self) -> f64 {
        self.p_0
    }

    pub fn p_1(&self) -> f64 {
        self.p_1
    }

    pub fn rho10(&self) -> Complex64 {
        self.rho10
    }

    pub fn trace(&self) -> f64 {
        self.p_g + self.p_0 + self.p_1
    }

    /// Full density matrix in the `(g, 0, 1)` basis. Ground-state coherences
    /// vanish in steady state (they decay with no source term).
    pub fn density_matrix(&self) -> Matrix3<Complex64> {
        let mut m = Matrix3::zeros();
        m[(0, 0)] = Complex64::new(self.p_g, 0.0);
        m[(1, 1)] = Complex64::new(self.p_0, 0.0);
        m[(2, 2)] = Complex64::new(self.p_1, 0.0);
        m[(2, 1)] = self.rho10;
        m[(1, 2)] = self.rho10.conj();
        m
    }
}

fn check_rates(gamma_c: f64, gamma_h: f64, lambda: f64) -> Result<()> {
    check_bounded("gamma_c", gamma_c)?;
    check_bounded("gamma_h", gamma_h)?;
    check_bounded("lambda", lambda)
}

/// Denominator shared by the closed forms of the coherence, the cooling
/// power, and the Ω objective.
pub(crate) fn closed_form_denominator(
    n_c: f64,
    n_h: f64,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
) -> f64 {
    lambda * lambda * ((1.0 + 3.0 * n_h) * gamma_h + (1.0 + 3.0 * n_c) * gamma_c)
        + gamma_c
            * gamma_h
            * (1.0 + 2.0 * n_h + n_c * (2.0 + 3.0 * n_h))
            * ((1.0 + n_c) * gamma_c + (1.0 + n_h) * gamma_h)
}

/// Literal closed form of the steady-state coherence,
/// `ρ₁₀ = iλ(n_h − n_c)ΓcΓh / D`, purely imaginary by construction.
pub fn coherence_closed_form(
    occ: &Occupations,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
) -> Result<Complex64> {
    check_rates(gamma_c, gamma_h, lambda)?;
    let den = closed_form_denominator(occ.n_c, occ.n_h, gamma_c, gamma_h, lambda);
    Ok(Complex64::new(
        0.0,
        lambda * (occ.n_h - occ.n_c) * gamma_c * gamma_h / den,
    ))
}

/// Steady state from the 4×4 linear system in `(p_g, p_0, p_1, y)` with
/// `ρ₁₀ = i·y`. The coherence equation forces `Re ρ₁₀ = 0`, so the real
/// unknowns close on themselves; the trace row replaces the redundant
/// population equation.
pub fn steady_state(
    occ: &Occupations,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
) -> Result<SteadyState> {
    check_rates(gamma_c, gamma_h, lambda)?;
    let (n_c, n_h) = (occ.n_c, occ.n_h);
    let d = gamma_h * (n_h + 1.0) + gamma_c * (n_c + 1.0);
    #[rustfmt::skip]
    let mut a = Matrix4::new(
        -gamma_h * n_h, 0.0,                    gamma_h * (n_h + 1.0), lambda,
        gamma_c * n_c,  -gamma_c * (n_c + 1.0), 0.0,                   lambda,
        0.0,            -lambda,                lambda,                -d,
        1.0,            1.0,                    1.0,                   0.0,
    );
    // Row equilibration; right-hand side rows 0..3 are zero, so only the
    // matrix is scaled and the solution is unchanged.
    for r in 0..3 {
        let s = (0..4).map(|c| a[(r, c)].abs()).fold(0.0, f64::max);
        if s > 0.0 {
            for c in 0..4 {
                a[(r, c)] /= s;
            }
        }
    }
    let b = Vector4::new(0.0, 0.0, 0.0, 1.0);
    let x = a
        .lu()
        .solve(&b)
        .ok_or(Error::SingularSystem("steady_state"))?;
    Ok(SteadyState {
        p_g: x[0],
        p_0: x[1],
        p_1: x[2],
        rho10: Complex64::new(0.0, x[3]),
    })
}

/// Hot-bath dissipator applied to a density matrix (emission `1 → g` at
/// `Γh(n_h+1)`, absorption `g → 1` at `Γh·n_h`).
pub fn dissipator_hot(rho: &Matrix3<Complex64>, n_h: f64, gamma_h: f64) -> Matrix3<Complex64> {
    dissipator(rho, 2, n_h, gamma_h)
}

/// Cold-bath dissipator applied to a density matrix (emission `0 → g` at
/// `Γc(n_c+1)`, absorption `g → 0` at `Γc·n_c`).
pub fn dissipator_cold(rho: &Matrix3<Complex64>, n_c: f64, gamma_c: f64) -> Matrix3<Complex64> {
    dissipator(rho, 1, n_c, gamma_c)
}

/// Dissipator for a bath coupling the ground level (index 0) to `excited`:
/// `Γ(n+1)(2|g⟩⟨g|ρ_ee − {|e⟩⟨e|, ρ}) + Γn(2|e⟩⟨e|ρ_gg − {|g⟩⟨g|, ρ})`.
fn dissipator(rho: &Matrix3<Complex64>, excited: usize, n: f64, gamma: f64) -> Matrix3<Complex64> {
    let down = gamma * (n + 1.0);
    let up = gamma * n;
    let mut out = Matrix3::zeros();
    for i in 0..3 {
        for j in 0..3 {
            let d = (usize::from(i == excited) + usize::from(j == excited)) as f64;
            let u = (usize::from(i == 0) + usize::from(j == 0)) as f64;
            out[(i, j)] = -(down * d + up * u) * rho[(i, j)];
        }
    }
    out[(0, 0)] += 2.0 * down * rho[(excited, excited)];
    out[(excited, excited)] += 2.0 * up * rho[(0, 0)];
    out
}

/// Full right-hand side of the master equation in the rotating frame.
///
/// `frame_shift` is the diagonal Hamiltonian remainder `(ωc+ωh)/2` left on
/// the driven doublet by the rotating frame. It only rotates the ground-state
/// coherences, which decay without a source, so the steady state is
/// independent of it; `0` reproduces the generator used by the oracle.
pub fn lindblad_rhs_in_frame(
    rho: &Matrix3<Complex64>,
    occ: &Occupations,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
    frame_shift: f64,
) -> Matrix3<Complex64> {
    let mut h = Matrix3::zeros();
    h[(2, 1)] = Complex64::new(lambda, 0.0);
    h[(1, 2)] = Complex64::new(lambda, 0.0);
    h[(1, 1)] = Complex64::new(frame_shift, 0.0);
    h[(2, 2)] = Complex64::new(frame_shift, 0.0);
    let comm = h * rho - rho * h;
    comm * (-Complex64::i())
        + dissipator_hot(rho, occ.n_h, gamma_h)
        + dissipator_cold(rho, occ.n_c, gamma_c)
}

/// Master-equation right-hand side with the frame remainder set to zero.
pub fn lindblad_rhs(
    rho: &Matrix3<Complex64>,
    occ: &Occupations,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
) -> Matrix3<Complex64> {
    lindblad_rhs_in_frame(rho, occ, gamma_c, gamma_h, lambda, 0.0)
}

/// The generator as an 18×18 real matrix acting on
/// `[Re vec(ρ); Im vec(ρ)]` (row-major `vec`), built by applying the
/// right-hand side to every real and imaginary basis component separately, so
/// no linearity or Hermiticity structure is assumed.
pub fn generator_matrix(
    occ: &Occupations,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
    frame_shift: f64,
) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(18, 18);
    for k in 0..9 {
        let (i, j) = (k / 3, k % 3);
        for (offset, unit) in [(0, Complex64::new(1.0, 0.0)), (9, Complex64::i())] {
            let mut e = Matrix3::zeros();
            e[(i, j)] = unit;
            let r = lindblad_rhs_in_frame(&e, occ, gamma_c, gamma_h, lambda, frame_shift);
            for q in 0..9 {
                m[(q, k + offset)] = r[(q / 3, q % 3)].re;
                m[(q + 9, k + offset)] = r[(q / 3, q % 3)].im;
            }
        }
    }
    m
}

/// Brute-force steady state: null space of the full 18-dimensional real
/// generator, returned as the complete density matrix (including the
/// ground-state coherences, which must come out zero).
pub fn liouvillian_steady_state_matrix(
    occ: &Occupations,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
) -> Result<Matrix3<Complex64>> {
    check_rates(gamma_c, gamma_h, lambda)?;
    solve_null_space(occ, gamma_c, gamma_h, lambda, 0.0)
}

/// Null-space oracle projected onto the `SteadyState` components.
pub fn liouvillian_steady_state(
    occ: &Occupations,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
) -> Result<SteadyState> {
    let m = liouvillian_steady_state_matrix(occ, gamma_c, gamma_h, lambda)?;
    Ok(SteadyState {
        p_g: m[(0, 0)].re,
        p_0: m[(1, 1)].re,
        p_1: m[(2, 2)].re,
        rho10: m[(2, 1)],
    })
}

fn solve_null_space(
    occ: &Occupations,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
    frame_shift: f64,
) -> Result<Matrix3<Complex64>> {
    let mut m = generator_matrix(occ, gamma_c, gamma_h, lambda, frame_shift);
    // Row equilibration: preserves the null space exactly and keeps the
    // small-singular-value gap resolvable when rates span many decades.
    for r in 0..18 {
        let s = (0..18).map(|c| m[(r, c)].abs()).fold(0.0, f64::max);
        if s > 0.0 {
            for c in 0..18 {
                m[(r, c)] /= s;
            }
        }
    }
    let svd = m.svd(false, true);
    let v_t = svd.v_t.ok_or(Error::SingularSystem("null-space SVD"))?;
    let sv = &svd.singular_values;
    let s_max = sv.iter().cloned().fold(0.0, f64::max);
    let threshold = 1e-10 * s_max;
    let real_null_dim = sv.iter().filter(|&&s| s < threshold).count();
    // A complex-linear map on R^18 carries its null space in pairs
    // (v and iv), so a unique steady state shows up as exactly two
    // near-zero singular values.
    if real_null_dim != 2 {
        return Err(Error::DegenerateGenerator { real_null_dim });
    }
    let min_index = (0..sv.len())
        .min_by(|&a, &b| sv[a].total_cmp(&sv[b]))
        .expect("non-empty singular values");
    let v = v_t.row(min_index);
    let mut out = Matrix3::zeros();
    for k in 0..9 {
        out[(k / 3, k % 3)] = Complex64::new(v[k], v[9 + k]);
    }
    // Every null vector is a complex multiple z·ρ_ss; dividing by the trace
    // (= z, since ρ_ss has unit trace) recovers ρ_ss itself.
    let tr = out[(0, 0)] + out[(1, 1)] + out[(2, 2)];
    if tr.norm() == 0.0 {
        return Err(Error::SingularSystem("null vector has zero trace"));
    }
    Ok(out.map(|x| x / tr))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Worked closed-form point: n_c = 1, n_h = 1/2, Γc = Γh = λ = 1 gives
    // denominator 103/4 and the rational steady state (56, 27, 20, -2i)/103.
    const P_G: f64 = 56.0 / 103.0;
    const P_0: f64 = 27.0 / 103.0;
    const P_1: f64 = 20.0 / 103.0;
    const Y: f64 = -2.0 / 103.0;

    fn worked_occ() -> Occupations {
        Occupations::new(1.0, 0.5).unwrap()
    }

    #[test]
    fn bose_occupation_matches_direct_evaluation() {
        // 1/(e - 1), evaluated independently of the implementation.
        let expected = 1.0 / (1f64.exp() - 1.0);
        assert!((bose_occupation(1.0, 1.0).unwrap() - expected).abs() < 1e-15);
        assert!((expected - 0.581_977).abs() < 1e-6);
    }

    #[test]
    fn bose_occupation_zero_temperature() {
        assert_eq!(bose_occupation(5.0, 0.0).unwrap(), 0.0);
        // deep quantum regime underflows cleanly rather than erroring
        assert_eq!(bose_occupation(1.0, 1e-12).unwrap(), 0.0);
    }

    #[test]
    fn bose_occupation_classical_limit() {
        let n = bose_occupation(1e-6, 1.0).unwrap();
        let classical = 1.0 / 1e-6 - 0.5;
        assert!((n - classical).abs() / classical < 1e-6);
    }

    #[test]
    fn bose_occupation_rejects_nonpositive_frequency() {
        assert!(bose_occupation(0.0, 1.0).is_err());
        assert!(bose_occupation(-1.0, 1.0).is_err());
        assert!(bose_occupation(1.0, -1.0).is_err());
    }

    #[test]
    fn coherence_closed_form_worked_example() {
        let rho10 = coherence_closed_form(&worked_occ(), 1.0, 1.0, 1.0).unwrap();
        assert_eq!(rho10.re, 0.0);
        assert!((rho10.im - Y).abs() < 1e-16);
        assert!((rho10.im + 0.019_417_5).abs() < 1e-7);
    }

    #[test]
    fn coherence_vanishes_at_equal_occupations() {
        let occ = Occupations::new(0.5, 0.5).unwrap();
        assert_eq!(
            coherence_closed_form(&occ, 2.0, 3.0, 1.5).unwrap(),
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn coherence_scales_away_with_coupling() {
        let occ = worked_occ();
        let tiny = coherence_closed_form(&occ, 1.0, 1.0, 1e-9).unwrap();
        assert!(tiny.im.abs() < 1e-9);
        // numerator is linear in λ, so far below the λ² crossover the
        // coherence scales linearly
        let half = coherence_closed_form(&occ, 1.0, 1.0, 0.5e-9).unwrap();
        assert!((tiny.im / half.im - 2.0).abs() < 1e-6);
    }

    #[test]
    fn steady_state_matches_worked_rationals() {
        let ss = steady_state(&worked_occ(), 1.0, 1.0, 1.0).unwrap();
        assert!((ss.p_g() - P_G).abs() < 1e-14);
        assert!((ss.p_0() - P_0).abs() < 1e-14);
        assert!((ss.p_1() - P_1).abs() < 1e-14);
        assert!((ss.rho10().im - Y).abs() < 1e-14);
        assert_eq!(ss.rho10().re, 0.0);
        assert!((ss.trace() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn steady_state_agrees_with_closed_form_coherence() {
        let occ = Occupations::new(3.7, 0.2).unwrap();
        let ss = steady_state(&occ, 0.3, 2.0, 5.0).unwrap();
        let cf = coherence_closed_form(&occ, 0.3, 2.0, 5.0).unwrap();
        assert!((ss.rho10().im - cf.im).abs() <= 1e-12 * cf.im.abs());
    }

    #[test]
    fn oracle_matches_solver_at_adversarial_corners() {
        // Corners of the draw box where the generator's scales span nine
        // decades; row equilibration keeps the null vector accurate.
        let corners = [
            (100.0, 0.0, 1e3, 1e-3, 1e-3),
            (100.0, 0.0, 1e3, 1e-3, 1e3),
            (0.0, 100.0, 1e-3, 1e3, 1e-3),
            (100.0, 100.0, 1e3, 1e3, 1e-3),
            (1e-3, 0.0, 1e-3, 1e-3, 1e3),
            (50.0, 49.999_999, 1e2, 1e-3, 10.0),
        ];
        for (n_c, n_h, gc, gh, lam) in corners {
            let occ = Occupations::new(n_c, n_h).unwrap();
            let a = steady_state(&occ, gc, gh, lam).unwrap();
            let b = liouvillian_steady_state(&occ, gc, gh, lam).unwrap();
            let err = (a.p_g() - b.p_g())
                .abs()
                .max((a.p_0() - b.p_0()).abs())
                .max((a.p_1() - b.p_1()).abs())
                .max((a.rho10() - b.rho10()).norm());
            assert!(err < 1e-12, "state mismatch {err:.3e} at {n_c} {n_h} {gc} {gh} {lam}");
        }
    }

    #[test]
    fn oracle_ground_coherences_vanish() {
        let occ = Occupations::new(2.0, 0.7).unwrap();
        let m = liouvillian_steady_state_matrix(&occ, 0.8, 1.3, 2.1).unwrap();
        assert!(m[(0, 1)].norm() < 1e-12);
        assert!(m[(0, 2)].norm() < 1e-12);
        assert!(m[(1, 0)].norm() < 1e-12);
        assert!(m[(2, 0)].norm() < 1e-12);
        // Hermitian across the driven doublet, real populations
        assert!((m[(2, 1)] - m[(1, 2)].conj()).norm() < 1e-12);
        for k in 0..3 {
            assert!(m[(k, k)].im.abs() < 1e-13);
            assert!((0.0..=1.0).contains(&m[(k, k)].re));
        }
    }

    #[test]
    fn oracle_zero_temperature_drains_to_ground() {
        let occ = Occupations::new(0.0, 0.0).unwrap();
        let ss = liouvillian_steady_state(&occ, 1.0, 2.0, 0.5).unwrap();
        assert!((ss.p_g() - 1.0).abs() < 1e-12);
        assert!(ss.p_0().abs() < 1e-12);
        assert!(ss.p_1().abs() < 1e-12);
        assert!(ss.rho10().norm() < 1e-12);
    }

    #[test]
    fn steady_state_independent_of_frame_remainder() {
        let occ = worked_occ();
        let a = solve_null_space(&occ, 1.0, 1.0, 1.0, 0.0).unwrap();
        let b = solve_null_space(&occ, 1.0, 1.0, 1.0, 2.7).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((a[(i, j)] - b[(i, j)]).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn bath_spec_derived_ratios() {
        let b = BathSpec::new(1.0, 2.0, 0.5, 1.5).unwrap();
        assert_eq!(b.tau(), 0.5);
        assert_eq!(b.zeta_c(), 1.0);
        assert_eq!(b.gamma_ratio(), 3.0);
        assert!(BathSpec::new(2.0, 1.0, 1.0, 1.0).is_err());
        assert!(BathSpec::new(1.0, 1.0, 1.0, 1.0).is_err());
        assert!(BathSpec::new(1.0, 2.0, -1.0, 1.0).is_err());
    }

    #[test]
    fn drive_spec_validation() {
        assert!(DriveSpec::new(2.0, 1.0, 1.0).is_err());
        assert!(DriveSpec::new(1.0, 2.0, 0.0).is_err());
        let d = DriveSpec::new(1.0, 2.5, 0.3).unwrap();
        assert_eq!(d.field_frequency(), 1.5);
    }

    #[test]
    fn parameters_outside_sanity_bounds_rejected() {
        let occ = worked_occ();
        assert!(steady_state(&occ, 1e13, 1.0, 1.0).is_err());
        assert!(steady_state(&occ, 1.0, 0.0, 1.0).is_err());
        assert!(Occupations::new(-0.1, 1.0).is_err());
        assert!(Occupations::new(f64::NAN, 1.0).is_err());
    }
}
