//! Fluxes and figures of merit built on the steady state.
//!
//! Every quantity is proportional to the cycle flux `J = iλ(ρ₁₀ − ρ₀₁)`:
//! input power `P = (ωh − ωc)·J`, cooling power `Q̇c = ωc·J`, rejected heat
//! `Q̇h = ωh·J`, so the first law `Q̇h = Q̇c + P` and the tight-coupling COP
//! `ζ = Q̇c/P = ωc/(ωh − ωc)` hold identically.
//!
//! The sign convention keeps `P` and `Q̇c` simultaneously positive in the
//! refrigeration window `n_c > n_h` — the one choice consistent with
//! `ζ = Q̇c/P > 0` (the flux expressions are also quoted with the opposite
//! overall sign, which would make both negative while cooling).
//!
//! Parameter-level closed forms ([`cooling_power_closed_form`],
//! [`omega_closed_form`]) evaluate the same quantities directly from raw
//! parameters, bypassing the steady-state solve, so the two routes can be
//! compared in tests and verification suites.

use crate::error::{Error, Result};
use crate::model::{
    self, BathSpec, DriveSpec, Occupations, SteadyState,
};

/// All figures of merit at one operating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metrics {
    /// Input power `P`.
    pub power: f64,
    /// Cooling power `Q̇c` (heat current out of the cold reservoir).
    pub qc_dot: f64,
    /// Rejected heat flux `Q̇h` into the hot reservoir.
    pub qh_dot: f64,
    /// Coefficient of performance `ζ = ωc/(ωh − ωc)`.
    pub cop: f64,
    /// Trade-off objective `Ω = 2Q̇c − ζ_C·P`.
    pub omega: f64,
    /// Trade-off objective `χ = ζ·Q̇c`.
    pub chi: f64,
}

/// Steady-state cycle flux `J = iλ(ρ₁₀ − ρ₀₁) = −2λ·Im ρ₁₀`.
pub fn cycle_flux(ss: &SteadyState, lambda: f64) -> f64 {
    -2.0 * lambda * ss.rho10().im
}

/// Input power `P = iλ(ωh − ωc)(ρ₁₀ − ρ₀₁)`.
pub fn input_power(ss: &SteadyState, drive: &DriveSpec) -> f64 {
    drive.field_frequency() * cycle_flux(ss, drive.lambda())
}

/// Cooling power `Q̇c = iλωc(ρ₁₀ − ρ₀₁)`.
pub fn cooling_power(ss: &SteadyState, drive: &DriveSpec) -> f64 {
    drive.omega_c() * cycle_flux(ss, drive.lambda())
}

/// Rejected heat flux `Q̇h = ωh·J = −Tr(𝓛_h[ρ]H₀)`, positive when heat flows
/// into the hot reservoir.
pub fn hot_flux(ss: &SteadyState, drive: &DriveSpec) -> f64 {
    drive.omega_h() * cycle_flux(ss, drive.lambda())
}

/// Tight-coupling COP `ζ = ωc/(ωh − ωc)`.
pub fn cop(omega_c: f64, omega_h: f64) -> Result<f64> {
    model::check_bounded("omega_c", omega_c)?;
    model::check_bounded("omega_h", omega_h)?;
    if omega_h <= omega_c {
        return Err(Error::InvalidParameter {
            name: "omega_h",
            value: omega_h,
            constraint: "strictly above omega_c",
        });
    }
    Ok(omega_c / (omega_h - omega_c))
}

/// `Ω = 2Q̇c − ζ_C·P` from the steady state.
pub fn omega_function(ss: &SteadyState, baths: &BathSpec, drive: &DriveSpec) -> f64 {
    2.0 * cooling_power(ss, drive) - baths.zeta_c() * input_power(ss, drive)
}

/// `χ = ζ·Q̇c` from the steady state.
pub fn chi_function(ss: &SteadyState, drive: &DriveSpec) -> f64 {
    let zeta = drive.omega_c() / (drive.omega_h() - drive.omega_c());
    zeta * cooling_power(ss, drive)
}

/// All metrics for explicit occupations.
pub fn metrics(occ: &Occupations, baths: &BathSpec, drive: &DriveSpec) -> Result<Metrics> {
    let ss = model::steady_state(occ, baths.gamma_c(), baths.gamma_h(), drive.lambda())?;
    Ok(Metrics {
        power: input_power(&ss, drive),
        qc_dot: cooling_power(&ss, drive),
        qh_dot: hot_flux(&ss, drive),
        cop: drive.omega_c() / (drive.omega_h() - drive.omega_c()),
        omega: omega_function(&ss, baths, drive),
        chi: chi_function(&ss, drive),
    })
}

/// All metrics with thermal (Bose) occupations at the transition frequencies.
pub fn metrics_thermal(baths: &BathSpec, drive: &DriveSpec) -> Result<Metrics> {
    let occ = Occupations::thermal(baths, drive)?;
    metrics(&occ, baths, drive)
}

/// Closed-form cooling power
/// `Q̇c = 2λ²ΓcΓh(n_c − n_h)ωc / D`, evaluated from raw parameters.
pub fn cooling_power_closed_form(
    occ: &Occupations,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
    omega_c: f64,
) -> Result<f64> {
    model::check_bounded("omega_c", omega_c)?;
    Ok(omega_c * flux_closed_form(occ, gamma_c, gamma_h, lambda)?)
}

/// Closed-form trade-off objective
/// `Ω = 2λ²ΓcΓh(n_c − n_h)[(2 + ζ_C)ωc − ζ_C·ωh] / D`, evaluated from raw
/// parameters.
pub fn omega_closed_form(
    occ: &Occupations,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
    omega_c: f64,
    omega_h: f64,
    zeta_c: f64,
) -> Result<f64> {
    model::check_bounded("omega_c", omega_c)?;
    model::check_bounded("omega_h", omega_h)?;
    model::check_bounded("zeta_c", zeta_c)?;
    let bracket = (2.0 + zeta_c) * omega_c - zeta_c * omega_h;
    Ok(bracket * flux_closed_form(occ, gamma_c, gamma_h, lambda)?)
}

/// Closed-form `χ = ζ·Q̇c` from raw parameters.
pub fn chi_closed_form(
    occ: &Occupations,
    gamma_c: f64,
    gamma_h: f64,
    lambda: f64,
    omega_c: f64,
    omega_h: f64,
) -> Result<f64> {
    let zeta = cop(omega_c, omega_h)?;
    Ok(zeta * cooling_power_closed_form(occ, gamma_c, gamma_h, lambda, omega_c)?)
}

fn flux_closed_form(occ: &Occupations, gamma_c: f64, gamma_h: f64, lambda: f64) -> Result<f64> {
    model::check_bounded("gamma_c", gamma_c)?;
    model::check_bounded("gamma_h", gamma_h)?;
    model::check_bounded("lambda", lambda)?;
    let den = model::closed_form_denominator(occ.n_c(), occ.n_h(), gamma_c, gamma_h, lambda);
    Ok(2.0 * lambda * lambda * gamma_c * gamma_h * (occ.n_c() - occ.n_h()) / den)
}
