//! Closed-form optima, COP bound families, series expansions, and
//! cooling-power ratios, all as directly evaluable functions of the Carnot
//! COP `ζ_C` (or of `τ`, `γ`).
//!
//! Conventions: `s(ζ) = √(3 + ζ(3 + ζ))` appears in both weak-coupling
//! bounds; the MOF (maximum-Ω-function) bound family is ordered
//! `ζ_-- ≤ ζ_- ≤ ζ_YC ≤ ζ_+ ≤ ζ_++ < ζ_C`.

use crate::error::{Error, Result};

fn check_zeta_c(zeta_c: f64) -> Result<()> {
    if zeta_c.is_finite() && zeta_c > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "zeta_c",
            value: zeta_c,
            constraint: "finite and positive",
        })
    }
}

fn check_tau(tau: f64) -> Result<()> {
    if tau.is_finite() && tau > 0.0 && tau < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "tau",
            value: tau,
            constraint: "inside (0, 1)",
        })
    }
}

/// `k(ζ_C) = ln[(1 + ζ_C)/(2 + ζ_C)]`, the logarithm entering the
/// low-temperature optimum (always negative). Evaluated as
/// `−ln(1 + 1/(1 + ζ_C))` to keep full relative precision at large `ζ_C`,
/// where the direct ratio collapses onto 1.
fn low_t_log(zeta_c: f64) -> f64 {
    -(1.0 / (1.0 + zeta_c)).ln_1p()
}

/// COP at the two-parameter low-temperature optimum:
/// `ζ_SSD = ζ_C·[1 − (1 + ζ_C)k] / [1 − 2(1 + ζ_C)k]`.
pub fn cop_ssd_low_t(zeta_c: f64) -> Result<f64> {
    check_zeta_c(zeta_c)?;
    let k = low_t_log(zeta_c);
    Ok(zeta_c * (1.0 - (1.0 + zeta_c) * k) / (1.0 - 2.0 * (1.0 + zeta_c) * k))
}

/// Optimal frequencies of the low-temperature two-parameter optimization:
/// `ωc* = [1 − (1 + ζ_C)k]·Tc`,
/// `ωh* = (1 + ζ_C)[1 − (2 + ζ_C)k]·Tc/ζ_C`.
pub fn low_t_optimal_frequencies(zeta_c: f64, t_c: f64) -> Result<(f64, f64)> {
    check_zeta_c(zeta_c)?;
    crate::model::check_bounded("t_c", t_c)?;
    let k = low_t_log(zeta_c);
    let wc = (1.0 - (1.0 + zeta_c) * k) * t_c;
    let wh = (1.0 + zeta_c) * (1.0 - (2.0 + zeta_c) * k) * t_c / zeta_c;
    Ok((wc, wh))
}

/// COP of the minimally nonlinear irreversible comparison model,
/// `ζ_MNI = (3 + 4ζ_C)ζ_C/(4 + 6ζ_C)` (final formula only).
pub fn cop_mni(zeta_c: f64) -> Result<f64> {
    check_zeta_c(zeta_c)?;
    Ok((3.0 + 4.0 * zeta_c) * zeta_c / (4.0 + 6.0 * zeta_c))
}

/// COP at maximum Ω for the high-temperature strong-coupling one-parameter
/// optimization over `ωc` (fixed `ωh`), as a function of `τ` and `γ`:
///
/// `ζ = τ(2 − τ − S) / [γ(τ − 2) − τ(2 − τ − S)]`,
/// `S = √((1 + γ)(2 − τ)(2 + γ − τ))`,
///
/// evaluated as `ζ = w/(1 − w)` with the rationalized optimum fraction `w`
/// of [`optimal_wc_strong`], which is the same expression with the
/// cancellation-prone difference `2 − τ − S` eliminated.
pub fn cop_mof_strong(tau: f64, gamma: f64) -> Result<f64> {
    let w = optimal_wc_strong(tau, gamma, 1.0)?;
    Ok(w / (1.0 - w))
}

/// Optimal `ωc` of the strong-coupling Ω at fixed `ωh`:
/// `ωc* = τ(2 − τ − S)·ωh / [γ(τ − 2)]`.
///
/// Since `2 − τ − S = −γ(2 − τ)(3 + γ − τ)/(2 − τ + S)` exactly, the factor
/// `γ(τ − 2)` cancels and the implementation evaluates the identical but
/// cancellation-free form `ωc* = τ(3 + γ − τ)·ωh/(2 − τ + S)`, which stays
/// fully accurate in both dissipation limits.
pub fn optimal_wc_strong(tau: f64, gamma: f64, omega_h: f64) -> Result<f64> {
    check_tau(tau)?;
    crate::model::check_bounded("gamma", gamma)?;
    crate::model::check_bounded("omega_h", omega_h)?;
    let s = ((1.0 + gamma) * (2.0 - tau) * (2.0 + gamma - tau)).sqrt();
    Ok(tau * (3.0 + gamma - tau) * omega_h / (2.0 - tau + s))
}

/// Extreme-dissipation limits of `ωc*`:
/// `ωc*(γ→∞) = ζ_C·ωh/√((1 + ζ_C)(2 + ζ_C))`,
/// `ωc*(γ→0) = ζ_C(3 + 2ζ_C)·ωh / [2(1 + ζ_C)(2 + ζ_C)]`.
///
/// These are the forms consistent with the bound family and with the
/// cooling power at maximum Ω; both are confirmed against the finite-γ
/// optimum in the tests.
pub fn optimal_wc_strong_limits(zeta_c: f64, omega_h: f64) -> Result<(f64, f64)> {
    check_zeta_c(zeta_c)?;
    crate::model::check_bounded("omega_h", omega_h)?;
    let inf = zeta_c * omega_h / ((1.0 + zeta_c) * (2.0 + zeta_c)).sqrt();
    let zero = zeta_c * (3.0 + 2.0 * zeta_c) * omega_h / (2.0 * (1.0 + zeta_c) * (2.0 + zeta_c));
    Ok((inf, zero))
}

/// The five COP bounds at maximum Ω.
///
/// Which dissipation limit lands on which bound (established numerically by
/// the optimizer, since the derivations leave it implicit): in every window
/// the γ → ∞ limit is the lower endpoint and γ → 0 the upper one.
///
/// | optimization  | coupling | γ → ∞  | γ → 0  |
/// |---------------|----------|--------|--------|
/// | over ωc       | strong   | ζ_YC   | ζ_+    |
/// | over ωh       | strong   | ζ_-    | ζ_YC   |
/// | over ωc       | weak     | ζ_+    | ζ_++   |
/// | over ωh       | weak     | ζ_--   | ζ_-    |
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundFamily {
    /// `ζ_--`: weak coupling, `ωh`-optimization, γ → ∞.
    pub zeta_mm: f64,
    /// `ζ_- = 2ζ_C/3`: strong coupling γ → ∞ or weak coupling γ → 0 under
    /// the `ωh`-optimization.
    pub zeta_m: f64,
    /// `ζ_YC = ζ_C/(√((2 + ζ_C)(1 + ζ_C)) − ζ_C)`: shared endpoint of both
    /// strong-coupling windows.
    pub zeta_yc: f64,
    /// `ζ_+ = (3 + 2ζ_C)ζ_C/(4 + 3ζ_C)`: strong coupling γ → 0 or weak
    /// coupling γ → ∞ under the `ωc`-optimization.
    pub zeta_p: f64,
    /// `ζ_++`: weak coupling, `ωc`-optimization, γ → 0.
    pub zeta_pp: f64,
}

/// `ζ_-- = ζ_C[ζ_C − 3 + s]/(3ζ_C − 2)`, with the removable 0/0 point at
/// `ζ_C = 2/3` handled by switching to the algebraically identical regular
/// form `3ζ_C/(3 − ζ_C + s)` inside a guard window (value 3/7 at the point).
pub fn zeta_minus_minus(zeta_c: f64) -> f64 {
    let s = (3.0 + zeta_c * (3.0 + zeta_c)).sqrt();
    if (zeta_c - 2.0 / 3.0).abs() < 1e-6 {
        3.0 * zeta_c / (3.0 - zeta_c + s)
    } else {
        zeta_c * (zeta_c - 3.0 + s) / (3.0 * zeta_c - 2.0)
    }
}

/// `ζ_++ = ζ_C[3 + ζ_C + s]/[3(2 + ζ_C)]`.
pub fn zeta_plus_plus(zeta_c: f64) -> f64 {
    let s = (3.0 + zeta_c * (3.0 + zeta_c)).sqrt();
    zeta_c * (3.0 + zeta_c + s) / (3.0 * (2.0 + zeta_c))
}

/// All five MOF bounds at one `ζ_C`.
///
/// `ζ_YC = ζ_C/(√((2 + ζ_C)(1 + ζ_C)) − ζ_C)` is rationalized to
/// `ζ_C(√((2 + ζ_C)(1 + ζ_C)) + ζ_C)/(2 + 3ζ_C)`, which avoids the
/// root-minus-argument cancellation at large `ζ_C`.
pub fn bound_functions(zeta_c: f64) -> Result<BoundFamily> {
    check_zeta_c(zeta_c)?;
    let root = ((2.0 + zeta_c) * (1.0 + zeta_c)).sqrt();
    Ok(BoundFamily {
        zeta_mm: zeta_minus_minus(zeta_c),
        zeta_m: 2.0 * zeta_c / 3.0,
        zeta_yc: zeta_c * (root + zeta_c) / (2.0 + 3.0 * zeta_c),
        zeta_p: (3.0 + 2.0 * zeta_c) * zeta_c / (4.0 + 3.0 * zeta_c),
        zeta_pp: zeta_plus_plus(zeta_c),
    })
}

/// χ-criterion COP benchmarks `(ζ_CA, ζχ_+, ζχ_++)`:
/// `ζ_CA = √(1 + ζ_C) − 1`, `ζχ_+ = (√(9 + 8ζ_C) − 3)/2`,
/// `ζχ_++ = √(4 + 3ζ_C) − 2`.
pub fn chi_cop_functions(zeta_c: f64) -> Result<(f64, f64, f64)> {
    check_zeta_c(zeta_c)?;
    Ok((
        (1.0 + zeta_c).sqrt() - 1.0,
        ((9.0 + 8.0 * zeta_c).sqrt() - 3.0) / 2.0,
        (4.0 + 3.0 * zeta_c).sqrt() - 2.0,
    ))
}

/// Ratios of the cooling power at maximum Ω to the maximum cooling power,
/// `(R_{γ→∞}, R_{γ→0})`.
///
/// `R_{γ→∞} = 1 − √((1 + ζ_C)/(2 + ζ_C))` is evaluated in the
/// cancellation-free form `1/(√(2 + ζ_C)(√(1 + ζ_C) + √(2 + ζ_C)))`;
/// `R_{γ→0} = (3 + 2ζ_C)/(2 + ζ_C)²`.
pub fn cp_ratios(zeta_c: f64) -> Result<(f64, f64)> {
    check_zeta_c(zeta_c)?;
    let r_inf =
        1.0 / ((2.0 + zeta_c).sqrt() * ((1.0 + zeta_c).sqrt() + (2.0 + zeta_c).sqrt()));
    let r_zero = (3.0 + 2.0 * zeta_c) / ((2.0 + zeta_c) * (2.0 + zeta_c));
    Ok((r_inf, r_zero))
}

/// Cooling power at maximum Ω in the two dissipation limits, scaled by
/// `ħΓc·ωh` and `ħΓh·ωh` respectively:
///
/// `Q̇cᴼ(γ→∞)/(Γc·ωh) = (2/3)[ζ_C/(1 + ζ_C) − ζ_C/√((1 + ζ_C)(2 + ζ_C))]`,
/// `Q̇cᴼ(γ→0)/(Γh·ωh) = (1/6)·ζ_C(3 + 2ζ_C)/[(1 + ζ_C)(2 + ζ_C)²]`.
pub fn cp_at_mof(zeta_c: f64) -> Result<(f64, f64)> {
    check_zeta_c(zeta_c)?;
    let inf = 2.0 / 3.0
        * (zeta_c / (1.0 + zeta_c) - zeta_c / ((1.0 + zeta_c) * (2.0 + zeta_c)).sqrt());
    let zero = zeta_c * (3.0 + 2.0 * zeta_c)
        / (6.0 * (1.0 + zeta_c) * (2.0 + zeta_c) * (2.0 + zeta_c));
    Ok((inf, zero))
}

/// Maximum cooling power in the two dissipation limits, same scaling:
/// `Q̇c*(γ→∞)/(Γc·ωh) = (2/3)·ζ_C/(1 + ζ_C)`,
/// `Q̇c*(γ→0)/(Γh·ωh) = (1/6)·ζ_C/(1 + ζ_C)`.
pub fn optimal_cp(zeta_c: f64) -> Result<(f64, f64)> {
    check_zeta_c(zeta_c)?;
    let frac = zeta_c / (1.0 + zeta_c);
    Ok((2.0 / 3.0 * frac, frac / 6.0))
}

/// Identifier of a COP whose near-equilibrium series is tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesName {
    Ssd,
    Yc,
    Mni,
    Minus,
    MinusMinus,
    Plus,
    PlusPlus,
    CaChi,
    PlusChi,
    PlusPlusChi,
}

impl SeriesName {
    pub const ALL: [SeriesName; 10] = [
        SeriesName::Ssd,
        SeriesName::Yc,
        SeriesName::Mni,
        SeriesName::Minus,
        SeriesName::MinusMinus,
        SeriesName::Plus,
        SeriesName::PlusPlus,
        SeriesName::CaChi,
        SeriesName::PlusChi,
        SeriesName::PlusPlusChi,
    ];

    /// χ-family series run in powers of `√ζ_C`; Ω-family in powers of `ζ_C`.
    pub fn is_chi_family(&self) -> bool {
        matches!(
            self,
            SeriesName::CaChi | SeriesName::PlusChi | SeriesName::PlusPlusChi
        )
    }

    pub fn label(&self) -> &'static str {
        match self {
            SeriesName::Ssd => "zeta_SSD",
            SeriesName::Yc => "zeta_YC",
            SeriesName::Mni => "zeta_MNI",
            SeriesName::Minus => "zeta_minus",
            SeriesName::MinusMinus => "zeta_minusminus",
            SeriesName::Plus => "zeta_plus",
            SeriesName::PlusPlus => "zeta_plusplus",
            SeriesName::CaChi => "zeta_CA_chi",
            SeriesName::PlusChi => "zeta_plus_chi",
            SeriesName::PlusPlusChi => "zeta_plusplus_chi",
        }
    }

    /// The closed form whose expansion the stored coefficients describe.
    pub fn evaluate(&self, zeta_c: f64) -> Result<f64> {
        check_zeta_c(zeta_c)?;
        Ok(match self {
            SeriesName::Ssd => cop_ssd_low_t(zeta_c)?,
            SeriesName::Yc => bound_functions(zeta_c)?.zeta_yc,
            SeriesName::Mni => cop_mni(zeta_c)?,
            SeriesName::Minus => 2.0 * zeta_c / 3.0,
            SeriesName::MinusMinus => zeta_minus_minus(zeta_c),
            SeriesName::Plus => bound_functions(zeta_c)?.zeta_p,
            SeriesName::PlusPlus => zeta_plus_plus(zeta_c),
            SeriesName::CaChi => chi_cop_functions(zeta_c)?.0,
            SeriesName::PlusChi => chi_cop_functions(zeta_c)?.1,
            SeriesName::PlusPlusChi => chi_cop_functions(zeta_c)?.2,
        })
    }
}

impl std::str::FromStr for SeriesName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "SSD" | "ssd" => Ok(SeriesName::Ssd),
            "YC" | "yc" => Ok(SeriesName::Yc),
            "MNI" | "mni" => Ok(SeriesName::Mni),
            "minus" => Ok(SeriesName::Minus),
            "minusminus" => Ok(SeriesName::MinusMinus),
            "plus" => Ok(SeriesName::Plus),
            "plusplus" => Ok(SeriesName::PlusPlus),
            "CA_chi" | "ca_chi" => Ok(SeriesName::CaChi),
            "plus_chi" => Ok(SeriesName::PlusChi),
            "plusplus_chi" => Ok(SeriesName::PlusPlusChi),
            other => Err(format!("unknown series name `{other}`")),
        }
    }
}

/// Coefficients of a three-term near-equilibrium expansion:
/// `a·ζ_C + b + c/ζ_C` for the Ω family, `a·√ζ_C + b + c/√ζ_C` for the
/// χ family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Stored reference coefficients. Ω-family `b` terms are `n/18` and `c`
/// terms `n/216` for small integers `n`; the arithmetic-progression
/// structure across the bound family is asserted on those integers in the
/// tests.
pub fn series_reference(name: SeriesName) -> SeriesCoefficients {
    let (a, b, c) = match name {
        SeriesName::Ssd => (2.0 / 3.0, 1.0 / 18.0, -16.0 / 216.0),
        SeriesName::Yc => (2.0 / 3.0, 1.0 / 18.0, -17.0 / 216.0),
        SeriesName::Mni => (2.0 / 3.0, 1.0 / 18.0, -8.0 / 216.0),
        SeriesName::Minus => (2.0 / 3.0, 0.0, 0.0),
        SeriesName::MinusMinus => (2.0 / 3.0, -1.0 / 18.0, 19.0 / 216.0),
        SeriesName::Plus => (2.0 / 3.0, 2.0 / 18.0, -32.0 / 216.0),
        SeriesName::PlusPlus => (2.0 / 3.0, 3.0 / 18.0, -45.0 / 216.0),
        SeriesName::CaChi => (1.0, -1.0, 0.5),
        SeriesName::PlusChi => (std::f64::consts::SQRT_2, -1.5, 9.0 / (8.0 * std::f64::consts::SQRT_2)),
        SeriesName::PlusPlusChi => (3f64.sqrt(), -2.0, 2.0 / 3f64.sqrt()),
    };
    SeriesCoefficients { a, b, c }
}

/// Efficiency-at-maximum-Ω series of the companion engine setting, stored as
/// display text only; the artifact never computes them.
pub fn efficiency_at_mof_reference() -> [(&'static str, &'static str); 5] {
    [
        ("eta_minusminus", "3/4·ηC − 1/32·ηC² − 3/128·ηC³"),
        ("eta_minus", "3/4·ηC"),
        ("eta_YC", "3/4·ηC + 1/32·ηC² + 3/128·ηC³"),
        ("eta_plus", "3/4·ηC + 2/32·ηC² + 3/64·ηC³"),
        ("eta_plusplus", "3/4·ηC + 3/32·ηC² + 9/128·ηC³"),
    ]
}
