//! The seven verification suites behind `qtr verify`. Each returns a
//! [`VerificationReport`]; the suites are independent and any subset can run
//! on its own.

use anyhow::{bail, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qtr_core::analytic::{
    self, bound_functions, chi_cop_functions, cop_mof_strong, cop_ssd_low_t, cp_at_mof, cp_ratios,
    low_t_optimal_frequencies, optimal_wc_strong_limits, series_reference, SeriesName,
};
use qtr_core::exec;
use qtr_core::model::{
    coherence_closed_form, liouvillian_steady_state_matrix, steady_state, BathSpec, DriveSpec,
    Occupations,
};
use qtr_core::optimize::{fit_asymptotic_series, maximize_box, maximize_scalar, SeriesBasis};
use qtr_core::regimes::{
    cooling_high_t_strong, omega_high_t_strong, omega_high_t_weak, omega_low_temperature,
    RegimeTag,
};
use qtr_core::thermo;

use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    LowT,
    BoundsStrong,
    BoundsWeak,
    Series,
    CpRatios,
    ChiCompare,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Oracle,
        Suite::LowT,
        Suite::BoundsStrong,
        Suite::BoundsWeak,
        Suite::Series,
        Suite::CpRatios,
        Suite::ChiCompare,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::LowT => "low_t",
            Suite::BoundsStrong => "bounds_strong",
            Suite::BoundsWeak => "bounds_weak",
            Suite::Series => "series",
            Suite::CpRatios => "cp_ratios",
            Suite::ChiCompare => "chi_compare",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .find(|v| v.name() == s)
            .copied()
            .ok_or_else(|| {
                anyhow::anyhow!(
                    "unknown suite `{s}` (expected one of {})",
                    Suite::ALL.map(|v| v.name()).join(", ")
                )
            })
    }
}

/// Run one suite. `tol` overrides the suite's headline tolerance (the
/// defaults are 1e-9 for oracle equivalence, 1e-6 for optimizer-vs-closed
/// form, 1e-4 for series coefficients); `seed` feeds the randomized draws of
/// the oracle suite.
pub fn run_suite(suite: Suite, tol: Option<f64>, seed: u64) -> Result<VerificationReport> {
    if let Some(t) = tol {
        if !(t.is_finite() && t > 0.0) {
            bail!("--tol must be positive and finite (got {t})");
        }
    }
    Ok(match suite {
        Suite::Oracle => oracle(tol.unwrap_or(1e-9), seed),
        Suite::LowT => low_t(tol.unwrap_or(1e-6)),
        Suite::BoundsStrong => bounds_strong(tol.unwrap_or(1e-6)),
        Suite::BoundsWeak => bounds_weak(tol.unwrap_or(1e-6)),
        Suite::Series => series(tol.unwrap_or(1e-4)),
        Suite::CpRatios => cp_ratio_suite(tol.unwrap_or(1e-6)),
        Suite::ChiCompare => chi_compare(),
    })
}

const ORACLE_DRAWS: usize = 1000;

fn oracle(tol: f64, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<(f64, f64, f64, f64, f64)> = (0..ORACLE_DRAWS)
        .map(|_| {
            (
                rng.random_range(0.0..100.0),
                rng.random_range(0.0..100.0),
                10f64.powf(rng.random_range(-3.0..3.0)),
                10f64.powf(rng.random_range(-3.0..3.0)),
                10f64.powf(rng.random_range(-3.0..3.0)),
            )
        })
        .collect();

    // (state error, first-law violation, ground-coherence magnitude)
    let per_draw = exec::par_map(&draws, |&(n_c, n_h, gc, gh, lam)| {
        let occ = Occupations::new(n_c, n_h).unwrap();
        let solve = steady_state(&occ, gc, gh, lam).unwrap();
        let full = liouvillian_steady_state_matrix(&occ, gc, gh, lam).unwrap();
        let closed = coherence_closed_form(&occ, gc, gh, lam).unwrap();
        let state_err = (solve.p_g() - full[(0, 0)].re)
            .abs()
            .max((solve.p_0() - full[(1, 1)].re).abs())
            .max((solve.p_1() - full[(2, 2)].re).abs())
            .max((solve.rho10() - full[(2, 1)]).norm())
            .max((solve.rho10() - closed).norm());
        let drive = DriveSpec::new(1.0, 2.0, lam).unwrap();
        let qh = thermo::hot_flux(&solve, &drive);
        let qc = thermo::cooling_power(&solve, &drive);
        let p = thermo::input_power(&solve, &drive);
        let first_law = if qh == 0.0 {
            0.0
        } else {
            (qh - qc - p).abs() / qh.abs()
        };
        let ground_coherence = full[(0, 1)]
            .norm()
            .max(full[(0, 2)].norm())
            .max(full[(1, 0)].norm())
            .max(full[(2, 0)].norm());
        (state_err, first_law, ground_coherence)
    });

    let fold = |i: usize| per_draw.iter().map(|t| [t.0, t.1, t.2][i]).fold(0.0, f64::max);
    let mut r = VerificationReport::new("oracle", Some(seed));
    r.push(
        "oracle.1",
        &format!("closed form + linear solve vs null-space oracle, {ORACLE_DRAWS} draws"),
        fold(0),
        0.0,
        tol,
    );
    r.push("oracle.2", "first law |Qh - Qc - P| / Qh", fold(1), 0.0, 1e-12);
    r.push(
        "oracle.3",
        "ground-state coherences vanish in steady state",
        fold(2),
        0.0,
        1e-12,
    );
    r
}

fn low_t(cop_tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("low_t", None);
    for zeta_c in [0.2, 1.0, 5.0] {
        let t_c = 1.0;
        let baths = BathSpec::new(t_c, t_c * (1.0 + zeta_c) / zeta_c, 1.0, 1.0).unwrap();
        let opt = maximize_box(
            |wc, wh| omega_low_temperature(wc, wh, &baths, 1.0),
            [0.05, 0.05],
            [6.0, 30.0],
            1e-9,
        )
        .unwrap();
        let (wc_star, wh_star) = low_t_optimal_frequencies(zeta_c, t_c).unwrap();
        let cop_numeric = opt.argmax[0] / (opt.argmax[1] - opt.argmax[0]);
        let id = format!("low_t[{zeta_c}]");
        r.push(&format!("{id}.wc"), "optimal cold frequency", opt.argmax[0], wc_star, 1e-5);
        r.push(&format!("{id}.wh"), "optimal hot frequency", opt.argmax[1], wh_star, 1e-5);
        r.push(
            &format!("{id}.cop"),
            "COP at the two-parameter optimum",
            cop_numeric,
            cop_ssd_low_t(zeta_c).unwrap(),
            cop_tol.min(1e-6),
        );
    }
    // Informational (always passes): the low-temperature approximation puts
    // its own optimum at ωc* ≈ 1.8·Tc, not deep inside ω ≫ T, so the COP at
    // the optimum of the full closed form (true Bose occupations) deviates
    // from the approximated one. The deviation is reported, not asserted.
    let baths = BathSpec::new(1.0, 2.0, 1.0, 1.0).unwrap();
    let full = maximize_box(
        |wc, wh| {
            qtr_core::regimes::omega_at(RegimeTag::Full, wc, wh, &baths, 1.0)
                .unwrap_or(f64::NEG_INFINITY)
        },
        [0.05, 0.05],
        [6.0, 30.0],
        1e-9,
    )
    .unwrap();
    let cop_full = full.argmax[0] / (full.argmax[1] - full.argmax[0]);
    r.push(
        "low_t.full_model_gap",
        "informational: |COP(full-model optimum) - COP(low-T optimum)| at zeta_C = 1",
        (cop_full - cop_ssd_low_t(1.0).unwrap()).abs(),
        0.0,
        f64::INFINITY,
    );
    r
}

fn gamma_grid() -> Vec<f64> {
    (0..25)
        .map(|i| 10f64.powf(-6.0 + 12.0 * i as f64 / 24.0))
        .collect()
}

fn bounds_strong(closed_tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("bounds_strong", None);
    for tau in [0.2, 0.5, 0.8] {
        let zeta_c = tau / (1.0 - tau);
        let b = bound_functions(zeta_c).unwrap();
        for over_wh in [false, true] {
            let cops: Vec<f64> = gamma_grid()
                .into_iter()
                .map(|gamma| {
                    let baths = BathSpec::new(tau, 1.0, 1.0, gamma).unwrap();
                    if over_wh {
                        let upper = 4.0 + 3.0 / zeta_c;
                        let opt = maximize_scalar(
                            |wh| omega_high_t_strong(1.0, wh, &baths),
                            1.0 + 1e-9,
                            upper,
                            1e-12,
                        )
                        .unwrap();
                        1.0 / (opt.argmax[0] - 1.0)
                    } else {
                        let opt = maximize_scalar(
                            |wc| omega_high_t_strong(wc, 1.0, &baths),
                            1e-9,
                            1.0 - 1e-9,
                            1e-12,
                        )
                        .unwrap();
                        opt.argmax[0] / (1.0 - opt.argmax[0])
                    }
                })
                .collect();
            let (lower, upper_bound) = if over_wh {
                (b.zeta_m, b.zeta_yc)
            } else {
                (b.zeta_yc, b.zeta_p)
            };
            let window_violation = cops
                .iter()
                .map(|&c| (lower - c).max(c - upper_bound).max(0.0))
                .fold(0.0, f64::max);
            let monotone_violation = cops
                .windows(2)
                .map(|w| (w[1] - w[0]).max(0.0))
                .fold(0.0, f64::max);
            let id = format!("strong[tau={tau},{}]", if over_wh { "wh" } else { "wc" });
            r.push(
                &format!("{id}.window"),
                "COP inside the bound window",
                window_violation,
                0.0,
                1e-9,
            );
            r.push(
                &format!("{id}.monotone"),
                "COP nonincreasing in gamma",
                monotone_violation,
                0.0,
                1e-9,
            );
            r.push(
                &format!("{id}.lo_end"),
                "gamma -> 0 endpoint at the upper bound",
                cops[0],
                upper_bound,
                1e-3,
            );
            r.push(
                &format!("{id}.hi_end"),
                "gamma -> inf endpoint at the lower bound",
                *cops.last().unwrap(),
                lower,
                1e-3,
            );
            if !over_wh {
                // the ωc-optimization also has a closed-form COP to compare to
                let closed_gap = gamma_grid()
                    .into_iter()
                    .zip(&cops)
                    .map(|(gamma, &c)| (c - cop_mof_strong(tau, gamma).unwrap()).abs())
                    .fold(0.0, f64::max);
                r.push(
                    &format!("{id}.closed_form"),
                    "numeric optimum matches the closed-form COP",
                    closed_gap,
                    0.0,
                    closed_tol,
                );
            }
        }
    }
    r
}

fn bounds_weak(tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("bounds_weak", None);
    for zeta_c in [0.5, 1.0, 5.0] {
        let tau = zeta_c / (1.0 + zeta_c);
        let baths = BathSpec::new(tau, 1.0, 1.0, 1.0).unwrap();
        let b = bound_functions(zeta_c).unwrap();
        let upper = 4.0 + 3.0 / zeta_c;
        let cases = [
            (RegimeTag::HighTWeakGammaInf, true, b.zeta_mm, "mm"),
            (RegimeTag::HighTWeakGamma0, true, b.zeta_m, "m"),
            (RegimeTag::HighTWeakGammaInf, false, b.zeta_p, "p"),
            (RegimeTag::HighTWeakGamma0, false, b.zeta_pp, "pp"),
        ];
        for (limit, over_wh, expected, tag) in cases {
            let cop = if over_wh {
                let opt = maximize_scalar(
                    |wh| omega_high_t_weak(1.0, wh, &baths, 1.0, limit),
                    1.0 + 1e-9,
                    upper,
                    1e-12,
                )
                .unwrap();
                1.0 / (opt.argmax[0] - 1.0)
            } else {
                let opt = maximize_scalar(
                    |wc| omega_high_t_weak(wc, 1.0, &baths, 1.0, limit),
                    1e-9,
                    1.0 - 1e-9,
                    1e-12,
                )
                .unwrap();
                opt.argmax[0] / (1.0 - opt.argmax[0])
            };
            r.push(
                &format!("weak[{zeta_c}].{tag}"),
                "optimized weak-coupling COP at its closed-form bound",
                cop,
                expected,
                tol,
            );
        }
    }
    r.push(
        "weak.guard",
        "removable point zeta_--(2/3) = 3/7",
        analytic::zeta_minus_minus(2.0 / 3.0),
        3.0 / 7.0,
        1e-12,
    );
    r
}

fn series(tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("series", None);
    let samples = [1e4, 1e5, 1e6];
    for name in SeriesName::ALL {
        let basis = if name.is_chi_family() {
            SeriesBasis::Sqrt
        } else {
            SeriesBasis::Linear
        };
        let fit = fit_asymptotic_series(|z| name.evaluate(z).unwrap(), &samples, 1e7, basis)
            .unwrap();
        let reference = series_reference(name);
        let err = (fit.a - reference.a)
            .abs()
            .max((fit.b - reference.b).abs())
            .max((fit.c - reference.c).abs());
        r.push(
            &format!("series.{}", name.label()),
            "fitted coefficients vs stored reference",
            err,
            0.0,
            tol,
        );
    }
    // arithmetic progressions on the stored constants
    let family = [
        SeriesName::MinusMinus,
        SeriesName::Minus,
        SeriesName::Yc,
        SeriesName::Plus,
        SeriesName::PlusPlus,
    ];
    let b_gap = family
        .iter()
        .zip([-1.0, 0.0, 1.0, 2.0, 3.0])
        .map(|(n, k)| (series_reference(*n).b - k / 18.0).abs())
        .fold(0.0, f64::max);
    r.push("series.b_progression", "second terms are n/18, n = -1..3", b_gap, 0.0, 0.0);
    let c_gap = family
        .iter()
        .zip([19.0, 0.0, -17.0, -32.0, -45.0])
        .map(|(n, k)| (series_reference(*n).c - k / 216.0).abs())
        .fold(0.0, f64::max);
    r.push(
        "series.c_progression",
        "third-term differences step by 2/216",
        c_gap,
        0.0,
        0.0,
    );
    r
}

fn cp_ratio_suite(tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("cp_ratios", None);
    let (r_inf, r_zero) = cp_ratios(1e-9).unwrap();
    r.push("cp.1", "R_inf -> 1 - 1/sqrt(2) at small zeta_C", r_inf, 0.292_893, tol);
    r.push("cp.2", "R_zero -> 3/4 at small zeta_C", r_zero, 0.75, tol);
    let (ri, rz) = cp_ratios(1e9).unwrap();
    r.push("cp.3", "R_zero/R_inf -> 4 at zeta_C = 1e9", rz / ri, 4.0, tol);
    let (ri, rz) = cp_ratios(1e7).unwrap();
    r.push("cp.4", "both ratios below 1e-3 at zeta_C = 1e7", ri.max(rz), 0.0, 1e-3);

    // scaled CP at maximum Ω: interior maxima and dissipation-limit match
    let grid: Vec<f64> = (1..=2500).map(|i| 50.0 * i as f64 / 2500.0).collect();
    for (col, label) in [(0usize, "gamma->inf"), (1usize, "gamma->0")] {
        let values: Vec<f64> = grid
            .iter()
            .map(|&z| {
                let (b8, b9) = cp_at_mof(z).unwrap();
                [b8, b9][col]
            })
            .collect();
        let peak = values
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap()
            .0;
        let interior = if peak > 0 && peak < grid.len() - 1 { 1.0 } else { 0.0 };
        r.push(
            &format!("cp.peak[{label}]"),
            "scaled CP at MOF has an interior maximum in zeta_C",
            interior,
            1.0,
            0.0,
        );
    }
    let mut limit_gap = 0.0f64;
    for zeta_c in [0.3, 1.0, 4.0, 20.0] {
        let tau = zeta_c / (1.0 + zeta_c);
        let (wc_inf, wc_zero) = optimal_wc_strong_limits(zeta_c, 1.0).unwrap();
        let (b8, b9) = cp_at_mof(zeta_c).unwrap();
        let baths = BathSpec::new(tau, 1.0, 1.0, 1e12).unwrap();
        limit_gap = limit_gap.max((cooling_high_t_strong(wc_inf, 1.0, &baths) - b8).abs() / b8);
        let baths = BathSpec::new(tau, 1.0, 1e12, 1.0).unwrap();
        limit_gap = limit_gap.max((cooling_high_t_strong(wc_zero, 1.0, &baths) - b9).abs() / b9);
    }
    r.push(
        "cp.5",
        "CP at MOF equals the regime cooling power at the optimal frequencies",
        limit_gap,
        0.0,
        1e-9,
    );
    r
}

fn chi_compare() -> VerificationReport {
    let mut r = VerificationReport::new("chi_compare", None);
    let gap = |z: f64| analytic::zeta_minus_minus(z) - chi_cop_functions(z).unwrap().2;
    let below: f64 = (0..200)
        .map(|i| 0.1 * 10f64.powf(i as f64 / 200.0))
        .map(|z| gap(z).max(0.0))
        .fold(0.0, f64::max);
    r.push(
        "chi.1",
        "zeta_-- below zeta_chi_++ on [0.1, 1)",
        below,
        0.0,
        0.0,
    );
    r.push("chi.2", "exact crossing at zeta_C = 1", gap(1.0), 0.0, 0.0);
    let above: f64 = (1..=200)
        .map(|i| 10f64.powf(2.0 * i as f64 / 200.0))
        .map(|z| (-gap(z)).max(0.0))
        .fold(0.0, f64::max);
    r.push(
        "chi.3",
        "zeta_-- above zeta_chi_++ on (1, 100]",
        above,
        0.0,
        0.0,
    );
    r
}
