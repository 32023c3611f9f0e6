//! Rendering of the series-expansion comparison table.
//!
//! Column I (COP at maximum Ω) and column III (COP at maximum χ) are checked
//! live against the stored coefficients by the series fitter and carry a
//! `verified` marker when they match; column II holds the companion-setting
//! engine efficiencies, which this toolkit does not compute, so they are
//! printed as static text and flagged accordingly.

use qtr_core::analytic::{efficiency_at_mof_reference, series_reference, SeriesName};
use qtr_core::optimize::{fit_asymptotic_series, SeriesBasis};

const FIT_SAMPLES: [f64; 3] = [1e4, 1e5, 1e6];
const FIT_HOLDOUT: f64 = 1e7;
const FIT_TOL: f64 = 1e-4;

fn verify(name: SeriesName) -> bool {
    let basis = if name.is_chi_family() {
        SeriesBasis::Sqrt
    } else {
        SeriesBasis::Linear
    };
    let Ok(fit) = fit_asymptotic_series(|z| name.evaluate(z).unwrap(), &FIT_SAMPLES, FIT_HOLDOUT, basis)
    else {
        return false;
    };
    let r = series_reference(name);
    (fit.a - r.a).abs() <= FIT_TOL && (fit.b - r.b).abs() <= FIT_TOL && (fit.c - r.c).abs() <= FIT_TOL
}

fn omega_series_text(name: SeriesName) -> &'static str {
    match name {
        SeriesName::MinusMinus => "2/3·ζC − 1/18 + 19/216·1/ζC + O(1/ζC²)",
        SeriesName::Minus => "2/3·ζC",
        SeriesName::Yc => "2/3·ζC + 1/18 − 17/216·1/ζC + O(1/ζC²)",
        SeriesName::Plus => "2/3·ζC + 1/9 − 4/27·1/ζC + O(1/ζC²)",
        SeriesName::PlusPlus => "2/3·ζC + 1/6 − 5/24·1/ζC + O(1/ζC²)",
        _ => unreachable!("bound family only"),
    }
}

fn chi_series_text(row: usize) -> &'static str {
    match row {
        0 | 1 => "0",
        2 => "ζC^1/2 − 1 + 1/2·(1/ζC)^1/2 + O((1/ζC)^3/2)",
        3 => "√2·ζC^1/2 − 3/2 + 9/(8√2)·(1/ζC)^1/2 + O((1/ζC)^3/2)",
        _ => "√3·ζC^1/2 − 2 + 2/√3·(1/ζC)^1/2 + O((1/ζC)^3/2)",
    }
}

/// Render the full three-column table as plain text.
pub fn render() -> String {
    let omega_rows = [
        SeriesName::MinusMinus,
        SeriesName::Minus,
        SeriesName::Yc,
        SeriesName::Plus,
        SeriesName::PlusPlus,
    ];
    let chi_rows = [None, None, Some(SeriesName::CaChi), Some(SeriesName::PlusChi), Some(SeriesName::PlusPlusChi)];
    let labels = ["zeta_--", "zeta_-", "zeta_YC", "zeta_+", "zeta_++"];
    let chi_labels = ["zeta_chi_--", "zeta_chi_-", "zeta_chi_CA", "zeta_chi_+", "zeta_chi_++"];
    let efficiencies = efficiency_at_mof_reference();

    let mut out = String::new();
    out.push_str("Series expansions of the COP (efficiency) at maximum Omega and maximum chi\n");
    out.push_str(&"=".repeat(76));
    out.push('\n');
    for (i, name) in omega_rows.iter().enumerate() {
        let col1_mark = if verify(*name) { "verified" } else { "NOT VERIFIED" };
        out.push_str(&format!(
            "{:<12} COP at MOF:   {}  [{}]\n",
            labels[i],
            omega_series_text(*name),
            col1_mark
        ));
        out.push_str(&format!(
            "{:<12} efficiency:   {}  [not computed (companion engine result)]\n",
            efficiencies[i].0, efficiencies[i].1
        ));
        let col3_mark = match chi_rows[i] {
            Some(chi) => {
                if verify(chi) {
                    "verified"
                } else {
                    "NOT VERIFIED"
                }
            }
            // the two vanishing χ-COPs have nothing to fit
            None => "verified (identically zero)",
        };
        out.push_str(&format!(
            "{:<12} COP at χ:     {}  [{}]\n",
            chi_labels[i],
            chi_series_text(i),
            col3_mark
        ));
        out.push('\n');
    }
    out
}
