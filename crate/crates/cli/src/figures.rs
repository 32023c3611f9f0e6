//! Figure source data: closed-form COP and cooling-power curves on a ζ_C
//! grid.

use anyhow::{bail, Result};

use qtr_core::analytic::{bound_functions, chi_cop_functions, cp_at_mof, cp_ratios};
use qtr_core::exec;

use crate::sweep::grid;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    /// COP at maximum Ω versus ζ_C, against the χ-criterion benchmarks.
    CopComparison,
    /// Ratio of the cooling power at maximum Ω to the maximum cooling power.
    CpRatios,
    /// Scaled cooling power at maximum Ω versus ζ_C.
    CpAtMof,
}

impl FigureId {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "2" => Ok(FigureId::CopComparison),
            "3" => Ok(FigureId::CpRatios),
            "4" => Ok(FigureId::CpAtMof),
            other => bail!("unknown figure id `{other}` (expected 2, 3, or 4)"),
        }
    }

    pub fn columns(&self) -> &'static [&'static str] {
        match self {
            FigureId::CopComparison => {
                &["zeta_C", "zeta_minus", "zeta_YC", "zeta_plus", "zeta_CA", "chi_plus"]
            }
            FigureId::CpRatios => &["zeta_C", "R_inf", "R_zero"],
            FigureId::CpAtMof => &["zeta_C", "cp_B8_scaled", "cp_B9_scaled"],
        }
    }
}

pub const DEFAULT_LO: f64 = 0.01;
pub const DEFAULT_HI: f64 = 20.0;
pub const DEFAULT_POINTS: usize = 400;

pub fn row(id: FigureId, zeta_c: f64) -> Result<Vec<f64>> {
    Ok(match id {
        FigureId::CopComparison => {
            let b = bound_functions(zeta_c)?;
            let (ca, chi_plus, _) = chi_cop_functions(zeta_c)?;
            vec![zeta_c, b.zeta_m, b.zeta_yc, b.zeta_p, ca, chi_plus]
        }
        FigureId::CpRatios => {
            let (r_inf, r_zero) = cp_ratios(zeta_c)?;
            vec![zeta_c, r_inf, r_zero]
        }
        FigureId::CpAtMof => {
            let (b8, b9) = cp_at_mof(zeta_c)?;
            vec![zeta_c, b8, b9]
        }
    })
}

pub fn rows(id: FigureId, lo: f64, hi: f64, points: usize, log_spacing: bool) -> Result<Vec<Vec<f64>>> {
    if points < 2 {
        bail!("figure grid needs at least 2 points");
    }
    if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi) {
        bail!("figure range must satisfy 0 < lo < hi");
    }
    let zs = grid(lo, hi, points, log_spacing);
    let out = exec::par_map(&zs, |&z| row(id, z).map_err(|e| e.to_string()));
    out.into_iter()
        .collect::<Result<Vec<_>, String>>()
        .map_err(|e| anyhow::anyhow!(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig3_point_values() {
        let r = row(FigureId::CpRatios, 1.0).unwrap();
        assert!((r[1] - 0.183_503_419_072_273_97).abs() < 1e-15);
        assert!((r[2] - 5.0 / 9.0).abs() < 1e-15);
        // small-ζ_C limits
        let r = row(FigureId::CpRatios, 0.01).unwrap();
        assert!((r[1] - 0.292_893).abs() < 3e-3);
        assert!((r[2] - 0.75).abs() < 1e-2);
    }

    #[test]
    fn fig4_has_interior_maxima() {
        let rows = rows(FigureId::CpAtMof, DEFAULT_LO, DEFAULT_HI, DEFAULT_POINTS, true).unwrap();
        for col in [1, 2] {
            let peak = rows
                .iter()
                .enumerate()
                .max_by(|a, b| a.1[col].total_cmp(&b.1[col]))
                .unwrap()
                .0;
            assert!(peak > 0 && peak < rows.len() - 1, "column {col} peaks at the edge");
        }
    }

    #[test]
    fn fig2_column_order_matches_bounds() {
        let r = row(FigureId::CopComparison, 1.0).unwrap();
        assert_eq!(r.len(), FigureId::CopComparison.columns().len());
        assert!((r[1] - 2.0 / 3.0).abs() < 1e-15);
        assert!((r[4] - (std::f64::consts::SQRT_2 - 1.0)).abs() < 1e-15);
    }
}
