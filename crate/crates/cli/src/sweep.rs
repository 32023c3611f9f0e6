//! Parameter sweeps over any named parameter, with an optional inner
//! maximization over one frequency at every grid point. Grid points evaluate
//! concurrently; rows come back in grid order.

use anyhow::{anyhow, bail, Result};
use std::collections::BTreeMap;

use qtr_core::exec;
use qtr_core::model::BathSpec;
use qtr_core::optimize::maximize_scalar;
use qtr_core::regimes::{self, RegimeTag};
use qtr_core::thermo;

use crate::output::Format;
use crate::params::{ParamName, ParamSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Omega,
    Chi,
    CoolingPower,
}

impl Objective {
    pub fn as_str(&self) -> &'static str {
        match self {
            Objective::Omega => "omega",
            Objective::Chi => "chi",
            Objective::CoolingPower => "cooling_power",
        }
    }
}

impl std::str::FromStr for Objective {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "omega" => Ok(Objective::Omega),
            "chi" => Ok(Objective::Chi),
            "cooling_power" | "cooling" => Ok(Objective::CoolingPower),
            other => Err(anyhow!(
                "unknown objective `{other}` (expected omega, chi, or cooling_power)"
            )),
        }
    }
}

pub fn parse_regime(s: &str) -> Result<RegimeTag> {
    RegimeTag::ALL
        .iter()
        .find(|t| t.name() == s)
        .copied()
        .ok_or_else(|| {
            anyhow!(
                "unknown regime `{s}` (expected one of {})",
                RegimeTag::ALL.map(|t| t.name()).join(", ")
            )
        })
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub regime: RegimeTag,
    pub objective: Objective,
    pub param: ParamName,
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub log_spacing: bool,
    pub fixed: ParamSet,
    pub optimize: Option<ParamName>,
    pub format: Format,
}

impl SweepConfig {
    /// Build from a merged `key=value` map (config file with CLI overrides
    /// already applied).
    pub fn from_map(map: &BTreeMap<String, String>) -> Result<Self> {
        let get = |k: &str| -> Result<&str> {
            map.get(k)
                .map(String::as_str)
                .ok_or_else(|| anyhow!("sweep setting `{k}` is required"))
        };
        let parse_f64 = |k: &str| -> Result<f64> {
            get(k)?
                .parse::<f64>()
                .map_err(|_| anyhow!("sweep setting `{k}` must be a number (got `{}`)", map[k]))
        };
        let regime = parse_regime(get("regime")?)?;
        let objective: Objective = get("objective")?.parse()?;
        let param: ParamName = get("param")?.parse()?;
        let lo = parse_f64("lo")?;
        let hi = parse_f64("hi")?;
        let points: usize = get("points")?
            .parse()
            .map_err(|_| anyhow!("sweep setting `points` must be an integer"))?;
        let log_spacing = match map.get("spacing").map(String::as_str) {
            None | Some("log") => true,
            Some("linear") => false,
            Some(other) => bail!("unknown spacing `{other}` (expected log or linear)"),
        };
        let optimize = map
            .get("optimize")
            .map(|s| s.parse::<ParamName>())
            .transpose()?;
        let format = match map.get("format").map(String::as_str) {
            None => Format::Csv,
            Some(s) => s.parse().map_err(|e: String| anyhow!(e))?,
        };
        let mut fixed = ParamSet::default();
        for (key, value) in map {
            if let Some(name) = key.strip_prefix("fix.") {
                let name: ParamName = name.parse()?;
                let value: f64 = value
                    .parse()
                    .map_err(|_| anyhow!("fixed parameter `{key}` must be a number"))?;
                fixed.set(name, value)?;
            }
        }
        let cfg = Self {
            regime,
            objective,
            param,
            lo,
            hi,
            points,
            log_spacing,
            fixed,
            optimize,
            format,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if self.points < 2 {
            bail!("sweep needs at least 2 points (got {})", self.points);
        }
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo > 0.0 && self.lo <= self.hi) {
            bail!("sweep range must satisfy 0 < lo <= hi (got {}..{})", self.lo, self.hi);
        }
        if self.fixed.contains(self.param) {
            bail!("swept parameter `{}` is also fixed", self.param.as_str());
        }
        if let Some(inner) = self.optimize {
            if !matches!(inner, ParamName::Wc | ParamName::Wh) {
                bail!("only wc or wh can be inner-optimized (got `{}`)", inner.as_str());
            }
            if inner == self.param || self.fixed.contains(inner) {
                bail!(
                    "inner-optimized parameter `{}` must be neither swept nor fixed",
                    inner.as_str()
                );
            }
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        grid(self.lo, self.hi, self.points, self.log_spacing)
    }

    pub fn columns(&self) -> Vec<String> {
        let mut cols = vec![self.param.as_str().to_string()];
        if let Some(inner) = self.optimize {
            cols.push(format!("argmax_{}", inner.as_str()));
        }
        cols.push(self.objective.as_str().to_string());
        cols.push("cop".to_string());
        cols
    }
}

pub fn grid(lo: f64, hi: f64, points: usize, log_spacing: bool) -> Vec<f64> {
    (0..points)
        .map(|i| {
            let t = i as f64 / (points - 1) as f64;
            if log_spacing {
                lo * (hi / lo).powf(t)
            } else {
                lo + (hi - lo) * t
            }
        })
        .collect()
}

fn objective_at(
    cfg: &SweepConfig,
    wc: f64,
    wh: f64,
    baths: &BathSpec,
    lambda: f64,
) -> qtr_core::Result<f64> {
    match cfg.objective {
        Objective::Omega => regimes::omega_at(cfg.regime, wc, wh, baths, lambda),
        Objective::CoolingPower => regimes::cooling_at(cfg.regime, wc, wh, baths, lambda),
        Objective::Chi => {
            let zeta = thermo::cop(wc, wh)?;
            Ok(zeta * regimes::cooling_at(cfg.regime, wc, wh, baths, lambda)?)
        }
    }
}

fn lambda_for(cfg: &SweepConfig, point: &ParamSet) -> Result<f64> {
    match cfg.regime {
        // the strong-coupling form has no λ dependence
        RegimeTag::HighTStrong => Ok(point.get(ParamName::Lambda).unwrap_or(1.0)),
        _ => point.require(ParamName::Lambda),
    }
}

/// Evaluate one grid point into an output row.
fn evaluate_point(cfg: &SweepConfig, value: f64) -> Result<Vec<f64>> {
    let mut point = cfg.fixed.clone();
    point.set(cfg.param, value)?;
    let baths = point.resolve_baths()?;
    let lambda = lambda_for(cfg, &point)?;
    match cfg.optimize {
        None => {
            let wc = point.require(ParamName::Wc)?;
            let wh = point.require(ParamName::Wh)?;
            let objective = objective_at(cfg, wc, wh, &baths, lambda)?;
            let cop = thermo::cop(wc, wh)?;
            Ok(vec![value, objective, cop])
        }
        Some(ParamName::Wc) => {
            let wh = point.require(ParamName::Wh)?;
            let r = maximize_scalar(
                |wc| objective_at(cfg, wc, wh, &baths, lambda).unwrap_or(f64::NEG_INFINITY),
                1e-9 * wh,
                wh * (1.0 - 1e-12),
                1e-12 * wh,
            )?;
            let cop = thermo::cop(r.argmax[0], wh)?;
            Ok(vec![value, r.argmax[0], r.value, cop])
        }
        Some(ParamName::Wh) => {
            let wc = point.require(ParamName::Wc)?;
            // upper edge comfortably beyond every known optimum of the Ω and
            // χ objectives: the bracket zero sits at (2 + ζ_C)/ζ_C · ωc
            let upper = wc * (4.0 + 3.0 / baths.zeta_c());
            let r = maximize_scalar(
                |wh| objective_at(cfg, wc, wh, &baths, lambda).unwrap_or(f64::NEG_INFINITY),
                wc * (1.0 + 1e-9),
                upper,
                1e-12 * upper,
            )?;
            let cop = thermo::cop(wc, r.argmax[0])?;
            Ok(vec![value, r.argmax[0], r.value, cop])
        }
        Some(other) => bail!("cannot inner-optimize `{}`", other.as_str()),
    }
}

/// Run the sweep: concurrent evaluation, deterministic row order.
pub fn run(cfg: &SweepConfig) -> Result<Vec<Vec<f64>>> {
    let grid = cfg.grid();
    let rows = exec::par_map(&grid, |&v| {
        evaluate_point(cfg, v).map_err(|e| e.to_string())
    });
    rows.into_iter()
        .collect::<Result<Vec<_>, String>>()
        .map_err(|e| anyhow!(e))
}
