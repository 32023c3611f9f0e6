//! Named physical parameters, their resolution rules, and the flat
//! `key=value` config format.
//!
//! Temperatures may be given as an explicit pair (`tc`, `th`) or through the
//! ratio `tau` plus one of them (`th = 1` when `tau` comes alone); decay
//! rates work the same way through `gamma` (`gc = 1` when `gamma` comes
//! alone). Over- and under-determined combinations are rejected.

use anyhow::{anyhow, bail, Context, Result};
use std::collections::BTreeMap;

use qtr_core::model::BathSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ParamName {
    Tc,
    Th,
    Tau,
    Gc,
    Gh,
    Gamma,
    Lambda,
    Wc,
    Wh,
}

impl ParamName {
    pub const ALL: [ParamName; 9] = [
        ParamName::Tc,
        ParamName::Th,
        ParamName::Tau,
        ParamName::Gc,
        ParamName::Gh,
        ParamName::Gamma,
        ParamName::Lambda,
        ParamName::Wc,
        ParamName::Wh,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ParamName::Tc => "tc",
            ParamName::Th => "th",
            ParamName::Tau => "tau",
            ParamName::Gc => "gc",
            ParamName::Gh => "gh",
            ParamName::Gamma => "gamma",
            ParamName::Lambda => "lambda",
            ParamName::Wc => "wc",
            ParamName::Wh => "wh",
        }
    }
}

impl std::str::FromStr for ParamName {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        ParamName::ALL
            .iter()
            .find(|p| p.as_str() == s)
            .copied()
            .ok_or_else(|| anyhow!("unknown parameter `{s}` (expected one of tc th tau gc gh gamma lambda wc wh)"))
    }
}

/// A partial assignment of the nine named parameters.
#[derive(Debug, Clone, Default)]
pub struct ParamSet {
    values: BTreeMap<ParamName, f64>,
}

impl ParamSet {
    pub fn set(&mut self, name: ParamName, value: f64) -> Result<()> {
        if !value.is_finite() || value <= 0.0 {
            bail!("{} must be a positive finite number (got {value})", name.as_str());
        }
        self.values.insert(name, value);
        Ok(())
    }

    pub fn get(&self, name: ParamName) -> Option<f64> {
        self.values.get(&name).copied()
    }

    pub fn contains(&self, name: ParamName) -> bool {
        self.values.contains_key(&name)
    }

    pub fn require(&self, name: ParamName) -> Result<f64> {
        self.get(name)
            .ok_or_else(|| anyhow!("parameter `{}` is required but not set", name.as_str()))
    }

    /// Resolve the bath specification from `tc`/`th`/`tau` and
    /// `gc`/`gh`/`gamma`.
    pub fn resolve_baths(&self) -> Result<BathSpec> {
        let (t_c, t_h) = match (self.get(ParamName::Tc), self.get(ParamName::Th), self.get(ParamName::Tau)) {
            (Some(tc), Some(th), None) => (tc, th),
            (Some(tc), None, Some(tau)) => (tc, tc / tau),
            (None, Some(th), Some(tau)) => (tau * th, th),
            (None, None, Some(tau)) => (tau, 1.0),
            (Some(_), Some(_), Some(_)) => {
                bail!("temperatures are overdetermined: give tc+th, or tau with at most one of them")
            }
            _ => bail!("temperatures are underdetermined: give tc+th, or tau (optionally with tc or th)"),
        };
        let (gamma_c, gamma_h) = match (self.get(ParamName::Gc), self.get(ParamName::Gh), self.get(ParamName::Gamma)) {
            (Some(gc), Some(gh), None) => (gc, gh),
            (Some(gc), None, Some(g)) => (gc, g * gc),
            (None, Some(gh), Some(g)) => (gh / g, gh),
            (None, None, Some(g)) => (1.0, g),
            (Some(_), Some(_), Some(_)) => {
                bail!("decay rates are overdetermined: give gc+gh, or gamma with at most one of them")
            }
            _ => bail!("decay rates are underdetermined: give gc+gh, or gamma (optionally with gc or gh)"),
        };
        BathSpec::new(t_c, t_h, gamma_c, gamma_h)
            .map_err(|e| anyhow!("invalid bath parameters: {e}"))
    }
}

/// Parse the flat config format: one `key=value` per line, `#` comments.
/// Keys are the parameter names prefixed with `fix.` for fixed physical
/// parameters, or sweep settings (`regime`, `objective`, `param`, `lo`,
/// `hi`, `points`, `spacing`, `optimize`, `format`, `out`).
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .with_context(|| format!("config line {}: expected key=value, got `{line}`", lineno + 1))?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}
