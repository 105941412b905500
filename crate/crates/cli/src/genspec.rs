//! Generator specifications: compact strings describing state families,
//! e.g. `"squeezed-thermal gamma=0.7 nbar=1.5"` or
//! `"phase-randomized gamma=0.98 sigma=0.3"`.

use anyhow::{bail, Context, Result};
use snwitness_core::covariance::StandardForm;
use snwitness_core::states::{
    phase_randomized, squeezed_thermal, tmsv, PhaseRandomizedSpec, SqueezedThermalSpec,
};
use std::collections::BTreeMap;

/// A parsed generator: family name plus keyword parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub family: String,
    pub params: BTreeMap<String, f64>,
}

impl GeneratorSpec {
    /// Parse `"<family> key=value key=value ..."`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = text.split_whitespace();
        let family = parts.next().context("empty generator spec")?.to_string();
        let mut params = BTreeMap::new();
        for kv in parts {
            let (k, v) = kv
                .split_once('=')
                .with_context(|| format!("expected key=value, got {kv:?}"))?;
            let value: f64 = v
                .parse()
                .with_context(|| format!("bad number for {k}: {v:?}"))?;
            params.insert(k.to_string(), value);
        }
        Ok(GeneratorSpec { family, params })
    }

    fn get(&self, key: &str, default: f64) -> f64 {
        self.params.get(key).copied().unwrap_or(default)
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        for k in self.params.keys() {
            if !allowed.contains(&k.as_str()) {
                bail!(
                    "unknown parameter {k:?} for family {:?} (allowed: {})",
                    self.family,
                    allowed.join(", ")
                );
            }
        }
        Ok(())
    }

    /// Produce the standard form, optionally overriding one parameter (the
    /// sweep hook).
    pub fn realize_with(&self, override_key: Option<(&str, f64)>) -> Result<StandardForm> {
        let mut spec = self.clone();
        if let Some((k, v)) = override_key {
            spec.params.insert(k.to_string(), v);
        }
        match spec.family.as_str() {
            "squeezed-thermal" => {
                spec.check_keys(&["gamma", "nbar", "nbar1", "nbar2", "mbar", "phi"])?;
                let nbar = spec.get("nbar", 0.0);
                let st = SqueezedThermalSpec::new(
                    spec.get("gamma", 0.0),
                    spec.get("nbar1", nbar),
                    spec.get("nbar2", nbar),
                    spec.get("mbar", 0.0),
                )
                .map_err(|e| anyhow::anyhow!("{e}"))?
                .with_phi(spec.get("phi", 0.0));
                squeezed_thermal(&st).map_err(|e| anyhow::anyhow!("{e}"))
            }
            "tmsv" => {
                spec.check_keys(&["gamma"])?;
                tmsv(spec.get("gamma", 0.0)).map_err(|e| anyhow::anyhow!("{e}"))
            }
            "phase-randomized" => {
                spec.check_keys(&["gamma", "sigma"])?;
                let pr = PhaseRandomizedSpec::new(spec.get("gamma", 0.0), spec.get("sigma", 0.0))
                    .map_err(|e| anyhow::anyhow!("{e}"))?;
                phase_randomized(&pr).map_err(|e| anyhow::anyhow!("{e}"))
            }
            other => bail!(
                "unknown state family {other:?} (expected squeezed-thermal, tmsv, or phase-randomized)"
            ),
        }
    }

    pub fn realize(&self) -> Result<StandardForm> {
        self.realize_with(None)
    }

    /// Swept-parameter names this family accepts.
    pub fn sweepable(&self) -> &'static [&'static str] {
        match self.family.as_str() {
            "squeezed-thermal" => &["gamma", "nbar", "nbar1", "nbar2", "mbar"],
            "tmsv" => &["gamma"],
            "phase-randomized" => &["gamma", "sigma"],
            _ => &[],
        }
    }
}
