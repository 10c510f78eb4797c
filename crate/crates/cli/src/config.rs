//! Sweep configuration files (TOML) and the plain-data scenario description
//! shared by all commands.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use bellsim_core::bell::{Engine, Family, OptimizeOptions, Scenario};
use bellsim_core::thermal::gamma_to_eta;
use bellsim_core::LossPlacement;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    #[serde(alias = "polarization")]
    #[value(alias = "polarization")]
    Pol,
    Ecs,
    Ets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum EngineName {
    ClosedForm,
    Oracle,
}

impl From<EngineName> for Engine {
    fn from(e: EngineName) -> Self {
        match e {
            EngineName::ClosedForm => Engine::ClosedForm,
            EngineName::Oracle => Engine::Oracle,
        }
    }
}

/// One scenario as plain data. Unused parameters stay `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    pub family: FamilyName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<f64>,
    /// Decoherence time; sets `eta1 = exp(-gamma_t)` when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_t: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub engine: Option<EngineName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadrature_order: Option<usize>,
}

impl PointSpec {
    pub fn new(family: FamilyName) -> Self {
        Self {
            family,
            n: None,
            alpha: None,
            v: None,
            d: None,
            gamma_t: None,
            eta1: None,
            eta2: None,
            engine: None,
            quadrature_order: None,
        }
    }

    pub fn eta1(&self) -> Result<f64, CliError> {
        match (self.gamma_t, self.eta1) {
            (Some(_), Some(_)) => Err(CliError::Config("set either gamma_t or eta1, not both".into())),
            (Some(g), None) => gamma_to_eta(g).map_err(|e| CliError::Config(e.to_string())),
            (None, e) => Ok(e.unwrap_or(1.0)),
        }
    }

    pub fn eta2(&self) -> f64 {
        self.eta2.unwrap_or(1.0)
    }

    /// Builds and validates the library scenario.
    pub fn scenario(&self) -> Result<Scenario, CliError> {
        fn need<T>(v: Option<T>, what: &str, family: &str) -> Result<T, CliError> {
            v.ok_or_else(|| CliError::Config(format!("{family} scenario needs `{what}`")))
        }
        let stray = |name: &str, set: bool| -> Result<(), CliError> {
            if set {
                Err(CliError::Config(format!(
                    "`{name}` does not apply to {:?}",
                    self.family
                )))
            } else {
                Ok(())
            }
        };
        let family = match self.family {
            FamilyName::Pol => {
                stray("alpha", self.alpha.is_some())?;
                stray("v", self.v.is_some())?;
                stray("d", self.d.is_some())?;
                Family::Polarization {
                    n: need(self.n, "n", "pol")?,
                }
            }
            FamilyName::Ecs => {
                stray("n", self.n.is_some())?;
                stray("v", self.v.is_some())?;
                stray("d", self.d.is_some())?;
                Family::Ecs {
                    alpha: need(self.alpha, "alpha", "ecs")?,
                }
            }
            FamilyName::Ets => {
                stray("n", self.n.is_some())?;
                stray("alpha", self.alpha.is_some())?;
                Family::Ets {
                    v: need(self.v, "v", "ets")?,
                    d: need(self.d, "d", "ets")?,
                }
            }
        };
        let loss = LossPlacement::new(self.eta1()?, self.eta2()).map_err(|e| CliError::Config(e.to_string()))?;
        let default_engine = match self.family {
            FamilyName::Ets => Engine::Oracle,
            _ => Engine::ClosedForm,
        };
        let mut s = Scenario::new(family, loss, self.engine.map_or(default_engine, Engine::from));
        if let Some(order) = self.quadrature_order {
            s.quadrature_order = order;
        }
        s.validate().map_err(|e| CliError::Config(e.to_string()))?;
        // Engine availability is decided when the correlator is built.
        s.correlator().map_err(|e| CliError::Config(e.to_string()))?;
        Ok(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisName {
    N,
    Alpha,
    V,
    D,
    GammaT,
    Eta1,
    Eta2,
}

impl AxisName {
    pub fn as_str(self) -> &'static str {
        match self {
            AxisName::N => "n",
            AxisName::Alpha => "alpha",
            AxisName::V => "v",
            AxisName::D => "d",
            AxisName::GammaT => "gamma_t",
            AxisName::Eta1 => "eta1",
            AxisName::Eta2 => "eta2",
        }
    }
}

/// `steps` equally spaced values from `start` to `stop`, both included.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Axis {
    pub name: AxisName,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl Axis {
    pub fn new(name: AxisName, start: f64, stop: f64, steps: usize) -> Self {
        Self {
            name,
            start,
            stop,
            steps,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        linspace(self.start, self.stop, self.steps)
    }
}

pub fn linspace(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![start];
    }
    let h = (stop - start) / (steps - 1) as f64;
    (0..steps)
        .map(|i| if i + 1 == steps { stop } else { start + i as f64 * h })
        .collect()
}

fn apply(spec: &mut PointSpec, axis: AxisName, value: f64) -> Result<(), CliError> {
    match axis {
        AxisName::N => {
            if value.fract() != 0.0 || value < 1.0 {
                return Err(CliError::Config(format!("axis n takes positive integers, got {value}")));
            }
            spec.n = Some(value as usize);
        }
        AxisName::Alpha => spec.alpha = Some(value),
        AxisName::V => spec.v = Some(value),
        AxisName::D => spec.d = Some(value),
        // An axis overrides either form of eta1 given in the scenario.
        AxisName::GammaT => {
            spec.gamma_t = Some(value);
            spec.eta1 = None;
        }
        AxisName::Eta1 => {
            spec.eta1 = Some(value);
            spec.gamma_t = None;
        }
        AxisName::Eta2 => spec.eta2 = Some(value),
    }
    Ok(())
}

/// Cartesian product of the axes over a base scenario; the first axis varies slowest.
pub fn grid(base: &PointSpec, axes: &[Axis]) -> Result<Vec<PointSpec>, CliError> {
    let mut points = vec![base.clone()];
    for axis in axes {
        let values = axis.values();
        let mut next = Vec::with_capacity(points.len() * values.len());
        for p in &points {
            for &v in &values {
                let mut q = p.clone();
                apply(&mut q, axis.name, v)?;
                next.push(q);
            }
        }
        points = next;
    }
    Ok(points)
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunOptions {
    /// Optimizer start points per angle (`per_axis^4` starts per sign).
    pub restarts_per_axis: Option<usize>,
    /// Worker threads; defaults to the available parallelism.
    pub jobs: Option<usize>,
    /// Adds a `wall_time_s` column. Off by default so runs can be diffed.
    #[serde(default)]
    pub wall_time: bool,
}

impl RunOptions {
    pub fn optimize(&self) -> OptimizeOptions {
        let mut o = OptimizeOptions::default();
        if let Some(k) = self.restarts_per_axis {
            o.per_axis = k;
        }
        o
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    /// CSV destination; standard output when absent.
    pub path: Option<PathBuf>,
}

/// Contents of a sweep config file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub scenario: PointSpec,
    #[serde(default, rename = "axis")]
    pub axes: Vec<Axis>,
    #[serde(default)]
    pub options: RunOptions,
    #[serde(default)]
    pub output: OutputSpec,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.check()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(format!("reading {}", path.display()), e))?;
        Self::from_toml(&text)
    }

    fn check(&self) -> Result<(), CliError> {
        if self.axes.is_empty() {
            return Err(CliError::Config("a sweep needs at least one [[axis]]".into()));
        }
        let mut seen = BTreeSet::new();
        for a in &self.axes {
            if a.steps < 2 {
                return Err(CliError::Config(format!("axis {} needs steps >= 2", a.name.as_str())));
            }
            if !(a.start.is_finite() && a.stop.is_finite()) {
                return Err(CliError::Config(format!(
                    "axis {} has a non-finite bound",
                    a.name.as_str()
                )));
            }
            if !seen.insert(a.name) {
                return Err(CliError::Config(format!("axis {} given twice", a.name.as_str())));
            }
        }
        if seen.contains(&AxisName::GammaT) && seen.contains(&AxisName::Eta1) {
            return Err(CliError::Config("axes gamma_t and eta1 both set eta1".into()));
        }
        if self.options.restarts_per_axis == Some(0) || self.options.jobs == Some(0) {
            return Err(CliError::Config("restarts_per_axis and jobs must be positive".into()));
        }
        Ok(())
    }

    /// All grid points, validated.
    pub fn points(&self) -> Result<Vec<PointSpec>, CliError> {
        let points = grid(&self.scenario, &self.axes)?;
        for p in &points {
            p.scenario()?;
        }
        Ok(points)
    }
}
