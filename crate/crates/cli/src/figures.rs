//! Parameter sets behind each figure.
//!
//! Curves use 101 points over their abscissa and the surface uses a 41 x 41
//! grid over `gamma_t` in [0, 1] and `d` in [0.25, 10].

use std::str::FromStr;

use bellsim_core::bell::OptimizeOptions;

use crate::config::{grid, Axis, AxisName, FamilyName, PointSpec};
use crate::sweep::{run_points, write_csv};
use crate::CliError;

pub const CURVE_POINTS: usize = 101;
pub const SURFACE_POINTS: usize = 41;
pub const SURFACE_D: (f64, f64) = (0.25, 10.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig2a,
    Fig2b,
    Fig3,
    Fig4a,
    Fig4b,
    Fig5a,
    Fig5b,
}

impl Figure {
    pub const ALL: [Figure; 7] = [
        Figure::Fig2a,
        Figure::Fig2b,
        Figure::Fig3,
        Figure::Fig4a,
        Figure::Fig4b,
        Figure::Fig5a,
        Figure::Fig5b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig2a => "fig2a",
            Figure::Fig2b => "fig2b",
            Figure::Fig3 => "fig3",
            Figure::Fig4a => "fig4a",
            Figure::Fig4b => "fig4b",
            Figure::Fig5a => "fig5a",
            Figure::Fig5b => "fig5b",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Figure::Fig2a => "fig2a: polarization n = 1..4, eta1 = 1, eta2 swept over [0, 1]",
            Figure::Fig2b => "fig2b: polarization n = 1..4, eta2 = 1, eta1 swept over [0, 1]",
            Figure::Fig3 => "fig3: ecs alpha = 0.5, 1, 1.5, 2, eta1 = 1, eta2 swept over [0, 1]",
            Figure::Fig4a => "fig4a: ets V = 10, eta2 = 1, surface over gamma_t in [0, 1] and d in [0.25, 10]",
            Figure::Fig4b => "fig4b: ets (V, d) = (1.001, 5), (10, 5), (10, 10), eta2 = 1, gamma_t swept over [0, 1]",
            Figure::Fig5a => "fig5a: polarization n = 1, 2, 3, eta1 = 0.95, eta2 swept over [0, 1]",
            Figure::Fig5b => "fig5b: ecs alpha = 1, 1.5, 2, eta1 = 0.85, eta2 swept over [0, 1]",
        }
    }

    /// Grid points in output order: one curve after another.
    pub fn points(self) -> Result<Vec<PointSpec>, CliError> {
        let eta2 = Axis::new(AxisName::Eta2, 0.0, 1.0, CURVE_POINTS);
        let eta1 = Axis::new(AxisName::Eta1, 0.0, 1.0, CURVE_POINTS);
        let gamma = |steps| Axis::new(AxisName::GammaT, 0.0, 1.0, steps);
        let pol = |n: usize, eta1: f64| PointSpec {
            n: Some(n),
            eta1: Some(eta1),
            ..PointSpec::new(FamilyName::Pol)
        };
        let ecs = |alpha: f64, eta1: f64| PointSpec {
            alpha: Some(alpha),
            eta1: Some(eta1),
            ..PointSpec::new(FamilyName::Ecs)
        };
        let ets = |v: f64, d: Option<f64>| PointSpec {
            v: Some(v),
            d,
            eta2: Some(1.0),
            ..PointSpec::new(FamilyName::Ets)
        };
        let curves: Vec<(PointSpec, Vec<Axis>)> = match self {
            Figure::Fig2a => (1..=4).map(|n| (pol(n, 1.0), vec![eta2.clone()])).collect(),
            Figure::Fig2b => (1..=4)
                .map(|n| {
                    let mut base = pol(n, 1.0);
                    base.eta1 = None;
                    base.eta2 = Some(1.0);
                    (base, vec![eta1.clone()])
                })
                .collect(),
            Figure::Fig3 => [0.5, 1.0, 1.5, 2.0]
                .iter()
                .map(|&a| (ecs(a, 1.0), vec![eta2.clone()]))
                .collect(),
            Figure::Fig4a => vec![(
                ets(10.0, None),
                vec![
                    gamma(SURFACE_POINTS),
                    Axis::new(AxisName::D, SURFACE_D.0, SURFACE_D.1, SURFACE_POINTS),
                ],
            )],
            Figure::Fig4b => [(1.001, 5.0), (10.0, 5.0), (10.0, 10.0)]
                .iter()
                .map(|&(v, d)| (ets(v, Some(d)), vec![gamma(CURVE_POINTS)]))
                .collect(),
            Figure::Fig5a => (1..=3).map(|n| (pol(n, 0.95), vec![eta2.clone()])).collect(),
            Figure::Fig5b => [1.0, 1.5, 2.0]
                .iter()
                .map(|&a| (ecs(a, 0.85), vec![eta2.clone()]))
                .collect(),
        };
        let mut out = Vec::new();
        for (base, axes) in &curves {
            out.extend(grid(base, axes)?);
        }
        Ok(out)
    }
}

impl FromStr for Figure {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Figure::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Figure::ALL.iter().map(|f| f.name()).collect();
            CliError::Config(format!("unknown figure `{s}` (expected one of {})", names.join(", ")))
        })
    }
}

/// Computes a figure; returns the CSV text.
pub fn run_figure(fig: Figure, jobs: Option<usize>, wall_time: bool) -> Result<String, CliError> {
    let points = fig.points()?;
    let rows = run_points(&points, &OptimizeOptions::default(), jobs, wall_time)?;
    let mut buf = Vec::new();
    write_csv(&mut buf, fig.title(), &rows)?;
    Ok(String::from_utf8(buf).expect("CSV is ASCII"))
}
