//! CHSH assembly, angle optimization and detection-efficiency thresholds.
//!
//! Every correlation in this crate has the form
//! `E(ta, tb) = f(ta)^T T f(tb)` with `f(t) = (1, cos 2t, sin 2t)`, since the
//! local rotations enter only through `cos^2`, `sin^2` and `cos sin`. The
//! optimizer fits the 3x3 tensor `T` from nine evaluations, verifies it at
//! off-grid angles, runs the multi-start search on the fitted form and then
//! re-evaluates the Bell value directly at the optimum. Correlations that fail
//! the verification are optimized directly.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

use crate::catstates::{coherent_tail, correlation_ecs, fock_oracle_ecs, TRUNCATION_TAIL};
use crate::error::{check_range, Error, Result};
use crate::fockspace::{analytic_ep, analytic_ep_two_loss, correlation_p, LossPlacement, MAX_PHOTONS};
use crate::numerics::{bisect, minimize_simplex_with, SimplexOptions};
use crate::thermal::{cets_closed_form, EtsOracle, ThermalParams, DEFAULT_ORDER};

/// `2 sqrt 2`.
pub const TSIRELSON: f64 = 2.0 * SQRT_2;

/// Measurement angles `(theta_a, theta_b, theta_a', theta_b')` in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleSet {
    pub theta_a: f64,
    pub theta_b: f64,
    pub theta_a_prime: f64,
    pub theta_b_prime: f64,
}

impl AngleSet {
    pub fn new(theta_a: f64, theta_b: f64, theta_a_prime: f64, theta_b_prime: f64) -> Self {
        Self {
            theta_a,
            theta_b,
            theta_a_prime,
            theta_b_prime,
        }
    }

    fn from_slice(x: &[f64]) -> Self {
        Self::new(x[0], x[1], x[2], x[3])
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.theta_a, self.theta_b, self.theta_a_prime, self.theta_b_prime]
    }

    /// All angles mapped into `[-pi/2, pi/2)`; correlations have period `pi`.
    pub fn canonical(&self) -> Self {
        let [a, b, ap, bp] = self.to_array().map(canonical_angle);
        Self::new(a, b, ap, bp)
    }
}

/// `theta` reduced modulo `pi` into `[-pi/2, pi/2)`.
pub fn canonical_angle(theta: f64) -> f64 {
    let t = theta - PI * ((theta + FRAC_PI_2) / PI).floor();
    if t >= FRAC_PI_2 {
        t - PI
    } else {
        t
    }
}

/// `E(a,b) + E(a,b') + E(a',b) - E(a',b')`.
pub fn chsh(mut correlation: impl FnMut(f64, f64) -> f64, angles: &AngleSet) -> f64 {
    let AngleSet {
        theta_a: a,
        theta_b: b,
        theta_a_prime: ap,
        theta_b_prime: bp,
    } = *angles;
    correlation(a, b) + correlation(a, bp) + correlation(ap, b) - correlation(ap, bp)
}

/// [`chsh`] for fallible correlations.
pub fn try_chsh(mut correlation: impl FnMut(f64, f64) -> Result<f64>, angles: &AngleSet) -> Result<f64> {
    let AngleSet {
        theta_a: a,
        theta_b: b,
        theta_a_prime: ap,
        theta_b_prime: bp,
    } = *angles;
    Ok(correlation(a, b)? + correlation(a, bp)? + correlation(ap, b)? - correlation(ap, bp)?)
}

/// State family with its size parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Polarization { n: usize },
    Ecs { alpha: f64 },
    Ets { v: f64, d: f64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Polarization { .. } => "pol",
            Family::Ecs { .. } => "ecs",
            Family::Ets { .. } => "ets",
        }
    }
}

/// Which evaluation of the correlation to use.
///
/// | family | closed form | oracle |
/// |---|---|---|
/// | polarization | analytic `E` | Fock density matrix |
/// | ecs | dyad algebra | truncated Fock basis |
/// | ets | closed form | Gauss-Hermite over the P-representation |
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    ClosedForm,
    Oracle,
}

impl Engine {
    pub fn tag(&self) -> &'static str {
        match self {
            Engine::ClosedForm => "closed_form",
            Engine::Oracle => "oracle",
        }
    }
}

/// A state family under loss, with the evaluation engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub family: Family,
    pub loss: LossPlacement,
    pub engine: Engine,
    /// Gauss-Hermite order for the thermal oracle.
    pub quadrature_order: usize,
}

impl Scenario {
    pub fn new(family: Family, loss: LossPlacement, engine: Engine) -> Self {
        Self {
            family,
            loss,
            engine,
            quadrature_order: DEFAULT_ORDER,
        }
    }

    /// Polarization state; analytic correlation.
    pub fn polarization(n: usize, loss: LossPlacement) -> Self {
        Self::new(Family::Polarization { n }, loss, Engine::ClosedForm)
    }

    /// Entangled coherent state; dyad algebra.
    pub fn ecs(alpha: f64, loss: LossPlacement) -> Self {
        Self::new(Family::Ecs { alpha }, loss, Engine::ClosedForm)
    }

    /// Entangled thermal state; quadrature oracle.
    pub fn ets(v: f64, d: f64, loss: LossPlacement) -> Self {
        Self::new(Family::Ets { v, d }, loss, Engine::Oracle)
    }

    pub fn with_engine(mut self, engine: Engine) -> Self {
        self.engine = engine;
        self
    }

    pub fn with_eta_after(mut self, eta: f64) -> Self {
        self.loss.eta_after = eta;
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.loss.validate()?;
        match self.family {
            Family::Polarization { n } => check_range("n", n as f64, 1.0, MAX_PHOTONS as f64),
            Family::Ecs { alpha } => {
                if alpha > 0.0 && alpha <= 4.0 {
                    Ok(())
                } else {
                    Err(Error::OutOfRange {
                        name: "alpha",
                        value: alpha,
                        min: 0.0,
                        max: 4.0,
                    })
                }
            }
            Family::Ets { v, d } => ThermalParams::new(v, d).map(|_| ()),
        }
    }

    /// Prepared correlation function for this scenario.
    pub fn correlator(&self) -> Result<Correlator> {
        self.validate()?;
        let loss = self.loss;
        let kind = match (self.family, self.engine) {
            (Family::Polarization { n }, Engine::ClosedForm) => Kind::PolClosed { n, loss },
            (Family::Polarization { n }, Engine::Oracle) => Kind::PolOracle { n, loss },
            (Family::Ecs { alpha }, Engine::ClosedForm) => Kind::EcsDyad { alpha, loss },
            (Family::Ecs { alpha }, Engine::Oracle) => Kind::EcsFock {
                alpha,
                loss,
                n_max: fock_cutoff(alpha)?,
            },
            (Family::Ets { v, d }, Engine::ClosedForm) => {
                if loss.eta_after != 1.0 || loss.eta_before <= 0.0 {
                    return Err(Error::EngineUnavailable {
                        engine: "closed_form",
                        family: "ets",
                        reason: "the closed form covers loss before the rotations only, with eta1 > 0",
                    });
                }
                Kind::EtsClosed {
                    params: ThermalParams::new(v, d)?,
                    eta: loss.eta_before,
                }
            }
            (Family::Ets { v, d }, Engine::Oracle) => Kind::EtsOracle(Box::new(EtsOracle::new(
                &ThermalParams::new(v, d)?,
                loss,
                self.quadrature_order,
            )?)),
        };
        Ok(Correlator { kind })
    }
}

/// Smallest Fock cutoff meeting the truncation guard, plus a margin.
fn fock_cutoff(alpha: f64) -> Result<usize> {
    const LIMIT: usize = 60;
    let n = (10..=LIMIT)
        .find(|&n| coherent_tail(alpha, n) < TRUNCATION_TAIL * 1e-3)
        .ok_or(Error::EngineUnavailable {
            engine: "oracle",
            family: "ecs",
            reason: "amplitude needs a Fock cutoff above 60",
        })?;
    Ok((n + 5).clamp(20, LIMIT))
}

#[derive(Debug, Clone)]
enum Kind {
    PolClosed {
        n: usize,
        loss: LossPlacement,
    },
    PolOracle {
        n: usize,
        loss: LossPlacement,
    },
    EcsDyad {
        alpha: f64,
        loss: LossPlacement,
    },
    EcsFock {
        alpha: f64,
        loss: LossPlacement,
        n_max: usize,
    },
    EtsClosed {
        params: ThermalParams,
        eta: f64,
    },
    EtsOracle(Box<EtsOracle>),
}

/// Correlation `E(theta_a, theta_b)` of a prepared scenario.
#[derive(Debug, Clone)]
pub struct Correlator {
    kind: Kind,
}

impl Correlator {
    pub fn eval(&self, theta_a: f64, theta_b: f64) -> Result<f64> {
        let r = match &self.kind {
            Kind::PolClosed { n, loss } => {
                if loss.eta_before == 1.0 {
                    analytic_ep(*n, theta_a, theta_b, loss.eta_after)
                } else {
                    analytic_ep_two_loss(*n, theta_a, theta_b, *loss)
                }
            }
            Kind::PolOracle { n, loss } => correlation_p(*n, theta_a, theta_b, *loss),
            Kind::EcsDyad { alpha, loss } => correlation_ecs(*alpha, theta_a, theta_b, *loss),
            Kind::EcsFock { alpha, loss, n_max } => fock_oracle_ecs(*alpha, theta_a, theta_b, *loss, *n_max),
            Kind::EtsClosed { params, eta } => cets_closed_form(theta_a, theta_b, params, *eta),
            Kind::EtsOracle(o) => o.correlation(theta_a, theta_b),
        };
        r.map_err(|e| Error::AtAngles {
            theta_a,
            theta_b,
            source: Box::new(e),
        })
    }

    pub fn chsh(&self, angles: &AngleSet) -> Result<f64> {
        try_chsh(|a, b| self.eval(a, b), angles)
    }
}

/// `f(t) = (1, cos 2t, sin 2t)`.
fn basis(t: f64) -> [f64; 3] {
    let (s, c) = (2.0 * t).sin_cos();
    [1.0, c, s]
}

/// Fitted form `E(ta, tb) = f(ta)^T T f(tb)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationTensor {
    pub t: [[f64; 3]; 3],
}

/// Largest deviation between the fit and direct evaluation accepted at the check angles.
pub const BILINEAR_TOL: f64 = 1e-9;

impl CorrelationTensor {
    /// Fits `T` on the grid `{0, pi/4, -pi/4}^2` and checks three off-grid pairs.
    pub fn fit(corr: &Correlator) -> Result<Self> {
        let grid = [0.0, FRAC_PI_4, -FRAC_PI_4];
        let mut e = [[0.0; 3]; 3];
        for (i, &a) in grid.iter().enumerate() {
            for (j, &b) in grid.iter().enumerate() {
                e[i][j] = corr.eval(a, b)?;
            }
        }
        // rows of F are f(grid_i); F^{-1} in closed form
        let finv = [[0.0, 0.5, 0.5], [1.0, -0.5, -0.5], [0.0, 0.5, -0.5]];
        let mut tmp = [[0.0; 3]; 3];
        for u in 0..3 {
            for j in 0..3 {
                tmp[u][j] = (0..3).map(|i| finv[u][i] * e[i][j]).sum();
            }
        }
        let mut t = [[0.0; 3]; 3];
        for u in 0..3 {
            for v in 0..3 {
                t[u][v] = (0..3).map(|j| tmp[u][j] * finv[v][j]).sum();
            }
        }
        let fit = Self { t };
        let mut worst: f64 = 0.0;
        for &(a, b) in &[(0.37, -1.1), (1.3, 0.6), (-0.8, -0.25)] {
            worst = worst.max((fit.eval(a, b) - corr.eval(a, b)?).abs());
        }
        if worst.is_nan() || worst > BILINEAR_TOL {
            return Err(Error::NotBilinear(worst));
        }
        Ok(fit)
    }

    pub fn eval(&self, theta_a: f64, theta_b: f64) -> f64 {
        self.eval_basis(&basis(theta_a), &basis(theta_b))
    }

    fn eval_basis(&self, fa: &[f64; 3], fb: &[f64; 3]) -> f64 {
        let mut acc = 0.0;
        for u in 0..3 {
            for v in 0..3 {
                acc += fa[u] * self.t[u][v] * fb[v];
            }
        }
        acc
    }

    fn chsh(&self, x: &[f64]) -> f64 {
        let [a, b, ap, bp] = [x[0], x[1], x[2], x[3]].map(basis);
        self.eval_basis(&a, &b) + self.eval_basis(&a, &bp) + self.eval_basis(&ap, &b) - self.eval_basis(&ap, &bp)
    }
}

/// How the optimum was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchPath {
    /// Multi-start on the fitted correlation tensor.
    Tensor,
    /// Multi-start on direct evaluations.
    Direct,
}

/// Optimized Bell value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellResult {
    /// `|B|` at the optimum, evaluated directly with the scenario's engine.
    pub b_max: f64,
    /// Signed value of `B` at `angles`.
    pub b_signed: f64,
    pub angles: AngleSet,
    pub engine_used: Engine,
    pub path: SearchPath,
    pub n_restarts: usize,
    pub converged: bool,
}

/// Multi-start settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizeOptions {
    /// Grid points per angle; `per_axis^4` starts per sign.
    pub per_axis: usize,
    /// Position of the start inside each grid cell, as a fraction of the cell width.
    pub cell_offset: f64,
    pub simplex: SimplexOptions,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        Self {
            per_axis: 4,
            cell_offset: 0.5,
            simplex: SimplexOptions::default(),
        }
    }
}

impl OptimizeOptions {
    /// Start grid disjoint from the default one.
    pub fn offset_grid() -> Self {
        Self {
            cell_offset: 0.25,
            ..Self::default()
        }
    }

    fn starts(&self) -> Vec<[f64; 4]> {
        let k = self.per_axis;
        let width = PI / k as f64;
        let pos: Vec<f64> = (0..k)
            .map(|i| -FRAC_PI_2 + (i as f64 + self.cell_offset) * width)
            .collect();
        let mut out = Vec::with_capacity(k.pow(4));
        for &a in &pos {
            for &b in &pos {
                for &ap in &pos {
                    for &bp in &pos {
                        out.push([a, b, ap, bp]);
                    }
                }
            }
        }
        out
    }
}

/// Maximizes `|B|` with the default start grid.
pub fn optimize_chsh(scenario: &Scenario) -> Result<BellResult> {
    optimize_chsh_with(scenario, &OptimizeOptions::default())
}

/// Maximizes `|B|` by minimizing `-B` and `+B` from every start.
pub fn optimize_chsh_with(scenario: &Scenario, opts: &OptimizeOptions) -> Result<BellResult> {
    let corr = scenario.correlator()?;
    optimize_correlator(&corr, scenario.engine, opts)
}

/// [`optimize_chsh_with`] on a prepared correlator.
pub fn optimize_correlator(corr: &Correlator, engine: Engine, opts: &OptimizeOptions) -> Result<BellResult> {
    let starts = opts.starts();
    let (best, path) = match CorrelationTensor::fit(corr) {
        Ok(tensor) => (multistart(|x| Ok(tensor.chsh(x)), &starts, opts)?, SearchPath::Tensor),
        Err(Error::NotBilinear(_)) => (
            multistart(|x| corr.chsh(&AngleSet::from_slice(x)), &starts, opts)?,
            SearchPath::Direct,
        ),
        Err(e) => return Err(e),
    };
    let angles = AngleSet::from_slice(&best.0).canonical();
    let b_signed = corr.chsh(&angles)?;
    Ok(BellResult {
        b_max: b_signed.abs(),
        b_signed,
        angles,
        engine_used: engine,
        path,
        n_restarts: 2 * starts.len(),
        converged: best.1,
    })
}

/// Best `(point, converged)` over all starts and both signs.
fn multistart(
    mut b: impl FnMut(&[f64]) -> Result<f64>,
    starts: &[[f64; 4]],
    opts: &OptimizeOptions,
) -> Result<(Vec<f64>, bool)> {
    let mut best: Option<(f64, Vec<f64>, bool)> = None;
    let mut failure: Option<Error> = None;
    for sign in [-1.0, 1.0] {
        for start in starts {
            let r = minimize_simplex_with(
                |x| match b(x) {
                    Ok(v) => sign * v,
                    Err(e) => {
                        failure.get_or_insert(e);
                        f64::NAN
                    }
                },
                start,
                &opts.simplex,
            );
            if let Some(e) = failure.take() {
                return Err(e);
            }
            let magnitude = -r.value;
            if best.as_ref().is_none_or(|(v, _, _)| magnitude > *v) {
                best = Some((magnitude, r.point, r.converged));
            }
        }
    }
    let (_, point, converged) = best.expect("at least one start");
    Ok((point, converged))
}

/// Maximum of `|B|` for the polarization state with loss after the rotations:
/// `2u^2 + 2 sqrt(2) (1-u)^2` with `u = (1-eta)^n`.
pub fn closed_form_bmax_p(n: usize, eta: f64) -> Result<f64> {
    check_range("eta", eta, 0.0, 1.0)?;
    let u = (1.0 - eta).powi(n as i32);
    Ok(2.0 * u * u + TSIRELSON * (1.0 - u).powi(2))
}

/// `eta*(n) = 1 - (3 - 2 sqrt 2)^(1/n)`.
pub fn closed_form_threshold_p(n: usize) -> f64 {
    1.0 - (3.0 - 2.0 * SQRT_2).powf(1.0 / n as f64)
}

/// Outcome of a threshold search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Threshold {
    /// Smallest `eta2` with `|B|_max > 2`, to within the tolerance.
    Found(f64),
    /// `|B|_max <= 2` even without detector loss.
    NoViolation { b_max_at_one: f64 },
}

/// Threshold with the pre-scan used to bracket it.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdResult {
    pub threshold: Threshold,
    /// `(eta2, |B|_max)` on the pre-scan grid.
    pub scan: Vec<(f64, f64)>,
    pub tol: f64,
}

impl ThresholdResult {
    pub fn eta_star(&self) -> Option<f64> {
        match self.threshold {
            Threshold::Found(e) => Some(e),
            Threshold::NoViolation { .. } => None,
        }
    }
}

/// Default threshold tolerance in `eta2`.
pub const DEFAULT_THRESHOLD_TOL: f64 = 1e-4;
/// Pre-scan points on `[0, 1]`.
pub const SCAN_POINTS: usize = 11;
/// Slack for the monotonicity check of the pre-scan.
pub const MONOTONE_SLACK: f64 = 1e-8;

/// Searches the detector efficiency `eta2` at which `|B|_max` crosses 2.
///
/// The pre-scan must cross 2 exactly once, and `|B|_max` must be
/// non-decreasing from the bracketing point up to `eta2 = 1`.
pub fn threshold_eta2(scenario: &Scenario, tol: f64) -> Result<ThresholdResult> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::OutOfRange {
            name: "tol",
            value: tol,
            min: 0.0,
            max: 1.0,
        });
    }
    let bmax = |eta2: f64| -> Result<f64> { Ok(optimize_chsh(&scenario.with_eta_after(eta2))?.b_max) };
    let mut scan = Vec::with_capacity(SCAN_POINTS);
    for i in 0..SCAN_POINTS {
        let eta2 = i as f64 / (SCAN_POINTS - 1) as f64;
        scan.push((eta2, bmax(eta2)?));
    }
    let top = scan[SCAN_POINTS - 1].1;
    if top <= 2.0 {
        return Ok(ThresholdResult {
            threshold: Threshold::NoViolation { b_max_at_one: top },
            scan,
            tol,
        });
    }
    let violates: Vec<bool> = scan.iter().map(|&(_, b)| b > 2.0).collect();
    let crossings = violates.windows(2).filter(|w| w[0] != w[1]).count();
    if violates[0] || crossings != 1 {
        return Err(Error::NotMonotone { scan });
    }
    let lo_idx = violates.iter().position(|&v| v).unwrap() - 1;
    if scan[lo_idx..].windows(2).any(|w| w[1].1 < w[0].1 - MONOTONE_SLACK) {
        return Err(Error::NotMonotone { scan });
    }
    let (lo, hi) = (scan[lo_idx].0, scan[lo_idx + 1].0);
    let mut failure = None;
    let root = bisect(
        |eta2| match bmax(eta2) {
            Ok(b) => b - 2.0,
            Err(e) => {
                failure.get_or_insert(e);
                0.0
            }
        },
        lo,
        hi,
        tol,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(ThresholdResult {
        threshold: Threshold::Found(root),
        scan,
        tol,
    })
}
