//! Cross-checks between the closed forms and the independent oracles.

use std::f64::consts::FRAC_PI_8;
use std::fmt;

use bellsim_core::bell::{Engine, Scenario};
use bellsim_core::fockspace::{analytic_ep, correlation_p};
use bellsim_core::numerics::{erf_c, erfi_c};
use bellsim_core::thermal::{cets_closed_form, cets_quadrature_with_loss, ThermalParams, DEFAULT_ORDER};
use bellsim_core::{LossPlacement, Result};
use num_complex::Complex64;

use crate::exit;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub max_dev: f64,
    pub tol: f64,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: max |dev| = {:.3e} (tol {:.0e})",
            self.status, self.name, self.max_dev, self.tol
        )?;
        if !self.detail.is_empty() {
            write!(f, "; {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed() {
            exit::NUMERICAL
        } else {
            exit::OK
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Corrupts one closed-form side so the harness can see its check fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    Fockspace,
    Dyad,
    EtsClosedForm,
    SpecialFunctions,
}

/// Largest deviation over `pairs`, or the first error.
fn max_dev(pairs: impl IntoIterator<Item = Result<(f64, f64)>>) -> std::result::Result<(f64, String), String> {
    let mut worst = (0.0_f64, String::new());
    for p in pairs {
        let (a, b) = p.map_err(|e| e.to_string())?;
        let d = (a - b).abs();
        if !d.is_finite() {
            return Err(format!("non-finite pair ({a}, {b})"));
        }
        if d > worst.0 {
            worst = (d, format!("worst pair {a:.12} vs {b:.12}"));
        }
    }
    Ok(worst)
}

fn strict(name: &'static str, tol: f64, dev: std::result::Result<(f64, String), String>) -> Check {
    match dev {
        Ok((max_dev, detail)) => Check {
            name,
            status: if max_dev < tol { Status::Pass } else { Status::Fail },
            max_dev,
            tol,
            detail,
        },
        Err(detail) => Check {
            name,
            status: Status::Fail,
            max_dev: f64::NAN,
            tol,
            detail,
        },
    }
}

const ANGLES: [f64; 5] = [-1.3, -0.6, 0.1, 0.8, 1.5];
const ETAS: [f64; 5] = [0.2, 0.4, 0.6, 0.8, 1.0];

fn check_fockspace(fault: Option<Fault>) -> Check {
    let bump = if fault == Some(Fault::Fockspace) { 1e-6 } else { 0.0 };
    let mut pairs = Vec::new();
    for n in 1..=4 {
        for &ta in &ANGLES {
            for &tb in &ANGLES {
                for &eta in &ETAS {
                    pairs.push((|| {
                        let fock = correlation_p(n, ta, tb, LossPlacement::after(eta)?)?;
                        Ok((fock, analytic_ep(n, ta, tb, eta)? + bump))
                    })());
                }
            }
        }
    }
    strict("fockspace-vs-closed-form", 1e-10, max_dev(pairs))
}

fn check_dyad(fault: Option<Fault>) -> Check {
    let bump = if fault == Some(Fault::Dyad) { 1e-4 } else { 0.0 };
    let angles = [-0.9, 0.2, 1.1];
    let losses = [(1.0, 1.0), (1.0, 0.7), (0.9, 0.8)];
    let mut pairs = Vec::new();
    for &alpha in &[0.5, 1.0] {
        for &(e1, e2) in &losses {
            let run = || -> Result<Vec<Result<(f64, f64)>>> {
                let s = Scenario::ecs(alpha, LossPlacement::new(e1, e2)?);
                let dyad = s.correlator()?;
                let fock = s.with_engine(Engine::Oracle).correlator()?;
                let mut out = Vec::new();
                for &ta in &angles {
                    for &tb in &angles {
                        out.push((|| Ok((dyad.eval(ta, tb)? + bump, fock.eval(ta, tb)?)))());
                    }
                }
                Ok(out)
            };
            match run() {
                Ok(v) => pairs.extend(v),
                Err(e) => pairs.push(Err(e)),
            }
        }
    }
    strict("dyad-vs-fock-oracle", 1e-6, max_dev(pairs))
}

const ETS_PROBES: [(f64, f64, f64); 3] = [(10.0, 5.0, 1.0), (1.001, 5.0, 1.0), (10.0, 3.0, 0.95)];
const ETS_ANGLES: [(f64, f64); 3] = [(0.0, 0.0), (0.4, -0.3), (2.0 * FRAC_PI_8, FRAC_PI_8)];

/// The thermal closed form against the quadrature. A finite disagreement is
/// a WARN, not a failure: the oracle is the reference.
fn check_ets_closed_form(fault: Option<Fault>) -> Check {
    const NAME: &str = "ets-closed-form-vs-quadrature";
    const TOL: f64 = 1e-3;
    let mut worst = (0.0_f64, String::new());
    for &(v, d, eta) in &ETS_PROBES {
        for &(ta, tb) in &ETS_ANGLES {
            let pair = (|| -> Result<(f64, f64)> {
                let p = ThermalParams::new(v, d)?;
                let mut cf = cets_closed_form(ta, tb, &p, eta)?;
                if fault == Some(Fault::EtsClosedForm) {
                    cf = f64::NAN;
                }
                let q = cets_quadrature_with_loss(ta, tb, &p, LossPlacement::new(eta, 1.0)?, DEFAULT_ORDER)?;
                Ok((cf, q.value))
            })();
            let (cf, q) = match pair {
                Ok(x) => x,
                Err(e) => {
                    return Check {
                        name: NAME,
                        status: Status::Fail,
                        max_dev: f64::NAN,
                        tol: TOL,
                        detail: e.to_string(),
                    }
                }
            };
            if !(cf.is_finite() && q.is_finite()) {
                return Check {
                    name: NAME,
                    status: Status::Fail,
                    max_dev: f64::NAN,
                    tol: TOL,
                    detail: format!("non-finite value at V = {v}, d = {d}: closed form {cf}, quadrature {q}"),
                };
            }
            let dev = (cf - q).abs();
            if dev > worst.0 {
                worst = (
                    dev,
                    format!(
                        "V = {v}, d = {d}, eta = {eta}, angles ({ta}, {tb}): closed form {cf:.6e}, quadrature {q:.6e}"
                    ),
                );
            }
        }
    }
    let status = if worst.0 <= TOL { Status::Pass } else { Status::Warn };
    let detail = if status == Status::Warn {
        format!("closed form disagrees, quadrature used downstream; {}", worst.1)
    } else {
        worst.1
    };
    Check {
        name: NAME,
        status,
        max_dev: worst.0,
        tol: TOL,
        detail,
    }
}

/// Raw quadrature normalization against the analytic `N_+`. Probabilities are
/// renormalized afterwards, so this bounds the integration error only.
fn check_ets_trace() -> Check {
    let pairs = ETS_PROBES.iter().map(|&(v, d, eta)| {
        let p = ThermalParams::new(v, d)?;
        let q = cets_quadrature_with_loss(0.3, -0.2, &p, LossPlacement::new(eta, 1.0)?, DEFAULT_ORDER)?;
        Ok((q.trace_error, 0.0))
    });
    strict("ets-quadrature-trace", 1e-5, max_dev(pairs))
}

/// Nearly pure thermal components reduce to the entangled coherent state.
fn check_ets_pure_limit() -> Check {
    let pairs = ETS_ANGLES.iter().map(|&(ta, tb)| {
        let ets = Scenario::ets(1.0001, 1.0, LossPlacement::lossless()).correlator()?;
        let ecs = Scenario::ecs(1.0, LossPlacement::lossless()).correlator()?;
        Ok((ets.eval(ta, tb)?, ecs.eval(ta, tb)?))
    });
    strict("ets-pure-limit-vs-ecs", 2e-3, max_dev(pairs))
}

/// Reference values from a 40-digit evaluation.
const ERF_REFERENCE: [(f64, f64, f64, f64); 4] = [
    (0.5, 0.0, 0.520_499_877_813_046_5, 0.0),
    (1.0, 0.0, 0.842_700_792_949_714_9, 0.0),
    (2.0, 0.0, 0.995_322_265_018_952_7, 0.0),
    (1.0, 1.0, 1.316_151_281_697_947_6, 0.190_453_469_237_834_7),
];

fn check_special_functions(fault: Option<Fault>) -> Check {
    let bump = if fault == Some(Fault::SpecialFunctions) {
        1e-10
    } else {
        0.0
    };
    let mut pairs = Vec::new();
    for &(x, y, re, im) in &ERF_REFERENCE {
        let z = Complex64::new(x, y);
        let e = erf_c(z);
        pairs.push(Ok((e.re + bump, re)));
        pairs.push(Ok((e.im, im)));
        // erfi(z) = -i erf(iz)
        let lhs = erfi_c(z);
        let rhs = -Complex64::i() * erf_c(Complex64::i() * z);
        pairs.push(Ok((lhs.re, rhs.re)));
        pairs.push(Ok((lhs.im, rhs.im)));
    }
    strict("erf-erfi-reference", 1e-13, max_dev(pairs))
}

/// Runs every check; `fault` corrupts one of them on purpose.
pub fn run_validate(fault: Option<Fault>) -> Report {
    Report {
        checks: vec![
            check_special_functions(fault),
            check_fockspace(fault),
            check_dyad(fault),
            check_ets_closed_form(fault),
            check_ets_trace(),
            check_ets_pure_limit(),
        ],
    }
}
