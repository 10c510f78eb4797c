//! Entangled thermal states
//! `rho = N_+ int int P(alpha) P(beta) (|alpha,beta> + |-alpha,-beta>)(h.c.)`
//! with displaced thermal weights `P(alpha) = 2/(pi(V-1)) exp(-2|alpha-d|^2/(V-1))`.
//!
//! Two evaluations of the sign correlation are provided: the closed
//! form [`cets_closed_form`] and a Gauss-Hermite integration of the
//! P-representation, [`cets_quadrature`], which applies the cat pipeline to
//! every sample. The integrand factorizes between the modes, so the oracle
//! integrates each mode over the complex plane separately.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::catstates::{dyad_loss_factor, finish_probabilities, homodyne_halfline_pair, SignProbabilities};
use crate::error::{check_range, Error, Result};
use crate::fockspace::LossPlacement;
use crate::numerics::{erf_c, erfi_c, gauss_hermite};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Variance `V` and displacement `d` of the thermal components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalParams {
    pub v: f64,
    pub d: f64,
}

impl ThermalParams {
    pub fn new(v: f64, d: f64) -> Result<Self> {
        check_range("V", v, 1.0, f64::MAX)?;
        if !(d > 0.0 && d.is_finite()) {
            return Err(Error::OutOfRange {
                name: "d",
                value: d,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        Ok(Self { v, d })
    }

    /// From the mean photon number: `V = 2(nbar - d^2) + 1`.
    pub fn from_nbar(nbar: f64, d: f64) -> Result<Self> {
        Self::new(2.0 * (nbar - d * d) + 1.0, d)
    }

    /// Mean photon number per mode, `d^2 + (V-1)/2`.
    pub fn nbar(&self) -> f64 {
        self.d * self.d + 0.5 * (self.v - 1.0)
    }

    /// `N_+ = [2(1 + e^{-4d^2/V}/V^2)]^{-1}`.
    pub fn n_plus(&self) -> f64 {
        0.5 / (1.0 + (-4.0 * self.d * self.d / self.v).exp() / (self.v * self.v))
    }
}

/// `eta = exp(-gamma t)`.
pub fn gamma_to_eta(gamma_t: f64) -> Result<f64> {
    check_range("gamma_t", gamma_t, 0.0, f64::MAX)?;
    Ok((-gamma_t).exp())
}

/// `s(theta)`, with `s(0) = +1`.
pub fn sign(theta: f64) -> f64 {
    if theta < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// `ln h(theta) = 2(d^4 + theta^2)/(d^2 V)`.
pub fn log_h(theta: f64, p: &ThermalParams) -> f64 {
    2.0 * (p.d.powi(4) + theta * theta) / (p.d * p.d * p.v)
}

/// `h(theta)`; may overflow, use [`log_h`] in products.
pub fn h(theta: f64, p: &ThermalParams) -> f64 {
    log_h(theta, p).exp()
}

/// `g(theta) = Erfi[sqrt(2) eta theta / (d sqrt(V^2 - eta^2 V (V-1)))]`.
pub fn g(theta: f64, p: &ThermalParams, eta: f64) -> Complex64 {
    let den = p.d * (p.v * p.v - eta * eta * p.v * (p.v - 1.0)).sqrt();
    erfi_c(Complex64::new(2f64.sqrt() * eta * theta / den, 0.0))
}

/// `f_+-(theta) = Erf[sqrt(2) eta (d^2 +- i V theta) / (d sqrt(1 + eta^2 (V-1)))]`.
pub fn f_pm(theta: f64, p: &ThermalParams, eta: f64, plus: bool) -> Complex64 {
    let s = if plus { 1.0 } else { -1.0 };
    let den = p.d * (1.0 + eta * eta * (p.v - 1.0)).sqrt();
    erf_c(2f64.sqrt() * eta * Complex64::new(p.d * p.d, s * p.v * theta) / den)
}

/// `ln V1 = -ln 8 - ln(1 + V^2 e^{4d^2/V})`, evaluated without overflow.
pub fn log_v1(p: &ThermalParams) -> f64 {
    let x = 4.0 * p.d * p.d / p.v + 2.0 * p.v.ln();
    let softplus = if x > 30.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    };
    -(8f64.ln()) - softplus
}

/// `ln V2 = -4i(theta_a + theta_b) - 2(1+V^2)(theta_a^2 + theta_b^2)/(d^2 V)`.
pub fn log_v2(theta_a: f64, theta_b: f64, p: &ThermalParams) -> Complex64 {
    Complex64::new(
        -2.0 * (1.0 + p.v * p.v) * (theta_a * theta_a + theta_b * theta_b) / (p.d * p.d * p.v),
        -4.0 * (theta_a + theta_b),
    )
}

/// `ln Q = ln 8 + 4i theta_b + 2V(theta_a^2 + theta_b^2)/d^2`.
pub fn log_q(theta_a: f64, theta_b: f64, p: &ThermalParams) -> Complex64 {
    Complex64::new(
        8f64.ln() + 2.0 * p.v * (theta_a * theta_a + theta_b * theta_b) / (p.d * p.d),
        4.0 * theta_b,
    )
}

/// Helper values at one angle pair. Exponential helpers are stored as logarithms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtsHelperSet {
    pub s_a: f64,
    pub s_b: f64,
    pub log_h_a: f64,
    pub log_h_b: f64,
    pub g_a: Complex64,
    pub g_b: Complex64,
    pub log_v1: f64,
    pub log_v2: Complex64,
    pub log_q: Complex64,
    pub f_plus_a: Complex64,
    pub f_minus_a: Complex64,
    pub f_plus_b: Complex64,
    pub f_minus_b: Complex64,
}

impl EtsHelperSet {
    pub fn evaluate(theta_a: f64, theta_b: f64, p: &ThermalParams, eta: f64) -> Result<Self> {
        let set = Self {
            s_a: sign(theta_a),
            s_b: sign(theta_b),
            log_h_a: log_h(theta_a, p),
            log_h_b: log_h(theta_b, p),
            g_a: g(theta_a, p, eta),
            g_b: g(theta_b, p, eta),
            log_v1: log_v1(p),
            log_v2: log_v2(theta_a, theta_b, p),
            log_q: log_q(theta_a, theta_b, p),
            f_plus_a: f_pm(theta_a, p, eta, true),
            f_minus_a: f_pm(theta_a, p, eta, false),
            f_plus_b: f_pm(theta_b, p, eta, true),
            f_minus_b: f_pm(theta_b, p, eta, false),
        };
        let finite = |z: Complex64| z.re.is_finite() && z.im.is_finite();
        let checks: [(&'static str, f64, bool); 9] = [
            ("h", theta_a, set.log_h_a.is_finite()),
            ("h", theta_b, set.log_h_b.is_finite()),
            ("g", theta_a, finite(set.g_a)),
            ("g", theta_b, finite(set.g_b)),
            ("V1", theta_a, set.log_v1.is_finite()),
            ("V2", theta_a, finite(set.log_v2)),
            ("Q", theta_b, finite(set.log_q)),
            ("f", theta_a, finite(set.f_plus_a) && finite(set.f_minus_a)),
            ("f", theta_b, finite(set.f_plus_b) && finite(set.f_minus_b)),
        ];
        for (helper, theta, ok) in checks {
            if !ok {
                return Err(Error::HelperOverflow { helper, theta });
            }
        }
        Ok(set)
    }
}

/// Closed-form correlation with its discarded imaginary part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormValue {
    pub value: f64,
    pub imag_residue: f64,
}

/// One product term: `exp(log_part) * factor`, with the helper that carries
/// the largest exponent named for error reports.
fn term(log_part: Complex64, factor: Complex64, dominant: &'static str, theta: f64) -> Result<Complex64> {
    if factor == Complex64::default() {
        return Ok(factor);
    }
    let v = log_part.exp() * factor;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::HelperOverflow {
            helper: dominant,
            theta,
        })
    }
}

/// Closed-form correlation `C(theta_a, theta_b)` with `eta` in every `f` and `g`.
///
/// Each of the four products in the expansion has its exponential helpers
/// summed in log space and is exponentiated once.
pub fn cets_closed_form_diag(theta_a: f64, theta_b: f64, p: &ThermalParams, eta: f64) -> Result<ClosedFormValue> {
    if !theta_a.is_finite() || !theta_b.is_finite() {
        return Err(Error::NonFinite("cets_closed_form"));
    }
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(Error::OutOfRange {
            name: "eta",
            value: eta,
            min: 0.0,
            max: 1.0,
        });
    }
    let hs = EtsHelperSet::evaluate(theta_a, theta_b, p, eta)?;
    let (d2, v) = (p.d * p.d, p.v);
    let e4a = Complex64::new(0.0, 4.0 * theta_a);
    let e8a = Complex64::new(0.0, 8.0 * theta_a);
    let e8b = Complex64::new(0.0, 8.0 * theta_b).exp();
    let base = hs.log_v1 + hs.log_v2;

    let t1 = term(base + e4a + hs.log_q, hs.g_a * hs.g_b * hs.s_b, "Q", theta_b)?;
    let t2 = term(
        base + e4a + 2.0 * d2 / v + hs.log_v1 + hs.log_h_b,
        I * hs.g_a * (hs.f_minus_b - e8b * hs.f_plus_b),
        "h",
        theta_b,
    )?;
    let cross = Complex64::new(2.0 * theta_b * v * theta_b / d2, 4.0 * theta_b);
    let t3 = term(
        base + hs.log_v1 + hs.log_h_a + cross,
        I * hs.g_b * hs.s_b * (hs.f_minus_a - e8b * hs.f_plus_a),
        "h",
        theta_a,
    )?;
    let t4 = term(
        base + 2.0 * hs.log_v1 + hs.log_h_a + hs.log_h_b + e8a,
        4.0 * (hs.f_minus_b * hs.f_plus_a + hs.f_minus_a * hs.f_plus_b),
        "h",
        theta_a,
    )?;
    let sum = t1 + t2 + t3 + t4;
    if !sum.re.is_finite() {
        return Err(Error::HelperOverflow {
            helper: "h",
            theta: theta_a,
        });
    }
    Ok(ClosedFormValue {
        value: sum.re,
        imag_residue: sum.im,
    })
}

/// Real part of [`cets_closed_form_diag`].
pub fn cets_closed_form(theta_a: f64, theta_b: f64, p: &ThermalParams, eta: f64) -> Result<f64> {
    cets_closed_form_diag(theta_a, theta_b, p, eta).map(|c| c.value)
}

/// Accepted quadrature orders.
pub const MIN_ORDER: usize = 8;
pub const MAX_ORDER: usize = 48;
/// Order increment used for the convergence check.
pub const ORDER_STEP: usize = 8;
/// Largest accepted change of the correlation between `order` and `order + 8`.
pub const CONVERGENCE_TOL: f64 = 1e-4;

/// Angle-independent single-mode integrals for a fixed `(V, d, eta1, eta2)`.
///
/// `m[k][s][s'][t][t']` is the integral over the thermal weight of the sign-`k`
/// half-line probability of `L2(|tA><t'A|)` times the pre-loss factor of
/// `|s alpha><s' alpha|`, with `A = sqrt(eta1) alpha`. The rotation enters
/// only through the coefficients that carry `(s, s')` to `(t, t')`.
#[derive(Debug, Clone)]
pub struct EtsModeTable {
    order: usize,
    n_plus: f64,
    m: [[[[[Complex64; 2]; 2]; 2]; 2]; 2],
}

/// Index 0 is `+`, 1 is `-`.
const SIGNS: [f64; 2] = [1.0, -1.0];

impl EtsModeTable {
    pub fn new(p: &ThermalParams, loss: LossPlacement, order: usize) -> Result<Self> {
        loss.validate()?;
        let rule = gauss_hermite(order)?;
        let sigma = (0.5 * (p.v - 1.0)).sqrt();
        let (e1, e2) = (loss.eta_before, loss.eta_after);
        let mut m = [[[[[Complex64::default(); 2]; 2]; 2]; 2]; 2];
        // fixed summation order: outer x, inner y
        for (xi, wx) in rule.nodes.iter().zip(&rule.weights) {
            for (yi, wy) in rule.nodes.iter().zip(&rule.weights) {
                let w = wx * wy / PI;
                let alpha = Complex64::new(p.d + sigma * xi, sigma * yi);
                let a = alpha * e1.sqrt();
                let mut k_tt = [[[Complex64::default(); 2]; 2]; 2];
                for (ti, t) in SIGNS.iter().enumerate() {
                    for (tpi, tp) in SIGNS.iter().enumerate() {
                        let (f2, ket, bra) = dyad_loss_factor(a * *t, a * *tp, e2);
                        let (ip, im) = homodyne_halfline_pair(ket, bra);
                        k_tt[0][ti][tpi] = f2 * ip;
                        k_tt[1][ti][tpi] = f2 * im;
                    }
                }
                for (si, s) in SIGNS.iter().enumerate() {
                    for (spi, sp) in SIGNS.iter().enumerate() {
                        let (f1, _, _) = dyad_loss_factor(alpha * *s, alpha * *sp, e1);
                        let wf = f1 * w;
                        for k in 0..2 {
                            for ti in 0..2 {
                                for tpi in 0..2 {
                                    m[k][si][spi][ti][tpi] += wf * k_tt[k][ti][tpi];
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(Self {
            order,
            n_plus: p.n_plus(),
            m,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `J[k][s][s']` for a rotation by `theta` on this mode.
    fn mode_weights(&self, theta: f64) -> [[[Complex64; 2]; 2]; 2] {
        let (sin, cos) = theta.sin_cos();
        // r[s][t]: amplitude of |tA> in U|sA>
        let r = |s: usize, t: usize| {
            if s == t {
                Complex64::new(cos, 0.0)
            } else {
                Complex64::new(0.0, sin)
            }
        };
        let mut j = [[[Complex64::default(); 2]; 2]; 2];
        for (k, jk) in j.iter_mut().enumerate() {
            for s in 0..2 {
                for sp in 0..2 {
                    let mut acc = Complex64::default();
                    for t in 0..2 {
                        for tp in 0..2 {
                            acc += r(s, t) * r(sp, tp).conj() * self.m[k][s][sp][t][tp];
                        }
                    }
                    jk[s][sp] = acc;
                }
            }
        }
        j
    }

    /// Raw sums `N_+ sum_{s,s'} J_k^a J_l^b` in the order `++, +-, -+, --`.
    pub fn raw_sign_sums(&self, theta_a: f64, theta_b: f64) -> [Complex64; 4] {
        let ja = self.mode_weights(theta_a);
        let jb = self.mode_weights(theta_b);
        let mut raw = [Complex64::default(); 4];
        for (idx, (k, l)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
            for s in 0..2 {
                for sp in 0..2 {
                    raw[idx] += ja[k][s][sp] * jb[l][s][sp];
                }
            }
            raw[idx] *= self.n_plus;
        }
        raw
    }

    /// Sign probabilities renormalized to the numerical trace, with the trace.
    pub fn sign_probs(&self, theta_a: f64, theta_b: f64) -> Result<(SignProbabilities, f64)> {
        let raw = self.raw_sign_sums(theta_a, theta_b);
        let trace: Complex64 = raw.iter().sum();
        if !(trace.re.is_finite() && trace.re > 0.0) {
            return Err(Error::Normalization(trace.re));
        }
        let probs = finish_probabilities(raw.map(|z| z / trace.re))?;
        Ok((probs, trace.re))
    }

    pub fn correlation(&self, theta_a: f64, theta_b: f64) -> Result<f64> {
        Ok(self.sign_probs(theta_a, theta_b)?.0.correlation())
    }
}

/// Quadrature correlation with its convergence diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureValue {
    pub value: f64,
    /// Result at `order + 8`.
    pub refined: f64,
    /// Order of the accepted value.
    pub order: usize,
    /// Numerical trace of the assembled state before renormalization, minus 1.
    pub trace_error: f64,
    pub probs: SignProbabilities,
}

/// Tables at `order, order + 8, ...` built on demand. Each evaluation compares
/// consecutive orders and moves up the ladder until they agree, stopping after
/// comparing [`MAX_ORDER`] with `MAX_ORDER + 8`.
#[derive(Debug, Clone)]
pub struct EtsOracle {
    params: ThermalParams,
    loss: LossPlacement,
    start: usize,
    tables: Vec<OnceLock<EtsModeTable>>,
}

impl EtsOracle {
    pub fn new(p: &ThermalParams, loss: LossPlacement, order: usize) -> Result<Self> {
        check_range("order", order as f64, MIN_ORDER as f64, MAX_ORDER as f64)?;
        loss.validate()?;
        let rungs = (MAX_ORDER - order) / ORDER_STEP + 2;
        Ok(Self {
            params: *p,
            loss,
            start: order,
            tables: (0..rungs).map(|_| OnceLock::new()).collect(),
        })
    }

    fn table(&self, rung: usize) -> Result<&EtsModeTable> {
        if let Some(t) = self.tables[rung].get() {
            return Ok(t);
        }
        let t = EtsModeTable::new(&self.params, self.loss, self.start + rung * ORDER_STEP)?;
        Ok(self.tables[rung].get_or_init(|| t))
    }

    pub fn evaluate(&self, theta_a: f64, theta_b: f64) -> Result<QuadratureValue> {
        let mut last = None;
        for rung in 0..self.tables.len() - 1 {
            let coarse = self.table(rung)?;
            let (probs, trace) = coarse.sign_probs(theta_a, theta_b)?;
            let value = probs.correlation();
            let refined = self.table(rung + 1)?.correlation(theta_a, theta_b)?;
            if (value - refined).abs() < CONVERGENCE_TOL {
                return Ok(QuadratureValue {
                    value,
                    refined,
                    order: coarse.order,
                    trace_error: trace - 1.0,
                    probs,
                });
            }
            last = Some(Error::QuadratureNotConverged {
                order: coarse.order,
                value,
                next_order: coarse.order + ORDER_STEP,
                next_value: refined,
            });
        }
        Err(last.expect("at least two rungs"))
    }

    pub fn correlation(&self, theta_a: f64, theta_b: f64) -> Result<f64> {
        self.evaluate(theta_a, theta_b).map(|q| q.value)
    }
}

/// Gauss-Hermite evaluation of the correlation with pre-rotation loss `eta`,
/// starting at `order` (see [`EtsOracle`]).
pub fn cets_quadrature(theta_a: f64, theta_b: f64, p: &ThermalParams, eta: f64, order: usize) -> Result<f64> {
    let loss = LossPlacement::new(eta, 1.0)?;
    EtsOracle::new(p, loss, order)?.correlation(theta_a, theta_b)
}

/// [`cets_quadrature`] with arbitrary loss placement and full diagnostics.
pub fn cets_quadrature_with_loss(
    theta_a: f64,
    theta_b: f64,
    p: &ThermalParams,
    loss: LossPlacement,
    order: usize,
) -> Result<QuadratureValue> {
    EtsOracle::new(p, loss, order)?.evaluate(theta_a, theta_b)
}

/// Default oracle order.
pub const DEFAULT_ORDER: usize = 32;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catstates::{
        cat_rotation_complex, correlation_ecs, dyad_loss, raw_sign_sums, DyadTerm, GaussianDyadState,
    };
    use crate::fockspace::Side;
    use proptest::prelude::*;

    fn params(v: f64, d: f64) -> ThermalParams {
        ThermalParams::new(v, d).unwrap()
    }

    #[test]
    fn params_and_nbar() {
        let p = ThermalParams::from_nbar(30.0, 5.0).unwrap();
        assert!((p.v - 11.0).abs() < 1e-12);
        assert!((p.nbar() - 30.0).abs() < 1e-12);
        assert!(ThermalParams::new(0.5, 1.0).is_err());
        assert!(ThermalParams::new(2.0, 0.0).is_err());
    }

    #[test]
    fn gamma_mapping() {
        assert_eq!(gamma_to_eta(0.0).unwrap(), 1.0);
        assert!((gamma_to_eta(std::f64::consts::LN_2).unwrap() - 0.5).abs() < 1e-15);
        assert!(gamma_to_eta(-0.1).is_err());
    }

    #[test]
    fn sign_of_zero() {
        assert_eq!(sign(0.0), 1.0);
        assert_eq!(sign(-0.2), -1.0);
    }

    #[test]
    fn log_v1_matches_direct_form() {
        let p = params(10.0, 2.0);
        let direct = (1.0 / 8.0) / (1.0 + p.v * p.v * (4.0 * p.d * p.d / p.v).exp());
        assert!((log_v1(&p) - direct.ln()).abs() < 1e-13);
        assert!(log_v1(&params(1.001, 40.0)).is_finite());
    }

    #[test]
    fn large_displacement_stays_finite() {
        let p = params(1.001, 40.0);
        let c = cets_closed_form_diag(0.3, -0.2, &p, 0.9).unwrap();
        assert!(c.value.is_finite() && c.imag_residue.is_finite());
    }

    #[test]
    fn helpers_reject_nan() {
        let p = params(10.0, 5.0);
        assert!(cets_closed_form(f64::NAN, 0.1, &p, 1.0).is_err());
        assert!(cets_closed_form(0.1, 0.1, &p, 0.0).is_err());
    }

    fn direct_4d(theta_a: f64, theta_b: f64, p: &ThermalParams, loss: LossPlacement, order: usize) -> f64 {
        // per-sample two-mode dyad pipeline on the full tensor-product rule
        let rule = gauss_hermite(order).unwrap();
        let sigma = (0.5 * (p.v - 1.0)).sqrt();
        let pts: Vec<(Complex64, f64)> = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .flat_map(|(x, wx)| {
                rule.nodes
                    .iter()
                    .zip(&rule.weights)
                    .map(move |(y, wy)| (Complex64::new(p.d + sigma * x, sigma * y), wx * wy / PI))
            })
            .collect();
        let mut raw = [Complex64::default(); 4];
        for &(alpha, wa) in &pts {
            for &(beta, wb) in &pts {
                let mut terms = Vec::new();
                for s in SIGNS {
                    for sp in SIGNS {
                        terms.push(DyadTerm {
                            coeff: Complex64::new(p.n_plus() * wa * wb, 0.0),
                            ket_a: alpha * s,
                            bra_a: alpha * sp,
                            ket_b: beta * s,
                            bra_b: beta * sp,
                        });
                    }
                }
                let mut st = GaussianDyadState::new(terms).unwrap();
                st = dyad_loss(&st, Side::A, loss.eta_before).unwrap();
                st = dyad_loss(&st, Side::B, loss.eta_before).unwrap();
                let r = loss.eta_before.sqrt();
                st = cat_rotation_complex(&st, Side::A, theta_a, alpha * r).unwrap();
                st = cat_rotation_complex(&st, Side::B, theta_b, beta * r).unwrap();
                st = dyad_loss(&st, Side::A, loss.eta_after).unwrap();
                st = dyad_loss(&st, Side::B, loss.eta_after).unwrap();
                for (acc, v) in raw.iter_mut().zip(raw_sign_sums(&st)) {
                    *acc += v;
                }
            }
        }
        let total: Complex64 = raw.iter().sum();
        ((raw[0] + raw[3] - raw[1] - raw[2]) / total).re
    }

    #[test]
    fn factored_table_equals_direct_sample_pipeline() {
        let p = params(3.0, 1.2);
        let loss = LossPlacement::new(0.8, 0.9).unwrap();
        let table = EtsModeTable::new(&p, loss, 6).unwrap();
        for &(ta, tb) in &[(0.3, -0.4), (1.0, 0.2)] {
            let e = table.correlation(ta, tb).unwrap();
            let d = direct_4d(ta, tb, &p, loss, 6);
            assert!((e - d).abs() < 1e-12, "{e} vs {d}");
        }
    }

    #[test]
    fn pure_limit_reproduces_ecs() {
        let p = params(1.0001, 1.0);
        for &(ta, tb) in &[(0.0, 0.0), (0.4, -0.2), (1.1, 0.7)] {
            let q = cets_quadrature(ta, tb, &p, 1.0, 16).unwrap();
            let e = correlation_ecs(1.0, ta, tb, LossPlacement::lossless()).unwrap();
            assert!((q - e).abs() < 2e-3, "{q} vs {e}");
        }
    }

    #[test]
    fn normalization_matches_n_plus() {
        let p = params(10.0, 5.0);
        let q = cets_quadrature_with_loss(0.3, 0.1, &p, LossPlacement::new(0.9, 1.0).unwrap(), 24).unwrap();
        assert!(q.trace_error.abs() < 1e-6, "{}", q.trace_error);
        assert!((q.probs.total() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quadrature_differences_shrink_with_order() {
        let p = params(10.0, 5.0);
        let loss = LossPlacement::new(0.9, 1.0).unwrap();
        let vals: Vec<f64> = [8, 16, 24, 32]
            .iter()
            .map(|&o| EtsModeTable::new(&p, loss, o).unwrap().correlation(0.1, 0.05).unwrap())
            .collect();
        let d1 = (vals[1] - vals[0]).abs();
        let d2 = (vals[2] - vals[1]).abs();
        let d3 = (vals[3] - vals[2]).abs();
        assert!(d2 <= d1 && (d3 <= d2 || d3 < 1e-13), "{vals:?}");
    }

    #[test]
    fn order_ladder_climbs_until_converged() {
        let p = params(10.0, 2.0);
        let o = EtsOracle::new(&p, LossPlacement::lossless(), 32).unwrap();
        let q = o.evaluate(0.0, 0.0).unwrap();
        assert!(q.order > 32);
        assert!((q.value - q.refined).abs() < CONVERGENCE_TOL);
        let top = EtsOracle::new(&params(30.0, 3.0), LossPlacement::lossless(), MAX_ORDER).unwrap();
        assert!(matches!(
            top.evaluate(0.0, 0.0),
            Err(Error::QuadratureNotConverged {
                order: 48,
                next_order: 56,
                ..
            })
        ));
    }

    #[test]
    fn order_out_of_range() {
        let p = params(10.0, 5.0);
        assert!(cets_quadrature(0.1, 0.1, &p, 1.0, 7).is_err());
        assert!(cets_quadrature(0.1, 0.1, &p, 1.0, 49).is_err());
    }

    #[test]
    fn quadrature_symmetric_in_angles() {
        let p = params(10.0, 3.0);
        let o = EtsOracle::new(&p, LossPlacement::new(0.95, 0.8).unwrap(), DEFAULT_ORDER).unwrap();
        let e1 = o.correlation(0.2, -0.7).unwrap();
        let e2 = o.correlation(-0.7, 0.2).unwrap();
        assert!((e1 - e2).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn f_plus_is_conjugate_of_f_minus(theta in -3.0f64..3.0, v in 1.0f64..20.0, d in 0.5f64..10.0, eta in 0.05f64..=1.0) {
            let p = params(v, d);
            let fp = f_pm(theta, &p, eta, true);
            let fm = f_pm(theta, &p, eta, false);
            // erf grows like exp(Im(z)^2); overflow is reported elsewhere
            prop_assume!(fp.is_finite());
            prop_assert_eq!(fp, fm.conj());
        }

        #[test]
        fn g_odd_and_real(theta in -3.0f64..3.0, v in 1.0f64..20.0, d in 0.5f64..10.0, eta in 0.05f64..=1.0) {
            let p = params(v, d);
            let gp = g(theta, &p, eta);
            let gm = g(-theta, &p, eta);
            prop_assert!((gp + gm).norm() <= 1e-14 * gp.norm().max(1.0));
            prop_assert_eq!(gp.im, 0.0);
        }

        #[test]
        fn h_even(theta in -3.0f64..3.0, v in 1.0f64..20.0, d in 0.5f64..10.0) {
            let p = params(v, d);
            prop_assert_eq!(log_h(theta, &p), log_h(-theta, &p));
        }

        #[test]
        fn oracle_probabilities_normalized(ta in -1.6f64..1.6, tb in -1.6f64..1.6, e1 in 0.3f64..=1.0, e2 in 0.0f64..=1.0) {
            let p = params(4.0, 2.0);
            let table = EtsModeTable::new(&p, LossPlacement::new(e1, e2).unwrap(), 16).unwrap();
            let (probs, trace) = table.sign_probs(ta, tb).unwrap();
            prop_assert!((trace - 1.0).abs() < 1e-6);
            prop_assert!((probs.total() - 1.0).abs() < 1e-12);
            prop_assert!(probs.correlation().abs() <= 1.0 + 1e-12);
        }
    }
}
