//! Entangled coherent states `N (|alpha, alpha> + |-alpha, -alpha>)` held as
//! sums of two-mode coherent-state dyads.
//!
//! Pure loss maps a dyad to a scaled dyad with shrunk amplitudes, and the cat
//! rotation maps the span of `{|A>, |-A>}` into itself, so the whole pipeline
//! stays exact. Homodyne sign probabilities of a dyad are Gaussian half-line
//! integrals. [`fock_oracle_ecs`] repeats the pipeline in a truncated number
//! basis for validation.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{check_range, Error, Result};
use crate::fockspace::{LossPlacement, Side};
use crate::numerics::w;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// `coeff |ket_a><bra_a| (x) |ket_b><bra_b|` with coherent-state kets and bras.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DyadTerm {
    pub coeff: Complex64,
    pub ket_a: Complex64,
    pub bra_a: Complex64,
    pub ket_b: Complex64,
    pub bra_b: Complex64,
}

impl DyadTerm {
    fn amplitudes(&self, side: Side) -> (Complex64, Complex64) {
        match side {
            Side::A => (self.ket_a, self.bra_a),
            Side::B => (self.ket_b, self.bra_b),
        }
    }

    fn with_amplitudes(&self, side: Side, coeff: Complex64, ket: Complex64, bra: Complex64) -> Self {
        let mut t = *self;
        t.coeff = coeff;
        match side {
            Side::A => {
                t.ket_a = ket;
                t.bra_a = bra;
            }
            Side::B => {
                t.ket_b = ket;
                t.bra_b = bra;
            }
        }
        t
    }

    /// `Tr` of the dyad.
    pub fn trace(&self) -> Complex64 {
        self.coeff * overlap(self.bra_a, self.ket_a) * overlap(self.bra_b, self.ket_b)
    }

    fn adjoint(&self) -> Self {
        Self {
            coeff: self.coeff.conj(),
            ket_a: self.bra_a,
            bra_a: self.ket_a,
            ket_b: self.bra_b,
            bra_b: self.ket_b,
        }
    }

    fn key(&self) -> [u64; 8] {
        let bits = |z: Complex64| [(z.re + 0.0).to_bits(), (z.im + 0.0).to_bits()];
        let [a, b] = bits(self.ket_a);
        let [c, d] = bits(self.bra_a);
        let [e, f] = bits(self.ket_b);
        let [g, h] = bits(self.bra_b);
        [a, b, c, d, e, f, g, h]
    }
}

/// Two-mode operator as a sum of coherent-state dyads. Terms with identical
/// amplitudes are merged.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianDyadState {
    terms: Vec<DyadTerm>,
}

impl GaussianDyadState {
    pub fn new(terms: Vec<DyadTerm>) -> Result<Self> {
        for t in &terms {
            let all = [t.coeff, t.ket_a, t.bra_a, t.ket_b, t.bra_b];
            if all.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::NonFinite("GaussianDyadState::new"));
            }
        }
        Ok(Self::merged(terms))
    }

    /// `|0,0><0,0|`.
    pub fn vacuum() -> Self {
        let z = Complex64::default();
        Self {
            terms: vec![DyadTerm {
                coeff: Complex64::new(1.0, 0.0),
                ket_a: z,
                bra_a: z,
                ket_b: z,
                bra_b: z,
            }],
        }
    }

    fn merged(terms: Vec<DyadTerm>) -> Self {
        let mut map: BTreeMap<[u64; 8], DyadTerm> = BTreeMap::new();
        for t in terms {
            map.entry(t.key()).and_modify(|e| e.coeff += t.coeff).or_insert(t);
        }
        Self {
            terms: map.into_values().filter(|t| t.coeff.norm() > 0.0).collect(),
        }
    }

    pub fn terms(&self) -> &[DyadTerm] {
        &self.terms
    }

    pub fn trace(&self) -> Complex64 {
        self.terms.iter().map(DyadTerm::trace).sum()
    }

    /// Largest mismatch between a term and the conjugate of its adjoint partner.
    pub fn hermiticity_error(&self) -> f64 {
        let map: BTreeMap<_, _> = self.terms.iter().map(|t| (t.key(), t.coeff)).collect();
        self.terms
            .iter()
            .map(|t| {
                let partner = t.adjoint();
                let c = map.get(&partner.key()).copied().unwrap_or_default();
                (c - partner.coeff).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// `<bra|ket>` for coherent states.
pub fn overlap(bra: Complex64, ket: Complex64) -> Complex64 {
    log_overlap(bra, ket).exp()
}

fn log_overlap(bra: Complex64, ket: Complex64) -> Complex64 {
    -0.5 * (ket.norm_sqr() + bra.norm_sqr()) + bra.conj() * ket
}

/// `N^2 (|a,a> + |-a,-a>)(<a,a| + <-a,-a|)` with `N^2 = 1/(2(1 + e^{-4a^2}))`.
pub fn make_ecs(alpha: f64) -> Result<GaussianDyadState> {
    if !(alpha > 0.0 && alpha <= 4.0) {
        return Err(Error::OutOfRange {
            name: "alpha",
            value: alpha,
            min: 0.0,
            max: 4.0,
        });
    }
    let n2 = ecs_norm_sq(alpha);
    let mut terms = Vec::with_capacity(4);
    for s in [1.0, -1.0] {
        for sp in [1.0, -1.0] {
            let k = Complex64::new(s * alpha, 0.0);
            let b = Complex64::new(sp * alpha, 0.0);
            terms.push(DyadTerm {
                coeff: Complex64::new(n2, 0.0),
                ket_a: k,
                bra_a: b,
                ket_b: k,
                bra_b: b,
            });
        }
    }
    Ok(GaussianDyadState::merged(terms))
}

/// `N^2 = [2(1 + e^{-4 alpha^2})]^{-1}`.
pub fn ecs_norm_sq(alpha: f64) -> f64 {
    0.5 / (1.0 + (-4.0 * alpha * alpha).exp())
}

/// Pure loss on one coherent dyad: returns the scalar factor and the new amplitudes.
pub fn dyad_loss_factor(ket: Complex64, bra: Complex64, eta: f64) -> (Complex64, Complex64, Complex64) {
    let factor = (-(1.0 - eta) * 0.5 * (ket.norm_sqr() + bra.norm_sqr() - 2.0 * bra.conj() * ket)).exp();
    let s = eta.sqrt();
    (factor, ket * s, bra * s)
}

/// Pure-loss channel of transmissivity `eta` on one mode.
pub fn dyad_loss(state: &GaussianDyadState, side: Side, eta: f64) -> Result<GaussianDyadState> {
    check_range("eta", eta, 0.0, 1.0)?;
    if eta == 1.0 {
        return Ok(state.clone());
    }
    let terms = state
        .terms
        .iter()
        .map(|t| {
            let (ket, bra) = t.amplitudes(side);
            let (f, k, b) = dyad_loss_factor(ket, bra, eta);
            t.with_amplitudes(side, t.coeff * f, k, b)
        })
        .collect();
    Ok(GaussianDyadState::merged(terms))
}

/// Relative tolerance for recognising `+-basis` amplitudes.
const AMPLITUDE_TOL: f64 = 1e-9;

/// Sign `s` with `z = s * basis`, or `None`.
fn basis_sign(z: Complex64, basis: Complex64) -> Option<f64> {
    let tol = AMPLITUDE_TOL * basis.norm().max(1.0);
    if (z - basis).norm() <= tol {
        Some(1.0)
    } else if (z + basis).norm() <= tol {
        Some(-1.0)
    } else {
        None
    }
}

/// Rotation `exp(i theta X)` on one mode, where `X = |e><e| - |o><o|` in
/// terms of the normalized even and odd cats built from `{|A>, |-A>}` with
/// `A = basis_amp`. On that span it acts as
/// `|+-A> -> cos(theta) |+-A> + i sin(theta) |-+A>` for any overlap `<A|-A>`.
pub fn cat_rotation(state: &GaussianDyadState, side: Side, theta: f64, basis_amp: f64) -> Result<GaussianDyadState> {
    cat_rotation_complex(state, side, theta, Complex64::new(basis_amp, 0.0))
}

/// [`cat_rotation`] for a complex basis amplitude.
pub fn cat_rotation_complex(
    state: &GaussianDyadState,
    side: Side,
    theta: f64,
    basis: Complex64,
) -> Result<GaussianDyadState> {
    if !theta.is_finite() || !basis.re.is_finite() || !basis.im.is_finite() {
        return Err(Error::NonFinite("cat_rotation"));
    }
    let (sin, cos) = theta.sin_cos();
    let mut terms = Vec::with_capacity(4 * state.terms.len());
    for t in &state.terms {
        let (ket, bra) = t.amplitudes(side);
        let mismatch = |z: Complex64| Error::AmplitudeMismatch {
            mode: side.label(),
            found_re: z.re,
            found_im: z.im,
            expected_re: basis.re,
            expected_im: basis.im,
        };
        let s = basis_sign(ket, basis).ok_or_else(|| mismatch(ket))?;
        let sp = basis_sign(bra, basis).ok_or_else(|| mismatch(bra))?;
        for (c, ks) in rotate_amplitude(s, cos, sin) {
            for (cb, bs) in rotate_amplitude(sp, cos, sin) {
                terms.push(t.with_amplitudes(side, t.coeff * c * cb.conj(), basis * ks, basis * bs));
            }
        }
    }
    Ok(GaussianDyadState::merged(terms))
}

/// `U|sA> = cos|sA> + i sin|-sA>` as (coefficient, sign) pairs.
fn rotate_amplitude(s: f64, cos: f64, sin: f64) -> [(Complex64, f64); 2] {
    [(Complex64::new(cos, 0.0), s), (Complex64::new(0.0, sin), -s)]
}

/// Dichotomized homodyne outcome: sign of the `x = a + a^dag` quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `(I_+, I_-)` with `I_+- = int_{x>=0 / x<0} <x|ket><bra|x> dx`.
///
/// In closed form `I_+- = <bra|ket> (1 +- erf(mu/sqrt 2)) / 2` with
/// `mu = ket + conj(bra)`. The product `<bra|ket> e^{-mu^2/2}` is formed in
/// log space and is bounded, so the evaluation never overflows.
pub fn homodyne_halfline_pair(ket: Complex64, bra: Complex64) -> (Complex64, Complex64) {
    let lov = log_overlap(bra, ket);
    let ov = lov.exp();
    let z = (ket + bra.conj()) * FRAC_1_SQRT_2;
    // tail = <bra|ket> e^{-z^2} w(i|z|-ish) / 2, the smaller half-line piece
    if z.re >= 0.0 {
        let tail = 0.5 * (lov - z * z).exp() * w(I * z);
        (ov - tail, tail)
    } else {
        let tail = 0.5 * (lov - z * z).exp() * w(-I * z);
        (tail, ov - tail)
    }
}

/// Single-mode half-line integral for one outcome sign; see [`homodyne_halfline_pair`].
pub fn homodyne_halfline(ket: Complex64, bra: Complex64, sign: Sign) -> Complex64 {
    let (p, m) = homodyne_halfline_pair(ket, bra);
    match sign {
        Sign::Plus => p,
        Sign::Minus => m,
    }
}

/// Joint sign probabilities `P_kl`, first index mode a.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignProbabilities {
    pub pp: f64,
    pub pm: f64,
    pub mp: f64,
    pub mm: f64,
}

impl SignProbabilities {
    /// `P_++ + P_-- - P_+- - P_-+`.
    pub fn correlation(&self) -> f64 {
        self.pp + self.mm - self.pm - self.mp
    }

    pub fn total(&self) -> f64 {
        self.pp + self.pm + self.mp + self.mm
    }
}

/// Imaginary parts below this are rounding and are dropped.
pub const IMAG_TOL: f64 = 1e-10;
/// Probability sums off by more than this mean the state is corrupted.
pub const NORM_TOL: f64 = 1e-6;

/// Turns complex probability sums into checked, clamped probabilities.
pub(crate) fn finish_probabilities(raw: [Complex64; 4]) -> Result<SignProbabilities> {
    let mut p = [0.0; 4];
    for (out, z) in p.iter_mut().zip(raw) {
        if z.im.abs() > IMAG_TOL {
            return Err(Error::ImaginaryResidue(z.im));
        }
        *out = z.re;
    }
    let total: f64 = p.iter().sum();
    if !total.is_finite() || (total - 1.0).abs() > NORM_TOL {
        return Err(Error::Normalization(total));
    }
    for v in &mut p {
        *v = v.clamp(0.0, 1.0);
    }
    Ok(SignProbabilities {
        pp: p[0],
        pm: p[1],
        mp: p[2],
        mm: p[3],
    })
}

/// Unchecked sums `sum_terms coeff I_k(a) I_l(b)` in the order `++, +-, -+, --`.
pub fn raw_sign_sums(state: &GaussianDyadState) -> [Complex64; 4] {
    let mut raw = [Complex64::default(); 4];
    for t in &state.terms {
        let (ap, am) = homodyne_halfline_pair(t.ket_a, t.bra_a);
        let (bp, bm) = homodyne_halfline_pair(t.ket_b, t.bra_b);
        raw[0] += t.coeff * ap * bp;
        raw[1] += t.coeff * ap * bm;
        raw[2] += t.coeff * am * bp;
        raw[3] += t.coeff * am * bm;
    }
    raw
}

/// `P_kl = sum_terms coeff I_k(a) I_l(b)`.
pub fn joint_sign_probs(state: &GaussianDyadState) -> Result<SignProbabilities> {
    finish_probabilities(raw_sign_sums(state))
}

/// Lossy, rotated ECS as dyads: loss `eta_before`, rotations on the basis
/// `sqrt(eta_before) alpha`, loss `eta_after`.
pub fn ecs_pipeline(alpha: f64, theta_a: f64, theta_b: f64, loss: LossPlacement) -> Result<GaussianDyadState> {
    loss.validate()?;
    let mut s = make_ecs(alpha)?;
    s = dyad_loss(&s, Side::A, loss.eta_before)?;
    s = dyad_loss(&s, Side::B, loss.eta_before)?;
    let basis = loss.eta_before.sqrt() * alpha;
    s = cat_rotation(&s, Side::A, theta_a, basis)?;
    s = cat_rotation(&s, Side::B, theta_b, basis)?;
    s = dyad_loss(&s, Side::A, loss.eta_after)?;
    dyad_loss(&s, Side::B, loss.eta_after)
}

/// `E = P_++ + P_-- - P_+- - P_-+` for the lossy, rotated ECS.
pub fn correlation_ecs(alpha: f64, theta_a: f64, theta_b: f64, loss: LossPlacement) -> Result<f64> {
    let s = ecs_pipeline(alpha, theta_a, theta_b, loss)?;
    Ok(joint_sign_probs(&s)?.correlation())
}

/// Largest coherent-state tail `sum_{k > n_max} |alpha|^{2k} e^{-|alpha|^2} / k!` tolerated by the oracle.
pub const TRUNCATION_TAIL: f64 = 1e-12;

/// Poisson tail beyond `n_max` for mean `|alpha|^2`.
pub fn coherent_tail(alpha: f64, n_max: usize) -> f64 {
    let m = alpha * alpha;
    // log of the k = n_max + 1 term, then ratios
    let k0 = n_max + 1;
    let mut log_term = -m + k0 as f64 * m.max(f64::MIN_POSITIVE).ln() - ln_factorial(k0);
    let mut sum = 0.0;
    for k in k0..k0 + 400 {
        if k > k0 {
            log_term += m.max(f64::MIN_POSITIVE).ln() - (k as f64).ln();
        }
        sum += log_term.exp();
    }
    if m == 0.0 {
        0.0
    } else {
        sum
    }
}

fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|j| (j as f64).ln()).sum()
}

/// Number-basis amplitudes `e^{-|a|^2/2} a^m / sqrt(m!)`, `m = 0..=n_max`.
fn coherent_vector(a: f64, n_max: usize) -> Vec<f64> {
    let mut v = Vec::with_capacity(n_max + 1);
    let mut c = (-0.5 * a * a).exp();
    for m in 0..=n_max {
        if m > 0 {
            c *= a / (m as f64).sqrt();
        }
        v.push(c);
    }
    v
}

/// `D[n][m] = int sign(x) psi_n(x) psi_m(x) dx` for the number states in the
/// `x = a + a^dag` representation, by composite Simpson on the half line.
fn sign_matrix(n_max: usize) -> Vec<f64> {
    let dim = n_max + 1;
    let len = 2.0 * (dim as f64).sqrt() + 14.0;
    let steps = 2 * ((len / 0.002) as usize / 2);
    let h = len / steps as f64;
    let mut d = vec![0.0; dim * dim];
    let mut psi = vec![0.0; dim];
    let norm0 = (2.0 * PI).powf(-0.25);
    for i in 0..=steps {
        let x = i as f64 * h;
        psi[0] = norm0 * (-0.25 * x * x).exp();
        if dim > 1 {
            psi[1] = x * psi[0];
        }
        for m in 1..dim - 1 {
            psi[m + 1] = (x * psi[m] - (m as f64).sqrt() * psi[m - 1]) / ((m + 1) as f64).sqrt();
        }
        let wgt = if i == 0 || i == steps {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        } * h
            / 3.0;
        for n in 0..dim {
            for m in (n + 1..dim).step_by(2) {
                d[n * dim + m] += wgt * psi[n] * psi[m];
            }
        }
    }
    // odd total parity: full-line integral with sign is twice the half line
    for n in 0..dim {
        for m in (n + 1..dim).step_by(2) {
            d[n * dim + m] *= 2.0;
            d[m * dim + n] = d[n * dim + m];
        }
    }
    d
}

/// Two-mode density matrix `rho[(ka, kb), (ba, bb)]` in a truncated number basis.
struct FockMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl FockMatrix {
    fn idx(&self, ka: usize, kb: usize, ba: usize, bb: usize) -> usize {
        ((ka * self.dim + kb) * self.dim + ba) * self.dim + bb
    }

    fn from_pure(psi: &[Complex64], dim: usize) -> Self {
        let mut data = vec![Complex64::default(); dim.pow(4)];
        for k in 0..dim * dim {
            for b in 0..dim * dim {
                data[k * dim * dim + b] = psi[k] * psi[b].conj();
            }
        }
        Self { dim, data }
    }

    fn loss(&mut self, side: Side, eta: f64) {
        if eta == 1.0 {
            return;
        }
        let dim = self.dim;
        let binom = |n: usize, k: usize| (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64);
        let mut out = vec![Complex64::default(); self.data.len()];
        for m in 0..dim {
            for mp in 0..dim {
                for k in 0..=m.min(mp) {
                    let c = (binom(m, k) * binom(mp, k)).sqrt()
                        * eta.powf((m + mp) as f64 / 2.0 - k as f64)
                        * (1.0 - eta).powi(k as i32);
                    if c == 0.0 {
                        continue;
                    }
                    for x in 0..dim {
                        for xp in 0..dim {
                            let (src, dst) = match side {
                                Side::A => (self.idx(m, x, mp, xp), self.idx(m - k, x, mp - k, xp)),
                                Side::B => (self.idx(x, m, xp, mp), self.idx(x, m - k, xp, mp - k)),
                            };
                            out[dst] += self.data[src] * c;
                        }
                    }
                }
            }
        }
        self.data = out;
    }

    /// `rho -> U rho U^dag` with `U = I + sum_j c_j |v_j><v_j|` on one mode.
    fn rank_update(&mut self, side: Side, updates: &[(Complex64, Vec<f64>)]) {
        let dim = self.dim;
        let mut slice = vec![Complex64::default(); dim * dim];
        for x in 0..dim {
            for xp in 0..dim {
                let at = |s: &Self, m: usize, mp: usize| match side {
                    Side::A => s.idx(m, x, mp, xp),
                    Side::B => s.idx(x, m, xp, mp),
                };
                for m in 0..dim {
                    for mp in 0..dim {
                        slice[m * dim + mp] = self.data[at(self, m, mp)];
                    }
                }
                // Y = X + sum c_j v_j (v_j^T X)
                let mut y = slice.clone();
                for (c, v) in updates {
                    for mp in 0..dim {
                        let row: Complex64 = (0..dim).map(|m| v[m] * slice[m * dim + mp]).sum();
                        let row = row * c;
                        for m in 0..dim {
                            y[m * dim + mp] += row * v[m];
                        }
                    }
                }
                // Z = Y + sum conj(c_j) (Y v_j) v_j^T
                let mut z = y.clone();
                for (c, v) in updates {
                    for m in 0..dim {
                        let col: Complex64 = (0..dim).map(|mp| y[m * dim + mp] * v[mp]).sum();
                        let col = col * c.conj();
                        for mp in 0..dim {
                            z[m * dim + mp] += col * v[mp];
                        }
                    }
                }
                for m in 0..dim {
                    for mp in 0..dim {
                        let i = at(self, m, mp);
                        self.data[i] = z[m * dim + mp];
                    }
                }
            }
        }
    }

    fn trace(&self) -> Complex64 {
        let mut t = Complex64::default();
        for a in 0..self.dim {
            for b in 0..self.dim {
                t += self.data[self.idx(a, b, a, b)];
            }
        }
        t
    }

    /// `Tr[(D (x) D) rho]` for a real symmetric single-mode `D`.
    fn expect_product(&self, d: &[f64]) -> Complex64 {
        let dim = self.dim;
        let mut acc = Complex64::default();
        for ka in 0..dim {
            for kb in 0..dim {
                for ba in 0..dim {
                    let da = d[ba * dim + ka];
                    if da == 0.0 {
                        continue;
                    }
                    for bb in 0..dim {
                        let db = d[bb * dim + kb];
                        if db != 0.0 {
                            acc += self.data[self.idx(ka, kb, ba, bb)] * (da * db);
                        }
                    }
                }
            }
        }
        acc
    }
}

/// Even and odd cat vectors of amplitude `a` in the truncated basis, with the
/// phase factors of `exp(i theta X)`.
fn rotation_updates(a: f64, theta: f64, n_max: usize) -> Vec<(Complex64, Vec<f64>)> {
    let plus = coherent_vector(a, n_max);
    let mut out = Vec::new();
    for (parity, phase) in [(1.0, theta), (-1.0, -theta)] {
        let v: Vec<f64> = plus
            .iter()
            .enumerate()
            .map(|(m, c)| {
                if m % 2 == 0 {
                    c * (1.0 + parity)
                } else {
                    c * (1.0 - parity)
                }
            })
            .collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-150 {
            let v = v.into_iter().map(|x| x / norm).collect();
            out.push((Complex64::from_polar(1.0, phase) - 1.0, v));
        }
    }
    out
}

/// [`correlation_ecs`] recomputed with a two-mode density matrix truncated at
/// `n_max` photons per mode and numerically integrated quadrature wavefunctions.
pub fn fock_oracle_ecs(alpha: f64, theta_a: f64, theta_b: f64, loss: LossPlacement, n_max: usize) -> Result<f64> {
    loss.validate()?;
    check_range("alpha", alpha, 0.0, 4.0)?;
    let tail = coherent_tail(alpha, n_max);
    if tail >= TRUNCATION_TAIL {
        return Err(Error::Truncation { n_max, tail });
    }
    let dim = n_max + 1;
    let cp = coherent_vector(alpha, n_max);
    let n = ecs_norm_sq(alpha).sqrt();
    let mut psi = vec![Complex64::default(); dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            // |-alpha> has amplitudes (-1)^m c_m
            let sign = if (a + b) % 2 == 0 { 1.0 } else { -1.0 };
            psi[a * dim + b] = Complex64::new(n * cp[a] * cp[b] * (1.0 + sign), 0.0);
        }
    }
    let mut rho = FockMatrix::from_pure(&psi, dim);
    rho.loss(Side::A, loss.eta_before);
    rho.loss(Side::B, loss.eta_before);
    let basis = loss.eta_before.sqrt() * alpha;
    rho.rank_update(Side::A, &rotation_updates(basis, theta_a, n_max));
    rho.rank_update(Side::B, &rotation_updates(basis, theta_b, n_max));
    rho.loss(Side::A, loss.eta_after);
    rho.loss(Side::B, loss.eta_after);
    let tr = rho.trace();
    if (tr - 1.0).norm() > NORM_TOL {
        return Err(Error::Normalization(tr.re));
    }
    let e = rho.expect_product(&sign_matrix(n_max));
    if e.im.abs() > IMAG_TOL {
        return Err(Error::ImaginaryResidue(e.im));
    }
    Ok(e.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// `<x|a>` for `x = a + a^dag`.
    fn wavefunction(x: f64, a: Complex64) -> Complex64 {
        (2.0 * PI).powf(-0.25) * (-0.25 * x * x + a * x - 0.5 * a * a - 0.5 * a.norm_sqr()).exp()
    }

    fn trapezoid_halfline(ket: Complex64, bra: Complex64) -> Complex64 {
        let (lo, hi, n) = (0.0, 30.0, 10_000);
        let h = (hi - lo) / n as f64;
        let f = |x: f64| wavefunction(x, ket) * wavefunction(x, bra).conj();
        let mut s = 0.5 * (f(lo) + f(hi));
        for i in 1..n {
            s += f(lo + i as f64 * h);
        }
        s * h
    }

    fn simpson_halfline(ket: Complex64, bra: Complex64) -> Complex64 {
        let (hi, n) = (30.0, 10_000);
        let h = hi / n as f64;
        let f = |x: f64| wavefunction(x, ket) * wavefunction(x, bra).conj();
        let mut s = f(0.0) + f(hi);
        for i in 1..n {
            s += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        s * h / 3.0
    }

    fn rotated_single(a: f64, theta: f64) -> GaussianDyadState {
        let z = c(0.0, 0.0);
        let s = GaussianDyadState::new(vec![DyadTerm {
            coeff: c(1.0, 0.0),
            ket_a: c(a, 0.0),
            bra_a: c(a, 0.0),
            ket_b: z,
            bra_b: z,
        }])
        .unwrap();
        cat_rotation(&s, Side::A, theta, a).unwrap()
    }

    #[test]
    fn ecs_normalization() {
        assert!((ecs_norm_sq(1.0) - 0.49100).abs() < 1e-5);
        assert!((ecs_norm_sq(3.0) - 0.5).abs() < 1e-7);
        for a in [0.5, 1.0, 2.0] {
            let s = make_ecs(a).unwrap();
            assert!((s.trace() - 1.0).norm() < 1e-12);
            assert_eq!(s.terms().len(), 4);
            assert!(s.hermiticity_error() < 1e-15);
        }
        assert!(make_ecs(0.0).is_err());
        assert!(make_ecs(4.5).is_err());
    }

    #[test]
    fn loss_identity_and_diagonal() {
        let s = make_ecs(1.3).unwrap();
        assert_eq!(dyad_loss(&s, Side::A, 1.0).unwrap(), s);
        let a = c(0.7, -0.4);
        let (f, _, _) = dyad_loss_factor(a, a, 0.3);
        assert!((f - 1.0).norm() < 1e-15);
    }

    #[test]
    fn total_loss_leaves_vacuum() {
        let s = make_ecs(1.0).unwrap();
        let out = dyad_loss(&dyad_loss(&s, Side::A, 0.0).unwrap(), Side::B, 0.0).unwrap();
        assert!((out.trace() - 1.0).norm() < 1e-12);
        assert_eq!(out.terms().len(), 1);
        assert_eq!(out.terms()[0].ket_a, c(0.0, 0.0));
        let p = joint_sign_probs(&out).unwrap();
        for v in [p.pp, p.pm, p.mp, p.mm] {
            assert!((v - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn rotation_zero_is_identity() {
        let s = make_ecs(1.0).unwrap();
        let out = cat_rotation(&s, Side::A, 0.0, 1.0).unwrap();
        assert!((out.trace() - 1.0).norm() < 1e-12);
        assert_eq!(out.terms().len(), 4);
        for (x, y) in out.terms().iter().zip(s.terms()) {
            assert!((x.coeff - y.coeff).norm() < 1e-15);
        }
    }

    #[test]
    fn rotation_by_pi_flips_sign_only() {
        let s = make_ecs(1.0).unwrap();
        let out = cat_rotation(&s, Side::A, PI, 1.0).unwrap();
        for x in out.terms() {
            let orig = s.terms().iter().find(|y| y.key() == x.key());
            let expected = orig.map(|y| y.coeff).unwrap_or_default();
            assert!((x.coeff - expected).norm() < 1e-15);
        }
    }

    #[test]
    fn rotation_rejects_off_basis_amplitude() {
        let s = make_ecs(1.0).unwrap();
        assert!(matches!(
            cat_rotation(&s, Side::B, 0.3, 1.1),
            Err(Error::AmplitudeMismatch { mode: 'b', .. })
        ));
    }

    #[test]
    fn rotation_of_vacuum_is_a_phase() {
        let out = rotated_single(0.0, 0.4);
        assert_eq!(out.terms().len(), 1);
        assert!((out.terms()[0].coeff - 1.0).norm() < 1e-15);
    }

    #[test]
    fn large_amplitude_rotation_fidelity() {
        // fidelity of U|A><A|U^dag with cos|A> + i sin|-A>
        let (a, theta) = (3.0, 0.7);
        let out = rotated_single(a, theta);
        let target = [(c(theta.cos(), 0.0), c(a, 0.0)), (c(0.0, theta.sin()), c(-a, 0.0))];
        let mut fid = c(0.0, 0.0);
        let mut norm = c(0.0, 0.0);
        for t in out.terms() {
            for (x, xa) in target {
                for (y, ya) in target {
                    fid += x.conj() * t.coeff * y * overlap(xa, t.ket_a) * overlap(t.bra_a, ya);
                }
            }
        }
        for (x, xa) in target {
            for (y, ya) in target {
                norm += x.conj() * y * overlap(xa, ya);
            }
        }
        assert!((fid.re / norm.re) >= 1.0 - 1e-6);
    }

    #[test]
    fn rotation_is_unitary_on_overlapping_basis() {
        // <A|U^dag U|A> = 1 even at small amplitude
        for a in [0.2, 0.8] {
            let out = rotated_single(a, 1.1);
            assert!((out.trace() - 1.0).norm() < 1e-14);
        }
    }

    #[test]
    fn halfline_vacuum_and_displaced() {
        assert!((homodyne_halfline(c(0.0, 0.0), c(0.0, 0.0), Sign::Plus) - 0.5).norm() < 1e-15);
        let v = homodyne_halfline(c(2.0, 0.0), c(2.0, 0.0), Sign::Plus);
        assert!((v.re - 0.99997).abs() < 1e-4);
        assert!((v - trapezoid_halfline(c(2.0, 0.0), c(2.0, 0.0))).norm() < 1e-4);
    }

    #[test]
    fn halfline_matches_trapezoid_oracle() {
        for (k, b) in [
            (c(2.0, 0.0), c(2.0, 0.0)),
            (c(0.3, 0.8), c(-0.5, 0.2)),
            (c(-1.2, -0.4), c(0.9, 1.1)),
        ] {
            let num = simpson_halfline(k, b);
            let cf = homodyne_halfline(k, b, Sign::Plus);
            assert!((num - cf).norm() < 1e-11, "{k} {b}: {num} vs {cf}");
        }
    }

    #[test]
    fn halfline_stable_for_large_imaginary_mu() {
        let a = c(0.5, 25.0);
        let (p, m) = homodyne_halfline_pair(a, -a);
        assert!(p.re.is_finite() && p.im.is_finite() && m.re.is_finite());
        assert!((p + m - overlap(-a, a)).norm() < 1e-15);
    }

    #[test]
    fn separated_ecs_signs_correlate() {
        let p = joint_sign_probs(&make_ecs(2.0).unwrap()).unwrap();
        assert!((p.pp + p.mm - 1.0).abs() < 1e-3);
        let e = correlation_ecs(2.0, 0.0, 0.0, LossPlacement::lossless()).unwrap();
        assert!((e - 1.0).abs() < 1e-3);
    }

    #[test]
    fn probabilities_normalized_after_loss_and_rotation() {
        let s = ecs_pipeline(1.5, 0.4, -0.9, LossPlacement::new(0.6, 0.6).unwrap()).unwrap();
        let p = joint_sign_probs(&s).unwrap();
        assert!((p.total() - 1.0).abs() < 1e-9);
        assert!(s.hermiticity_error() < 1e-14);
    }

    #[test]
    fn corrupted_state_rejected() {
        let mut s = make_ecs(1.0).unwrap();
        s.terms[0].coeff *= 1.5;
        assert!(matches!(joint_sign_probs(&s), Err(Error::Normalization(_))));
        let mut s = make_ecs(1.0).unwrap();
        s.terms[1].coeff += c(0.0, 0.01);
        assert!(matches!(joint_sign_probs(&s), Err(Error::ImaginaryResidue(_))));
    }

    #[test]
    fn angle_symmetry() {
        let loss = LossPlacement::new(0.8, 0.7).unwrap();
        let e1 = correlation_ecs(1.0, 0.3, -0.8, loss).unwrap();
        let e2 = correlation_ecs(1.0, -0.8, 0.3, loss).unwrap();
        assert!((e1 - e2).abs() < 1e-10);
    }

    #[test]
    fn pi_shift_leaves_correlation() {
        let loss = LossPlacement::new(0.9, 0.6).unwrap();
        let e1 = correlation_ecs(1.0, 0.3, -0.8, loss).unwrap();
        let e2 = correlation_ecs(1.0, 0.3 + PI, -0.8, loss).unwrap();
        assert!((e1 - e2).abs() < 1e-12);
    }

    #[test]
    fn sign_matrix_parity_structure() {
        let d = sign_matrix(6);
        // <0|sign(x)|1> = 2 int_0^inf psi0 psi1 = 2 / sqrt(2 pi)
        assert!((d[1] - 2.0 / (2.0 * PI).sqrt()).abs() < 1e-12);
        assert_eq!(d[0], 0.0);
        assert_eq!(d[2 * 7 + 4], 0.0);
    }

    #[test]
    fn coherent_tail_values() {
        assert!(coherent_tail(1.0, 40) < 1e-40);
        assert!(coherent_tail(3.0, 10) > 1e-3);
        assert_eq!(coherent_tail(0.0, 5), 0.0);
        assert!(matches!(
            fock_oracle_ecs(3.0, 0.0, 0.0, LossPlacement::lossless(), 10),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn fock_oracle_small_alpha_lossless() {
        for &(ta, tb) in &[(0.0, 0.0), (0.4, -0.3), (1.0, FRAC_PI_2)] {
            let dy = correlation_ecs(0.5, ta, tb, LossPlacement::lossless()).unwrap();
            let fo = fock_oracle_ecs(0.5, ta, tb, LossPlacement::lossless(), 20).unwrap();
            assert!((dy - fo).abs() < 1e-8, "{ta} {tb}: {dy} vs {fo}");
        }
    }

    #[test]
    fn fock_oracle_full_detector_loss() {
        let e = fock_oracle_ecs(1.0, 0.3, 0.5, LossPlacement::after(0.0).unwrap(), 20).unwrap();
        assert!(e.abs() < 1e-12);
    }

    #[test]
    fn fock_oracle_matches_dyads_with_loss() {
        let loss = LossPlacement::new(0.85, 0.7).unwrap();
        for &(ta, tb) in &[(0.2, 0.9), (-0.6, 0.35)] {
            let dy = correlation_ecs(1.0, ta, tb, loss).unwrap();
            let fo = fock_oracle_ecs(1.0, ta, tb, loss, 25).unwrap();
            assert!((dy - fo).abs() < 1e-6, "{ta} {tb}: {dy} vs {fo}");
        }
    }

    #[test]
    fn fock_oracle_truncation_converged() {
        let loss = LossPlacement::after(0.7).unwrap();
        let e30 = fock_oracle_ecs(1.0, 0.37, -0.52, loss, 30).unwrap();
        let e40 = fock_oracle_ecs(1.0, 0.37, -0.52, loss, 40).unwrap();
        assert!((e30 - e40).abs() < 1e-9);
        let dy = correlation_ecs(1.0, 0.37, -0.52, loss).unwrap();
        assert!((dy - e40).abs() < 1e-6);
    }

    proptest! {
        #[test]
        fn halfline_completeness(kr in -3.0f64..3.0, ki in -3.0f64..3.0, br in -3.0f64..3.0, bi in -3.0f64..3.0) {
            let (k, b) = (c(kr, ki), c(br, bi));
            let (p, m) = homodyne_halfline_pair(k, b);
            prop_assert!((p + m - overlap(b, k)).norm() < 1e-14);
        }

        #[test]
        fn loss_semigroup(alpha in 0.2f64..3.0, e1 in 0.0f64..=1.0, e2 in 0.0f64..=1.0, theta in -2.0f64..2.0) {
            let s = cat_rotation(&make_ecs(alpha).unwrap(), Side::A, theta, alpha).unwrap();
            let two = dyad_loss(&dyad_loss(&s, Side::A, e1).unwrap(), Side::A, e2).unwrap();
            let one = dyad_loss(&s, Side::A, e1 * e2).unwrap();
            prop_assert_eq!(two.terms().len(), one.terms().len());
            for (x, y) in two.terms().iter().zip(one.terms()) {
                prop_assert!((x.coeff - y.coeff).norm() < 1e-12);
                prop_assert!((x.ket_a - y.ket_a).norm() < 1e-12);
                prop_assert!((x.bra_a - y.bra_a).norm() < 1e-12);
            }
        }

        #[test]
        fn channels_preserve_trace_and_pairing(alpha in 0.2f64..4.0, e1 in 0.0f64..=1.0, e2 in 0.0f64..=1.0,
                                               ta in -3.0f64..3.0, tb in -3.0f64..3.0) {
            let s = ecs_pipeline(alpha, ta, tb, LossPlacement::new(e1, e2).unwrap()).unwrap();
            prop_assert!((s.trace() - 1.0).norm() < 1e-10);
            prop_assert!(s.hermiticity_error() < 1e-12);
            let p = joint_sign_probs(&s).unwrap();
            prop_assert!((p.total() - 1.0).abs() < 1e-9);
            prop_assert!(p.correlation().abs() <= 1.0 + 1e-12);
        }
    }
}
