//! Photon-number polarization states `(|n_H,0>_a |0,n_V>_b + |0,n_V>_a |n_H,0>_b)/sqrt(2)`
//! under beam-splitter loss, rotations in the `{|n_H,0>, |0,n_V>}` qubit and
//! the on/off polarization measurement.
//!
//! The density matrix is held sparsely over the product basis
//! `(k_H, k_V)_a (x) (m_H, m_V)_b` with all occupations in `0..=n`. Loss only
//! lowers photon numbers, so no truncation is ever needed.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{check_range, Error, Result};

/// Largest photon number accepted by [`make_psi_n`].
pub const MAX_PHOTONS: usize = 8;

/// One of the two spatial modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn label(self) -> char {
        match self {
            Side::A => 'a',
            Side::B => 'b',
        }
    }
}

/// Transmissivities of the beam splitters before (`eta_before`, BS1) and
/// after (`eta_after`, BS2) the local rotations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossPlacement {
    pub eta_before: f64,
    pub eta_after: f64,
}

impl LossPlacement {
    pub fn new(eta_before: f64, eta_after: f64) -> Result<Self> {
        check_range("eta_before", eta_before, 0.0, 1.0)?;
        check_range("eta_after", eta_after, 0.0, 1.0)?;
        Ok(Self { eta_before, eta_after })
    }

    pub fn lossless() -> Self {
        Self {
            eta_before: 1.0,
            eta_after: 1.0,
        }
    }

    /// Loss after the rotations only.
    pub fn after(eta: f64) -> Result<Self> {
        Self::new(1.0, eta)
    }

    pub fn validate(&self) -> Result<()> {
        Self::new(self.eta_before, self.eta_after).map(|_| ())
    }
}

/// Occupations `(a_H, a_V, b_H, b_V)` of one basis vector.
pub type Occupation = [usize; 4];

/// Density operator of two polarization modes with at most `n` photons per
/// polarization.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarizationState {
    n: usize,
    rho: BTreeMap<(Occupation, Occupation), Complex64>,
}

/// Entries smaller than this are dropped after each operation.
const PRUNE: f64 = 1e-300;

impl PolarizationState {
    /// Builds `sum_ij c_i conj(c_j) |i><j|` from a pure-state amplitude list.
    pub fn from_pure(n: usize, amplitudes: &[(Occupation, Complex64)]) -> Result<Self> {
        check_range("n", n as f64, 1.0, MAX_PHOTONS as f64)?;
        let mut rho = BTreeMap::new();
        for &(r, cr) in amplitudes {
            for &(c, cc) in amplitudes {
                Self::check_occupation(n, r)?;
                *rho.entry((r, c)).or_insert(Complex64::new(0.0, 0.0)) += cr * cc.conj();
            }
        }
        let mut state = Self { n, rho };
        state.prune();
        Ok(state)
    }

    /// Convex mixture `sum_k w_k rho_k` of states with the same `n`.
    pub fn mixture(parts: &[(f64, PolarizationState)]) -> Result<Self> {
        let n = parts.first().map(|(_, s)| s.n).unwrap_or(1);
        let mut rho: BTreeMap<_, Complex64> = BTreeMap::new();
        for (w, s) in parts {
            if s.n != n {
                return Err(Error::OutOfRange {
                    name: "n",
                    value: s.n as f64,
                    min: n as f64,
                    max: n as f64,
                });
            }
            for (k, v) in &s.rho {
                *rho.entry(*k).or_default() += v * *w;
            }
        }
        let mut state = Self { n, rho };
        state.prune();
        Ok(state)
    }

    fn check_occupation(n: usize, occ: Occupation) -> Result<()> {
        for k in occ {
            check_range("occupation", k as f64, 0.0, n as f64)?;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Matrix element `<row| rho |col>`.
    pub fn element(&self, row: Occupation, col: Occupation) -> Complex64 {
        self.rho.get(&(row, col)).copied().unwrap_or_default()
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.rho.len()
    }

    pub fn trace(&self) -> Complex64 {
        self.rho.iter().filter(|((r, c), _)| r == c).map(|(_, v)| *v).sum()
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        self.rho.iter().map(|((r, c), v)| (v * self.element(*c, *r)).re).sum()
    }

    /// Largest `|rho_rc - conj(rho_cr)|`.
    pub fn hermiticity_error(&self) -> f64 {
        self.rho
            .iter()
            .map(|((r, c), v)| (v - self.element(*c, *r).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// Smallest eigenvalue on the subspace of basis vectors that carry any
    /// weight (rho vanishes on the rest).
    pub fn min_eigenvalue(&self) -> f64 {
        let mut index = BTreeMap::new();
        for (r, c) in self.rho.keys() {
            let len = index.len();
            index.entry(*r).or_insert(len);
            let len = index.len();
            index.entry(*c).or_insert(len);
        }
        let dim = index.len();
        if dim == 0 {
            return 0.0;
        }
        let mut m = DMatrix::<Complex64>::zeros(dim, dim);
        for ((r, c), v) in &self.rho {
            m[(index[r], index[c])] = *v;
        }
        let h = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
        h.symmetric_eigenvalues().min()
    }

    /// `<phi| rho |phi>` for a pure vector given by its amplitudes.
    pub fn expectation_pure(&self, phi: &[(Occupation, Complex64)]) -> Complex64 {
        let mut acc = Complex64::default();
        for &(r, cr) in phi {
            for &(c, cc) in phi {
                acc += cr.conj() * self.element(r, c) * cc;
            }
        }
        acc
    }

    /// Exchanges the roles of the two sides.
    pub fn swap_sides(&self) -> Self {
        let swap = |o: Occupation| [o[2], o[3], o[0], o[1]];
        Self {
            n: self.n,
            rho: self.rho.iter().map(|((r, c), v)| ((swap(*r), swap(*c)), *v)).collect(),
        }
    }

    fn prune(&mut self) {
        self.rho.retain(|_, v| v.norm() > PRUNE);
    }
}

fn side_offset(side: Side) -> usize {
    match side {
        Side::A => 0,
        Side::B => 2,
    }
}

/// `|psi_n> = (|n_H,0>_a |0,n_V>_b + |0,n_V>_a |n_H,0>_b) / sqrt(2)` as a density operator.
pub fn make_psi_n(n: usize) -> Result<PolarizationState> {
    check_range("n", n as f64, 1.0, MAX_PHOTONS as f64)?;
    PolarizationState::from_pure(n, &psi_n_amplitudes(n))
}

/// Amplitudes of `|psi_n>` in the product basis.
pub fn psi_n_amplitudes(n: usize) -> Vec<(Occupation, Complex64)> {
    let c = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    vec![([n, 0, 0, n], c), ([0, n, n, 0], c)]
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Kraus expansion of single-mode pure loss on `|m><m'|`:
/// `sum_k sqrt(C(m,k) C(m',k)) eta^((m+m')/2 - k) (1-eta)^k |m-k><m'-k|`.
fn loss_terms(m: usize, mp: usize, eta: f64) -> Vec<(usize, usize, f64)> {
    (0..=m.min(mp))
        .map(|k| {
            let c = (binomial(m, k) * binomial(mp, k)).sqrt()
                * eta.powf((m + mp) as f64 / 2.0 - k as f64)
                * (1.0 - eta).powi(k as i32);
            (m - k, mp - k, c)
        })
        .filter(|t| t.2 != 0.0)
        .collect()
}

/// Pure-loss channel with transmissivity `eta` on both polarization modes of `side`.
pub fn apply_loss(state: &PolarizationState, side: Side, eta: f64) -> Result<PolarizationState> {
    check_range("eta", eta, 0.0, 1.0)?;
    if eta == 1.0 {
        return Ok(state.clone());
    }
    let off = side_offset(side);
    let mut rho: BTreeMap<_, Complex64> = BTreeMap::new();
    for ((r, c), v) in &state.rho {
        let h = loss_terms(r[off], c[off], eta);
        let vv = loss_terms(r[off + 1], c[off + 1], eta);
        for &(rh, ch, wh) in &h {
            for &(rv, cv, wv) in &vv {
                let mut r2 = *r;
                let mut c2 = *c;
                r2[off] = rh;
                r2[off + 1] = rv;
                c2[off] = ch;
                c2[off + 1] = cv;
                *rho.entry((r2, c2)).or_default() += v * (wh * wv);
            }
        }
    }
    let mut out = PolarizationState { n: state.n, rho };
    out.prune();
    Ok(out)
}

/// Image of one basis vector under the side rotation.
fn rotate_vector(occ: Occupation, off: usize, n: usize, cos: f64, sin: f64) -> Vec<(Occupation, Complex64)> {
    let pair = (occ[off], occ[off + 1]);
    let swapped = |h: usize, v: usize| {
        let mut o = occ;
        o[off] = h;
        o[off + 1] = v;
        o
    };
    if pair == (n, 0) {
        vec![
            (occ, Complex64::new(cos, 0.0)),
            (swapped(0, n), Complex64::new(0.0, sin)),
        ]
    } else if pair == (0, n) {
        vec![
            (swapped(n, 0), Complex64::new(0.0, sin)),
            (occ, Complex64::new(cos, 0.0)),
        ]
    } else {
        vec![(occ, Complex64::new(1.0, 0.0))]
    }
}

/// `U = exp[i theta (|n_H,0><0,n_V| + h.c.)]` on `side`, identity off that qubit.
pub fn apply_rotation_p(state: &PolarizationState, side: Side, theta: f64) -> Result<PolarizationState> {
    if !theta.is_finite() {
        return Err(Error::NonFinite("apply_rotation_p"));
    }
    let off = side_offset(side);
    let (sin, cos) = theta.sin_cos();
    let mut rho: BTreeMap<_, Complex64> = BTreeMap::new();
    for ((r, c), v) in &state.rho {
        let ur = rotate_vector(*r, off, state.n, cos, sin);
        let uc = rotate_vector(*c, off, state.n, cos, sin);
        for (r2, a) in &ur {
            for (c2, b) in &uc {
                *rho.entry((*r2, *c2)).or_default() += a * v * b.conj();
            }
        }
    }
    let mut out = PolarizationState { n: state.n, rho };
    out.prune();
    Ok(out)
}

/// Eigenvalue of the single-side observable: +1 on `|k_H,0>` (vacuum included),
/// -1 on `|0,k_V>`, 0 when both polarizations are occupied.
fn o_value(h: usize, v: usize) -> f64 {
    match (h, v) {
        (_, 0) => 1.0,
        (0, _) => -1.0,
        _ => 0.0,
    }
}

/// `Tr[(O_a (x) O_b) rho]`.
pub fn expect_oo(state: &PolarizationState) -> f64 {
    state
        .rho
        .iter()
        .filter(|((r, c), _)| r == c)
        .map(|((r, _), v)| v.re * o_value(r[0], r[1]) * o_value(r[2], r[3]))
        .sum()
}

/// Full simulation: loss `eta_before` on both sides, rotations, loss
/// `eta_after` on both sides, then `<O_a O_b>`.
pub fn correlation_p(n: usize, theta_a: f64, theta_b: f64, loss: LossPlacement) -> Result<f64> {
    loss.validate()?;
    let mut s = make_psi_n(n)?;
    s = apply_loss(&s, Side::A, loss.eta_before)?;
    s = apply_loss(&s, Side::B, loss.eta_before)?;
    s = apply_rotation_p(&s, Side::A, theta_a)?;
    s = apply_rotation_p(&s, Side::B, theta_b)?;
    s = apply_loss(&s, Side::A, loss.eta_after)?;
    s = apply_loss(&s, Side::B, loss.eta_after)?;
    Ok(expect_oo(&s))
}

/// `E = (1-eta)^(2n) - [1-(1-eta)^n]^2 cos 2(theta_a+theta_b)` for loss after the rotations.
pub fn analytic_ep(n: usize, theta_a: f64, theta_b: f64, eta: f64) -> Result<f64> {
    check_range("eta", eta, 0.0, 1.0)?;
    let u = (1.0 - eta).powi(n as i32);
    Ok(u * u - (1.0 - u).powi(2) * (2.0 * (theta_a + theta_b)).cos())
}

/// Closed form of [`correlation_p`] with loss on both sides of the rotations.
///
/// Before the rotation each side is either still `|n_H>` / `|n_V>` (probability
/// `p = eta1^n` for the coherent branch) or has lost photons; only intact
/// components are rotated.
pub fn analytic_ep_two_loss(n: usize, theta_a: f64, theta_b: f64, loss: LossPlacement) -> Result<f64> {
    loss.validate()?;
    let (e1, e2) = (loss.eta_before, loss.eta_after);
    let p = e1.powi(n as i32);
    let u = (1.0 - e2).powi(n as i32);
    let l_h = 1.0 - p;
    let l_v: f64 = (0..n)
        .map(|m| {
            binomial(n, m)
                * e1.powi(m as i32)
                * (1.0 - e1).powi((n - m) as i32)
                * (-1.0 + 2.0 * (1.0 - e2).powi(m as i32))
        })
        .sum();
    let h = |t: f64| p * (u + (1.0 - u) * (2.0 * t).cos()) + l_h;
    let v = |t: f64| p * (u - (1.0 - u) * (2.0 * t).cos()) + l_v;
    let cross = p * p * (1.0 - u).powi(2) * (2.0 * theta_a).sin() * (2.0 * theta_b).sin();
    Ok(0.5 * (h(theta_a) * v(theta_b) + v(theta_a) * h(theta_b)) + cross)
}
