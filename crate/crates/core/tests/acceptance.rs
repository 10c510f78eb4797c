//! Acceptance criteria, one test per criterion. Each test prints a single
//! `criterion N: PASS|FAIL ...` line to the real stdout (not captured), so the
//! report appears in the test log whether or not the criterion holds.
//! Tolerances are pinned below and never adjusted to make a criterion pass.

use std::f64::consts::SQRT_2;
use std::io::Write;
use std::time::{Duration, Instant};

use bellsim_core::bell::{optimize_chsh, threshold_eta2, Engine, Scenario, ThresholdResult, TSIRELSON};
use bellsim_core::catstates::{dyad_loss, ecs_pipeline, joint_sign_probs, make_ecs};
use bellsim_core::fockspace::{analytic_ep, apply_loss, correlation_p, make_psi_n, Occupation, PolarizationState};
use bellsim_core::numerics::{erf_c, erfi_c};
use bellsim_core::thermal::{cets_closed_form, cets_quadrature_with_loss, gamma_to_eta, ThermalParams, DEFAULT_ORDER};
use bellsim_core::{LossPlacement, Side};
use num_complex::Complex64;

const THRESHOLD_TOL: f64 = 1e-4;

fn report(n: u32, pass: bool, detail: &str) -> bool {
    let line = format!("criterion {n}: {} {detail}\n", if pass { "PASS" } else { "FAIL" });
    let _ = std::io::stdout().lock().write_all(line.as_bytes());
    pass
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn threshold(s: Scenario) -> (ThresholdResult, Duration) {
    let (r, t) = timed(|| threshold_eta2(&s, THRESHOLD_TOL));
    (r.expect("threshold search"), t)
}

fn eta_star(r: &ThresholdResult) -> f64 {
    r.eta_star().unwrap_or(f64::NAN)
}

fn pol(n: usize, eta1: f64) -> Scenario {
    Scenario::polarization(n, LossPlacement::new(eta1, 1.0).unwrap())
}

fn ecs(alpha: f64, eta1: f64) -> Scenario {
    Scenario::ecs(alpha, LossPlacement::new(eta1, 1.0).unwrap())
}

fn ets_bmax(v: f64, d: f64, gamma_t: f64) -> f64 {
    let loss = LossPlacement::new(gamma_to_eta(gamma_t).unwrap(), 1.0).unwrap();
    optimize_chsh(&Scenario::ets(v, d, loss)).unwrap().b_max
}

fn within(x: f64, target: f64, tol: f64) -> bool {
    (x - target).abs() <= tol
}

#[test]
fn criterion_01_polarization_n1() {
    let (r, t) = threshold(pol(1, 1.0));
    let eta = eta_star(&r);
    let pass = within(eta, 0.8284, 1e-3) && t < Duration::from_secs(5);
    let ok = report(
        1,
        pass,
        &format!("eta* = {eta:.5} (0.8284 +- 1e-3), {:.2} s (< 5 s)", t.as_secs_f64()),
    );
    assert!(ok);
}

#[test]
fn criterion_02_polarization_n4() {
    let (r, t) = threshold(pol(4, 1.0));
    let eta = eta_star(&r);
    let pass = within(eta, 0.3564, 2e-3) && t < Duration::from_secs(20);
    let ok = report(
        2,
        pass,
        &format!("eta* = {eta:.5} (0.3564 +- 2e-3), {:.2} s (< 20 s)", t.as_secs_f64()),
    );
    assert!(ok);
}

#[test]
fn criterion_03_threshold_law() {
    let mut worst = 0.0_f64;
    let mut found = Vec::new();
    for n in 1..=4 {
        let eta = eta_star(&threshold(pol(n, 1.0)).0);
        let law = 1.0 - (3.0 - 2.0 * SQRT_2).powf(1.0 / n as f64);
        worst = worst.max((eta - law).abs());
        found.push(format!("{eta:.5}"));
    }
    let pass = worst <= 1e-3;
    let ok = report(
        3,
        pass,
        &format!(
            "eta*(1..4) = [{}], max |eta* - law| = {worst:.2e} (<= 1e-3)",
            found.join(", ")
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_04_ecs_alpha1() {
    let (r, t) = threshold(ecs(1.0, 1.0));
    let eta = eta_star(&r);
    let pass = within(eta, 0.50, 0.01) && t < Duration::from_secs(120);
    let ok = report(
        4,
        pass,
        &format!("eta* = {eta:.5} (0.50 +- 0.01), {:.2} s (< 120 s)", t.as_secs_f64()),
    );
    assert!(ok);
}

#[test]
fn criterion_05_family_comparison() {
    let p = eta_star(&threshold(pol(1, 1.0)).0);
    let e = eta_star(&threshold(ecs(1.0, 1.0)).0);
    let pass = e < p && within(p, 0.83, 0.02) && within(e, 0.50, 0.02);
    let ok = report(
        5,
        pass,
        &format!("pol n=1 eta* = {p:.5} (0.83 +- 0.02), ecs alpha=1 eta* = {e:.5} (0.50 +- 0.02), ecs < pol"),
    );
    assert!(ok);
}

#[test]
fn criterion_06_mixed_loss_polarization() {
    let (r, _) = threshold(pol(3, 0.95));
    let eta = eta_star(&r);
    let pass = within(eta, 0.61, 0.01);
    let ok = report(6, pass, &format!("n=3, eta1=0.95: eta* = {eta:.5} (0.61 +- 0.01)"));
    assert!(ok);
}

#[test]
fn criterion_07_mixed_loss_ecs() {
    let (r, t) = threshold(ecs(2.0, 0.85));
    let eta = eta_star(&r);
    let b_017 = optimize_chsh(&ecs(2.0, 0.85).with_eta_after(0.17)).unwrap().b_max;
    let pass = within(eta, 0.17, 0.015) && within(b_017, 2.0, 2e-2) && t < Duration::from_secs(300);
    let ok = report(
        7,
        pass,
        &format!(
            "alpha=2, eta1=0.85: eta* = {eta:.5} (0.17 +- 0.015), |B|max(eta2=0.17) = {b_017:.4} (2 +- 0.02), {:.2} s (< 300 s)",
            t.as_secs_f64()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_08_oracle_equivalence() {
    let grid = [-1.2, -0.5, 0.2, 0.9, 1.4];
    let etas = [0.15, 0.35, 0.55, 0.75, 1.0];
    let mut fock = 0.0_f64;
    for n in 1..=4 {
        for &ta in &grid {
            for &tb in &grid {
                for &eta in &etas {
                    let a = correlation_p(n, ta, tb, LossPlacement::after(eta).unwrap()).unwrap();
                    let b = analytic_ep(n, ta, tb, eta).unwrap();
                    fock = fock.max((a - b).abs());
                }
            }
        }
    }

    let mut dyad = 0.0_f64;
    for &alpha in &[0.5, 1.0] {
        for &(e1, e2) in &[(1.0, 1.0), (1.0, 0.6), (0.85, 0.9)] {
            let s = Scenario::ecs(alpha, LossPlacement::new(e1, e2).unwrap());
            let closed = s.correlator().unwrap();
            let oracle = s.with_engine(Engine::Oracle).correlator().unwrap();
            for &ta in &[-0.7, 0.3, 1.2] {
                for &tb in &[-1.1, 0.0, 0.6] {
                    dyad = dyad.max((closed.eval(ta, tb).unwrap() - oracle.eval(ta, tb).unwrap()).abs());
                }
            }
        }
    }

    // The thermal closed form may disagree with the quadrature; that
    // is the documented WARN outcome, as long as both are finite.
    let mut ets = 0.0_f64;
    let mut finite = true;
    for &(v, d, eta) in &[(10.0, 5.0, 1.0), (10.0, 3.0, 0.95), (1.001, 5.0, 0.99)] {
        let p = ThermalParams::new(v, d).unwrap();
        for &(ta, tb) in &[(0.0, 0.0), (0.4, -0.3), (0.8, 0.2)] {
            let cf = cets_closed_form(ta, tb, &p, eta).unwrap();
            let q = cets_quadrature_with_loss(ta, tb, &p, LossPlacement::new(eta, 1.0).unwrap(), DEFAULT_ORDER)
                .unwrap()
                .value;
            finite &= cf.is_finite() && q.is_finite();
            ets = ets.max((cf - q).abs());
        }
    }
    let ets_status = if ets <= 1e-3 {
        "within 1e-3"
    } else {
        "WARN: closed form deviates, quadrature authoritative"
    };
    let pass = fock < 1e-10 && dyad < 1e-6 && finite;
    let ok = report(
        8,
        pass,
        &format!("fockspace {fock:.2e} (< 1e-10), dyad vs Fock {dyad:.2e} (< 1e-6), thermal closed form {ets:.2e} ({ets_status})"),
    );
    assert!(ok);
}

#[test]
fn criterion_09_pre_loss_reversal() {
    let b1 = optimize_chsh(&pol(1, 0.9)).unwrap().b_max;
    let b4 = optimize_chsh(&pol(4, 0.9)).unwrap().b_max;
    let ok = report(9, b4 < b1, &format!("eta1=0.9: |B|max n=4 {b4:.6} < n=1 {b1:.6}"));
    assert!(ok);
}

#[test]
fn criterion_10_thermal_decoherence() {
    let mut violating = Vec::new();
    let mut all_violate = true;
    for &d in &[3.0, 5.0] {
        for &g in &[0.0, 0.01] {
            let b = ets_bmax(10.0, d, g);
            all_violate &= b > 2.0;
            violating.push(format!("d={d},gt={g}:{b:.4}"));
        }
    }

    let step = 0.01;
    let drop = |v: f64, d: f64, g: f64| ets_bmax(v, d, 0.0) - ets_bmax(v, d, g);
    let faster = [0.01, 0.02].iter().all(|&g| drop(10.0, 10.0, g) > drop(10.0, 5.0, g));

    // Initial slopes as secants over the first step in gamma_t.
    let s_thermal = drop(10.0, 5.0, step) / step;
    let s_pure = drop(1.001, 5.0, step) / step;
    let rel = (s_thermal - s_pure).abs() / s_thermal.max(s_pure);

    let pass = all_violate && faster && rel <= 0.15;
    let ok = report(
        10,
        pass,
        &format!(
            "V=10 violations [{}]; d=10 decays faster than d=5: {faster}; slopes {s_thermal:.2} vs {s_pure:.2}, rel diff {rel:.3} (<= 0.15)",
            violating.join(" ")
        ),
    );
    assert!(ok);
}

fn occupations(n: usize) -> Vec<Occupation> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=n {
                for d in 0..=n - c {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

fn state_distance(x: &PolarizationState, y: &PolarizationState) -> f64 {
    let occ = occupations(x.n());
    let mut worst = 0.0_f64;
    for &r in &occ {
        for &c in &occ {
            worst = worst.max((x.element(r, c) - y.element(r, c)).norm());
        }
    }
    worst
}

#[test]
fn criterion_11_invariants() {
    let mut notes = Vec::new();

    let mut trace = 0.0_f64;
    let mut semigroup = 0.0_f64;
    for n in 1..=3 {
        let psi = make_psi_n(n).unwrap();
        for &(e1, e2) in &[(0.3, 0.8), (0.7, 0.5)] {
            let once = apply_loss(&apply_loss(&psi, Side::A, e1 * e2).unwrap(), Side::B, e2).unwrap();
            let twice = apply_loss(
                &apply_loss(&apply_loss(&psi, Side::A, e1).unwrap(), Side::A, e2).unwrap(),
                Side::B,
                e2,
            )
            .unwrap();
            trace = trace.max((twice.trace() - 1.0).norm());
            semigroup = semigroup.max(state_distance(&once, &twice));
        }
    }
    let cat = make_ecs(1.3).unwrap();
    for &(e1, e2) in &[(0.4, 0.9), (0.8, 0.6)] {
        let once = dyad_loss(&cat, Side::A, e1 * e2).unwrap();
        let twice = dyad_loss(&dyad_loss(&cat, Side::A, e1).unwrap(), Side::A, e2).unwrap();
        trace = trace.max((twice.trace() - 1.0).norm());
        let (a, b) = (once.terms(), twice.terms());
        assert_eq!(a.len(), b.len());
        for (s, t) in a.iter().zip(b) {
            let d = [
                s.coeff - t.coeff,
                s.ket_a - t.ket_a,
                s.bra_a - t.bra_a,
                s.ket_b - t.ket_b,
                s.bra_b - t.bra_b,
            ];
            semigroup = semigroup.max(d.iter().map(|z| z.norm()).fold(0.0, f64::max));
        }
    }
    notes.push(format!("trace {trace:.1e} (1e-12)"));
    notes.push(format!("semigroup {semigroup:.1e} (1e-12)"));

    let mut top = 0.0_f64;
    for s in [
        pol(2, 1.0),
        ecs(1.5, 1.0),
        Scenario::ets(10.0, 5.0, LossPlacement::lossless()),
    ] {
        top = top.max(optimize_chsh(&s).unwrap().b_max);
    }
    notes.push(format!("max |B| {top:.10} (<= 2 sqrt 2)"));

    let mut norm = 0.0_f64;
    for &(ta, tb) in &[(0.1, 0.7), (-0.9, 0.4)] {
        let st = ecs_pipeline(1.2, ta, tb, LossPlacement::new(0.8, 0.6).unwrap()).unwrap();
        norm = norm.max((joint_sign_probs(&st).unwrap().total() - 1.0).abs());
        let p = ThermalParams::new(10.0, 4.0).unwrap();
        let q = cets_quadrature_with_loss(ta, tb, &p, LossPlacement::new(0.9, 0.7).unwrap(), DEFAULT_ORDER).unwrap();
        norm = norm.max((q.probs.total() - 1.0).abs());
    }
    notes.push(format!("normalization {norm:.1e} (1e-9)"));

    let mut special = 0.0_f64;
    for &(x, y) in &[(0.3, 0.2), (1.7, -0.6), (-2.5, 1.1), (0.0, 3.0)] {
        let z = Complex64::new(x, y);
        let i = Complex64::i();
        special = special.max((erf_c(-z) + erf_c(z)).norm());
        special = special.max((erf_c(z.conj()) - erf_c(z).conj()).norm() / erf_c(z).norm().max(1.0));
        special = special.max((erfi_c(z) + i * erf_c(i * z)).norm() / erfi_c(z).norm().max(1.0));
    }
    // 30-digit reference values
    let reference = [
        (
            erf_c(Complex64::new(1.0, 1.0)),
            Complex64::new(1.316_151_281_697_947_6, 0.190_453_469_237_834_7),
        ),
        (
            erf_c(Complex64::new(1.7, -0.6)),
            Complex64::new(1.015_256_372_880_939, -0.016_511_658_312_603_767),
        ),
        (
            erfi_c(Complex64::new(1.0, 0.0)),
            Complex64::new(1.650_425_758_797_542_9, 0.0),
        ),
        (
            erfi_c(Complex64::new(0.3, 0.2)),
            Complex64::new(0.334_443_323_443_044_9, 0.243_097_253_707_618_17),
        ),
    ];
    for (got, want) in reference {
        special = special.max((got - want).norm() / want.norm());
    }
    notes.push(format!("erf/erfi identities {special:.1e} (1e-13)"));

    let pass = trace <= 1e-12 && semigroup <= 1e-12 && top <= TSIRELSON + 1e-9 && norm <= 1e-9 && special <= 1e-13;
    let ok = report(11, pass, &notes.join(", "));
    assert!(ok);
}
