//! Faddeeva function `w(z) = exp(-z²) erfc(-iz)` and the complex error
//! functions built on it.
//!
//! The upper half-plane is split in two regions. Far from the origin (or close
//! to the real axis at large `|x|`) a Laplace continued fraction converges in a
//! handful of terms. Everywhere else the exponentially convergent sum of
//! Zaghloul & Ali (ACM TOMS Algorithm 916) is used, with the region boundaries
//! of S. G. Johnson's Faddeeva package. The lower half-plane follows from
//! `w(z) = 2 exp(-z²) - w(-z)`.

use num_complex::Complex64;

use crate::error::{Error, Result};

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;
const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// `pi / sqrt(-ln(eps / 2))`, the sampling step of Algorithm 916.
const A: f64 = 0.518_321_480_430_085_9;
const A2: f64 = A * A;
/// `2a / pi`
const C: f64 = 0.329_973_702_884_629_07;

/// Faddeeva function. Rejects non-finite input.
pub fn faddeeva(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::NonFinite("faddeeva"));
    }
    Ok(w(z))
}

/// Complex error function. Exactly odd and conjugate-symmetric:
/// `erf_c(-z) == -erf_c(z)` and `erf_c(conj z) == conj erf_c(z)` bit for bit.
pub fn erf_c(z: Complex64) -> Complex64 {
    // evaluate in the first quadrant and reflect
    let flip = z.re < 0.0 || (z.re == 0.0 && z.im < 0.0);
    let zz = if flip { -z } else { z };
    let mirror = zz.im < 0.0;
    let v = erf_right(if mirror { zz.conj() } else { zz });
    let v = if mirror { v.conj() } else { v };
    if flip {
        -v
    } else {
        v
    }
}

/// Imaginary error function, `erfi(z) = -i erf(iz)`.
pub fn erfi_c(z: Complex64) -> Complex64 {
    let iz = Complex64::new(-z.im, z.re);
    let e = erf_c(iz);
    // -i * (a + ib) = b - ia
    Complex64::new(e.im, -e.re)
}

/// Scaled complementary error function `exp(x²) erfc(x)` for real `x >= 0`.
pub(crate) fn erfcx_nonneg(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x < 1.5 {
        (x * x).exp() * (1.0 - erf_series_real(x))
    } else if x > 5.0e7 {
        FRAC_1_SQRT_PI / x
    } else {
        // erfc(x) = exp(-x²)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
        let mut t = 0.0;
        for k in (1..=120).rev() {
            t = (k as f64 * 0.5) / (x + t);
        }
        FRAC_1_SQRT_PI / (x + t)
    }
}

fn erf_series_real(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut n = 0.0;
    loop {
        n += 1.0;
        term *= -x2 / n;
        let add = term / (2.0 * n + 1.0);
        sum += add;
        if add.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    FRAC_2_SQRT_PI * sum
}

fn erf_series(z: Complex64) -> Complex64 {
    let z2 = z * z;
    let mut term = z;
    let mut sum = z;
    let mut n = 0.0;
    loop {
        n += 1.0;
        term = -term * z2 / n;
        let add = term / (2.0 * n + 1.0);
        sum += add;
        if add.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    sum * FRAC_2_SQRT_PI
}

/// erf on Re z >= 0.
fn erf_right(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        return erf_series(z);
    }
    if z.im == 0.0 {
        // erf(x) = 1 - exp(-x²) erfcx(x)
        let x = z.re;
        if x > 27.0 {
            return Complex64::new(1.0, 0.0);
        }
        return Complex64::new(1.0 - (-x * x).exp() * erfcx_nonneg(x), 0.0);
    }
    if z.re == 0.0 {
        // erf(iy) = i exp(y²) Im w(y)
        let y = z.im;
        return Complex64::new(0.0, (y * y).exp() * w(Complex64::new(y, 0.0)).im);
    }
    let (x, y) = (z.re, z.im);
    // -z² with the real part formed as (y - x)(y + x) to delay overflow
    let mz2 = Complex64::new((y - x) * (y + x), -2.0 * x * y);
    if mz2.re < -750.0 {
        return Complex64::new(1.0, 0.0);
    }
    Complex64::new(1.0, 0.0) - mz2.exp() * w(Complex64::new(-y, x))
}

pub(crate) fn w(z: Complex64) -> Complex64 {
    if z.im < 0.0 {
        let (x, y) = (z.re, z.im);
        let mz2 = Complex64::new((y - x) * (y + x), -2.0 * x * y);
        return 2.0 * mz2.exp() - w_upper(-z);
    }
    w_upper(z)
}

fn w_upper(z: Complex64) -> Complex64 {
    let x = z.re.abs();
    let y = z.im;
    if z.re == 0.0 {
        return Complex64::new(erfcx_nonneg(y), 0.0);
    }
    if y > 7.0 || (x > 6.0 && (y > 0.1 || (x > 8.0 && y > 1e-10) || x > 28.0)) {
        continued_fraction(z)
    } else if x < 10.0 {
        sum_moderate(z)
    } else {
        sum_near_axis(z)
    }
}

fn continued_fraction(z: Complex64) -> Complex64 {
    let x = z.re.abs();
    let y = z.im;
    // term count fitted by Johnson for double precision, doubled for margin
    let nu = (3.9 + 11.398 / (0.08254 * x + 0.1421 * y + 0.2023)).floor() as usize;
    let terms = 2 * nu.max(2);
    let mut t = z;
    for k in (1..terms).rev() {
        t = z - (k as f64 * 0.5) / t;
    }
    Complex64::new(0.0, FRAC_1_SQRT_PI) / t
}

/// Algorithm 916 for 0 < |x| < 10, 0 <= y <= 7.
fn sum_moderate(z: Complex64) -> Complex64 {
    let xs = z.re;
    let x = xs.abs();
    let y = z.im;
    let expx2 = (-x * x).exp();
    let exp2ax = (2.0 * A * x).exp();
    let expm2ax = 1.0 / exp2ax;

    let (mut sum1, mut sum2, mut sum3, mut sum4, mut sum5) = (0.0, 0.0, 0.0, 0.0, 0.0);
    let mut prod2ax = 1.0;
    let mut prodm2ax = 1.0;
    let small_x = x < 5e-4;
    let mut n = 1.0_f64;
    loop {
        let an = A * n;
        let coef = (-A2 * n * n).exp() * expx2 / (A2 * n * n + y * y);
        prod2ax *= exp2ax;
        prodm2ax *= expm2ax;
        sum1 += coef;
        sum2 += coef * prodm2ax;
        sum3 += coef * prod2ax;
        if small_x {
            // sum5 - sum4 accumulated directly to avoid cancellation
            sum5 += coef * 2.0 * an * (2.0 * an * x).sinh();
            if coef * prod2ax < f64::EPSILON * sum3 {
                break;
            }
        } else {
            sum4 += coef * prodm2ax * an;
            sum5 += coef * prod2ax * an;
            if coef * prod2ax * an < f64::EPSILON * sum5 {
                break;
            }
        }
        n += 1.0;
        if n > 200.0 {
            break;
        }
    }

    let expx2erfcxy = expx2 * erfcx_nonneg(y);
    let coef1 = expx2erfcxy - C * y * sum1;
    let base = if y > 5.0 {
        // the imaginary contributions of the leading terms cancel here
        let sinxy = (x * y).sin();
        Complex64::new(
            coef1 * (2.0 * x * y).cos() + C * x * expx2 * sinxy * sinc(x * y, sinxy),
            0.0,
        )
    } else {
        let sinxy = (xs * y).sin();
        let sin2xy = (2.0 * xs * y).sin();
        let cos2xy = (2.0 * xs * y).cos();
        let coef2 = C * xs * expx2;
        Complex64::new(
            coef1 * cos2xy + coef2 * sinxy * sinc(xs * y, sinxy),
            coef2 * sinc(2.0 * xs * y, sin2xy) - coef1 * sin2xy,
        )
    };
    let diff = if small_x { sum5 } else { sum5 - sum4 };
    base + Complex64::new(0.5 * C * y * (sum2 + sum3), (0.5 * C * diff).copysign(xs))
}

/// Algorithm 916 for |x| >= 10 with y <= 1e-10, summing outward from the peak term.
fn sum_near_axis(z: Complex64) -> Complex64 {
    let xs = z.re;
    let x = xs.abs();
    let y = z.im;
    let n0 = (x / A + 0.5).floor();
    let dx = A * n0 - x;
    let mut sum3 = (-dx * dx).exp() / (A2 * n0 * n0 + y * y);
    let mut sum5 = A * n0 * sum3;
    let exp1 = (4.0 * A * dx).exp();
    let mut exp1dn = 1.0;
    let mut dn = 1.0;
    while dn < n0 {
        let np = n0 + dn;
        let nm = n0 - dn;
        let mut tp = (-(A * dn + dx).powi(2)).exp();
        exp1dn *= exp1;
        let mut tm = tp * exp1dn;
        tp /= A2 * np * np + y * y;
        tm /= A2 * nm * nm + y * y;
        sum3 += tp + tm;
        sum5 += A * (np * tp + nm * tm);
        if A * (np * tp + nm * tm) < f64::EPSILON * sum5 {
            return finish_near_axis(x, xs, y, sum3, sum5);
        }
        dn += 1.0;
    }
    loop {
        let np = n0 + dn;
        let tp = (-(A * dn + dx).powi(2)).exp() / (A2 * np * np + y * y);
        sum3 += tp;
        sum5 += A * np * tp;
        if A * np * tp < f64::EPSILON * sum5 {
            return finish_near_axis(x, xs, y, sum3, sum5);
        }
        dn += 1.0;
    }
}

fn finish_near_axis(x: f64, xs: f64, y: f64, sum3: f64, sum5: f64) -> Complex64 {
    Complex64::new((-x * x).exp() + 0.5 * C * y * sum3, (0.5 * C * sum5).copysign(xs))
}

fn sinc(x: f64, sinx: f64) -> f64 {
    if x.abs() < 1e-4 {
        1.0 - 0.166_666_666_666_666_67 * x * x
    } else {
        sinx / x
    }
}
