/// Settings for [`minimize_simplex_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexOptions {
    /// Edge length of the initial right-angled simplex.
    pub initial_step: f64,
    /// Stop once every vertex lies within this distance of the best one.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            initial_step: 0.25,
            tol: 1e-10,
            max_iter: 5000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplexResult {
    pub point: Vec<f64>,
    /// `f(point)`.
    pub value: f64,
    /// False when `max_iter` was exhausted before the simplex collapsed.
    pub converged: bool,
    pub iterations: usize,
}

/// Nelder–Mead minimization with the default initial step.
pub fn minimize_simplex(f: impl FnMut(&[f64]) -> f64, start: &[f64], tol: f64, max_iter: usize) -> SimplexResult {
    minimize_simplex_with(
        f,
        start,
        &SimplexOptions {
            tol,
            max_iter,
            ..SimplexOptions::default()
        },
    )
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

/// Nelder–Mead minimization with reflection, expansion, contraction and
/// shrink coefficients 1, 2, 1/2, 1/2.
pub fn minimize_simplex_with(mut f: impl FnMut(&[f64]) -> f64, start: &[f64], opts: &SimplexOptions) -> SimplexResult {
    let k = start.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(k + 1);
    simplex.push((start.to_vec(), f(start)));
    for i in 0..k {
        let mut p = start.to_vec();
        p[i] += opts.initial_step;
        let v = f(&p);
        simplex.push((p, v));
    }

    let mut iterations = 0;
    let mut converged = false;
    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let diameter = simplex[1..]
            .iter()
            .map(|(p, _)| distance(p, &simplex[0].0))
            .fold(0.0, f64::max);
        if diameter < opts.tol {
            converged = true;
            break;
        }
        if iterations >= opts.max_iter {
            break;
        }
        iterations += 1;

        let mut centroid = vec![0.0; k];
        for (p, _) in &simplex[..k] {
            for (c, x) in centroid.iter_mut().zip(p) {
                *c += x / k as f64;
            }
        }
        let worst = simplex[k].clone();
        let toward =
            |t: f64, from: &[f64]| -> Vec<f64> { centroid.iter().zip(from).map(|(c, x)| c + t * (x - c)).collect() };

        let reflected = toward(-REFLECT, &worst.0);
        let f_reflected = f(&reflected);
        if f_reflected < simplex[0].1 {
            let expanded = toward(-REFLECT * EXPAND, &worst.0);
            let f_expanded = f(&expanded);
            simplex[k] = if f_expanded < f_reflected {
                (expanded, f_expanded)
            } else {
                (reflected, f_reflected)
            };
            continue;
        }
        if f_reflected < simplex[k - 1].1 {
            simplex[k] = (reflected, f_reflected);
            continue;
        }
        let (contracted, limit) = if f_reflected < worst.1 {
            (toward(-REFLECT * CONTRACT, &worst.0), f_reflected)
        } else {
            (toward(CONTRACT, &worst.0), worst.1)
        };
        let f_contracted = f(&contracted);
        if f_contracted < limit {
            simplex[k] = (contracted, f_contracted);
            continue;
        }
        let best = simplex[0].0.clone();
        for (p, v) in simplex.iter_mut().skip(1) {
            for (x, b) in p.iter_mut().zip(&best) {
                *x = b + SHRINK * (*x - b);
            }
            *v = f(p);
        }
    }

    let (point, value) = simplex.swap_remove(0);
    SimplexResult {
        point,
        value,
        converged,
        iterations,
    }
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional_parabola() {
        let r = minimize_simplex(|x| (x[0] - 3.0).powi(2), &[0.0], 1e-8, 1000);
        assert!(r.converged);
        assert!((r.point[0] - 3.0).abs() < 1e-8);
        assert_eq!(r.value, (r.point[0] - 3.0).powi(2));
    }

    #[test]
    fn two_dimensional_bowl() {
        let r = minimize_simplex(|x| x[0] * x[0] + x[1] * x[1], &[1.0, 1.0], 1e-8, 1000);
        assert!(r.converged);
        assert!(r.point[0].abs() < 1e-8 && r.point[1].abs() < 1e-8);
    }

    #[test]
    fn rosenbrock() {
        let rosen = |x: &[f64]| 100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2);
        let r = minimize_simplex(rosen, &[-1.2, 1.0], 1e-10, 10_000);
        assert!(r.converged);
        assert!((r.point[0] - 1.0).abs() < 1e-6 && (r.point[1] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn flags_iteration_limit() {
        let r = minimize_simplex(|x| x.iter().map(|v| v * v).sum(), &[5.0; 4], 1e-12, 3);
        assert!(!r.converged);
        assert_eq!(r.iterations, 3);
    }

    #[test]
    fn reported_value_matches_point() {
        let f = |x: &[f64]| (x[0] - 1.0).powi(4) + (x[1] + 0.5).abs() + x[2].cos();
        let r = minimize_simplex(f, &[0.0, 0.0, 0.0], 1e-9, 4000);
        assert_eq!(r.value, f(&r.point));
    }
}
