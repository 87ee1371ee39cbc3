//! Adaptive Gauss–Legendre quadrature on [0, 1].
//!
//! Used for expectations of bounded functions under continuous
//! distributions via quantile substitution: the integrand
//! `u -> g(Q(u))` is bounded even when the distribution has no moments
//! (Cauchy, t(1)), so plain panel quadrature applies. Known jump
//! locations (atoms of discrete reference CDFs mapped through the
//! source CDF) are passed as breakpoints and each smooth piece is
//! refined adaptively until the local error estimate drops below its
//! share of the tolerance.

use crate::error::{Error, Result};
use std::sync::OnceLock;

const PANEL_ORDER: usize = 20;
const MAX_EVALS: usize = 4_000_000;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess, then Newton.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            // evaluate P_n and its derivative at x
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            pp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / pp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * pp * pp);
        out.push((-x, w));
        if 2 * (i + 1) <= n && n - i - 1 != i {
            out.push((x, w));
        }
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

fn panel_rule() -> &'static Vec<(f64, f64)> {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(PANEL_ORDER))
}

fn panel<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for &(x, w) in panel_rule() {
        acc += w * f(mid + c * x);
    }
    acc * c
}

/// Integrate `f` over [0, 1] to absolute tolerance `tol`.
///
/// `breakpoints` are interior points where `f` may jump; the interval is
/// split there before adaptive bisection. Returns the value and an error
/// estimate.
pub fn integrate01<F: FnMut(f64) -> f64>(
    mut f: F,
    tol: f64,
    breakpoints: &[f64],
) -> Result<(f64, f64)> {
    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|x| x.is_finite() && *x > 0.0 && *x < 1.0)
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut edges = Vec::with_capacity(cuts.len() + 2);
    edges.push(0.0);
    edges.extend(cuts);
    edges.push(1.0);

    let mut evals = 0usize;
    let mut total = 0.0;
    let mut err_acc = 0.0;
    // stack of (a, b, local tol)
    let mut stack: Vec<(f64, f64, f64)> = edges
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| (w[0], w[1], tol * (w[1] - w[0]).max(1e-3)))
        .collect();

    while let Some((a, b, lt)) = stack.pop() {
        let whole = panel(&mut f, a, b);
        let m = 0.5 * (a + b);
        let halves = panel(&mut f, a, m) + panel(&mut f, m, b);
        evals += 3 * PANEL_ORDER;
        let err = (whole - halves).abs();
        if err <= lt || (b - a) < 1e-14 {
            total += halves;
            err_acc += err;
        } else {
            stack.push((a, m, 0.5 * lt));
            stack.push((m, b, 0.5 * lt));
        }
        if evals > MAX_EVALS {
            return Err(Error::QuadratureTolerance {
                requested: tol,
                achieved: err_acc.max(err),
            });
        }
    }
    if !total.is_finite() {
        return Err(Error::NonFinite("quadrature accumulated a non-finite value".into()));
    }
    Ok((total, err_acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_nodes_are_symmetric_and_weights_sum_to_two() {
        let r = gauss_legendre(PANEL_ORDER);
        assert_eq!(r.len(), PANEL_ORDER);
        let wsum: f64 = r.iter().map(|&(_, w)| w).sum();
        assert!((wsum - 2.0).abs() < 1e-13);
        for i in 0..PANEL_ORDER / 2 {
            assert!((r[i].0 + r[PANEL_ORDER - 1 - i].0).abs() < 1e-14);
        }
    }

    #[test]
    fn polynomial_and_transcendental_integrands() {
        let (v, _) = integrate01(|u| u * u, 1e-12, &[]).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-12);
        let (v, _) = integrate01(|u| (std::f64::consts::PI * u).sin(), 1e-12, &[]).unwrap();
        assert!((v - 2.0 / std::f64::consts::PI).abs() < 1e-11);
    }

    #[test]
    fn jump_integrand_with_breakpoint_hint() {
        let f = |u: f64| if u < 0.3 { -1.0 } else { 2.0 };
        let (v, _) = integrate01(f, 1e-10, &[0.3]).unwrap();
        assert!((v - (-0.3 + 1.4)).abs() < 1e-10);
    }

    #[test]
    fn jump_without_hint_still_converges() {
        let f = |u: f64| if u < 1.0 / 3.0 { 0.0 } else { 1.0 };
        let (v, _) = integrate01(f, 1e-9, &[]).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-8);
    }
}
