//! Scalar and polynomial root finding used by the solvers and oracles.
//!
//! Everything here works on small problems (polynomial degree <= 8, Newton
//! systems of at most a handful of unknowns), so the emphasis is on exact
//! bracketing and verified residuals rather than asymptotic speed.

use crate::error::{QesError, Result};

/// Horner evaluation; coefficients ascending (c[0] + c[1] x + ...).
pub fn poly_eval(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck)
}

/// Derivative coefficients, ascending.
pub fn poly_deriv(c: &[f64]) -> Vec<f64> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &ck)| k as f64 * ck)
        .collect()
}

/// Monic polynomial with the given roots, coefficients ascending.
pub fn monic_from_roots(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for &r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (k, &ck) in c.iter().enumerate() {
            next[k + 1] += ck;
            next[k] -= r * ck;
        }
        c = next;
    }
    c
}

/// Cauchy bound on the absolute value of any root.
pub fn cauchy_bound(c: &[f64]) -> f64 {
    let lead = *c.last().expect("nonempty polynomial");
    assert!(lead != 0.0, "leading coefficient must be nonzero");
    1.0 + c[..c.len() - 1]
        .iter()
        .map(|ck| (ck / lead).abs())
        .fold(0.0, f64::max)
}

fn refine_bracket(c: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let dc = poly_deriv(c);
    let mut flo = poly_eval(c, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = poly_eval(c, mid);
        if fm == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * (1.0 + mid.abs()) {
            break;
        }
    }
    // Newton polish from the bisected midpoint
    let mut x = 0.5 * (lo + hi);
    for _ in 0..8 {
        let f = poly_eval(c, x);
        let d = poly_eval(&dc, x);
        if d == 0.0 {
            break;
        }
        let step = f / d;
        let xn = x - step;
        if !xn.is_finite() || step.abs() <= f64::EPSILON * (1.0 + x.abs()) {
            x = if xn.is_finite() { xn } else { x };
            break;
        }
        x = xn;
    }
    x
}

/// All real roots of the polynomial inside [lo, hi], found by a sign-change
/// scan at the given resolution followed by bisection + Newton polish.
/// `resolution` is relative to the interval length.
pub fn real_roots_in(c: &[f64], lo: f64, hi: f64, resolution: f64) -> Vec<f64> {
    let steps = (1.0 / resolution).ceil() as usize;
    let h = (hi - lo) / steps as f64;
    let mut out = Vec::new();
    let mut xa = lo;
    let mut fa = poly_eval(c, xa);
    for i in 1..=steps {
        let xb = lo + i as f64 * h;
        let fb = poly_eval(c, xb);
        if fa == 0.0 {
            out.push(xa);
        } else if fa * fb < 0.0 {
            out.push(refine_bracket(c, xa, xb));
        }
        xa = xb;
        fa = fb;
    }
    if fa == 0.0 {
        out.push(xa);
    }
    out.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * (1.0 + a.abs()));
    out
}

/// All strictly positive real roots, scanned on (0, cauchy bound].
pub fn positive_roots(c: &[f64], resolution: f64) -> Vec<f64> {
    let bound = cauchy_bound(c);
    real_roots_in(c, 0.0, bound, resolution)
        .into_iter()
        .filter(|&x| x > 0.0)
        .collect()
}

/// All real roots of c3 x^3 + c2 x^2 + c1 x + c0 (c3 != 0), closed form with
/// one Newton polish per root.
pub fn cubic_real_roots(c3: f64, c2: f64, c1: f64, c0: f64) -> Vec<f64> {
    let a = c2 / c3;
    let b = c1 / c3;
    let c = c0 / c3;
    // depressed cubic t^3 + p t + q, x = t - a/3
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    let disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    let mut roots = if disc > 0.0 {
        let s = disc.sqrt();
        let u = (-q / 2.0 + s).cbrt();
        let v = (-q / 2.0 - s).cbrt();
        vec![u + v + shift]
    } else if p == 0.0 && q == 0.0 {
        vec![shift]
    } else {
        // three real roots, trigonometric form
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() + shift)
            .collect()
    };
    let poly = [c0, c1, c2, c3];
    let dpoly = poly_deriv(&poly);
    for r in roots.iter_mut() {
        for _ in 0..3 {
            let f = poly_eval(&poly, *r);
            let d = poly_eval(&dpoly, *r);
            if d != 0.0 {
                *r -= f / d;
            }
        }
    }
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots.dedup_by(|x, y| (*x - *y).abs() <= 1e-12 * (1.0 + x.abs()));
    roots
}

/// Scalar Newton iteration with a convergence guard.
pub fn newton_scalar(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    x0: f64,
    tol: f64,
    max_iter: usize,
) -> Result<f64> {
    let mut x = x0;
    for _ in 0..max_iter {
        let y = f(x);
        if y.abs() <= tol {
            return Ok(x);
        }
        let d = df(x);
        if d == 0.0 || !d.is_finite() {
            return Err(QesError::SolverFailure {
                message: format!("flat derivative at x = {x}"),
                best_residual: y.abs(),
            });
        }
        let xn = x - y / d;
        if !xn.is_finite() {
            return Err(QesError::SolverFailure {
                message: "iteration left the real line".into(),
                best_residual: y.abs(),
            });
        }
        x = xn;
    }
    let res = f(x).abs();
    if res <= tol {
        Ok(x)
    } else {
        Err(QesError::SolverFailure {
            message: format!("Newton did not converge from x0 = {x0}"),
            best_residual: res,
        })
    }
}

/// Dense Gaussian elimination with partial pivoting; consumes its inputs.
/// Sized for the tiny Jacobians of the Bethe systems (n <= 8).
pub fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        if a[piv][col].abs() < 1e-300 {
            return Err(QesError::OracleFailure("singular linear system".into()));
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut s = b[row];
        for k in row + 1..n {
            s -= a[row][k] * x[k];
        }
        x[row] = s / a[row][row];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn cubic_three_real() {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let r = cubic_real_roots(1.0, -6.0, 11.0, -6.0);
        assert_eq!(r.len(), 3);
        assert_relative_eq!(r[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(r[1], 2.0, epsilon = 1e-12);
        assert_relative_eq!(r[2], 3.0, epsilon = 1e-12);
    }

    #[test]
    fn cubic_one_real() {
        // (x-2)(x^2+1)
        let r = cubic_real_roots(1.0, -2.0, 1.0, -2.0);
        assert_eq!(r.len(), 1);
        assert_relative_eq!(r[0], 2.0, epsilon = 1e-12);
    }

    #[test]
    fn scan_finds_quintic_roots() {
        // (x-0.5)(x-2)(x-7) * (x^2+1)
        let c = {
            let mut c = monic_from_roots(&[0.5, 2.0, 7.0]);
            // multiply by (x^2 + 1)
            let mut out = vec![0.0; c.len() + 2];
            for (k, &ck) in c.iter().enumerate() {
                out[k] += ck;
                out[k + 2] += ck;
            }
            c = out;
            c
        };
        let r = positive_roots(&c, 1e-3);
        assert_eq!(r.len(), 3);
        assert_relative_eq!(r[0], 0.5, epsilon = 1e-10);
        assert_relative_eq!(r[1], 2.0, epsilon = 1e-10);
        assert_relative_eq!(r[2], 7.0, epsilon = 1e-10);
    }

    #[test]
    fn vieta_round_trip() {
        let roots = [1.25, 3.5, 8.0];
        let c = monic_from_roots(&roots);
        for &r in &roots {
            assert!(poly_eval(&c, r).abs() < 1e-12);
        }
    }

    #[test]
    fn dense_solve() {
        let a = vec![vec![2.0, 1.0], vec![1.0, 3.0]];
        let x = solve_dense(a, vec![5.0, 10.0]).unwrap();
        assert_relative_eq!(x[0], 1.0, epsilon = 1e-14);
        assert_relative_eq!(x[1], 3.0, epsilon = 1e-14);
    }
}
