//! Closed-form radial wavefunctions and their analytic derivatives.
//!
//! Every bound state produced by the solvers has the shape
//!
//! ```text
//! F(r) = C * x^A * prod_i (x - x_i) * exp(w(x)),    x = r^{1/N},
//! w(x) = c_1 x + c_2 x^2 + ... + c_N x^N
//! ```
//!
//! which is differentiable in closed form. The residual oracles rely on the
//! exact first and second derivatives computed here; no finite differences
//! are involved anywhere in the verification chain.

use crate::error::{QesError, Result};
use crate::quadrature::gl256;
use crate::roots::{monic_from_roots, poly_deriv, poly_eval};
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct RadialAnsatz {
    /// N in x = r^{1/N}.
    pub root_scale: u32,
    /// Exponent A of the x^A prefactor.
    pub prefactor_power: f64,
    /// w(x) = sum exp_coeffs[p-1] * x^p, p = 1..=N.
    pub exp_coeffs: Vec<f64>,
    /// Monic node polynomial, ascending coefficients; len = n_r + 1.
    pub poly: Vec<f64>,
    /// Overall amplitude (normalization constant).
    pub amplitude: f64,
}

impl RadialAnsatz {
    pub fn new(root_scale: u32, prefactor_power: f64, exp_coeffs: Vec<f64>, roots: &[f64]) -> Self {
        Self {
            root_scale,
            prefactor_power,
            exp_coeffs,
            poly: monic_from_roots(roots),
            amplitude: 1.0,
        }
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    pub fn x_of(&self, r: f64) -> f64 {
        r.powf(1.0 / self.root_scale as f64)
    }

    fn w(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.exp_coeffs.iter().rev() {
            acc = (acc + c) * x;
        }
        acc
    }

    fn w1(&self, x: f64) -> f64 {
        self.exp_coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as f64 + 1.0) * c * x.powi(i as i32))
            .sum()
    }

    fn w2(&self, x: f64) -> f64 {
        self.exp_coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| ((i + 1) * i) as f64 * c * x.powi(i as i32 - 1))
            .sum()
    }

    pub fn value(&self, r: f64) -> f64 {
        let x = self.x_of(r);
        self.amplitude * x.powf(self.prefactor_power) * poly_eval(&self.poly, x) * self.w(x).exp()
    }

    /// (F, dF/dr, d2F/dr2), all in closed form.
    ///
    /// With Q = C x^A e^w and y the node polynomial:
    ///   dF/dx  = Q'y + Qy'
    ///   dF/dr  = (x^{1-N}/N) dF/dx
    ///   d2F/dr2 = (x^{2-2N}/N^2) [Q''y + 2Q'y' + Qy'' + (1-N)(Q'y + Qy')/x]
    pub fn derivs(&self, r: f64) -> (f64, f64, f64) {
        let n = self.root_scale as f64;
        let x = self.x_of(r);
        let a = self.prefactor_power;
        let q = self.amplitude * x.powf(a) * self.w(x).exp();
        let l = a / x + self.w1(x);
        let lp = -a / (x * x) + self.w2(x);
        let q1 = q * l;
        let q2 = q * (l * l + lp);
        let y = poly_eval(&self.poly, x);
        let dy = poly_deriv(&self.poly);
        let y1 = poly_eval(&dy, x);
        let y2 = poly_eval(&poly_deriv(&dy), x);
        let fx = q1 * y + q * y1;
        let fxx = q2 * y + 2.0 * q1 * y1 + q * y2;
        let jac = x.powf(1.0 - n) / n;
        let f1 = fx * jac;
        let f2 = (fxx + (1.0 - n) * fx / x) * x.powf(2.0 - 2.0 * n) / (n * n);
        (q * y, f1, f2)
    }

    /// ln |F(r)| up to the amplitude, for tail cutoff searches.
    fn log_magnitude(&self, x: f64) -> f64 {
        self.prefactor_power * x.ln() + self.w(x) + (poly_eval(&self.poly, x).abs() + 1e-300).ln()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NormReport {
    /// Integral of the density before rescaling.
    pub integral: f64,
    /// Analytic bound on the truncated tail.
    pub tail_bound: f64,
    /// Radius at which the integral was truncated.
    pub cutoff_radius: f64,
    /// Gauss-Legendre nodes used.
    pub nodes: usize,
}

/// Integrate density(r) dr with the substitution x = r^{1/N} (the integrand
/// becomes entire in x), truncating where the ansatz magnitude has fallen by
/// e^-50 from its peak. Returns the integral and a tail bound.
pub fn integrate_density(
    ansatz: &RadialAnsatz,
    density: impl Fn(f64) -> f64,
) -> Result<(f64, NormReport)> {
    let n = ansatz.root_scale as f64;

    // locate the magnitude peak by coarse scan, then extend to decay
    let mut x_peak = 1e-3;
    let mut best = f64::NEG_INFINITY;
    let mut x = 1e-3;
    while x < 1e4 {
        let m = ansatz.log_magnitude(x);
        if m > best {
            best = m;
            x_peak = x;
        }
        x *= 1.07;
    }
    let mut cutoff = x_peak.max(1.0);
    let mut found = false;
    for _ in 0..200 {
        cutoff *= 1.25;
        let m = ansatz.log_magnitude(cutoff);
        let slope = ansatz.w1(cutoff) + ansatz.prefactor_power / cutoff;
        if m < best - 50.0 && slope < -0.5 {
            found = true;
            break;
        }
    }
    if !found {
        return Err(QesError::InvariantViolation(
            "wavefunction tail does not decay; cannot normalize".into(),
        ));
    }

    let gl = gl256();
    let integral = gl.integrate(0.0, cutoff, |x| {
        if x <= 0.0 {
            return 0.0;
        }
        let r = x.powf(n);
        density(r) * n * x.powf(n - 1.0)
    });
    let r_cut = cutoff.powf(n);
    let slope = (ansatz.w1(cutoff) + ansatz.prefactor_power / cutoff).abs();
    let tail = density(r_cut) * n * cutoff.powf(n - 1.0) / (2.0 * slope);
    if !integral.is_finite() || integral <= 0.0 {
        return Err(QesError::InvariantViolation(format!(
            "normalization integral is not finite/positive: {integral}"
        )));
    }
    Ok((
        integral,
        NormReport { integral, tail_bound: tail, cutoff_radius: r_cut, nodes: 256 },
    ))
}

/// Radial samples of a solved state. `lower` is present for the Dirac
/// families (G plus its analytic derivative channel, used by the spinor
/// round-trip oracle); absent for the non-relativistic wavefunction.
#[derive(Debug, Clone, Serialize)]
pub struct WavefunctionGrid {
    pub r: Vec<f64>,
    pub upper: Vec<f64>,
    pub lower: Option<LowerComponent>,
    pub norm_constant: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct LowerComponent {
    pub g: Vec<f64>,
    pub dg_dr: Vec<f64>,
}
