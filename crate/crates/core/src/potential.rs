//! The singular fractional-power potential family
//!
//! ```text
//! V_N(r) = sum_{p=1..2N-1} (+/-) a_p / r^{p/N},     r in (0, inf)
//! ```
//!
//! with the signs alternating in front of the first N terms so the effective
//! potential supports bound states:
//!
//! ```text
//! V_2(r) = -a1 r^{-1/2} + a2 r^{-1} + a3 r^{-3/2}            (a1, a2 > 0)
//! V_3(r) = -a1 r^{-1/3} + a2 r^{-2/3} - a3 r^{-1} + a4 r^{-4/3} + a5 r^{-5/3}
//!                                                            (a1, a2, a3 > 0)
//! ```
//!
//! Coefficients are stored as the magnitudes that appear in the formulas
//! above; the signs are applied inside [`PotentialSpec::eval`], never by the
//! caller. The trailing coefficients (a3 for N=2; a4, a5 for N=3) are outputs
//! of the quasi-exact-solvability construction, so a spec may be created
//! without them and completed by a solver.

use crate::error::{QesError, Result};
use crate::state::DiracState;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    /// N = 2, square-root singularities.
    SquareRoot,
    /// N = 3, third-root singularities.
    ThirdRoot,
}

impl Family {
    /// The root index N in x = r^{1/N}.
    pub fn index(self) -> u32 {
        match self {
            Family::SquareRoot => 2,
            Family::ThirdRoot => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PotentialSpec {
    pub family: Family,
    /// Free coefficients: (a1, a2) for N=2, (a1, a2, a3) for N=3.
    free: [f64; 3],
    /// Constrained coefficients, filled by a solver: [a3] or [a4, a5].
    constrained: Option<[f64; 2]>,
}

impl PotentialSpec {
    /// Square-root family with free coefficients a1, a2 > 0; a3 unset.
    pub fn square_root(a1: f64, a2: f64) -> Result<Self> {
        if !(a1 > 0.0 && a2 > 0.0) {
            return Err(QesError::Domain(format!(
                "square-root family requires a1, a2 > 0 (got a1={a1}, a2={a2})"
            )));
        }
        Ok(Self { family: Family::SquareRoot, free: [a1, a2, 0.0], constrained: None })
    }

    /// Third-root family with free coefficients a1, a2, a3 > 0; a4, a5 unset.
    pub fn third_root(a1: f64, a2: f64, a3: f64) -> Result<Self> {
        if !(a1 > 0.0 && a2 > 0.0 && a3 > 0.0) {
            return Err(QesError::Domain(format!(
                "third-root family requires a1, a2, a3 > 0 (got a1={a1}, a2={a2}, a3={a3})"
            )));
        }
        Ok(Self { family: Family::ThirdRoot, free: [a1, a2, a3], constrained: None })
    }

    /// Complete an N=2 spec with its constrained coefficient.
    pub fn with_a3(mut self, a3: f64) -> Result<Self> {
        match self.family {
            Family::SquareRoot => {
                self.constrained = Some([a3, 0.0]);
                Ok(self)
            }
            Family::ThirdRoot => Err(QesError::Precondition(
                "a3 is a free coefficient of the third-root family".into(),
            )),
        }
    }

    /// Complete an N=3 spec with its constrained coefficients.
    pub fn with_a4_a5(mut self, a4: f64, a5: f64) -> Result<Self> {
        match self.family {
            Family::ThirdRoot => {
                self.constrained = Some([a4, a5]);
                Ok(self)
            }
            Family::SquareRoot => Err(QesError::Precondition(
                "the square-root family has a single constrained coefficient a3".into(),
            )),
        }
    }

    pub fn a1(&self) -> f64 {
        self.free[0]
    }

    pub fn a2(&self) -> f64 {
        self.free[1]
    }

    /// Free a3 for N=3.
    pub fn a3_free(&self) -> Option<f64> {
        matches!(self.family, Family::ThirdRoot).then(|| self.free[2])
    }

    /// Constrained coefficients if present: [a3, 0] for N=2, [a4, a5] for N=3.
    pub fn constrained(&self) -> Option<[f64; 2]> {
        self.constrained
    }

    pub fn is_complete(&self) -> bool {
        self.constrained.is_some()
    }

    /// Signed coefficients c_p of V = sum c_p r^{-p/N}, length 2N-1.
    pub fn signed_coefficients(&self) -> Result<Vec<f64>> {
        let c = self.constrained.ok_or_else(|| {
            QesError::Precondition("constrained coefficients are unset; solve a state first".into())
        })?;
        Ok(match self.family {
            Family::SquareRoot => vec![-self.free[0], self.free[1], c[0]],
            Family::ThirdRoot => {
                vec![-self.free[0], self.free[1], -self.free[2], c[0], c[1]]
            }
        })
    }

    /// V_N(r). Requires r > 0 and a complete coefficient set.
    pub fn eval(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(QesError::Domain(format!("potential requires r > 0, got {r}")));
        }
        let coeffs = self.signed_coefficients()?;
        let n = self.family.index() as f64;
        let mut v = 0.0;
        for (p, c) in coeffs.iter().enumerate() {
            v += c * r.powf(-((p as f64 + 1.0) / n));
        }
        Ok(v)
    }
}

/// Effective potential of the reduced second-order radial equation:
/// kappa(kappa+1)/r^2 + 2(mu + E) V_N(r).
pub fn eval_effective_potential(
    spec: &PotentialSpec,
    state: &DiracState,
    energy: f64,
    r: f64,
) -> Result<f64> {
    let v = spec.eval(r)?;
    let kap = state.kappa as f64;
    Ok(kap * (kap + 1.0) / (r * r) + 2.0 * (state.mu + energy) * v)
}

/// Log-spaced samples of (r, V_eff) on [r_min, r_max]; deterministic.
pub fn potential_grid(
    spec: &PotentialSpec,
    state: &DiracState,
    energy: f64,
    r_min: f64,
    r_max: f64,
    count: usize,
) -> Result<Vec<(f64, f64)>> {
    let rs = log_grid(r_min, r_max, count)?;
    rs.into_iter()
        .map(|r| Ok((r, eval_effective_potential(spec, state, energy, r)?)))
        .collect()
}

/// Log-spaced grid with exact endpoints.
pub fn log_grid(r_min: f64, r_max: f64, count: usize) -> Result<Vec<f64>> {
    if !(r_min > 0.0 && r_max > r_min) || count < 2 {
        return Err(QesError::Domain(format!(
            "grid requires 0 < r_min < r_max and count >= 2 (got [{r_min}, {r_max}] x {count})"
        )));
    }
    let ratio = r_max / r_min;
    let mut out: Vec<f64> = (0..count)
        .map(|i| r_min * ratio.powf(i as f64 / (count - 1) as f64))
        .collect();
    out[0] = r_min;
    out[count - 1] = r_max;
    Ok(out)
}

/// Grid defaults used by the plot command and the verification oracle:
/// 2000 log-spaced points on [1e-2, 50].
pub const DEFAULT_GRID_RMIN: f64 = 1e-2;
pub const DEFAULT_GRID_RMAX: f64 = 50.0;
pub const DEFAULT_GRID_COUNT: usize = 2000;

pub fn default_grid() -> Vec<f64> {
    log_grid(DEFAULT_GRID_RMIN, DEFAULT_GRID_RMAX, DEFAULT_GRID_COUNT).expect("valid defaults")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn eval_matches_hand_arithmetic() {
        // all terms unity at r = 1
        let v2 = PotentialSpec::square_root(1.0, 1.0).unwrap().with_a3(1.0).unwrap();
        assert_relative_eq!(v2.eval(1.0).unwrap(), 1.0);
        // -1/2 + 1/4 at r = 4 with a3 = 0
        let v2b = PotentialSpec::square_root(1.0, 1.0).unwrap().with_a3(0.0).unwrap();
        assert_relative_eq!(v2b.eval(4.0).unwrap(), -0.25, epsilon = 1e-15);
        // N=3: -2 + 2 - 2 at r = 1
        let v3 = PotentialSpec::third_root(2.0, 2.0, 2.0).unwrap().with_a4_a5(0.0, 0.0).unwrap();
        assert_relative_eq!(v3.eval(1.0).unwrap(), -2.0);
    }

    #[test]
    fn nonpositive_radius_is_domain_error() {
        let v = PotentialSpec::square_root(1.0, 1.0).unwrap().with_a3(1.0).unwrap();
        assert!(matches!(v.eval(0.0), Err(QesError::Domain(_))));
        assert!(matches!(v.eval(-1.0), Err(QesError::Domain(_))));
    }

    #[test]
    fn incomplete_spec_is_precondition_error() {
        let v = PotentialSpec::square_root(1.0, 1.0).unwrap();
        assert!(matches!(v.eval(1.0), Err(QesError::Precondition(_))));
    }

    #[test]
    fn effective_potential_example() {
        // kappa=1, mu=1, E=0, a=(1,1,1), r=1: 2 + 2*1 = 4
        let v = PotentialSpec::square_root(1.0, 1.0).unwrap().with_a3(1.0).unwrap();
        let st = DiracState::new(0, 1, 1.0).unwrap();
        assert_relative_eq!(eval_effective_potential(&v, &st, 0.0, 1.0).unwrap(), 4.0);
    }

    #[test]
    fn effective_potential_limits() {
        // V_eff -> +inf at the origin, -> 0 at infinity, for both families.
        let st = DiracState::new(0, 1, 1.0).unwrap();
        for spec in [
            PotentialSpec::square_root(1.0, 1.0).unwrap().with_a3(2.5).unwrap(),
            PotentialSpec::third_root(2.0, 2.0, 2.0).unwrap().with_a4_a5(3.7, -0.8).unwrap(),
        ] {
            let near = eval_effective_potential(&spec, &st, 0.0, 1e-6).unwrap();
            let far = eval_effective_potential(&spec, &st, 0.0, 1e6).unwrap();
            assert!(near > 1e6, "origin blowup, got {near}");
            assert!(far.abs() < 1e-2, "tail decay, got {far}");
        }
    }

    #[test]
    fn grid_endpoints_and_consistency() {
        let v = PotentialSpec::square_root(1.0, 1.0).unwrap().with_a3(1.0).unwrap();
        let st = DiracState::new(0, 1, 1.0).unwrap();
        let g = potential_grid(&v, &st, 0.3, 0.5, 20.0, 2).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].0, 0.5);
        assert_eq!(g[1].0, 20.0);
        let g = potential_grid(&v, &st, 0.3, 0.5, 20.0, 57).unwrap();
        for (r, ve) in g {
            assert_eq!(ve, eval_effective_potential(&v, &st, 0.3, r).unwrap());
        }
        assert!(potential_grid(&v, &st, 0.0, 5.0, 1.0, 10).is_err());
    }
}
