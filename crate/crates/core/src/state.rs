//! Quantum-number bookkeeping shared by every solver.

use crate::error::{QesError, Result};
use serde::Serialize;

/// Relativistic bound-state label: radial quantum number `n_r`, spin-orbit
/// quantum number `kappa` (the centrifugal term is `kappa(kappa+1)/r^2`)
/// and the fermion mass `mu`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiracState {
    pub n_r: u32,
    pub kappa: u32,
    pub mu: f64,
}

impl DiracState {
    pub fn new(n_r: u32, kappa: u32, mu: f64) -> Result<Self> {
        if kappa == 0 {
            return Err(QesError::Domain("kappa must be a positive integer".into()));
        }
        if !(mu > 0.0) || !mu.is_finite() {
            return Err(QesError::Domain(format!("mass must be positive, got {mu}")));
        }
        Ok(Self { n_r, kappa, mu })
    }

    /// Principal combination for the square-root family: n' = n_r + 2(kappa+1).
    pub fn n_prime(&self) -> u32 {
        self.n_r + 2 * (self.kappa + 1)
    }

    /// Principal combination for the third-root family: n* = n_r + 3(kappa+1).
    pub fn n_star(&self) -> u32 {
        self.n_r + 3 * (self.kappa + 1)
    }

    /// Spectroscopic label in the convention of the bundled reference tables:
    /// kappa = 1,2,3,... maps to s,p,d,... with j = kappa - 1/2, and the
    /// leading integer is n_r + 1.
    pub fn spectroscopic_label(&self) -> String {
        const LETTERS: [char; 9] = ['s', 'p', 'd', 'f', 'g', 'h', 'i', 'k', 'l'];
        let letter = LETTERS
            .get((self.kappa - 1) as usize)
            .copied()
            .unwrap_or('?');
        format!("{}{}{}/2", self.n_r + 1, letter, 2 * self.kappa - 1)
    }
}

/// Non-relativistic label: radial quantum number and orbital angular momentum.
/// Units are fixed by 2m = hbar = 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SchrodingerState {
    pub n_r: u32,
    pub ell: u32,
}

impl SchrodingerState {
    pub fn new(n_r: u32, ell: u32) -> Self {
        Self { n_r, ell }
    }

    /// Principal combination n = n_r + 2*ell + 2.
    pub fn principal(&self) -> u32 {
        self.n_r + 2 * self.ell + 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_numbers() {
        let st = DiracState::new(1, 2, 1.0).unwrap();
        assert_eq!(st.n_prime(), 7);
        assert_eq!(st.n_star(), 10);
        assert_eq!(SchrodingerState::new(1, 2).principal(), 7);
    }

    #[test]
    fn labels_follow_reference_convention() {
        assert_eq!(DiracState::new(0, 1, 1.0).unwrap().spectroscopic_label(), "1s1/2");
        assert_eq!(DiracState::new(2, 5, 1.0).unwrap().spectroscopic_label(), "3g9/2");
        assert_eq!(DiracState::new(1, 4, 1.0).unwrap().spectroscopic_label(), "2f7/2");
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(DiracState::new(0, 0, 1.0).is_err());
        assert!(DiracState::new(0, 1, -1.0).is_err());
        assert!(DiracState::new(0, 1, f64::NAN).is_err());
    }
}
