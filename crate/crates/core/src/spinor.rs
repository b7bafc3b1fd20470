use num_complex::Complex64;

use crate::error::{Error, Result};

/// A normalized spin-1/2 state, expressed along the magnetic field axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    pub xi_plus: Complex64,
    pub xi_minus: Complex64,
}

impl Spinor {
    /// Builds a spinor from its two components, checking unit norm.
    pub fn new(xi_plus: Complex64, xi_minus: Complex64) -> Result<Self> {
        let norm = xi_plus.norm_sqr() + xi_minus.norm_sqr();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "spinor must have unit norm, got |xi|^2 = {norm}"
            )));
        }
        Ok(Self { xi_plus, xi_minus })
    }

    /// Spin up along the field axis.
    pub fn up() -> Self {
        Self {
            xi_plus: Complex64::new(1.0, 0.0),
            xi_minus: Complex64::new(0.0, 0.0),
        }
    }

    /// Spin down along the field axis.
    pub fn down() -> Self {
        Self {
            xi_plus: Complex64::new(0.0, 0.0),
            xi_minus: Complex64::new(1.0, 0.0),
        }
    }

    /// Real spinor (sqrt(p), sqrt(1-p)) with spin-up probability `p`.
    pub fn from_up_probability(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!(
                "spin-up probability must lie in [0, 1], got {p}"
            )));
        }
        Ok(Self {
            xi_plus: Complex64::new(p.sqrt(), 0.0),
            xi_minus: Complex64::new((1.0 - p).sqrt(), 0.0),
        })
    }

    pub fn up_probability(&self) -> f64 {
        self.xi_plus.norm_sqr()
    }

    pub fn down_probability(&self) -> f64 {
        self.xi_minus.norm_sqr()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.xi_plus.norm_sqr() + self.xi_minus.norm_sqr()
    }

    /// Applies the relative spin phase diag(e^{-i alpha/2}, e^{+i alpha/2}).
    ///
    /// Multiplication by unit-modulus phases, so the norm is preserved.
    /// alpha = 2*pi negates both components (the spinor ray is unchanged);
    /// alpha = 4*pi is the identity.
    pub fn rotated(&self, alpha: f64) -> Self {
        let half = 0.5 * alpha;
        Self {
            xi_plus: self.xi_plus * Complex64::from_polar(1.0, -half),
            xi_minus: self.xi_minus * Complex64::from_polar(1.0, half),
        }
    }
}

/// Free-function form of [`Spinor::rotated`].
pub fn apply_spin_phase(spinor: &Spinor, alpha: f64) -> Spinor {
    spinor.rotated(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn identity_at_zero_angle() {
        let s = Spinor::from_up_probability(0.3).unwrap();
        let r = s.rotated(0.0);
        assert_eq!(r.xi_plus, s.xi_plus);
        assert_eq!(r.xi_minus, s.xi_minus);
    }

    #[test]
    fn two_pi_negates_both_components() {
        let s = Spinor::from_up_probability(0.5).unwrap();
        let r = s.rotated(2.0 * PI);
        assert!((r.xi_plus + s.xi_plus).norm() < 1e-15);
        assert!((r.xi_minus + s.xi_minus).norm() < 1e-15);
    }

    #[test]
    fn four_pi_restores_the_spinor() {
        let s = Spinor::from_up_probability(0.8).unwrap();
        let r = s.rotated(4.0 * PI);
        assert!((r.xi_plus - s.xi_plus).norm() < 1e-15);
        assert!((r.xi_minus - s.xi_minus).norm() < 1e-15);
    }

    #[test]
    fn rejects_non_normalized() {
        assert!(Spinor::new(Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0)).is_err());
        assert!(Spinor::from_up_probability(1.5).is_err());
    }
}
