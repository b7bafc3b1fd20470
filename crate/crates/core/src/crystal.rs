//! Dynamical two-wave diffraction through one perfect-crystal plate in Laue
//! transmission geometry.
//!
//! Everything here is expressed in terms of two dimensionless combinations:
//! the reduced thickness `tau = pi d / Delta` (with `Delta` the Pendelloesung
//! length) and the detuning `y` measuring the deviation from the exact Bragg
//! condition. All quantities are first order in the reduced potential.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Inputs describing one crystal plate, plus the derived `Delta` and `tau`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateParams {
    /// Incident wavenumber magnitude, k0^2 = 2mE/hbar^2.
    pub k0: f64,
    /// Magnitude of the reciprocal-lattice vector along x1.
    pub g1: f64,
    /// Mean reduced potential U(0).
    pub u0: f64,
    /// Magnitude of the reduced potential Fourier coefficient |U(g)|.
    pub ug_mag: f64,
    /// Phase of U(g); zero for a symmetric potential.
    pub ug_phase: f64,
    /// Plate thickness.
    pub d: f64,
    /// Pendelloesung characteristic length, derived.
    pub delta: f64,
    /// Reduced thickness pi*d/Delta, derived.
    pub tau: f64,
}

impl PlateParams {
    pub fn new(k0: f64, g1: f64, u0: f64, ug_mag: f64, ug_phase: f64, d: f64) -> Result<Self> {
        if k0 <= 0.0 {
            return Err(Error::Domain(format!("k0 must be positive, got {k0}")));
        }
        if d < 0.0 {
            return Err(Error::Domain(format!("thickness must be >= 0, got {d}")));
        }
        let delta = characteristic_length(k0, g1, ug_mag)?;
        let tau = PI * d / delta;
        Ok(Self {
            k0,
            g1,
            u0,
            ug_mag,
            ug_phase,
            d,
            delta,
            tau,
        })
    }

    /// sqrt(k0^2 - g1^2/4), the longitudinal wavenumber scale.
    fn k_long(&self) -> f64 {
        (self.k0 * self.k0 - 0.25 * self.g1 * self.g1).sqrt()
    }
}

/// One of the two two-wave modes inside the crystal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoWaveMode {
    /// Mode index, 1 or 2.
    pub branch: u8,
    /// Longitudinal wavevector component k_{sigma,3}.
    pub k3: f64,
    /// Amplitude ratio X_sigma = u(g)/u(0).
    pub x_ratio: Complex64,
    /// Real mode amplitude from the half-space boundary matching.
    pub u_amp: f64,
}

/// Transmitted and refracted amplitudes for one plate traversal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffractionAmplitudes {
    /// Forward-diffracted (transmitted) amplitude A_t.
    pub a_t: Complex64,
    /// Diffracted (refracted) amplitude A_r.
    pub a_r: Complex64,
}

impl DiffractionAmplitudes {
    /// |A_t|^2 + |A_r|^2, equal to 1 for any (tau, y).
    pub fn total_intensity(&self) -> f64 {
        self.a_t.norm_sqr() + self.a_r.norm_sqr()
    }
}

/// Reduced potential coefficient 4*pi*b_c/V_e of the zero-range
/// neutron-nucleus pseudopotential on a monatomic Bravais lattice.
///
/// The same value serves as both U(0) and |U(g)| for every
/// reciprocal-lattice vector g.
pub fn fermi_fourier_coefficient(b_c: f64, cell_volume: f64) -> Result<f64> {
    if b_c <= 0.0 {
        return Err(Error::Domain(format!(
            "scattering length must be positive, got {b_c}"
        )));
    }
    if cell_volume <= 0.0 {
        return Err(Error::Domain(format!(
            "cell volume must be positive, got {cell_volume}"
        )));
    }
    Ok(4.0 * PI * b_c / cell_volume)
}

/// Pendelloesung length Delta = 2*pi*sqrt(k0^2 - g1^2/4) / |U(g)|.
pub fn characteristic_length(k0: f64, g1: f64, ug_mag: f64) -> Result<f64> {
    if ug_mag <= 0.0 {
        return Err(Error::Domain(format!(
            "|U(g)| must be positive, got {ug_mag}"
        )));
    }
    if g1 < 0.0 {
        return Err(Error::Domain(format!("g1 must be >= 0, got {g1}")));
    }
    let arg = k0 * k0 - 0.25 * g1 * g1;
    if arg <= 0.0 {
        return Err(Error::Geometry {
            g1,
            limit: 2.0 * k0,
        });
    }
    Ok(2.0 * PI * arg.sqrt() / ug_mag)
}

/// Detuning y = (k0_1 + g1/2) * g1 / |U(g)|, from the component of the
/// incident wavevector along g. y = 0 at exact Bragg incidence
/// (k0_1 = -g1/2); the sign is antisymmetric about it.
pub fn detuning_parameter(k0_vec: [f64; 2], g1: f64, ug_mag: f64) -> Result<f64> {
    if ug_mag <= 0.0 {
        return Err(Error::Domain(format!(
            "|U(g)| must be positive, got {ug_mag}"
        )));
    }
    Ok((k0_vec[0] + 0.5 * g1) * g1 / ug_mag)
}

/// Longitudinal wavevectors (k_{1,3}, k_{2,3}) of the two modes.
///
/// Branch 1 takes the "+" sign in front of sqrt(1+y^2) inside the bracket
/// and therefore has the smaller k3: k_{1,3} - k_{2,3} = -(2*pi/Delta)*sqrt(1+y^2).
pub fn branch_wavevectors(params: &PlateParams, y: f64) -> (f64, f64) {
    let s = params.k_long();
    let root = (1.0 + y * y).sqrt();
    let base = 1.0 / (2.0 * s * s);
    let k1 = s * (1.0 - base * (params.u0 + root * params.ug_mag));
    let k2 = s * (1.0 - base * (params.u0 - root * params.ug_mag));
    (k1, k2)
}

/// Amplitude ratios X_{1/2} = e^{i phi} (y +/- sqrt(1+y^2)).
///
/// Their product is -e^{2i phi} for every y.
pub fn mode_ratio(y: f64, ug_phase: f64) -> (Complex64, Complex64) {
    let phase = Complex64::from_polar(1.0, ug_phase);
    let root = (1.0 + y * y).sqrt();
    // The smaller-magnitude ratio is computed as -1/(|y| + root) so the
    // cancellation in y - root does not degrade the product X1*X2 = -e^{2i phi}.
    let big = y.abs() + root;
    if y >= 0.0 {
        (phase * big, phase * (-1.0 / big))
    } else {
        (phase * (1.0 / big), phase * (-big))
    }
}

/// Mode amplitudes (u1, u2) = (1/2)(1 -/+ y/sqrt(1+y^2)) from the half-space
/// boundary matching at first order.
///
/// u2 is constructed as 1 - u1, so the pair sums to 1 bitwise.
pub fn mode_amplitudes(y: f64) -> (f64, f64) {
    let t = 0.5 * y / (1.0 + y * y).sqrt();
    let u1 = 0.5 - t;
    (u1, 1.0 - u1)
}

/// Assembles the two modes (wavevectors, ratios, amplitudes) for one plate.
pub fn two_wave_modes(params: &PlateParams, y: f64) -> (TwoWaveMode, TwoWaveMode) {
    let (k1, k2) = branch_wavevectors(params, y);
    let (x1, x2) = mode_ratio(y, params.ug_phase);
    let (u1, u2) = mode_amplitudes(y);
    (
        TwoWaveMode {
            branch: 1,
            k3: k1,
            x_ratio: x1,
            u_amp: u1,
        },
        TwoWaveMode {
            branch: 2,
            k3: k2,
            x_ratio: x2,
            u_amp: u2,
        },
    )
}

/// Plate amplitudes as functions of the reduced thickness and detuning only:
///
/// A_t = [cos(tau*r) + (i y / r) sin(tau*r)] e^{-i tau (1+y)}
/// A_r = -(i / r) sin(tau*r) e^{-i tau (1+y)},   r = sqrt(1+y^2).
///
/// Unitarity |A_t|^2 + |A_r|^2 = 1 holds identically. A_r vanishes at the
/// Pendelloesung nodes tau*r = n*pi; at y = 0 these are d = n*Delta.
pub fn amplitudes_from_tau(tau: f64, y: f64) -> DiffractionAmplitudes {
    let r = (1.0 + y * y).sqrt();
    let arg = tau * r;
    let (sin, cos) = arg.sin_cos();
    let envelope = Complex64::from_polar(1.0, -tau * (1.0 + y));
    DiffractionAmplitudes {
        a_t: Complex64::new(cos, y / r * sin) * envelope,
        a_r: Complex64::new(0.0, -sin / r) * envelope,
    }
}

/// [`amplitudes_from_tau`] evaluated with a plate's derived `tau`.
pub fn plate_amplitudes(params: &PlateParams, y: f64) -> DiffractionAmplitudes {
    amplitudes_from_tau(params.tau, y)
}
