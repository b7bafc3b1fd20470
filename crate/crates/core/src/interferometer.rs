//! Composition of the three-plate device: four outgoing beams and their
//! intensities, including the 4*pi-periodic interference of beams 2 and 3.
//!
//! All three plates share the same (A_t, A_r) and the magnetic phase acts
//! only on the northern-path contribution; beams 1 and 4 leave the device
//! before the field region and carry no phase matrix.

use num_complex::Complex64;

use crate::crystal::DiffractionAmplitudes;
use crate::error::Result;
use crate::magnetic::{
    rotation_angle_exact, semiclassical_phase, weak_field_transmission, FieldProfile,
    NeutronKinematics,
};
use crate::spinor::Spinor;

/// The four outgoing spinor-valued amplitudes and their intensities,
/// relative to a unit incoming intensity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamOutputs {
    pub psi1: [Complex64; 2],
    pub psi2: [Complex64; 2],
    pub psi3: [Complex64; 2],
    pub psi4: [Complex64; 2],
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub i4: f64,
}

impl BeamOutputs {
    pub fn intensities(&self) -> [f64; 4] {
        [self.i1, self.i2, self.i3, self.i4]
    }

    /// Sum of the four intensities; 1 when nothing is absorbed.
    pub fn total(&self) -> f64 {
        self.i1 + self.i2 + self.i3 + self.i4
    }
}

fn norm_sqr(psi: &[Complex64; 2]) -> f64 {
    psi[0].norm_sqr() + psi[1].norm_sqr()
}

/// Four-beam composition for one plate amplitude pair, a spin rotation
/// angle `alpha` applied to the northern path, and an incident spinor:
///
/// psi1 = A_t A_t psi,  psi4 = A_t A_r psi,
/// psi2 = A_r^2 A_t diag(1 + e^{-i alpha/2}, 1 + e^{+i alpha/2}) psi,
/// psi3 = A_r diag(A_t^2 + A_r^2 e^{-i alpha/2}, A_t^2 + A_r^2 e^{+i alpha/2}) psi.
pub fn beam_amplitudes(amps: &DiffractionAmplitudes, alpha: f64, spin_in: &Spinor) -> BeamOutputs {
    let at = amps.a_t;
    let ar = amps.a_r;
    let xi = [spin_in.xi_plus, spin_in.xi_minus];
    let phase = [
        Complex64::from_polar(1.0, -0.5 * alpha),
        Complex64::from_polar(1.0, 0.5 * alpha),
    ];

    let mut psi1 = [Complex64::default(); 2];
    let mut psi2 = [Complex64::default(); 2];
    let mut psi3 = [Complex64::default(); 2];
    let mut psi4 = [Complex64::default(); 2];
    for s in 0..2 {
        psi1[s] = at * at * xi[s];
        psi4[s] = at * ar * xi[s];
        psi2[s] = ar * ar * at * (1.0 + phase[s]) * xi[s];
        psi3[s] = ar * (at * at + ar * ar * phase[s]) * xi[s];
    }
    BeamOutputs {
        psi1,
        psi2,
        psi3,
        psi4,
        i1: norm_sqr(&psi1),
        i2: norm_sqr(&psi2),
        i3: norm_sqr(&psi3),
        i4: norm_sqr(&psi4),
    }
}

/// Closed-form interfering intensities at the exact Bragg condition (y = 0):
///
/// i2 = (1/2) sin^2(tau) sin^2(2 tau) (1 + cos(alpha/2))
/// i3 = sin^2(tau) (cos^4(tau) + sin^4(tau) - (1/2) sin^2(2 tau) cos(alpha/2))
///
/// Their sum is sin^2(tau), independent of alpha; both are 4*pi-periodic
/// in alpha.
pub fn beam_intensities_closed_form(tau: f64, alpha: f64) -> (f64, f64) {
    let s = tau.sin();
    let c = tau.cos();
    let s2 = (2.0 * tau).sin();
    let cos_half = (0.5 * alpha).cos();
    let i2 = 0.5 * s * s * s2 * s2 * (1.0 + cos_half);
    let i3 = s * s * (c.powi(4) + s.powi(4) - 0.5 * s2 * s2 * cos_half);
    (i2, i3)
}

/// How the rotation angle fed to [`beam_amplitudes`] is obtained from the
/// field parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhaseMode {
    /// Larmor limit alpha = omega * 2a/v.
    #[default]
    Weak,
    /// Exact square-region phase, unwrapped in omega.
    Exact,
    /// Phase integral of the local wavenumber splitting (smooth profiles).
    Semiclassical,
}

impl PhaseMode {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "weak" => Some(PhaseMode::Weak),
            "exact" => Some(PhaseMode::Exact),
            "semiclassical" => Some(PhaseMode::Semiclassical),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PhaseMode::Weak => "weak",
            PhaseMode::Exact => "exact",
            PhaseMode::Semiclassical => "semiclassical",
        }
    }
}

/// Routes the field parameters through the selected phase model and returns
/// one unwrapped rotation angle.
pub fn field_to_alpha(
    kin: &NeutronKinematics,
    profile: &FieldProfile,
    mode: PhaseMode,
) -> Result<f64> {
    match mode {
        PhaseMode::Weak => Ok(weak_field_transmission(kin, profile)?.alpha),
        PhaseMode::Exact => rotation_angle_exact(kin, profile),
        PhaseMode::Semiclassical => semiclassical_phase(kin, profile),
    }
}
