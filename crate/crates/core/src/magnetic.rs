//! Spin-dependent transmission through a static magnetic field region.
//!
//! The field points along the spin quantization axis and is localized around
//! the origin of the propagation axis: flat top on [-a, a], optional smooth
//! ramps of length `l` on both sides. The spin-up component sees a potential
//! barrier +hbar*omega/2, the spin-down component a well -hbar*omega/2, with
//! omega = -mu*B > 0 the precession pulsation.
//!
//! Natural units hbar = 1 are used throughout; every observable produced
//! here depends only on the dimensionless combinations (hbar*omega/E, k*a,
//! k*l), so any consistent unit system maps onto these functions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spinor::Spinor;

const HBAR: f64 = 1.0;

/// Kinematics of the incident neutron, with derived wavenumber and speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeutronKinematics {
    /// Kinetic energy E.
    pub energy: f64,
    /// Mass m.
    pub mass: f64,
    /// Wavenumber k = sqrt(2mE)/hbar.
    pub k: f64,
    /// Speed v = hbar*k/m.
    pub v: f64,
}

impl NeutronKinematics {
    pub fn new(energy: f64, mass: f64) -> Result<Self> {
        if energy <= 0.0 {
            return Err(Error::Domain(format!(
                "energy must be positive, got {energy}"
            )));
        }
        if mass <= 0.0 {
            return Err(Error::Domain(format!("mass must be positive, got {mass}")));
        }
        let k = (2.0 * mass * energy).sqrt() / HBAR;
        let v = HBAR * k / mass;
        Ok(Self { energy, mass, k, v })
    }

    /// Classical flat-top traversal time 2a/v.
    pub fn traversal_time(&self, half_width: f64) -> f64 {
        2.0 * half_width / self.v
    }
}

/// Shape of the compact-support switch-on/off ramp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RampShape {
    /// g(s) = 1 - (3s^2 - 2s^3) on [0, 1], 0 beyond. C^1, g(0) = 1, g(1) = 0.
    #[default]
    SmoothstepComplement,
}

impl RampShape {
    fn eval(&self, s: f64) -> f64 {
        match self {
            RampShape::SmoothstepComplement => {
                if s >= 1.0 {
                    0.0
                } else if s <= 0.0 {
                    1.0
                } else {
                    1.0 - s * s * (3.0 - 2.0 * s)
                }
            }
        }
    }
}

/// Geometry and strength of the magnetic field region B(x) = B * w(x).
///
/// w(x) = 1 on the flat top [-a, a], falls to 0 over the ramp length `l`
/// on each side, and vanishes for |x| >= a + l. `l = 0` is the ideal square
/// profile. The stored field strength uses a unit magnetic moment, so
/// `b_strength == omega`; callers working in other conventions should
/// construct the profile directly from the pulsation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldProfile {
    pub b_strength: f64,
    /// Precession pulsation omega = -mu*B, non-negative.
    pub omega: f64,
    /// Half-length a of the flat-top region.
    pub half_width: f64,
    /// Spatial scale l >= 0 of the smooth switch-on/off; 0 means square.
    pub ramp_length: f64,
    pub ramp_shape: RampShape,
}

impl FieldProfile {
    /// Ideal square profile (l = 0).
    pub fn square(omega: f64, half_width: f64) -> Result<Self> {
        Self::with_ramp(omega, half_width, 0.0)
    }

    pub fn with_ramp(omega: f64, half_width: f64, ramp_length: f64) -> Result<Self> {
        if omega < 0.0 {
            return Err(Error::Domain(format!(
                "pulsation must be >= 0, got {omega}"
            )));
        }
        if half_width <= 0.0 {
            return Err(Error::Domain(format!(
                "half width must be positive, got {half_width}"
            )));
        }
        if ramp_length < 0.0 {
            return Err(Error::Domain(format!(
                "ramp length must be >= 0, got {ramp_length}"
            )));
        }
        Ok(Self {
            b_strength: omega,
            omega,
            half_width,
            ramp_length,
            ramp_shape: RampShape::default(),
        })
    }

    /// Dimensionless envelope w(x) in [0, 1].
    pub fn envelope(&self, x: f64) -> f64 {
        let r = x.abs();
        if r <= self.half_width {
            1.0
        } else if self.ramp_length > 0.0 {
            self.ramp_shape
                .eval((r - self.half_width) / self.ramp_length)
        } else {
            0.0
        }
    }

    /// Half-length of the support: w(x) = 0 for |x| >= this bound.
    pub fn support_bound(&self) -> f64 {
        self.half_width + self.ramp_length
    }

    /// Magnetic energy hbar*omega/2 at full field.
    pub fn magnetic_energy(&self) -> f64 {
        0.5 * HBAR * self.omega
    }

    pub fn is_square(&self) -> bool {
        self.ramp_length == 0.0
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{what} requires a square profile (ramp length 0), got l = {}",
                self.ramp_length
            )))
        }
    }
}

/// Spin channel label for the transmission problem: `Up` sees the barrier
/// +hbar*omega/2, `Down` the well -hbar*omega/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    /// Sign of the channel potential +/- hbar*omega/2.
    pub fn sign(&self) -> f64 {
        match self {
            Spin::Up => 1.0,
            Spin::Down => -1.0,
        }
    }
}

/// Exact transmission and reflection coefficients of both spin channels
/// through a square field region, plus the unwrapped rotation angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinTransmission {
    pub t_plus: Complex64,
    pub t_minus: Complex64,
    pub r_plus: Complex64,
    pub r_minus: Complex64,
    /// Rotation angle alpha = arg(T-) - arg(T+), continued from alpha = 0
    /// at omega = 0.
    pub alpha: f64,
}

/// Transmission and reflection for one square-region channel with local
/// squared wavenumber `kc_sq` (possibly negative: evanescent interior).
///
/// Conventions: incident wave e^{ikx} from the left, reflected R e^{-ikx},
/// transmitted T e^{ikx}; the free-propagation factor e^{-2ika} is kept in T.
fn square_channel(k: f64, kc_sq: f64, a: f64) -> Result<(Complex64, Complex64)> {
    if kc_sq == 0.0 {
        return Err(Error::DegenerateThreshold(0.5 * k * k));
    }
    // Principal branch: positive imaginary part below threshold (tunneling).
    let kc = Complex64::new(kc_sq, 0.0).sqrt();
    let kk = Complex64::new(k, 0.0);
    let free = Complex64::from_polar(1.0, -2.0 * k * a);
    let plus = (kk + kc) * (kk + kc);
    let minus = (kk - kc) * (kk - kc);
    let e_in = (Complex64::new(0.0, -2.0 * a) * kc).exp();
    let denom = plus * e_in - minus / e_in;
    let t = 4.0 * k * kc * free / denom;
    // R/T = -i (k^2 - kc^2) sin(2 kc a) / (2 k kc); the squared-wavenumber
    // difference is carried exactly so R vanishes identically at zero field.
    let diff = k * k - kc_sq;
    let r = t * Complex64::new(0.0, -1.0) * diff * (2.0 * a * kc).sin() / (2.0 * k * kc);
    Ok((t, r))
}

/// Exact coefficients (T, R) for one spin channel of the ideal square
/// profile, valid in the tunneling regime E < hbar*omega/2 as well (complex
/// interior wavenumber for the up channel).
pub fn square_field_coefficients(
    kin: &NeutronKinematics,
    profile: &FieldProfile,
    spin: Spin,
) -> Result<(Complex64, Complex64)> {
    profile.require_square("square_field_coefficients")?;
    let ksq = kin.k * kin.k;
    let kc_sq = ksq - spin.sign() * kin.mass * profile.omega / HBAR;
    square_channel(kin.k, kc_sq, profile.half_width)
}

/// Both channels of the square profile assembled into a [`SpinTransmission`].
/// Requires both channels propagating (for the unwrapped angle).
pub fn spin_transmission(
    kin: &NeutronKinematics,
    profile: &FieldProfile,
) -> Result<SpinTransmission> {
    let alpha = rotation_angle_exact(kin, profile)?;
    let (t_plus, r_plus) = square_field_coefficients(kin, profile, Spin::Up)?;
    let (t_minus, r_minus) = square_field_coefficients(kin, profile, Spin::Down)?;
    Ok(SpinTransmission {
        t_plus,
        t_minus,
        r_plus,
        r_minus,
        alpha,
    })
}

/// Weak-field transmission T+- = e^{-/+ i omega T/2} with T = 2a/v.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeakFieldTransmission {
    pub t_plus: Complex64,
    pub t_minus: Complex64,
    /// Larmor rotation angle omega * 2a/v.
    pub alpha: f64,
    /// Set when 0.1 <= hbar*omega/E < 0.5: the approximation is marginal.
    pub marginal: bool,
}

/// Larmor-limit transmission phases. Errors when hbar*omega/E >= 0.5; flags
/// the result as marginal from 0.1 up.
pub fn weak_field_transmission(
    kin: &NeutronKinematics,
    profile: &FieldProfile,
) -> Result<WeakFieldTransmission> {
    let ratio = HBAR * profile.omega / kin.energy;
    if ratio >= 0.5 {
        return Err(Error::Domain(format!(
            "weak-field approximation invalid: hbar*omega/E = {ratio} >= 0.5"
        )));
    }
    let t_cl = kin.traversal_time(profile.half_width);
    let alpha = profile.omega * t_cl;
    Ok(WeakFieldTransmission {
        t_plus: Complex64::from_polar(1.0, -0.5 * alpha),
        t_minus: Complex64::from_polar(1.0, 0.5 * alpha),
        alpha,
        marginal: ratio >= 0.1,
    })
}

/// Interior wavenumbers (k_barrier, k_well) of the two square-region spin
/// channels; errors unless both propagate.
fn channel_wavenumbers(kin: &NeutronKinematics, omega: f64) -> Result<(f64, f64)> {
    let ksq = kin.k * kin.k;
    let shift = kin.mass * omega / HBAR;
    if ksq <= shift {
        return Err(Error::ChannelClosed {
            energy: kin.energy,
            magnetic: 0.5 * HBAR * omega,
        });
    }
    Ok(((ksq - shift).sqrt(), (ksq + shift).sqrt()))
}

/// Exact spin rotation angle alpha = arg(T-) - arg(T+) of the square
/// profile, unwrapped by continuity in omega from alpha(0) = 0.
///
/// Each channel phase is evaluated as arg T = -2ka + theta + delta with
/// theta = 2*k_c*a and delta = atan2((eta-1) sin(theta) cos(theta),
/// cos^2(theta) + eta sin^2(theta)), eta = (k^2+k_c^2)/(2 k k_c) >= 1.
/// delta is continuous in omega and bounded by pi/2, and theta is continuous,
/// so the combination is the analytic continuation of the principal argument;
/// no numerical sweep is needed and the cancellations in k- - k+ and k - k_c
/// are removed algebraically.
pub fn rotation_angle_exact(kin: &NeutronKinematics, profile: &FieldProfile) -> Result<f64> {
    profile.require_square("rotation_angle_exact")?;
    let (k_bar, k_well) = channel_wavenumbers(kin, profile.omega)?;
    let a = profile.half_width;
    let k = kin.k;
    let shift = kin.mass * profile.omega / HBAR;

    // 2a(k_well - k_bar) without cancellation: k_well^2 - k_bar^2 = 2*shift.
    let dtheta = 4.0 * a * shift / (k_well + k_bar);

    // k - k_c = +/- shift / (k + k_c), exact in the same way.
    let correction = |kc: f64, ksq_diff: f64| -> f64 {
        let dk = ksq_diff / (k + kc);
        let eta_minus_1 = dk * dk / (2.0 * k * kc);
        let (sin, cos) = (2.0 * kc * a).sin_cos();
        f64::atan2(
            eta_minus_1 * sin * cos,
            cos * cos + (1.0 + eta_minus_1) * sin * sin,
        )
    };
    let corr_well = correction(k_well, -shift);
    let corr_bar = correction(k_bar, shift);
    Ok(dtheta + corr_well - corr_bar)
}

mod quad {
    use crate::error::{Error, Result};

    const MAX_DEPTH: u32 = 60;

    /// Adaptive Simpson with absolute tolerance; smooth integrands only.
    pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
        let m = 0.5 * (a + b);
        let fa = f(a);
        let fm = f(m);
        let fb = f(b);
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        recurse(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let err = left + right - whole;
        if err.abs() <= 15.0 * tol {
            return Ok(left + right + err / 15.0);
        }
        if depth == 0 {
            return Err(Error::Quadrature(format!(
                "adaptive Simpson did not converge on [{a}, {b}]: residual {err:e} > 15*{tol:e}"
            )));
        }
        let half = 0.5 * tol;
        Ok(recurse(f, a, m, fa, flm, fm, left, half, depth - 1)?
            + recurse(f, m, b, fm, frm, fb, right, half, depth - 1)?)
    }
}

/// Semiclassical rotation angle for a smooth profile: the integral of
/// k_well(x) - k_barrier(x) over the support, with the flat-top part added
/// analytically and each ramp integrated by adaptive Simpson (absolute
/// tolerance 1e-10). The l -> 0 limit recovers the square-region phase
/// 2a(k_well - k_barrier). Validity expects k*l >> 1; both local channels
/// must propagate everywhere.
pub fn semiclassical_phase(kin: &NeutronKinematics, profile: &FieldProfile) -> Result<f64> {
    let (k_bar, k_well) = channel_wavenumbers(kin, profile.omega)?;
    let a = profile.half_width;
    let shift = kin.mass * profile.omega / HBAR;
    let ksq = kin.k * kin.k;
    let flat = 4.0 * a * shift / (k_well + k_bar);
    if profile.ramp_length == 0.0 || profile.omega == 0.0 {
        return Ok(flat);
    }
    // Local difference k_well(x) - k_bar(x) = 2*shift*w / (k_well(x) + k_bar(x)).
    let dk = |x: f64| {
        let w = profile.envelope(x);
        let s = shift * w;
        2.0 * s / ((ksq + s).sqrt() + (ksq - s).sqrt())
    };
    let ramp = quad::adaptive_simpson(&dk, a, a + profile.ramp_length, 1e-10)?;
    Ok(flat + 2.0 * ramp)
}

/// Average time spent in the flat-top field region, weighted by the spin
/// populations: T(B) = (2a/v+)|xi+|^2 + (2a/v-)|xi-|^2.
///
/// The +/- labels here follow the strong-field kinematic convention
/// v+- = hbar*k+-/m with k+- = sqrt(2m(E +- hbar*omega/2))/hbar, so the "+"
/// component is the accelerated (faster) one. Unlike the rotation angle,
/// this depends on the incident spin state.
pub fn sojourn_time(
    kin: &NeutronKinematics,
    profile: &FieldProfile,
    spinor: &Spinor,
) -> Result<f64> {
    let (k_slow, k_fast) = channel_wavenumbers(kin, profile.omega)?;
    let v_plus = HBAR * k_fast / kin.mass;
    let v_minus = HBAR * k_slow / kin.mass;
    let a = profile.half_width;
    Ok(2.0 * a / v_plus * spinor.up_probability() + 2.0 * a / v_minus * spinor.down_probability())
}

/// Wigner transit delays (tau_up, tau_down) through the square region,
/// computed as hbar * d/dE [arg T + 2ka] by central finite differences with
/// relative step 1e-5 in E.
///
/// Labels match [`sojourn_time`]: the up component is accelerated inside the
/// region, so tau_down > tau_up for omega > 0 and both tend to 2a/v as
/// omega -> 0.
pub fn group_delays(kin: &NeutronKinematics, profile: &FieldProfile) -> Result<(f64, f64)> {
    profile.require_square("group_delays")?;
    let h = 1e-5 * kin.energy;
    let a = profile.half_width;
    // channel potential: up accelerated => -hbar*omega/2, down => +hbar*omega/2
    let delay = |pot_sign: f64| -> Result<f64> {
        let mut args = [0.0f64; 2];
        let mut ks = [0.0f64; 2];
        for (i, e) in [kin.energy + h, kin.energy - h].into_iter().enumerate() {
            let ksq = 2.0 * kin.mass * e / (HBAR * HBAR);
            let kc_sq = ksq - pot_sign * kin.mass * profile.omega / HBAR;
            if kc_sq <= 0.0 {
                return Err(Error::ChannelClosed {
                    energy: e,
                    magnetic: 0.5 * HBAR * profile.omega,
                });
            }
            let k = ksq.sqrt();
            let (t, _) = square_channel(k, kc_sq, a)?;
            args[i] = t.arg();
            ks[i] = k;
        }
        // principal difference is safe for the small stencil
        let mut darg = args[0] - args[1];
        if darg > std::f64::consts::PI {
            darg -= 2.0 * std::f64::consts::PI;
        } else if darg < -std::f64::consts::PI {
            darg += 2.0 * std::f64::consts::PI;
        }
        Ok(HBAR * (darg + 2.0 * a * (ks[0] - ks[1])) / (2.0 * h))
    };
    Ok((delay(-1.0)?, delay(1.0)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn kin(energy: f64) -> NeutronKinematics {
        NeutronKinematics::new(energy, 1.0).unwrap()
    }

    #[test]
    fn kinematics_round_trip() {
        let k = kin(2.0);
        assert_relative_eq!(k.k * k.k / (2.0 * k.mass), k.energy, max_relative = 1e-12);
        assert_relative_eq!(k.v, k.k / k.mass, max_relative = 1e-12);
        assert!(NeutronKinematics::new(0.0, 1.0).is_err());
    }

    #[test]
    fn envelope_shape() {
        let p = FieldProfile::with_ramp(1.0, 1.0, 0.5).unwrap();
        assert_eq!(p.envelope(0.0), 1.0);
        assert_eq!(p.envelope(-1.0), 1.0);
        assert_eq!(p.envelope(1.5), 0.0);
        assert_eq!(p.envelope(-2.0), 0.0);
        let w = p.envelope(1.25); // s = 0.5 -> 1 - (0.75 - 0.25) = 0.5
        assert_relative_eq!(w, 0.5, max_relative = 1e-15);
        // continuity at the flat top edge
        assert_relative_eq!(p.envelope(1.0 + 1e-9), 1.0, epsilon = 1e-8);
        // square profile
        let sq = FieldProfile::square(1.0, 1.0).unwrap();
        assert_eq!(sq.envelope(1.0 + 1e-12), 0.0);
    }

    #[test]
    fn zero_field_is_transparent() {
        let k = kin(2.0);
        let p = FieldProfile::square(0.0, 1.0).unwrap();
        for spin in [Spin::Up, Spin::Down] {
            let (t, r) = square_field_coefficients(&k, &p, spin).unwrap();
            assert!((t - Complex64::new(1.0, 0.0)).norm() < 1e-14);
            assert_eq!(r, Complex64::new(0.0, 0.0));
        }
        assert_eq!(rotation_angle_exact(&k, &p).unwrap(), 0.0);
    }

    #[test]
    fn transmission_resonance() {
        // pick a so that 2*k_up*a = pi: reflection vanishes, |T| = 1
        let k = kin(2.0);
        let omega = 1.0;
        let k_up = (k.k * k.k - omega).sqrt();
        let a = PI / (2.0 * k_up);
        let p = FieldProfile::square(omega, a).unwrap();
        let (t, r) = square_field_coefficients(&k, &p, Spin::Up).unwrap();
        assert!(r.norm() < 1e-13);
        assert_relative_eq!(t.norm(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn flux_conservation_grid() {
        for i in 1..=10 {
            for j in 0..=10 {
                let k = kin(0.5 * i as f64);
                let omega = 0.18 * j as f64 * k.energy; // up to ~0.9 E, both open
                let p = FieldProfile::square(omega, 1.3).unwrap();
                for spin in [Spin::Up, Spin::Down] {
                    let (t, r) = square_field_coefficients(&k, &p, spin).unwrap();
                    assert!((t.norm_sqr() + r.norm_sqr() - 1.0).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn tunneling_channel_is_unitary_too() {
        // E < hbar*omega/2: up channel evanescent, flux still conserved
        let k = kin(0.5);
        let p = FieldProfile::square(2.0, 1.0).unwrap();
        let (t, r) = square_field_coefficients(&k, &p, Spin::Up).unwrap();
        assert!(t.norm() < 1.0);
        assert!((t.norm_sqr() + r.norm_sqr() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn degenerate_threshold_rejected() {
        let k = kin(2.0);
        let omega = k.k * k.k / k.mass; // kc_sq == 0 exactly
        let p = FieldProfile::square(omega, 1.0).unwrap();
        assert!(matches!(
            square_field_coefficients(&k, &p, Spin::Up),
            Err(Error::DegenerateThreshold(_))
        ));
    }

    #[test]
    fn weak_field_phases() {
        let k = kin(2.0);
        let p = FieldProfile::square(0.0, 1.0).unwrap();
        let w = weak_field_transmission(&k, &p).unwrap();
        assert_eq!(w.t_plus, Complex64::new(1.0, 0.0));
        assert_eq!(w.t_minus, Complex64::new(1.0, 0.0));
        assert_eq!(w.alpha, 0.0);

        // omega*T = 2*pi: both components flip sign
        let omega = 2.0 * PI / k.traversal_time(1.0);
        if omega / k.energy < 0.5 {
            let p = FieldProfile::square(omega, 1.0).unwrap();
            let w = weak_field_transmission(&k, &p).unwrap();
            assert!((w.t_plus + Complex64::new(1.0, 0.0)).norm() < 1e-12);
            assert!((w.t_minus + Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }

        // guard rails
        let p = FieldProfile::square(0.3 * k.energy, 1.0).unwrap();
        assert!(weak_field_transmission(&k, &p).unwrap().marginal);
        let p = FieldProfile::square(0.6 * k.energy, 1.0).unwrap();
        assert!(weak_field_transmission(&k, &p).is_err());
    }

    #[test]
    fn rotation_angle_matches_principal_argument() {
        // alpha mod 2*pi must agree with arg(T-/T+)
        let k = kin(2.0);
        for &omega in &[0.05, 0.3, 1.0, 1.7] {
            let p = FieldProfile::square(omega, 3.0).unwrap();
            let alpha = rotation_angle_exact(&k, &p).unwrap();
            let (tp, _) = square_field_coefficients(&k, &p, Spin::Up).unwrap();
            let (tm, _) = square_field_coefficients(&k, &p, Spin::Down).unwrap();
            let principal = (tm / tp).arg();
            let wrapped = (alpha - principal) / (2.0 * PI);
            assert!(
                (wrapped - wrapped.round()).abs() < 1e-10,
                "omega={omega}: alpha={alpha}, principal={principal}"
            );
        }
    }

    #[test]
    fn rotation_angle_weak_limit_and_monotonicity() {
        let k = kin(2.0);
        let a = 1.0;
        let mut prev = 0.0;
        for i in 1..=400 {
            let omega = 0.004 * i as f64; // up to 0.8*E
            let p = FieldProfile::square(omega, a).unwrap();
            let alpha = rotation_angle_exact(&k, &p).unwrap();
            assert!(alpha > prev, "alpha not increasing at omega = {omega}");
            prev = alpha;
        }
        // weak field: alpha ~ omega * 2a/v
        let p = FieldProfile::square(1e-4, a).unwrap();
        let alpha = rotation_angle_exact(&k, &p).unwrap();
        assert_relative_eq!(alpha, 1e-4 * k.traversal_time(a), max_relative = 1e-7);
    }

    #[test]
    fn rotation_angle_requires_open_channel() {
        let k = kin(0.5);
        let p = FieldProfile::square(2.0, 1.0).unwrap();
        assert!(matches!(
            rotation_angle_exact(&k, &p),
            Err(Error::ChannelClosed { .. })
        ));
    }

    #[test]
    fn semiclassical_square_limit() {
        let k = kin(2.0);
        let omega = 0.5;
        let exact_flat = {
            let (kb, kw) = channel_wavenumbers(&k, omega).unwrap();
            2.0 * 1.0 * (kw - kb)
        };
        for &l in &[0.1, 1e-3, 1e-6] {
            let p = FieldProfile::with_ramp(omega, 1.0, l).unwrap();
            let alpha = semiclassical_phase(&k, &p).unwrap();
            // ramp contribution shrinks with the ramp measure
            assert!((alpha - exact_flat).abs() < 0.3 * l + 1e-9);
        }
        let p = FieldProfile::square(omega, 1.0).unwrap();
        assert_relative_eq!(
            semiclassical_phase(&k, &p).unwrap(),
            exact_flat,
            max_relative = 1e-12
        );
    }

    #[test]
    fn semiclassical_weak_field_is_larmor() {
        let k = kin(2.0);
        let p = FieldProfile::square(1e-4, 1.0).unwrap();
        let alpha = semiclassical_phase(&k, &p).unwrap();
        assert_relative_eq!(alpha, 1e-4 * k.traversal_time(1.0), max_relative = 1e-8);
    }

    #[test]
    fn sojourn_time_values() {
        let k = kin(2.0);
        // zero field: 2a/v for every spinor
        let p = FieldProfile::square(0.0, 1.0).unwrap();
        for s in [
            Spinor::up(),
            Spinor::down(),
            Spinor::from_up_probability(0.37).unwrap(),
        ] {
            assert_relative_eq!(
                sojourn_time(&k, &p, &s).unwrap(),
                k.traversal_time(1.0),
                max_relative = 1e-12
            );
        }
        // magnetic energy 1 (omega = 2): v+ = sqrt(6), v- = sqrt(2)
        let p = FieldProfile::square(2.0, 1.0).unwrap();
        assert_relative_eq!(
            sojourn_time(&k, &p, &Spinor::up()).unwrap(),
            2.0 / 6.0f64.sqrt(),
            max_relative = 1e-12
        );
        let mixed = Spinor::from_up_probability(0.5).unwrap();
        assert_relative_eq!(
            sojourn_time(&k, &p, &mixed).unwrap(),
            1.0 / 6.0f64.sqrt() + 1.0 / 2.0f64.sqrt(),
            max_relative = 1e-6
        );
    }

    #[test]
    fn group_delay_values() {
        let k = kin(2.0);
        let p = FieldProfile::square(0.0, 1.0).unwrap();
        let (up, down) = group_delays(&k, &p).unwrap();
        let free = k.traversal_time(1.0);
        assert_relative_eq!(up, free, max_relative = 1e-6);
        assert_relative_eq!(down, free, max_relative = 1e-6);

        // down component delayed
        let p = FieldProfile::square(1.0, 1.0).unwrap();
        let (up, down) = group_delays(&k, &p).unwrap();
        assert!(down > up);

        // weak field: tau_up close to the shifted classical traversal
        let p = FieldProfile::square(0.2, 1.0).unwrap();
        let (up, _) = group_delays(&k, &p).unwrap();
        let v_plus = (2.0 * (k.energy + 0.1) / k.mass).sqrt();
        assert!((up - 2.0 / v_plus).abs() / (2.0 / v_plus) < 0.05);

        // closed channel within the stencil
        let p = FieldProfile::square(2.0 * k.energy, 1.0).unwrap();
        assert!(matches!(
            group_delays(&k, &p),
            Err(Error::ChannelClosed { .. })
        ));
    }

    #[test]
    fn quadrature_smoke() {
        let val = super::quad::adaptive_simpson(&|x: f64| x.sin(), 0.0, PI, 1e-12).unwrap();
        assert_relative_eq!(val, 2.0, max_relative = 1e-10);
    }
}
