//! Brute-force 1D stationary scattering solver on piecewise-constant
//! potentials, used as an independent verification oracle for the
//! closed-form transmission results. It shares no code with the closed
//! forms in [`crate::magnetic`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::magnetic::{FieldProfile, Spin};

const HBAR: f64 = 1.0;

/// A piecewise-constant potential: N segments between N+1 breakpoints,
/// exactly zero outside the support.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentedProfile {
    /// Ordered positions x_0 < x_1 < ... < x_N.
    pub breakpoints: Vec<f64>,
    /// Constant potential energy on each of the N segments.
    pub potential_values: Vec<f64>,
}

impl SegmentedProfile {
    pub fn new(breakpoints: Vec<f64>, potential_values: Vec<f64>) -> Result<Self> {
        if potential_values.is_empty() {
            return Err(Error::Domain("at least one segment required".into()));
        }
        if breakpoints.len() != potential_values.len() + 1 {
            return Err(Error::Domain(format!(
                "{} breakpoints do not delimit {} segments",
                breakpoints.len(),
                potential_values.len()
            )));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        Ok(Self {
            breakpoints,
            potential_values,
        })
    }

    pub fn n_segments(&self) -> usize {
        self.potential_values.len()
    }

    /// The spatially mirrored profile (for reciprocity checks).
    pub fn reversed(&self) -> Self {
        let breakpoints = self.breakpoints.iter().rev().map(|x| -x).collect();
        let potential_values = self.potential_values.iter().rev().copied().collect();
        Self {
            breakpoints,
            potential_values,
        }
    }
}

/// Midpoint-sampled piecewise-constant approximation of the channel
/// potential +/- hbar*omega*w(x)/2 over the support [-a-l, a+l].
///
/// For a square profile (l = 0) the result is exactly the square
/// barrier/well for any segment count.
pub fn discretize_profile(
    profile: &FieldProfile,
    spin: Spin,
    n_segments: usize,
) -> Result<SegmentedProfile> {
    if n_segments == 0 {
        return Err(Error::Domain("n_segments must be >= 1".into()));
    }
    let bound = profile.support_bound();
    let width = 2.0 * bound / n_segments as f64;
    let mut breakpoints = Vec::with_capacity(n_segments + 1);
    let mut values = Vec::with_capacity(n_segments);
    for i in 0..=n_segments {
        breakpoints.push(-bound + i as f64 * width);
    }
    let scale = spin.sign() * 0.5 * HBAR * profile.omega;
    for i in 0..n_segments {
        let mid = 0.5 * (breakpoints[i] + breakpoints[i + 1]);
        values.push(scale * profile.envelope(mid));
    }
    SegmentedProfile::new(breakpoints, values)
}

/// Transmission and reflection amplitudes (T, R) for a left-incident plane
/// wave of energy E on a segmented potential, by a 2x2 complex transfer
/// matrix product with continuity of value and derivative at every
/// interface.
///
/// Plane-wave conventions: e^{ikx} + R e^{-ikx} on the left, T e^{ikx} on
/// the right, so the free-propagation factor across the support is carried
/// inside T. Interior coefficients are referenced to each segment's left
/// edge, which keeps evanescent factors bounded per segment for thick
/// barriers.
pub fn transfer_matrix_transmission(
    seg: &SegmentedProfile,
    energy: f64,
    mass: f64,
) -> Result<(Complex64, Complex64)> {
    if energy <= 0.0 {
        return Err(Error::Domain(format!(
            "energy must be positive, got {energy}"
        )));
    }
    if mass <= 0.0 {
        return Err(Error::Domain(format!("mass must be positive, got {mass}")));
    }
    if seg.potential_values.contains(&energy) {
        return Err(Error::DegenerateThreshold(energy));
    }
    let k = (2.0 * mass * energy).sqrt() / HBAR;
    let k_free = Complex64::new(k, 0.0);

    // local wavenumbers; principal branch puts evanescent ones on +i axis
    let local = |v: f64| Complex64::new(2.0 * mass * (energy - v) / (HBAR * HBAR), 0.0).sqrt();

    // regions: free left (zero width), the segments, free right
    let n = seg.n_segments();
    let mut q_prev = k_free;
    let mut width_prev = 0.0f64;
    // m maps left-free coefficients referenced at x_0 to the current
    // region's left-edge coefficients
    let mut m = [
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
    ];
    // det(M) = product of the interface ratios (each interface matrix has
    // determinant q_prev/q_next); tracked separately because forming
    // m00 - m01*m10/m11 directly cancels catastrophically for thick
    // evanescent barriers.
    let mut det = Complex64::new(1.0, 0.0);
    for region in 0..=n {
        let q_next = if region < n {
            local(seg.potential_values[region])
        } else {
            k_free
        };
        let ratio = q_prev / q_next;
        det *= ratio;
        let ep = (Complex64::new(0.0, width_prev) * q_prev).exp();
        let em = Complex64::new(1.0, 0.0) / ep;
        let s11 = 0.5 * (1.0 + ratio) * ep;
        let s12 = 0.5 * (1.0 - ratio) * em;
        let s21 = 0.5 * (1.0 - ratio) * ep;
        let s22 = 0.5 * (1.0 + ratio) * em;
        m = [
            [s11 * m[0][0] + s12 * m[1][0], s11 * m[0][1] + s12 * m[1][1]],
            [s21 * m[0][0] + s22 * m[1][0], s21 * m[0][1] + s22 * m[1][1]],
        ];
        if region < n {
            width_prev = seg.breakpoints[region + 1] - seg.breakpoints[region];
            q_prev = q_next;
        }
    }

    let x0 = seg.breakpoints[0];
    let xn = *seg.breakpoints.last().unwrap();
    if m[1][1].norm() == 0.0 {
        return Err(Error::Numerical(
            "singular transfer matrix: cannot impose outgoing boundary condition".into(),
        ));
    }
    let r = -(m[1][0] / m[1][1]) * Complex64::from_polar(1.0, 2.0 * k * x0);
    let t = Complex64::from_polar(1.0, k * (x0 - xn)) * det / m[1][1];
    Ok((t, r))
}
