//! Simulation of a three-plate neutron interferometer with a spin-rotating
//! magnetic field region on one path.
//!
//! The library covers three layers:
//!
//! * [`crystal`] — dynamical two-wave diffraction through a perfect-crystal
//!   plate in symmetric Laue geometry: dispersion branches, Pendelloesung
//!   length, and the transmitted/reflected amplitude pair of a plate.
//! * [`magnetic`] — spin-dependent transmission through a static field
//!   region: exact square-region coefficients, the weak-field (Larmor)
//!   limit, an exact unwrapped rotation angle, a semiclassical phase
//!   integral for smoothly ramped profiles, and time observables (sojourn
//!   time, stationary-phase group delays).
//! * [`interferometer`] — composition of three identical plates into four
//!   outgoing beams, with the hallmark 4*pi-periodic interference between
//!   beams 2 and 3.
//!
//! [`oracle`] provides an independent brute-force transfer-matrix solver
//! used to cross-check the closed forms, and [`scan`]/[`plot`] drive
//! parameter sweeps with CSV and SVG output (also exposed through the
//! `fourpi` binary).
//!
//! Everything uses natural units with hbar = 1; energies, masses, lengths
//! and field pulsations are dimensionless and mutually consistent.

pub mod crystal;
pub mod error;
pub mod interferometer;
pub mod magnetic;
pub mod oracle;
pub mod plot;
pub mod scan;
pub mod spinor;

pub use crystal::{
    amplitudes_from_tau, plate_amplitudes, DiffractionAmplitudes, PlateParams, TwoWaveMode,
};
pub use error::{Error, Result};
pub use interferometer::{
    beam_amplitudes, beam_intensities_closed_form, field_to_alpha, BeamOutputs, PhaseMode,
};
pub use magnetic::{
    group_delays, rotation_angle_exact, semiclassical_phase, sojourn_time, spin_transmission,
    square_field_coefficients, weak_field_transmission, FieldProfile, NeutronKinematics, Spin,
};
pub use oracle::{discretize_profile, transfer_matrix_transmission, SegmentedProfile};
pub use scan::{run_scan, to_csv, ScanConfig, ScanKind, ScanTable};
pub use spinor::Spinor;
