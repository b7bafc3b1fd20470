use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An input violated a simple domain restriction (non-positive length,
    /// probability outside [0, 1], ...).
    #[error("invalid input: {0}")]
    Domain(String),

    /// Bragg geometry impossible: the reciprocal-lattice vector is too long
    /// for the incident wavenumber.
    #[error("impossible Bragg geometry: g1 = {g1} must be smaller than 2*k0 = {limit}")]
    Geometry { g1: f64, limit: f64 },

    /// A spin channel does not propagate: the kinetic energy does not exceed
    /// the magnetic energy of that channel.
    #[error("spin channel closed: E = {energy} does not exceed the magnetic energy {magnetic}")]
    ChannelClosed { energy: f64, magnetic: f64 },

    /// The local wavenumber vanishes exactly (energy equal to a potential
    /// value), so the plane-wave matching degenerates.
    #[error("degenerate threshold: local wavenumber vanishes at E = {0}")]
    DegenerateThreshold(f64),

    /// Adaptive quadrature did not reach the requested tolerance.
    #[error("quadrature failed: {0}")]
    Quadrature(String),

    /// A scan configuration file or override could not be interpreted.
    #[error("config error: {0}")]
    Config(String),

    /// A numerical failure outside the categories above.
    #[error("numerical error: {0}")]
    Numerical(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
