//! Parameter sweeps over the interferometer observables, with a flat
//! `key = value` config format and deterministic CSV output.

use std::fmt::Write as _;
use std::path::PathBuf;

use crate::crystal::amplitudes_from_tau;
use crate::error::{Error, Result};
use crate::interferometer::{beam_amplitudes, field_to_alpha, PhaseMode};
use crate::magnetic::square_field_coefficients;
use crate::magnetic::{FieldProfile, NeutronKinematics, Spin};
use crate::oracle::{discretize_profile, transfer_matrix_transmission};
use crate::spinor::Spinor;
use std::f64::consts::PI;

/// Which variable is swept and which observables are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanKind {
    /// Rotation angle sweep: `alpha_rad,i1,i2,i3,i4`.
    Alpha,
    /// Field strength sweep: `b_field,alpha_rad,i2,i3`.
    Field,
    /// Plate thickness sweep in units of Delta: `d_over_delta,i2,i3,i2_plus_i3`.
    Thickness,
    /// Detuning sweep: `y,abs_at_sq,abs_ar_sq`.
    Detuning,
    /// Closed form vs transfer matrix: `energy,t_re,t_im,t_ref_re,t_ref_im,abs_err`.
    Oracle,
}

impl ScanKind {
    pub fn columns(&self) -> &'static [&'static str] {
        match self {
            ScanKind::Alpha => &["alpha_rad", "i1", "i2", "i3", "i4"],
            ScanKind::Field => &["b_field", "alpha_rad", "i2", "i3"],
            ScanKind::Thickness => &["d_over_delta", "i2", "i3", "i2_plus_i3"],
            ScanKind::Detuning => &["y", "abs_at_sq", "abs_ar_sq"],
            ScanKind::Oracle => &["energy", "t_re", "t_im", "t_ref_re", "t_ref_im", "abs_err"],
        }
    }
}

/// Full description of one sweep: swept range plus the fixed parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub kind: ScanKind,
    pub from: f64,
    pub to: f64,
    pub points: usize,
    /// Reduced plate thickness pi*d/Delta.
    pub tau: f64,
    /// Detuning from the Bragg condition.
    pub y: f64,
    /// Field pulsation (equal to the field strength for a unit moment).
    pub omega: f64,
    /// Flat-top half width a.
    pub half_width: f64,
    /// Ramp length l; 0 is the square profile.
    pub ramp_length: f64,
    pub energy: f64,
    pub mass: f64,
    pub mode: PhaseMode,
    pub spin_up_prob: f64,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl ScanConfig {
    /// Documented defaults: tau = pi/4, natural units m = hbar = 1, a = 1,
    /// spinor (1, 0), weak phase mode; the swept range depends on the kind.
    pub fn defaults(kind: ScanKind) -> Self {
        let (from, to, points) = match kind {
            ScanKind::Alpha => (0.0, 8.0 * PI, 257),
            ScanKind::Field => (0.0, 0.35, 201),
            ScanKind::Thickness => (0.0, 2.0, 201),
            ScanKind::Detuning => (-5.0, 5.0, 201),
            ScanKind::Oracle => (0.5, 5.0, 20),
        };
        Self {
            kind,
            from,
            to,
            points,
            tau: PI / 4.0,
            y: 0.0,
            omega: 0.1,
            half_width: 1.0,
            ramp_length: 0.0,
            energy: 1.0,
            mass: 1.0,
            mode: PhaseMode::Weak,
            spin_up_prob: 1.0,
            out: None,
            svg: None,
        }
    }

    /// Reads a flat `key = value` file (one pair per line, `#` comments) and
    /// overwrites the matching fields. Unknown keys and malformed values are
    /// config errors naming the key and line.
    pub fn apply_file(&mut self, path: &std::path::Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!(
                    "line {}: expected `key = value`, got `{raw}`",
                    idx + 1
                ))
            })?;
            self.set(key.trim(), value.trim())
                .map_err(|e| Error::Config(format!("line {}: {e}", idx + 1)))?;
        }
        Ok(())
    }

    /// Applies one key/value pair (file entry or flag override).
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let num = |v: &str| -> Result<f64> {
            v.parse::<f64>()
                .map_err(|_| Error::Config(format!("key `{key}`: `{v}` is not a number")))
        };
        match key {
            "from" => self.from = num(value)?,
            "to" => self.to = num(value)?,
            "points" => {
                self.points = value.parse::<usize>().map_err(|_| {
                    Error::Config(format!("key `points`: `{value}` is not a positive integer"))
                })?
            }
            "tau" => self.tau = num(value)?,
            "y" => self.y = num(value)?,
            "omega" => self.omega = num(value)?,
            "a" => self.half_width = num(value)?,
            "l" => self.ramp_length = num(value)?,
            "energy" => self.energy = num(value)?,
            "mass" => self.mass = num(value)?,
            "spin_up_prob" => self.spin_up_prob = num(value)?,
            "mode" => {
                self.mode = PhaseMode::parse(value).ok_or_else(|| {
                    Error::Config(format!(
                        "key `mode`: `{value}` is not one of weak, exact, semiclassical"
                    ))
                })?
            }
            "out" => self.out = Some(PathBuf::from(value)),
            "svg" => self.svg = Some(PathBuf::from(value)),
            _ => return Err(Error::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    /// Checks the range and the fixed parameters against the preconditions
    /// of the routed operations. All violations are config errors.
    pub fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::Config(format!(
                "points must be >= 2, got {}",
                self.points
            )));
        }
        // partial_cmp also rejects NaN endpoints
        if self.from.partial_cmp(&self.to) != Some(std::cmp::Ordering::Less) {
            return Err(Error::Config(format!(
                "range start {} must be smaller than stop {}",
                self.from, self.to
            )));
        }
        let as_config = |e: Error| Error::Config(e.to_string());
        NeutronKinematics::new(self.energy, self.mass).map_err(as_config)?;
        FieldProfile::with_ramp(self.omega, self.half_width, self.ramp_length)
            .map_err(|e| Error::Config(e.to_string()))?;
        Spinor::from_up_probability(self.spin_up_prob).map_err(|e| Error::Config(e.to_string()))?;
        if self.kind == ScanKind::Oracle && self.ramp_length != 0.0 {
            return Err(Error::Config(
                "oracle scan compares the square-region closed forms; set l = 0".into(),
            ));
        }
        if self.kind == ScanKind::Field && self.from < 0.0 {
            return Err(Error::Config(
                "field scan range must be non-negative".into(),
            ));
        }
        Ok(())
    }

    fn kinematics(&self) -> NeutronKinematics {
        NeutronKinematics::new(self.energy, self.mass).expect("validated")
    }

    fn spinor(&self) -> Spinor {
        Spinor::from_up_probability(self.spin_up_prob).expect("validated")
    }
}

/// One scan's tabular results.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanTable {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    /// One-line human summary (oracle scans report the max deviation).
    pub summary: Option<String>,
}

fn grid(from: f64, to: f64, points: usize) -> impl Iterator<Item = f64> {
    let step = (to - from) / (points - 1) as f64;
    (0..points).map(move |i| {
        if i + 1 == points {
            to
        } else {
            from + i as f64 * step
        }
    })
}

/// Runs the sweep described by `config`. Deterministic: identical configs
/// produce identical tables.
pub fn run_scan(config: &ScanConfig) -> Result<ScanTable> {
    config.validate()?;
    let columns = config.kind.columns().to_vec();
    let mut rows = Vec::with_capacity(config.points);
    let mut summary = None;
    match config.kind {
        ScanKind::Alpha => {
            let amps = amplitudes_from_tau(config.tau, config.y);
            let spin = config.spinor();
            for alpha in grid(config.from, config.to, config.points) {
                let out = beam_amplitudes(&amps, alpha, &spin);
                rows.push(vec![alpha, out.i1, out.i2, out.i3, out.i4]);
            }
        }
        ScanKind::Field => {
            let kin = config.kinematics();
            let amps = amplitudes_from_tau(config.tau, config.y);
            let spin = config.spinor();
            for b in grid(config.from, config.to, config.points) {
                let profile = FieldProfile::with_ramp(b, config.half_width, config.ramp_length)?;
                let alpha = field_to_alpha(&kin, &profile, config.mode)?;
                let out = beam_amplitudes(&amps, alpha, &spin);
                rows.push(vec![b, alpha, out.i2, out.i3]);
            }
        }
        ScanKind::Thickness => {
            let alpha = if config.omega > 0.0 {
                let kin = config.kinematics();
                let profile =
                    FieldProfile::with_ramp(config.omega, config.half_width, config.ramp_length)?;
                field_to_alpha(&kin, &profile, config.mode)?
            } else {
                0.0
            };
            let spin = config.spinor();
            for d_over_delta in grid(config.from, config.to, config.points) {
                let amps = amplitudes_from_tau(PI * d_over_delta, config.y);
                let out = beam_amplitudes(&amps, alpha, &spin);
                rows.push(vec![d_over_delta, out.i2, out.i3, out.i2 + out.i3]);
            }
        }
        ScanKind::Detuning => {
            for y in grid(config.from, config.to, config.points) {
                let amps = amplitudes_from_tau(config.tau, y);
                rows.push(vec![y, amps.a_t.norm_sqr(), amps.a_r.norm_sqr()]);
            }
        }
        ScanKind::Oracle => {
            let profile = FieldProfile::square(config.omega, config.half_width)?;
            let seg = discretize_profile(&profile, Spin::Up, 1)?;
            let mut max_err = 0.0f64;
            for energy in grid(config.from, config.to, config.points) {
                let kin = NeutronKinematics::new(energy, config.mass)?;
                let (t_closed, _) = square_field_coefficients(&kin, &profile, Spin::Up)?;
                let (t_oracle, _) = transfer_matrix_transmission(&seg, energy, config.mass)?;
                let err = (t_closed - t_oracle).norm();
                max_err = max_err.max(err);
                rows.push(vec![
                    energy,
                    t_closed.re,
                    t_closed.im,
                    t_oracle.re,
                    t_oracle.im,
                    err,
                ]);
            }
            summary = Some(format!(
                "oracle scan: max |T_closed - T_oracle| = {max_err:.3e} over {} energies",
                config.points
            ));
        }
    }
    Ok(ScanTable {
        columns,
        rows,
        summary,
    })
}

/// Formats one value for CSV output: 12 significant digits, scientific.
pub fn format_value(v: f64) -> String {
    format!("{v:.11e}")
}

/// Renders the table as CSV: comma separator, LF endings, header row.
pub fn to_csv(table: &ScanTable) -> String {
    let mut out = String::new();
    out.push_str(&table.columns.join(","));
    out.push('\n');
    for row in &table.rows {
        let mut first = true;
        for v in row {
            if !first {
                out.push(',');
            }
            let _ = write!(out, "{}", format_value(*v));
            first = false;
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn alpha_scan_hits_the_four_pi_pattern() {
        let mut c = ScanConfig::defaults(ScanKind::Alpha);
        c.from = 0.0;
        c.to = 8.0 * PI;
        c.points = 5;
        let table = run_scan(&c).unwrap();
        let i2: Vec<f64> = table.rows.iter().map(|r| r[2]).collect();
        let expected = [0.5, 0.0, 0.5, 0.0, 0.5];
        for (got, want) in i2.iter().zip(expected.iter()) {
            assert!((got - want).abs() < 1e-12, "{i2:?}");
        }
    }

    #[test]
    fn thickness_scan_shows_pendelloesung_nodes() {
        let mut c = ScanConfig::defaults(ScanKind::Thickness);
        c.omega = 0.0;
        c.from = 0.0;
        c.to = 2.0;
        c.points = 9;
        let table = run_scan(&c).unwrap();
        for row in &table.rows {
            let expected = (PI * row[0]).sin().powi(2);
            assert!((row[3] - expected).abs() < 1e-12);
        }
        // zeros at d/Delta = 0, 1, 2
        assert!(table.rows[0][3].abs() < 1e-12);
        assert!(table.rows[4][3].abs() < 1e-12);
        assert!(table.rows[8][3].abs() < 1e-12);
    }

    #[test]
    fn oracle_scan_reports_tiny_deviation() {
        let mut c = ScanConfig::defaults(ScanKind::Oracle);
        c.omega = 0.4;
        let table = run_scan(&c).unwrap();
        assert_eq!(table.rows.len(), 20);
        for row in &table.rows {
            assert!(row[5] < 1e-10, "energy {}: err {}", row[0], row[5]);
        }
        assert!(table.summary.is_some());
    }

    #[test]
    fn detuning_scan_is_a_rocking_curve() {
        let c = ScanConfig::defaults(ScanKind::Detuning);
        let table = run_scan(&c).unwrap();
        for row in &table.rows {
            assert!((row[1] + row[2] - 1.0).abs() < 1e-12);
        }
        // peak of |A_r|^2 at y = 0 (middle row for the symmetric default range)
        let mid = table.rows.len() / 2;
        let peak = table.rows[mid][2];
        assert!(table.rows.iter().all(|r| r[2] <= peak + 1e-15));
    }

    #[test]
    fn config_precedence_and_errors() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("scan.cfg");
        std::fs::write(&path, "# comment\ntau = 0.3\npoints = 11\n").unwrap();
        let mut c = ScanConfig::defaults(ScanKind::Alpha);
        c.apply_file(&path).unwrap();
        assert_relative_eq!(c.tau, 0.3);
        assert_eq!(c.points, 11);
        // flag override wins
        c.set("tau", "0.7").unwrap();
        assert_relative_eq!(c.tau, 0.7);

        // empty file keeps the defaults
        let empty = dir.path().join("empty.cfg");
        std::fs::write(&empty, "").unwrap();
        let mut d = ScanConfig::defaults(ScanKind::Alpha);
        d.apply_file(&empty).unwrap();
        assert_eq!(d, ScanConfig::defaults(ScanKind::Alpha));

        // unknown key names the key, malformed numeric names key and line
        let bad = dir.path().join("bad.cfg");
        std::fs::write(&bad, "frobnicate = 1\n").unwrap();
        let err = ScanConfig::defaults(ScanKind::Alpha)
            .apply_file(&bad)
            .unwrap_err();
        assert!(err.to_string().contains("frobnicate"));
        std::fs::write(&bad, "\n\ntau = abc\n").unwrap();
        let err = ScanConfig::defaults(ScanKind::Alpha)
            .apply_file(&bad)
            .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("tau") && msg.contains("line 3"), "{msg}");
    }

    #[test]
    fn validation_rejects_bad_ranges() {
        let mut c = ScanConfig::defaults(ScanKind::Alpha);
        c.points = 1;
        assert!(matches!(c.validate(), Err(Error::Config(_))));
        let mut c = ScanConfig::defaults(ScanKind::Alpha);
        c.from = 2.0;
        c.to = 1.0;
        assert!(matches!(c.validate(), Err(Error::Config(_))));
        let mut c = ScanConfig::defaults(ScanKind::Field);
        c.energy = -1.0;
        assert!(matches!(c.validate(), Err(Error::Config(_))));
    }

    #[test]
    fn csv_round_trip_preserves_printed_precision() {
        let mut c = ScanConfig::defaults(ScanKind::Alpha);
        c.points = 7;
        let table = run_scan(&c).unwrap();
        let csv = to_csv(&table);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "alpha_rad,i1,i2,i3,i4");
        for (line, row) in lines.zip(table.rows.iter()) {
            for (field, v) in line.split(',').zip(row.iter()) {
                let parsed: f64 = field.parse().unwrap();
                assert_eq!(format_value(parsed), format_value(*v));
            }
        }
        // determinism
        assert_eq!(csv, to_csv(&run_scan(&c).unwrap()));
    }
}
