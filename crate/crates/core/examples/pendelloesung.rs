//! Pendelloesung oscillation: how the reflected intensity of a single
//! plate beats with its thickness, for a plate described by physical
//! parameters (wavenumbers and potential Fourier coefficients).

use fourpi::{plate_amplitudes, PlateParams, Result};

fn main() -> Result<()> {
    let (k0, g1, u0, ug) = (10.0, 4.0, 0.01, 0.02);
    let delta = PlateParams::new(k0, g1, u0, ug, 0.0, 1.0)?.delta;
    println!("characteristic length Delta = {delta:.6}");
    println!("{:>10} {:>12} {:>12}", "d/Delta", "|A_t|^2", "|A_r|^2");
    for i in 0..=20 {
        let d_over_delta = 2.0 * i as f64 / 20.0;
        let params = PlateParams::new(k0, g1, u0, ug, 0.0, d_over_delta.max(1e-9) * delta)?;
        let amps = plate_amplitudes(&params, 0.0);
        println!(
            "{:>10.2} {:>12.6} {:>12.6}",
            d_over_delta,
            amps.a_t.norm_sqr(),
            amps.a_r.norm_sqr()
        );
    }
    println!("(the reflected beam empties at every integer d/Delta)");
    Ok(())
}
