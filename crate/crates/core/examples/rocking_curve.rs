//! Rocking curve: reflected intensity of one plate as the incidence is
//! detuned from the exact Bragg condition.

use fourpi::amplitudes_from_tau;
use std::f64::consts::PI;

fn main() {
    let tau = PI / 2.0; // half a Pendelloesung period
    println!("{:>8} {:>12} {:>12}", "y", "|A_t|^2", "|A_r|^2");
    for i in 0..=24 {
        let y = -3.0 + 6.0 * i as f64 / 24.0;
        let amps = amplitudes_from_tau(tau, y);
        println!(
            "{:>8.2} {:>12.6} {:>12.6}",
            y,
            amps.a_t.norm_sqr(),
            amps.a_r.norm_sqr()
        );
    }
}
