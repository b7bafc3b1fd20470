//! The hallmark 4*pi fringe: intensities of the two interfering output
//! beams as the spin rotation angle grows. A 2*pi rotation inverts the
//! contrast; only 4*pi restores it.

use fourpi::{amplitudes_from_tau, beam_amplitudes, Spinor};
use std::f64::consts::PI;

fn main() {
    let amps = amplitudes_from_tau(PI / 4.0, 0.0);
    let spin = Spinor::up();
    println!(
        "{:>12} {:>10} {:>10} {:>10} {:>10}",
        "alpha/pi", "i1", "i2", "i3", "i4"
    );
    for i in 0..=16 {
        let alpha = 8.0 * PI * i as f64 / 16.0;
        let out = beam_amplitudes(&amps, alpha, &spin);
        println!(
            "{:>12.2} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            alpha / PI,
            out.i1,
            out.i2,
            out.i3,
            out.i4
        );
    }
    println!("(i2 and i3 oscillate with period 4*pi; i1 and i4 are flat)");
}
