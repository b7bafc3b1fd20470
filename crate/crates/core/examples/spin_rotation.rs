//! Spin rotation in a square field region: exact vs Larmor-limit angle,
//! spin-dependent sojourn time, and stationary-phase group delays.

use fourpi::{
    group_delays, rotation_angle_exact, sojourn_time, weak_field_transmission, FieldProfile,
    NeutronKinematics, Result, Spinor,
};

fn main() -> Result<()> {
    let kin = NeutronKinematics::new(2.0, 1.0)?;
    println!("E = {}, k = {}, v = {}", kin.energy, kin.k, kin.v);

    println!(
        "\n{:>8} {:>14} {:>14} {:>12}",
        "omega", "alpha_weak", "alpha_exact", "rel diff"
    );
    for &omega in &[0.01, 0.05, 0.1, 0.2, 0.5] {
        let profile = FieldProfile::square(omega, 1.0)?;
        let weak = weak_field_transmission(&kin, &profile)?.alpha;
        let exact = rotation_angle_exact(&kin, &profile)?;
        println!(
            "{:>8.3} {:>14.9} {:>14.9} {:>12.3e}",
            omega,
            weak,
            exact,
            (exact - weak).abs() / exact
        );
    }

    // strong splitting: magnetic energy = E/2
    let profile = FieldProfile::square(2.0, 1.0)?;
    println!("\nsquare region with magnetic energy E/2:");
    for (name, s) in [
        ("up  (1,0)", Spinor::up()),
        ("down(0,1)", Spinor::down()),
        ("mixed 50/50", Spinor::from_up_probability(0.5)?),
    ] {
        println!(
            "  sojourn time, {name}: {:.6}",
            sojourn_time(&kin, &profile, &s)?
        );
    }
    let (tau_up, tau_down) = group_delays(&kin, &profile)?;
    println!("  group delays: tau_up = {tau_up:.6}, tau_down = {tau_down:.6}");
    println!("  free transit 2a/v = {:.6}", kin.traversal_time(1.0));
    Ok(())
}
