//! Cross-check of the square-region closed forms against the independent
//! transfer-matrix solver, including a tunneling case.

use fourpi::{
    discretize_profile, square_field_coefficients, transfer_matrix_transmission, FieldProfile,
    NeutronKinematics, Result, Spin,
};

fn main() -> Result<()> {
    println!(
        "{:>6} {:>6} {:>6} {:>12} {:>12}",
        "E", "omega", "spin", "|T|^2", "|dT|"
    );
    for &(energy, omega) in &[(2.0, 0.1), (2.0, 1.5), (1.0, 3.0), (0.3, 4.0)] {
        let kin = NeutronKinematics::new(energy, 1.0)?;
        let profile = FieldProfile::square(omega, 1.0)?;
        for spin in [Spin::Up, Spin::Down] {
            let (t_ref, _) = square_field_coefficients(&kin, &profile, spin)?;
            let seg = discretize_profile(&profile, spin, 1)?;
            let (t, _) = transfer_matrix_transmission(&seg, energy, 1.0)?;
            println!(
                "{:>6.2} {:>6.2} {:>6} {:>12.6} {:>12.3e}",
                energy,
                omega,
                format!("{spin:?}"),
                t.norm_sqr(),
                (t - t_ref).norm()
            );
        }
    }
    println!("(E = 0.3, omega = 4 puts the up channel in the tunneling regime)");
    Ok(())
}
