//! Closed forms against brute force, and the cubic for the separable descent series.

use comtet::engine::{joint_series, DES_IAR_COMP};
use comtet::genfun::{closed_form, schroder_residual, schroder_s_series, verify_sepa_system};
use comtet::perm::patterns;

fn main() -> comtet::Result<()> {
    let p = patterns("132,321");
    let cf = closed_form(&p, 6)?;
    println!("(132,321) closed form:\n{cf}");
    println!("matches brute force: {}", cf == joint_series(6, &p, &DES_IAR_COMP));

    let s = schroder_s_series(10);
    println!("\ndescent series of separable permutations:\n{s}");
    println!("residual zero: {}", schroder_residual(&s).is_zero());

    for (name, res) in verify_sepa_system(7)?.residuals {
        println!("{name}: {}", if res.is_zero() { "0" } else { "nonzero" });
    }
    Ok(())
}
