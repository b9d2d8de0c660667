//! Run every verification suite with small bounds.
//!
//! cargo run --release --example verify_all

use comtet::verify::{run, Bounds, CHECKS};

fn main() -> comtet::Result<()> {
    let b = Bounds { nmax: Some(7), order: Some(7), depth: Some(7), candidates: None };
    for c in CHECKS {
        print!("{}", run(c.name, &b)?);
    }
    Ok(())
}
