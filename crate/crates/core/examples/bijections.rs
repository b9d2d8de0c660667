//! Admissible words and the maps built on them.

use comtet::bijections::{self, AdmissibleWord};
use comtet::perm::perm;
use comtet::stats::{comp, iar};

fn main() -> comtet::Result<()> {
    let w = AdmissibleWord::parse("2 3 5 . 7 . . 10 12 . 13 . .")?;
    println!("w = {w}: ics {}, equ {}, SP {:?}, critical {:?}", w.ics(), w.equ(), w.sp(), w.critical_indices());
    let v = bijections::psi(&w)?;
    println!("psi(w) = {v}: ics {}, equ {}", v.ics(), v.equ());

    let pi = bijections::alpha_inv(&w);
    let sigma = bijections::beta_inv(&w);
    println!("321-avoider {pi}\n312-avoider {sigma}");

    let x = bijections::symmetry_witness_321(&pi)?;
    println!("witness: {pi} (iar {}, comp {}) -> {x} (iar {}, comp {})", iar(&pi), comp(&pi), iar(&x), comp(&x));

    let p = perm("5 6 7 3 4 8 2 9 10 1 11");
    println!("phi({p}) = {}", bijections::phi(&p)?);

    let t = perm("4 5 6 2 3 1");
    let s = bijections::theta(&t)?;
    println!("theta({t}) = {s}; iar/comp {}/{} -> {}/{}", iar(&t), comp(&t), iar(&s), comp(&s));
    Ok(())
}
