//! Enumerate a few classes and print their (iar, comp) matrices.
//!
//! cargo run --example pattern_classes

use comtet::engine::{count, distribution_matrix, refined_matrices, RefineKey};
use comtet::perm::patterns;

fn main() -> comtet::Result<()> {
    for key in ["321", "132", "2413,3142", "2413,4213", "2431,4231"] {
        let p = patterns(key);
        let sizes: Vec<String> = (1..=8).map(|n| count(n, &p).to_string()).collect();
        println!("({key}) sizes: {}", sizes.join(" "));
    }

    let sep = patterns("2413,3142");
    println!("\nM_5(2413,3142), rows iar, columns comp:\n{}", distribution_matrix(5, &sep)?);

    // one refined matrix per set of left-to-right maxima; sets containing 1
    // only shift a smaller matrix down the diagonal
    println!("\nM_5(312) refined by LMAX, 1 not a maximum:");
    for (key, m) in refined_matrices(5, &patterns("312"), RefineKey::Lmax)?.into_iter().filter(|(k, _)| k[0][0] > 1) {
        println!("LMAX = {:?}, Hankel: {}\n{m}", key[0], m.is_hankel());
    }
    Ok(())
}
