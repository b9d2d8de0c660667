//! Generating trees for (2431,4231) and (2413,4213) against the abstract rule.

use comtet::gentree::{ava, compare_trees, GenTree};
use comtet::perm::{patterns, perm};

fn main() -> comtet::Result<()> {
    println!("AVA(14523) = {:?}", ava(&perm("14523"), &patterns("2431,4231"))?);
    let abs = GenTree::abstract_schroder(4);
    for line in abs.dump() {
        println!("{line}");
    }
    for key in ["2431,4231", "2413,4213", "2413,3142"] {
        let t = GenTree::concrete(&patterns(key), 7);
        println!("({key}) same tree as the rule to depth 7: {}", compare_trees(&GenTree::abstract_schroder(7), &t));
    }
    Ok(())
}
