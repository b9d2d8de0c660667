//! 021-avoiding inversion sequences and the izero recurrence.

use comtet::invseq::{asc, da, enumerate_021, izero, izero_recurrence_table};

fn main() {
    for e in enumerate_021(3) {
        println!("{e}: asc {}, da {}, izero {}", asc(e.entries()), da(e.entries()), izero(e.entries()));
    }
    let t = izero_recurrence_table(8);
    for (n, row) in t.iter().enumerate().skip(1) {
        let cells: Vec<String> = row[1..=n].iter().map(|v| v.to_string()).collect();
        println!("n = {n}: {}", cells.join(" "));
    }
}
