//! Schurity of the Paley difference-set S-rings over dihedral groups.
//!
//! For each prime p ≡ 3 (mod 4) in the list, builds the Paley difference set
//! in GF(p), forms the rank-4 S-ring over the dihedral group of order 2p,
//! verifies its structure constants, and decides schurity through the full
//! automorphism group of the Cayley scheme. The verdict flips between p = 11
//! and p = 19.
//!
//! Run: `cargo run --release --example cor54`

use schur::autsearch::SearchOptions;
use schur::cli::run_cor54;

fn main() {
    let rows = run_cor54(&[7, 11, 19, 23], &SearchOptions::default()).unwrap();
    println!("{:>4}  {:>10}  {:>13}  {:>9}", "p", "identities", "verdict", "|aut|");
    for row in rows {
        println!(
            "{:>4}  {:>10}  {:>13}  {:>9}",
            row.p,
            if row.identities_ok { "match" } else { "MISMATCH" },
            if row.schurian { "schurian" } else { "non-schurian" },
            row.aut_order
        );
    }
}
