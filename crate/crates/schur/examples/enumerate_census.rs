//! Exhaustive S-ring enumeration and schurity censuses over small groups.
//!
//! C4 carries exactly three S-rings, all schurian. G16 carries 607, all
//! schurian, so it is a Schur group; C2×D8 has non-schurian S-rings and is
//! not.
//!
//! Run: `cargo run --release --example enumerate_census`

use schur::autsearch::SearchOptions;
use schur::enumerate::{enumerate_srings, schurity_census, EnumerationBudget};
use schur::groups;

fn main() {
    let budget = EnumerationBudget::default();
    let opts = SearchOptions::default();

    let c4 = groups::cyclic(4);
    println!("S-rings over C4:");
    for s in enumerate_srings(&c4, &budget).unwrap() {
        println!("  rank {}: {:?}", s.rank(), s.classes());
    }

    for g in [
        groups::g16(),
        groups::direct_product(&groups::cyclic(2), &groups::dihedral(8).unwrap()),
    ] {
        let label = g.label().unwrap_or("(unnamed)").to_string();
        let rows = schurity_census(&g, &budget, &opts).unwrap();
        let bad = rows.iter().filter(|r| !r.schurian).count();
        println!(
            "census over {label}: {} S-rings, {} non-schurian → {}",
            rows.len(),
            bad,
            if bad == 0 { "Schur group" } else { "not a Schur group" }
        );
        if let Some(row) = rows.iter().find(|r| !r.schurian) {
            println!(
                "  first non-schurian: rank {}, |aut| = {}, classes {:?}",
                row.rank, row.aut_order, row.classes
            );
        }
    }
}
