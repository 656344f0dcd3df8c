//! The four non-schurian fusion witnesses: degree 56 and 48 over the
//! Frobenius groups E8:C7 and E16:C3 (overgroups with prescribed stabilizers
//! rebuilt from automorphism groups), and degree 40 and 30 over E16:C5 and
//! A5 (coset actions followed by a normalizer step). Each run labels the
//! orbital scheme by its valency pattern, applies the prescribed fusion, and
//! certifies non-schurity via the closure test.
//!
//! Run: `cargo run --release --example witnesses`

use schur::autsearch::SearchOptions;
use schur::witness;

fn main() {
    let opts = SearchOptions::default();

    let gamma56 = witness::frobenius56_overgroup().unwrap();
    let reports = vec![
        witness::frobenius56_witness(&gamma56, &opts).unwrap(),
        witness::a5_witness(&opts).unwrap(),
        witness::frobenius80_witness(&opts).unwrap(),
        {
            let gamma48 = witness::frobenius48_overgroup().unwrap();
            witness::frobenius48_witness(&gamma48, &opts).unwrap()
        },
    ];
    println!(
        "{:>16}  {:>4}  {:>8}  {:>7}  {:>6}  {:>8}  {:>7}  {}",
        "witness", "deg", "|Γ|", "rank", "fused", "|aut|", "closure", "non-schurian"
    );
    for r in reports {
        println!(
            "{:>16}  {:>4}  {:>8}  {:>7}  {:>6}  {:>8}  {:>7}  {}",
            r.name,
            r.degree,
            r.overgroup_order,
            r.scheme_rank,
            r.fused.rank(),
            r.fused_aut_order,
            r.closed_rank,
            r.non_schurian
        );
    }
}
