//! Difference sets, their symmetric 2-designs, and transitivity profiles.
//!
//! The development of the Paley set for q = 7 is the point-line design of
//! the projective plane of order 2: its automorphism group has order 168 and
//! acts transitively on point pairs, flags, and antiflags. For q = 19 the
//! automorphism group is too small for any of the three.
//!
//! Run: `cargo run --release --example design_check`

use schur::autsearch::SearchOptions;
use schur::designs;

fn main() {
    let opts = SearchOptions::default();
    let cases: Vec<designs::DifferenceSet> = vec![
        designs::paley_difference_set(7).unwrap(),
        designs::paley_difference_set(11).unwrap(),
        designs::paley_difference_set(19).unwrap(),
        designs::singer_difference_set(2, 3).unwrap(),
        designs::singer_difference_set(3, 2).unwrap(),
    ];
    println!(
        "{:>12}  {:>6}  {:>6}  {:>5}  {:>5}  {:>8}",
        "(n,k,λ)", "2-trans", "flag", "anti", "all", "|aut(B)|"
    );
    for ds in cases {
        let design = designs::dev(&ds);
        design.validate().unwrap();
        let aut = design.automorphism_group(&opts).unwrap();
        let profile = designs::transitivity_profile(&design, &opts).unwrap();
        println!(
            "{:>12}  {:>6}  {:>6}  {:>5}  {:>5}  {:>8}",
            format!("({},{},{})", ds.n, ds.k, ds.lambda),
            profile.two_transitive,
            profile.flag_transitive,
            profile.antiflag_transitive,
            profile.all(),
            aut.order()
        );
    }
}
