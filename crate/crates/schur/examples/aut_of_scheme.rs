//! Automorphism groups of schemes and the closure test for schurity.
//!
//! A scheme is schurian exactly when it equals the orbital scheme of its own
//! automorphism group. The pentagon scheme passes; the bundled order-16
//! fixture of rank 6 has a rank-7 closure and fails.
//!
//! Run: `cargo run --release --example aut_of_scheme`

use schur::autsearch::{aut_scheme, caut_scheme, SearchOptions};
use schur::io::parse_scheme_file;
use schur::perm::{Perm, PermGroup};
use schur::scheme::orbital_scheme;

fn main() {
    // Rank-3 scheme of the pentagon: aut = D10, color-permuting aut = F20.
    let d10 = PermGroup::new(
        5,
        vec![
            Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
            Perm::from_cycles(5, &[vec![1, 4], vec![2, 3]]).unwrap(),
        ],
    )
    .unwrap();
    let pentagon = orbital_scheme(&d10).unwrap();
    let aut = aut_scheme(&pentagon).unwrap();
    let caut = caut_scheme(&pentagon, &SearchOptions::default()).unwrap();
    println!(
        "pentagon scheme: rank {}, |aut| = {}, |color-permuting aut| = {}",
        pentagon.rank(),
        aut.order(),
        caut.group.order()
    );

    // The bundled non-schurian fixture of order 16.
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/fixtures/as16_no59.txt"
    ))
    .unwrap();
    let fixture = parse_scheme_file(&text).unwrap();
    let aut = aut_scheme(&fixture).unwrap();
    let closed = orbital_scheme(&aut).unwrap();
    println!(
        "order-16 fixture: rank {}, |aut| = {}, closure rank {} → {}",
        fixture.rank(),
        aut.order(),
        closed.rank(),
        if closed.rank() == fixture.rank() {
            "schurian"
        } else {
            "non-schurian"
        }
    );
}
