//! Wreath products: orbital schemes of imprimitive wreath products of
//! permutation groups coincide with wreath products of the orbital schemes.
//!
//! Run: `cargo run --release --example wreath_schemes`

use schur::perm::{wreath_product, Perm, PermGroup};
use schur::scheme::{orbital_scheme, wreath, AssociationScheme};

fn main() {
    let cyc = |n: usize| {
        PermGroup::new(n, vec![Perm::from_cycles(n, &[(0..n).collect()]).unwrap()]).unwrap()
    };
    let sym3 = PermGroup::new(
        3,
        vec![
            Perm::from_cycles(3, &[vec![0, 1]]).unwrap(),
            Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
        ],
    )
    .unwrap();
    let cases: Vec<(&str, PermGroup, PermGroup)> = vec![
        ("C2 wr Sym(3)", cyc(2), sym3),
        ("C3 wr C4", cyc(3), cyc(4)),
    ];
    for (name, bottom, top) in cases {
        let group_side = orbital_scheme(&wreath_product(&bottom, &top).unwrap()).unwrap();
        let raw = wreath(&orbital_scheme(&bottom).unwrap(), &orbital_scheme(&top).unwrap());
        let scheme_side =
            AssociationScheme::from_color_matrix(raw.size(), raw.color_matrix().to_vec()).unwrap();
        println!(
            "{name}: {} points, rank {} = {} + {} - 1, colorings agree: {}",
            group_side.size(),
            group_side.rank(),
            orbital_scheme(&bottom).unwrap().rank(),
            orbital_scheme(&top).unwrap().rank(),
            group_side.same_coloring(&scheme_side)
        );
    }
}
