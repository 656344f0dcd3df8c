//! Property tests for the algebraic laws the crate leans on.

use proptest::prelude::*;

use schur::enumerate::sring_closure;
use schur::groups;
use schur::io;
use schur::perm::{Perm, PermGroup};
use schur::scheme::orbital_scheme;

fn arb_perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in (1..degree).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            images.swap(i, j);
        }
        Perm::from_images(images).unwrap()
    })
}

proptest! {
    #[test]
    fn compose_associative(a in arb_perm(9), b in arb_perm(9), c in arb_perm(9)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_law(p in arb_perm(11)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn chain_membership_consistent(gens in proptest::collection::vec(arb_perm(7), 1..4), word in proptest::collection::vec(0usize..4, 0..12)) {
        let group = PermGroup::new(7, gens.clone()).unwrap();
        // Every word in the generators is a member.
        let mut p = Perm::identity(7);
        for &w in &word {
            p = p.compose(&gens[w % gens.len()]).unwrap();
        }
        prop_assert!(group.contains(&p));
    }

    #[test]
    fn closure_is_idempotent(assign in proptest::collection::vec(0usize..4, 11)) {
        // Random seed partition over C12 (element 0 handled inside).
        let g = groups::cyclic(12);
        let mut seed: Vec<Vec<usize>> = vec![Vec::new(); 4];
        seed[0].push(0);
        for (x, &b) in assign.iter().enumerate() {
            seed[b].push(x + 1);
        }
        seed.retain(|c| !c.is_empty());
        let closed = sring_closure(&g, &seed).unwrap();
        let again = sring_closure(&g, closed.classes()).unwrap();
        prop_assert_eq!(closed.partition_key(), again.partition_key());
    }

    #[test]
    fn closure_scheme_roundtrips_through_files(assign in proptest::collection::vec(0usize..3, 9)) {
        let g = groups::dihedral(10).unwrap();
        let mut seed: Vec<Vec<usize>> = vec![Vec::new(); 3];
        seed[0].push(0);
        for (x, &b) in assign.iter().enumerate() {
            seed[b].push(x + 1);
        }
        seed.retain(|c| !c.is_empty());
        let sring = sring_closure(&g, &seed).unwrap();
        let scheme = sring.to_cayley_scheme();
        let text = io::emit_scheme(&scheme);
        let back = io::parse_scheme_file(&text).unwrap();
        prop_assert!(back.same_coloring(&scheme));
    }

    #[test]
    fn orbit_stabilizer_on_random_subgroups(gens in proptest::collection::vec(arb_perm(6), 1..3)) {
        let group = PermGroup::new(6, gens).unwrap();
        for x in 0..6 {
            let orbit = group.orbit_of(x).len();
            let stab = group.point_stabilizer(x).order();
            prop_assert_eq!(group.order(), stab * num_bigint::BigUint::from(orbit));
        }
    }
}

/// Membership rejects random outsiders of a proper subgroup.
#[test]
fn membership_rejects_outside_transpositions() {
    let a5 = PermGroup::new(
        5,
        vec![
            Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap(),
            Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(a5.order_u64(), 60);
    for i in 0..4 {
        for j in i + 1..5 {
            let t = Perm::from_cycles(5, &[vec![i, j]]).unwrap();
            assert!(!a5.contains(&t), "odd permutation ({i},{j}) in A5");
        }
    }
}

/// Orbital schemes of transitive groups always validate (a spread of
/// transitive subgroups of small symmetric groups).
#[test]
fn orbital_schemes_validate() {
    let mk = |degree: usize, cycles: Vec<Vec<Vec<usize>>>| {
        let gens = cycles
            .into_iter()
            .map(|c| Perm::from_cycles(degree, &c).unwrap())
            .collect();
        PermGroup::new(degree, gens).unwrap()
    };
    let groups: Vec<PermGroup> = vec![
        mk(6, vec![vec![vec![0, 1, 2, 3, 4, 5]]]),
        mk(6, vec![vec![vec![0, 1, 2], vec![3, 4, 5]], vec![vec![0, 3], vec![1, 4], vec![2, 5]]]),
        mk(8, vec![vec![vec![0, 1, 2, 3, 4, 5, 6, 7]], vec![vec![1, 7], vec![2, 6], vec![3, 5]]]),
        mk(9, vec![vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]], vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]]),
        mk(10, vec![vec![vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]], vec![vec![0, 5], vec![1, 6], vec![2, 7], vec![3, 8], vec![4, 9]]]),
    ];
    for g in groups {
        assert!(g.is_transitive());
        let scheme = orbital_scheme(&g).unwrap();
        assert!(scheme.validate().is_ok());
        assert_eq!(scheme.rank(), g.rank_on_pairs());
    }
}
