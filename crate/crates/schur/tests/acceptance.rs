//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::path::PathBuf;
use std::time::Instant;

use schur::autsearch::{self, SearchOptions};
use schur::cli::{check_diffset_identities, run_cor54, run_table1, Table1Status, TABLE1_ROWS};
use schur::designs;
use schur::enumerate::{self, EnumerationBudget};
use schur::groups;
use schur::io;
use schur::perm::{wreath_product, Perm, PermGroup};
use schur::scheme::{self, orbital_scheme};
use schur::sring;
use schur::witness;

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Criterion 1: schurity verdicts of the Paley difference-set S-rings over
/// the dihedral groups of order 2p: schurian for p = 7, 11 and non-schurian
/// for p = 19, 23; each case within the stated time budget.
#[test]
fn c01_paley_schurity_verdicts() {
    for p in [7usize, 11, 19, 23] {
        let started = Instant::now();
        let rows = run_cor54(&[p], &opts()).unwrap();
        let elapsed = started.elapsed();
        assert_eq!(rows.len(), 1);
        let expected = p <= 11;
        assert_eq!(
            rows[0].schurian, expected,
            "p = {p}: expected schurian = {expected}"
        );
        assert!(rows[0].identities_ok, "p = {p}: structure constants");
        assert!(
            elapsed.as_secs() < 120,
            "p = {p} took {elapsed:?}, over the 120 s budget"
        );
    }
    println!("criterion 01 (Paley schurity verdicts 7/11/19/23): PASS");
}

/// Criterion 2: the four structure-constant identities of the rank-4
/// difference-set S-ring hold exactly for the Paley and Singer families, and
/// the S-ring validates.
#[test]
fn c02_diffset_structure_constants() {
    let mut cases: Vec<designs::DifferenceSet> = Vec::new();
    for q in [7usize, 11, 19, 23] {
        cases.push(designs::paley_difference_set(q).unwrap());
    }
    for (q, d) in [(2usize, 2u32), (2, 3), (3, 2)] {
        cases.push(designs::singer_difference_set(q, d).unwrap());
    }
    for ds in &cases {
        let gdih = groups::generalized_dihedral(&ds.group).unwrap();
        // from_partition validates the S-ring axioms on construction.
        let s = sring::difference_set_sring(&gdih, ds.n, &ds.set).unwrap();
        assert!(
            check_diffset_identities(&s, ds.n as u64, ds.k as u64, ds.lambda as u64),
            "identities fail for (n,k,λ) = ({}, {}, {})",
            ds.n,
            ds.k,
            ds.lambda
        );
    }
    println!("criterion 02 (difference-set structure constants): PASS");
}

/// Criterion 3: schurity of the difference-set S-ring agrees with the
/// conjunction of the three design transitivity flags, for every constructed
/// difference set with n ≤ 40.
#[test]
fn c03_schurity_matches_design_transitivity() {
    let mut cases: Vec<designs::DifferenceSet> = Vec::new();
    for q in [7usize, 11, 19, 23] {
        cases.push(designs::paley_difference_set(q).unwrap());
    }
    for (q, d) in [(2usize, 2u32), (2, 3), (3, 2)] {
        cases.push(designs::singer_difference_set(q, d).unwrap());
    }
    for ds in cases.iter().filter(|ds| ds.n <= 40) {
        let gdih = groups::generalized_dihedral(&ds.group).unwrap();
        let s = sring::difference_set_sring(&gdih, ds.n, &ds.set).unwrap();
        let verdict = sring::is_schurian(&s, &opts()).unwrap();
        let design = designs::dev(ds);
        design.validate().unwrap();
        let profile = designs::transitivity_profile(&design, &opts()).unwrap();
        assert_eq!(
            verdict.is_schurian(),
            profile.all(),
            "disagreement at (n,k,λ) = ({}, {}, {}): schurian {} vs profile {:?}",
            ds.n,
            ds.k,
            ds.lambda,
            verdict.is_schurian(),
            profile
        );
    }
    println!("criterion 03 (schurity ⟺ 2/flag/antiflag transitivity): PASS");
}

/// Criterion 4: the small-group table rows, fixture-gated. The order-16 and
/// order-18 rows must be present and pass (ranks and a regular subgroup of
/// the row's type); other rows pass or are skipped explicitly, never failed.
#[test]
fn c04_small_group_table_rows() {
    let started = Instant::now();
    let outcomes = run_table1(&fixtures_dir(), &opts()).unwrap();
    let mut passed = 0;
    let mut skipped = 0;
    for (outcome, row) in outcomes.iter().zip(TABLE1_ROWS) {
        match &outcome.status {
            Table1Status::Pass => passed += 1,
            Table1Status::SkippedMissingFixture => {
                skipped += 1;
                assert!(
                    row.0 > 18,
                    "order-16/18 fixture missing for [{},{}]",
                    row.0,
                    row.1
                );
                println!("  row [{},{}]: skipped (fixture absent)", row.0, row.1);
            }
            Table1Status::Fail(msg) => {
                panic!("row [{},{}] failed: {msg}", row.0, row.1);
            }
        }
    }
    // All nine order-16/18 rows must be among the passes.
    assert!(passed >= 9, "only {passed} rows passed");
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 600, "table took {elapsed:?}");
    println!(
        "criterion 04 (small-group table rows): PASS ({passed} passed, {skipped} skipped, in {elapsed:?})"
    );
}

/// Criterion 5: witness constructions. The bundled degree-56 generator
/// fixture yields the prescribed valency labeling, the stated fusion is a
/// valid scheme, and the closure test certifies non-schurity. The degree-48
/// fixture and the live degree-40 and degree-30 recipes are exercised the
/// same way.
#[test]
fn c05_witness_fusions_certify_non_schurity() {
    let dir = fixtures_dir();
    let path56 = dir.join("grp672_deg56.txt");
    assert!(path56.exists(), "degree-56 fixture must be bundled");
    let text = std::fs::read_to_string(&path56).unwrap();
    let gamma56 = io::parse_permgroup_file(&text).unwrap();
    assert_eq!(gamma56.order_u64(), 672);
    assert!(gamma56.is_transitive());
    let report = witness::frobenius56_witness(&gamma56, &opts()).unwrap();
    assert_eq!(report.scheme_rank, 8);
    assert_eq!(report.fused.rank(), 5);
    assert!(report.non_schurian, "degree-56 fusion must be non-schurian");

    let path48 = dir.join("grp1152_deg48.txt");
    if path48.exists() {
        let text = std::fs::read_to_string(&path48).unwrap();
        let gamma48 = io::parse_permgroup_file(&text).unwrap();
        assert_eq!(gamma48.order_u64(), 1152);
        let report = witness::frobenius48_witness(&gamma48, &opts()).unwrap();
        assert!(report.non_schurian);
    } else {
        println!("  degree-48 fixture absent: skipped");
    }

    let report40 = witness::frobenius80_witness(&opts()).unwrap();
    assert_eq!(report40.degree, 40);
    assert!(report40.non_schurian);

    let report30 = witness::a5_witness(&opts()).unwrap();
    assert_eq!(report30.degree, 30);
    assert!(report30.non_schurian);

    println!("criterion 05 (witness fusions certify non-schurity): PASS");
}

/// Criterion 6: enumeration agrees with the brute-force oracle on every
/// group of order at most 8, as exact sets of partitions.
#[test]
fn c06_enumeration_oracle_equivalence() {
    let started = Instant::now();
    let catalogue: Vec<groups::FiniteGroup> = vec![
        groups::cyclic(1),
        groups::cyclic(2),
        groups::cyclic(3),
        groups::cyclic(4),
        groups::elementary_abelian(2, 2),
        groups::cyclic(5),
        groups::cyclic(6),
        groups::symmetric(3).unwrap(),
        groups::cyclic(7),
        groups::cyclic(8),
        groups::direct_product(&groups::cyclic(4), &groups::cyclic(2)),
        groups::elementary_abelian(2, 3),
        groups::dihedral(8).unwrap(),
        groups::quaternion_generalized(8).unwrap(),
    ];
    assert_eq!(catalogue.len(), 14, "all groups of order ≤ 8");
    for g in &catalogue {
        let fast = enumerate::enumerate_srings(g, &EnumerationBudget::default()).unwrap();
        let slow = enumerate::brute_force_srings(g).unwrap();
        let fast_keys: std::collections::BTreeSet<Vec<usize>> =
            fast.iter().map(|s| s.partition_key()).collect();
        let slow_keys: std::collections::BTreeSet<Vec<usize>> =
            slow.iter().map(|s| s.partition_key()).collect();
        assert_eq!(
            fast_keys,
            slow_keys,
            "oracle disagreement over {:?} (order {})",
            g.label(),
            g.order()
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 300, "oracle run took {elapsed:?}");
    println!(
        "criterion 06 (enumeration = brute-force oracle, order ≤ 8): PASS in {elapsed:?}"
    );
}

/// Criterion 7: censuses. Every S-ring over G16 is schurian; the census over
/// C2×D8 contains a non-schurian S-ring.
#[test]
fn c07_censuses_g16_and_c2xd8() {
    let g16 = groups::g16();
    let rows = enumerate::schurity_census(&g16, &EnumerationBudget::default(), &opts()).unwrap();
    assert!(!rows.is_empty());
    assert!(
        rows.iter().all(|r| r.schurian),
        "G16 must be a Schur group: every S-ring schurian"
    );
    let g16_count = rows.len();

    let c2d8 = groups::direct_product(&groups::cyclic(2), &groups::dihedral(8).unwrap());
    let rows = enumerate::schurity_census(&c2d8, &EnumerationBudget::default(), &opts()).unwrap();
    let non_schurian = rows.iter().filter(|r| !r.schurian).count();
    assert!(
        non_schurian > 0,
        "C2×D8 must have at least one non-schurian S-ring"
    );
    println!(
        "criterion 07 (censuses): PASS (G16: {g16_count} S-rings all schurian; C2xD8: {non_schurian} non-schurian)"
    );
}

/// Criterion 8: Galois-closure property suite over 200 pseudorandomly
/// generated Cayley schemes (closures of random partitions) over groups of
/// order ≤ 12: X ≤ inv(aut(X)) and aut(inv(aut(X))) = aut(X), zero failures.
#[test]
fn c08_galois_closure_suite() {
    let pool: Vec<groups::FiniteGroup> = vec![
        groups::cyclic(6),
        groups::cyclic(8),
        groups::cyclic(9),
        groups::cyclic(10),
        groups::cyclic(12),
        groups::elementary_abelian(2, 3),
        groups::elementary_abelian(3, 2),
        groups::symmetric(3).unwrap(),
        groups::dihedral(8).unwrap(),
        groups::dihedral(10).unwrap(),
        groups::dihedral(12).unwrap(),
        groups::quaternion_generalized(8).unwrap(),
        groups::alternating(4).unwrap(),
        groups::direct_product(&groups::cyclic(2), &groups::cyclic(6)),
    ];
    // Deterministic xorshift stream; fixed seed.
    let mut state = 0x5DEECE66Du64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut checked = 0;
    while checked < 200 {
        let g = &pool[(next() % pool.len() as u64) as usize];
        let n = g.order();
        // Random seed partition into at most 4 blocks, closed to an S-ring.
        let blocks = 2 + (next() % 3) as usize;
        let mut seed: Vec<Vec<usize>> = vec![Vec::new(); blocks];
        seed[0].push(0);
        for x in 1..n {
            seed[(next() % blocks as u64) as usize].push(x);
        }
        seed.retain(|b| !b.is_empty());
        let closure = enumerate::sring_closure(g, &seed).unwrap();
        let x = closure.to_cayley_scheme();
        let aut = autsearch::aut_scheme(&x).unwrap();
        let closed = orbital_scheme(&aut).unwrap();
        assert!(x.is_fusion_of(&closed), "X ≤ inv(aut(X)) fails");
        let aut2 = autsearch::aut_scheme(&closed).unwrap();
        assert_eq!(aut.order(), aut2.order(), "closure idempotence fails");
        for gen in aut.generators() {
            assert!(aut2.contains(gen));
        }
        checked += 1;
    }
    println!("criterion 08 (Galois closure suite, 200 cases): PASS");
}

/// Criterion 9: the orbital scheme of an imprimitive wreath product equals
/// the wreath product of the orbital schemes, as colorings after canonical
/// relabeling, for the three stated pairs.
#[test]
fn c09_wreath_consistency() {
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
    let d10 = PermGroup::new(
        5,
        vec![
            Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
            Perm::from_cycles(5, &[vec![1, 4], vec![2, 3]]).unwrap(),
        ],
    )
    .unwrap();
    let cases: Vec<(PermGroup, PermGroup)> = vec![
        (cyc(2), sym3),
        (cyc(3), cyc(4)),
        (cyc(2), d10),
    ];
    for (bottom, top) in &cases {
        let lhs = orbital_scheme(&wreath_product(bottom, top).unwrap()).unwrap();
        let raw = scheme::wreath(
            &orbital_scheme(bottom).unwrap(),
            &orbital_scheme(top).unwrap(),
        );
        let rhs = scheme::AssociationScheme::from_color_matrix(raw.size(), raw.color_matrix().to_vec())
            .unwrap();
        assert!(
            lhs.same_coloring(&rhs),
            "wreath mismatch for degrees {} and {}",
            bottom.degree(),
            top.degree()
        );
    }
    println!("criterion 09 (wreath consistency, 3 cases): PASS");
}

/// Criterion 10: what is out of reach at desk scale is declared rather than
/// recomputed, and the exploratory rank-4 fusion report for PSL(2,7) runs to
/// completion deterministically with no expected fusion asserted.
#[test]
fn c10_out_of_scope_declared_and_psl27_report() {
    // Declarations (see README for the same list): classification-scale
    // results are consumed as context, not recomputed.
    for line in [
        "exhaustive S-ring enumeration beyond the order-32 cap",
        "classification theorems over all group orders",
        "the explicit rank-4 fusion construction for PSL(2,q) at general q",
    ] {
        println!("  declared out of scope: {line}");
    }
    let g = groups::psl2(7).unwrap();
    let run = |g: &groups::FiniteGroup| {
        scheme::rank4_size_respecting_fusions(g)
            .iter()
            .map(|c| {
                format!(
                    "{:?} scheme={} equals_classes={}",
                    c.partition.classes,
                    c.scheme.is_some(),
                    c.equals_class_partition
                )
            })
            .collect::<Vec<String>>()
    };
    let first = run(&g);
    let second = run(&g);
    assert_eq!(first, second, "report must be deterministic");
    assert!(!first.is_empty(), "candidate list must be explored");
    for line in &first {
        println!("  psl2(7) rank-4 candidate: {line}");
    }
    println!(
        "criterion 10 (declarations + deterministic PSL(2,7) report, {} candidates): PASS",
        first.len()
    );
}
