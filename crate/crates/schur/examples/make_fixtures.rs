//! Regenerates everything under `fixtures/` from scratch:
//!
//! - permutation-group generator files for the two large coset-action
//!   overgroups (degree 56 and degree 48), and
//! - non-schurian Cayley scheme matrices for the small-group table rows,
//!   found by exhaustive S-ring enumeration over the row's group and
//!   filtered by (rank, rank of the closed scheme, regular subgroups).
//!
//! Usage: `cargo run --release --example make_fixtures [--small-only]`

use std::path::Path;

use schur::autsearch::{self, SearchOptions};
use schur::enumerate::{enumerate_srings, EnumerationBudget};
use schur::io;
use schur::scheme::orbital_scheme;
use schur::witness;

/// (scheme order, scheme index, source group id, rank, closed rank,
/// group ids whose regular copies must appear in the automorphism group)
const SCHEME_SPECS: &[(usize, usize, (usize, usize), usize, usize, &[(usize, usize)])] = &[
    (16, 59, (16, 3), 6, 7, &[(16, 3), (16, 9), (16, 12)]),
    (16, 94, (16, 4), 7, 10, &[(16, 4)]),
    (16, 6, (16, 6), 3, 4, &[(16, 6), (16, 8), (16, 11)]),
    (18, 41, (18, 3), 6, 8, &[(18, 3), (18, 4)]),
    (24, 191, (24, 1), 7, 24, &[(24, 1)]),
    (24, 308, (24, 3), 8, 9, &[(24, 3), (24, 11)]),
    (24, 304, (24, 4), 8, 14, &[(24, 4), (24, 7), (24, 10)]),
    (24, 299, (24, 5), 8, 14, &[(24, 5), (24, 8), (24, 14)]),
    (24, 17, (24, 12), 4, 6, &[(24, 12)]),
    (24, 106, (24, 13), 6, 12, &[(24, 13)]),
    (27, 382, (27, 3), 4, 6, &[(27, 3), (27, 4)]),
];

fn main() {
    let small_only = std::env::args().any(|a| a == "--small-only");
    let dir = Path::new("crates/schur/fixtures");
    std::fs::create_dir_all(dir).unwrap();
    let opts = SearchOptions::default();

    println!("== permutation group fixtures ==");
    let gamma56 = witness::frobenius56_overgroup().unwrap();
    let path = dir.join("grp672_deg56.txt");
    std::fs::write(
        &path,
        format!(
            "# order-672 rank-8 overgroup of the right regular E8:C7 on 56 points\n{}",
            io::emit_permgroup(&gamma56)
        ),
    )
    .unwrap();
    println!("wrote {}", path.display());

    let gamma48 = witness::frobenius48_overgroup().unwrap();
    let path = dir.join("grp1152_deg48.txt");
    std::fs::write(
        &path,
        format!(
            "# order-1152 rank-9 overgroup of the right regular E16:C3 on 48 points\n{}",
            io::emit_permgroup(&gamma48)
        ),
    )
    .unwrap();
    println!("wrote {}", path.display());

    println!("== scheme fixtures ==");
    for &(so, si, src, rank, closed, regulars) in SCHEME_SPECS {
        if small_only && so > 18 {
            println!("as{so}_no{si}: skipped (--small-only)");
            continue;
        }
        let started = std::time::Instant::now();
        let group = witness::catalogue_group(src.0, src.1).unwrap();
        let budget = EnumerationBudget {
            node_cap: 500_000_000,
            jobs: 4,
            ..EnumerationBudget::default()
        };
        let srings = match enumerate_srings(&group, &budget) {
            Ok(s) => s,
            Err(e) => {
                println!("as{so}_no{si}: enumeration over [{},{}] failed: {e}", src.0, src.1);
                continue;
            }
        };
        println!(
            "as{so}_no{si}: {} S-rings over [{},{}] in {:?}",
            srings.len(),
            src.0,
            src.1,
            started.elapsed()
        );
        let mut written = false;
        for sring in srings.iter().filter(|s| s.rank() == rank) {
            let scheme = sring.to_cayley_scheme();
            let aut = match autsearch::aut_scheme_with(&scheme, &opts) {
                Ok((a, _)) => a,
                Err(_) => continue,
            };
            let closed_rank = orbital_scheme(&aut).map(|s| s.rank()).unwrap_or(0);
            if closed_rank != closed {
                continue;
            }
            let mut all_regular = true;
            for &(go, gi) in regulars {
                let g = witness::catalogue_group(go, gi).unwrap();
                match autsearch::find_regular_subgroup(&aut, &g, &opts) {
                    Ok(Some(_)) => {}
                    _ => {
                        all_regular = false;
                        break;
                    }
                }
            }
            if !all_regular {
                continue;
            }
            let path = dir.join(format!("as{so}_no{si}.txt"));
            std::fs::write(
                &path,
                format!(
                    "# non-schurian scheme on {so} points: rank {rank}, closed rank {closed}\n{}",
                    io::emit_scheme(&scheme)
                ),
            )
            .unwrap();
            println!(
                "  wrote {} (|aut| = {}) in {:?}",
                path.display(),
                aut.order(),
                started.elapsed()
            );
            written = true;
            break;
        }
        if !written {
            println!("  NO candidate found for as{so}_no{si}");
        }
    }
}
