//! The two result tables: non-schurian schemes for small groups (from the
//! bundled fixtures), and Frobenius-action rows with fixed-point counts and
//! subgroup embeddings.
//!
//! Run: `cargo run --release --example table_rows`

use std::path::PathBuf;

use schur::autsearch::SearchOptions;
use schur::cli::{run_table1, run_table2, Table1Status, TABLE1_ROWS};

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    println!("== non-schurian schemes for small groups ==");
    println!("{:>8}  {:>8}  {:>6}  {:>6}  status", "G", "X", "rk(X)", "rk(Γ)");
    let outcomes = run_table1(&dir, &SearchOptions::default()).unwrap();
    for (o, row) in outcomes.iter().zip(TABLE1_ROWS) {
        let status = match &o.status {
            Table1Status::Pass => "pass".to_string(),
            Table1Status::SkippedMissingFixture => "skipped (fixture absent)".into(),
            Table1Status::Fail(m) => format!("FAIL: {m}"),
        };
        println!(
            "{:>8}  {:>8}  {:>6}  {:>6}  {status}",
            format!("[{},{}]", o.group_id.0, o.group_id.1),
            format!("[{},{}]", o.scheme_id.0, o.scheme_id.1),
            row.4,
            row.5
        );
    }

    println!("\n== Frobenius-action rows ==");
    println!("{:>2}  {:>3}  {:>2}  {:>8}  fixed  embeds", "k", "p", "c", "K");
    for o in run_table2().unwrap() {
        println!(
            "{:>2}  {:>3}  {:>2}  {:>8}  {:>5}  {:>6}",
            o.k, o.p, o.c, o.reference, o.fixed_matches, o.embedded
        );
    }
}
