//! Exploratory report: rank-4 fusions of the conjugacy-class scheme of
//! PSL(2,7) whose color partition respects class sizes.
//!
//! The class scheme has rank 6 with class sizes 1, 21, 24, 24, 42, 56; the
//! two size-24 classes are inseparable by size, leaving five size cells. All
//! partitions of the nonreflexive cells into three blocks are tried; the
//! report records which merges survive the intersection-number check. No
//! particular fusion is asserted; the output is a research artifact.
//!
//! Run: `cargo run --release --example psl2_rank4_report`

use schur::groups::psl2;
use schur::scheme::{class_scheme, rank4_size_respecting_fusions};

fn main() {
    let g = psl2(7).unwrap();
    let cs = class_scheme(&g);
    let mut sizes: Vec<u32> = (1..cs.rank() as u32).map(|c| cs.valency(c)).collect();
    sizes.sort_unstable();
    println!(
        "class scheme of {}: {} points, rank {}, class sizes {:?}",
        g.label().unwrap_or("?"),
        cs.size(),
        cs.rank(),
        sizes
    );
    let candidates = rank4_size_respecting_fusions(&g);
    println!("{} size-respecting rank-4 candidates:", candidates.len());
    for c in &candidates {
        println!(
            "  merge {:?} → {}{}",
            c.partition.classes,
            if c.scheme.is_some() { "scheme" } else { "not a scheme" },
            if c.equals_class_partition { " (= class partition)" } else { "" }
        );
    }
}
