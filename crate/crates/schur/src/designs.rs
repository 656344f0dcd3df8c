//! Difference sets in abelian groups and their developments into symmetric
//! 2-designs.
//!
//! A `(n, k, λ)` difference set is a `k`-subset `D` of an abelian group of
//! order `n` in which every nonidentity element has exactly `λ`
//! representations `d₁·d₂^{-1}`. Paley difference sets are the nonzero
//! squares of `GF(q)` for `q ≡ 3 (mod 4)`; Singer difference sets come from
//! a cyclic (Singer) regular action on the points of a projective geometry,
//! with a hyperplane as the base block.
//!
//! The development has the group elements as points, one block per group
//! element (the translates of `D`), and is symmetric by construction. Its
//! automorphisms are computed by handing the vertex-colored incidence
//! structure to the shared backtracker.

use crate::autsearch::{self, SearchOptions};
use crate::error::{Error, Result};
use crate::ff::{prime_power, Field};
use crate::groups::{cyclic, FiniteGroup};
use crate::perm::{Perm, PermGroup};

/// A difference set in an abelian table group.
#[derive(Clone, Debug)]
pub struct DifferenceSet {
    pub group: FiniteGroup,
    /// Sorted member list.
    pub set: Vec<usize>,
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
}

/// Verifies the difference-set property and computes `(n, k, λ)`: every
/// nonidentity element must occur equally often among `d₁·d₂^{-1}`.
pub fn is_difference_set(group: &FiniteGroup, set: &[usize]) -> Result<DifferenceSet> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = group.order();
    let mut d: Vec<usize> = set.to_vec();
    d.sort_unstable();
    d.dedup();
    if d.len() != set.len() || d.iter().any(|&x| x >= n) {
        return Err(Error::NotADifferenceSet("set has repeats or strays".into()));
    }
    if d.is_empty() || d.len() >= n {
        return Err(Error::NotADifferenceSet(
            "set must be a proper nonempty subset".into(),
        ));
    }
    let mut counts = vec![0usize; n];
    for &x in &d {
        for &y in &d {
            counts[group.mul(x, group.inv(y))] += 1;
        }
    }
    let lambda = counts[if counts.len() > 1 { 1 } else { 0 }];
    for (z, &c) in counts.iter().enumerate().skip(1) {
        if c != lambda {
            return Err(Error::NotADifferenceSet(format!(
                "element {z} has {c} difference representations, expected {lambda}"
            )));
        }
    }
    let k = d.len();
    debug_assert_eq!(k * (k - 1), lambda * (n - 1));
    Ok(DifferenceSet {
        group: group.clone(),
        set: d,
        n,
        k,
        lambda,
    })
}

/// The Paley difference set: nonzero squares in the additive group of
/// `GF(q)`, for a prime power `q ≡ 3 (mod 4)`. Parameters
/// `(q, (q-1)/2, (q-3)/4)`.
pub fn paley_difference_set(q: usize) -> Result<DifferenceSet> {
    if prime_power(q as u64).is_none() {
        return Err(Error::Parameter(format!("{q} is not a prime power")));
    }
    if q % 4 != 3 {
        return Err(Error::Parameter(format!("{q} ≢ 3 (mod 4)")));
    }
    let field = Field::new(q as u64)?;
    let squares: Vec<usize> = field.nonzero_squares().iter().map(|&x| x as usize).collect();
    let group = additive_group(&field);
    is_difference_set(&group, &squares)
}

/// The additive group of a field as a table group, reusing the field's
/// element indexing.
fn additive_group(field: &Field) -> FiniteGroup {
    let n = field.order() as usize;
    let mut mul = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = field.add(a as u64, b as u64) as usize;
        }
    }
    FiniteGroup::from_mul_table(n, mul)
        .expect("field addition is a group")
        .with_label(format!("E{n}+"))
}

/// The Singer difference set in the cyclic group of order
/// `n = (q^{d+1}-1)/(q-1)`: index `i` is in the set when `α^i` lies in the
/// kernel of the relative trace `GF(q^{d+1}) → GF(q)`, for the fixed
/// primitive element `α`. The trace kernel is a GF(q)-hyperplane, so the
/// projective points it covers form a hyperplane of the projective geometry
/// and the indices form the classical difference set with
/// `k = (q^d-1)/(q-1)` and `λ = (q^{d-1}-1)/(q-1)`.
pub fn singer_difference_set(q: usize, d: u32) -> Result<DifferenceSet> {
    if prime_power(q as u64).is_none() {
        return Err(Error::Parameter(format!("{q} is not a prime power")));
    }
    if d < 2 {
        return Err(Error::Parameter("dimension must be at least 2".into()));
    }
    let big = (q as u64).pow(d + 1);
    let n = ((big - 1) / (q as u64 - 1)) as usize;
    if n > 512 {
        return Err(Error::Parameter(format!(
            "point count {n} exceeds the desk-scale cap of 512"
        )));
    }
    let field = Field::new(big)?;
    // Relative trace: Tr(x) = x + x^q + ... + x^{q^d}.
    let trace = |x: u64| -> u64 {
        let mut acc = 0;
        let mut pw = x;
        for _ in 0..=d {
            acc = field.add(acc, pw);
            pw = field.pow(pw, q as u64);
        }
        acc
    };
    let mut set = Vec::new();
    let mut x = 1u64; // α^0
    for i in 0..n {
        if trace(x) == 0 {
            set.push(i);
        }
        x = field.mul(x, field.primitive());
    }
    let group = cyclic(n);
    let ds = is_difference_set(&group, &set)?;
    let expect_k = (((q as u64).pow(d) - 1) / (q as u64 - 1)) as usize;
    let expect_lambda = (((q as u64).pow(d - 1) - 1) / (q as u64 - 1)) as usize;
    if ds.k != expect_k || ds.lambda != expect_lambda {
        return Err(Error::NotADifferenceSet(format!(
            "unexpected parameters ({}, {}, {})",
            ds.n, ds.k, ds.lambda
        )));
    }
    Ok(ds)
}

/// A symmetric 2-design: points are the group elements, blocks the translates
/// of the difference set, kept with the developing group.
#[derive(Clone, Debug)]
pub struct Design {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    /// `blocks[b]` is the sorted point set of block `b`; block `b` is the
    /// translate `{d·b : d ∈ D}` of the base block.
    pub blocks: Vec<Vec<usize>>,
}

/// Develops a difference set into its symmetric 2-design.
pub fn dev(ds: &DifferenceSet) -> Design {
    let n = ds.n;
    let mut blocks = Vec::with_capacity(n);
    for b in 0..n {
        let mut block: Vec<usize> = ds.set.iter().map(|&d| ds.group.mul(d, b)).collect();
        block.sort_unstable();
        blocks.push(block);
    }
    Design {
        n,
        k: ds.k,
        lambda: ds.lambda,
        blocks,
    }
}

impl Design {
    pub fn is_incident(&self, point: usize, block: usize) -> bool {
        self.blocks[block].binary_search(&point).is_ok()
    }

    /// All incident (point, block) pairs; `n·k` of them.
    pub fn flags(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n * self.k);
        for (b, block) in self.blocks.iter().enumerate() {
            for &p in block {
                out.push((p, b));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn antiflags(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n * (self.n - self.k));
        for b in 0..self.n {
            for p in 0..self.n {
                if !self.is_incident(p, b) {
                    out.push((p, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Sanity checks of the symmetric 2-design axioms.
    pub fn validate(&self) -> Result<()> {
        let mut on_blocks = vec![0usize; self.n];
        for block in &self.blocks {
            if block.len() != self.k {
                return Err(Error::Incompatible("block of the wrong size".into()));
            }
            for &p in block {
                on_blocks[p] += 1;
            }
        }
        if on_blocks.iter().any(|&c| c != self.k) {
            return Err(Error::Incompatible(
                "a point does not lie on exactly k blocks".into(),
            ));
        }
        for x in 0..self.n {
            for y in x + 1..self.n {
                let common = self
                    .blocks
                    .iter()
                    .filter(|b| b.binary_search(&x).is_ok() && b.binary_search(&y).is_ok())
                    .count();
                if common != self.lambda {
                    return Err(Error::Incompatible(format!(
                        "points {x},{y} lie on {common} common blocks, expected {}",
                        self.lambda
                    )));
                }
            }
        }
        Ok(())
    }

    /// Automorphism group preserving incidence and fixing the bipartition:
    /// a permutation group on `2n` vertices, points first, then blocks.
    pub fn automorphism_group(&self, opts: &SearchOptions) -> Result<PermGroup> {
        if self.n > 64 {
            return Err(Error::DegreeCap(self.n, 64));
        }
        let m = 2 * self.n;
        // Edge colors: 0 diagonal, then by (side of x, side of y, incidence).
        let mut color = vec![0u32; m * m];
        for x in 0..m {
            for y in 0..m {
                if x == y {
                    continue;
                }
                let c = match (x < self.n, y < self.n) {
                    (true, true) => 1,
                    (false, false) => 2,
                    (true, false) => {
                        if self.is_incident(x, y - self.n) {
                            3
                        } else {
                            4
                        }
                    }
                    (false, true) => {
                        if self.is_incident(y, x - self.n) {
                            5
                        } else {
                            6
                        }
                    }
                };
                color[x * m + y] = c;
            }
        }
        let cells = vec![(0..self.n).collect(), (self.n..m).collect()];
        let (group, _) = autsearch::aut_coloring(m, &color, cells, opts)?;
        Ok(group)
    }
}

/// The three transitivity properties of a design's automorphism group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransitivityProfile {
    pub two_transitive: bool,
    pub flag_transitive: bool,
    pub antiflag_transitive: bool,
}

impl TransitivityProfile {
    pub fn all(&self) -> bool {
        self.two_transitive && self.flag_transitive && self.antiflag_transitive
    }
}

/// Computes the design's automorphism group and its orbit counts on point
/// pairs, flags, and antiflags.
pub fn transitivity_profile(design: &Design, opts: &SearchOptions) -> Result<TransitivityProfile> {
    let aut = design.automorphism_group(opts)?;
    // Point action: restriction to the first n vertices.
    let point_gens: Vec<Perm> = aut
        .generators()
        .iter()
        .map(|g| {
            Perm::from_images((0..design.n).map(|x| g.apply(x)).collect())
                .expect("bipartition is preserved")
        })
        .collect();
    let points = PermGroup::new(design.n, point_gens)?;
    let two_transitive = autsearch::is_2transitive(&points);
    let flags: Vec<(usize, usize)> = design
        .flags()
        .into_iter()
        .map(|(p, b)| (p, b + design.n))
        .collect();
    let flag_transitive = autsearch::flag_orbit_count(&aut, &flags) == 1;
    let antiflags: Vec<(usize, usize)> = design
        .antiflags()
        .into_iter()
        .map(|(p, b)| (p, b + design.n))
        .collect();
    let antiflag_transitive = autsearch::flag_orbit_count(&aut, &antiflags) == 1;
    Ok(TransitivityProfile {
        two_transitive,
        flag_transitive,
        antiflag_transitive,
    })
}
