//! Association schemes as colorings of `Ω×Ω`.
//!
//! A scheme on `n` points is stored as an `n×n` color matrix. Color 0 is the
//! diagonal; the invariants are that the transpose of a color class is again
//! a color class and that for every color triple `(i,j,k)` the intersection
//! number `p^k_{ij} = |{z : color(x,z)=i, color(z,y)=j}|` does not depend on
//! the chosen pair `(x,y)` of color `k`.
//!
//! Except for wreath products, whose cell ordering is pinned separately,
//! constructors emit colors in canonical order: color 0 is the diagonal and
//! the remaining colors are sorted by (valency, first occurrence row-major),
//! which keeps emitted files stable across runs.

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::perm::{PermGroup, UnionFind};

/// An association scheme; see the module docs for the encoding.
#[derive(Clone, PartialEq, Eq)]
pub struct AssociationScheme {
    n: usize,
    rank: usize,
    color: Vec<u32>,
    transpose: Vec<u32>,
    valency: Vec<u32>,
}

impl std::fmt::Debug for AssociationScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AssociationScheme(n={}, rank={})", self.n, self.rank)
    }
}

/// A violated scheme axiom, reported with the offending cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DiagonalNotMonochrome { x: usize },
    OffDiagonalZero { x: usize, y: usize },
    TransposeNotAColor { color: u32, x: usize, y: usize },
    IntersectionNumbers { color: u32, i: u32, j: u32, pair_a: (usize, usize), pair_b: (usize, usize) },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::DiagonalNotMonochrome { x } => {
                write!(f, "diagonal cell ({x},{x}) has a non-diagonal color")
            }
            Violation::OffDiagonalZero { x, y } => {
                write!(f, "off-diagonal cell ({x},{y}) has the diagonal color")
            }
            Violation::TransposeNotAColor { color, x, y } => write!(
                f,
                "transpose of color {color} is inconsistent at ({x},{y})"
            ),
            Violation::IntersectionNumbers { color, i, j, pair_a, pair_b } => write!(
                f,
                "p^{color}_{{{i},{j}}} differs between pairs {pair_a:?} and {pair_b:?}"
            ),
        }
    }
}

impl AssociationScheme {
    /// Wraps a raw coloring after canonicalizing color labels and validating
    /// the scheme axioms.
    pub fn from_color_matrix(n: usize, color: Vec<u32>) -> Result<AssociationScheme> {
        let canon = canonical_coloring(n, &color)?;
        AssociationScheme::from_canonical(n, canon)
    }

    /// Wraps a coloring that is already canonically labeled.
    fn from_canonical(n: usize, color: Vec<u32>) -> Result<AssociationScheme> {
        let rank = color.iter().map(|&c| c as usize).max().unwrap_or(0) + 1;
        let mut scheme = AssociationScheme {
            n,
            rank,
            color,
            transpose: Vec::new(),
            valency: Vec::new(),
        };
        if let Err(v) = scheme.fill_derived() {
            return Err(Error::NotAScheme(v.to_string()));
        }
        if let Err(v) = scheme.check_intersection_numbers() {
            return Err(Error::NotAScheme(v.to_string()));
        }
        Ok(scheme)
    }

    /// Diagonal/transpose/valency bookkeeping; shared by validation paths.
    fn fill_derived(&mut self) -> std::result::Result<(), Violation> {
        let n = self.n;
        for x in 0..n {
            if self.color[x * n + x] != 0 {
                return Err(Violation::DiagonalNotMonochrome { x });
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && self.color[x * n + y] == 0 {
                    return Err(Violation::OffDiagonalZero { x, y });
                }
            }
        }
        let mut transpose = vec![u32::MAX; self.rank];
        for x in 0..n {
            for y in 0..n {
                let c = self.color[x * n + y];
                let ct = self.color[y * n + x];
                if transpose[c as usize] == u32::MAX {
                    transpose[c as usize] = ct;
                } else if transpose[c as usize] != ct {
                    return Err(Violation::TransposeNotAColor { color: c, x, y });
                }
            }
        }
        let mut valency = vec![0u32; self.rank];
        for y in 0..n {
            valency[self.color[y] as usize] += 1;
        }
        self.transpose = transpose;
        self.valency = valency;
        Ok(())
    }

    /// Full check that every intersection number is well defined. This also
    /// catches rows with inconsistent valencies.
    fn check_intersection_numbers(&self) -> std::result::Result<(), Violation> {
        let n = self.n;
        let r = self.rank;
        // reference[k] = p^k_{i,j} vector from the first pair of color k.
        let mut reference: Vec<Option<(usize, usize, Vec<u32>)>> = vec![None; r];
        let mut counts = vec![0u32; r * r];
        for x in 0..n {
            for y in 0..n {
                let k = self.color[x * n + y] as usize;
                counts.iter_mut().for_each(|c| *c = 0);
                for z in 0..n {
                    let i = self.color[x * n + z] as usize;
                    let j = self.color[z * n + y] as usize;
                    counts[i * r + j] += 1;
                }
                match &reference[k] {
                    None => reference[k] = Some((x, y, counts.clone())),
                    Some((rx, ry, ref_counts)) => {
                        if *ref_counts != counts {
                            let (i, j) = (0..r * r)
                                .find(|&t| ref_counts[t] != counts[t])
                                .map(|t| ((t / r) as u32, (t % r) as u32))
                                .unwrap();
                            return Err(Violation::IntersectionNumbers {
                                color: k as u32,
                                i,
                                j,
                                pair_a: (*rx, *ry),
                                pair_b: (x, y),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-checks all axioms on the stored coloring.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let mut copy = self.clone();
        copy.fill_derived()?;
        copy.check_intersection_numbers()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn color(&self, x: usize, y: usize) -> u32 {
        self.color[x * self.n + y]
    }

    pub fn color_matrix(&self) -> &[u32] {
        &self.color
    }

    pub fn transpose_color(&self, c: u32) -> u32 {
        self.transpose[c as usize]
    }

    pub fn valency(&self, c: u32) -> u32 {
        self.valency[c as usize]
    }

    pub fn valencies(&self) -> &[u32] {
        &self.valency
    }

    /// Intersection number `p^k_{ij}` computed from the first pair of color `k`.
    pub fn intersection_number(&self, i: u32, j: u32, k: u32) -> u32 {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                if self.color[x * n + y] == k {
                    let mut count = 0;
                    for z in 0..n {
                        if self.color[x * n + z] == i && self.color[z * n + y] == j {
                            count += 1;
                        }
                    }
                    return count;
                }
            }
        }
        0
    }

    /// Same coloring up to the canonical relabeling of colors.
    pub fn same_coloring(&self, other: &AssociationScheme) -> bool {
        self.n == other.n && self.rank == other.rank && self.color == other.color
    }

    /// Whether every color class of `self` is a union of color classes of
    /// `finer` (the partial order `self ≤ finer` on schemes over one point set).
    pub fn is_fusion_of(&self, finer: &AssociationScheme) -> bool {
        if self.n != finer.n {
            return false;
        }
        let mut image = vec![u32::MAX; finer.rank];
        for t in 0..self.n * self.n {
            let fine = finer.color[t] as usize;
            if image[fine] == u32::MAX {
                image[fine] = self.color[t];
            } else if image[fine] != self.color[t] {
                return false;
            }
        }
        true
    }

    /// Merges colors according to a transpose-closed partition of the
    /// nonreflexive colors. The verdict distinguishes a genuine scheme from a
    /// merge that breaks the intersection numbers; the latter is a valid
    /// mathematical answer, not an error.
    pub fn fusion(&self, partition: &ColorPartition) -> Result<FusionOutcome> {
        partition.check(self)?;
        let mut map = vec![u32::MAX; self.rank];
        map[0] = 0;
        for (new, class) in partition.classes.iter().enumerate() {
            for &c in class {
                map[c as usize] = new as u32 + 1;
            }
        }
        let color: Vec<u32> = self.color.iter().map(|&c| map[c as usize]).collect();
        match AssociationScheme::from_color_matrix(self.n, color) {
            Ok(s) => Ok(FusionOutcome::Scheme(s)),
            Err(Error::NotAScheme(v)) => Ok(FusionOutcome::NotAScheme(v)),
            Err(e) => Err(e),
        }
    }

    /// The scheme written on points relabeled by `perm[x]`.
    pub fn relabel_points(&self, perm: &[usize]) -> AssociationScheme {
        let n = self.n;
        let mut color = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                color[perm[x] * n + perm[y]] = self.color[x * n + y];
            }
        }
        AssociationScheme::from_color_matrix(n, color).expect("relabeling preserves the axioms")
    }

    /// Applies a permutation to the colors themselves (`pi[c]` replaces `c`);
    /// used when searching for color-permuting automorphisms. The caller must
    /// supply a `pi` fixing 0 and compatible with transposition.
    pub fn recolor(&self, pi: &[u32]) -> AssociationScheme {
        let color: Vec<u32> = self.color.iter().map(|&c| pi[c as usize]).collect();
        let rank = self.rank;
        let mut transpose = vec![0u32; rank];
        let mut valency = vec![0u32; rank];
        for c in 0..rank {
            transpose[pi[c] as usize] = pi[self.transpose[c] as usize];
            valency[pi[c] as usize] = self.valency[c];
        }
        AssociationScheme {
            n: self.n,
            rank,
            color,
            transpose,
            valency,
        }
    }
}

/// Result of a fusion attempt.
#[derive(Clone, Debug)]
pub enum FusionOutcome {
    Scheme(AssociationScheme),
    NotAScheme(String),
}

impl FusionOutcome {
    pub fn scheme(self) -> Option<AssociationScheme> {
        match self {
            FusionOutcome::Scheme(s) => Some(s),
            FusionOutcome::NotAScheme(_) => None,
        }
    }

    pub fn is_scheme(&self) -> bool {
        matches!(self, FusionOutcome::Scheme(_))
    }
}

/// A partition of the nonreflexive colors `1..rank`, used to request fusions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorPartition {
    pub classes: Vec<Vec<u32>>,
}

impl ColorPartition {
    pub fn new(mut classes: Vec<Vec<u32>>) -> ColorPartition {
        for class in classes.iter_mut() {
            class.sort_unstable();
        }
        classes.sort();
        ColorPartition { classes }
    }

    /// Singleton partition: the identity fusion.
    pub fn discrete(rank: usize) -> ColorPartition {
        ColorPartition::new((1..rank as u32).map(|c| vec![c]).collect())
    }

    fn check(&self, scheme: &AssociationScheme) -> Result<()> {
        let mut seen = vec![false; scheme.rank];
        seen[0] = true;
        for class in &self.classes {
            for &c in class {
                if c == 0 || c as usize >= scheme.rank || seen[c as usize] {
                    return Err(Error::Parameter(format!(
                        "color partition misuses color {c}"
                    )));
                }
                seen[c as usize] = true;
            }
        }
        if !seen.iter().all(|&b| b) {
            return Err(Error::Parameter(
                "color partition does not cover all nonreflexive colors".into(),
            ));
        }
        // Transpose closure: the image of a class under transposition is a class.
        for class in &self.classes {
            let mut t: Vec<u32> = class.iter().map(|&c| scheme.transpose_color(c)).collect();
            t.sort_unstable();
            if !self.classes.contains(&t) {
                return Err(Error::NotTransposeClosed);
            }
        }
        Ok(())
    }
}

/// Relabels arbitrary non-negative cell colors canonically: the diagonal
/// color becomes 0 and must not occur off the diagonal; the remaining colors
/// are numbered by (cell count, first occurrence row-major).
fn canonical_coloring(n: usize, color: &[u32]) -> Result<Vec<u32>> {
    if n == 0 || color.len() != n * n {
        return Err(Error::NotAScheme(format!(
            "matrix has {} cells, expected {}",
            color.len(),
            n * n
        )));
    }
    let diag = color[0];
    for x in 0..n {
        if color[x * n + x] != diag {
            return Err(Error::NotAScheme(
                Violation::DiagonalNotMonochrome { x }.to_string(),
            ));
        }
    }
    let max = *color.iter().max().unwrap() as usize;
    let mut count = vec![0usize; max + 1];
    let mut first = vec![usize::MAX; max + 1];
    for (t, &c) in color.iter().enumerate() {
        count[c as usize] += 1;
        if first[c as usize] == usize::MAX {
            first[c as usize] = t;
        }
    }
    let mut order: Vec<usize> = (0..=max)
        .filter(|&c| count[c] > 0 && c != diag as usize)
        .collect();
    order.sort_by_key(|&c| (count[c], first[c]));
    let mut map = vec![u32::MAX; max + 1];
    map[diag as usize] = 0;
    for (new, &old) in order.iter().enumerate() {
        map[old] = new as u32 + 1;
    }
    let relabeled: Vec<u32> = color.iter().map(|&c| map[c as usize]).collect();
    for x in 0..n {
        for y in 0..n {
            if x != y && relabeled[x * n + y] == 0 {
                return Err(Error::NotAScheme(
                    Violation::OffDiagonalZero { x, y }.to_string(),
                ));
            }
        }
    }
    Ok(relabeled)
}

/// The orbital scheme `inv(Γ)` of a transitive permutation group: colors are
/// the orbits of the coordinatewise action on `Ω×Ω`.
pub fn orbital_scheme(gamma: &PermGroup) -> Result<AssociationScheme> {
    if !gamma.is_transitive() {
        return Err(Error::Intransitive);
    }
    let n = gamma.degree();
    let mut uf = UnionFind::new(n * n);
    for g in gamma.generators() {
        for x in 0..n {
            let gx = g.apply(x);
            for y in 0..n {
                uf.union(x * n + y, gx * n + g.apply(y));
            }
        }
    }
    let mut label = std::collections::HashMap::new();
    let mut color = vec![0u32; n * n];
    for t in 0..n * n {
        let root = uf.find(t);
        let next = label.len() as u32;
        let c = *label.entry(root).or_insert(next);
        color[t] = c;
    }
    AssociationScheme::from_color_matrix(n, color)
}

/// Wreath product of schemes: inside each block of size `n_H` the colors are
/// those of `bottom`; between distinct blocks the color depends only on the
/// `top` color of the block pair. Point `(b, i) ↦ b·n_H + i`; between-block
/// colors are offset by `rank(bottom)`.
pub fn wreath(bottom: &AssociationScheme, top: &AssociationScheme) -> AssociationScheme {
    let nh = bottom.size();
    let nq = top.size();
    let n = nh * nq;
    let rh = bottom.rank() as u32;
    let mut color = vec![0u32; n * n];
    for b1 in 0..nq {
        for i in 0..nh {
            for b2 in 0..nq {
                for j in 0..nh {
                    let x = b1 * nh + i;
                    let y = b2 * nh + j;
                    color[x * n + y] = if b1 == b2 {
                        bottom.color(i, j)
                    } else {
                        rh + top.color(b1, b2) - 1
                    };
                }
            }
        }
    }
    let rank = bottom.rank() + top.rank() - 1;
    let mut scheme = AssociationScheme {
        n,
        rank,
        color,
        transpose: Vec::new(),
        valency: Vec::new(),
    };
    scheme
        .fill_derived()
        .expect("wreath products of schemes are schemes");
    debug_assert!(scheme.check_intersection_numbers().is_ok());
    scheme
}

/// The conjugacy-class scheme of a group: `color(x, y)` is the class of
/// `x·y^{-1}`, equivalently the orbital scheme of `G_right` extended by all
/// inner automorphisms.
pub fn class_scheme(g: &FiniteGroup) -> AssociationScheme {
    let classes = g.conjugacy_classes();
    let n = g.order();
    let mut class_of = vec![0u32; n];
    for (ci, class) in classes.iter().enumerate() {
        for &x in class {
            class_of[x] = ci as u32;
        }
    }
    let mut color = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            color[x * n + y] = class_of[g.mul(x, g.inv(y))];
        }
    }
    AssociationScheme::from_color_matrix(n, color)
        .expect("class sums span a ring, so the coloring is a scheme")
}

// ---------------------------------------------------------------------------
// Valency-pattern labeling with structural discriminators
// ---------------------------------------------------------------------------

/// Structural predicates used to tell apart colors of equal valency, indexed
/// by 1-based pattern positions. They are named so labeling recipes read like
/// the constructions they implement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Discriminator {
    /// Symmetric color whose graph is a disjoint union of complete graphs.
    CliqueUnion(usize),
    /// Negation of `CliqueUnion`.
    NotCliqueUnion(usize),
    /// Symmetric color whose graph is connected.
    ConnectedSymmetric(usize),
    /// Negation of `ConnectedSymmetric`.
    NotConnectedSymmetric(usize),
    /// The two positions are each other's transposes (and not self-paired).
    TransposePair(usize, usize),
}

/// Whether the (symmetric) color class is a disjoint union of complete graphs.
pub fn is_clique_union(scheme: &AssociationScheme, c: u32) -> bool {
    if scheme.transpose_color(c) != c {
        return false;
    }
    let n = scheme.size();
    let mut comp = UnionFind::new(n);
    for x in 0..n {
        for y in 0..n {
            if scheme.color(x, y) == c {
                comp.union(x, y);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && comp.find(x) == comp.find(y) && scheme.color(x, y) != c {
                return false;
            }
        }
    }
    true
}

/// Whether the color is symmetric and its graph is connected on all points.
pub fn is_connected_symmetric(scheme: &AssociationScheme, c: u32) -> bool {
    if scheme.transpose_color(c) != c {
        return false;
    }
    let n = scheme.size();
    let mut comp = UnionFind::new(n);
    for x in 0..n {
        for y in 0..n {
            if scheme.color(x, y) == c {
                comp.union(x, y);
            }
        }
    }
    let root = comp.find(0);
    (1..n).all(|x| comp.find(x) == root)
}

/// Assigns nonreflexive colors to the 1-based positions of a valency pattern,
/// honoring the discriminators, and returns `labels[pos-1] = color`. Among
/// valid assignments the lexicographically least is chosen, so the labeling
/// is deterministic; an error means no assignment exists.
pub fn label_colors_by_valency(
    scheme: &AssociationScheme,
    pattern: &[u32],
    discriminators: &[Discriminator],
) -> Result<Vec<u32>> {
    let r = scheme.rank();
    if pattern.len() != r - 1 {
        return Err(Error::PatternUnmatched(format!(
            "pattern has {} entries for {} nonreflexive colors",
            pattern.len(),
            r - 1
        )));
    }
    let mut sorted_pattern = pattern.to_vec();
    sorted_pattern.sort_unstable();
    let mut actual: Vec<u32> = (1..r as u32).map(|c| scheme.valency(c)).collect();
    actual.sort_unstable();
    if sorted_pattern != actual {
        return Err(Error::PatternUnmatched(format!(
            "scheme valencies {actual:?} do not match pattern {sorted_pattern:?}"
        )));
    }
    let mut assignment = vec![u32::MAX; pattern.len()];
    let mut used = vec![false; r];
    if assign_positions(scheme, pattern, discriminators, &mut assignment, &mut used, 0) {
        Ok(assignment)
    } else {
        Err(Error::PatternUnmatched(
            "no color labeling satisfies the discriminators".into(),
        ))
    }
}

fn assign_positions(
    scheme: &AssociationScheme,
    pattern: &[u32],
    discriminators: &[Discriminator],
    assignment: &mut [u32],
    used: &mut [bool],
    pos: usize,
) -> bool {
    if pos == pattern.len() {
        return discriminators
            .iter()
            .all(|d| discriminator_holds(scheme, assignment, d));
    }
    for c in 1..scheme.rank() as u32 {
        if used[c as usize] || scheme.valency(c) != pattern[pos] {
            continue;
        }
        assignment[pos] = c;
        used[c as usize] = true;
        // Check the discriminators whose positions are all assigned.
        let ok = discriminators.iter().all(|d| {
            if discriminator_positions(d).iter().all(|&p| p <= pos + 1) {
                discriminator_holds(scheme, assignment, d)
            } else {
                true
            }
        });
        if ok && assign_positions(scheme, pattern, discriminators, assignment, used, pos + 1) {
            return true;
        }
        used[c as usize] = false;
        assignment[pos] = u32::MAX;
    }
    false
}

fn discriminator_positions(d: &Discriminator) -> Vec<usize> {
    match *d {
        Discriminator::CliqueUnion(p)
        | Discriminator::NotCliqueUnion(p)
        | Discriminator::ConnectedSymmetric(p)
        | Discriminator::NotConnectedSymmetric(p) => vec![p],
        Discriminator::TransposePair(p, q) => vec![p, q],
    }
}

fn discriminator_holds(scheme: &AssociationScheme, assignment: &[u32], d: &Discriminator) -> bool {
    let color = |p: usize| assignment[p - 1];
    match *d {
        Discriminator::CliqueUnion(p) => is_clique_union(scheme, color(p)),
        Discriminator::NotCliqueUnion(p) => !is_clique_union(scheme, color(p)),
        Discriminator::ConnectedSymmetric(p) => is_connected_symmetric(scheme, color(p)),
        Discriminator::NotConnectedSymmetric(p) => !is_connected_symmetric(scheme, color(p)),
        Discriminator::TransposePair(p, q) => {
            let (cp, cq) = (color(p), color(q));
            cp != cq && scheme.transpose_color(cp) == cq
        }
    }
}

// ---------------------------------------------------------------------------
// Rank-4 fusions coarsening the class-size partition
// ---------------------------------------------------------------------------

/// One candidate from [`rank4_size_respecting_fusions`].
#[derive(Clone, Debug)]
pub struct Rank4Candidate {
    /// Partition of the nonreflexive colors that was attempted.
    pub partition: ColorPartition,
    /// Valid scheme, if the merge survives validation.
    pub scheme: Option<AssociationScheme>,
    /// Whether the fused partition equals the class partition itself.
    pub equals_class_partition: bool,
}

/// Enumerates fusions of the conjugacy-class scheme whose color partition
/// does not split any set of equal-size classes and whose rank is exactly 4.
/// When all nonidentity classes share one size there is no size information
/// at all, and the search degenerates to all transpose-closed rank-4 fusions.
/// Results are deterministic: candidates are ordered by their partitions.
pub fn rank4_size_respecting_fusions(g: &FiniteGroup) -> Vec<Rank4Candidate> {
    let scheme = class_scheme(g);
    let r = scheme.rank();
    if r < 4 {
        return Vec::new();
    }
    // Group the nonreflexive colors into cells of equal class size.
    let mut by_size: std::collections::BTreeMap<u32, Vec<u32>> = std::collections::BTreeMap::new();
    for c in 1..r as u32 {
        by_size.entry(scheme.valency(c)).or_default().push(c);
    }
    let cells: Vec<Vec<u32>> = by_size.into_values().collect();
    let units: Vec<Vec<u32>> = if cells.len() == 1 {
        // Degenerate: no size distinctions, fall back to single colors.
        (1..r as u32).map(|c| vec![c]).collect()
    } else {
        cells
    };
    let mut out = Vec::new();
    for split in partitions_into_k_blocks(units.len(), 3) {
        let mut classes = vec![Vec::new(); 3];
        for (unit, &block) in split.iter().enumerate() {
            classes[block].extend(units[unit].iter().copied());
        }
        let partition = ColorPartition::new(classes);
        let fused = match scheme.fusion(&partition) {
            Ok(outcome) => outcome,
            Err(_) => continue, // not transpose-closed: not a candidate
        };
        let equals_class_partition = partition.classes.iter().all(|class| class.len() == 1);
        out.push(Rank4Candidate {
            partition,
            scheme: fused.scheme(),
            equals_class_partition,
        });
    }
    out.sort_by(|a, b| a.partition.classes.cmp(&b.partition.classes));
    out
}

/// All partitions of `{0..n_items-1}` into exactly `k` nonempty blocks, as
/// block-index vectors in restricted-growth order.
fn partitions_into_k_blocks(n_items: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(assign: &mut Vec<usize>, i: usize, max_used: usize, k: usize, out: &mut Vec<Vec<usize>>) {
        if i == assign.len() {
            if max_used + 1 == k {
                out.push(assign.clone());
            }
            return;
        }
        for b in 0..=(max_used + 1).min(k - 1) {
            assign[i] = b;
            rec(assign, i + 1, max_used.max(b), k, out);
        }
    }
    let mut out = Vec::new();
    if n_items >= k && n_items > 0 {
        let mut assign = vec![0usize; n_items];
        // Restricted growth: the first item is pinned to block 0.
        rec(&mut assign, 1, 0, k, &mut out);
    }
    out
}
