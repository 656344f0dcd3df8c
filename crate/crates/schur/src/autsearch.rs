//! Automorphism groups of edge-colored structures by refinement-pruned
//! backtracking, plus the scheme-mediated constructions built on top of it:
//! color-permuting automorphisms, normalizers in the symmetric group, and
//! regular-subgroup search.
//!
//! The engine works on any complete edge coloring of `Ω×Ω`, so association
//! schemes and the vertex-colored incidence graphs of designs share one
//! backtracker. The refiner is color refinement aware of the edge colors: a
//! vertex's signature lists, per (cell, color), how many neighbors it has.
//! Schemes are already stable under this refinement, so its job is purely to
//! propagate individualizations. The target cell is the smallest
//! non-singleton cell (ties by smallest point), and every emitted generator
//! is post-checked against the full coloring, so soundness does not depend
//! on the refiner.

use std::time::Instant;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::perm::{Perm, PermGroup, StabChain};
use crate::scheme::{orbital_scheme, AssociationScheme};

/// Counters reported by a backtracking run.
#[derive(Clone, Debug, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub refinements: u64,
    pub generators_found: usize,
    pub millis: u128,
}

/// Search knobs; the node cap turns non-termination into a hard error.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub node_cap: u64,
    /// Cap on explicit element enumeration (normalizers, subgroup search).
    pub element_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_cap: 10_000_000,
            element_cap: 2_000_000,
        }
    }
}

/// An ordered partition of `{0..n-1}`; only the cell sequence is meaningful,
/// the order inside a cell is not.
#[derive(Clone)]
struct OPartition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl OPartition {
    fn new(n: usize, cells: Vec<Vec<usize>>) -> OPartition {
        let mut cell_of = vec![usize::MAX; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        assert!(cell_of.iter().all(|&c| c != usize::MAX));
        OPartition { cells, cell_of }
    }

    fn unit(n: usize) -> OPartition {
        OPartition::new(n, vec![(0..n).collect()])
    }

    fn is_discrete(&self) -> bool {
        self.cells.len() == self.cell_of.len()
    }

    /// Splits the cell at `pos` into `[v]` followed by the rest.
    fn individualize(&self, pos: usize, v: usize) -> OPartition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for (i, cell) in self.cells.iter().enumerate() {
            if i == pos {
                cells.push(vec![v]);
                cells.push(cell.iter().copied().filter(|&u| u != v).collect());
            } else {
                cells.push(cell.clone());
            }
        }
        OPartition::new(self.cell_of.len(), cells)
    }

    /// First smallest non-singleton cell position, ties broken by the
    /// smallest point the cell contains.
    fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(_, c)| (c.len(), *c.iter().min().unwrap()))
            .map(|(i, _)| i)
    }
}

/// A complete edge coloring; rank is one more than the largest color.
#[derive(Clone, Copy)]
struct EdgeColoring<'a> {
    n: usize,
    rank: usize,
    color: &'a [u32],
}

impl<'a> EdgeColoring<'a> {
    #[inline]
    fn color(&self, x: usize, y: usize) -> u32 {
        self.color[x * self.n + y]
    }
}

fn fnv(mut h: u64, x: u64) -> u64 {
    h ^= x;
    h = h.wrapping_mul(0x100000001b3);
    h
}

/// Refines to equitability with respect to the edge colors, mutating the
/// partition and returning an isomorphism-invariant trace of the process.
/// Cells split into fragments ordered by their signature, which keeps
/// corresponding partitions aligned cell-by-cell across the search.
fn refine(coloring: &EdgeColoring, part: &mut OPartition, stats: &mut SearchStats) -> u64 {
    let n = coloring.n;
    let r = coloring.rank;
    let mut trace: u64 = 0xcbf29ce484222325;
    loop {
        stats.refinements += 1;
        let cells_now = part.cells.len();
        if cells_now == n {
            break;
        }
        // Signature of v: counts per (cell, color) pair.
        let width = cells_now * r;
        let mut sig = vec![0u32; n * width];
        for v in 0..n {
            let row = &mut sig[v * width..(v + 1) * width];
            for u in 0..n {
                row[part.cell_of[u] * r + coloring.color(v, u) as usize] += 1;
            }
        }
        let mut new_cells: Vec<Vec<usize>> = Vec::with_capacity(cells_now);
        for cell in &part.cells {
            if cell.len() == 1 {
                new_cells.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(&[u32], usize)> = cell
                .iter()
                .map(|&v| (&sig[v * width..(v + 1) * width], v))
                .collect();
            keyed.sort_by(|a, b| a.0.cmp(b.0).then(a.1.cmp(&b.1)));
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    let fragment: Vec<usize> = keyed[start..i].iter().map(|&(_, v)| v).collect();
                    for &x in keyed[start].0 {
                        trace = fnv(trace, x as u64);
                    }
                    trace = fnv(trace, fragment.len() as u64);
                    new_cells.push(fragment);
                    start = i;
                }
            }
        }
        let did_split = new_cells.len() > part.cells.len();
        *part = OPartition::new(n, new_cells);
        if !did_split {
            break;
        }
    }
    for cell in &part.cells {
        trace = fnv(trace, cell.len() as u64);
    }
    trace
}

/// The backtracking context shared along one automorphism search.
struct AutSearch<'a> {
    coloring: EdgeColoring<'a>,
    base: Vec<usize>,
    /// Refined left partition entering each level (before individualization).
    left_before: Vec<OPartition>,
    /// Position of the target cell at each level.
    target_pos: Vec<usize>,
    /// Trace of the refinement performed after individualizing at each level.
    left_trace: Vec<u64>,
    /// Discrete partition at the bottom of the left path.
    left_leaf: OPartition,
    opts: SearchOptions,
    stats: SearchStats,
}

impl<'a> AutSearch<'a> {
    fn bump_node(&mut self) -> Result<()> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.opts.node_cap {
            Err(Error::BudgetExhausted {
                nodes: self.stats.nodes,
            })
        } else {
            Ok(())
        }
    }

    /// Builds the base and the left path from the root partition.
    fn new(coloring: EdgeColoring<'a>, root: Vec<Vec<usize>>, opts: SearchOptions) -> AutSearch<'a> {
        let n = coloring.n;
        let mut stats = SearchStats::default();
        let mut part = OPartition::new(n, root);
        refine(&coloring, &mut part, &mut stats);
        let mut base = Vec::new();
        let mut left_before = Vec::new();
        let mut target_pos = Vec::new();
        let mut left_trace = Vec::new();
        while let Some(pos) = part.target_cell() {
            let b = *part.cells[pos].iter().min().unwrap();
            left_before.push(part.clone());
            target_pos.push(pos);
            base.push(b);
            part = part.individualize(pos, b);
            let trace = refine(&coloring, &mut part, &mut stats);
            left_trace.push(trace);
        }
        AutSearch {
            coloring,
            base,
            left_before,
            target_pos,
            left_trace,
            left_leaf: part,
            opts,
            stats,
        }
    }

    /// Candidate bijection from two discrete partitions, verified against the
    /// coloring before being accepted.
    fn leaf_candidate(&self, right: &OPartition) -> Option<Perm> {
        let n = self.coloring.n;
        let mut images = vec![0usize; n];
        for (k, cell) in self.left_leaf.cells.iter().enumerate() {
            images[cell[0]] = right.cells[k][0];
        }
        let perm = Perm::from_images(images).ok()?;
        for x in 0..n {
            for y in 0..n {
                if self.coloring.color(perm.apply(x), perm.apply(y)) != self.coloring.color(x, y) {
                    return None;
                }
            }
        }
        Some(perm)
    }

    /// Finds one automorphism whose right path extends `right` from `level`.
    fn first_iso(&mut self, level: usize, right: OPartition) -> Result<Option<Perm>> {
        self.bump_node()?;
        if level == self.base.len() {
            return Ok(self.leaf_candidate(&right));
        }
        let pos = self.target_pos[level];
        let mut candidates = right.cells[pos].clone();
        candidates.sort_unstable();
        for c in candidates {
            let mut next = right.individualize(pos, c);
            let trace = refine(&self.coloring, &mut next, &mut self.stats);
            if trace != self.left_trace[level] {
                continue;
            }
            if let Some(found) = self.first_iso(level + 1, next)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Generates the full automorphism group into a stabilizer chain based on
    /// the search base, level by level from the bottom. Candidates already in
    /// the orbit of the base point under the found stabilizer are skipped.
    fn generate(&mut self, level: usize, chain: &mut StabChain) -> Result<()> {
        if level == self.base.len() {
            return Ok(());
        }
        self.generate(level + 1, chain)?;
        let pos = self.target_pos[level];
        let b = self.base[level];
        let mut candidates = self.left_before[level].cells[pos].clone();
        candidates.sort_unstable();
        for c in candidates {
            if c == b {
                continue;
            }
            self.bump_node()?;
            if chain
                .level_orbit(level)
                .map(|o| o.contains(&c))
                .unwrap_or(false)
            {
                continue;
            }
            let mut right = self.left_before[level].individualize(pos, c);
            let trace = refine(&self.coloring, &mut right, &mut self.stats);
            if trace != self.left_trace[level] {
                continue;
            }
            if let Some(gen) = self.first_iso(level + 1, right)? {
                self.stats.generators_found += 1;
                chain.add_generator(gen);
            }
        }
        Ok(())
    }
}

/// Automorphism group of an arbitrary complete edge coloring with an initial
/// vertex partition (cells listed in a fixed order).
pub fn aut_coloring(
    n: usize,
    colors: &[u32],
    initial_cells: Vec<Vec<usize>>,
    opts: &SearchOptions,
) -> Result<(PermGroup, SearchStats)> {
    assert_eq!(colors.len(), n * n);
    let rank = colors.iter().map(|&c| c as usize).max().unwrap_or(0) + 1;
    let coloring = EdgeColoring { n, rank, color: colors };
    let started = Instant::now();
    let mut search = AutSearch::new(coloring, initial_cells, opts.clone());
    let mut chain = StabChain::new(n, &search.base);
    search.generate(0, &mut chain)?;
    let gens = chain.stabilizer_gens(0);
    let group = PermGroup::new(n, gens)?.with_base_hint(search.base.clone());
    let mut stats = search.stats;
    stats.millis = started.elapsed().as_millis();
    Ok((group, stats))
}

/// The full color-preserving automorphism group of a scheme.
pub fn aut_scheme(x: &AssociationScheme) -> Result<PermGroup> {
    aut_scheme_with(x, &SearchOptions::default()).map(|(g, _)| g)
}

pub fn aut_scheme_with(
    x: &AssociationScheme,
    opts: &SearchOptions,
) -> Result<(PermGroup, SearchStats)> {
    aut_coloring(
        x.size(),
        x.color_matrix(),
        vec![(0..x.size()).collect()],
        opts,
    )
}

/// A color-permuting automorphism group: the permutations `γ` for which some
/// color permutation `π` has `color(x^γ, y^γ) = π(color(x, y))`.
pub struct ColorAut {
    pub group: PermGroup,
    /// Realized non-identity color permutations with one witnessing element each.
    pub color_maps: Vec<(Perm, Vec<u32>)>,
}

/// Computes the color-permuting automorphism group of a scheme. Candidate
/// color permutations must fix the diagonal, preserve valencies, commute with
/// transposition, and preserve all intersection numbers; each survivor is fed
/// to an isomorphism search between the scheme and its recoloring.
pub fn caut_scheme(x: &AssociationScheme, opts: &SearchOptions) -> Result<ColorAut> {
    let aut = aut_scheme_with(x, opts)?.0;
    let mut gens: Vec<Perm> = aut.generators().to_vec();
    let mut color_maps = Vec::new();
    for pi in algebraic_color_maps(x) {
        if pi.iter().enumerate().all(|(c, &i)| c as u32 == i) {
            continue;
        }
        let recolored = x.recolor(&pi);
        if let Some(gamma) = iso_coloring(&recolored, x, opts)? {
            gens.push(gamma.clone());
            color_maps.push((gamma, pi));
        }
    }
    let group = PermGroup::new(x.size(), gens)?;
    Ok(ColorAut { group, color_maps })
}

/// All color permutations compatible with the scheme's numerical data.
fn algebraic_color_maps(x: &AssociationScheme) -> Vec<Vec<u32>> {
    let r = x.rank();
    let n = x.size();
    // Intersection tensor p[k][i][j] from one representative pair per color.
    let mut tensor = vec![0u32; r * r * r];
    let mut seen = vec![false; r];
    for xx in 0..n {
        for yy in 0..n {
            let k = x.color(xx, yy) as usize;
            if seen[k] {
                continue;
            }
            seen[k] = true;
            for z in 0..n {
                let i = x.color(xx, z) as usize;
                let j = x.color(z, yy) as usize;
                tensor[(k * r + i) * r + j] += 1;
            }
        }
    }
    /// Tensor condition over all triples whose colors are already assigned.
    /// Incremental pruning keeps the search tractable at higher ranks.
    fn tensor_consistent(tensor: &[u32], r: usize, pi: &[u32]) -> bool {
        let assigned: Vec<usize> = (0..r).filter(|&c| pi[c] != u32::MAX).collect();
        for &k in &assigned {
            for &i in &assigned {
                for &j in &assigned {
                    let lhs = tensor[(k * r + i) * r + j];
                    let rhs =
                        tensor[(pi[k] as usize * r + pi[i] as usize) * r + pi[j] as usize];
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn rec(
        x: &AssociationScheme,
        tensor: &[u32],
        r: usize,
        pi: &mut Vec<u32>,
        used: &mut Vec<bool>,
        c: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if c == r {
            out.push(pi.clone());
            return;
        }
        if pi[c] != u32::MAX {
            rec(x, tensor, r, pi, used, c + 1, out);
            return;
        }
        for img in 1..r as u32 {
            if used[img as usize] || x.valency(c as u32) != x.valency(img) {
                continue;
            }
            let ct = x.transpose_color(c as u32) as usize;
            let imgt = x.transpose_color(img);
            // Symmetric colors must map to symmetric colors and pairs to pairs.
            if (ct == c) != (imgt == img) {
                continue;
            }
            pi[c] = img;
            used[img as usize] = true;
            let set_t = ct != c && pi[ct] == u32::MAX;
            let mut feasible = true;
            if ct != c && !set_t && pi[ct] != imgt {
                feasible = false;
            }
            if set_t {
                if used[imgt as usize] {
                    feasible = false;
                } else {
                    pi[ct] = imgt;
                    used[imgt as usize] = true;
                }
            }
            if feasible && tensor_consistent(tensor, r, pi) {
                rec(x, tensor, r, pi, used, c + 1, out);
            }
            if set_t && feasible {
                pi[ct] = u32::MAX;
                used[imgt as usize] = false;
            }
            pi[c] = u32::MAX;
            used[img as usize] = false;
        }
    }
    let mut out = Vec::new();
    let mut pi = vec![u32::MAX; r];
    pi[0] = 0;
    let mut used = vec![false; r];
    used[0] = true;
    rec(x, &tensor, r, &mut pi, &mut used, 1, &mut out);
    out.sort();
    out
}

/// One isomorphism from coloring `from` to coloring `to` (same rank), i.e. a
/// `γ` with `to(x^γ, y^γ) = from(x, y)`, or None.
fn iso_coloring(
    from: &AssociationScheme,
    to: &AssociationScheme,
    opts: &SearchOptions,
) -> Result<Option<Perm>> {
    let n = from.size();
    if to.size() != n || to.rank() != from.rank() {
        return Ok(None);
    }
    let rank = from.rank();
    let left_coloring = EdgeColoring { n, rank, color: from.color_matrix() };
    let mut search = AutSearch::new(left_coloring, vec![(0..n).collect()], opts.clone());
    let right_coloring = EdgeColoring { n, rank, color: to.color_matrix() };
    let mut right = OPartition::unit(n);
    let right_root_trace = refine(&right_coloring, &mut right, &mut search.stats);
    let mut left_root = OPartition::unit(n);
    let mut throwaway = SearchStats::default();
    let left_root_trace = refine(&left_coloring, &mut left_root, &mut throwaway);
    if right_root_trace != left_root_trace {
        return Ok(None);
    }
    iso_descend(&mut search, &right_coloring, 0, right)
}

/// Mixed-coloring descent used by `iso_coloring`: the left path lives in the
/// search context, the right side is refined with its own coloring.
fn iso_descend(
    search: &mut AutSearch,
    right_coloring: &EdgeColoring,
    level: usize,
    right: OPartition,
) -> Result<Option<Perm>> {
    search.bump_node()?;
    if level == search.base.len() {
        if !right.is_discrete() {
            return Ok(None);
        }
        let n = right_coloring.n;
        let mut images = vec![0usize; n];
        for (k, cell) in search.left_leaf.cells.iter().enumerate() {
            images[cell[0]] = right.cells[k][0];
        }
        let Ok(perm) = Perm::from_images(images) else {
            return Ok(None);
        };
        for x in 0..n {
            for y in 0..n {
                if right_coloring.color(perm.apply(x), perm.apply(y))
                    != search.coloring.color(x, y)
                {
                    return Ok(None);
                }
            }
        }
        return Ok(Some(perm));
    }
    let pos = search.target_pos[level];
    if pos >= right.cells.len() {
        return Ok(None);
    }
    let mut candidates = right.cells[pos].clone();
    candidates.sort_unstable();
    for c in candidates {
        let mut next = right.individualize(pos, c);
        let trace = refine(right_coloring, &mut next, &mut search.stats);
        if trace != search.left_trace[level] {
            continue;
        }
        if let Some(found) = iso_descend(search, right_coloring, level + 1, next)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// Normalizer of a transitive group in the full symmetric group, computed as
/// the stabilizer of `Δ` under conjugation inside the color-permuting
/// automorphism group of `inv(Δ)` (any normalizing element permutes the
/// 2-orbits). Generator-wise conjugation is verified on the result.
pub fn normalizer_in_sym(delta: &PermGroup, opts: &SearchOptions) -> Result<PermGroup> {
    if !delta.is_transitive() {
        return Err(Error::Intransitive);
    }
    let scheme = orbital_scheme(delta)?;
    let caut = caut_scheme(&scheme, opts)?;
    // Fast path: if every generator of the color-permuting group normalizes
    // Δ, the whole group does.
    if caut
        .group
        .generators()
        .iter()
        .all(|g| delta.normalized_by(g))
    {
        let mut gens = delta.generators().to_vec();
        gens.extend(caut.group.generators().iter().cloned());
        return PermGroup::new(delta.degree(), gens);
    }
    let order = caut.group.order();
    if order > BigUint::from(opts.element_cap) {
        return Err(Error::BudgetExhausted {
            nodes: opts.element_cap as u64,
        });
    }
    let elements = caut.group.elements(opts.element_cap)?;
    let mut gens = delta.generators().to_vec();
    let mut group = PermGroup::new(delta.degree(), gens.clone())?;
    for e in elements {
        if group.contains(&e) {
            continue;
        }
        if delta.normalized_by(&e) {
            gens.push(e);
            group = PermGroup::new(delta.degree(), gens.clone())?;
        }
    }
    Ok(group)
}

/// A monomorphism from a table group onto a regular subgroup of `Γ`.
pub struct RegularEmbedding {
    /// Image of every group element, indexed by element.
    pub images: Vec<Perm>,
}

impl RegularEmbedding {
    pub fn image_group(&self, degree: usize) -> PermGroup {
        PermGroup::new(degree, self.images.clone()).unwrap()
    }
}

/// Searches `Γ` for a regular subgroup isomorphic to `G`. Candidate images of
/// each generator are the fixed-point-free elements of matching full cycle
/// type; assignments are extended word by word. Returns the first embedding
/// in a deterministic order, or None after exhausting the search.
pub fn find_regular_subgroup(
    gamma: &PermGroup,
    g: &FiniteGroup,
    opts: &SearchOptions,
) -> Result<Option<RegularEmbedding>> {
    if gamma.degree() != g.order() {
        return Err(Error::DegreeMismatch(gamma.degree(), g.order()));
    }
    let order = gamma.order();
    if order > BigUint::from(opts.element_cap) {
        return Err(Error::BudgetExhausted {
            nodes: opts.element_cap as u64,
        });
    }
    let mut elements = gamma.elements(opts.element_cap)?;
    elements.sort();
    let gens = g.generating_set();
    let pools: Vec<Vec<&Perm>> = gens
        .iter()
        .map(|&gen| {
            let ord = g.element_order(gen) as u64;
            elements
                .iter()
                .filter(|p| is_regular_element(p, ord))
                .collect()
        })
        .collect();
    let mut images: Vec<Option<Perm>> = vec![None; gens.len()];
    Ok(assign_generators(g, &gens, &pools, &mut images, 0))
}

fn is_regular_element(p: &Perm, ord: u64) -> bool {
    if ord == 1 {
        return p.is_identity();
    }
    if p.is_identity() {
        return false;
    }
    let cycles = p.cycles();
    let moved: usize = cycles.iter().map(|c| c.len()).sum();
    moved == p.degree() && cycles.iter().all(|c| c.len() as u64 == ord)
}

fn assign_generators(
    g: &FiniteGroup,
    gens: &[usize],
    pools: &[Vec<&Perm>],
    images: &mut Vec<Option<Perm>>,
    level: usize,
) -> Option<RegularEmbedding> {
    if level == gens.len() {
        return build_embedding(g, gens, images);
    }
    for idx in 0..pools[level].len() {
        images[level] = Some(pools[level][idx].clone());
        if extend_words(g, &gens[..=level], &images[..=level]).is_some() {
            if let Some(found) = assign_generators(g, gens, pools, images, level + 1) {
                return Some(found);
            }
        }
    }
    images[level] = None;
    None
}

/// Word-by-word image construction; fails on conflicts. Returns the partial
/// image table on the subgroup generated so far.
fn extend_words(
    g: &FiniteGroup,
    gens: &[usize],
    images: &[Option<Perm>],
) -> Option<Vec<Option<Perm>>> {
    let n = g.order();
    let degree = images[0].as_ref()?.degree();
    let mut table: Vec<Option<Perm>> = vec![None; n];
    table[0] = Some(Perm::identity(degree));
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for (k, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            let img = table[x]
                .as_ref()
                .unwrap()
                .compose(images[k].as_ref()?)
                .unwrap();
            match &table[y] {
                None => {
                    table[y] = Some(img);
                    frontier.push(y);
                }
                Some(existing) => {
                    if *existing != img {
                        return None;
                    }
                }
            }
        }
    }
    Some(table)
}

fn build_embedding(
    g: &FiniteGroup,
    gens: &[usize],
    images: &[Option<Perm>],
) -> Option<RegularEmbedding> {
    let table = extend_words(g, gens, images)?;
    let n = g.order();
    let mut full = Vec::with_capacity(n);
    let mut seen_at_zero = vec![false; n];
    for entry in table {
        let p = entry?; // generators must span G
        let at_zero = p.apply(0);
        if seen_at_zero[at_zero] {
            return None; // not regular
        }
        seen_at_zero[at_zero] = true;
        full.push(p);
    }
    Some(RegularEmbedding { images: full })
}

/// Whether the group acts 2-transitively (transitive of rank 2 on pairs).
pub fn is_2transitive(gamma: &PermGroup) -> bool {
    gamma.degree() >= 2 && gamma.is_transitive() && gamma.rank_on_pairs() == 2
}

/// Orbit count of the componentwise action restricted to the given pair set,
/// which must be invariant under the group.
pub fn flag_orbit_count(gamma: &PermGroup, flags: &[(usize, usize)]) -> usize {
    use std::collections::HashMap;
    let index: HashMap<(usize, usize), usize> =
        flags.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut seen = vec![false; flags.len()];
    let mut orbits = 0;
    for start in 0..flags.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        let mut stack = vec![flags[start]];
        while let Some((x, y)) = stack.pop() {
            for g in gamma.generators() {
                let img = (g.apply(x), g.apply(y));
                let i = *index
                    .get(&img)
                    .expect("flag set must be invariant under the group");
                if !seen[i] {
                    seen[i] = true;
                    stack.push(img);
                }
            }
        }
    }
    orbits
}
