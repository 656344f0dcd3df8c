//! Exhaustive enumeration of all S-rings over a small group.
//!
//! The search assigns basic sets depth first: the branching element is the
//! smallest group element not yet in a determined class, and its candidate
//! basic sets are subsets of the refinement cell containing it. Between
//! branchings, constraint propagation runs the Schur–Wielandt closure on the
//! partial partition: products of determined class sums and cell sums are
//! computed, and every cell is split by the level sets of those coefficient
//! vectors. A determined class that would split kills the branch.
//!
//! Branch-local symmetry reduction keeps the tree small: at every node only
//! one candidate per orbit of the state-stabilizing group automorphisms is
//! explored, and the missing S-rings are recovered at the end by expanding
//! every found partition along `Aut(G)`. A plain brute-force filter over all
//! inverse-closed partitions serves as the oracle for group orders up to 8.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::autsearch::SearchOptions;
use crate::error::{Error, Result};
use crate::groups::{automorphisms, FiniteGroup};
use crate::perm::Perm;
use crate::sring::{is_schurian, SRing};

/// Default order cap for exhaustive enumeration.
pub const ENUMERATION_ORDER_CAP: usize = 32;

/// Budget for one enumeration run; exhaustion is an error distinct from a
/// completed run, so censuses are never silently partial.
#[derive(Clone, Debug)]
pub struct EnumerationBudget {
    pub node_cap: u64,
    pub order_cap: usize,
    /// Worker threads for the root split; 1 means fully sequential.
    pub jobs: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            node_cap: 50_000_000,
            order_cap: ENUMERATION_ORDER_CAP,
            jobs: 1,
        }
    }
}

/// A partition of the group during the search: determined classes plus
/// refinement cells of the still-free elements.
#[derive(Clone)]
struct State {
    /// Determined basic sets, each sorted.
    determined: Vec<Vec<usize>>,
    /// Cells of free elements, each sorted; unions of future basic sets.
    cells: Vec<Vec<usize>>,
}

impl State {
    fn root(n: usize) -> State {
        State {
            determined: vec![vec![0]],
            cells: if n > 1 {
                vec![(1..n).collect()]
            } else {
                Vec::new()
            },
        }
    }

}

/// Applies a group automorphism to a sorted element set.
fn apply_to_set(p: &Perm, set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().map(|&x| p.apply(x)).collect();
    out.sort_unstable();
    out
}

/// One round of Schur–Wielandt propagation: all pairwise products of block
/// sums (determined and cells alike), then a simultaneous refinement of the
/// cells by the level sets. Returns whether anything changed; a determined
/// class that would split is a contradiction.
fn propagate(group: &FiniteGroup, state: &mut State) -> Result<bool> {
    let n = group.order();
    let mut changed_any = false;
    loop {
        let blocks: Vec<&Vec<usize>> = state.determined.iter().chain(state.cells.iter()).collect();
        // Signature per element: the vector of product coefficients at that
        // element, over all ordered block pairs.
        let mut signatures: Vec<Vec<u64>> = vec![Vec::new(); n];
        let mut coeff = vec![0u64; n];
        for a in &blocks {
            for b in &blocks {
                coeff.iter_mut().for_each(|c| *c = 0);
                for &x in a.iter() {
                    for &y in b.iter() {
                        coeff[group.mul(x, y)] += 1;
                    }
                }
                for z in 0..n {
                    signatures[z].push(coeff[z]);
                }
            }
        }
        // Split determined classes? Contradiction.
        for class in &state.determined {
            let first = &signatures[class[0]];
            if class.iter().any(|&z| &signatures[z] != first) {
                return Err(Error::NotAnSRing("determined class split".into()));
            }
        }
        // Refine cells simultaneously.
        let mut new_cells: Vec<Vec<usize>> = Vec::new();
        let mut changed = false;
        for cell in &state.cells {
            let mut groups_map: HashMap<&Vec<u64>, Vec<usize>> = HashMap::new();
            for &z in cell {
                groups_map.entry(&signatures[z]).or_default().push(z);
            }
            if groups_map.len() > 1 {
                changed = true;
            }
            let mut fragments: Vec<Vec<usize>> = groups_map.into_values().collect();
            for f in fragments.iter_mut() {
                f.sort_unstable();
            }
            fragments.sort_by_key(|f| f[0]);
            new_cells.extend(fragments);
        }
        new_cells.sort_by_key(|c| c[0]);
        state.cells = new_cells;
        if !changed {
            break;
        }
        changed_any = true;
    }
    Ok(changed_any)
}

/// The smallest S-ring whose module contains the seed class sums, computed by
/// closing under products and coefficient-level-set extraction. The seed is
/// symmetrized first: `{e}` is split off and the partition is refined to be
/// inverse-closed.
pub fn sring_closure(group: &FiniteGroup, seed: &[Vec<usize>]) -> Result<SRing> {
    let n = group.order();
    let mut covered = vec![false; n];
    for class in seed {
        for &x in class {
            if x >= n || covered[x] {
                return Err(Error::Parameter(
                    "seed must be a partition of the group".into(),
                ));
            }
            covered[x] = true;
        }
    }
    if !covered.iter().all(|&b| b) {
        return Err(Error::Parameter("seed must cover the group".into()));
    }
    // Inverse symmetrization: refine by the common refinement with the
    // inverse image partition, and split off the identity.
    let mut block_of = vec![0usize; n];
    for (i, class) in seed.iter().enumerate() {
        for &x in class {
            block_of[x] = i + 1;
        }
    }
    block_of[0] = 0;
    let mut keyed: HashMap<(usize, usize, bool), Vec<usize>> = HashMap::new();
    for x in 1..n {
        let key = (block_of[x], block_of[group.inv(x)], false);
        keyed.entry(key).or_default().push(x);
    }
    let mut cells: Vec<Vec<usize>> = keyed.into_values().collect();
    for c in cells.iter_mut() {
        c.sort_unstable();
    }
    cells.sort_by_key(|c| c[0]);
    // Treat every seed block as determined "cells" and propagate: the closure
    // is exactly propagation where all blocks are refinable.
    let mut state = State {
        determined: vec![vec![0]],
        cells,
    };
    propagate(group, &mut state)?;
    let mut classes = state.determined;
    classes.extend(state.cells);
    SRing::from_partition(group, &classes)
}

/// All S-rings over the group as explicit partitions, found by the canonical
/// search and expanded along `Aut(G)`. Deterministic output order by
/// (rank, partition key).
pub fn enumerate_srings(group: &FiniteGroup, budget: &EnumerationBudget) -> Result<Vec<SRing>> {
    let n = group.order();
    if n > budget.order_cap {
        return Err(Error::Parameter(format!(
            "order {n} exceeds enumeration cap {}",
            budget.order_cap
        )));
    }
    let auts = automorphisms(group);
    let mut reps: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut state = State::root(n);
    propagate(group, &mut state)?;
    let nodes = std::sync::atomic::AtomicU64::new(0);
    if budget.jobs <= 1 {
        dfs(group, &auts, state, &nodes, budget.node_cap, &mut reps)?;
    } else {
        // Root split: compute the first-level branches sequentially, then
        // process the subtrees in parallel and merge deterministically.
        let branches = root_branches(group, &auts, &state)?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(budget.jobs)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?;
        let results: Vec<Result<Vec<Vec<Vec<usize>>>>> = pool.install(|| {
            branches
                .into_par_iter()
                .map(|branch| {
                    let mut local = Vec::new();
                    dfs(group, &auts, branch, &nodes, budget.node_cap, &mut local)?;
                    Ok(local)
                })
                .collect()
        });
        for r in results {
            reps.extend(r?);
        }
    }
    // Expand each representative along Aut(G) and deduplicate.
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out: Vec<SRing> = Vec::new();
    for rep in reps {
        for a in &auts {
            let mapped: Vec<Vec<usize>> = rep.iter().map(|c| apply_to_set(a, c)).collect();
            let mut key = vec![usize::MAX; n];
            for class in &mapped {
                for &x in class {
                    key[x] = class[0];
                }
            }
            if seen.insert(key) {
                out.push(SRing::from_partition(group, &mapped)?);
            }
        }
    }
    out.sort_by_key(|s| (s.rank(), s.partition_key()));
    Ok(out)
}

/// Expands the root into its first-level branch states (after symmetry
/// reduction and propagation), for the parallel path.
fn root_branches(group: &FiniteGroup, auts: &[Perm], state: &State) -> Result<Vec<State>> {
    let mut out = Vec::new();
    if state.cells.is_empty() {
        out.push(state.clone());
        return Ok(out);
    }
    for candidate in branch_candidates(group, auts, state) {
        let mut next = state.clone();
        if apply_candidate(group, &mut next, &candidate).is_ok()
            && propagate(group, &mut next).is_ok()
        {
            out.push(next);
        }
    }
    Ok(out)
}

fn dfs(
    group: &FiniteGroup,
    auts: &[Perm],
    state: State,
    nodes: &std::sync::atomic::AtomicU64,
    node_cap: u64,
    out: &mut Vec<Vec<Vec<usize>>>,
) -> Result<()> {
    let visited = nodes.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
    if visited > node_cap {
        return Err(Error::BudgetExhausted { nodes: visited });
    }
    if state.cells.is_empty() {
        out.push(state.determined.clone());
        return Ok(());
    }
    for candidate in branch_candidates(group, auts, &state) {
        let mut next = state.clone();
        if apply_candidate(group, &mut next, &candidate).is_err() {
            continue;
        }
        if propagate(group, &mut next).is_err() {
            continue;
        }
        dfs(group, auts, next, nodes, node_cap, out)?;
    }
    Ok(())
}

/// Candidate basic sets for the branch element, the free element least by
/// (element order, index), which stabilizes the search tree: subsets of
/// its cell containing it, reduced to one representative per orbit of the
/// state-stabilizing automorphisms. Candidates are emitted in increasing
/// mask order, so the kept representative is the lexicographically least of
/// its orbit.
fn branch_candidates(group: &FiniteGroup, auts: &[Perm], state: &State) -> Vec<Vec<usize>> {
    let n = group.order();
    let x = state
        .cells
        .iter()
        .flatten()
        .copied()
        .min_by_key(|&v| (group.element_order(v), v))
        .expect("caller checked cells nonempty");
    let cell = state
        .cells
        .iter()
        .find(|c| c.binary_search(&x).is_ok())
        .unwrap()
        .clone();
    let rest: Vec<usize> = cell.iter().copied().filter(|&v| v != x).collect();
    let bits = rest.len();
    if bits > 25 {
        // Give up on symmetry marking at absurd cell sizes; the order cap
        // keeps us away from here in practice.
        return (0u64..(1 << bits))
            .map(|mask| expand_mask(x, &rest, mask))
            .collect();
    }
    let stabilizing: Vec<&Perm> = auts
        .iter()
        .filter(|a| stabilizes_state(a, state, n))
        .collect();
    let pos_in_rest: HashMap<usize, usize> =
        rest.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut marked = vec![false; 1usize << bits];
    let mut out = Vec::new();
    for mask in 0..(1u64 << bits) {
        if marked[mask as usize] {
            continue;
        }
        let candidate = expand_mask(x, &rest, mask);
        // Mark the orbit of this candidate under the stabilizing group.
        for a in &stabilizing {
            let image = apply_to_set(a, &candidate);
            if image.binary_search(&x).is_err() {
                continue; // not a candidate at this branch point
            }
            let others: Vec<usize> = image.iter().copied().filter(|&v| v != x).collect();
            if let Some(img_mask) = mask_of(&others, &pos_in_rest) {
                marked[img_mask as usize] = true;
            }
        }
        out.push(candidate);
    }
    out
}

/// The subset of `{x} ∪ rest` selected by the mask, sorted.
fn expand_mask(x: usize, rest: &[usize], mask: u64) -> Vec<usize> {
    let mut set = vec![x];
    for (i, &v) in rest.iter().enumerate() {
        if mask >> i & 1 == 1 {
            set.push(v);
        }
    }
    set.sort_unstable();
    set
}

fn mask_of(elems: &[usize], pos: &HashMap<usize, usize>) -> Option<u64> {
    let mut mask = 0u64;
    for &v in elems {
        mask |= 1 << *pos.get(&v)?;
    }
    Some(mask)
}

/// Whether the automorphism maps the state to itself: every determined class
/// lands on a determined class. Cells are canonical functions of the
/// determined part (propagation is equivariant), so they follow.
fn stabilizes_state(a: &Perm, state: &State, _n: usize) -> bool {
    state.determined.iter().all(|class| {
        let image = apply_to_set(a, class);
        state.determined.contains(&image)
    })
}

/// Adds the candidate (and its inverse set) as determined classes, removing
/// them from the cells.
fn apply_candidate(group: &FiniteGroup, state: &mut State, candidate: &[usize]) -> Result<()> {
    let inv: Vec<usize> = {
        let mut v: Vec<usize> = candidate.iter().map(|&x| group.inv(x)).collect();
        v.sort_unstable();
        v
    };
    let candidate = candidate.to_vec();
    let same = inv == candidate;
    if !same {
        // The two sets must be disjoint (classes are disjoint).
        if candidate.iter().any(|x| inv.binary_search(x).is_ok()) {
            return Err(Error::NotAnSRing("candidate overlaps its inverse".into()));
        }
    }
    for set in [&candidate, &inv] {
        // Each must fit inside one current cell.
        let cell_idx = state
            .cells
            .iter()
            .position(|c| set.iter().all(|x| c.binary_search(x).is_ok()))
            .ok_or_else(|| Error::NotAnSRing("candidate crosses cell boundaries".into()))?;
        let remaining: Vec<usize> = state.cells[cell_idx]
            .iter()
            .copied()
            .filter(|x| set.binary_search(x).is_err())
            .collect();
        if remaining.is_empty() {
            state.cells.remove(cell_idx);
        } else {
            state.cells[cell_idx] = remaining;
        }
        state.determined.push(set.clone());
        if same {
            break;
        }
    }
    state.determined.sort_by_key(|c| c[0]);
    state.cells.sort_by_key(|c| c[0]);
    Ok(())
}

/// Brute-force oracle: filters all partitions of the group with `{e}`
/// singleton and inverse closure by the module-closure test. Only feasible
/// through order 8.
pub fn brute_force_srings(group: &FiniteGroup) -> Result<Vec<SRing>> {
    let n = group.order();
    if n > 8 {
        return Err(Error::Parameter(format!(
            "brute force is capped at order 8, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n]; // block index per element 1..n
    fn rec(
        group: &FiniteGroup,
        assignment: &mut Vec<usize>,
        x: usize,
        blocks: usize,
        out: &mut Vec<SRing>,
    ) {
        let n = group.order();
        if x == n {
            let mut classes: Vec<Vec<usize>> = vec![Vec::new(); blocks + 1];
            classes[0].push(0);
            for v in 1..n {
                classes[assignment[v]].push(v);
            }
            classes.retain(|c| !c.is_empty());
            // Inverse closure check.
            let ok = classes.iter().all(|class| {
                let mut inv: Vec<usize> = class.iter().map(|&y| group.inv(y)).collect();
                inv.sort_unstable();
                classes.contains(&inv)
            });
            if ok {
                if let Ok(sring) = SRing::from_partition(group, &classes) {
                    out.push(sring);
                }
            }
            return;
        }
        for b in 1..=blocks + 1 {
            assignment[x] = b;
            rec(group, assignment, x + 1, blocks.max(b), out);
        }
        assignment[x] = 0;
    }
    if n == 1 {
        out.push(SRing::from_partition(group, &[vec![0]])?);
        return Ok(out);
    }
    rec(group, &mut assignment, 1, 0, &mut out);
    out.sort_by_key(|s| (s.rank(), s.partition_key()));
    Ok(out)
}

/// One row of a schurity census.
pub struct CensusRow {
    pub rank: usize,
    pub classes: Vec<Vec<usize>>,
    pub schurian: bool,
    pub aut_order: num_bigint::BigUint,
}

/// Census of all S-rings over the group: rank, schurity verdict, and the
/// order of the scheme automorphism group, one row per S-ring. The group is
/// Schur exactly when every row is schurian. Verdicts are computed once per
/// `Aut(G)`-orbit since schurity is invariant under group automorphisms.
pub fn schurity_census(
    group: &FiniteGroup,
    budget: &EnumerationBudget,
    opts: &SearchOptions,
) -> Result<Vec<CensusRow>> {
    let srings = enumerate_srings(group, budget)?;
    let auts = automorphisms(group);
    let mut verdicts: HashMap<Vec<usize>, (bool, num_bigint::BigUint)> = HashMap::new();
    let mut rows = Vec::with_capacity(srings.len());
    for sring in &srings {
        let key = sring.partition_key();
        let (schurian, aut_order) = match verdicts.get(&key) {
            Some(v) => v.clone(),
            None => {
                let verdict = is_schurian(sring, opts)?;
                let value = (verdict.is_schurian(), verdict.aut().order());
                // All images under Aut(G) share the verdict.
                for a in &auts {
                    let mapped: Vec<Vec<usize>> = sring
                        .classes()
                        .iter()
                        .map(|c| apply_to_set(a, c))
                        .collect();
                    let mut mkey = vec![usize::MAX; group.order()];
                    for class in &mapped {
                        for &x in class {
                            mkey[x] = class[0];
                        }
                    }
                    verdicts.insert(mkey, value.clone());
                }
                value
            }
        };
        rows.push(CensusRow {
            rank: sring.rank(),
            classes: sring.classes().to_vec(),
            schurian,
            aut_order,
        });
    }
    Ok(rows)
}
