//! Permutations of `{0..n-1}` and permutation groups backed by stabilizer chains.
//!
//! Throughout the crate permutations act on the right and compose left to
//! right: `x^(ab) = (x^a)^b`, so `compose(a, b)` applies `a` first. Groups are
//! given by generators; order, membership and point stabilizers go through a
//! lazily built Schreier–Sims chain whose base points are chosen greedily as
//! the smallest moved points, which keeps transversals and hence all derived
//! data reproducible.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Hard cap on permutation degree; everything in this crate stays far below it.
pub const DEGREE_CAP: usize = 10_000;

/// A permutation of `{0..n-1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n || seen[y] {
                return Err(Error::NotABijection { len: n });
            }
            seen[y] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let q = cycle[(i + 1) % cycle.len()];
                if p >= degree || q >= degree {
                    return Err(Error::Parameter(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                images[p] = q;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// `compose(a, b)` maps `x` to `b(a(x))`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Perm {
            images: self.images.iter().map(|&y| other.images[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            inv[y] = i;
        }
        Perm { images: inv }
    }

    /// Smallest point moved by the permutation, if any.
    pub fn min_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &y)| i != y).map(|(i, _)| i)
    }

    /// Decomposition into disjoint cycles of length at least 2, each cycle
    /// starting at its smallest point, cycles ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    /// Cycle notation with 1-based points, the external convention of the
    /// file formats: `(1,2,3)(4,5)`; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({})", self)
    }
}

/// One level of a stabilizer chain: a base point, the strong generators that
/// fix all earlier base points, and a Schreier tree for the orbit of the base
/// point under those generators.
struct ChainLevel {
    base: usize,
    gens: Vec<Perm>,
    /// `tree[p] = Some((parent, gen_idx))` when `p = parent^gens[gen_idx]`.
    tree: Vec<Option<(usize, usize)>>,
    orbit: Vec<usize>,
    /// (orbit point, generator index) pairs still awaiting Schreier processing.
    pending: Vec<(usize, usize)>,
}

impl ChainLevel {
    fn new(degree: usize, base: usize) -> ChainLevel {
        let mut tree = vec![None; degree];
        tree[base] = Some((base, usize::MAX));
        ChainLevel {
            base,
            gens: Vec::new(),
            tree,
            orbit: vec![base],
            pending: Vec::new(),
        }
    }

    fn in_orbit(&self, p: usize) -> bool {
        self.tree[p].is_some()
    }

    /// Coset representative mapping `base` to `p`, rebuilt from the tree.
    fn rep(&self, p: usize, degree: usize) -> Perm {
        let mut path = Vec::new();
        let mut q = p;
        loop {
            let (parent, g) = self.tree[q].expect("point not in orbit");
            if g == usize::MAX {
                break;
            }
            path.push(g);
            q = parent;
        }
        let mut images: Vec<usize> = (0..degree).collect();
        for &g in path.iter().rev() {
            let gen = &self.gens[g];
            for im in images.iter_mut() {
                *im = gen.apply(*im);
            }
        }
        Perm { images }
    }

    /// Adds a generator, extends the orbit, and queues the new pairs.
    fn push_gen(&mut self, g: Perm) {
        let gi = self.gens.len();
        self.gens.push(g);
        for pi in 0..self.orbit.len() {
            self.pending.push((self.orbit[pi], gi));
        }
        self.extend_orbit();
    }

    /// BFS orbit extension; newly reached points are queued against all gens.
    fn extend_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for gi in 0..self.gens.len() {
                let q = self.gens[gi].apply(p);
                if self.tree[q].is_none() {
                    self.tree[q] = Some((p, gi));
                    self.orbit.push(q);
                    for gj in 0..self.gens.len() {
                        self.pending.push((q, gj));
                    }
                }
            }
            i += 1;
        }
    }
}

/// A Schreier–Sims stabilizer chain. Base points are taken from an optional
/// hint prefix first, then greedily as the smallest point moved by the sifted
/// residue, so the chain is deterministic for a fixed generator list.
///
/// A strong generator fixing base points `b_0..b_{m-1}` lives in every level
/// `0..=m`: it participates in all those orbits, and level `l` generators
/// generate the full stabilizer of `b_0..b_{l-1}`.
pub struct StabChain {
    degree: usize,
    levels: Vec<ChainLevel>,
}

impl StabChain {
    pub fn new(degree: usize, base_hint: &[usize]) -> StabChain {
        let levels = base_hint
            .iter()
            .map(|&b| ChainLevel::new(degree, b))
            .collect();
        StabChain { degree, levels }
    }

    pub fn build(degree: usize, gens: &[Perm], base_hint: &[usize]) -> StabChain {
        let mut chain = StabChain::new(degree, base_hint);
        for g in gens {
            chain.add_generator(g.clone());
        }
        chain
    }

    /// Sifts `p` through levels `from..`, returning the level reached and the
    /// residue. A residue of identity means membership.
    fn sift_from(&self, from: usize, p: Perm) -> (usize, Perm) {
        let mut h = p;
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let img = h.apply(level.base);
            if img == level.base {
                continue;
            }
            if !level.in_orbit(img) {
                return (l, h);
            }
            let rep = level.rep(img, self.degree);
            h = h.compose(&rep.inverse()).unwrap();
        }
        (self.levels.len(), h)
    }

    /// Inserts a new generator, extending orbits and processing the Schreier
    /// generators the change produces until the chain is closed again.
    pub fn add_generator(&mut self, p: Perm) {
        assert_eq!(p.degree(), self.degree);
        self.insert_residue(0, p);
        self.close();
    }

    /// Sifts from the given level; a surviving residue fixing `b_0..b_{m-1}`
    /// becomes a strong generator of levels `from..=m`.
    fn insert_residue(&mut self, from: usize, p: Perm) {
        let (_, residue) = self.sift_from(from, p);
        if residue.is_identity() {
            return;
        }
        let mut m = from;
        while m < self.levels.len() && residue.apply(self.levels[m].base) == self.levels[m].base {
            m += 1;
        }
        if m == self.levels.len() {
            let base = residue.min_moved().expect("non-identity residue");
            self.levels.push(ChainLevel::new(self.degree, base));
        }
        for l in from..=m {
            self.levels[l].push_gen(residue.clone());
        }
    }

    /// Processes pending (orbit point, generator) pairs until every Schreier
    /// generator sifts to the identity.
    fn close(&mut self) {
        loop {
            let mut level_with_work = None;
            for l in (0..self.levels.len()).rev() {
                if !self.levels[l].pending.is_empty() {
                    level_with_work = Some(l);
                    break;
                }
            }
            let Some(l) = level_with_work else { break };
            let (p, gi) = self.levels[l].pending.pop().unwrap();
            let level = &self.levels[l];
            let rep_p = level.rep(p, self.degree);
            let g = level.gens[gi].clone();
            let q = g.apply(p);
            let rep_q = level.rep(q, self.degree);
            let schreier = rep_p.compose(&g).unwrap().compose(&rep_q.inverse()).unwrap();
            if !schreier.is_identity() {
                self.insert_residue(l + 1, schreier);
            }
        }
    }

    pub fn order(&self) -> BigUint {
        let mut ord = BigUint::from(1u32);
        for level in &self.levels {
            ord *= BigUint::from(level.orbit.len());
        }
        ord
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (_, residue) = self.sift_from(0, p.clone());
        residue.is_identity()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Strong generators fixing the first `k` base points.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Perm> {
        self.levels
            .iter()
            .skip(k)
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    /// Orbit of the level-`k` base point under the level-`k` stabilizer.
    pub fn level_orbit(&self, k: usize) -> Option<&[usize]> {
        self.levels.get(k).map(|l| l.orbit.as_slice())
    }

    pub fn level_base(&self, k: usize) -> Option<usize> {
        self.levels.get(k).map(|l| l.base)
    }

    /// Enumerates all group elements as products of transversal
    /// representatives. Only sensible for small groups; the `cap` guards
    /// against runaway enumeration.
    pub fn elements(&self, cap: usize) -> Result<Vec<Perm>> {
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for p in &level.orbit {
                let rep = level.rep(*p, self.degree);
                for tail in &out {
                    if next.len() >= cap {
                        return Err(Error::BudgetExhausted { nodes: cap as u64 });
                    }
                    // g = h · u_p with h from the deeper levels, applied first.
                    next.push(tail.compose(&rep).unwrap());
                }
            }
            out = next;
        }
        Ok(out)
    }
}

/// A permutation group given by generators, with a lazily built stabilizer
/// chain. Immutable after construction and safe to share across threads.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: OnceLock<StabChain>,
    base_hint: Vec<usize>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            chain: OnceLock::new(),
            base_hint: self.base_hint.clone(),
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree={}, gens={:?})", self.degree, self.gens)
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        if degree > DEGREE_CAP {
            return Err(Error::DegreeCap(degree, DEGREE_CAP));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            gens,
            chain: OnceLock::new(),
            base_hint: Vec::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    /// Same group, but the stabilizer chain will start with the given base points.
    pub fn with_base_hint(mut self, hint: Vec<usize>) -> PermGroup {
        self.base_hint = hint;
        self.chain = OnceLock::new();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.gens, &self.base_hint))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn order_u64(&self) -> u64 {
        let digits = self.order().to_u64_digits();
        match digits.len() {
            0 => 0,
            1 => digits[0],
            _ => u64::MAX,
        }
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.chain().contains(p)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Orbit of a single point.
    pub fn orbit_of(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            for g in &self.gens {
                let y = g.apply(orbit[i]);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbit partition of the whole domain, each orbit sorted, orbits ordered
    /// by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if seen[x] {
                continue;
            }
            let orbit = self.orbit_of(x);
            for &p in &orbit {
                seen[p] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit_of(0).len() == self.degree
    }

    /// Sharply transitive: transitive with order equal to the degree.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == BigUint::from(self.degree)
    }

    /// Number of orbits in the coordinatewise action on ordered pairs.
    pub fn rank_on_pairs(&self) -> usize {
        let n = self.degree;
        let mut uf = UnionFind::new(n * n);
        for g in &self.gens {
            for x in 0..n {
                for y in 0..n {
                    uf.union(x * n + y, g.apply(x) * n + g.apply(y));
                }
            }
        }
        uf.count()
    }

    /// Point stabilizer, from a chain rebased at `x`.
    pub fn point_stabilizer(&self, x: usize) -> PermGroup {
        let chain = StabChain::build(self.degree, &self.gens, &[x]);
        PermGroup::new(self.degree, chain.stabilizer_gens(1)).unwrap()
    }

    /// Orbits of the stabilizer of `x`, i.e. the suborbits at `x`.
    pub fn suborbits(&self, x: usize) -> Vec<Vec<usize>> {
        self.point_stabilizer(x).orbits()
    }

    pub fn elements(&self, cap: usize) -> Result<Vec<Perm>> {
        self.chain().elements(cap)
    }

    /// Conjugate group `g^-1 G g`.
    pub fn conjugate(&self, g: &Perm) -> Result<PermGroup> {
        let ginv = g.inverse();
        let gens = self
            .gens
            .iter()
            .map(|h| ginv.compose(h).and_then(|p| p.compose(g)))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.degree, gens)
    }

    /// Whether `g` normalizes this group, checked generator-wise through the chain.
    pub fn normalized_by(&self, g: &Perm) -> bool {
        let ginv = g.inverse();
        self.gens.iter().all(|h| {
            let conj = ginv.compose(h).unwrap().compose(g).unwrap();
            self.contains(&conj)
        })
    }
}

/// Imprimitive wreath product `bottom ≀ top` acting on
/// `{0..deg(top)-1} × {0..deg(bottom)-1}`, point `(b, i) ↦ b·deg(bottom) + i`.
/// Generated by the bottom group in block 0 plus the top group permuting
/// blocks; for transitive `top` this generates the full wreath product.
pub fn wreath_product(bottom: &PermGroup, top: &PermGroup) -> Result<PermGroup> {
    let nb = bottom.degree();
    let nt = top.degree();
    let degree = nb * nt;
    let mut gens = Vec::new();
    for g in bottom.generators() {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in 0..nb {
            images[i] = g.apply(i);
        }
        gens.push(Perm::from_images(images)?);
    }
    for t in top.generators() {
        let mut images = vec![0; degree];
        for b in 0..nt {
            for i in 0..nb {
                images[b * nb + i] = t.apply(b) * nb + i;
            }
        }
        gens.push(Perm::from_images(images)?);
    }
    PermGroup::new(degree, gens)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Smaller root wins so class representatives are minima.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub fn count(&mut self) -> usize {
        let n = self.parent.len();
        (0..n).filter(|&x| self.find(x) == x).count()
    }
}
