//! Finite groups as explicit multiplication tables, with constructors for the
//! standard small-group families, conjugacy classes, quotients, and
//! small-order isomorphism testing.
//!
//! Element 0 is always the identity. Each constructor fixes a canonical
//! element ordering (documented on the constructor) so that derived data such
//! as partitions and scheme colorings are stable across runs. Catalogue
//! labels are inert metadata carried along for reporting.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ff::{self, Field};
use crate::perm::{Perm, PermGroup};

/// A finite group given by its full multiplication table.
///
/// `mul` is row-major: `mul[a * n + b]` is the product `a·b`. The identity is
/// element 0 and `inv` holds the inverse of each element. Group axioms are
/// checked exhaustively up to order 64 and on a deterministic sample above.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    label: Option<String>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.label {
            Some(l) => write!(f, "FiniteGroup({}, order {})", l, self.n),
            None => write!(f, "FiniteGroup(order {})", self.n),
        }
    }
}

impl FiniteGroup {
    /// Builds a group from a multiplication table, verifying the axioms.
    pub fn from_mul_table(n: usize, mul: Vec<usize>) -> Result<FiniteGroup> {
        if n == 0 || mul.len() != n * n {
            return Err(Error::NotAGroup(format!(
                "table size {} does not match order {n}",
                mul.len()
            )));
        }
        if mul.iter().any(|&x| x >= n) {
            return Err(Error::NotAGroup("entry out of range".into()));
        }
        for a in 0..n {
            if mul[a] != a || mul[a * n] != a {
                return Err(Error::NotAGroup(format!("0 is not an identity at {a}")));
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| mul[a * n + b] == 0) {
                Some(b) if mul[b * n + a] == 0 => inv[a] = b,
                _ => return Err(Error::NotAGroup(format!("{a} has no two-sided inverse"))),
            }
        }
        // Associativity: exhaustive at small orders, deterministic sample above.
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    let ab = mul[a * n + b];
                    for c in 0..n {
                        if mul[ab * n + c] != mul[a * n + mul[b * n + c]] {
                            return Err(Error::NotAGroup(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            for _ in 0..8192 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let a = (state % n as u64) as usize;
                let b = ((state >> 16) % n as u64) as usize;
                let c = ((state >> 32) % n as u64) as usize;
                let ab = mul[a * n + b];
                if mul[ab * n + c] != mul[a * n + mul[b * n + c]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(FiniteGroup {
            n,
            mul,
            inv,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> FiniteGroup {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn conj(&self, a: usize, by: usize) -> usize {
        self.mul(self.mul(self.inv(by), a), by)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1, |acc, a| lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// Sorted multiset of element orders, a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..self.n).map(|a| self.element_order(a)).collect();
        orders.sort_unstable();
        orders
    }

    /// Greedy short generating sequence: repeatedly adjoin the element whose
    /// addition grows the generated subgroup the most (smallest element on
    /// ties), which keeps generator counts near-minimal.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0];
        while span.len() < self.n {
            let mut in_span = vec![false; self.n];
            for &x in &span {
                in_span[x] = true;
            }
            let mut best = usize::MAX;
            let mut best_size = 0;
            for a in 1..self.n {
                if in_span[a] {
                    continue;
                }
                gens.push(a);
                let size = self.subgroup_generated(&gens).len();
                gens.pop();
                if size > best_size {
                    best_size = size;
                    best = a;
                }
                if size == self.n {
                    break; // cannot do better than the whole group
                }
            }
            gens.push(best);
            span = self.subgroup_generated(&gens);
        }
        gens
    }

    /// Closure of the seeds under multiplication; sorted element list.
    pub fn subgroup_generated(&self, seeds: &[usize]) -> Vec<usize> {
        let mut in_sub = vec![false; self.n];
        in_sub[0] = true;
        let mut elems = vec![0];
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &s in seeds {
                let y = self.mul(x, s);
                if !in_sub[y] {
                    in_sub[y] = true;
                    elems.push(y);
                    frontier.push(y);
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        if !elems.contains(&0) {
            return false;
        }
        elems
            .iter()
            .all(|&a| elems.iter().all(|&b| elems.contains(&self.mul(a, b))))
    }

    /// Conjugacy classes, each sorted, ordered by (size, smallest element);
    /// the class of the identity comes first.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut classes = Vec::new();
        for a in 0..self.n {
            if seen[a] {
                continue;
            }
            let mut class = vec![a];
            seen[a] = true;
            let mut i = 0;
            while i < class.len() {
                let x = class[i];
                for b in 0..self.n {
                    let y = self.conj(x, b);
                    if !seen[y] {
                        seen[y] = true;
                        class.push(y);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| (c[0] != 0, c.len(), c[0]));
        classes
    }

    /// Right regular representation: `g` acts as `x ↦ x·g`. The left version
    /// sends `g` to `x ↦ g·x`; the two centralize each other.
    pub fn regular_representation(&self, side: Side) -> PermGroup {
        let gens = self
            .generating_set()
            .into_iter()
            .map(|g| self.translation(g, side))
            .collect();
        PermGroup::new(self.n, gens).unwrap()
    }

    /// The permutation induced by one element under right or left translation.
    pub fn translation(&self, g: usize, side: Side) -> Perm {
        let images = (0..self.n)
            .map(|x| match side {
                Side::Right => self.mul(x, g),
                Side::Left => self.mul(g, x),
            })
            .collect();
        Perm::from_images(images).unwrap()
    }

    /// The permutation of elements induced by conjugation with `g`.
    pub fn conjugation_perm(&self, g: usize) -> Perm {
        Perm::from_images((0..self.n).map(|x| self.conj(x, g)).collect()).unwrap()
    }

    /// Transitive action on right cosets of `H` by right multiplication.
    /// Cosets are indexed by their smallest member in increasing order, so
    /// the coset `H` itself is point 0.
    pub fn coset_action(&self, subgroup: &[usize]) -> Result<CosetAction> {
        if !self.is_subgroup(subgroup) {
            return Err(Error::NotASubgroup);
        }
        let mut coset_of = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for x in 0..self.n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            for &h in subgroup {
                coset_of[self.mul(h, x)] = idx;
            }
        }
        let degree = reps.len();
        let gens = self
            .generating_set()
            .into_iter()
            .map(|g| {
                Perm::from_images((0..degree).map(|c| coset_of[self.mul(reps[c], g)]).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CosetAction {
            group: PermGroup::new(degree, gens)?,
            reps,
            coset_of,
        })
    }

    /// Quotient by a normal subgroup; elements are cosets indexed by smallest
    /// member, coset of the identity first.
    pub fn quotient(&self, normal: &[usize]) -> Result<FiniteGroup> {
        if !self.is_subgroup(normal) {
            return Err(Error::NotASubgroup);
        }
        let normal_set: Vec<bool> = {
            let mut v = vec![false; self.n];
            for &x in normal {
                v[x] = true;
            }
            v
        };
        for &x in normal {
            for g in 0..self.n {
                if !normal_set[self.conj(x, g)] {
                    return Err(Error::NotNormal);
                }
            }
        }
        let action = self.coset_action(normal)?;
        let m = action.reps.len();
        let mut mul = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                mul[a * m + b] = action.coset_of[self.mul(action.reps[a], action.reps[b])];
            }
        }
        FiniteGroup::from_mul_table(m, mul)
    }

    /// The subgroup on the given (sorted) element set as a standalone group,
    /// with the index-into-`elems` relabeling. Returns the embedding list.
    pub fn subgroup_as_group(&self, elems: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(elems) {
            return Err(Error::NotASubgroup);
        }
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        let pos: HashMap<usize, usize> = sorted.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let m = sorted.len();
        let mut mul = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                mul[a * m + b] = pos[&self.mul(sorted[a], sorted[b])];
            }
        }
        Ok((FiniteGroup::from_mul_table(m, mul)?, sorted))
    }

    /// Abstracts a regular permutation group of degree n into a table group:
    /// element `i` is the unique permutation mapping point 0 to `i`.
    pub fn from_regular_perm_group(g: &PermGroup) -> Result<FiniteGroup> {
        if !g.is_regular() {
            return Err(Error::Parameter("permutation group is not regular".into()));
        }
        let n = g.degree();
        let elements = g.elements(n + 1)?;
        let mut by_image: Vec<Option<Perm>> = vec![None; n];
        for e in elements {
            let img = e.apply(0);
            by_image[img] = Some(e);
        }
        let perms: Vec<Perm> = by_image.into_iter().map(|p| p.unwrap()).collect();
        let mut mul = vec![0; n * n];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                // x0^(pa·pb) identifies the product element.
                mul[a * n + b] = pb.apply(pa.apply(0));
            }
        }
        FiniteGroup::from_mul_table(n, mul)
    }

    /// Abstracts any faithful permutation group into a table group via its
    /// element list; element 0 is the identity, the rest sorted by image list.
    pub fn from_perm_group(g: &PermGroup, cap: usize) -> Result<FiniteGroup> {
        let mut elements = g.elements(cap)?;
        elements.sort();
        let pos: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let n = elements.len();
        let mut mul = vec![0; n * n];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                mul[a * n + b] = pos[&pa.compose(pb).unwrap()];
            }
        }
        FiniteGroup::from_mul_table(n, mul)
    }
}

/// Which side a regular representation multiplies on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Right,
    Left,
}

/// A coset action together with the bookkeeping to move between group
/// elements and coset points.
pub struct CosetAction {
    pub group: PermGroup,
    /// Smallest member of each coset, indexed by point.
    pub reps: Vec<usize>,
    /// Coset point of each group element.
    pub coset_of: Vec<usize>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// Cyclic group of order `n`; element `i` is the `i`-th power of the generator.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = (a + b) % n;
        }
    }
    FiniteGroup::from_mul_table(n, mul)
        .unwrap()
        .with_label(format!("C{n}"))
}

/// Elementary abelian group of order `p^k`; elements are base-`p` digit
/// vectors added componentwise, indexed by `Σ d_i p^i`.
pub fn elementary_abelian(p: usize, k: u32) -> FiniteGroup {
    assert!(ff::is_prime(p as u64), "p must be prime");
    let n = p.pow(k);
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let (mut x, mut y, mut pw, mut sum) = (a, b, 1, 0);
            for _ in 0..k {
                sum += (x % p + y % p) % p * pw;
                x /= p;
                y /= p;
                pw *= p;
            }
            mul[a * n + b] = sum;
        }
    }
    FiniteGroup::from_mul_table(n, mul)
        .unwrap()
        .with_label(format!("E{n}"))
}

/// Dihedral group of order `2n`, built as the generalized dihedral group of
/// the cyclic group of order `n`: rotations first, then reflections.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 2 || order % 2 != 0 {
        return Err(Error::Parameter(format!(
            "dihedral group order must be even, got {order}"
        )));
    }
    Ok(generalized_dihedral(&cyclic(order / 2))?.with_label(format!("D{order}")))
}

/// Generalized dihedral group of an abelian group `H`: the extension of `H`
/// by an involution `g` inverting it. Elements `0..|H|` are `H` itself with
/// its own indexing; element `|H| + i` is `h_i·g`.
pub fn generalized_dihedral(h: &FiniteGroup) -> Result<FiniteGroup> {
    if !h.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let m = h.order();
    let n = 2 * m;
    let mut mul = vec![0; n * n];
    for a in 0..m {
        for b in 0..m {
            mul[a * n + b] = h.mul(a, b); // h_a · h_b
            mul[a * n + (m + b)] = m + h.mul(a, b); // h_a · h_b g
            mul[(m + a) * n + b] = m + h.mul(a, h.inv(b)); // h_a g · h_b = h_a h_b^-1 g
            mul[(m + a) * n + (m + b)] = h.mul(a, h.inv(b)); // h_a g · h_b g = h_a h_b^-1
        }
    }
    let label = h
        .label()
        .map(|l| format!("Dih({l})"))
        .unwrap_or_else(|| format!("Dih({m})"));
    Ok(FiniteGroup::from_mul_table(n, mul)?.with_label(label))
}

/// Generalized quaternion group of order `2^k`, `k ≥ 3`:
/// `⟨a,b | a^{2^{k-1}} = 1, b² = a^{2^{k-2}}, a^b = a^{-1}⟩`.
/// Element `i < 2^{k-1}` is `a^i`; element `2^{k-1} + i` is `a^i b`.
pub fn quaternion_generalized(order: usize) -> Result<FiniteGroup> {
    let k = order.trailing_zeros();
    if order < 8 || order != 1 << k {
        return Err(Error::Parameter(format!(
            "generalized quaternion order must be 2^k, k ≥ 3, got {order}"
        )));
    }
    let m = order / 2;
    let n = order;
    let half = m / 2; // b² = a^{m/2}
    let mut mul = vec![0; n * n];
    for i in 0..m {
        for j in 0..m {
            mul[i * n + j] = (i + j) % m;
            mul[i * n + (m + j)] = m + (i + j) % m;
            mul[(m + i) * n + j] = m + (i + m - j % m) % m;
            mul[(m + i) * n + (m + j)] = (i + m - j % m + half) % m;
        }
    }
    let label = if order == 8 { "Q8".into() } else { format!("Q{order}") };
    Ok(FiniteGroup::from_mul_table(n, mul)?.with_label(label))
}

/// Semidihedral group of order `2^k`, `k ≥ 4`:
/// `⟨a,b | a^{2^{k-1}} = b² = 1, a^b = a^{-1+2^{k-2}}⟩`.
pub fn semidihedral(order: usize) -> Result<FiniteGroup> {
    let k = order.trailing_zeros();
    if order < 16 || order != 1 << k {
        return Err(Error::Parameter(format!(
            "semidihedral order must be 2^k, k ≥ 4, got {order}"
        )));
    }
    let m = order / 2;
    let t = m / 2 + m - 1; // exponent -1 + 2^{k-2} mod 2^{k-1}
    two_generator_metacyclic(m, 2, t % m, 0)
        .map(|g| g.with_label(format!("SD{order}")))
}

/// Modular group `M_{p^k} = ⟨a,b | a^{p^{k-1}} = b^p = 1, a^b = a^{1+p^{k-2}}⟩`
/// for `k ≥ 3` (`k > 3` when `p = 2`).
pub fn modular_m(p: usize, k: u32) -> Result<FiniteGroup> {
    if !ff::is_prime(p as u64) || k < 3 || (p == 2 && k < 4) {
        return Err(Error::Parameter(format!(
            "modular group needs prime p and k ≥ 3 (k ≥ 4 for p = 2), got p={p}, k={k}"
        )));
    }
    let m = p.pow(k - 1);
    let t = 1 + p.pow(k - 2);
    two_generator_metacyclic(m, p, t % m, 0)
        .map(|g| g.with_label(format!("M{}", p.pow(k))))
}

/// Group `⟨a,b | a^m = 1, b^s = a^{c}, a^b = a^t⟩` with elements `a^i b^j`
/// indexed as `i + m·j`; requires `t^s ≡ 1 (mod m)` and `c(t-1) ≡ 0 (mod m)`
/// for consistency, which the table validation enforces.
fn two_generator_metacyclic(m: usize, s: usize, t: usize, c: usize) -> Result<FiniteGroup> {
    let n = m * s;
    let mut tpow = vec![1usize; s];
    for j in 1..s {
        tpow[j] = tpow[j - 1] * t % m;
    }
    let mut mul = vec![0; n * n];
    for i1 in 0..m {
        for j1 in 0..s {
            for i2 in 0..m {
                for j2 in 0..s {
                    // b^{j1} a^{i2} = a^{i2 t^{j1}} b^{j1}
                    let i = (i1 + i2 * tpow[j1]) % m;
                    let (i, j) = if j1 + j2 >= s {
                        ((i + c) % m, j1 + j2 - s)
                    } else {
                        (i, j1 + j2)
                    };
                    mul[(i1 + m * j1) * n + (i2 + m * j2)] = i + m * j;
                }
            }
        }
    }
    FiniteGroup::from_mul_table(n, mul)
}

/// The order-16 group `⟨a,b,c | a⁴=b²=c²=[a,b]=[a,c]=1, [b,c]=a²⟩`, the
/// central product of D8 and C4. Element `a^i b^j c^k` has index `i+4j+8k`.
pub fn g16() -> FiniteGroup {
    let n = 16;
    let mut mul = vec![0; n * n];
    for i1 in 0..4 {
        for j1 in 0..2 {
            for k1 in 0..2 {
                for i2 in 0..4 {
                    for j2 in 0..2 {
                        for k2 in 0..2 {
                            // c^k1 b^j2 = b^j2 c^k1 a^{2 k1 j2}
                            let i = (i1 + i2 + 2 * k1 * j2) % 4;
                            let j = (j1 + j2) % 2;
                            let k = (k1 + k2) % 2;
                            let lhs = i1 + 4 * j1 + 8 * k1;
                            let rhs = i2 + 4 * j2 + 8 * k2;
                            mul[lhs * n + rhs] = i + 4 * j + 8 * k;
                        }
                    }
                }
            }
        }
    }
    FiniteGroup::from_mul_table(n, mul).unwrap().with_label("G16")
}

/// Direct product; element `(a, b)` has index `a + |A|·b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut mul = vec![0; n * n];
    for a1 in 0..na {
        for b1 in 0..nb {
            for a2 in 0..na {
                for b2 in 0..nb {
                    mul[(a1 + na * b1) * n + (a2 + na * b2)] =
                        a.mul(a1, a2) + na * b.mul(b1, b2);
                }
            }
        }
    }
    let label = match (a.label(), b.label()) {
        (Some(x), Some(y)) => Some(format!("{x}x{y}")),
        _ => None,
    };
    let g = FiniteGroup::from_mul_table(n, mul).unwrap();
    match label {
        Some(l) => g.with_label(l),
        None => g,
    }
}

/// Semidirect product `N ⋊ H`. `action[h]` is the automorphism of `N`
/// assigned to `h`, as an image list; the family must be a homomorphism
/// `H → Aut(N)`, i.e. `action[h1·h2] = action[h1] ∘ action[h2]` with the
/// right map applied first. Element `(x, h)` has index `x + |N|·h` and
/// `(x1,h1)·(x2,h2) = (x1·action[h1](x2), h1·h2)`.
pub fn semidirect(n_grp: &FiniteGroup, h_grp: &FiniteGroup, action: &[Vec<usize>]) -> Result<FiniteGroup> {
    let (nn, nh) = (n_grp.order(), h_grp.order());
    if action.len() != nh {
        return Err(Error::BadAction(format!(
            "need {nh} automorphisms, got {}",
            action.len()
        )));
    }
    for (h, a) in action.iter().enumerate() {
        if a.len() != nn {
            return Err(Error::BadAction(format!("map {h} has wrong length")));
        }
        let mut seen = vec![false; nn];
        for &y in a {
            if y >= nn || seen[y] {
                return Err(Error::BadAction(format!("map {h} is not a bijection")));
            }
            seen[y] = true;
        }
        for x in 0..nn {
            for y in 0..nn {
                if a[n_grp.mul(x, y)] != n_grp.mul(a[x], a[y]) {
                    return Err(Error::BadAction(format!("map {h} is not multiplicative")));
                }
            }
        }
    }
    for h1 in 0..nh {
        for h2 in 0..nh {
            let h12 = h_grp.mul(h1, h2);
            for x in 0..nn {
                if action[h12][x] != action[h1][action[h2][x]] {
                    return Err(Error::BadAction(
                        "family is not a homomorphism into Aut(N)".into(),
                    ));
                }
            }
        }
    }
    let n = nn * nh;
    let mut mul = vec![0; n * n];
    for x1 in 0..nn {
        for h1 in 0..nh {
            for x2 in 0..nn {
                for h2 in 0..nh {
                    mul[(x1 + nn * h1) * n + (x2 + nn * h2)] =
                        n_grp.mul(x1, action[h1][x2]) + nn * h_grp.mul(h1, h2);
                }
            }
        }
    }
    FiniteGroup::from_mul_table(n, mul)
}

/// Frobenius-type group `E_{p^k} : C_m` with the cyclic part acting as
/// multiplication by a fixed element of order `m` in `GF(p^k)*`. Elements of
/// the field part keep the `elementary_abelian` indexing.
pub fn frobenius_field(p: usize, k: u32, m: usize) -> Result<FiniteGroup> {
    let q = (p as u64).pow(k);
    if m == 0 || (q - 1) % m as u64 != 0 {
        return Err(Error::Parameter(format!(
            "{m} does not divide {}^{k} - 1",
            p
        )));
    }
    let field = Field::new(q)?;
    let zeta = field.element_of_order(m as u64)?;
    let e = elementary_abelian(p, k);
    let c = cyclic(m);
    let mut action = Vec::with_capacity(m);
    let mut mult: Vec<usize> = (0..q).map(|x| x as usize).collect();
    for _ in 0..m {
        action.push(mult.clone());
        mult = mult
            .iter()
            .map(|&x| field.mul(x as u64, zeta) as usize)
            .collect();
    }
    // action[j] = multiplication by zeta^j; a homomorphism C_m → Aut(E).
    Ok(semidirect(&e, &c, &action)?.with_label(format!("E{}:C{m}", q)))
}

/// `PSL(2, q)` for a prime power `q ≤ 13`, built from unimodular 2×2
/// matrices over `GF(q)` modulo the center. The identity is element 0;
/// the remaining classes `{M, -M}` are sorted by their lexicographically
/// smaller flattened representative.
pub fn psl2(q: usize) -> Result<FiniteGroup> {
    if ff::prime_power(q as u64).is_none() || q > 13 {
        return Err(Error::Parameter(format!(
            "psl2 wants a prime power q ≤ 13, got {q}"
        )));
    }
    let f = Field::new(q as u64)?;
    let q64 = q as u64;
    let canon = |m: [u64; 4]| -> [u64; 4] {
        let neg = [f.neg(m[0]), f.neg(m[1]), f.neg(m[2]), f.neg(m[3])];
        if neg < m {
            neg
        } else {
            m
        }
    };
    let mut reps: Vec<[u64; 4]> = Vec::new();
    for a in 0..q64 {
        for b in 0..q64 {
            for c in 0..q64 {
                for d in 0..q64 {
                    if f.sub(f.mul(a, d), f.mul(b, c)) == 1 {
                        let m = canon([a, b, c, d]);
                        if m == [a, b, c, d] {
                            reps.push(m);
                        }
                    }
                }
            }
        }
    }
    reps.sort_unstable();
    let id = canon([1, 0, 0, 1]);
    let id_pos = reps.iter().position(|&m| m == id).unwrap();
    reps.swap(0, id_pos);
    // Keep the rest sorted after moving the identity to the front.
    reps[1..].sort_unstable();
    let index: HashMap<[u64; 4], usize> =
        reps.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let n = reps.len();
    let mut mul = vec![0; n * n];
    for (i, x) in reps.iter().enumerate() {
        for (j, y) in reps.iter().enumerate() {
            let prod = [
                f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])),
                f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
                f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])),
                f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3])),
            ];
            mul[i * n + j] = index[&canon(prod)];
        }
    }
    Ok(FiniteGroup::from_mul_table(n, mul)?.with_label(format!("PSL(2,{q})")))
}

/// Symmetric group on `n` letters as a table group (small `n` only).
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::from_cycles(n, &[vec![0, 1]])?);
    }
    if n >= 3 {
        gens.push(Perm::from_cycles(n, &[(0..n).collect()])?);
    }
    let pg = PermGroup::new(n.max(1), gens)?;
    let mut fact = 1usize;
    for i in 2..=n {
        fact *= i;
    }
    Ok(FiniteGroup::from_perm_group(&pg, fact + 1)?.with_label(format!("S{n}")))
}

/// Alternating group on `n` letters as a table group (small `n` only).
pub fn alternating(n: usize) -> Result<FiniteGroup> {
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(Perm::from_cycles(n, &[vec![0, 1, 2]])?);
    }
    if n >= 4 {
        if n % 2 == 1 {
            gens.push(Perm::from_cycles(n, &[(0..n).collect()])?);
        } else {
            gens.push(Perm::from_cycles(n, &[(1..n).collect()])?);
        }
    }
    let pg = PermGroup::new(n.max(1), gens)?;
    let mut fact = 1usize;
    for i in 2..=n {
        fact *= i;
    }
    Ok(FiniteGroup::from_perm_group(&pg, fact / 2 + 1)?.with_label(format!("A{n}")))
}

// ---------------------------------------------------------------------------
// Homomorphisms, isomorphism, automorphisms
// ---------------------------------------------------------------------------

/// A homomorphism between table groups, stored as the full image list.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub image: Vec<usize>,
}

impl GroupHom {
    pub fn is_valid(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        if self.image.len() != source.order() || self.image[0] != 0 {
            return false;
        }
        if self.image.iter().any(|&y| y >= target.order()) {
            return false;
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if self.image[source.mul(a, b)] != target.mul(self.image[a], self.image[b]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.image.iter().all(|&y| seen.insert(y))
    }
}

/// Isomorphism test by generator-image backtracking, pruned by element-order
/// statistics and class-size multisets. Returns a witness when found;
/// exhaustion of the search is an absence proof at these orders.
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupHom> {
    if a.order() != b.order() {
        return None;
    }
    if a.order_profile() != b.order_profile() {
        return None;
    }
    let class_sizes = |g: &FiniteGroup| {
        let mut s: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        s.sort_unstable();
        s
    };
    if class_sizes(a) != class_sizes(b) {
        return None;
    }
    let gens = a.generating_set();
    let mut images = vec![usize::MAX; gens.len()];
    if extend_iso(a, b, &gens, &mut images, 0, &mut |_| true) {
        let hom = hom_from_generator_images(a, b, &gens, &images)?;
        Some(hom)
    } else {
        None
    }
}

/// All automorphisms of `g` as permutations of its element indices, in a
/// deterministic order (sorted image lists).
pub fn automorphisms(g: &FiniteGroup) -> Vec<Perm> {
    let gens = g.generating_set();
    let mut images = vec![usize::MAX; gens.len()];
    let mut found: Vec<Perm> = Vec::new();
    extend_iso(g, g, &gens, &mut images, 0, &mut |hom| {
        found.push(Perm::from_images(hom.image.clone()).unwrap());
        false // keep searching
    });
    found.sort();
    found
}

/// Searches for a monomorphism of `a` into `b` (equal orders not required).
pub fn embeds_into(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupHom> {
    if b.order() % a.order() != 0 {
        return None;
    }
    let gens = a.generating_set();
    let mut images = vec![usize::MAX; gens.len()];
    if extend_iso(a, b, &gens, &mut images, 0, &mut |_| true) {
        hom_from_generator_images(a, b, &gens, &images)
    } else {
        None
    }
}

/// Depth-first assignment of generator images. At each leaf the word-built
/// hom is checked for well-definedness and injectivity; `on_found` decides
/// whether to stop (`true`) or collect and continue (`false`).
fn extend_iso(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    images: &mut [usize],
    level: usize,
    on_found: &mut dyn FnMut(&GroupHom) -> bool,
) -> bool {
    if level == gens.len() {
        if let Some(hom) = hom_from_generator_images(a, b, gens, images) {
            return on_found(&hom);
        }
        return false;
    }
    let want_order = a.element_order(gens[level]);
    for cand in 0..b.order() {
        if b.element_order(cand) != want_order {
            continue;
        }
        images[level] = cand;
        // Quick partial check: the hom must already be consistent on the
        // subgroup generated so far.
        if hom_from_generator_images_partial(a, b, &gens[..=level], &images[..=level]).is_some()
            && extend_iso(a, b, gens, images, level + 1, on_found)
        {
            return true;
        }
    }
    images[level] = usize::MAX;
    false
}

/// Builds the image of every element from generator images by BFS over
/// words, failing on any inconsistency; the result is verified injective and
/// multiplicative before being returned.
fn hom_from_generator_images(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<GroupHom> {
    let full = build_word_images(a, b, gens, images, true)?;
    let hom = GroupHom { image: full };
    if hom.is_injective() {
        Some(hom)
    } else {
        None
    }
}

fn hom_from_generator_images_partial(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    build_word_images(a, b, gens, images, false)
}

/// BFS closure of generator images; `require_total` additionally demands the
/// generators span all of `a`. Consistency of `f(x·g) = f(x)·f(g)` is
/// enforced on every (element, generator) edge, which already implies full
/// multiplicativity on the generated subgroup by induction on word length.
fn build_word_images(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    require_total: bool,
) -> Option<Vec<usize>> {
    let n = a.order();
    let mut image = vec![usize::MAX; n];
    image[0] = 0;
    let mut frontier = vec![0usize];
    let mut reached = 1usize;
    while let Some(x) = frontier.pop() {
        for (g, &gi) in gens.iter().zip(images.iter()) {
            let y = a.mul(x, *g);
            let yi = b.mul(image[x], gi);
            if image[y] == usize::MAX {
                image[y] = yi;
                frontier.push(y);
                reached += 1;
            } else if image[y] != yi {
                return None;
            }
        }
    }
    if require_total && reached != n {
        return None;
    }
    Some(image)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let c12 = cyclic(12);
        assert_eq!(c12.order(), 12);
        assert!(c12.is_abelian());
        assert_eq!(c12.element_order(1), 12);
    }

    #[test]
    fn generalized_dihedral_of_cyclic_is_dihedral() {
        let d14 = generalized_dihedral(&cyclic(7)).unwrap();
        let also = dihedral(14).unwrap();
        assert!(is_isomorphic(&d14, &also).is_some());
        assert_eq!(d14.order(), 14);
    }

    #[test]
    fn generalized_dihedral_of_e9() {
        let g = generalized_dihedral(&elementary_abelian(3, 2)).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn dihedral_center_sizes() {
        // n = 1, 2 are the degenerate abelian cases C2 and E4.
        for n in 3..=8 {
            let d = dihedral(2 * n).unwrap();
            let z = d.center().len();
            if n % 2 == 1 {
                assert_eq!(z, 1, "odd n = {n}");
            } else {
                assert_eq!(z, 2, "even n = {n}");
            }
        }
    }

    #[test]
    fn g16_structure() {
        let g = g16();
        assert_eq!(g.order(), 16);
        assert_eq!(g.exponent(), 4);
        // Center is ⟨a⟩, cyclic of order 4.
        assert_eq!(g.center(), vec![0, 1, 2, 3]);
        assert!(!g.is_abelian());
    }

    #[test]
    fn modular_27_has_order_9_element() {
        let m27 = modular_m(3, 3).unwrap();
        assert_eq!(m27.order(), 27);
        assert!(m27.order_profile().contains(&9));
        assert!(!m27.is_abelian());
    }

    #[test]
    fn quaternion_unique_involution() {
        let q8 = quaternion_generalized(8).unwrap();
        assert_eq!(q8.order(), 8);
        let involutions = (1..8).filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        let q16 = quaternion_generalized(16).unwrap();
        assert_eq!(q16.order(), 16);
        let involutions = (1..16).filter(|&x| q16.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn semidihedral_16() {
        let sd = semidihedral(16).unwrap();
        assert_eq!(sd.order(), 16);
        assert!(!sd.is_abelian());
        // SD16 has elements of order 8 and more than one involution.
        assert!(sd.order_profile().contains(&8));
        assert!((1..16).filter(|&x| sd.element_order(x) == 2).count() > 1);
    }

    #[test]
    fn semidirect_c3_c2_is_s3() {
        let c3 = cyclic(3);
        let c2 = cyclic(2);
        let inversion = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let s3 = semidirect(&c3, &c2, &inversion).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(is_isomorphic(&s3, &dihedral(6).unwrap()).is_some());
    }

    #[test]
    fn frobenius_20_trivial_center() {
        // C5 : C4 with a full order-4 automorphism.
        let f20 = frobenius_field(5, 1, 4).unwrap();
        assert_eq!(f20.order(), 20);
        assert_eq!(f20.center(), vec![0]);
    }

    #[test]
    fn direct_product_abelian() {
        let g = direct_product(&elementary_abelian(3, 2), &cyclic(2));
        assert_eq!(g.order(), 18);
        assert!(g.is_abelian());
    }

    #[test]
    fn frobenius_field_cases() {
        let g56 = frobenius_field(2, 3, 7).unwrap();
        assert_eq!(g56.order(), 56);
        // Sylow 2-subgroup is the elementary abelian field part.
        let sylow: Vec<usize> = (0..8).collect();
        assert!(g56.is_subgroup(&sylow));
        assert!(sylow.iter().all(|&x| x == 0 || g56.element_order(x) == 2));

        let g48 = frobenius_field(2, 4, 3).unwrap();
        assert_eq!(g48.order(), 48);

        let g992 = frobenius_field(2, 5, 31).unwrap();
        assert_eq!(g992.order(), 992);
        // The C31 generator centralizes nothing in E32.
        let c = 32; // element (0, 1): the generator of the cyclic part
        let fixed = (1..32).filter(|&v| g992.conj(v, c) == v).count();
        assert_eq!(fixed, 0);
    }

    #[test]
    fn frobenius_has_normal_field_part_with_cyclic_complement() {
        for (p, k, m) in [(2, 3, 7), (2, 4, 3), (2, 4, 5), (3, 2, 4)] {
            let g = frobenius_field(p, k, m).unwrap();
            let pk = (p as usize).pow(k);
            let field_part: Vec<usize> = (0..pk).collect();
            assert!(g.is_subgroup(&field_part));
            // Normality.
            for &x in &field_part {
                for y in 0..g.order() {
                    assert!(g.conj(x, y) < pk);
                }
            }
            // Cyclic complement of order m.
            let q = g.quotient(&field_part).unwrap();
            assert!(is_isomorphic(&q, &cyclic(m)).is_some());
        }
    }

    #[test]
    fn psl2_small() {
        let g6 = psl2(2).unwrap();
        assert_eq!(g6.order(), 6);
        assert!(is_isomorphic(&g6, &dihedral(6).unwrap()).is_some());

        let g12 = psl2(3).unwrap();
        assert_eq!(g12.order(), 12);
        assert!(is_isomorphic(&g12, &alternating(4).unwrap()).is_some());

        let g168 = psl2(7).unwrap();
        assert_eq!(g168.order(), 168);
    }

    #[test]
    fn psl2_7_class_sizes() {
        let g = psl2(7).unwrap();
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 21, 24, 24, 42, 56]);
    }

    #[test]
    fn conjugacy_classes_basics() {
        let s3 = symmetric(3).unwrap();
        let mut sizes: Vec<usize> = s3.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        let abelian = cyclic(6);
        assert!(abelian
            .conjugacy_classes()
            .iter()
            .all(|c| c.len() == 1));
    }

    #[test]
    fn class_sizes_divide_group_order() {
        for g in [symmetric(4).unwrap(), quaternion_generalized(8).unwrap(), g16()] {
            let classes = g.conjugacy_classes();
            let total: usize = classes.iter().map(|c| c.len()).sum();
            assert_eq!(total, g.order());
            assert!(classes.iter().all(|c| g.order() % c.len() == 0));
            assert_eq!(classes[0], vec![0]);
        }
    }

    #[test]
    fn quotient_d8_by_center() {
        let d8 = dihedral(8).unwrap();
        let z = d8.center();
        assert_eq!(z.len(), 2);
        let q = d8.quotient(&z).unwrap();
        assert!(is_isomorphic(&q, &elementary_abelian(2, 2)).is_some());
    }

    #[test]
    fn quotient_requires_normality() {
        let s3 = symmetric(3).unwrap();
        // A subgroup of order 2 in S3 is not normal.
        let invol = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let h = s3.subgroup_generated(&[invol]);
        assert_eq!(h.len(), 2);
        assert!(matches!(s3.quotient(&h), Err(Error::NotNormal)));
    }

    #[test]
    fn iso_and_non_iso() {
        assert!(is_isomorphic(&cyclic(4), &elementary_abelian(2, 2)).is_none());
        let a = generalized_dihedral(&cyclic(3)).unwrap();
        let b = psl2(2).unwrap();
        let wit = is_isomorphic(&a, &b).unwrap();
        assert!(wit.is_valid(&a, &b));
        assert!(wit.is_injective());
    }

    #[test]
    fn iso_reflexive_symmetric_on_test_set() {
        let set = vec![
            cyclic(8),
            dihedral(8).unwrap(),
            quaternion_generalized(8).unwrap(),
            g16(),
            modular_m(2, 4).unwrap(),
            semidihedral(16).unwrap(),
            direct_product(&cyclic(2), &dihedral(8).unwrap()),
            symmetric(4).unwrap(),
            direct_product(&cyclic(3), &dihedral(8).unwrap()),
            modular_m(3, 3).unwrap(),
            dihedral(32).unwrap(),
            quaternion_generalized(32).unwrap(),
            semidihedral(32).unwrap(),
            modular_m(2, 5).unwrap(),
            elementary_abelian(2, 5),
        ];
        for g in &set {
            assert!(is_isomorphic(g, g).is_some());
        }
        for a in &set {
            for b in &set {
                assert_eq!(
                    is_isomorphic(a, b).is_some(),
                    is_isomorphic(b, a).is_some()
                );
            }
        }
    }

    #[test]
    fn regular_representations_commute() {
        let d8 = dihedral(8).unwrap();
        let right = d8.regular_representation(Side::Right);
        let left = d8.regular_representation(Side::Left);
        assert_eq!(right.order_u64(), 8);
        assert_eq!(left.order_u64(), 8);
        for g in 0..8 {
            for h in 0..8 {
                let rg = d8.translation(g, Side::Right);
                let lh = d8.translation(h, Side::Left);
                assert_eq!(
                    rg.compose(&lh).unwrap(),
                    lh.compose(&rg).unwrap(),
                    "left and right translations must commute"
                );
            }
        }
    }

    #[test]
    fn coset_action_cases() {
        let g = symmetric(4).unwrap();
        // H = {e}: regular representation.
        let act = g.coset_action(&[0]).unwrap();
        assert_eq!(act.group.degree(), 24);
        assert!(act.group.is_regular());
        // H = G: trivial action on one point.
        let all: Vec<usize> = (0..24).collect();
        let act = g.coset_action(&all).unwrap();
        assert_eq!(act.group.degree(), 1);

        let bad = g.coset_action(&[0, 1]);
        assert!(bad.is_err() || g.is_subgroup(&[0, 1]));
    }

    #[test]
    fn coset_action_a5_on_involution_cosets() {
        let a5 = alternating(5).unwrap();
        assert_eq!(a5.order(), 60);
        let invol = (1..60).find(|&x| a5.element_order(x) == 2).unwrap();
        let h = a5.subgroup_generated(&[invol]);
        let act = a5.coset_action(&h).unwrap();
        assert_eq!(act.group.degree(), 30);
        assert!(act.group.is_transitive());
        assert_eq!(act.group.order_u64(), 60);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&cyclic(5)).len(), 4);
        assert_eq!(automorphisms(&cyclic(6)).len(), 2);
        assert_eq!(automorphisms(&elementary_abelian(2, 2)).len(), 6);
        assert_eq!(automorphisms(&symmetric(3).unwrap()).len(), 6);
        // Aut(E8) = GL(3,2) of order 168.
        assert_eq!(automorphisms(&elementary_abelian(2, 3)).len(), 168);
        assert_eq!(automorphisms(&quaternion_generalized(8).unwrap()).len(), 24);
    }

    #[test]
    fn embeds_into_finds_subgroups() {
        let a4 = alternating(4).unwrap();
        let s4 = symmetric(4).unwrap();
        assert!(embeds_into(&a4, &s4).is_some());
        assert!(embeds_into(&cyclic(5), &s4).is_none());
    }

    #[test]
    fn stabilizer_orbit_sizes_match_class_sizes_for_conjugation_setting() {
        // G_right together with all conjugations: orbits of the stabilizer of
        // the identity are the conjugacy classes.
        let d10 = dihedral(10).unwrap();
        let mut gens = d10.regular_representation(Side::Right).generators().to_vec();
        for g in d10.generating_set() {
            gens.push(d10.conjugation_perm(g));
        }
        let gamma = PermGroup::new(10, gens).unwrap();
        let mut orbit_sizes: Vec<usize> = gamma
            .suborbits(0)
            .iter()
            .map(|o| o.len())
            .collect();
        orbit_sizes.sort_unstable();
        let mut class_sizes: Vec<usize> = d10
            .conjugacy_classes()
            .iter()
            .map(|c| c.len())
            .collect();
        class_sizes.sort_unstable();
        assert_eq!(orbit_sizes, class_sizes);
        assert_eq!(class_sizes, vec![1, 2, 2, 5]);
    }
}
