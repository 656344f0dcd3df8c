//! S-rings over finite groups and the correspondence with Cayley schemes.
//!
//! An S-ring is given by a partition of the group with `{e}` as a class,
//! closed under inversion setwise, whose spanned module is closed under
//! multiplication: the product of two class sums decomposes with constant
//! coefficient on every class. Those coefficients are the structure
//! constants, stored densely.
//!
//! The Cayley-graph convention is `X = {g : (g, e) ∈ R}`, which together with
//! invariance under right translations forces `color(x, y)` to be the class
//! of `x·y^{-1}`; the round-trip tests pin this down.

use crate::autsearch::{self, SearchOptions};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Side};
use crate::perm::PermGroup;
use crate::scheme::{orbital_scheme, AssociationScheme};

/// An S-ring over a table group.
#[derive(Clone)]
pub struct SRing {
    group: FiniteGroup,
    /// Basic sets, each sorted, ordered by smallest element; class 0 is `{e}`.
    classes: Vec<Vec<usize>>,
    class_of: Vec<u32>,
    /// Structure constants `c[(i·r + j)·r + k]`: coefficient of class `k` in
    /// the product of the class sums of `i` and `j`.
    constants: Vec<u64>,
}

impl std::fmt::Debug for SRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SRing(order={}, rank={})",
            self.group.order(),
            self.rank()
        )
    }
}

impl SRing {
    /// Builds an S-ring from a partition of the group, validating all axioms.
    pub fn from_partition(group: &FiniteGroup, classes: &[Vec<usize>]) -> Result<SRing> {
        let n = group.order();
        let mut class_of = vec![u32::MAX; n];
        let mut sorted: Vec<Vec<usize>> = classes.to_vec();
        for class in sorted.iter_mut() {
            class.sort_unstable();
            class.dedup();
        }
        sorted.retain(|c| !c.is_empty());
        sorted.sort_by_key(|c| c[0]);
        for (i, class) in sorted.iter().enumerate() {
            for &x in class {
                if x >= n || class_of[x] != u32::MAX {
                    return Err(Error::NotAnSRing(format!(
                        "element {x} out of range or covered twice"
                    )));
                }
                class_of[x] = i as u32;
            }
        }
        if class_of.iter().any(|&c| c == u32::MAX) {
            return Err(Error::NotAnSRing(
                "partition does not cover the group".into(),
            ));
        }
        if sorted[0] != vec![0] {
            return Err(Error::NotAnSRing("identity is not a singleton class".into()));
        }
        // Inverse closure: the inverse of a class is a class.
        for class in &sorted {
            let mut inv: Vec<usize> = class.iter().map(|&x| group.inv(x)).collect();
            inv.sort_unstable();
            if !sorted.contains(&inv) {
                return Err(Error::NotAnSRing(format!(
                    "inverse of class {class:?} is not a class"
                )));
            }
        }
        let constants = compute_constants(group, &sorted)?;
        Ok(SRing {
            group: group.clone(),
            classes: sorted,
            class_of,
            constants,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> u32 {
        self.class_of[x]
    }

    /// Coefficient of class `k` in the product of class sums `i · j`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u64 {
        let r = self.classes.len();
        self.constants[(i * r + j) * r + k]
    }

    /// The index of the class that is the inverse of class `i`.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.class_of[self.group.inv(self.classes[i][0])] as usize
    }

    /// The partition as a canonical key: smallest class member per element.
    pub fn partition_key(&self) -> Vec<usize> {
        let mut key = vec![0usize; self.group.order()];
        for class in &self.classes {
            let min = class[0];
            for &x in class {
                key[x] = min;
            }
        }
        key
    }

    /// The Cayley scheme of the S-ring: `color(x, y)` is the class of `x·y^{-1}`.
    pub fn to_cayley_scheme(&self) -> AssociationScheme {
        let n = self.group.order();
        let mut color = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                color[x * n + y] = self.class_of[self.group.mul(x, self.group.inv(y))];
            }
        }
        AssociationScheme::from_color_matrix(n, color)
            .expect("a valid S-ring always yields a valid Cayley scheme")
    }
}

/// Structure constants with the module-closure check: every product of two
/// class sums must have constant coefficient on each class.
fn compute_constants(group: &FiniteGroup, classes: &[Vec<usize>]) -> Result<Vec<u64>> {
    let r = classes.len();
    let n = group.order();
    let mut constants = vec![0u64; r * r * r];
    let mut coeff = vec![0u64; n];
    for i in 0..r {
        for j in 0..r {
            coeff.iter_mut().for_each(|c| *c = 0);
            for &x in &classes[i] {
                for &y in &classes[j] {
                    coeff[group.mul(x, y)] += 1;
                }
            }
            for (k, class) in classes.iter().enumerate() {
                let c = coeff[class[0]];
                for &z in class {
                    if coeff[z] != c {
                        return Err(Error::NotAnSRing(format!(
                            "product of classes {i} and {j} is not constant on class {k}"
                        )));
                    }
                }
                constants[(i * r + j) * r + k] = c;
            }
        }
    }
    Ok(constants)
}

/// Checks a partition for the S-ring axioms, returning the validated S-ring
/// or the first violation.
pub fn validate_sring(group: &FiniteGroup, classes: &[Vec<usize>]) -> Result<SRing> {
    SRing::from_partition(group, classes)
}

/// The S-ring of a permutation group `Γ ⊇ G_right` acting on the group:
/// basic sets are the orbits of the stabilizer of the identity.
pub fn sring_from_action(gamma: &PermGroup, group: &FiniteGroup) -> Result<SRing> {
    if gamma.degree() != group.order() {
        return Err(Error::DegreeMismatch(gamma.degree(), group.order()));
    }
    for g in group.generating_set() {
        if !gamma.contains(&group.translation(g, Side::Right)) {
            return Err(Error::MissingRegularGroup);
        }
    }
    let classes = gamma.suborbits(0);
    SRing::from_partition(group, &classes)
}

/// Recovers the S-ring from a Cayley scheme: basic sets are read off the
/// column of the identity. The scheme must be invariant under right
/// translations.
pub fn from_cayley_scheme(scheme: &AssociationScheme, group: &FiniteGroup) -> Result<SRing> {
    let n = group.order();
    if scheme.size() != n {
        return Err(Error::DegreeMismatch(scheme.size(), n));
    }
    for g in group.generating_set() {
        let t = group.translation(g, Side::Right);
        for x in 0..n {
            for y in 0..n {
                if scheme.color(t.apply(x), t.apply(y)) != scheme.color(x, y) {
                    return Err(Error::Incompatible(
                        "scheme is not invariant under right translations".into(),
                    ));
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); scheme.rank()];
    for g in 0..n {
        classes[scheme.color(g, 0) as usize].push(g);
    }
    SRing::from_partition(group, &classes)
}

/// Outcome of the schurity decision, with a machine-checkable certificate.
pub enum SchurityVerdict {
    /// The full automorphism group of the Cayley scheme witnesses schurity:
    /// its identity-stabilizer orbits are exactly the basic sets.
    Schurian { witness: PermGroup },
    /// A color of the scheme splits into several orbits of `aut`, so the
    /// scheme differs from the orbital scheme of its automorphism group.
    NonSchurian {
        aut: PermGroup,
        /// Two pairs with the same scheme color in different `aut`-orbitals.
        split: ((usize, usize), (usize, usize)),
    },
}

impl SchurityVerdict {
    pub fn is_schurian(&self) -> bool {
        matches!(self, SchurityVerdict::Schurian { .. })
    }

    pub fn aut(&self) -> &PermGroup {
        match self {
            SchurityVerdict::Schurian { witness } => witness,
            SchurityVerdict::NonSchurian { aut, .. } => aut,
        }
    }
}

/// Decides schurity through the Galois correspondence: the S-ring is schurian
/// exactly when its Cayley scheme equals the orbital scheme of its full
/// automorphism group.
pub fn is_schurian(sring: &SRing, opts: &SearchOptions) -> Result<SchurityVerdict> {
    let scheme = sring.to_cayley_scheme();
    let aut = autsearch::aut_scheme_with(&scheme, opts)?.0;
    let closed = orbital_scheme(&aut)?;
    // The scheme is always a fusion of inv(aut); equality holds iff ranks agree.
    debug_assert!(scheme.is_fusion_of(&closed));
    if closed.rank() == scheme.rank() {
        Ok(SchurityVerdict::Schurian { witness: aut })
    } else {
        let n = scheme.size();
        let split = (0..n * n)
            .flat_map(|s| (s + 1..n * n).map(move |t| (s, t)))
            .find(|&(s, t)| {
                scheme.color(s / n, s % n) == scheme.color(t / n, t % n)
                    && closed.color(s / n, s % n) != closed.color(t / n, t % n)
            })
            .map(|(s, t)| ((s / n, s % n), (t / n, t % n)))
            .expect("rank difference implies a split color");
        Ok(SchurityVerdict::NonSchurian { aut, split })
    }
}

/// The rank-4 S-ring of a difference set `D` in an abelian group `H` over the
/// generalized dihedral group of `H`: classes `{e}`, the nonidentity part of
/// `H`, `Dg`, and `(H \ D)g`. The group must come from
/// [`crate::groups::generalized_dihedral`] so the element indexing matches.
pub fn difference_set_sring(gdih: &FiniteGroup, h_order: usize, d: &[usize]) -> Result<SRing> {
    let n = h_order;
    if gdih.order() != 2 * n {
        return Err(Error::Incompatible(format!(
            "group of order {} cannot be the generalized dihedral group of an order-{n} group",
            gdih.order()
        )));
    }
    if d.is_empty() || d.len() >= n {
        return Err(Error::NotADifferenceSet(
            "difference set must be proper and nonempty".into(),
        ));
    }
    let in_d = {
        let mut v = vec![false; n];
        for &x in d {
            if x >= n {
                return Err(Error::Parameter(format!(
                    "element {x} outside the base group"
                )));
            }
            v[x] = true;
        }
        v
    };
    let a: Vec<usize> = (1..n).collect();
    let x: Vec<usize> = (0..n).filter(|&i| in_d[i]).map(|i| n + i).collect();
    let y: Vec<usize> = (0..n).filter(|&i| !in_d[i]).map(|i| n + i).collect();
    SRing::from_partition(gdih, &[vec![0], a, x, y])
}

/// Wreath S-ring over `g` from an S-ring on a subgroup and a scheme on the
/// right cosets of that subgroup: inside a coset the colors come from the
/// bottom S-ring, between cosets from the top scheme. The result is read back
/// off the combined coloring, so any incompatibility (for instance a top
/// scheme that is not invariant under the coset action) surfaces as an error.
pub fn wreath_sring(
    g: &FiniteGroup,
    subgroup: &[usize],
    bottom: &SRing,
    top: &AssociationScheme,
) -> Result<SRing> {
    let (sub_group, sub_elems) = g.subgroup_as_group(subgroup)?;
    if bottom.group() != &sub_group {
        return Err(Error::Incompatible(
            "bottom S-ring group table does not match the subgroup".into(),
        ));
    }
    let action = g.coset_action(subgroup)?;
    if top.size() != action.group.degree() {
        return Err(Error::Incompatible(format!(
            "top scheme on {} points, but there are {} cosets",
            top.size(),
            action.group.degree()
        )));
    }
    let n = g.order();
    let pos_in_sub: std::collections::HashMap<usize, usize> =
        sub_elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    // x = h·t_b with t_b the smallest member of the coset of x.
    let decompose = |x: usize| -> (usize, usize) {
        let b = action.coset_of[x];
        let rep = action.reps[b];
        let h = g.mul(x, g.inv(rep));
        (pos_in_sub[&h], b)
    };
    let rh = bottom.rank() as u32;
    let mut color = vec![0u32; n * n];
    for p in 0..n {
        let (hp, bp) = decompose(p);
        for q in 0..n {
            let (hq, bq) = decompose(q);
            color[p * n + q] = if bp == bq {
                bottom.class_of(sub_group.mul(hp, sub_group.inv(hq)))
            } else {
                rh + top.color(bp, bq) - 1
            };
        }
    }
    let scheme = AssociationScheme::from_color_matrix(n, color)
        .map_err(|e| Error::Incompatible(format!("wreath coloring is not a scheme: {e}")))?;
    from_cayley_scheme(&scheme, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::perm::Perm;

    fn group_ring_partition(g: &FiniteGroup) -> Vec<Vec<usize>> {
        (0..g.order()).map(|x| vec![x]).collect()
    }

    #[test]
    fn group_ring_is_an_sring() {
        for g in [groups::cyclic(6), groups::dihedral(8).unwrap(), groups::g16()] {
            let sring = SRing::from_partition(&g, &group_ring_partition(&g)).unwrap();
            assert_eq!(sring.rank(), g.order());
        }
    }

    #[test]
    fn rank2_is_an_sring() {
        let g = groups::cyclic(5);
        let sring = SRing::from_partition(&g, &[vec![0], (1..5).collect()]).unwrap();
        assert_eq!(sring.rank(), 2);
    }

    #[test]
    fn inverse_closure_violation() {
        // {e}, {x}, {x^2, x^3} over C4: inverse of {x} is {x^3}, not a class.
        let c4 = groups::cyclic(4);
        let err = SRing::from_partition(&c4, &[vec![0], vec![1], vec![2, 3]]);
        assert!(matches!(err, Err(Error::NotAnSRing(_))));
    }

    #[test]
    fn c4_sring_with_central_involution() {
        // {e}, {x^2}, {x, x^3} is closed: (x + x^3)^2 = 2e + 2x^2.
        let c4 = groups::cyclic(4);
        let sring = SRing::from_partition(&c4, &[vec![0], vec![2], vec![1, 3]]).unwrap();
        assert_eq!(sring.rank(), 3);
        // Classes sorted by smallest member: {e}, {x, x^3}, {x^2}.
        assert_eq!(sring.classes()[1], vec![1, 3]);
        assert_eq!(sring.constant(1, 1, 0), 2);
        assert_eq!(sring.constant(1, 1, 2), 2);
    }

    #[test]
    fn sring_sum_rule() {
        // Σ_k c^k_{ij} |class k| = |class i| · |class j|.
        let g = groups::dihedral(10).unwrap();
        let classes = g.conjugacy_classes();
        let sring = SRing::from_partition(&g, &classes).unwrap();
        let r = sring.rank();
        for i in 0..r {
            for j in 0..r {
                let total: u64 = (0..r)
                    .map(|k| sring.constant(i, j, k) * sring.classes()[k].len() as u64)
                    .sum();
                assert_eq!(
                    total,
                    (sring.classes()[i].len() * sring.classes()[j].len()) as u64
                );
            }
        }
    }

    #[test]
    fn identity_coefficient_is_class_size() {
        let g = groups::quaternion_generalized(8).unwrap();
        let sring = SRing::from_partition(&g, &g.conjugacy_classes()).unwrap();
        for i in 0..sring.rank() {
            let inv = sring.inverse_class(i);
            assert_eq!(sring.constant(i, inv, 0), sring.classes()[i].len() as u64);
        }
    }

    #[test]
    fn sring_from_action_group_ring_and_rank2() {
        let g = groups::cyclic(5);
        let right = g.regular_representation(Side::Right);
        let sring = sring_from_action(&right, &g).unwrap();
        assert_eq!(sring.rank(), 5);

        let mut gens = right.generators().to_vec();
        gens.push(Perm::from_cycles(5, &[vec![1, 2]]).unwrap());
        gens.push(Perm::from_cycles(5, &[vec![1, 2, 3, 4]]).unwrap());
        let sym = PermGroup::new(5, gens).unwrap();
        let sring = sring_from_action(&sym, &g).unwrap();
        assert_eq!(sring.rank(), 2);
    }

    #[test]
    fn sring_from_action_conjugation() {
        let g = groups::symmetric(3).unwrap();
        let mut gens = g.regular_representation(Side::Right).generators().to_vec();
        for x in g.generating_set() {
            gens.push(g.conjugation_perm(x));
        }
        let gamma = PermGroup::new(6, gens).unwrap();
        let sring = sring_from_action(&gamma, &g).unwrap();
        let mut sizes: Vec<usize> = sring.classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        let mut class_sizes: Vec<usize> =
            g.conjugacy_classes().iter().map(|c| c.len()).collect();
        class_sizes.sort_unstable();
        assert_eq!(sizes, class_sizes);
    }

    #[test]
    fn sring_from_action_requires_regular_subgroup() {
        let g = groups::cyclic(6);
        let c2 = PermGroup::new(
            6,
            vec![Perm::from_cycles(6, &[vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            sring_from_action(&c2, &g),
            Err(Error::MissingRegularGroup)
        ));
    }

    #[test]
    fn cayley_scheme_round_trip() {
        let groups_under_test = vec![
            groups::cyclic(8),
            groups::dihedral(8).unwrap(),
            groups::quaternion_generalized(8).unwrap(),
        ];
        for g in groups_under_test {
            for partition in [g.conjugacy_classes(), group_ring_partition(&g)] {
                let sring = SRing::from_partition(&g, &partition).unwrap();
                let scheme = sring.to_cayley_scheme();
                assert_eq!(scheme.rank(), sring.rank());
                let back = from_cayley_scheme(&scheme, &g).unwrap();
                assert_eq!(back.partition_key(), sring.partition_key());
            }
        }
    }

    #[test]
    fn from_cayley_scheme_rejects_foreign_schemes() {
        // The regular scheme of S3 is not invariant under the right
        // translations of C6, so it is not a Cayley scheme over C6.
        let s3 = groups::symmetric(3).unwrap();
        let scheme = SRing::from_partition(&s3, &group_ring_partition(&s3))
            .unwrap()
            .to_cayley_scheme();
        let c6 = groups::cyclic(6);
        assert!(matches!(
            from_cayley_scheme(&scheme, &c6),
            Err(Error::Incompatible(_))
        ));
    }

    #[test]
    fn group_ring_scheme_is_regular() {
        let g = groups::cyclic(6);
        let sring = SRing::from_partition(&g, &group_ring_partition(&g)).unwrap();
        let scheme = sring.to_cayley_scheme();
        assert_eq!(scheme.rank(), 6);
        assert!(scheme.valencies().iter().all(|&v| v == 1));
    }

    #[test]
    fn group_ring_is_schurian() {
        for g in [groups::cyclic(6), groups::symmetric(3).unwrap()] {
            let sring = SRing::from_partition(&g, &group_ring_partition(&g)).unwrap();
            let verdict = is_schurian(&sring, &SearchOptions::default()).unwrap();
            assert!(verdict.is_schurian());
        }
    }

    #[test]
    fn schurian_witness_replays() {
        let g = groups::dihedral(10).unwrap();
        let sring = SRing::from_partition(&g, &g.conjugacy_classes()).unwrap();
        let verdict = is_schurian(&sring, &SearchOptions::default()).unwrap();
        assert!(verdict.is_schurian());
        let witness = verdict.aut();
        let replay = sring_from_action(witness, &g).unwrap();
        assert_eq!(replay.partition_key(), sring.partition_key());
    }

    #[test]
    fn schurity_stable_under_relabeling() {
        let g = groups::cyclic(6);
        let sring =
            SRing::from_partition(&g, &[vec![0], vec![3], vec![1, 5], vec![2, 4]]).unwrap();
        let verdict = is_schurian(&sring, &SearchOptions::default()).unwrap();
        // x ↦ 5x mod 6 is an automorphism; the relabeled S-ring must agree.
        let relabeled: Vec<Vec<usize>> = sring
            .classes()
            .iter()
            .map(|c| c.iter().map(|&x| (5 * x) % 6).collect())
            .collect();
        let sring2 = SRing::from_partition(&g, &relabeled).unwrap();
        let verdict2 = is_schurian(&sring2, &SearchOptions::default()).unwrap();
        assert_eq!(verdict.is_schurian(), verdict2.is_schurian());
    }

    #[test]
    fn wreath_sring_rank_formula() {
        // Bottom: group ring of C2; top: rank-2 scheme on the 3 cosets of
        // ⟨3⟩ ≤ C6. Rank 2 + 2 - 1 = 3: classes {e}, {3}, {1,2,4,5}.
        let c6 = groups::cyclic(6);
        let sub = c6.subgroup_generated(&[3]);
        let (sub_group, _) = c6.subgroup_as_group(&sub).unwrap();
        let bottom = SRing::from_partition(&sub_group, &[vec![0], vec![1]]).unwrap();
        let top_color: Vec<u32> = (0..9).map(|t| if t / 3 == t % 3 { 0 } else { 1 }).collect();
        let top = AssociationScheme::from_color_matrix(3, top_color).unwrap();
        let w = wreath_sring(&c6, &sub, &bottom, &top).unwrap();
        assert_eq!(w.rank(), 3);
        assert_eq!(w.classes()[1], vec![1, 2, 4, 5]);
        assert_eq!(w.classes()[2], vec![3]);

        // Trivial top: the bottom S-ring comes back.
        let top1 = AssociationScheme::from_color_matrix(1, vec![0]).unwrap();
        let all: Vec<usize> = (0..6).collect();
        let (c6_as_sub, _) = c6.subgroup_as_group(&all).unwrap();
        let bottom_c6 =
            SRing::from_partition(&c6_as_sub, &[vec![0], vec![3], vec![1, 5], vec![2, 4]])
                .unwrap();
        let w1 = wreath_sring(&c6, &all, &bottom_c6, &top1).unwrap();
        assert_eq!(w1.rank(), 4);
        assert_eq!(w1.partition_key(), bottom_c6.partition_key());
    }
}
