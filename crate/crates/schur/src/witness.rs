//! Non-schurian scheme witnesses over small Frobenius groups and A5,
//! built from overgroups of the right regular representation, coset actions,
//! and normalizer steps, with a named fusion recipe for each case.
//!
//! Each construction produces an orbital scheme with a prescribed valency
//! pattern, merges colors along a fixed partition, and certifies
//! non-schurity by comparing the fused scheme with the orbital scheme of its
//! full automorphism group.

use num_bigint::BigUint;

use crate::autsearch::{self, SearchOptions};
use crate::error::{Error, Result};
use crate::groups::{self, FiniteGroup, Side};
use crate::perm::{Perm, PermGroup};
use crate::scheme::{
    label_colors_by_valency, orbital_scheme, AssociationScheme, ColorPartition, Discriminator,
};

/// Everything a fusion witness run produces, for reporting and tests.
pub struct WitnessReport {
    pub name: String,
    pub degree: usize,
    pub overgroup_order: BigUint,
    pub scheme_rank: usize,
    /// Valencies of the labeled colors, in recipe position order.
    pub pattern: Vec<u32>,
    /// Fusion applied, in recipe positions (1-based).
    pub merged_positions: Vec<Vec<usize>>,
    pub fused: AssociationScheme,
    pub fused_aut_order: BigUint,
    pub closed_rank: usize,
    pub non_schurian: bool,
}

impl WitnessReport {
    fn build(
        name: &str,
        gamma: &PermGroup,
        pattern: Vec<u32>,
        discriminators: &[Discriminator],
        merged_positions: Vec<Vec<usize>>,
        opts: &SearchOptions,
    ) -> Result<WitnessReport> {
        let scheme = orbital_scheme(gamma)?;
        let labels = label_colors_by_valency(&scheme, &pattern, discriminators)?;
        let mut classes: Vec<Vec<u32>> = merged_positions
            .iter()
            .map(|ps| ps.iter().map(|&p| labels[p - 1]).collect())
            .collect();
        let covered: std::collections::HashSet<usize> =
            merged_positions.iter().flatten().copied().collect();
        for p in 1..=pattern.len() {
            if !covered.contains(&p) {
                classes.push(vec![labels[p - 1]]);
            }
        }
        let partition = ColorPartition::new(classes);
        let fused = match scheme.fusion(&partition)? {
            crate::scheme::FusionOutcome::Scheme(s) => s,
            crate::scheme::FusionOutcome::NotAScheme(v) => {
                return Err(Error::NotAScheme(format!(
                    "{name}: prescribed fusion is not a scheme: {v}"
                )))
            }
        };
        let aut = autsearch::aut_scheme_with(&fused, opts)?.0;
        let closed_rank = aut.rank_on_pairs();
        Ok(WitnessReport {
            name: name.to_string(),
            degree: gamma.degree(),
            overgroup_order: gamma.order(),
            scheme_rank: scheme.rank(),
            pattern,
            merged_positions,
            fused_aut_order: aut.order(),
            closed_rank,
            non_schurian: closed_rank != fused.rank(),
            fused,
        })
    }
}

/// An overgroup of the right regular representation of `E8:C7` of order 672
/// and rank 8 on 56 points: the extension of `G_right` by an `A4` of group
/// automorphisms whose orbits on the involutions have sizes 1, 3, 3.
pub fn frobenius56_overgroup() -> Result<PermGroup> {
    let g = groups::frobenius_field(2, 3, 7)?;
    let auts = groups::automorphisms(&g);
    let s = find_a4_of_automorphisms(&auts).ok_or_else(|| {
        Error::Incompatible("no A4 of automorphisms found for E8:C7".into())
    })?;
    let mut gens = g.regular_representation(Side::Right).generators().to_vec();
    gens.extend(s);
    let gamma = PermGroup::new(g.order(), gens)?;
    if gamma.order_u64() != 672 || gamma.rank_on_pairs() != 8 {
        return Err(Error::Incompatible(format!(
            "expected an order-672 rank-8 overgroup, found order {} rank {}",
            gamma.order(),
            gamma.rank_on_pairs()
        )));
    }
    Ok(gamma)
}

/// Finds generators of a subgroup isomorphic to A4 inside a list of
/// permutations closed under composition: an order-3 element together with a
/// commuting pair of involutions it cycles.
fn find_a4_of_automorphisms(auts: &[Perm]) -> Option<Vec<Perm>> {
    let order3: Vec<&Perm> = auts.iter().filter(|p| p.order() == 3).collect();
    let order2: Vec<&Perm> = auts.iter().filter(|p| p.order() == 2).collect();
    for sigma in &order3 {
        let sigma_inv = sigma.inverse();
        for alpha in &order2 {
            let beta = sigma_inv.compose(alpha).unwrap().compose(sigma).unwrap();
            if beta == **alpha {
                continue;
            }
            let ab = alpha.compose(&beta).unwrap();
            let ba = beta.compose(alpha).unwrap();
            if ab != ba || ab.order() != 2 {
                continue;
            }
            // σ must cycle α → β → αβ.
            let gamma = sigma_inv.compose(&beta).unwrap().compose(sigma).unwrap();
            if gamma != ab {
                continue;
            }
            return Some(vec![(*alpha).clone(), (*sigma).clone()]);
        }
    }
    None
}

/// Degree-56 fusion witness: label the rank-8 scheme with valencies
/// 1, 3, 3, 12, 12, 12, 12 (the first 3-valent color a union of complete
/// graphs, the 12-valent colors in transpose pairs) and merge
/// {1,3}, {2}, {4,5}, {6,7}. The result is a valid rank-5 scheme certified
/// non-schurian.
pub fn frobenius56_witness(gamma: &PermGroup, opts: &SearchOptions) -> Result<WitnessReport> {
    WitnessReport::build(
        "deg56-frobenius",
        gamma,
        vec![1, 3, 3, 12, 12, 12, 12],
        &[
            Discriminator::CliqueUnion(2),
            Discriminator::NotCliqueUnion(3),
            Discriminator::TransposePair(4, 5),
            Discriminator::TransposePair(6, 7),
        ],
        vec![vec![1, 3], vec![4, 5], vec![6, 7]],
        opts,
    )
}

/// An overgroup of `(E16:C3)_right` of order 1152 on 48 points whose point
/// stabilizer is an SL(2,3) of group automorphisms, with rank 9 and no
/// suborbit of size 3.
pub fn frobenius48_overgroup() -> Result<PermGroup> {
    let g = groups::frobenius_field(2, 4, 3)?;
    let auts = groups::automorphisms(&g);
    let right = g.regular_representation(Side::Right);
    let order3: Vec<&Perm> = auts.iter().filter(|p| p.order() == 3).collect();
    let order4: Vec<&Perm> = auts.iter().filter(|p| p.order() == 4).collect();
    for w in &order3 {
        let w_inv = w.inverse();
        for i in &order4 {
            let j = w_inv.compose(i).unwrap().compose(w).unwrap();
            // Quaternion relations: i² = j², j⁻¹ i j = i⁻¹.
            let i2 = i.compose(i).unwrap();
            if j.compose(&j).unwrap() != i2 {
                continue;
            }
            let conj = j.inverse().compose(i).unwrap().compose(&j).unwrap();
            if conj != i.inverse() {
                continue;
            }
            let mut gens = right.generators().to_vec();
            gens.push((*i).clone());
            gens.push((*w).clone());
            let gamma = PermGroup::new(g.order(), gens)?;
            if gamma.order_u64() == 1152 {
                let rank = gamma.rank_on_pairs();
                let has_suborbit_3 = gamma.suborbits(0).iter().any(|o| o.len() == 3);
                if rank == 9 && !has_suborbit_3 {
                    return Ok(gamma);
                }
            }
        }
    }
    Err(Error::Incompatible(
        "no rank-9 SL(2,3) extension found over E16:C3".into(),
    ))
}

/// Degree-48 fusion witness. Starting from the rank-9 overgroup, the
/// normalizer in the symmetric group has an elementary abelian quotient of
/// order 4; of its three proper intermediate subgroups two give rank-6
/// orbital schemes. Take the first, label valencies 1, 2, 12, 16, 16 and
/// merge {2,3}. The fused rank-5 scheme is certified non-schurian.
pub fn frobenius48_witness(gamma1: &PermGroup, opts: &SearchOptions) -> Result<WitnessReport> {
    let normalizer = autsearch::normalizer_in_sym(gamma1, opts)?;
    let quotient = perm_quotient(&normalizer, gamma1, opts.element_cap)?;
    if quotient.group.order() != 4 || quotient.group.exponent() != 2 {
        return Err(Error::Incompatible(format!(
            "normalizer quotient has order {} (expected E4)",
            quotient.group.order()
        )));
    }
    // The three intermediate subgroups are generated by the three nontrivial
    // coset representatives.
    let mut rank6: Vec<PermGroup> = Vec::new();
    for t in 1..4 {
        let mut gens = gamma1.generators().to_vec();
        gens.push(quotient.reps[t].clone());
        let middle = PermGroup::new(gamma1.degree(), gens)?;
        if middle.rank_on_pairs() == 6 {
            rank6.push(middle);
        }
    }
    if rank6.len() != 2 {
        return Err(Error::Incompatible(format!(
            "expected two rank-6 intermediate groups, found {}",
            rank6.len()
        )));
    }
    let gamma = &rank6[0];
    WitnessReport::build(
        "deg48-frobenius",
        gamma,
        vec![1, 2, 12, 16, 16],
        &[],
        vec![vec![2, 3]],
        opts,
    )
}

/// Degree-40 fusion witness for `E16:C5`. The coset action on the cosets of
/// an involution subgroup is normalized in the symmetric group; the
/// normalizer quotient has a unique normal subgroup isomorphic to C4×C2,
/// whose preimage gives a rank-10 orbital scheme with valencies
/// 1, 1, 1, 2, 2, 8, 8, 8, 8. Merging the two 2-valent colors yields a valid
/// rank-9 scheme certified non-schurian.
pub fn frobenius80_witness(opts: &SearchOptions) -> Result<WitnessReport> {
    let g = groups::frobenius_field(2, 4, 5)?;
    let involution = (1..g.order())
        .find(|&x| g.element_order(x) == 2)
        .expect("E16:C5 has involutions");
    let h = g.subgroup_generated(&[involution]);
    let delta = g.coset_action(&h)?.group;
    let normalizer = autsearch::normalizer_in_sym(&delta, opts)?;
    let quotient = perm_quotient(&normalizer, &delta, opts.element_cap)?;
    let target = groups::direct_product(&groups::cyclic(4), &groups::cyclic(2));
    let normal_subs = normal_subgroups_isomorphic_to(&quotient.group, &target);
    if normal_subs.len() != 1 {
        return Err(Error::Incompatible(format!(
            "expected a unique normal C4xC2 in the normalizer quotient, found {}",
            normal_subs.len()
        )));
    }
    let mut gens = delta.generators().to_vec();
    for &q in &normal_subs[0] {
        gens.push(quotient.reps[q].clone());
    }
    let gamma = PermGroup::new(delta.degree(), gens)?;
    WitnessReport::build(
        "deg40-frobenius",
        &gamma,
        vec![1, 1, 1, 2, 2, 8, 8, 8, 8],
        &[],
        vec![vec![4, 5]],
        opts,
    )
}

/// Degree-30 fusion witness for A5: the normalizer of the action on the
/// cosets of an involution gives a rank-7 orbital scheme with valencies
/// 1, 4, 4, 4, 8, 8, in which exactly two of the 4-valent colors form
/// connected simple graphs; merging those two yields a valid rank-6 scheme
/// certified non-schurian.
pub fn a5_witness(opts: &SearchOptions) -> Result<WitnessReport> {
    let g = groups::alternating(5)?;
    let involution = (1..g.order())
        .find(|&x| g.element_order(x) == 2)
        .expect("A5 has involutions");
    let h = g.subgroup_generated(&[involution]);
    let delta = g.coset_action(&h)?.group;
    let gamma = autsearch::normalizer_in_sym(&delta, opts)?;
    WitnessReport::build(
        "deg30-a5",
        &gamma,
        vec![1, 4, 4, 4, 8, 8],
        &[
            Discriminator::ConnectedSymmetric(2),
            Discriminator::ConnectedSymmetric(3),
            Discriminator::NotConnectedSymmetric(4),
        ],
        vec![vec![2, 3]],
        opts,
    )
}

/// A quotient `N/Δ` of permutation groups with `Δ` normal in `N`, realized
/// as a table group plus coset representatives (identity first).
pub struct PermQuotient {
    pub group: FiniteGroup,
    pub reps: Vec<Perm>,
}

/// Enumerates `N` and collects one representative per `Δ`-coset; feasible
/// whenever `|N|` stays under the element cap.
pub fn perm_quotient(n_group: &PermGroup, delta: &PermGroup, cap: usize) -> Result<PermQuotient> {
    if !delta.is_subgroup_of(n_group) {
        return Err(Error::NotASubgroup);
    }
    for g in n_group.generators() {
        if !delta.normalized_by(g) {
            return Err(Error::NotNormal);
        }
    }
    let elements = n_group.elements(cap)?;
    let mut reps: Vec<Perm> = vec![Perm::identity(n_group.degree())];
    for e in &elements {
        let in_existing = reps
            .iter()
            .any(|r| delta.contains(&e.compose(&r.inverse()).unwrap()));
        if !in_existing {
            reps.push(e.clone());
        }
    }
    // Identity rep first, the rest in a deterministic order.
    reps[1..].sort();
    let m = reps.len();
    let mut mul = vec![0usize; m * m];
    for a in 0..m {
        for b in 0..m {
            let prod = reps[a].compose(&reps[b]).unwrap();
            let k = reps
                .iter()
                .position(|r| delta.contains(&prod.compose(&r.inverse()).unwrap()))
                .expect("cosets partition the group");
            mul[a * m + b] = k;
        }
    }
    Ok(PermQuotient {
        group: FiniteGroup::from_mul_table(m, mul)?,
        reps,
    })
}

/// Element sets of all normal subgroups of `q` isomorphic to `target`,
/// found by closing generator pairs; deduplicated and sorted.
fn normal_subgroups_isomorphic_to(q: &FiniteGroup, target: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = q.order();
    let want = target.order();
    let mut found: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    let mut seeds: Vec<Vec<usize>> = (0..n).map(|a| vec![a]).collect();
    seeds.extend((0..n).flat_map(|a| (a + 1..n).map(move |b| vec![a, b])));
    seeds.extend(
        (0..n).flat_map(|a| {
            (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| vec![a, b, c]))
        }),
    );
    for seed in seeds {
        let sub = q.subgroup_generated(&seed);
        if sub.len() != want || found.contains(&sub) {
            continue;
        }
        let normal = sub
            .iter()
            .all(|&x| (0..n).all(|g| sub.binary_search(&q.conj(x, g)).is_ok()));
        if !normal {
            continue;
        }
        let (as_group, _) = q.subgroup_as_group(&sub).unwrap();
        if groups::is_isomorphic(&as_group, target).is_some() {
            found.insert(sub);
        }
    }
    found.into_iter().collect()
}

// ---------------------------------------------------------------------------
// Catalogue of the groups appearing in the small-group table rows
// ---------------------------------------------------------------------------

/// Builds the group with the given small-group catalogue id, for the ids the
/// table reproductions need. The id pair is carried as the group label.
pub fn catalogue_group(order: usize, index: usize) -> Result<FiniteGroup> {
    let g = match (order, index) {
        (16, 3) => {
            // (C4×C2):C2 with an E8 quotient: E4 ⋊ C4, the C4 swapping the
            // two coordinates through its order-2 quotient.
            let e4 = groups::elementary_abelian(2, 2);
            let c4 = groups::cyclic(4);
            let id = vec![0, 1, 2, 3];
            let swap = vec![0, 2, 1, 3];
            groups::semidirect(&e4, &c4, &[id.clone(), swap.clone(), id, swap])?
        }
        (16, 4) => {
            // C4 ⋊ C4, the generator inverting.
            let c4 = groups::cyclic(4);
            let id = vec![0, 1, 2, 3];
            let inv = vec![0, 3, 2, 1];
            groups::semidirect(&c4, &c4, &[id.clone(), inv.clone(), id, inv])?
        }
        (16, 6) => groups::modular_m(2, 4)?,
        (16, 7) => groups::dihedral(16)?,
        (16, 8) => groups::semidihedral(16)?,
        (16, 9) => groups::quaternion_generalized(16)?,
        (16, 11) => groups::direct_product(&groups::cyclic(2), &groups::dihedral(8)?),
        (16, 12) => groups::direct_product(&groups::cyclic(2), &groups::quaternion_generalized(8)?),
        (16, 13) => groups::g16(),
        (18, 3) => groups::direct_product(&groups::cyclic(3), &groups::symmetric(3)?),
        (18, 4) => groups::generalized_dihedral(&groups::elementary_abelian(3, 2))?,
        (24, 1) => {
            // C3 ⋊ C8, inversion through the order-2 quotient.
            let c3 = groups::cyclic(3);
            let c8 = groups::cyclic(8);
            let id = vec![0, 1, 2];
            let inv = vec![0, 2, 1];
            let action: Vec<Vec<usize>> = (0..8)
                .map(|j| if j % 2 == 0 { id.clone() } else { inv.clone() })
                .collect();
            groups::semidirect(&c3, &c8, &action)?
        }
        (24, 3) => sl2_3()?,
        (24, 4) => {
            // C3 ⋊ Q8 with kernel ⟨a⟩ (the dicyclic group of order 24).
            let c3 = groups::cyclic(3);
            let q8 = groups::quaternion_generalized(8)?;
            let id = vec![0, 1, 2];
            let inv = vec![0, 2, 1];
            let action: Vec<Vec<usize>> = (0..8)
                .map(|x| if x < 4 { id.clone() } else { inv.clone() })
                .collect();
            groups::semidirect(&c3, &q8, &action)?
        }
        (24, 5) => groups::direct_product(&groups::cyclic(4), &groups::symmetric(3)?),
        (24, 6) => groups::dihedral(24)?,
        (24, 7) => {
            let c3c4 = {
                let c3 = groups::cyclic(3);
                let c4 = groups::cyclic(4);
                let id = vec![0, 1, 2];
                let inv = vec![0, 2, 1];
                groups::semidirect(&c3, &c4, &[id.clone(), inv.clone(), id, inv])?
            };
            groups::direct_product(&groups::cyclic(2), &c3c4)
        }
        (24, 8) => {
            // C3 ⋊ D8 with kernel {e, r², s, r²s}.
            let c3 = groups::cyclic(3);
            let d8 = groups::dihedral(8)?;
            let id = vec![0, 1, 2];
            let inv = vec![0, 2, 1];
            let action: Vec<Vec<usize>> = (0..8)
                .map(|x| if x % 2 == 0 { id.clone() } else { inv.clone() })
                .collect();
            groups::semidirect(&c3, &d8, &action)?
        }
        (24, 10) => groups::direct_product(&groups::cyclic(3), &groups::dihedral(8)?),
        (24, 11) => groups::direct_product(&groups::cyclic(3), &groups::quaternion_generalized(8)?),
        (24, 12) => groups::symmetric(4)?,
        (24, 13) => groups::direct_product(&groups::cyclic(2), &groups::alternating(4)?),
        (24, 14) => groups::direct_product(&groups::elementary_abelian(2, 2), &groups::symmetric(3)?),
        (27, 3) => {
            // Extraspecial of exponent 3: E9 ⋊ C3 via the unipotent map
            // (x, y) ↦ (x+y, y).
            let e9 = groups::elementary_abelian(3, 2);
            let c3 = groups::cyclic(3);
            let shear: Vec<usize> = (0..9).map(|v| {
                let (x, y) = (v % 3, v / 3);
                (x + y) % 3 + 3 * y
            }).collect();
            let shear2: Vec<usize> = (0..9).map(|v| shear[shear[v]]).collect();
            let id: Vec<usize> = (0..9).collect();
            groups::semidirect(&e9, &c3, &[id, shear, shear2])?
        }
        (27, 4) => groups::modular_m(3, 3)?,
        _ => {
            return Err(Error::Parameter(format!(
                "no catalogue constructor for [{order},{index}]"
            )))
        }
    };
    Ok(g.with_label(format!("[{order},{index}]")))
}

/// SL(2,3) as Q8 extended by an order-3 automorphism cycling i, j, k.
pub fn sl2_3() -> Result<FiniteGroup> {
    let q8 = groups::quaternion_generalized(8)?;
    let phi = groups::automorphisms(&q8)
        .into_iter()
        .find(|p| p.order() == 3)
        .expect("Aut(Q8) has elements of order 3");
    let id: Vec<usize> = (0..8).collect();
    let phi1: Vec<usize> = (0..8).map(|x| phi.apply(x)).collect();
    let phi2: Vec<usize> = (0..8).map(|x| phi.apply(phi.apply(x))).collect();
    groups::semidirect(&q8, &groups::cyclic(3), &[id, phi1, phi2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_order16_pairwise_distinct() {
        let ids = [3usize, 4, 6, 7, 8, 9, 11, 12, 13];
        let built: Vec<FiniteGroup> = ids
            .iter()
            .map(|&i| catalogue_group(16, i).unwrap())
            .collect();
        for g in &built {
            assert_eq!(g.order(), 16);
            assert!(!g.is_abelian());
        }
        for (a, ga) in built.iter().enumerate() {
            for (b, gb) in built.iter().enumerate() {
                assert_eq!(
                    groups::is_isomorphic(ga, gb).is_some(),
                    a == b,
                    "ids {} vs {}",
                    ids[a],
                    ids[b]
                );
            }
        }
    }

    #[test]
    fn catalogue_16_3_structure() {
        // Seven involutions and an E8 quotient single it out.
        let g = catalogue_group(16, 3).unwrap();
        let involutions = (1..16).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 7);
        let center = g.center();
        assert_eq!(center.len(), 4);
    }

    #[test]
    fn catalogue_order18_and_27() {
        let g183 = catalogue_group(18, 3).unwrap();
        let g184 = catalogue_group(18, 4).unwrap();
        assert_eq!(g183.order(), 18);
        assert_eq!(g184.order(), 18);
        assert!(groups::is_isomorphic(&g183, &g184).is_none());

        let g273 = catalogue_group(27, 3).unwrap();
        assert_eq!(g273.order(), 27);
        assert_eq!(g273.exponent(), 3);
        let g274 = catalogue_group(27, 4).unwrap();
        assert_eq!(g274.exponent(), 9);
    }

    #[test]
    fn catalogue_order24_distinct() {
        let ids = [1usize, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14];
        let built: Vec<FiniteGroup> = ids
            .iter()
            .map(|&i| catalogue_group(24, i).unwrap())
            .collect();
        for g in &built {
            assert_eq!(g.order(), 24);
        }
        for (a, ga) in built.iter().enumerate() {
            for (b, gb) in built.iter().enumerate().skip(a + 1) {
                assert!(
                    groups::is_isomorphic(ga, gb).is_none(),
                    "ids {} and {} collide",
                    ids[a],
                    ids[b]
                );
            }
        }
    }

    #[test]
    fn sl23_structure() {
        let g = sl2_3().unwrap();
        assert_eq!(g.order(), 24);
        let involutions = (1..24).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 1, "SL(2,3) has a unique involution");
    }

    #[test]
    fn frobenius56_overgroup_exists() {
        let gamma = frobenius56_overgroup().unwrap();
        assert_eq!(gamma.degree(), 56);
        assert_eq!(gamma.order_u64(), 672);
        assert_eq!(gamma.rank_on_pairs(), 8);
        let mut valencies: Vec<usize> = gamma.suborbits(0).iter().map(|o| o.len()).collect();
        valencies.sort_unstable();
        assert_eq!(valencies, vec![1, 1, 3, 3, 12, 12, 12, 12]);
    }

    #[test]
    fn perm_quotient_of_s4_by_v4() {
        // The unique normal subgroup of order 4 in S4; the quotient is S3.
        let s4 = groups::symmetric(4).unwrap();
        let right = s4.regular_representation(Side::Right);
        let mut v4 = None;
        for a in 1..24 {
            for b in a + 1..24 {
                let sub = s4.subgroup_generated(&[a, b]);
                if sub.len() == 4
                    && sub
                        .iter()
                        .all(|&x| (0..24).all(|g| sub.binary_search(&s4.conj(x, g)).is_ok()))
                {
                    v4 = Some(sub);
                }
            }
        }
        let v4 = v4.unwrap();
        let sub_gens: Vec<Perm> = v4.iter().map(|&x| s4.translation(x, Side::Right)).collect();
        let delta = PermGroup::new(24, sub_gens).unwrap();
        let q = perm_quotient(&right, &delta, 100).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(groups::is_isomorphic(&q.group, &groups::symmetric(3).unwrap()).is_some());
    }
}
