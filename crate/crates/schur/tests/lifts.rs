//! Wreath-lift checks: a scheme on the cosets of a subgroup lifts to a
//! Cayley scheme over the whole group (bottom = group ring of the subgroup),
//! and the lift preserves the schurity verdict in both directions.

use schur::autsearch::SearchOptions;
use schur::groups;
use schur::scheme::AssociationScheme;
use schur::sring::{self, SRing};
use schur::witness;

/// Schurian top over a schurian bottom: the lift stays schurian.
#[test]
fn lift_of_schurian_top_is_schurian() {
    let c6 = groups::cyclic(6);
    let sub = c6.subgroup_generated(&[3]);
    let (sub_group, _) = c6.subgroup_as_group(&sub).unwrap();
    let bottom = SRing::from_partition(&sub_group, &[vec![0], vec![1]]).unwrap();
    let top_color: Vec<u32> = (0..9).map(|t| if t / 3 == t % 3 { 0 } else { 1 }).collect();
    let top = AssociationScheme::from_color_matrix(3, top_color).unwrap();
    let lift = sring::wreath_sring(&c6, &sub, &bottom, &top).unwrap();
    assert_eq!(lift.rank(), 3);
    let verdict = sring::is_schurian(&lift, &SearchOptions::default()).unwrap();
    assert!(verdict.is_schurian());
}

/// The degree-40 non-schurian coset-scheme fusion lifts to a non-schurian
/// S-ring over the order-80 Frobenius group: non-schurity of a section
/// propagates up through the wreath lift.
#[test]
fn lift_of_non_schurian_fusion_is_non_schurian() {
    let opts = SearchOptions::default();
    let report = witness::frobenius80_witness(&opts).unwrap();
    assert!(report.non_schurian);

    let g = groups::frobenius_field(2, 4, 5).unwrap();
    let involution = (1..g.order()).find(|&x| g.element_order(x) == 2).unwrap();
    let h = g.subgroup_generated(&[involution]);
    let (h_group, _) = g.subgroup_as_group(&h).unwrap();
    let bottom = SRing::from_partition(&h_group, &[vec![0], vec![1]]).unwrap();
    let lift = sring::wreath_sring(&g, &h, &bottom, &report.fused).unwrap();
    assert_eq!(lift.rank(), 2 + report.fused.rank() - 1);

    let verdict = sring::is_schurian(&lift, &opts).unwrap();
    assert!(
        !verdict.is_schurian(),
        "the lifted S-ring over the order-80 group must be non-schurian"
    );
    // The certificate is machine-checkable: the two pairs share a scheme
    // color but lie in different orbitals of the automorphism group.
    if let sring::SchurityVerdict::NonSchurian { aut, split } = &verdict {
        let scheme = lift.to_cayley_scheme();
        let ((a, b), (c, d)) = *split;
        assert_eq!(scheme.color(a, b), scheme.color(c, d));
        let closed = schur::scheme::orbital_scheme(aut).unwrap();
        assert_ne!(closed.color(a, b), closed.color(c, d));
    }
}
