//! Desk-scale census: every primitive proper Heronian tetrahedron up to
//! diameter 1100, with its GCD embedding family checked against the
//! exhaustive search. Pins the first occurrences of several phenomena.

use std::collections::BTreeSet;

use heronian::canonical::{lattice_coords, strong_canonical_points, CanonicalEmbedding};
use heronian::embed::{embed_step, gcd_family, realizes_edges};
use heronian::pose::{AxialPose, SourceEdges};
use heronian::search::{enumerate_heronian_tetrahedra, exhaustive_embeddings};
use heronian::{EdgeHexad, Int, Quat, VertexPerm};

fn corpus() -> Vec<EdgeHexad> {
    enumerate_heronian_tetrahedra(1100, true).unwrap()
}

/// Strong forms reachable by the GCD procedure under every liberty it
/// has: vertex permutation, altitude sign, and embedding order.
fn liberal_gcd_forms(h: &EdgeHexad) -> BTreeSet<CanonicalEmbedding> {
    let mut out = BTreeSet::new();
    for perm in VertexPerm::all() {
        for sign in [1i64, -1] {
            for order in [[2usize, 3], [3, 2]] {
                let pose = AxialPose::of_tetra(h, perm).unwrap();
                let mut pts = pose.vertices.clone();
                let s = &pts[3];
                pts[3] = Quat::new(
                    s.s.clone(),
                    s.p.clone(),
                    s.q.clone(),
                    &s.r * Int::from(sign),
                );
                let mut ok = true;
                for &target in &order {
                    if pts[target].s == Int::from(1) {
                        continue;
                    }
                    match embed_step(&pts, target) {
                        Ok((moved, _)) => pts = moved,
                        Err(_) => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok && pts.iter().all(|p| p.s == Int::from(1)) {
                    let coords: Vec<[Int; 3]> = pts.iter().map(lattice_coords).collect();
                    out.insert(strong_canonical_points(&coords));
                }
            }
        }
    }
    out
}

#[test]
fn census_to_1100() {
    let corpus = corpus();
    assert_eq!(corpus.len(), 34);

    let mut first_excess = None;
    let mut first_double_family = None;
    for h in &corpus {
        let fam = gcd_family(h).unwrap();
        let out = exhaustive_embeddings(h, None).unwrap();

        // the search rediscovers every GCD embedding
        assert!(fam.strong_forms.is_subset(&out.strong_forms), "case {h}");

        // neither the altitude sign nor the embedding order ever enlarges
        // the family at this scale
        assert_eq!(liberal_gcd_forms(h), fam.strong_forms, "case {h}");

        if fam.strong_forms.len() > 1 && first_double_family.is_none() {
            first_double_family = Some(h.clone());
        }
        if out.strong_forms.len() > fam.strong_forms.len() && first_excess.is_none() {
            first_excess = Some(h.clone());
        }
    }

    // the first case with two essentially distinct GCD embeddings
    assert_eq!(
        first_double_family,
        Some(EdgeHexad::of([1073, 975, 448, 495, 952, 840]))
    );

    // the first case carrying an embedding the GCD procedure cannot reach
    // is the small isohedral one, long before [888,875,533,533,875,888]
    assert_eq!(
        first_excess,
        Some(EdgeHexad::of([203, 195, 148, 148, 195, 203]))
    );
}

#[test]
fn isohedral_203_has_a_non_gcd_embedding() {
    // explicit witness, checkable by hand against 203^2 = 41209,
    // 195^2 = 38025, 148^2 = 21904
    let h = EdgeHexad::of([203, 195, 148, 148, 195, 203]);
    let witness = [
        Quat::of(1, 0, 0, 0),
        Quat::of(1, 21, 112, 168),
        Quat::of(1, -75, 0, 180),
        Quat::of(1, -96, 112, 12),
    ];
    assert!(realizes_edges(&witness, &SourceEdges::Tetra(h.clone())));

    let coords: Vec<[Int; 3]> = witness.iter().map(lattice_coords).collect();
    let witness_form = strong_canonical_points(&coords);

    let fam = gcd_family(&h).unwrap();
    assert!(!fam.strong_forms.contains(&witness_form));
    let out = exhaustive_embeddings(&h, None).unwrap();
    assert!(out.strong_forms.contains(&witness_form));
    assert_eq!(out.strong_forms.len(), 2);
}

#[test]
fn isohedral_888_has_a_non_gcd_embedding() {
    let h = EdgeHexad::of([888, 875, 533, 533, 875, 888]);
    let fam = gcd_family(&h).unwrap();
    let out = exhaustive_embeddings(&h, None).unwrap();
    assert!(fam.strong_forms.is_subset(&out.strong_forms));
    assert!(fam.strong_forms.len() < out.strong_forms.len());
}
