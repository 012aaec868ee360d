//! The central constructions: GCD-driven congruent embedding of Heronian
//! triangles into Z^2 and tetrahedra into Z^3, the family of embeddings
//! obtainable by permuting vertices before embedding, the plane-as-space
//! route, and exact verification.
//!
//! One GCD step moves one rational vertex onto the lattice. In the plane
//! the rotor is `X = GCD(rR, r)` acting as `Z -> conj(X)^2 Z / r`; in
//! space it is `X = GCD_L(S, s)` acting as `P -> conj(X) P X` followed by
//! primitive reduction. Each step is verified before the next.

use std::collections::BTreeSet;

use num::{Integer, One, Zero};
use rayon::prelude::*;

use crate::canonical::{strong_canonical, weak_canonical, CanonicalEmbedding};
use crate::error::{Error, Result};
use crate::exact::Int;
use crate::gaussian::{self, GaussInt};
use crate::perm::VertexPerm;
use crate::pose::{AxialPose, SourceEdges};
use crate::quat::{self, Quat, Side};
use crate::simplex::{EdgeHexad, EdgeTriple};

/// A congruent lattice embedding: 3 or 4 vertices with unit scalar, plus
/// the provenance that produced it (vertex permutation and rotor chain).
/// `vertices` follow the pose slots; use [`LatticeEmbedding::labeled_vertices`]
/// for rows in source-label order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeEmbedding {
    pub source: SourceEdges,
    pub permutation: VertexPerm,
    pub rotors: Vec<Quat>,
    pub vertices: Vec<Quat>,
}

impl LatticeEmbedding {
    /// Vertices reordered so row `v` is the position of source vertex `v`.
    pub fn labeled_vertices(&self) -> Vec<Quat> {
        let n = self.vertices.len();
        let mut out = self.vertices.clone();
        for slot in 0..n {
            out[self.permutation.source_of_slot(slot)] = self.vertices[slot].clone();
        }
        out
    }

    /// True iff every vertex has unit scalar and every pairwise squared
    /// distance equals the corresponding squared source edge.
    pub fn verify(&self) -> bool {
        verify_points(&self.vertices, &self.source, self.permutation)
    }

    pub fn weak_canonical(&self) -> CanonicalEmbedding {
        weak_canonical(self)
    }

    pub fn strong_canonical(&self) -> CanonicalEmbedding {
        strong_canonical(self)
    }
}

/// Distance-and-scalar check for a pose-slot-ordered vertex list.
pub(crate) fn verify_points(vertices: &[Quat], source: &SourceEdges, perm: VertexPerm) -> bool {
    if vertices.len() != source.vertex_count() {
        return false;
    }
    if !vertices.iter().all(|v| v.s.is_one()) {
        return false;
    }
    for a in 0..vertices.len() {
        for b in 0..a {
            let d = (&vertices[a] - &vertices[b]).norm();
            if d != source.edge_sq(perm, a, b) {
                return false;
            }
        }
    }
    true
}

/// Rotate a projective point: `primitive_reduce(conj(x) p x)`. Preserves
/// all conormalized pairwise distances.
pub fn rotate_point(x: &Quat, p: &Quat) -> Result<Quat> {
    if x.is_zero() {
        return Err(Error::ZeroRotor);
    }
    Ok((&(&x.conj() * p) * x).reduced())
}

/// One embedding step: rotate every point by `X = GCD_L(target, s)` where
/// `s` is the target's scalar. The target must land on the lattice and
/// previously-lattice points must stay there.
pub fn embed_step(points: &[Quat], target: usize) -> Result<(Vec<Quat>, Quat)> {
    let s = points[target].s.clone();
    if s.is_even() {
        return Err(Error::EvenLcd);
    }
    let x = quat::gcd(&points[target], &Quat::from_scalar(s.clone()), Side::Left)?;
    if x.norm() != s {
        return Err(Error::PrimeSplitFailure);
    }
    let lattice_before: Vec<bool> = points.iter().map(|p| p.s.is_one()).collect();
    let moved: Vec<Quat> = points
        .iter()
        .map(|p| rotate_point(&x, p))
        .collect::<Result<_>>()?;
    if !moved[target].s.is_one() {
        return Err(Error::NotLattice);
    }
    for (p, was_lattice) in moved.iter().zip(lattice_before) {
        if was_lattice && !p.s.is_one() {
            return Err(Error::NotLattice);
        }
    }
    Ok((moved, x))
}

/// Embed a proper Heronian tetrahedron congruently in Z^3: axial pose,
/// then one GCD step per non-lattice vertex in ascending dimension order
/// (R before S), with exact verification at the end.
pub fn embed_tetrahedron(h: &EdgeHexad, perm: VertexPerm) -> Result<LatticeEmbedding> {
    let pose = AxialPose::of_tetra(h, perm)?;
    let mut points = pose.vertices.clone();
    let mut rotors = Vec::new();
    for target in [2usize, 3] {
        if points[target].s.is_one() {
            continue;
        }
        let (moved, x) = embed_step(&points, target)?;
        points = moved;
        rotors.push(x);
        // distances are invariants of every rotation step; catching an
        // associate or rounding mistake here beats debugging downstream
        let preserved = points.iter().enumerate().all(|(a, pa)| {
            (0..a).all(|b| {
                crate::pose::conormal_sq_dist(pa, &points[b])
                    == crate::exact::Rat::from_integer(pose.source.edge_sq(perm, a, b))
            })
        });
        if !preserved {
            return Err(Error::NotLattice);
        }
    }
    let embedding = LatticeEmbedding {
        source: SourceEdges::Tetra(h.clone()),
        permutation: perm,
        rotors,
        vertices: points,
    };
    if !embedding.verify() {
        return Err(Error::NotLattice);
    }
    Ok(embedding)
}

/// Embed a proper Heronian triangle congruently in Z^2 via the complex
/// route: axial pose in Q^2, Gaussian rotor `X = GCD(rR, r)`, then
/// `Z -> conj(X)^2 Z / r` on every vertex.
///
/// Vertices are returned as planar quaternions `[1, x, y, 0]`; the rotor
/// `f + i g` is recorded as `[f, 0, 0, g]`, the polar identification under
/// which the quaternion transform reproduces the complex one.
pub fn embed_triangle(t: &EdgeTriple) -> Result<LatticeEmbedding> {
    let pose = AxialPose::of_triangle(t)?;
    let r = pose.vertices[2].s.clone();

    // complex representatives of the r-scaled points
    let scaled: Vec<GaussInt> = pose
        .vertices
        .iter()
        .map(|v| {
            // r * (p/s, q/s): s divides r for axial vertices
            let f = &r / &v.s;
            GaussInt::new(&v.p * &f, &v.q * &f)
        })
        .collect();

    let (vertices, rotor) = if r.is_one() {
        let vs = scaled
            .iter()
            .map(|z| Quat::new(Int::one(), z.re.clone(), z.im.clone(), Int::from(0)))
            .collect();
        (vs, GaussInt::of(1, 0))
    } else {
        let x = gaussian::gcd(&scaled[2], &GaussInt::new(r.clone(), Int::from(0)))?;
        if x.norm() != r {
            return Err(Error::PrimeSplitFailure);
        }
        let cc = x.conj();
        let cc2 = &cc * &cc;
        let rr = &r * &r;
        let vs = scaled
            .iter()
            .map(|z| {
                let t = &cc2 * z;
                if !(&t.re % &rr).is_zero() || !(&t.im % &rr).is_zero() {
                    return Err(Error::NotLattice);
                }
                Ok(Quat::new(
                    Int::one(),
                    &t.re / &rr,
                    &t.im / &rr,
                    Int::from(0),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        (vs, x)
    };

    let embedding = LatticeEmbedding {
        source: SourceEdges::Triangle(t.clone()),
        permutation: VertexPerm::identity(),
        rotors: vec![Quat::new(
            rotor.re.clone(),
            Int::from(0),
            Int::from(0),
            rotor.im.clone(),
        )],
        vertices,
    };
    if !embedding.verify() {
        return Err(Error::NotLattice);
    }
    Ok(embedding)
}

/// Embed a Heronian triangle through the quaternion machinery, treating
/// the plane as the `k = 0` slice of Z^3. Must agree with
/// [`embed_triangle`] modulo lattice isometry.
pub fn embed_triangle_via_space(t: &EdgeTriple) -> Result<LatticeEmbedding> {
    let pose = AxialPose::of_triangle(t)?;
    let mut points = pose.vertices.clone();
    let mut rotors = Vec::new();
    if !points[2].s.is_one() {
        let (moved, x) = embed_step(&points, 2)?;
        points = moved;
        rotors.push(x);
    }
    // quaternion GCD keeps the plane: all k components must vanish
    if points.iter().any(|p| !p.r.is_zero()) {
        return Err(Error::NotLattice);
    }
    let embedding = LatticeEmbedding {
        source: SourceEdges::Triangle(t.clone()),
        permutation: VertexPerm::identity(),
        rotors,
        vertices: points,
    };
    if !embedding.verify() {
        return Err(Error::NotLattice);
    }
    Ok(embedding)
}

/// Does a list of lattice vertices realize the free simplex under *some*
/// labelling? Canonical forms forget which row is which vertex, so every
/// row permutation is tried.
pub fn realizes_edges(vertices: &[Quat], source: &SourceEdges) -> bool {
    let n = source.vertex_count();
    if vertices.len() != n || !vertices.iter().all(|v| v.s.is_one()) {
        return false;
    }
    let mut rows: Vec<usize> = (0..n).collect();
    permute_rows(&mut rows, 0, &mut |order| {
        (0..n).all(|a| {
            (0..a).all(|b| {
                (&vertices[order[a]] - &vertices[order[b]]).norm()
                    == source.edge_sq(VertexPerm::identity(), a, b)
            })
        })
    })
}

fn permute_rows(rows: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == rows.len() {
        return check(rows);
    }
    for i in k..rows.len() {
        rows.swap(k, i);
        if permute_rows(rows, k + 1, check) {
            rows.swap(k, i);
            return true;
        }
        rows.swap(k, i);
    }
    false
}

/// Every embedding of `h` constructible by the GCD procedure: one member
/// per vertex permutation, with the distinct canonical forms alongside.
#[derive(Clone, Debug)]
pub struct EmbeddingFamily {
    pub members: Vec<LatticeEmbedding>,
    pub strong_forms: BTreeSet<CanonicalEmbedding>,
    pub weak_forms: BTreeSet<CanonicalEmbedding>,
}

/// Run [`embed_tetrahedron`] over all 24 vertex permutations and collect
/// the distinct canonical forms. The strong set never has more than 4
/// elements (the first three vertices embed essentially uniquely, so only
/// the choice of last vertex matters).
pub fn gcd_family(h: &EdgeHexad) -> Result<EmbeddingFamily> {
    let members: Vec<LatticeEmbedding> = VertexPerm::all()
        .into_par_iter()
        .map(|perm| embed_tetrahedron(h, perm))
        .collect::<Result<_>>()?;
    let strong_forms: BTreeSet<_> = members.iter().map(strong_canonical).collect();
    let weak_forms: BTreeSet<_> = members.iter().map(weak_canonical).collect();
    debug_assert!(strong_forms.len() <= 4);
    Ok(EmbeddingFamily {
        members,
        strong_forms,
        weak_forms,
    })
}
