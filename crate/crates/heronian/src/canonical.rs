//! Canonical reduction of lattice embeddings modulo the 48 origin-fixing
//! lattice isometries, translation normalization, and (for the strong
//! form) vertex order.
//!
//! The 48 isometries are enumerated as all signed axis permutations
//! (6 permutations x 8 sign patterns); the 24 with determinant +1 are
//! exactly the cube rotations of the quaternion rotor list, the rest are
//! their compositions with the point reflection. Coordinate lists are
//! compared vertex-major, axes in i,j,k order, most significant first;
//! the earliest list wins. The convention reproduces the published
//! canonical embeddings bit-exactly, which is what pins it down.

use std::fmt;

use num::Zero;

use crate::embed::LatticeEmbedding;
use crate::exact::Int;
use crate::quat::Quat;

/// `Weak`: minimal over the 48 isometries with vertex order kept.
/// `Strong`: additionally minimal over vertex order (rows end up sorted).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Strength {
    Weak,
    Strong,
}

/// A canonicalized embedding: all coordinates nonnegative, each axis
/// touching zero at some vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalEmbedding {
    pub vertices: Vec<[Int; 3]>,
    pub strength: Strength,
}

impl fmt::Display for CanonicalEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .vertices
            .iter()
            .map(|v| format!("[1,{},{},{}]", v[0], v[1], v[2]))
            .collect();
        write!(f, "{}", lines.join(" "))
    }
}

/// A signed axis permutation: `apply(v)[k] = +-v[axes[k]]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignedPerm {
    pub axes: [usize; 3],
    pub negate: [bool; 3],
}

impl SignedPerm {
    pub fn apply(&self, v: &[Int; 3]) -> [Int; 3] {
        std::array::from_fn(|k| {
            let c = v[self.axes[k]].clone();
            if self.negate[k] {
                -c
            } else {
                c
            }
        })
    }

    /// Determinant: permutation parity times the sign pattern.
    pub fn det(&self) -> i32 {
        let [a, b, c] = self.axes;
        let parity = if (a, b, c) == (0, 1, 2) || (a, b, c) == (1, 2, 0) || (a, b, c) == (2, 0, 1) {
            1
        } else {
            -1
        };
        let signs = self.negate.iter().filter(|&&n| n).count();
        if signs % 2 == 0 {
            parity
        } else {
            -parity
        }
    }
}

/// All 48 signed axis permutations.
pub fn lattice_isometries() -> Vec<SignedPerm> {
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out = Vec::with_capacity(48);
    for axes in perms {
        for bits in 0..8u8 {
            out.push(SignedPerm {
                axes,
                negate: [bits & 1 != 0, bits & 2 != 0, bits & 4 != 0],
            });
        }
    }
    out
}

/// Translate so all coordinates are nonnegative with each axis zero at
/// some vertex: subtract the per-axis minimum.
pub fn normalize_translation(points: &mut [[Int; 3]]) {
    if points.is_empty() {
        return;
    }
    for axis in 0..3 {
        let min = points.iter().map(|p| p[axis].clone()).min().unwrap();
        if !min.is_zero() {
            for p in points.iter_mut() {
                p[axis] -= &min;
            }
        }
    }
}

fn transformed(points: &[[Int; 3]], g: &SignedPerm, sort_rows: bool) -> Vec<[Int; 3]> {
    let mut out: Vec<[Int; 3]> = points.iter().map(|p| g.apply(p)).collect();
    normalize_translation(&mut out);
    if sort_rows {
        out.sort();
    }
    out
}

fn minimize(points: &[[Int; 3]], sort_rows: bool) -> Vec<[Int; 3]> {
    lattice_isometries()
        .iter()
        .map(|g| transformed(points, g, sort_rows))
        .min()
        .unwrap()
}

/// Weak canonical form of a list of lattice points, vertex order kept.
pub fn weak_canonical_points(points: &[[Int; 3]]) -> CanonicalEmbedding {
    CanonicalEmbedding {
        vertices: minimize(points, false),
        strength: Strength::Weak,
    }
}

/// Strong canonical form of a list of lattice points: vertex order is
/// free, so the minimum has its rows sorted ascending.
pub fn strong_canonical_points(points: &[[Int; 3]]) -> CanonicalEmbedding {
    CanonicalEmbedding {
        vertices: minimize(points, true),
        strength: Strength::Strong,
    }
}

/// Coordinates of a lattice vertex (unit scalar projective quaternion).
pub fn lattice_coords(v: &Quat) -> [Int; 3] {
    debug_assert!(num::One::is_one(&v.s));
    [v.p.clone(), v.q.clone(), v.r.clone()]
}

/// Weak canonical form of an embedding. Rows follow the source vertex
/// labels (P,Q,R,S of the input edges), not the pose slots, so that
/// embeddings obtained through different vertex permutations are
/// comparable.
pub fn weak_canonical(e: &LatticeEmbedding) -> CanonicalEmbedding {
    let pts: Vec<[Int; 3]> = e.labeled_vertices().iter().map(lattice_coords).collect();
    weak_canonical_points(&pts)
}

/// Strong canonical form of an embedding (a function of the point set).
pub fn strong_canonical(e: &LatticeEmbedding) -> CanonicalEmbedding {
    let pts: Vec<[Int; 3]> = e.labeled_vertices().iter().map(lattice_coords).collect();
    strong_canonical_points(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pts(raw: &[[i64; 3]]) -> Vec<[Int; 3]> {
        raw.iter().map(|p| p.map(int)).collect()
    }

    #[test]
    fn translation_examples() {
        let mut a = pts(&[[0, 0, 0], [1, 2, 3]]);
        let before = a.clone();
        normalize_translation(&mut a);
        assert_eq!(a, before);

        let mut b = pts(&[[-1, 5, 0], [3, 5, 2]]);
        normalize_translation(&mut b);
        assert_eq!(b, pts(&[[0, 0, 0], [4, 0, 2]]));
    }

    #[test]
    fn group_has_48_elements_split_by_determinant() {
        let isos = lattice_isometries();
        assert_eq!(isos.len(), 48);
        let rotations = isos.iter().filter(|g| g.det() == 1).count();
        assert_eq!(rotations, 24);
    }

    #[test]
    fn rotation_halves_match_cube_rotors() {
        // every det +1 signed permutation is realized by one of the 24
        // quaternion rotors via p -> conj(x) p x / norm(x)
        let rotors = crate::quat::cube_rotors();
        let basis = [
            Quat::of(0, 1, 0, 0),
            Quat::of(0, 0, 1, 0),
            Quat::of(0, 0, 0, 1),
        ];
        let mut matched = 0;
        for g in lattice_isometries().iter().filter(|g| g.det() == 1) {
            let realizes = |x: &Quat| -> bool {
                let n = x.norm();
                basis.iter().enumerate().all(|(col, a)| {
                    let t = &(&x.conj() * a) * x;
                    let coords = [&t.p, &t.q, &t.r];
                    (0..3).all(|row| {
                        let want = {
                            // image of basis vector `col` under g
                            let mut v = [int(0), int(0), int(0)];
                            v[col] = int(1);
                            g.apply(&v)[row].clone()
                        };
                        coords[row] == &(&want * &n) || (want.is_zero() && coords[row].is_zero())
                    })
                })
            };
            if rotors.iter().any(realizes) {
                matched += 1;
            }
        }
        assert_eq!(matched, 24);
    }

    #[test]
    fn published_canonical_isomorphs_reproduce() {
        // raw lattice output of each worked construction against its
        // published canonical isomorph; the worked reductions scanned
        // vertex permutations as well, so these are strong forms
        type Fixture = [[i64; 3]; 4];
        let cases: [(&Fixture, &Fixture); 3] = [
            (
                &[
                    [0, 0, 0],
                    [396, 864, 432],
                    [396, -561, 2332],
                    [1740, 783, 1044],
                ],
                &[
                    [0, 0, 396],
                    [561, 2332, 0],
                    [1344, 1288, 1740],
                    [1425, 1900, 396],
                ],
            ),
            (
                &[
                    [0, 0, 0],
                    [-1529, -1848, 396],
                    [-224, -1848, -1344],
                    [-665, -2280, 0],
                ],
                &[
                    [0, 0, 396],
                    [224, 1848, 1740],
                    [665, 2280, 396],
                    [1529, 1848, 0],
                ],
            ),
            (
                &[
                    [0, 0, 0],
                    [-3975, 5300, 0],
                    [1680, 8316, 0],
                    [3081, 3536, -4368],
                ],
                &[
                    [0, 0, 1401],
                    [0, 3016, 7056],
                    [0, 8316, 3081],
                    [4368, 4780, 0],
                ],
            ),
        ];
        for (raw, expect) in cases {
            let strong = strong_canonical_points(&pts(raw));
            assert_eq!(strong.vertices, pts(expect));
            // idempotent, and the weak form of a strong form is itself
            assert_eq!(
                strong_canonical_points(&strong.vertices).vertices,
                strong.vertices
            );
        }
    }

    #[test]
    fn canonical_forms_preserve_congruence() {
        use crate::embed::{embed_tetrahedron, realizes_edges};
        use crate::pose::SourceEdges;
        use crate::simplex::EdgeHexad;
        let h = EdgeHexad::of([117, 84, 51, 80, 53, 52]);
        let emb = embed_tetrahedron(&h, crate::perm::VertexPerm::identity()).unwrap();
        for form in [emb.weak_canonical(), emb.strong_canonical()] {
            let vertices: Vec<Quat> = form
                .vertices
                .iter()
                .map(|v| Quat::new(int(1), v[0].clone(), v[1].clone(), v[2].clone()))
                .collect();
            assert!(realizes_edges(&vertices, &SourceEdges::Tetra(h.clone())));
        }
    }

    #[test]
    fn idempotence_and_invariance_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x63616e6f6e);
        let isos = lattice_isometries();
        for _ in 0..800 {
            let raw: Vec<[Int; 3]> = (0..4)
                .map(|_| std::array::from_fn(|_| int(rng.gen_range(-50..=50))))
                .collect();
            let weak = weak_canonical_points(&raw);
            let strong = strong_canonical_points(&raw);

            // idempotence
            assert_eq!(
                weak_canonical_points(&weak.vertices).vertices,
                weak.vertices
            );
            assert_eq!(
                strong_canonical_points(&strong.vertices).vertices,
                strong.vertices
            );

            // invariance under a random isometry plus translation
            let g = &isos[rng.gen_range(0..48)];
            let shift: [Int; 3] = std::array::from_fn(|_| int(rng.gen_range(-9..=9)));
            let moved: Vec<[Int; 3]> = raw
                .iter()
                .map(|p| {
                    let mut q = g.apply(p);
                    for k in 0..3 {
                        q[k] += &shift[k];
                    }
                    q
                })
                .collect();
            assert_eq!(weak_canonical_points(&moved), weak);

            // strong is additionally invariant under vertex order
            let mut shuffled = moved.clone();
            let a = rng.gen_range(0..4);
            let b = rng.gen_range(0..4);
            shuffled.swap(a, b);
            assert_eq!(strong_canonical_points(&shuffled), strong);
        }
    }
}
