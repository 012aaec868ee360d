//! Rational axial poses: place a Heronian triangle in Q^2 or tetrahedron
//! in Q^3 with vertices in nested axial subspaces, encoded as primitive
//! projective integer quaternions whose scalar is the coordinate LCD.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{all_prime_factors_1mod4, int_sqrt, primitive_reduce, Int, Rat};
use crate::perm::{edge_index, VertexPerm};
use crate::quat::Quat;
use crate::simplex::{EdgeHexad, EdgeTriple};

/// Which free simplex an object was built from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SourceEdges {
    Triangle(EdgeTriple),
    Tetra(EdgeHexad),
}

impl SourceEdges {
    /// Squared length of edge `(a, b)` after applying the permutation.
    pub fn edge_sq(&self, perm: VertexPerm, a: usize, b: usize) -> Int {
        let e = match self {
            SourceEdges::Triangle(t) => {
                t.edges()[edge_index(perm.source_of_slot(a), perm.source_of_slot(b))].clone()
            }
            SourceEdges::Tetra(h) => h
                .edge(perm.source_of_slot(a), perm.source_of_slot(b))
                .clone(),
        };
        &e * &e
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            SourceEdges::Triangle(_) => 3,
            SourceEdges::Tetra(_) => 4,
        }
    }
}

/// An axial pose: 3 or 4 primitive projective vertices with rational
/// coordinates, P at the origin, Q on the first axis, R in the first
/// coordinate plane. Scalars are the coordinate LCDs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxialPose {
    pub vertices: Vec<Quat>,
    pub source: SourceEdges,
    pub permutation: VertexPerm,
}

impl AxialPose {
    /// Axial pose of a proper Heronian tetrahedron after relabelling its
    /// vertices by `perm`. The altitude of S is taken positive.
    pub fn of_tetra(h: &EdgeHexad, perm: VertexPerm) -> Result<Self> {
        let ph = h.permuted(perm);
        let e = ph.edges();
        let [u, v, w, x, y, z] = [&e[0], &e[1], &e[2], &e[3], &e[4], &e[5]];

        let face = EdgeTriple::new(u.clone(), v.clone(), w.clone())?;
        let d = face.area()?;
        if d.is_zero() {
            return Err(Error::Improper);
        }
        let vol12 = ph.volume12()?;
        if vol12.is_zero() {
            return Err(Error::Improper);
        }

        let ru = Rat::from_integer(u.clone());
        let sq = |a: &Int| Rat::from_integer(a * a);
        let two = Rat::from_integer(Int::from(2));

        let q1 = ru.clone();
        let r1 = (&(&sq(v) - &sq(w)) + &sq(u)) / (&two * &ru);
        let r2 = &two * &d / &ru;
        let s1 = (&(&sq(x) - &sq(y)) + &sq(u)) / (&two * &ru);
        let s2 = (&(&(&(&sq(x) - &sq(z)) + &(&r1 * &r1)) + &(&r2 * &r2)) - &(&two * &(&s1 * &r1)))
            / (&two * &r2);
        // S3 = 3 e / d = (12 e) / (4 d)
        let s3 = Rat::new(vol12, Int::one())
            / Rat::from_integer(int_sqrt(&face.area_sq16()?)?.expect("checked above"));
        debug_assert!(s3.is_positive());

        let one = Rat::one();
        let zero = Rat::zero();
        let vertices = vec![
            Quat::one(),
            quat_from_rats(&[one.clone(), q1, zero.clone(), zero.clone()])?,
            quat_from_rats(&[one.clone(), r1, r2, zero.clone()])?,
            quat_from_rats(&[one, s1, s2, s3])?,
        ];

        let pose = AxialPose {
            vertices,
            source: SourceEdges::Tetra(h.clone()),
            permutation: perm,
        };
        pose.verify()?;
        Ok(pose)
    }

    /// Axial pose of a proper Heronian triangle: P at the origin, Q on the
    /// first axis, R in the first coordinate plane.
    pub fn of_triangle(t: &EdgeTriple) -> Result<Self> {
        let d = t.area()?;
        if d.is_zero() {
            return Err(Error::Improper);
        }
        let ru = Rat::from_integer(t.u.clone());
        let two = Rat::from_integer(Int::from(2));
        let sq = |a: &Int| Rat::from_integer(a * a);

        let r1 = (&(&sq(&t.v) - &sq(&t.w)) + &sq(&t.u)) / (&two * &ru);
        let r2 = &two * &d / &ru;

        let one = Rat::one();
        let zero = Rat::zero();
        let vertices = vec![
            Quat::one(),
            quat_from_rats(&[one.clone(), ru, zero.clone(), zero.clone()])?,
            quat_from_rats(&[one, r1, r2, zero])?,
        ];
        let pose = AxialPose {
            vertices,
            source: SourceEdges::Triangle(t.clone()),
            permutation: VertexPerm::identity(),
        };
        pose.verify()?;
        Ok(pose)
    }

    /// The vertex scalars (coordinate LCDs).
    pub fn lcds(&self) -> Vec<Int> {
        self.vertices.iter().map(|v| v.s.clone()).collect()
    }

    /// Exact distance check of every vertex pair against the permuted
    /// source edges.
    fn verify(&self) -> Result<()> {
        for a in 0..self.vertices.len() {
            for b in 0..a {
                let got = conormal_sq_dist(&self.vertices[a], &self.vertices[b]);
                let want = self.source.edge_sq(self.permutation, a, b);
                if got != Rat::from_integer(want) {
                    return Err(Error::NotHeronian("axial pose failed distance check"));
                }
            }
        }
        Ok(())
    }
}

fn quat_from_rats(c: &[Rat; 4]) -> Result<Quat> {
    Ok(Quat::from_components(primitive_reduce(c)?))
}

/// Squared distance between two projective points after co-normalizing
/// (dividing each by its scalar).
pub fn conormal_sq_dist(a: &Quat, b: &Quat) -> Rat {
    let comp = |num: &Int, den: &Int| Rat::new(num.clone(), den.clone());
    let dp = comp(&a.p, &a.s) - comp(&b.p, &b.s);
    let dq = comp(&a.q, &a.s) - comp(&b.q, &b.s);
    let dr = comp(&a.r, &a.s) - comp(&b.r, &b.s);
    &(&dp * &dp) + &(&dq * &dq) + &(&dr * &dr)
}

/// Every vertex scalar of the pose factors exclusively into primes
/// congruent to 1 mod 4 (so in particular every LCD is odd).
pub fn check_denominators_1mod4(pose: &AxialPose) -> bool {
    pose.lcds().iter().all(all_prime_factors_1mod4)
}
