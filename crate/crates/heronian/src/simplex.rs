//! The free simplex data model: edge triples and hexads, Hero and
//! Cayley-Menger content, Heronian validation, canonical hexads, symmetry
//! classification and the half-angle cotangent.

use std::fmt;

use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int_sqrt, vec_gcd, Int, Rat};
use crate::perm::{edge_index, VertexPerm};

/// Integer edge lengths `(u, v, w) = (QP, RP, RQ)` of a free triangle.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeTriple {
    pub u: Int,
    pub v: Int,
    pub w: Int,
}

impl EdgeTriple {
    pub fn new(u: Int, v: Int, w: Int) -> Result<Self> {
        if !u.is_positive() || !v.is_positive() || !w.is_positive() {
            return Err(Error::InvalidEdge);
        }
        Ok(EdgeTriple { u, v, w })
    }

    pub fn of(u: i64, v: i64, w: i64) -> Self {
        EdgeTriple::new(Int::from(u), Int::from(v), Int::from(w)).unwrap()
    }

    pub fn edges(&self) -> [&Int; 3] {
        [&self.u, &self.v, &self.w]
    }

    /// The Hero product `(u+v+w)(u+v-w)(u-v+w)(-u+v+w)`, which equals
    /// `(4d)^2` when the triangle inequality holds.
    fn hero_product(&self) -> Int {
        let (u, v, w) = (&self.u, &self.v, &self.w);
        (u + v + w) * ((u + v) - w) * ((u - v) + w) * ((v + w) - u)
    }

    /// `(4d)^2` with `d` the area. The triangle is rational-area iff the
    /// result is a perfect square, improper iff it is zero. Strict
    /// triangle-inequality violations are rejected: every consumer in this
    /// crate needs real geometry.
    pub fn area_sq16(&self) -> Result<Int> {
        let h = self.hero_product();
        if h.is_negative() {
            return Err(Error::NotATriangle);
        }
        Ok(h)
    }

    /// `(4d)^2` via the bordered Cayley-Menger determinant; agrees with
    /// [`EdgeTriple::area_sq16`] on every input. The raw bordered
    /// determinant carries the sign `(-1)^(n+1)`, negative for n = 2, so
    /// it is negated here.
    pub fn cm_area_sq(&self) -> Int {
        let sq: Vec<Int> = [&self.u, &self.v, &self.w]
            .iter()
            .map(|e| *e * *e)
            .collect();
        -cayley_menger_det(3, &sq)
    }

    /// Quadruple area as an exact rational: `d = sqrt((4d)^2) / 4`.
    pub(crate) fn area(&self) -> Result<Rat> {
        let s = int_sqrt(&self.area_sq16()?)?.ok_or(Error::NotHeronian("irrational face area"))?;
        Ok(Rat::new(s, Int::from(4)))
    }

    pub fn is_heronian(&self) -> bool {
        match self.area_sq16() {
            Ok(h) => matches!(int_sqrt(&h), Ok(Some(_))),
            Err(_) => false,
        }
    }

    pub fn is_proper(&self) -> bool {
        self.hero_product().is_positive()
    }

    /// `cot(p/2) = (s - opposite) * s / d` at the given vertex (0 = P,
    /// 1 = Q, 2 = R), with `s` the semiperimeter. Exact and positive for
    /// proper Heronian triangles.
    pub fn cot_half_angle(&self, vertex: usize) -> Result<Rat> {
        assert!(vertex < 3);
        let d = self.area()?;
        if d.is_zero() {
            return Err(Error::Improper);
        }
        let s = Rat::new(&self.u + &self.v + &self.w, Int::from(2));
        // edge opposite P is RQ = w, opposite Q is RP = v, opposite R is QP = u
        let opposite = match vertex {
            0 => &self.w,
            1 => &self.v,
            _ => &self.u,
        };
        let opp = Rat::from_integer(opposite.clone());
        Ok((&s - &opp) * &s / d)
    }
}

impl fmt::Display for EdgeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.u, self.v, self.w)
    }
}

/// Integer edge lengths of a free tetrahedron in the sequential order
/// `[QP, RP, RQ, SP, SQ, SR]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeHexad {
    e: [Int; 6],
}

impl EdgeHexad {
    pub fn new(e: [Int; 6]) -> Result<Self> {
        if e.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidEdge);
        }
        Ok(EdgeHexad { e })
    }

    pub fn of(e: [i64; 6]) -> Self {
        EdgeHexad::new(e.map(Int::from)).unwrap()
    }

    pub fn edges(&self) -> &[Int; 6] {
        &self.e
    }

    pub fn edge(&self, a: usize, b: usize) -> &Int {
        &self.e[edge_index(a, b)]
    }

    /// Largest edge length (the diameter).
    pub fn diameter(&self) -> &Int {
        self.e.iter().max().unwrap()
    }

    pub fn is_primitive(&self) -> bool {
        vec_gcd(&self.e).is_one()
    }

    /// Relabel vertices: entry `(a, b)` of the result is edge
    /// `(perm(a), perm(b))` of `self`.
    pub fn permuted(&self, perm: VertexPerm) -> EdgeHexad {
        let mut e: [Int; 6] = self.e.clone();
        for a in 0..4 {
            for b in 0..a {
                e[edge_index(a, b)] = self
                    .edge(perm.source_of_slot(a), perm.source_of_slot(b))
                    .clone();
            }
        }
        EdgeHexad { e }
    }

    /// The four face triples (PQR, PQS, PRS, QRS).
    pub fn faces(&self) -> [EdgeTriple; 4] {
        let f = |a: usize, b: usize, c: usize| EdgeTriple {
            // edges of face (x,y,z): (y,x), (z,x), (z,y)
            u: self.edge(b, a).clone(),
            v: self.edge(c, a).clone(),
            w: self.edge(c, b).clone(),
        };
        [f(0, 1, 2), f(0, 1, 3), f(0, 2, 3), f(1, 2, 3)]
    }

    /// The value `D` of the bordered 5x5 Cayley-Menger determinant, with
    /// `D = 2 (12 e)^2` for realizable tetrahedra of volume `e`. Volume is
    /// rational iff `D >= 0`, `D` even and `D/2` a perfect square; the
    /// tetrahedron is proper iff `D > 0`.
    pub fn cm_volume_det(&self) -> Int {
        let sq: Vec<Int> = self.e.iter().map(|e| e * e).collect();
        cayley_menger_det(4, &sq)
    }

    /// Twelve times the volume, exact, when it is rational.
    pub(crate) fn volume12(&self) -> Result<Int> {
        let d = self.cm_volume_det();
        if d.is_negative() {
            return Err(Error::NotHeronian("unrealizable edge hexad"));
        }
        if d.is_odd() {
            return Err(Error::NotHeronian("irrational volume"));
        }
        let half: Int = d / 2;
        int_sqrt(&half)?.ok_or(Error::NotHeronian("irrational volume"))
    }

    /// Rational faces and rational volume. Properness is not required
    /// here; see [`EdgeHexad::is_proper`].
    pub fn is_heronian(&self) -> bool {
        self.faces().iter().all(|f| f.is_heronian()) && self.volume12().is_ok()
    }

    pub fn is_proper(&self) -> bool {
        self.cm_volume_det().is_positive()
    }

    /// Canonical form: over all 24 vertex permutations, the hexad that is
    /// lexicographically greatest read most-significant-first, together
    /// with one permutation achieving it. Plain enumeration; idempotent
    /// because the identity wins ties.
    pub fn canonical(&self) -> (EdgeHexad, VertexPerm) {
        let mut best = self.clone();
        let mut best_perm = VertexPerm::identity();
        for perm in VertexPerm::all() {
            let cand = self.permuted(perm);
            if cand.e > best.e {
                best = cand;
                best_perm = perm;
            }
        }
        (best, best_perm)
    }

    /// Vertex permutations fixing the hexad.
    pub fn stabilizer(&self) -> Vec<VertexPerm> {
        VertexPerm::all()
            .into_iter()
            .filter(|&p| self.permuted(p) == *self)
            .collect()
    }

    /// Classify the equal-edge structure. Expects a canonical hexad, but
    /// the classification is permutation-invariant anyway.
    pub fn symmetry(&self) -> SymmetryClass {
        let stab = self.stabilizer();
        let has_transposition = stab.iter().any(|p| p.is_transposition());
        let tag = match (stab.len(), has_transposition) {
            (1, _) => SymmetryTag::Scalene,
            (2, true) => SymmetryTag::SemiIsosceles,
            (2, false) => SymmetryTag::SemiIsohedral,
            (4, true) => SymmetryTag::Isosceles,
            (4, false) => SymmetryTag::Isohedral,
            (6, _) => SymmetryTag::Equilateral,
            (8, _) => SymmetryTag::IsohedralIsosceles,
            (24, _) => SymmetryTag::Regular,
            (n, _) => unreachable!("impossible hexad stabilizer order {n}"),
        };
        SymmetryClass {
            tag,
            isomorph_count: stab.len() as u32,
        }
    }
}

impl fmt::Display for EdgeHexad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.e.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymmetryTag {
    Scalene,
    SemiIsosceles,
    Isosceles,
    SemiIsohedral,
    Isohedral,
    IsohedralIsosceles,
    Equilateral,
    Regular,
}

impl fmt::Display for SymmetryTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SymmetryTag::Scalene => "scalene",
            SymmetryTag::SemiIsosceles => "semi-isosceles",
            SymmetryTag::Isosceles => "isosceles",
            SymmetryTag::SemiIsohedral => "semi-isohedral",
            SymmetryTag::Isohedral => "isohedral",
            SymmetryTag::IsohedralIsosceles => "isohedral-isosceles",
            SymmetryTag::Equilateral => "equilateral",
            SymmetryTag::Regular => "regular",
        };
        f.write_str(name)
    }
}

/// Symmetry class of a hexad: equal-edge pattern plus the number of vertex
/// permutations fixing it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SymmetryClass {
    pub tag: SymmetryTag,
    pub isomorph_count: u32,
}

/// Bordered Cayley-Menger determinant for `points` points whose squared
/// distances are listed in sequential order `[d10, d20, d21, d30, ...]`.
///
/// For n = 2 (three points) the value is `(4 d)^2`; for n = 3 it is
/// `2 (12 e)^2`; for n = 4 it is `-16 (24 V)^2 / 24^2`-scaled, i.e.
/// `(-1)^(n+1) 2^n (n!)^2 V^2` in general.
#[allow(clippy::needless_range_loop)]
pub fn cayley_menger_det(points: usize, sq_dists: &[Int]) -> Int {
    assert_eq!(sq_dists.len(), points * (points - 1) / 2);
    let n = points + 1;
    let mut m = vec![vec![Int::zero(); n]; n];
    for j in 1..n {
        m[0][j] = Int::one();
        m[j][0] = Int::one();
    }
    for a in 1..points {
        for b in 0..a {
            let d = sq_dists[edge_index(a, b)].clone();
            m[a + 1][b + 1] = d.clone();
            m[b + 1][a + 1] = d;
        }
    }
    det_bareiss(m)
}

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting.
#[allow(clippy::needless_range_loop)]
fn det_bareiss(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
        }
        for i in k + 1..n {
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Fast Hero product for the enumeration inner loops. Requires the edges
/// to be at most ~50000 so the product fits in u64 after the sign check.
pub(crate) fn hero_product_i64(a: i64, b: i64, c: i64) -> i64 {
    (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c)
}

pub(crate) fn is_heronian_triangle_i64(a: i64, b: i64, c: i64) -> bool {
    let h = hero_product_i64(a, b, c);
    h > 0 && crate::exact::is_square64(h as u64).is_some()
}
