//! Complete embedding enumeration: the three-squares parameterization,
//! the five-step exhaustive lattice search, rotor recovery via null
//! space, a bounded Z^4 search, and desk-scale enumeration of Heronian
//! triangles and tetrahedra.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::canonical::CanonicalEmbedding;
use crate::embed::LatticeEmbedding;
use crate::error::{Error, Result};
use crate::exact::{is_square64, isqrt64, Int, Rat};
use crate::perm::{edge_index, VertexPerm};
use crate::pose::{AxialPose, SourceEdges};
use crate::quat::Quat;
use crate::simplex::{is_heronian_triangle_i64, EdgeHexad, EdgeTriple};

/// An integer solution of `x^2 + y^2 + z^2 = w^2` with `0 <= x <= y <= z`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ThreeSquaresSolution {
    pub x: Int,
    pub y: Int,
    pub z: Int,
    pub w: Int,
}

/// All solutions of `x^2 + y^2 + z^2 = w^2` with `0 <= x <= y <= z`,
/// deduplicated and sorted.
///
/// Primitive solutions come from the parameterization
/// `(p^2+q^2-u^2-v^2, 2pu+2qv, 2pv-2qu)` with `p^2+q^2+u^2+v^2 = w'`;
/// merging the scaled-up solutions of every divisor `w'` of `w` makes the
/// set complete.
pub fn solve_three_squares(w: &Int) -> Result<Vec<ThreeSquaresSolution>> {
    let w = w
        .to_u64()
        .filter(|&w| w > 0 && w <= 2_000_000)
        .ok_or(Error::TooLarge(
            "three-squares solver handles 0 < w <= 2_000_000",
        ))?;
    let mut set: BTreeSet<[u64; 3]> = BTreeSet::new();
    for d in 1..=w {
        if w % d != 0 {
            continue;
        }
        let scale = w / d;
        for sol in primitive_three_squares(d) {
            set.insert(sol.map(|c| c * scale));
        }
    }
    Ok(set
        .into_iter()
        .map(|[x, y, z]| ThreeSquaresSolution {
            x: Int::from(x),
            y: Int::from(y),
            z: Int::from(z),
            w: Int::from(w),
        })
        .collect())
}

/// Solutions for parameter `w` itself (primitive ones are all present;
/// imprimitive duplicates are harmless).
fn primitive_three_squares(w: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    let pmax = isqrt64(w);
    for p in 1..=pmax {
        let p2 = p * p;
        // smallest q with 2(p^2 + q^2) >= w keeps the first component nonnegative
        let mut q = isqrt64(w.saturating_sub(2 * p2).div_ceil(2));
        while 2 * (p2 + q * q) < w {
            q += 1;
        }
        let qhigh = isqrt64(w - p2);
        while q <= qhigh {
            let q2 = q * q;
            let rest = w - p2 - q2;
            let uhigh = isqrt64((p2 + q2).min(rest));
            for u in 0..=uhigh {
                let v2 = rest - u * u;
                let v = isqrt64(v2);
                if v * v != v2 {
                    continue;
                }
                // p^2 + q^2 + u^2 + v^2 == w holds by construction now
                let x = (p2 + q2) as i64 - (u * u + v2) as i64;
                let y = 2 * (p * u + q * v) as i64;
                let z = 2 * ((p * v) as i64 - (q * u) as i64);
                let mut t = [x.unsigned_abs(), y.unsigned_abs(), z.unsigned_abs()];
                t.sort_unstable();
                debug_assert_eq!(t.iter().map(|c| c * c).sum::<u64>(), w * w);
                out.push(t);
            }
            q += 1;
        }
    }
    out
}

/// All solutions of `x^2 + y^2 = u^2` with `0 <= x <= y`.
fn two_squares(u: u64) -> Vec<[u64; 2]> {
    let mut out = Vec::new();
    let uu = u * u;
    for x in 0..=u {
        let x2 = x * x;
        if 2 * x2 > uu {
            break;
        }
        if let Some(y) = is_square64(uu - x2) {
            out.push([x, y]);
        }
    }
    out
}

/// Expand canonical triples into all signed axis permutations.
fn signed_variants3(cands: &[[i64; 3]]) -> Vec<[i64; 3]> {
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut set = BTreeSet::new();
    for c in cands {
        for perm in perms {
            let base = [c[perm[0]], c[perm[1]], c[perm[2]]];
            for bits in 0..8 {
                let v = [
                    if bits & 1 != 0 { -base[0] } else { base[0] },
                    if bits & 2 != 0 { -base[1] } else { base[1] },
                    if bits & 4 != 0 { -base[2] } else { base[2] },
                ];
                set.insert(v);
            }
        }
    }
    set.into_iter().collect()
}

fn signed_variants2(cands: &[[u64; 2]]) -> Vec<[i64; 2]> {
    let mut set = BTreeSet::new();
    for c in cands {
        for (a, b) in [(c[0] as i64, c[1] as i64), (c[1] as i64, c[0] as i64)] {
            for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                set.insert([a * sa, b * sb]);
            }
        }
    }
    set.into_iter().collect()
}

fn canonical_triples(w: &Int) -> Result<Vec<[i64; 3]>> {
    Ok(solve_three_squares(w)?
        .into_iter()
        .map(|s| {
            [
                s.x.to_i64().unwrap(),
                s.y.to_i64().unwrap(),
                s.z.to_i64().unwrap(),
            ]
        })
        .collect())
}

/// Exact kernel of an integer matrix with 4 columns. `Ok(None)` for a
/// trivial kernel, `Ok(Some(x))` with a primitive integer generator for a
/// one-dimensional kernel, `Err(DegenerateFaces)` for anything larger.
#[allow(clippy::needless_range_loop)]
fn kernel_dim1(rows: &[[Int; 4]]) -> Result<Option<Quat>> {
    let mut m: Vec<[Rat; 4]> = rows
        .iter()
        .map(|r| std::array::from_fn(|j| Rat::from_integer(r[j].clone())))
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..4 {
        let Some(pr) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let inv = m[row][col].clone();
        for j in col..4 {
            m[row][j] = &m[row][j] / &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..4 {
                    m[i][j] = &m[i][j] - &(&f * &m[row][j]);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    let dim = 4 - pivot_cols.len();
    match dim {
        0 => Ok(None),
        1 => {
            let free_col = (0..4).find(|c| !pivot_cols.contains(c)).unwrap();
            let mut sol = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
            sol[free_col] = Rat::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                sol[pc] = -m[i][free_col].clone();
            }
            // primitive integer generator, first nonzero component positive
            let l = crate::exact::lcd(&sol);
            let ints: Vec<Int> = sol
                .iter()
                .map(|x| (x * Rat::from_integer(l.clone())).to_integer())
                .collect();
            let mut ints = crate::exact::reduce_int_vec(&ints);
            if ints
                .iter()
                .find(|c| !c.is_zero())
                .is_some_and(|c| c.is_negative())
            {
                for c in ints.iter_mut() {
                    *c = -&*c;
                }
            }
            Ok(Some(Quat::from_components(ints)))
        }
        _ => Err(Error::DegenerateFaces),
    }
}

/// Matrix of `X -> a X` acting on components `(s,p,q,r)`.
fn left_mul_matrix(a: &Quat) -> [[Int; 4]; 4] {
    let (s, p, q, r) = (&a.s, &a.p, &a.q, &a.r);
    [
        [s.clone(), -p, -q, -r],
        [p.clone(), s.clone(), -r, q.clone()],
        [q.clone(), r.clone(), s.clone(), -p],
        [r.clone(), -q, p.clone(), s.clone()],
    ]
}

/// Matrix of `X -> X b`.
fn right_mul_matrix(b: &Quat) -> [[Int; 4]; 4] {
    let (s, p, q, r) = (&b.s, &b.p, &b.q, &b.r);
    [
        [s.clone(), -p, -q, -r],
        [p.clone(), s.clone(), r.clone(), -q],
        [q.clone(), -r, s.clone(), p.clone()],
        [r.clone(), q.clone(), -p, s.clone()],
    ]
}

/// Solve `a X = X b` for the corresponding conormalized vectors of two
/// origin-sharing congruent faces: 8 homogeneous equations in the 4
/// components of the rotor. Returns a primitive generator of the null
/// space when it is one-dimensional and `None` when the faces are
/// incongruent; collinear faces leave a bigger null space and are an
/// error.
pub fn rotor_between_faces(axial: &[Quat; 3], target: &[Quat; 3]) -> Result<Option<Quat>> {
    for t in [&axial[0], &target[0]] {
        assert!(
            t.p.is_zero() && t.q.is_zero() && t.r.is_zero(),
            "face triples must share the origin as first point"
        );
    }
    let mut rows: Vec<[Int; 4]> = Vec::with_capacity(8);
    for i in 1..=2 {
        // scale the pair's equation by the axial scalar to stay integral
        let a = Quat::new(
            Int::zero(),
            axial[i].p.clone(),
            axial[i].q.clone(),
            axial[i].r.clone(),
        );
        let b = Quat::new(
            Int::zero(),
            &target[i].p * &axial[i].s,
            &target[i].q * &axial[i].s,
            &target[i].r * &axial[i].s,
        );
        let l = left_mul_matrix(&a);
        let r = right_mul_matrix(&b);
        for k in 0..4 {
            rows.push(std::array::from_fn(|j| &l[k][j] - &r[k][j]));
        }
    }
    kernel_dim1(&rows)
}

/// Result of an exhaustive embedding search: every essentially distinct
/// embedding, as canonical forms plus one representative per strong form.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub strong_forms: BTreeSet<CanonicalEmbedding>,
    pub weak_forms: BTreeSet<CanonicalEmbedding>,
    pub representatives: Vec<LatticeEmbedding>,
}

/// The set of *all* essentially distinct lattice embeddings of a proper
/// Heronian tetrahedron, found by scanning lattice placements of the
/// first face and recovering the rotor:
///
/// 1. pose axially (both signs of the S altitude),
/// 2. generate complete three-squares solutions for |PQ| and |PR|,
/// 3. scan placements of Q (canonical) and R (all variants), keeping
///    pairs at distance |QR|,
/// 4. solve for the rotor taking the posed face there,
/// 5. keep the placements where either S lands on the lattice.
///
/// `budget` caps the number of (Q, R) pairs scanned; exceeding it is the
/// typed [`Error::BudgetExhausted`] outcome.
pub fn exhaustive_embeddings(h: &EdgeHexad, budget: Option<u64>) -> Result<SearchOutcome> {
    let pose = AxialPose::of_tetra(h, VertexPerm::identity())?;
    let s_plus = pose.vertices[3].clone();
    let s_minus = Quat::new(
        s_plus.s.clone(),
        s_plus.p.clone(),
        s_plus.q.clone(),
        -&s_plus.r,
    );

    let e = h.edges();
    let q_cands = canonical_triples(&e[0])?;
    let r_all = signed_variants3(&canonical_triples(&e[1])?);
    let w2 = (&e[2] * &e[2]).to_i64().ok_or(Error::TooLarge(
        "edge squares must fit in 64 bits for the lattice scan",
    ))?;

    let needed = q_cands.len() as u64 * r_all.len() as u64;
    if let Some(b) = budget {
        if needed > b {
            return Err(Error::BudgetExhausted { needed, budget: b });
        }
    }

    let axial_face: [Quat; 3] = [
        pose.vertices[0].clone(),
        pose.vertices[1].clone(),
        pose.vertices[2].clone(),
    ];

    let per_q: Vec<Vec<LatticeEmbedding>> = q_cands
        .par_iter()
        .map(|q| {
            let mut found = Vec::new();
            for r in &r_all {
                let dx = q[0] - r[0];
                let dy = q[1] - r[1];
                let dz = q[2] - r[2];
                if dx * dx + dy * dy + dz * dz != w2 {
                    continue;
                }
                let target: [Quat; 3] = [
                    Quat::one(),
                    Quat::of(1, q[0], q[1], q[2]),
                    Quat::of(1, r[0], r[1], r[2]),
                ];
                let Some(x) = rotor_between_faces(&axial_face, &target)
                    .expect("proper face cannot be collinear")
                else {
                    continue;
                };
                for s_pose in [&s_plus, &s_minus] {
                    let s = crate::embed::rotate_point(&x, s_pose).expect("nonzero rotor");
                    if !s.s.is_one() {
                        continue;
                    }
                    let emb = LatticeEmbedding {
                        source: SourceEdges::Tetra(h.clone()),
                        permutation: VertexPerm::identity(),
                        rotors: vec![x.clone()],
                        vertices: vec![target[0].clone(), target[1].clone(), target[2].clone(), s],
                    };
                    assert!(emb.verify(), "rotor left a distance broken");
                    found.push(emb);
                }
            }
            found
        })
        .collect();

    Ok(collect_outcome(per_q.into_iter().flatten()))
}

/// All essentially distinct Z^2 embeddings of a proper Heronian triangle.
/// For proper triangles the result has exactly one strong form.
pub fn exhaustive_triangle_embeddings(t: &EdgeTriple) -> Result<SearchOutcome> {
    AxialPose::of_triangle(t)?; // proper Heronian check
    let u = t.u.to_u64().ok_or(Error::TooLarge("triangle scan"))?;
    let v = t.v.to_u64().ok_or(Error::TooLarge("triangle scan"))?;
    let w2 = (&t.w * &t.w)
        .to_i64()
        .ok_or(Error::TooLarge("triangle scan"))?;

    let q_cands: Vec<[u64; 2]> = two_squares(u);
    let r_all = signed_variants2(&two_squares(v));

    let mut found = Vec::new();
    for q in &q_cands {
        let (qx, qy) = (q[0] as i64, q[1] as i64);
        for r in &r_all {
            let dx = qx - r[0];
            let dy = qy - r[1];
            if dx * dx + dy * dy != w2 {
                continue;
            }
            let emb = LatticeEmbedding {
                source: SourceEdges::Triangle(t.clone()),
                permutation: VertexPerm::identity(),
                rotors: Vec::new(),
                vertices: vec![
                    Quat::one(),
                    Quat::of(1, qx, qy, 0),
                    Quat::of(1, r[0], r[1], 0),
                ],
            };
            debug_assert!(emb.verify());
            found.push(emb);
        }
    }
    Ok(collect_outcome(found.into_iter()))
}

fn collect_outcome(embeddings: impl Iterator<Item = LatticeEmbedding>) -> SearchOutcome {
    let mut strong_forms = BTreeSet::new();
    let mut weak_forms = BTreeSet::new();
    let mut reps: BTreeMap<CanonicalEmbedding, LatticeEmbedding> = BTreeMap::new();
    for emb in embeddings {
        let strong = emb.strong_canonical();
        weak_forms.insert(emb.weak_canonical());
        match reps.get(&strong) {
            Some(old) if old.vertices <= emb.vertices => {}
            _ => {
                reps.insert(strong.clone(), emb);
            }
        }
        strong_forms.insert(strong);
    }
    SearchOutcome {
        strong_forms,
        weak_forms,
        representatives: reps.into_values().collect(),
    }
}

/// Squared edge lengths of a free pentatope (5 vertices) in the sequential
/// order `[QP,RP,RQ,SP,SQ,SR,TP,TQ,TR,TS]`. Zero entries are allowed so
/// degenerate specifications can be probed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PentatopeSpec {
    pub sq: [Int; 10],
}

impl PentatopeSpec {
    pub fn new(sq: [Int; 10]) -> Result<Self> {
        if sq.iter().any(|x| x.is_negative()) {
            return Err(Error::InvalidEdge);
        }
        Ok(PentatopeSpec { sq })
    }

    pub fn of(sq: [i64; 10]) -> Self {
        PentatopeSpec::new(sq.map(Int::from)).unwrap()
    }

    /// Bordered Cayley-Menger determinant of the five points; equals
    /// `(-1)^5 2^4 (4!)^2 V^2 = -9216 V^2` for content `V`.
    pub fn cm_det(&self) -> Int {
        crate::simplex::cayley_menger_det(5, &self.sq)
    }
}

/// Brute-force search for congruent placements of the pentatope in Z^4
/// with the first vertex at the origin and every coordinate bounded by
/// `bound` in magnitude. Complete whenever `bound` is at least the
/// maximum edge length, since every vertex lies within one edge length of
/// the first.
pub fn search_z4(spec: &PentatopeSpec, bound: i64) -> Result<Vec<[[i64; 4]; 5]>> {
    if !(0..=8).contains(&bound) {
        return Err(Error::TooLarge("z4 search bound must be in 0..=8"));
    }
    // completeness: bound^2 must reach the largest squared edge
    let max_sq = spec.sq.iter().max().unwrap();
    if Int::from(bound * bound) < *max_sq {
        return Err(Error::BoundTooSmall { bound });
    }
    let sq: Vec<i64> = spec
        .sq
        .iter()
        .map(|x| x.to_i64().expect("bounded spec"))
        .collect();

    let mut out = Vec::new();
    let mut placed: Vec<[i64; 4]> = vec![[0, 0, 0, 0]];
    place_next(&sq, bound, &mut placed, &mut out);
    Ok(out)
}

fn place_next(sq: &[i64], bound: i64, placed: &mut Vec<[i64; 4]>, out: &mut Vec<[[i64; 4]; 5]>) {
    let k = placed.len();
    if k == 5 {
        out.push(std::array::from_fn(|i| placed[i]));
        return;
    }
    let mut c = [-bound; 4];
    loop {
        let ok = (0..k).all(|j| {
            let d: i64 = (0..4).map(|a| (c[a] - placed[j][a]).pow(2)).sum();
            d == sq[edge_index(k, j)]
        });
        if ok {
            placed.push(c);
            place_next(sq, bound, placed, out);
            placed.pop();
        }
        // odometer over the box
        let mut a = 0;
        loop {
            if a == 4 {
                return;
            }
            c[a] += 1;
            if c[a] <= bound {
                break;
            }
            c[a] = -bound;
            a += 1;
        }
    }
}

/// All proper Heronian triangles with diameter at most `max_d`, in
/// canonical descending edge order `u >= v >= w`, sorted ascending. The
/// order (diameter first, then lexicographic) fixes what "the first N
/// triangles" means.
pub fn enumerate_heronian_triangles(max_d: u64, primitive_only: bool) -> Result<Vec<EdgeTriple>> {
    if max_d > 10_000 {
        return Err(Error::TooLarge(
            "triangle enumeration max diameter is 10000",
        ));
    }
    let mut out = Vec::new();
    for a in 1..=max_d as i64 {
        for b in 1..=a {
            for c in (a - b + 1)..=b {
                if primitive_only && gcd3(a, b, c) != 1 {
                    continue;
                }
                if is_heronian_triangle_i64(a, b, c) {
                    out.push(EdgeTriple::of(a, b, c));
                }
            }
        }
    }
    Ok(out)
}

/// All proper Heronian tetrahedra with diameter at most `max_d`, as
/// canonical hexads, sorted ascending.
///
/// Tetrahedra are assembled by gluing two Heronian triangles over the
/// longest edge `u = QP` (faces PQR and PQS), scanning the remaining edge
/// `z = SR`, and keeping assemblies whose other two faces are Heronian
/// and whose Cayley-Menger volume is rational and positive. Every proper
/// Heronian tetrahedron shows up this way when `u` is its diameter.
pub fn enumerate_heronian_tetrahedra(max_d: u64, primitive_only: bool) -> Result<Vec<EdgeHexad>> {
    if max_d > 5_000 {
        return Err(Error::TooLarge(
            "tetrahedron enumeration max diameter is 5000",
        ));
    }
    let tris = enumerate_heronian_triangles(max_d, false)?;
    // ordered (v, w) pairs completing a Heronian face over each edge u
    let mut by_edge: Vec<Vec<(i64, i64)>> = vec![Vec::new(); max_d as usize + 1];
    for t in &tris {
        let a = t.u.to_i64().unwrap();
        let b = t.v.to_i64().unwrap();
        let c = t.w.to_i64().unwrap();
        let mut pairs = [
            (a, (b, c)),
            (a, (c, b)),
            (b, (a, c)),
            (b, (c, a)),
            (c, (a, b)),
            (c, (b, a)),
        ];
        pairs.sort_unstable();
        let mut last = None;
        for (e, (o1, o2)) in pairs {
            if last == Some((e, (o1, o2))) {
                continue;
            }
            last = Some((e, (o1, o2)));
            by_edge[e as usize].push((o1, o2));
        }
    }

    let hexads: Vec<BTreeSet<EdgeHexad>> = (1..=max_d as i64)
        .into_par_iter()
        .map(|u| {
            let mut found = BTreeSet::new();
            let pairs: Vec<&(i64, i64)> = by_edge[u as usize]
                .iter()
                .filter(|(v, w)| *v <= u && *w <= u)
                .collect();
            for &&(v, w) in &pairs {
                for &&(x, y) in &pairs {
                    let zlo = ((v - x).abs().max((w - y).abs())) + 1;
                    let zhi = (v + x - 1).min(w + y - 1).min(u);
                    for z in zlo..=zhi {
                        if !is_heronian_triangle_i64(v, x, z) || !is_heronian_triangle_i64(w, y, z)
                        {
                            continue;
                        }
                        if primitive_only && gcd6(u, v, w, x, y, z) != 1 {
                            continue;
                        }
                        let h = EdgeHexad::of([u, v, w, x, y, z]);
                        if h.volume12().map(|t| !t.is_zero()).unwrap_or(false) {
                            found.insert(h.canonical().0);
                        }
                    }
                }
            }
            found
        })
        .collect();

    let mut set = BTreeSet::new();
    for s in hexads {
        set.extend(s);
    }
    Ok(set.into_iter().collect())
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    num::integer::gcd(num::integer::gcd(a, b), c)
}

fn gcd6(a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> i64 {
    num::integer::gcd(gcd3(a, b, c), gcd3(d, e, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn brute_three_squares(w: u64) -> Vec<[u64; 3]> {
        let mut out = Vec::new();
        for x in 0..=w {
            for y in x..=w {
                let rest = w * w - x * x;
                if y * y > rest {
                    break;
                }
                if let Some(z) = is_square64(rest - y * y) {
                    if z >= y {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn as_raw(sols: &[ThreeSquaresSolution]) -> Vec<[u64; 3]> {
        sols.iter()
            .map(|s| {
                [
                    s.x.to_u64().unwrap(),
                    s.y.to_u64().unwrap(),
                    s.z.to_u64().unwrap(),
                ]
            })
            .collect()
    }

    #[test]
    fn three_squares_small_cases() {
        assert_eq!(
            as_raw(&solve_three_squares(&int(1)).unwrap()),
            vec![[0, 0, 1]]
        );
        let w3 = as_raw(&solve_three_squares(&int(3)).unwrap());
        assert!(w3.contains(&[1, 2, 2]));
        assert_eq!(w3, brute_three_squares(3));
        assert_eq!(
            as_raw(&solve_three_squares(&int(25)).unwrap()),
            brute_three_squares(25)
        );
    }

    #[test]
    fn three_squares_complete_to_60() {
        for w in 1..=60 {
            assert_eq!(
                as_raw(&solve_three_squares(&int(w as i64)).unwrap()),
                brute_three_squares(w),
                "w = {w}"
            );
        }
    }

    #[test]
    fn rotor_identity_and_incongruent() {
        let axial = [Quat::one(), Quat::of(1, 3, 0, 0), Quat::of(1, 0, 4, 0)];
        let x = rotor_between_faces(&axial, &axial).unwrap().unwrap();
        assert_eq!(x, Quat::one());

        let target = [Quat::one(), Quat::of(1, 3, 0, 0), Quat::of(1, 0, 5, 0)];
        assert_eq!(rotor_between_faces(&axial, &target).unwrap(), None);
    }

    #[test]
    fn rotor_collinear_is_degenerate() {
        let axial = [Quat::one(), Quat::of(1, 1, 0, 0), Quat::of(1, 2, 0, 0)];
        assert_eq!(
            rotor_between_faces(&axial, &axial),
            Err(Error::DegenerateFaces)
        );
    }

    #[test]
    fn rotor_single_shot_case() {
        // pose face of the isohedral worked example against its published
        // lattice image: the rotor is proportional to [0,-1,-2,0]
        let axial = [
            Quat::one(),
            Quat::of(1, 6625, 0, 0),
            Quat::of(5, 28224, 31668, 0),
        ];
        let target = [
            Quat::one(),
            Quat::of(1, -3975, 5300, 0),
            Quat::of(1, 1680, 8316, 0),
        ];
        let x = rotor_between_faces(&axial, &target).unwrap().unwrap();
        assert_eq!(x, Quat::of(0, 1, 2, 0)); // sign-normalized [0,-1,-2,0]
    }

    #[test]
    fn triangle_search_examples() {
        let out = exhaustive_triangle_embeddings(&EdgeTriple::of(3, 4, 5)).unwrap();
        assert_eq!(out.strong_forms.len(), 1);

        let out = exhaustive_triangle_embeddings(&EdgeTriple::of(30, 29, 5)).unwrap();
        assert_eq!(out.strong_forms.len(), 1);
        let via_gcd = crate::embed::embed_triangle(&EdgeTriple::of(30, 29, 5)).unwrap();
        assert_eq!(
            out.strong_forms.first().unwrap(),
            &via_gcd.strong_canonical()
        );

        let out = exhaustive_triangle_embeddings(&EdgeTriple::of(5, 5, 6)).unwrap();
        assert_eq!(out.strong_forms.len(), 1);
    }

    #[test]
    fn z4_search_finds_the_unit_pentatope_witness() {
        // the pentatope with squared edges (1,2,3,2,3,2,1,2,1,1) is proper
        // with volume 1/24 (cm_det = -9216 / 576 = -16) and DOES embed:
        // P=e1, Q=e1+e2, R=e3, S=e4, T=0 realizes all ten squared
        // distances, checkable by hand
        let spec = PentatopeSpec::of([1, 2, 3, 2, 3, 2, 1, 2, 1, 1]);
        assert_eq!(spec.cm_det(), int(-16));
        let witness: [[i64; 4]; 5] = [
            [1, 0, 0, 0],
            [1, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [0, 0, 0, 0],
        ];
        for a in 1..5 {
            for b in 0..a {
                let d: i64 = (0..4).map(|i| (witness[a][i] - witness[b][i]).pow(2)).sum();
                assert_eq!(Int::from(d), spec.sq[edge_index(a, b)]);
            }
        }
        let found = search_z4(&spec, 2).unwrap();
        assert!(!found.is_empty());
        // the search reports translated copies; recenter on the last vertex
        let recentered = |e: &[[i64; 4]; 5]| -> Vec<[i64; 4]> {
            e.iter()
                .map(|p| std::array::from_fn(|i| p[i] - e[4][i]))
                .collect()
        };
        assert!(found.iter().any(|e| recentered(e) == witness.to_vec()));
    }

    #[test]
    fn z4_unit_distance_pentatope_has_no_embedding() {
        // four points at unit distance from a fifth, pairwise squared
        // distance 2 except one pair at 3: two unit lattice vectors are
        // never at squared distance 3, so no embedding exists
        let spec = PentatopeSpec::of([2, 2, 3, 2, 2, 2, 1, 1, 1, 1]);
        assert_eq!(search_z4(&spec, 2).unwrap(), Vec::<[[i64; 4]; 5]>::new());
    }

    #[test]
    fn z4_corner_and_degenerate_cases() {
        // a corner simplex of the unit 4-cube embeds: vertices 0, e1..e4
        // with squared distances 1 to the origin and 2 between the others
        let corner = PentatopeSpec::of([1, 1, 2, 1, 2, 2, 1, 2, 2, 2]);
        let found = search_z4(&corner, 2).unwrap();
        assert!(!found.is_empty());

        // degenerate: two coincident vertices are allowed
        let degen = PentatopeSpec::of([0, 1, 1, 1, 1, 2, 1, 1, 2, 2]);
        let found = search_z4(&degen, 2).unwrap();
        assert!(found.iter().all(|e| e[0] == e[1]));
        assert!(!found.is_empty());

        let spec = PentatopeSpec::of([1, 2, 3, 2, 3, 2, 1, 2, 1, 1]);
        assert_eq!(search_z4(&spec, 1), Err(Error::BoundTooSmall { bound: 1 }));
    }

    #[test]
    fn triangle_enumeration_small() {
        // brute force over all triples up to 5: only (5,4,3) is Heronian
        let tris = enumerate_heronian_triangles(5, false).unwrap();
        assert_eq!(tris, vec![EdgeTriple::of(5, 4, 3)]);
    }

    #[test]
    fn search_rediscovers_every_gcd_embedding_on_the_small_corpus() {
        // GCD embeddings overlooked by an allegedly complete search are a
        // known failure mode; containment is the regression test
        for h in enumerate_heronian_tetrahedra(300, true).unwrap() {
            let fam = crate::embed::gcd_family(&h).unwrap();
            let out = exhaustive_embeddings(&h, None).unwrap();
            assert!(fam.strong_forms.is_subset(&out.strong_forms), "case {h}");
            for rep in &out.representatives {
                assert!(rep.verify());
            }
        }
    }

    #[test]
    fn tetra_enumeration_includes_first_cases() {
        let hexads = enumerate_heronian_tetrahedra(160, true).unwrap();
        let h117 = EdgeHexad::of([117, 84, 51, 80, 53, 52]).canonical().0;
        let h160 = EdgeHexad::of([160, 153, 25, 120, 56, 39]).canonical().0;
        assert!(hexads.contains(&h117));
        assert!(hexads.contains(&h160));
        for h in &hexads {
            assert!(h.is_heronian() && h.is_proper() && h.is_primitive());
            assert_eq!(&h.canonical().0, h);
        }
    }
}
