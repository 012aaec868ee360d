//! Vertex permutations of a tetrahedron and the sequential edge indexing
//! shared by hexads, poses and embeddings.

use std::fmt;

use crate::error::{Error, Result};

pub const VERTEX_NAMES: [char; 4] = ['P', 'Q', 'R', 'S'];

/// Index of edge `(a, b)` in the sequential convention
/// `[QP, RP, RQ, SP, SQ, SR]` (vertices numbered P=0 .. S=3).
pub fn edge_index(a: usize, b: usize) -> usize {
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    debug_assert!(hi > lo && hi <= 4);
    hi * (hi - 1) / 2 + lo
}

/// A relabelling of tetrahedron vertices. `map[slot] = v` means pose slot
/// `slot` plays the role of source vertex `v`; "QRPS" sends slots
/// (P,Q,R,S) to source vertices (Q,R,P,S).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexPerm {
    map: [usize; 4],
}

impl VertexPerm {
    pub fn identity() -> Self {
        VertexPerm { map: [0, 1, 2, 3] }
    }

    pub fn from_map(map: [usize; 4]) -> Self {
        let mut seen = [false; 4];
        for &v in &map {
            assert!(v < 4 && !seen[v], "not a permutation: {map:?}");
            seen[v] = true;
        }
        VertexPerm { map }
    }

    /// Source vertex played by pose slot `slot`.
    pub fn source_of_slot(&self, slot: usize) -> usize {
        self.map[slot]
    }

    /// Pose slot playing source vertex `v`.
    pub fn slot_of_source(&self, v: usize) -> usize {
        self.map.iter().position(|&m| m == v).unwrap()
    }

    /// All 24 permutations in lexicographic order of their maps; the
    /// identity comes first.
    pub fn all() -> Vec<VertexPerm> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let map = [a, b, c, d];
                        let mut seen = [false; 4];
                        if map.iter().all(|&v| !std::mem::replace(&mut seen[v], true)) {
                            out.push(VertexPerm { map });
                        }
                    }
                }
            }
        }
        out
    }

    /// Number of transpositions mod 2; `true` for an exchange of exactly
    /// two vertices.
    pub fn is_transposition(&self) -> bool {
        self.map
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i != v)
            .count()
            == 2
    }

    pub fn parse(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.trim().to_uppercase().chars().collect();
        if chars.len() != 4 {
            return Err(Error::Parse(format!(
                "permutation must be 4 letters from PQRS, got {text:?}"
            )));
        }
        let mut map = [usize::MAX; 4];
        for (slot, c) in chars.iter().enumerate() {
            match VERTEX_NAMES.iter().position(|n| n == c) {
                Some(v) if !map.contains(&v) => map[slot] = v,
                _ => {
                    return Err(Error::Parse(format!(
                        "permutation must use each of P,Q,R,S once, got {text:?}"
                    )))
                }
            }
        }
        Ok(VertexPerm { map })
    }
}

impl fmt::Display for VertexPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.map {
            write!(f, "{}", VERTEX_NAMES[v])?;
        }
        Ok(())
    }
}
