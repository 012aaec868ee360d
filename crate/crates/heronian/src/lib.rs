//! Exact-arithmetic embedding of Heronian simplices into integer lattices.
//!
//! A Heronian triangle (integer edges, rational area) always embeds
//! congruently in Z^2, uniquely modulo lattice isometry; a Heronian
//! tetrahedron (integer edges, rational faces and volume) always embeds in
//! Z^3, no longer uniquely. The constructions here drive both through GCDs:
//! a Gaussian-integer GCD supplies the planar rotation, a Lipschitz
//! quaternion GCD the spatial one. On top of the constructions sit
//! canonical reduction modulo lattice symmetry, an exhaustive search that
//! also finds the embeddings the GCD route cannot reach, and desk-scale
//! enumeration of the Heronian simplices themselves.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point in any result path.

pub mod canonical;
pub mod embed;
pub mod error;
pub mod exact;
pub mod gaussian;
pub mod io;
pub mod perm;
pub mod pose;
pub mod quat;
pub mod search;
pub mod simplex;

pub use error::{Error, Result};
pub use exact::{Int, Rat};
pub use perm::VertexPerm;
pub use quat::{Quat, Side};
pub use simplex::{EdgeHexad, EdgeTriple};
