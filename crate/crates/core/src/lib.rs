//! Schubert structure constants on partial flag varieties, computed by
//! Schubert polynomials and certified by intersecting faces of the
//! Gelfand-Cetlin polytope.

pub mod certify;
pub mod coeffs;
pub mod error;
pub mod gc_polytope;
pub mod kogan;
pub mod ladder;
pub mod pluecker;
pub mod weyl;

pub use error::{Error, Result};
pub use gc_polytope::{Face, FaceUnion, Polytope, Vertex};
pub use ladder::{Edge, GcPattern, LadderDiagram, PositivePath};
pub use weyl::{ParabolicShape, Partition, Permutation};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
