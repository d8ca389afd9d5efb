//! Short simple-cycle 2/3-separators for embedded maximal planar graphs.
//!
//! The pipeline runs in three linear-time phases:
//!
//! 1. [`fundamental`]: a BFS tree, a balanced cut of the interdigitating dual
//!    tree, and the resulting (possibly long) fundamental cycle `S`.
//! 2. [`layers`]: face levels relative to the apex of `S`, the boundary
//!    cycles of the `i`-close regions, and a light ladder of them.
//! 3. [`assembly`]: either `S`, a ladder rung, or a cycle stitched from two
//!    rungs and two segments of `S`.
//!
//! [`oracle`] re-checks every claim by brute force.
//!
//! ```
//! let g = psep::gen_apollonian(500, 7).unwrap();
//! let sep = psep::separate(&g).unwrap();
//! let rep = &sep.report;
//! assert!(3 * rep.faces_inside.max(rep.faces_outside) <= 2 * (2 * 500 - 4) + 2);
//! assert!(psep::oracle::verify_separator(&g, &sep.faces, rep).passed());
//! ```

pub mod assembly;
pub mod embedding;
pub mod error;
pub mod faces;
pub mod format;
pub mod fundamental;
pub mod generate;
pub mod layers;
pub mod oracle;
pub mod report;
pub mod tree_partition;

pub use assembly::{separate, vertices_inside, Branch, Separation, SeparatorReport};
pub use embedding::PlanarEmbedding;
pub use error::{Error, Result};
pub use faces::{enumerate_faces, FaceTable};
pub use fundamental::{BfsTree, Cycle, FundamentalCycle};
pub use generate::{gen_apollonian, gen_flipped, gen_pillow};
pub use tree_partition::{balanced_edge_cut, FreeTree, TreeCut};
