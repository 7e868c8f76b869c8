//! Approximate graphs by nested split graphs (threshold graphs) and compute
//! graph indices on them in time polynomial in the number of cells.
//!
//! * [`sequence`]: creation sequences and their compact run-length form.
//! * [`quotient`]: the cell quotient matrix and its main eigenvalues.
//! * [`indices::fast`]: closed-form indices from a compact sequence.
//! * [`indices::oracle`]: textbook index definitions on any simple graph.
//! * [`distance`]: scaled-walk and spectral graph distances.
//! * [`anneal`]: simulated annealing over the NSG state space.
//! * [`io`], [`report`]: edge lists and CSV output.
//!
//! ```
//! use nsgraph::{indices::fast, CompactCreationSequence};
//!
//! let a: CompactCreationSequence = "1,1,1,1,7,1".parse().unwrap();
//! assert_eq!(fast::edge_count(&a), 15);
//! assert_eq!(fast::wiener(&a), 117);
//! ```

pub mod anneal;
pub mod distance;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod indices;
pub mod io;
pub mod quotient;
pub mod report;
pub mod sequence;
pub mod spectrum;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use indices::GraphIndices;
pub use quotient::QuotientMatrix;
pub use sequence::{CompactCreationSequence, CreationSequence};
pub use spectrum::Spectrum;
