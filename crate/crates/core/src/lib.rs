//! Color-line graphs: construction, recognition with root certificates, and
//! exhaustive reference searches for small inputs.
//!
//! The color-line graph `CL(H)` of an edge-colored graph `H` has a vertex per
//! edge of `H`, with two vertices adjacent when their edges meet or share a
//! color. With every edge colored differently it is the line graph `L(H)`.

pub mod cli;
pub mod colored;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod line;
pub mod oracle;
pub mod partition;
pub mod recognize;

pub use colored::{color_line_graph, line_graph, ColorLineResult, EdgeColoredGraph};
pub use error::{Error, Result};
pub use graph::{Graph, Matching, VertexSet};
pub use line::{recognize_line_graph, LineCertificate, LineRoot};
pub use recognize::{
    check_partition_characterization, cubic_proper_root, recognize_proper_2, recognize_proper_k, ColorLineRoot,
    ProperCertificate, Refusal, VertexCliquePartition,
};
