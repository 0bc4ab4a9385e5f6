//! Exact zero forcing numbers, brushing numbers and line graphs of small
//! graphs, plus a certified transfer of a zero forcing process on the line
//! graph L(G) into
//!
//! * an acyclic orientation of G with Z(L(G)) covering directed paths, and
//! * a zero forcing set of G of size at most Z(L(G)).
//!
//! Every witness produced by the library is checked before it is returned.
//! See the `examples/` directory for one runnable program per capability.

pub mod brushing;
pub mod budget;
pub mod corpus;
pub mod diagnostic;
pub mod error;
pub mod families;
pub mod flow;
pub mod format;
pub mod graph;
pub mod transfer;
pub mod witness;
pub mod zero_forcing;

pub use brushing::{brushing_number, min_path_edge_cover, verify_brush_witness, BrushWitness};
pub use budget::Budget;
pub use diagnostic::DiagnosticBundle;
pub use error::{Error, Result};
pub use format::{parse_edgelist, parse_graph6, write_graph6};
pub use graph::{line_graph, EdgeId, Graph, LineGraph, Orientation, VertexOrder};
pub use transfer::{transfer, transfer_with_process, TransferResult};
pub use zero_forcing::{
    closure, is_zero_forcing, record_process, zero_forcing_number, ForcingProcess,
};
