//! Combinatorics of reduced alternating knot diagrams: parsing and planar-map
//! isomorphism, Haseman-circle decomposition into jewels and twisted bands,
//! structure trees, flypes, achirality decisions and their symmetry witnesses,
//! and checkerboard graphs.

pub mod achirality;
pub mod canon;
pub mod checkerboard;
pub mod decomposition;
pub mod diagram;
pub mod error;
pub mod flype;
pub mod frame;
pub mod haseman;
pub mod map;
pub mod tree;
