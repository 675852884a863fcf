//! Unit-distance graphs in the plane: exact geometry, extremal witnesses,
//! (1,d)-graph families, colorings, and monochromaticity bounds.

pub mod bounds;
pub mod coloring;
pub mod embeddings;
pub mod geometry;
pub mod graphs;
pub mod symbolic;
